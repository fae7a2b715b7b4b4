#pragma once

#include "canred/fq_matrix.hpp"
#include "canred/rootsys.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace canred {

/// The representation V of G2 used throughout, with basis
///   (w2^vee, w1^vee, w1^2, w1 w2, w2^2, w1, w2)        for p != 2 (GL7),
///   (w2^vee, w1^vee, w1^2, w2^2, w1, w2)               for p == 2 (GL6),
/// i.e. V = W^vee + W^(2) + W, with the symmetric square replaced by the
/// Frobenius twist W^[2] in characteristic 2.
std::vector<std::string> v_basis(int p);

/// Weights of the basis vectors of V in simple-root coordinates, in basis order:
/// (2,1), (1,1), (1,0), 0, (-1,0), (-1,-1), (-2,-1), without 0 when p == 2.
std::vector<RootVec> v_weights(int p);

/// J A^{-T} J with J = [[0,1],[1,0]]: the dual representation in the basis
/// (w2^vee, w1^vee). Throws InputError for singular or non-2x2 A.
FqMatrix a_conj(const FqMatrix& a);

/// Characteristic 2: A^[2], the entrywise square (2x2).
/// Otherwise: the symmetric square on (w1^2, w1 w2, w2^2) (3x3).
FqMatrix square_rep(const FqMatrix& a);

/// diag(A^c, square_rep(A) det(A)^{-1}, A).
FqMatrix embed_A(const FqMatrix& a);

/// diag(det B^{-1}, B^c, 1, B, det B); the middle 1 is dropped in characteristic 2.
FqMatrix embed_B(const FqMatrix& b);

struct TorusReport {
    int p = 0;
    std::string field;  ///< field whose generator u realizes the torus elements diag(u, u^{-1})
    std::vector<std::string> basis;
    std::vector<RootVec> weights;                  ///< listed weights, basis order
    std::vector<std::pair<int, int>> exponents;    ///< measured (Z1, Z2) exponents per basis vector
    std::vector<std::pair<int, int>> pairings;     ///< (<lambda, a1^vee>, <lambda, a2^vee>) per listed weight
    int epsilon = 0;                               ///< global sign on the Z2 exponent, 0 if none fits
    bool zero_weight_present = false;
    bool weight_sum_zero = false;
    bool ok = false;
    std::string message;
};

/// Reads the characters of the diagonal images embed_A(diag(u,u^{-1})) and
/// embed_B(diag(v,v^{-1})) on each basis vector and matches them against the
/// listed weights up to one global sign on the second torus factor.
/// Throws InputError unless p is one of 2, 3, 5, 7.
TorusReport verify_torus_weights(int p);

struct HomomorphismReport {
    std::string field;
    int samples = 0;
    bool embed_A_ok = false;
    bool embed_B_ok = false;
    bool det_ok = false;
    bool ok = false;
    std::string witness;
};

/// embed_A(XY) = embed_A(X) embed_A(Y), likewise for embed_B, and det = 1 on
/// every image, for `samples` random pairs in GL2 of the field.
HomomorphismReport homomorphism_check(const FiniteField& f, int samples, std::uint64_t seed);

/// Uniformly random invertible 2x2 matrix.
FqMatrix random_gl2(const FiniteField& f, std::mt19937_64& rng);

struct AdjointBlock {
    std::string name;     ///< "Hom(W^vee,W^[2])", "Hom(W^vee,W)", "Hom(W^[2],W)"
    std::size_t row0 = 0, col0 = 0;
    std::string formula;
    bool formula_ok = false;
    std::vector<int> exponents;  ///< Z1 torus exponents on the four entries, row-major
    std::vector<RootVec> weights;  ///< root-coordinate weights of the four entries, row-major
};

struct AdjointBlockReport {
    std::vector<AdjointBlock> blocks;
    std::vector<std::string> fields;
    int samples = 0;  ///< conjugations checked per block
    bool exponents_ok = false;   ///< Hom(W^[2],W) block exponents form {3,1,-1,-3}
    std::size_t intertwiner_dim = 0;  ///< Hom_L between the two 4-dim blocks
    bool intertwiner_invertible = false;
    bool ok = false;
    std::string witness;
};

/// Characteristic 2 only. Conjugation by embed_A(A) on the three lower-left
/// 2x2 blocks of gl6 must follow the twisted formulas
///   Hom(W^vee, W^[2]):  X -> (A^[2] det^{-1}) X (A^c)^{-1}
///   Hom(W^vee, W):      X -> A X (A^c)^{-1}
///   Hom(W^[2], W):      X -> A X (A^[2] det^{-1})^{-1}
/// checked over F2, F4 and F16 with `samples` random A per field plus the
/// identity and [[1,1],[0,1]]. Also computes the space of L-maps between the
/// first and the last block over F16.
AdjointBlockReport adjoint_block_check(int samples, std::uint64_t seed);

/// M(a) = I + a E(4,2) + a E(5,3) + a^2 E(6,1) in 1-based 6x6 indices: the root
/// subgroup of weight -(2,1) in characteristic 2.
FqMatrix one_param_matrix(const FiniteField& f, Fq a);

struct OneParamReport {
    std::string field;
    std::size_t pairs = 0;
    bool additive = false;     ///< M(a) M(b) = M(a + b)
    bool equivariant = false;  ///< t M(a) t^{-1} = M(chi(t) a) with chi of weight -(2,1)
    bool unipotent = false;    ///< det M(a) = 1 and M(a) - I nilpotent
    bool ok = false;
    std::string witness;
};

/// Exhaustive over all pairs (a, b) in the field. Throws InputError if the
/// field is not of characteristic 2.
OneParamReport one_param_check(const FiniteField& f);

}  // namespace canred
