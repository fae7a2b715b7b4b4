#pragma once

#include "canred/parabolic.hpp"

#include <vector>

namespace canred {

/// n_L(lambda) = sum over positive roots alpha of the Levi of <lambda, alpha^vee>,
/// by direct summation.
Rational n_levi(const RootSystem& rs, const IndexSet& levi, const WeightVec& lambda);

/// |omega_k| = (sum_j N[k][j]) / N[k][k].
Rational omega_norm(const RootSystem& rs, int k);

/// 2 (sum r_i - r_k |omega_k|); equals n_levi on the Levi of the maximal parabolic t(P) = {k}.
Rational n_maximal_shortcut(const RootSystem& rs, int k, const WeightVec& lambda);

struct PieceHeight {
    Rational ht;
    RootVec argmax;  ///< positive root (negated g/p weight) attaining ht
};

/// Ht_L of a g/p piece: the maximum of n_levi over Levi-dominant negated
/// weights, ties broken towards the lexicographically largest vector.
/// Throws std::logic_error if no weight of the piece is Levi-dominant.
PieceHeight ht_piece(const Parabolic& p, const GradedPiece& piece);

struct HeightRow {
    int k = 0;  ///< 0-based simple index, t(P) = {k}
    Rational omega_norm;
    RootVec argmax_root;
    Rational ht;
};

/// One row per simple index: the maximal piece height of g/p for t(P) = {k}.
std::vector<HeightRow> ht_table(const RootSystem& rs);

struct SafeCharacteristic {
    Rational ht_max;
    long bound = 0;  ///< least prime strictly above ht_max
};

SafeCharacteristic min_safe_char(const RootSystem& rs);

/// Pieces of subquotient_partition(p) whose height is >= prime p, i.e. where
/// the low-height hypothesis is not available.
std::vector<GradedPiece> low_height_failures(const Parabolic& p, long prime);

bool is_prime(long n);

}  // namespace canred
