#pragma once

#include "canred/rootsys.hpp"

#include <string>
#include <vector>

namespace canred {

/// Standard parabolic of type t(P) = S: the simple roots whose negatives are
/// not in P. The Levi simple roots are the complement of S.
class Parabolic {
public:
    /// Throws InputError if S is empty or contains an index outside the rank.
    Parabolic(const RootSystem& rs, IndexSet s);

    const RootSystem& root_system() const { return *rs_; }
    const IndexSet& type() const { return s_; }
    const IndexSet& levi() const { return levi_; }

    bool in_type(int i) const;
    /// Sum of the S-coefficients of v.
    int level(const RootVec& v) const;
    /// True if v has only zero coefficients on S (v lies in the Levi span).
    bool in_levi_span(const RootVec& v) const;

private:
    const RootSystem* rs_;
    IndexSet s_;
    IndexSet levi_;
};

/// One Levi subquotient of g/p: all negative roots sharing the same
/// S-coefficients.
struct GradedPiece {
    std::vector<int> signature;  ///< S-coefficients (<= 0) shared by all weights, ordered as type()
    int level = 0;               ///< sum of |signature|
    std::vector<RootVec> weights;
};

/// Negative roots with some strictly negative S-coefficient, in positive-root order.
std::vector<RootVec> gp_weights(const Parabolic& p);

/// U_0 ⊃ U_1 ⊃ ...: U_i holds the positive roots of S-level > i. Only the
/// nonempty members are returned, so size() is the filtration depth.
std::vector<std::vector<RootVec>> nil_filtration(const Parabolic& p);

/// gp_weights grouped by signature; ordered by level, then lexicographically
/// by |signature|.
std::vector<GradedPiece> subquotient_partition(const Parabolic& p);

/// Positive roots alpha_i + (Levi combination). Throws InputError if i is not in S.
std::vector<RootVec> phi_alpha(const Parabolic& p, int i);

/// Connected components of S under Dynkin adjacency, sorted by least element.
std::vector<IndexSet> components(const Parabolic& p);

/// Components of t(P) inside the Dynkin scheme of a split group: each simple
/// root of S on its own. These index the minimal parabolics Q ⊋ P.
std::vector<IndexSet> scheme_components(const Parabolic& p);

/// Disjoint union of phi_alpha(p, i) over i in o.
std::vector<RootVec> w_po(const Parabolic& p, const IndexSet& o);

struct ClassicalPieceCheck {
    std::string label;  ///< e.g. "Hom(V1,V2)", "Hom(V1,M)", "Sym2(V1)", "Wedge2(V2)"
    std::vector<int> signature;
    int predicted = 0;
    int actual = 0;
    bool ok = false;
};

struct ClassicalReport {
    std::vector<int> flag_dims;   ///< dim E_1 < dim E_2 < ... of the isotropic flag
    std::vector<int> block_dims;  ///< d_a = dim E_a / E_{a-1}
    int middle = 0;               ///< dim E_k^perp / E_k
    std::vector<ClassicalPieceCheck> pieces;
    std::vector<std::string> failures;
    bool ok = false;
};

/// For types B, C, D: reads S as an isotropic flag and checks that every graded
/// piece of g/p has the dimension of the Hom / Sym^2 / wedge^2 block predicted
/// by the flag. Throws InputError for other types.
ClassicalReport classical_piece_dims(const Parabolic& p);

}  // namespace canred
