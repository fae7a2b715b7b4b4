#pragma once

#include "canred/parabolic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace canred {

/// Numerical shadow of a reduction: delta[i] = <alpha_i, d>, the degree of the
/// line bundle of weight alpha_i. Degrees extend linearly to all weights.
struct SlopeDatum {
    std::vector<Rational> delta;

    /// Parses a comma separated list of rationals ("0,1", "1/2,-3").
    static SlopeDatum parse(std::string_view text);
};

Rational degree(const SlopeDatum& d, const WeightVec& lambda);

/// S = {i : delta[i] > 0}. Returns nullopt for the zero datum (semistable,
/// nothing destabilizes). Throws InputError naming the first index with
/// delta[i] < 0, or on a rank mismatch.
std::optional<IndexSet> parabolic_of_slope(const RootSystem& rs, const SlopeDatum& d);

/// Which subsets o ⊂ t(P) index the numerical invariants.
enum class Enlargement {
    single_root,  ///< each simple root of S alone (components of the Dynkin scheme of a split group)
    component,    ///< Dynkin-adjacency components of S
};

std::vector<IndexSet> invariant_index(const Parabolic& p, Enlargement mode);

using InvariantMap = std::vector<std::pair<IndexSet, Rational>>;

/// n(P, o) = deg W(P, o) for every o of the chosen enlargement mode.
InvariantMap numerical_invariants(const Parabolic& p, const SlopeDatum& d,
                                  Enlargement mode = Enlargement::single_root);

struct PieceDegrees {
    std::vector<int> signature;
    int level = 0;
    std::vector<Rational> weight_degrees;
    Rational total;
};

struct CanonicalVerdict {
    bool is_canonical = false;
    bool type_positive = false;    ///< delta[i] > 0 on S
    bool levi_semistable = false;  ///< delta[j] = 0 off S
    bool invariants_positive = false;
    bool gp_negative = false;  ///< every g/p weight has negative degree
    InvariantMap invariants;
    std::vector<PieceDegrees> gp_degrees;
    std::vector<std::string> violations;
};

CanonicalVerdict check_canonical(const Parabolic& p, const SlopeDatum& d,
                                 Enlargement mode = Enlargement::single_root);

/// chi = sum of the roots of Lie(Q_o)/Lie(P), where t(Q_o) = S \ o.
/// o must be a single simple root of S or a Dynkin component of S.
WeightVec chi_character(const Parabolic& p, const IndexSet& o);

struct ProjectionCheck {
    WeightVec chi;
    WeightVec projection;  ///< of sum_{i in o} alpha_i onto the orthogonal complement of the Levi roots
    Rational c;            ///< chi = -c * projection
    WeightVec residual;    ///< chi + c * projection
    bool levi_orthogonal = false;
    bool ok = false;
};

ProjectionCheck chi_projection_check(const Parabolic& p, const IndexSet& o);

struct DegreeRelation {
    bool ok = false;
    std::optional<Rational> c_prime;  ///< n(P,o) = -c' deg(chi)
    int used = 0;
    int skipped = 0;  ///< samples where both sides vanish
    std::string witness;
};

/// `count` slope data with entries num/den, num in [-9, 9], den in [1, 6],
/// drawn from mt19937_64(seed).
std::vector<SlopeDatum> random_slope_data(int rank, int count, std::uint64_t seed);

/// Checks that n(P, o) = -c' deg(chi) for one c' > 0 across all samples.
DegreeRelation n_deg_relation_check(const Parabolic& p, const IndexSet& o,
                                    const std::vector<SlopeDatum>& samples);

}  // namespace canred
