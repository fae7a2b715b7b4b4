#pragma once

#include "canred/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace canred {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie type in Bourbaki numbering. Construct through make() or parse(),
/// both of which reject ranks outside the valid range for the family.
struct LieType {
    Family family = Family::A;
    int rank = 1;

    static LieType make(Family family, int rank);
    static LieType parse(std::string_view text);  ///< "E8", "b3", ...

    std::string name() const;
    /// Dimension of the Lie algebra of this type.
    int dimension() const;

    bool operator==(const LieType&) const = default;
};

/// Simple-root indices, 0-based and sorted. Bourbaki node k is index k-1.
using IndexSet = std::vector<int>;

/// Integer coordinates of a root in the simple-root basis.
class RootVec {
public:
    RootVec() = default;
    explicit RootVec(std::vector<int> coords) : k_(std::move(coords)) {}
    RootVec(std::initializer_list<int> coords) : k_(coords) {}

    static RootVec simple(std::size_t rank, int i);

    std::size_t size() const { return k_.size(); }
    int operator[](std::size_t i) const { return k_[i]; }
    int& operator[](std::size_t i) { return k_[i]; }
    const std::vector<int>& coords() const { return k_; }

    int height() const;
    bool is_zero() const;
    bool is_positive() const;  ///< nonzero with all coefficients >= 0
    bool is_negative() const;

    RootVec operator-() const;
    RootVec operator+(const RootVec& o) const;
    RootVec operator-(const RootVec& o) const;
    RootVec operator*(int s) const;

    auto operator<=>(const RootVec&) const = default;

private:
    std::vector<int> k_;
};

/// Rational coordinates of a weight in the simple-root basis.
class WeightVec {
public:
    WeightVec() = default;
    explicit WeightVec(std::size_t rank) : r_(rank, Rational(0)) {}
    explicit WeightVec(std::vector<Rational> coords) : r_(std::move(coords)) {}
    WeightVec(const RootVec& root);  // NOLINT(google-explicit-constructor): roots are weights

    std::size_t size() const { return r_.size(); }
    const Rational& operator[](std::size_t i) const { return r_[i]; }
    Rational& operator[](std::size_t i) { return r_[i]; }
    const std::vector<Rational>& coords() const { return r_; }

    Rational coordinate_sum() const;

    WeightVec operator+(const WeightVec& o) const;
    WeightVec operator-(const WeightVec& o) const;
    WeightVec operator-() const;
    WeightVec operator*(const Rational& s) const;

    bool operator==(const WeightVec&) const = default;

private:
    std::vector<Rational> r_;
};

using IntMatrix = std::vector<std::vector<int>>;

/// A reduced root system given by a Cartan matrix C with C[i][j] = <alpha_j, alpha_i^vee>.
///
/// Immutable once built. Positive roots are ordered by height, then
/// lexicographically on their coordinates; the last one is the highest root
/// when the system is irreducible.
class RootSystem {
public:
    /// Standard construction in Bourbaki numbering.
    static RootSystem build(const LieType& type);

    /// Root system of an arbitrary (possibly reducible) Cartan matrix. Used for
    /// Levi subsystems. Throws InputError if the matrix is not a valid
    /// symmetrizable finite-type Cartan matrix.
    static RootSystem from_cartan(IntMatrix cartan, std::string label);

    const std::string& label() const { return label_; }
    const std::optional<LieType>& type() const { return type_; }
    int rank() const { return static_cast<int>(cartan_.size()); }
    const IntMatrix& cartan() const { return cartan_; }
    const std::vector<RootVec>& positive_roots() const { return positive_; }
    /// Row i holds the coefficients of omega_i in the simple-root basis.
    const RationalMatrix& fundamental_weights() const { return fwm_; }
    /// d_i = (alpha_i, alpha_i) / 2, short roots normalized to (alpha, alpha) = 2.
    const std::vector<Rational>& symmetrizer() const { return sym_; }

    const RootVec& highest_root() const { return positive_.back(); }
    WeightVec fundamental_weight(int i) const;

    /// <lambda, alpha_i^vee>.
    Rational pairing(const WeightVec& lambda, int i) const;
    int pairing(const RootVec& alpha, int i) const;
    /// <lambda, alpha^vee> for an arbitrary root alpha.
    Rational coroot_pairing(const WeightVec& lambda, const RootVec& alpha) const;
    /// W-invariant form with (alpha_i, alpha_j) = d_i C[i][j].
    Rational inner_product(const WeightVec& lambda, const WeightVec& mu) const;

    bool is_dominant(const WeightVec& lambda, const IndexSet& levi) const;

    bool is_root(const RootVec& v) const;
    bool is_positive_root(const RootVec& v) const;
    bool adjacent(int i, int j) const { return i != j && cartan_[i][j] != 0; }

private:
    RootSystem() = default;
    void finish();

    std::string label_;
    std::optional<LieType> type_;
    IntMatrix cartan_;
    std::vector<RootVec> positive_;
    std::map<RootVec, std::size_t> index_;
    RationalMatrix fwm_;
    std::vector<Rational> sym_;
};

/// Cartan matrix of a simple type in Bourbaki numbering.
IntMatrix cartan_matrix(const LieType& type);

/// The root system spanned by the simple roots in `levi`, rebuilt standalone
/// from the principal Cartan submatrix. Index j of the result corresponds to
/// levi[j] of the ambient system.
RootSystem levi_subsystem(const RootSystem& rs, const IndexSet& levi);

/// All simple indices not in `s`.
IndexSet complement(const RootSystem& rs, const IndexSet& s);

/// Converts 1-based Bourbaki node labels to an IndexSet.
IndexSet from_nodes(std::vector<int> nodes);

}  // namespace canred
