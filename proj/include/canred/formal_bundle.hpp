#pragma once

#include "canred/height.hpp"
#include "canred/rational.hpp"
#include "canred/slopecalc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace canred {

/// a g + b, a polynomial in the genus symbol g.
struct GenusPoly {
    Rational a;
    Rational b;

    Rational at(long g) const { return a * g + b; }
    GenusPoly operator+(const GenusPoly& o) const { return {a + o.a, b + o.b}; }
    GenusPoly operator-(const GenusPoly& o) const { return {a - o.a, b - o.b}; }
    GenusPoly operator-() const { return {-a, -b}; }
    GenusPoly operator*(const Rational& s) const { return {a * s, b * s}; }
    bool operator==(const GenusPoly& o) const { return a == o.a && b == o.b; }
    /// "1-g", "2g-2", "-1/2g+1/2", "0".
    std::string format() const;
};

/// A vector bundle on a curve of genus g, known only through rank and degree.
struct FormalBundle {
    int rank = 1;
    GenusPoly degree;
    std::string label;

    GenusPoly slope() const { return degree * Rational(1, rank); }
    /// Riemann-Roch: deg + rank (1 - g).
    GenusPoly euler_characteristic() const;
};

FormalBundle line_bundle(GenusPoly degree, std::string label);
FormalBundle trivial_bundle(int rank = 1);
/// Omega_C, of degree 2g - 2.
FormalBundle canonical_bundle();

FormalBundle dual(const FormalBundle& f);
FormalBundle tensor(const FormalBundle& f, const FormalBundle& g);
FormalBundle det_bundle(const FormalBundle& f);
/// Frobenius pullback: same rank, degree times p.
FormalBundle frob_pull(const FormalBundle& f, int p);
/// Frobenius pushforward of a line bundle: rank p and the same Euler
/// characteristic, so degree deg + (p - 1)(g - 1). Throws InputError on rank > 1.
FormalBundle frob_push_line(const FormalBundle& l, int p);
/// F / S for a subbundle S: ranks and degrees subtract.
FormalBundle quotient(const FormalBundle& f, const FormalBundle& sub);

struct LedgerEntry {
    std::string name;
    FormalBundle bundle;
};

struct LedgerVerdict {
    std::string claim;
    std::string status;  ///< "verified-numeric" or "assumed-from-paper"
    std::string citation;
    bool holds = false;  ///< for verified claims: the computation's outcome; for assumed claims: true
};

struct LedgerReport {
    std::optional<long> genus;
    std::vector<LedgerEntry> entries;
    GenusPoly slope_of_twist;  ///< slope of T = F^*(E)^vee (x) det(E) (x) E
    std::optional<Rational> slope_value;
    std::vector<LedgerVerdict> verdicts;
    bool counterexample = false;  ///< all verified claims hold (requires a genus > 1)

    const FormalBundle& entry(const std::string& name) const;
};

/// Degree bookkeeping for E = F_*(Omega^{-1}) in characteristic 2, symbolic in g,
/// optionally evaluated at a given genus.
LedgerReport instabil_ledger(std::optional<long> genus = std::nullopt);

struct CounterexampleReport {
    long genus = 0;
    int p = 2;
    LedgerReport ledger;
    SlopeDatum delta;
    IndexSet type;  ///< t(P) of the reduction, 0-based
    CanonicalVerdict verdict;
    /// (level, degree of the piece bundle from slope data, degree from the ledger)
    struct PieceMatch {
        int level = 0;
        Rational from_slope;
        Rational from_ledger;
        bool ok = false;
    };
    std::vector<PieceMatch> pieces;
    bool degrees_match = false;
    std::vector<GradedPiece> height_failures;
    bool section_exists = false;  ///< H^0 of the level-1 piece bundle, imported
    std::string status;           ///< "VIOLATION" or "NO_VIOLATION_CLAIMED"
    std::vector<std::string> chain;
};

/// Assembles the G2 counterexample chain for the parabolic P1 (t(P) = {2}).
/// Throws InputError if g <= 1 or p is not a prime.
CounterexampleReport counterexample_report(long genus, int p = 2);

}  // namespace canred
