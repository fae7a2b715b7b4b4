#include "canred/formal_bundle.hpp"

#include "canred/error.hpp"

#include <stdexcept>

namespace canred {

namespace {

std::string coeff_term(const Rational& a)
{
    if (a == 1)
        return "g";
    if (a == -1)
        return "-g";
    return to_string(a) + "g";
}

}  // namespace

std::string GenusPoly::format() const
{
    if (a == 0)
        return to_string(b);
    if (b == 0)
        return coeff_term(a);
    // constant first when the genus term is negative: "1-g" rather than "-g+1"
    if (a < 0)
        return to_string(b) + coeff_term(a);
    return coeff_term(a) + (b > 0 ? "+" : "") + to_string(b);
}

GenusPoly FormalBundle::euler_characteristic() const
{
    return degree + GenusPoly{Rational(-rank), Rational(rank)};
}

FormalBundle line_bundle(GenusPoly degree, std::string label)
{
    return FormalBundle{1, std::move(degree), std::move(label)};
}

FormalBundle trivial_bundle(int rank)
{
    return FormalBundle{rank, GenusPoly{0, 0}, rank == 1 ? "O_C" : "O_C^" + std::to_string(rank)};
}

FormalBundle canonical_bundle()
{
    return line_bundle(GenusPoly{2, -2}, "Omega_C");
}

FormalBundle dual(const FormalBundle& f)
{
    return FormalBundle{f.rank, -f.degree, "(" + f.label + ")^vee"};
}

FormalBundle tensor(const FormalBundle& f, const FormalBundle& g)
{
    return FormalBundle{f.rank * g.rank, f.degree * Rational(g.rank) + g.degree * Rational(f.rank),
                        f.label + " (x) " + g.label};
}

FormalBundle det_bundle(const FormalBundle& f)
{
    return FormalBundle{1, f.degree, "det(" + f.label + ")"};
}

FormalBundle frob_pull(const FormalBundle& f, int p)
{
    return FormalBundle{f.rank, f.degree * Rational(p), "F^*(" + f.label + ")"};
}

FormalBundle frob_push_line(const FormalBundle& l, int p)
{
    if (l.rank != 1)
        throw InputError("Frobenius pushforward is only tracked for line bundles; got rank " +
                         std::to_string(l.rank));
    return FormalBundle{p, l.degree + GenusPoly{Rational(p - 1), Rational(1 - p)}, "F_*(" + l.label + ")"};
}

FormalBundle quotient(const FormalBundle& f, const FormalBundle& sub)
{
    if (sub.rank >= f.rank)
        throw InputError("subbundle rank must be smaller than the bundle rank");
    return FormalBundle{f.rank - sub.rank, f.degree - sub.degree, f.label + "/" + sub.label};
}

const FormalBundle& LedgerReport::entry(const std::string& name) const
{
    for (const auto& e : entries)
        if (e.name == name)
            return e.bundle;
    throw std::out_of_range("no ledger entry " + name);
}

LedgerReport instabil_ledger(std::optional<long> genus)
{
    LedgerReport r;
    r.genus = genus;
    const int p = 2;

    const FormalBundle omega = canonical_bundle();
    const FormalBundle omega_inv = dual(omega);
    const FormalBundle o = trivial_bundle();
    const FormalBundle push_o = frob_push_line(o, p);
    const FormalBundle b = quotient(push_o, o);
    const FormalBundle pull_b = frob_pull(b, p);
    const FormalBundle e = frob_push_line(omega_inv, p);
    const FormalBundle det_e = det_bundle(e);
    const FormalBundle b_inv = dual(b);
    const FormalBundle pull_e = frob_pull(e, p);
    const FormalBundle pull_e_dual = dual(pull_e);
    const FormalBundle t = tensor(tensor(pull_e_dual, det_e), e);

    r.entries = {{"Omega_C", omega}, {"Omega_C^-1", omega_inv}, {"F_*O_C", push_o}, {"B", b},
                 {"F^*B", pull_b},   {"E", e},                 {"det E", det_e},   {"B^-1", b_inv},
                 {"F^*E", pull_e},   {"(F^*E)^vee", pull_e_dual}, {"T", t}};
    r.slope_of_twist = t.slope();
    if (genus)
        r.slope_value = r.slope_of_twist.at(*genus);

    auto verified = [&](std::string claim, bool holds) {
        r.verdicts.push_back({std::move(claim), "verified-numeric", "", holds});
    };
    verified("F^*B = B^2 = Omega_C in degree", pull_b.degree == tensor(b, b).degree && pull_b.degree == omega.degree);
    verified("det E = B^-1, so deg E = 1-g", det_e.degree == b_inv.degree && e.degree == GenusPoly{-1, 1});
    verified("chi(F_*L) = chi(L) for L = O_C and L = Omega_C^-1",
             push_o.euler_characteristic() == o.euler_characteristic() &&
                 e.euler_characteristic() == omega_inv.euler_characteristic());
    verified("0 -> B^-1 -> E -> O_C -> 0 and 0 -> O_C -> F^*E -> Omega_C^-1 -> 0 add up in rank and degree",
             e.rank == b_inv.rank + o.rank && e.degree == b_inv.degree + o.degree &&
                 pull_e.rank == o.rank + omega_inv.rank && pull_e.degree == o.degree + omega_inv.degree);
    verified("T = F^*(E)^vee (x) det(E) (x) E has rank 4 and degree 2-2g",
             t.rank == 4 && t.degree == GenusPoly{-2, 2});
    bool negative = false;
    if (genus)
        negative = *r.slope_value < 0;
    else  // decreasing in g and zero at g = 1
        negative = r.slope_of_twist.a < 0 && r.slope_of_twist.at(1) <= 0;
    verified(genus ? "slope(T) < 0 at g = " + std::to_string(*genus) : "slope(T) < 0 for all g > 1", negative);

    r.verdicts.push_back({"E = F_*(Omega_C^-1) is stable", "assumed-from-paper",
                          "Frobenius pushforward preserves stability (Lange-Pauly; Sun)", true});
    r.verdicts.push_back({"H^0(C, T) != 0", "assumed-from-paper",
                          "section F^*E -> Omega_C^-1 = B^-1 (x) det E -> E (x) det E built from the two "
                          "adjunction extensions",
                          true});

    r.counterexample = true;
    for (const auto& v : r.verdicts)
        r.counterexample = r.counterexample && v.holds;
    if (genus && *genus <= 1)
        r.counterexample = false;
    return r;
}

CounterexampleReport counterexample_report(long genus, int p)
{
    if (genus <= 1)
        throw InputError("the counterexample needs genus g > 1; got " + std::to_string(genus));
    if (!is_prime(p))
        throw InputError(std::to_string(p) + " is not a prime");

    CounterexampleReport r;
    r.genus = genus;
    r.p = p;
    r.ledger = instabil_ledger(genus);

    static const RootSystem rs = RootSystem::build(LieType::make(Family::G, 2));
    const Parabolic par(rs, IndexSet{1});
    r.type = par.type();
    r.delta.delta = {Rational(0), Rational(genus - 1, 2)};
    r.delta.delta[1].canonicalize();
    r.verdict = check_canonical(par, r.delta);

    const Rational t_deg = r.ledger.entry("T").degree.at(genus);
    const Rational det_deg = r.ledger.entry("det E").degree.at(genus);
    r.degrees_match = true;
    for (const auto& pd : r.verdict.gp_degrees) {
        CounterexampleReport::PieceMatch m;
        m.level = pd.level;
        m.from_slope = pd.total;
        m.from_ledger = pd.level == 1 ? t_deg : det_deg;
        m.ok = m.from_slope == m.from_ledger;
        r.degrees_match = r.degrees_match && m.ok;
        r.pieces.push_back(std::move(m));
    }
    r.height_failures = low_height_failures(par, p);

    const bool ledger_ok = r.ledger.counterexample;
    r.section_exists = p == 2 && ledger_ok;
    const bool violation =
        p == 2 && r.verdict.is_canonical && r.degrees_match && !r.height_failures.empty() && r.section_exists;
    r.status = violation ? "VIOLATION" : "NO_VIOLATION_CLAIMED";

    r.chain.push_back("L1 = GL2-bundle from E of rank 2, degree " + to_string(r.ledger.entry("E").degree.at(genus)));
    r.chain.push_back("slope datum delta = (0, " + to_string(r.delta.delta[1]) + ") on P1, t(P) = {2}");
    r.chain.push_back(std::string("piece degrees ") + (r.degrees_match ? "match" : "do not match") +
                      " the ledger (det E and T)");
    r.chain.push_back(std::string("check_canonical: ") + (r.verdict.is_canonical ? "canonical" : "not canonical"));
    r.chain.push_back("low height fails for p = " + std::to_string(p) + " on " +
                      std::to_string(r.height_failures.size()) + " piece(s)");
    if (p == 2)
        r.chain.push_back(std::string("H^0(T) != 0 (assumed): ") +
                          (r.section_exists ? "g/p bundle of the canonical reduction has a section"
                                            : "ledger checks failed"));
    else
        r.chain.push_back("no section witness outside characteristic 2");
    r.chain.push_back(violation ? "counterexample assembled" : "no violation claimed");
    return r;
}

}  // namespace canred
