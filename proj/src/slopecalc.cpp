#include "canred/slopecalc.hpp"

#include "canred/error.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace canred {

namespace {

std::string node_list(const IndexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

}  // namespace

SlopeDatum SlopeDatum::parse(std::string_view text)
{
    SlopeDatum d;
    std::string s(text);
    if (s.empty())
        throw InputError("empty slope datum");
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        d.delta.push_back(parse_rational(item));
    if (s.back() == ',')
        throw InputError("trailing comma in slope datum");
    return d;
}

Rational degree(const SlopeDatum& d, const WeightVec& lambda)
{
    if (d.delta.size() != lambda.size())
        throw InputError("slope datum has length " + std::to_string(d.delta.size()) + ", weight has rank " +
                         std::to_string(lambda.size()));
    Rational s(0);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        s += lambda[i] * d.delta[i];
    return s;
}

std::optional<IndexSet> parabolic_of_slope(const RootSystem& rs, const SlopeDatum& d)
{
    if (static_cast<int>(d.delta.size()) != rs.rank())
        throw InputError("slope datum needs " + std::to_string(rs.rank()) + " entries");
    IndexSet s;
    for (int i = 0; i < rs.rank(); ++i) {
        if (d.delta[i] < 0)
            throw InputError("slope datum is not dominant at simple root " + std::to_string(i + 1));
        if (d.delta[i] > 0)
            s.push_back(i);
    }
    if (s.empty())
        return std::nullopt;
    return s;
}

std::vector<IndexSet> invariant_index(const Parabolic& p, Enlargement mode)
{
    return mode == Enlargement::single_root ? scheme_components(p) : components(p);
}

InvariantMap numerical_invariants(const Parabolic& p, const SlopeDatum& d, Enlargement mode)
{
    InvariantMap out;
    for (const auto& o : invariant_index(p, mode)) {
        Rational n(0);
        for (const auto& alpha : w_po(p, o))
            n += degree(d, alpha);
        out.emplace_back(o, n);
    }
    return out;
}

CanonicalVerdict check_canonical(const Parabolic& p, const SlopeDatum& d, Enlargement mode)
{
    const auto& rs = p.root_system();
    if (static_cast<int>(d.delta.size()) != rs.rank())
        throw InputError("slope datum needs " + std::to_string(rs.rank()) + " entries");
    CanonicalVerdict v;
    v.type_positive = true;
    for (int i : p.type())
        if (d.delta[i] <= 0) {
            v.type_positive = false;
            v.violations.push_back("delta(" + std::to_string(i + 1) + ") = " + to_string(d.delta[i]) +
                                   " is not > 0 on t(P)");
        }
    v.levi_semistable = true;
    for (int j : p.levi())
        if (d.delta[j] != 0) {
            v.levi_semistable = false;
            v.violations.push_back("delta(" + std::to_string(j + 1) + ") = " + to_string(d.delta[j]) +
                                   " is nonzero on the Levi");
        }
    v.invariants = numerical_invariants(p, d, mode);
    v.invariants_positive = true;
    for (const auto& [o, n] : v.invariants)
        if (n <= 0) {
            v.invariants_positive = false;
            v.violations.push_back("n(P," + node_list(o) + ") = " + to_string(n) + " is not > 0");
        }
    v.gp_negative = true;
    for (const auto& piece : subquotient_partition(p)) {
        PieceDegrees pd;
        pd.signature = piece.signature;
        pd.level = piece.level;
        pd.total = 0;
        for (const auto& w : piece.weights) {
            Rational deg = degree(d, w);
            if (deg >= 0) {
                if (v.gp_negative)  // report the first offending weight only
                    v.violations.push_back("g/p weight of level " + std::to_string(piece.level) +
                                           " has degree " + to_string(deg) + " >= 0");
                v.gp_negative = false;
            }
            pd.total += deg;
            pd.weight_degrees.push_back(std::move(deg));
        }
        v.gp_degrees.push_back(std::move(pd));
    }
    v.is_canonical = v.type_positive && v.levi_semistable && v.invariants_positive && v.gp_negative;
    return v;
}

WeightVec chi_character(const Parabolic& p, const IndexSet& o)
{
    IndexSet sorted(o);
    std::sort(sorted.begin(), sorted.end());
    const auto comps = components(p);
    const bool is_single = sorted.size() == 1 && p.in_type(sorted.front());
    const bool is_component = std::find(comps.begin(), comps.end(), sorted) != comps.end();
    if (!is_single && !is_component)
        throw InputError(node_list(o) + " is neither a simple root of t(P) nor a component of t(P)");

    const auto& rs = p.root_system();
    WeightVec chi(static_cast<std::size_t>(rs.rank()));
    for (const auto& beta : rs.positive_roots()) {
        bool outside_o_vanishes = true;
        bool touches_o = false;
        for (int i : p.type()) {
            const bool in_o = std::binary_search(sorted.begin(), sorted.end(), i);
            if (in_o && beta[i] > 0)
                touches_o = true;
            if (!in_o && beta[i] != 0)
                outside_o_vanishes = false;
        }
        if (outside_o_vanishes && touches_o)
            chi = chi - WeightVec(beta);
    }
    return chi;
}

ProjectionCheck chi_projection_check(const Parabolic& p, const IndexSet& o)
{
    const auto& rs = p.root_system();
    const std::size_t n = static_cast<std::size_t>(rs.rank());
    ProjectionCheck out;
    out.chi = chi_character(p, o);

    WeightVec v(n);
    for (int i : o)
        v[i] += 1;
    out.projection = v;
    const IndexSet& levi = p.levi();
    if (!levi.empty()) {
        RationalMatrix gram(levi.size(), levi.size());
        std::vector<Rational> rhs(levi.size());
        for (std::size_t a = 0; a < levi.size(); ++a) {
            const WeightVec ea(RootVec::simple(n, levi[a]));
            rhs[a] = rs.inner_product(v, ea);
            for (std::size_t b = 0; b < levi.size(); ++b)
                gram(a, b) = rs.inner_product(ea, WeightVec(RootVec::simple(n, levi[b])));
        }
        const auto x = solve(gram, rhs);
        for (std::size_t a = 0; a < levi.size(); ++a)
            out.projection[levi[a]] -= x[a];
    }

    out.c = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (out.projection[i] != 0) {
            out.c = -out.chi[i] / out.projection[i];
            out.c.canonicalize();
            break;
        }
    out.residual = out.chi + out.projection * out.c;
    out.levi_orthogonal =
        std::all_of(levi.begin(), levi.end(), [&](int j) { return rs.pairing(out.chi, j) == 0; });
    const bool proportional = out.residual == WeightVec(n);
    out.ok = proportional && out.c > 0 && out.levi_orthogonal;
    return out;
}

std::vector<SlopeDatum> random_slope_data(int rank, int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    std::vector<SlopeDatum> out(static_cast<std::size_t>(count));
    for (auto& d : out)
        for (int i = 0; i < rank; ++i) {
            const int a = num(rng);
            d.delta.push_back(make_rational(a, den(rng)));
        }
    return out;
}

DegreeRelation n_deg_relation_check(const Parabolic& p, const IndexSet& o, const std::vector<SlopeDatum>& samples)
{
    DegreeRelation out;
    const WeightVec chi = chi_character(p, o);
    WeightVec wsum(static_cast<std::size_t>(p.root_system().rank()));
    for (const auto& alpha : w_po(p, o))
        wsum = wsum + WeightVec(alpha);

    out.ok = true;
    std::size_t first = 0;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const Rational n = degree(samples[s], wsum);
        const Rational dchi = degree(samples[s], chi);
        if (dchi == 0) {
            if (n != 0) {
                out.ok = false;
                out.witness = "sample " + std::to_string(s) + ": deg(chi) = 0 but n = " + to_string(n);
                return out;
            }
            ++out.skipped;
            continue;
        }
        Rational c = -n / dchi;
        c.canonicalize();
        ++out.used;
        if (!out.c_prime) {
            out.c_prime = c;
            first = s;
            if (c <= 0) {
                out.ok = false;
                out.witness = "sample " + std::to_string(s) + ": c' = " + to_string(c) + " is not > 0";
                return out;
            }
        } else if (*out.c_prime != c) {
            out.ok = false;
            out.witness = "samples " + std::to_string(first) + " and " + std::to_string(s) + ": c' = " + to_string(*out.c_prime) +
                          " vs " + to_string(c);
            return out;
        }
    }
    return out;
}

}  // namespace canred
