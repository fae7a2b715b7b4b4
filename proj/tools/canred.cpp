// canred: tables and verification reports for canonical reductions.
//
// Exit codes: 0 ok, 1 negative verdict, 2 usage or input error.

#include "canred/error.hpp"
#include "canred/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

using namespace canred;

namespace {

enum class Format { text, json, csv };

struct Options {
    Format format = Format::text;
    std::uint64_t seed = 0;
};

std::string compact(const RootVec& v)
{
    bool digits = true;
    for (std::size_t i = 0; i < v.size(); ++i)
        digits = digits && v[i] >= 0 && v[i] <= 9;
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!digits && i)
            out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string csv_root(const RootVec& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

std::string nodes_text(const IndexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

IndexSet parse_nodes(const std::string& text, const RootSystem& rs)
{
    std::vector<int> nodes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("malformed node list '" + text + "'");
        nodes.push_back(std::stoi(item));
    }
    IndexSet s = from_nodes(nodes);
    for (int i : s)
        if (i >= rs.rank())
            throw InputError("node " + std::to_string(i + 1) + " exceeds rank " + std::to_string(rs.rank()));
    return s;
}

void print_json(const Json& j)
{
    std::cout << j.dump(2) << "\n";
}

void print_verdicts_csv(const Json& verdicts)
{
    std::cout << "claim,status,holds\n";
    for (const auto& v : verdicts)
        std::cout << '"' << v["claim"].get<std::string>() << "\"," << v["status"].get<std::string>() << ","
                  << (v["holds"].get<bool>() ? "true" : "false") << "\n";
}

void print_verdicts_text(const Json& verdicts)
{
    for (const auto& v : verdicts) {
        std::cout << "  [" << (v["holds"].get<bool>() ? "ok" : "FAIL") << "] " << v["claim"].get<std::string>()
                  << "  (" << v["status"].get<std::string>();
        if (v.contains("citation"))
            std::cout << ": " << v["citation"].get<std::string>();
        std::cout << ")\n";
    }
}

// ---- roots ----

int cmd_roots(const Options& opt, const std::string& type)
{
    const RootSystem rs = RootSystem::build(LieType::parse(type));
    const auto& roots = rs.positive_roots();
    switch (opt.format) {
    case Format::json:
        print_json(to_json(rs));
        break;
    case Format::csv:
        std::cout << "index,height,root\n";
        for (std::size_t i = 0; i < roots.size(); ++i)
            std::cout << i + 1 << "," << roots[i].height() << "," << csv_root(roots[i]) << "\n";
        break;
    case Format::text:
        std::cout << rs.label() << ": " << roots.size() << " positive roots\n";
        for (const auto& r : roots)
            std::cout << compact(r) << "\n";
        break;
    }
    return 0;
}

// ---- heights ----

int cmd_heights(const Options& opt, const std::string& type)
{
    const RootSystem rs = RootSystem::build(LieType::parse(type));
    const auto rows = ht_table(rs);
    const auto gate = min_safe_char(rs);
    switch (opt.format) {
    case Format::json:
        print_json(to_json(rs, rows, gate));
        break;
    case Format::csv:
        std::cout << "k,omega_norm,argmax_root,ht\n";
        for (const auto& r : rows)
            std::cout << r.k + 1 << "," << to_string(r.omega_norm) << "," << csv_root(r.argmax_root) << ","
                      << to_string(r.ht) << "\n";
        break;
    case Format::text: {
        std::cout << rs.label() << "  maximal parabolics t(P) = {k}\n";
        std::cout << "k  |omega_k|  argmax root           Ht\n";
        for (const auto& r : rows) {
            std::string nrm = to_string(r.omega_norm);
            std::string root = compact(r.argmax_root);
            std::cout << r.k + 1 << "  " << nrm << std::string(nrm.size() < 9 ? 9 - nrm.size() : 1, ' ') << "  "
                      << root << std::string(root.size() < 20 ? 20 - root.size() : 1, ' ') << "  " << to_string(r.ht)
                      << "\n";
        }
        std::string col = "(";
        for (std::size_t i = 0; i < rows.size(); ++i)
            col += (i ? "," : "") + to_string(rows[i].ht);
        std::cout << "heights " << col << ")\n";
        std::cout << "Ht_max = " << to_string(gate.ht_max) << "; low height bound holds for char >= " << gate.bound
                  << "\n";
        break;
    }
    }
    return 0;
}

// ---- canonical ----

Enlargement parse_enlargement(const std::string& s)
{
    if (s == "single_root")
        return Enlargement::single_root;
    if (s == "component")
        return Enlargement::component;
    throw InputError("enlargement must be single_root or component");
}

int cmd_canonical(const Options& opt, const std::string& type, const std::string& delta_text,
                  const std::string& s_text, const std::string& mode_text)
{
    const RootSystem rs = RootSystem::build(LieType::parse(type));
    const SlopeDatum d = SlopeDatum::parse(delta_text);
    const Enlargement mode = parse_enlargement(mode_text);
    IndexSet s;
    if (!s_text.empty()) {
        s = parse_nodes(s_text, rs);
        if (static_cast<int>(d.delta.size()) != rs.rank())
            throw InputError("slope datum needs " + std::to_string(rs.rank()) + " entries");
    } else {
        auto derived = parabolic_of_slope(rs, d);
        if (!derived)
            throw InputError("zero slope datum: semistable, no destabilizing parabolic");
        s = *derived;
    }
    const Parabolic p(rs, s);
    const CanonicalVerdict v = check_canonical(p, d, mode);
    switch (opt.format) {
    case Format::json:
        print_json(to_json(p, d, v));
        break;
    case Format::csv:
        std::cout << "o,n\n";
        for (const auto& [o, n] : v.invariants)
            std::cout << '"' << nodes_text(o) << "\"," << to_string(n) << "\n";
        std::cout << "canonical," << (v.is_canonical ? "true" : "false") << "\n";
        break;
    case Format::text:
        std::cout << rs.label() << "  t(P) = " << nodes_text(s) << "  delta = (" << delta_text << ")\n";
        for (const auto& [o, n] : v.invariants)
            std::cout << "  n(P," << nodes_text(o) << ") = " << to_string(n) << "\n";
        for (const auto& pd : v.gp_degrees)
            std::cout << "  g/p piece level " << pd.level << ": degree " << to_string(pd.total) << "\n";
        for (const auto& msg : v.violations)
            std::cout << "  violation: " << msg << "\n";
        std::cout << (v.is_canonical ? "canonical" : "not canonical") << "\n";
        break;
    }
    return v.is_canonical ? 0 : 1;
}

// ---- chi-check ----

std::vector<IndexSet> all_nonempty_subsets(int rank)
{
    std::vector<IndexSet> out;
    for (unsigned mask = 1; mask < (1u << rank); ++mask) {
        IndexSet s;
        for (int i = 0; i < rank; ++i)
            if (mask & (1u << i))
                s.push_back(i);
        out.push_back(s);
    }
    return out;
}

int cmd_chi_check(const Options& opt, const std::string& type, const std::string& s_text, const std::string& mode_text)
{
    const RootSystem rs = RootSystem::build(LieType::parse(type));
    const Enlargement mode = parse_enlargement(mode_text);
    if (rs.rank() > 12)
        throw InputError("chi-check over all subsets is limited to rank <= 12");
    const std::vector<IndexSet> sets = s_text.empty() ? all_nonempty_subsets(rs.rank())
                                                      : std::vector<IndexSet>{parse_nodes(s_text, rs)};
    const auto samples = random_slope_data(rs.rank(), 10, opt.seed);
    Json cases = Json::array();
    bool all_ok = true;
    std::size_t count = 0;
    if (opt.format == Format::csv)
        std::cout << "S,o,c,projection_ok,c_prime,relation_ok\n";
    for (const auto& s : sets) {
        const Parabolic p(rs, s);
        for (const auto& o : invariant_index(p, mode)) {
            const auto c = chi_projection_check(p, o);
            const auto rel = n_deg_relation_check(p, o, samples);
            const bool ok = c.ok && rel.ok;
            all_ok = all_ok && ok;
            ++count;
            const std::string cp = rel.c_prime ? to_string(*rel.c_prime) : "-";
            if (opt.format == Format::json)
                cases.push_back(to_json(p, o, c, rel));
            else if (opt.format == Format::csv)
                std::cout << '"' << nodes_text(s) << "\",\"" << nodes_text(o) << "\"," << to_string(c.c) << ","
                          << (c.ok ? "true" : "false") << "," << cp << "," << (rel.ok ? "true" : "false") << "\n";
            else if (!ok || !s_text.empty())
                std::cout << "S=" << nodes_text(s) << " o=" << nodes_text(o) << ": c=" << to_string(c.c)
                          << " projection " << (c.ok ? "ok" : "FAIL") << ", c'=" << cp << " relation "
                          << (rel.ok ? "ok" : "FAIL") << (rel.witness.empty() ? "" : " (" + rel.witness + ")")
                          << "\n";
        }
    }
    if (opt.format == Format::json)
        print_json(Json{{"command", "chi-check"},
                        {"type", rs.label()},
                        {"enlargement", mode_text},
                        {"seed", opt.seed},
                        {"cases", cases},
                        {"ok", all_ok}});
    else if (opt.format == Format::text)
        std::cout << rs.label() << ": " << count << " (S,o) cases, " << (all_ok ? "all pass" : "FAILURES") << "\n";
    return all_ok ? 0 : 1;
}

// ---- partition ----

int cmd_partition(const Options& opt, const std::string& type, const std::string& s_text)
{
    const RootSystem rs = RootSystem::build(LieType::parse(type));
    const Parabolic p(rs, parse_nodes(s_text, rs));
    const auto pieces = subquotient_partition(p);
    switch (opt.format) {
    case Format::json: {
        Json j = to_json(p, pieces);
        Json heights = Json::array();
        for (const auto& piece : pieces) {
            const auto h = ht_piece(p, piece);
            heights.push_back({{"ht", json_rational(h.ht)}, {"argmax", json_root(h.argmax)}});
        }
        j["heights"] = heights;
        print_json(j);
        break;
    }
    case Format::csv:
        std::cout << "level,signature,dim,ht\n";
        for (const auto& piece : pieces) {
            std::string sig;
            for (std::size_t i = 0; i < piece.signature.size(); ++i)
                sig += (i ? " " : "") + std::to_string(piece.signature[i]);
            std::cout << piece.level << "," << sig << "," << piece.weights.size() << ","
                      << to_string(ht_piece(p, piece).ht) << "\n";
        }
        break;
    case Format::text:
        std::cout << rs.label() << "  t(P) = " << nodes_text(p.type()) << "\n";
        for (const auto& piece : pieces) {
            std::cout << "level " << piece.level << "  dim " << piece.weights.size() << "  Ht "
                      << to_string(ht_piece(p, piece).ht) << " :";
            for (const auto& w : piece.weights)
                std::cout << " -" << compact(-w);
            std::cout << "\n";
        }
        break;
    }
    return 0;
}

// ---- g2 ----

int cmd_g2_analyze(const Options& opt, int p, int samples)
{
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw InputError("--char must be one of 2, 3, 5, 7");
    if (samples < 1)
        throw InputError("--samples must be positive");
    const TorusReport torus = verify_torus_weights(p);
    std::vector<HomomorphismReport> homs;
    const std::vector<int> degrees = p == 2 ? std::vector<int>{1, 2, 4} : std::vector<int>{1, 2};
    for (int k : degrees)
        homs.push_back(homomorphism_check(FiniteField::get(p, k), samples, opt.seed));

    static const RootSystem g2 = RootSystem::build(LieType::make(Family::G, 2));
    Json pieces = Json::array();
    Json verdicts = Json::array();
    Json low = Json::array();
    auto add = [&](const std::string& claim, bool holds) {
        verdicts.push_back({{"claim", claim}, {"status", "verified-numeric"}, {"holds", holds}});
    };
    add("torus weights on V match the listed weights (epsilon = " + std::to_string(torus.epsilon) + ")", torus.ok);
    for (const auto& h : homs)
        add("embed_A, embed_B are homomorphisms into SL over " + h.field, h.ok);
    for (int node : {1, 2}) {
        const Parabolic par(g2, IndexSet{node - 1});
        const auto failures = low_height_failures(par, p);
        for (const auto& piece : subquotient_partition(par))
            pieces.push_back({{"S", json_nodes(par.type())},
                              {"level", piece.level},
                              {"dim", piece.weights.size()},
                              {"ht", json_rational(ht_piece(par, piece).ht)}});
        low.push_back({{"S", json_nodes(par.type())}, {"p", p}, {"pieces_failing", failures.size()}});
    }
    Json j{{"command", "g2 analyze"}, {"p", p}, {"seed", opt.seed}, {"torus", to_json(torus)}};
    Json hj = Json::array();
    for (const auto& h : homs)
        hj.push_back(to_json(h));
    j["homomorphism"] = hj;
    bool ok = torus.ok;
    for (const auto& h : homs)
        ok = ok && h.ok;
    if (p == 2) {
        const AdjointBlockReport adj = adjoint_block_check(samples, opt.seed);
        const OneParamReport one = one_param_check(FiniteField::get(2, 2));
        j["adjoint_blocks"] = to_json(adj);
        j["one_param"] = to_json(one);
        add("lower-left gl6 blocks follow the twisted formulas; Hom(W^[2],W) exponents {3,1,-1,-3}", adj.ok);
        add("Hom(W^vee,W^[2]) and Hom(W^[2],W) are isomorphic L1-modules", adj.intertwiner_dim == 1 &&
                                                                               adj.intertwiner_invertible);
        add("U_(-2,-1) matrix is a one-parameter subgroup over F4", one.ok);
        ok = ok && adj.ok && one.ok;
    }
    j["pieces"] = pieces;
    j["low_height"] = low;
    j["ok"] = ok;
    j["verdicts"] = verdicts;

    switch (opt.format) {
    case Format::json:
        print_json(j);
        break;
    case Format::csv:
        print_verdicts_csv(verdicts);
        break;
    case Format::text:
        std::cout << "G2 in characteristic " << p << " (dim V = " << torus.exponents.size() << ", checks on "
                  << torus.field << ")\n";
        for (std::size_t i = 0; i < torus.basis.size(); ++i)
            std::cout << "  " << torus.basis[i] << "  weight " << compact(torus.weights[i]).c_str() << "  exponents ("
                      << torus.exponents[i].first << "," << torus.exponents[i].second << ")\n";
        for (const auto& l : low)
            std::cout << "  note: t(P) = {" << l["S"][0].get<int>() << "}: "
                      << l["pieces_failing"].get<std::size_t>() << " g/p piece(s) with Ht >= " << p << "\n";
        print_verdicts_text(verdicts);
        std::cout << (ok ? "verified" : "FAILED") << "\n";
        break;
    }
    return ok ? 0 : 1;
}

int cmd_g2_ledger(const Options& opt, long genus, int p)
{
    const CounterexampleReport r = counterexample_report(genus, p);
    const Json j = to_json(r);
    switch (opt.format) {
    case Format::json:
        print_json(j);
        break;
    case Format::csv:
        print_verdicts_csv(j["verdicts"]);
        break;
    case Format::text:
        std::cout << "genus " << genus << ", characteristic " << p << "\n";
        for (const auto& e : r.ledger.entries)
            std::cout << "  " << e.name << ": rank " << e.bundle.rank << ", degree " << e.bundle.degree.format()
                      << " = " << to_string(e.bundle.degree.at(genus)) << "\n";
        std::cout << "  slope(T) = " << r.ledger.slope_of_twist.format() << " = " << to_string(*r.ledger.slope_value)
                  << "\n";
        for (const auto& step : r.chain)
            std::cout << "  - " << step << "\n";
        print_verdicts_text(j["verdicts"]);
        std::cout << r.status << (r.status == "VIOLATION" ? ": counterexample assembled" : "") << "\n";
        break;
    }
    return r.status == "VIOLATION" ? 1 : 0;
}

int cmd_g2_one_param(const Options& opt, const std::string& field)
{
    const OneParamReport r = one_param_check(FiniteField::parse(field));
    const Json j = to_json(r);
    switch (opt.format) {
    case Format::json:
        print_json(j);
        break;
    case Format::csv:
        print_verdicts_csv(j["verdicts"]);
        break;
    case Format::text:
        std::cout << "U_(-2,-1) over " << r.field << ": " << r.pairs << " pairs\n";
        print_verdicts_text(j["verdicts"]);
        if (!r.witness.empty())
            std::cout << "  witness: " << r.witness << "\n";
        std::cout << (r.ok ? "verified" : "FAILED") << "\n";
        break;
    }
    return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Canonical reductions: root data, heights, slope checks and the G2 case"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--seed", opt.seed, "PRNG seed for sampled checks");

    std::string type, delta, s_text, field, mode = "single_root";
    int p = 2, samples = 100;
    long genus = 0;

    auto* roots = app.add_subcommand("roots", "List the positive roots");
    roots->add_option("type", type, "Lie type, e.g. E8")->required();

    auto* heights = app.add_subcommand("heights", "Heights of g/p for the maximal parabolics");
    heights->add_option("type", type, "Lie type")->required();

    auto* canonical = app.add_subcommand("canonical", "Check whether slope data define a canonical reduction");
    canonical->add_option("--type", type, "Lie type")->required();
    canonical->add_option("--delta", delta, "Comma separated rationals <alpha_i, d>")->required();
    canonical->add_option("--S", s_text, "t(P) as 1-based nodes, e.g. 1,3 (default: from delta)");
    canonical->add_option("--enlargement", mode, "single_root or component");

    auto* chi = app.add_subcommand("chi-check", "Projection identity for chi and n(P,o) = -c' deg chi");
    chi->add_option("--type", type, "Lie type")->required();
    chi->add_option("--S", s_text, "Restrict to one t(P) (default: all nonempty subsets)");
    chi->add_flag("--all", "Check all nonempty subsets (the default)");
    chi->add_option("--enlargement", mode, "single_root or component");

    auto* partition = app.add_subcommand("partition", "Graded pieces of g/p");
    partition->add_option("--type", type, "Lie type")->required();
    partition->add_option("--S", s_text, "t(P) as 1-based nodes")->required();

    auto* g2 = app.add_subcommand("g2", "The G2 matrix model and the characteristic 2 ledger");
    g2->require_subcommand(1);
    auto* analyze = g2->add_subcommand("analyze", "Torus weights, homomorphism and block checks");
    analyze->add_option("--char", p, "Characteristic 2, 3, 5 or 7");
    analyze->add_option("--samples", samples, "Random samples per field");
    auto* ledger = g2->add_subcommand("ledger", "Degree ledger and counterexample chain");
    ledger->add_option("--genus", genus, "Genus g > 1")->required();
    ledger->add_option("--char", p, "Characteristic used for the low height test");
    auto* one = g2->add_subcommand("one-param", "U_(-2,-1) one-parameter subgroup check");
    one->add_option("--field", field, "Characteristic 2 field, e.g. F4")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*roots)
            return cmd_roots(opt, type);
        if (*heights)
            return cmd_heights(opt, type);
        if (*canonical)
            return cmd_canonical(opt, type, delta, s_text, mode);
        if (*chi)
            return cmd_chi_check(opt, type, s_text, mode);
        if (*partition)
            return cmd_partition(opt, type, s_text);
        if (*analyze)
            return cmd_g2_analyze(opt, p, samples);
        if (*ledger)
            return cmd_g2_ledger(opt, genus, p);
        if (*one)
            return cmd_g2_one_param(opt, field);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
