#include "canred/serialize.hpp"

namespace canred {

namespace {

Json verdict(const std::string& claim, bool holds)
{
    return Json{{"claim", claim}, {"status", "verified-numeric"}, {"holds", holds}};
}

Json pieces_json(const std::vector<GradedPiece>& pieces)
{
    Json out = Json::array();
    for (const auto& piece : pieces) {
        Json weights = Json::array();
        for (const auto& w : piece.weights)
            weights.push_back(json_root(w));
        out.push_back({{"signature", piece.signature}, {"level", piece.level}, {"weights", weights}});
    }
    return out;
}

}  // namespace

Json json_rational(const Rational& q)
{
    return to_string(q);
}

Json json_root(const RootVec& v)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(v[i]);
    return out;
}

Json json_weight(const WeightVec& v)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(json_rational(v[i]));
    return out;
}

Json json_nodes(const IndexSet& s)
{
    Json out = Json::array();
    for (int i : s)
        out.push_back(i + 1);
    return out;
}

Json to_json(const RootSystem& rs)
{
    Json cartan = Json::array();
    for (const auto& row : rs.cartan())
        cartan.push_back(row);
    Json roots = Json::array();
    for (const auto& r : rs.positive_roots())
        roots.push_back(json_root(r));
    Json fw = Json::array();
    const auto& n = rs.fundamental_weights();
    for (std::size_t i = 0; i < n.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n.cols(); ++j)
            row.push_back(json_rational(n(i, j)));
        fw.push_back(row);
    }
    return Json{{"command", "roots"},
                {"type", rs.label()},
                {"rank", rs.rank()},
                {"cartan", cartan},
                {"count", rs.positive_roots().size()},
                {"positive_roots", roots},
                {"fundamental_weight_matrix", fw}};
}

Json to_json(const Parabolic& p, const std::vector<GradedPiece>& pieces)
{
    return Json{{"command", "partition"},
                {"type", p.root_system().label()},
                {"S", json_nodes(p.type())},
                {"pieces", pieces_json(pieces)}};
}

Json to_json(const RootSystem& rs, const std::vector<HeightRow>& rows, const SafeCharacteristic& gate)
{
    Json out_rows = Json::array();
    for (const auto& row : rows)
        out_rows.push_back({{"k", row.k + 1},
                            {"omega_norm", json_rational(row.omega_norm)},
                            {"argmax_root", json_root(row.argmax_root)},
                            {"ht", json_rational(row.ht)}});
    return Json{{"command", "heights"},
                {"type", rs.label()},
                {"rows", out_rows},
                {"ht_max", json_rational(gate.ht_max)},
                {"min_safe_char", gate.bound}};
}

Json to_json(const Parabolic& p, const SlopeDatum& d, const CanonicalVerdict& v)
{
    Json delta = Json::array();
    for (const auto& x : d.delta)
        delta.push_back(json_rational(x));
    Json inv = Json::array();
    for (const auto& [o, n] : v.invariants)
        inv.push_back({{"o", json_nodes(o)}, {"n", json_rational(n)}});
    Json gp = Json::array();
    for (const auto& pd : v.gp_degrees) {
        Json degs = Json::array();
        for (const auto& x : pd.weight_degrees)
            degs.push_back(json_rational(x));
        gp.push_back({{"signature", pd.signature},
                      {"level", pd.level},
                      {"weight_degrees", degs},
                      {"total", json_rational(pd.total)}});
    }
    return Json{{"command", "canonical"},
                {"type", p.root_system().label()},
                {"S", json_nodes(p.type())},
                {"delta", delta},
                {"is_canonical", v.is_canonical},
                {"invariants", inv},
                {"gp_degrees", gp},
                {"violations", v.violations},
                {"verdicts",
                 Json::array({verdict("delta > 0 on t(P)", v.type_positive),
                              verdict("delta = 0 on the Levi", v.levi_semistable),
                              verdict("n(P,o) > 0 for every o", v.invariants_positive),
                              verdict("every g/p weight has negative degree", v.gp_negative)})}};
}

Json to_json(const Parabolic& p, const IndexSet& o, const ProjectionCheck& c, const DegreeRelation& rel)
{
    Json out{{"S", json_nodes(p.type())},
             {"o", json_nodes(o)},
             {"chi", json_weight(c.chi)},
             {"projection", json_weight(c.projection)},
             {"c", json_rational(c.c)},
             {"residual", json_weight(c.residual)},
             {"levi_orthogonal", c.levi_orthogonal},
             {"projection_ok", c.ok},
             {"relation_ok", rel.ok},
             {"c_prime", rel.c_prime ? json_rational(*rel.c_prime) : Json(nullptr)},
             {"samples_used", rel.used},
             {"samples_skipped", rel.skipped}};
    if (!rel.witness.empty())
        out["witness"] = rel.witness;
    return out;
}

Json to_json(const TorusReport& r)
{
    Json basis = Json::array();
    for (std::size_t i = 0; i < r.basis.size(); ++i) {
        Json e{{"vector", r.basis[i]}, {"weight", json_root(r.weights[i])}};
        if (i < r.exponents.size())
            e["exponents"] = {r.exponents[i].first, r.exponents[i].second};
        e["pairings"] = {r.pairings[i].first, r.pairings[i].second};
        basis.push_back(e);
    }
    Json out{{"p", r.p},
             {"field", r.field},
             {"dimension", r.exponents.size()},
             {"epsilon", r.epsilon},
             {"basis", basis},
             {"zero_weight_present", r.zero_weight_present},
             {"weight_sum_zero", r.weight_sum_zero},
             {"ok", r.ok}};
    if (!r.message.empty())
        out["message"] = r.message;
    return out;
}

Json to_json(const HomomorphismReport& r)
{
    Json out{{"field", r.field},
             {"samples", r.samples},
             {"embed_A_homomorphism", r.embed_A_ok},
             {"embed_B_homomorphism", r.embed_B_ok},
             {"det_one", r.det_ok},
             {"ok", r.ok}};
    if (!r.witness.empty())
        out["witness"] = r.witness;
    return out;
}

Json to_json(const AdjointBlockReport& r)
{
    Json blocks = Json::array();
    for (const auto& b : r.blocks) {
        Json weights = Json::array();
        for (const auto& w : b.weights)
            weights.push_back(json_root(w));
        blocks.push_back({{"name", b.name},
                          {"rows", {b.row0 + 1, b.row0 + 2}},
                          {"cols", {b.col0 + 1, b.col0 + 2}},
                          {"formula", b.formula},
                          {"formula_ok", b.formula_ok},
                          {"torus_exponents", b.exponents},
                          {"weights", weights}});
    }
    Json out{{"fields", r.fields},
             {"samples", r.samples},
             {"blocks", blocks},
             {"exponents_ok", r.exponents_ok},
             {"intertwiner_dim", r.intertwiner_dim},
             {"intertwiner_invertible", r.intertwiner_invertible},
             {"ok", r.ok}};
    if (!r.witness.empty())
        out["witness"] = r.witness;
    return out;
}

Json to_json(const OneParamReport& r)
{
    Json out{{"command", "g2 one-param"},
             {"field", r.field},
             {"pairs", r.pairs},
             {"additive", r.additive},
             {"equivariant", r.equivariant},
             {"unipotent", r.unipotent},
             {"ok", r.ok},
             {"verdicts",
              Json::array({verdict("M(a) M(b) = M(a+b) for all a, b", r.additive),
                           verdict("torus acts on M(a) through the weight -(2,1)", r.equivariant),
                           verdict("M(a) is unipotent", r.unipotent)})}};
    if (!r.witness.empty())
        out["witness"] = r.witness;
    return out;
}

Json to_json(const FormalBundle& b)
{
    return Json{{"label", b.label},
                {"rank", b.rank},
                {"degree", b.degree.format()},
                {"degree_coefficients", {json_rational(b.degree.a), json_rational(b.degree.b)}}};
}

Json to_json(const LedgerReport& r)
{
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json j = to_json(e.bundle);
        j["name"] = e.name;
        if (r.genus)
            j["degree_at_genus"] = json_rational(e.bundle.degree.at(*r.genus));
        entries.push_back(j);
    }
    Json verdicts = Json::array();
    for (const auto& v : r.verdicts) {
        Json j{{"claim", v.claim}, {"status", v.status}, {"holds", v.holds}};
        if (!v.citation.empty())
            j["citation"] = v.citation;
        verdicts.push_back(j);
    }
    return Json{{"genus", r.genus ? Json(*r.genus) : Json(nullptr)},
                {"entries", entries},
                {"slope_of_twist", r.slope_of_twist.format()},
                {"slope_value", r.slope_value ? json_rational(*r.slope_value) : Json(nullptr)},
                {"counterexample", r.counterexample},
                {"verdicts", verdicts}};
}

Json to_json(const CounterexampleReport& r)
{
    Json ledger = to_json(r.ledger);
    Json verdicts = ledger["verdicts"];
    verdicts.push_back(verdict("reduction to P1 with these slope data is canonical", r.verdict.is_canonical));
    verdicts.push_back(verdict("g/p piece degrees equal det E and T from the ledger", r.degrees_match));
    verdicts.push_back(
        verdict("low height fails at p = " + std::to_string(r.p), !r.height_failures.empty()));

    Json pieces = Json::array();
    for (const auto& m : r.pieces)
        pieces.push_back({{"level", m.level},
                          {"from_slope", json_rational(m.from_slope)},
                          {"from_ledger", json_rational(m.from_ledger)},
                          {"ok", m.ok}});
    Json delta = Json::array();
    for (const auto& x : r.delta.delta)
        delta.push_back(json_rational(x));
    Json failures = Json::array();
    for (const auto& f : r.height_failures)
        failures.push_back({{"signature", f.signature}, {"level", f.level}});

    return Json{{"command", "g2 ledger"},
                {"genus", r.genus},
                {"p", r.p},
                {"status", r.status},
                {"S", json_nodes(r.type)},
                {"delta", delta},
                {"canonical", r.verdict.is_canonical},
                {"piece_degrees", pieces},
                {"low_height_failures", failures},
                {"section_exists", r.section_exists},
                {"ledger", ledger},
                {"chain", r.chain},
                {"verdicts", verdicts}};
}

}  // namespace canred
