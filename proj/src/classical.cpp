#include "canred/error.hpp"
#include "canred/parabolic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

// Dimension bookkeeping for parabolics of orthogonal and symplectic groups:
// S is read as an isotropic flag E_1 ⊂ ... ⊂ E_k and every negative root is
// assigned to the Hom / Sym^2 / wedge^2 block of g/p it lives in, using the
// usual epsilon-coordinates of the root.

namespace canred {

namespace {

struct FlagModel {
    std::vector<int> dims;
    int middle = 0;
    std::vector<std::vector<int>> eps;  // epsilon-image of each simple root
};

FlagModel flag_model(const Parabolic& p)
{
    const auto& rs = p.root_system();
    if (!rs.type() ||
        (rs.type()->family != Family::B && rs.type()->family != Family::C && rs.type()->family != Family::D))
        throw InputError("classical piece check needs a root system of type B, C or D");
    const Family fam = rs.type()->family;
    const int n = rs.rank();

    FlagModel m;
    m.eps.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i + 1 < n; ++i) {
        m.eps[i][i] = 1;
        m.eps[i][i + 1] = -1;
    }
    bool swap_spin = false;
    if (fam == Family::D) {
        const bool has_a = p.in_type(n - 2);
        const bool has_b = p.in_type(n - 1);
        swap_spin = has_a && !has_b;
        for (int i : p.type())
            if (i < n - 2)
                m.dims.push_back(i + 1);
        if (has_a && has_b)
            m.dims.push_back(n - 1);
        if (has_a || has_b)
            m.dims.push_back(n);
    } else {
        for (int i : p.type())
            m.dims.push_back(i + 1);
    }

    switch (fam) {
    case Family::B: m.eps[n - 1][n - 1] = 1; break;
    case Family::C: m.eps[n - 1][n - 1] = 2; break;
    default:
        // alpha_{n-1} = e_{n-1} - e_n, alpha_n = e_{n-1} + e_n; swapped when only
        // node n-1 is in S, so that the maximal isotropic block is always "node n".
        m.eps[n - 2].assign(n, 0);
        m.eps[n - 1].assign(n, 0);
        m.eps[n - 2][n - 2] = 1;
        m.eps[n - 1][n - 2] = 1;
        m.eps[n - 2][n - 1] = swap_spin ? 1 : -1;
        m.eps[n - 1][n - 1] = swap_spin ? -1 : 1;
        break;
    }
    m.middle = 2 * (n - m.dims.back()) + (fam == Family::B ? 1 : 0);
    return m;
}

}  // namespace

ClassicalReport classical_piece_dims(const Parabolic& p)
{
    const auto& rs = p.root_system();
    const int n = rs.rank();
    const FlagModel model = flag_model(p);
    const Family fam = rs.type()->family;
    const bool symplectic = fam == Family::C;

    ClassicalReport report;
    report.flag_dims = model.dims;
    report.middle = model.middle;
    int prev = 0;
    for (int d : model.dims) {
        report.block_dims.push_back(d - prev);
        prev = d;
    }
    const int k = static_cast<int>(model.dims.size());

    // block index (1-based) of epsilon-coordinate i; 0 means the middle block.
    auto block_of = [&](int i) {
        for (int a = 0; a < k; ++a)
            if (i < model.dims[a])
                return a + 1;
        return 0;
    };
    auto name = [](int a) { return a == 0 ? std::string("M") : "V" + std::to_string(a); };

    auto classify = [&](const RootVec& beta) -> std::string {
        std::vector<int> e(n, 0);
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t)
                e[t] += beta[s] * model.eps[s][t];
        std::vector<int> pos;
        for (int t = 0; t < n; ++t)
            if (e[t] != 0)
                pos.push_back(t);
        if (pos.size() == 1) {
            const int a = block_of(pos[0]);
            if (std::abs(e[pos[0]]) == 2)
                return "Sym2(" + name(a) + ")";
            return "Hom(" + name(a) + ",M)";
        }
        if (pos.size() != 2)
            return "?";
        const int a = block_of(pos[0]);
        const int b = block_of(pos[1]);
        if (a == 0)
            return "?";
        if (b == 0)
            return "Hom(" + name(a) + ",M)";
        const bool difference = e[pos[0]] * e[pos[1]] < 0;
        if (difference)
            return a == b ? "?" : "Hom(" + name(a) + "," + name(b) + ")";
        if (a == b)
            return (symplectic ? "Sym2(" : "Wedge2(") + name(a) + ")";
        return "Hom(" + name(a) + "," + name(b) + "*)";
    };

    std::map<std::string, int> expected;
    for (int a = 1; a <= k; ++a) {
        const int da = report.block_dims[a - 1];
        for (int b = a + 1; b <= k; ++b) {
            const int db = report.block_dims[b - 1];
            expected["Hom(" + name(a) + "," + name(b) + ")"] = da * db;
            expected["Hom(" + name(a) + "," + name(b) + "*)"] = da * db;
        }
        if (model.middle > 0)
            expected["Hom(" + name(a) + ",M)"] = da * model.middle;
        const int sq = symplectic ? da * (da + 1) / 2 : da * (da - 1) / 2;
        if (sq > 0)
            expected[(symplectic ? "Sym2(" : "Wedge2(") + name(a) + ")"] = sq;
    }

    std::map<std::string, int> seen;
    for (const auto& piece : subquotient_partition(p)) {
        ClassicalPieceCheck check;
        check.signature = piece.signature;
        check.actual = static_cast<int>(piece.weights.size());
        check.label = classify(-piece.weights.front());
        bool uniform = true;
        for (const auto& w : piece.weights)
            if (classify(-w) != check.label)
                uniform = false;
        auto it = expected.find(check.label);
        check.predicted = it == expected.end() ? 0 : it->second;
        check.ok = uniform && it != expected.end() && check.predicted == check.actual;
        if (!uniform)
            report.failures.push_back("piece at level " + std::to_string(piece.level) +
                                      " mixes several flag blocks");
        else if (it == expected.end())
            report.failures.push_back("piece " + check.label + " is not predicted by the flag");
        else if (check.predicted != check.actual)
            report.failures.push_back("piece " + check.label + " has " + std::to_string(check.actual) +
                                      " weights, predicted " + std::to_string(check.predicted));
        if (++seen[check.label] > 1)
            report.failures.push_back("block " + check.label + " split over several pieces");
        report.pieces.push_back(std::move(check));
    }
    for (const auto& [label, dim] : expected)
        if (!seen.count(label))
            report.failures.push_back("predicted block " + label + " (dim " + std::to_string(dim) +
                                      ") has no piece");
    report.ok = report.failures.empty();
    return report;
}

}  // namespace canred
