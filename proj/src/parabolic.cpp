#include "canred/parabolic.hpp"

#include "canred/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace canred {

Parabolic::Parabolic(const RootSystem& rs, IndexSet s) : rs_(&rs), s_(std::move(s))
{
    std::sort(s_.begin(), s_.end());
    s_.erase(std::unique(s_.begin(), s_.end()), s_.end());
    if (s_.empty())
        throw InputError("parabolic type must be a nonempty set of simple roots");
    if (s_.front() < 0 || s_.back() >= rs.rank())
        throw InputError("parabolic type contains an index outside rank " + std::to_string(rs.rank()));
    levi_ = complement(rs, s_);
}

bool Parabolic::in_type(int i) const
{
    return std::binary_search(s_.begin(), s_.end(), i);
}

int Parabolic::level(const RootVec& v) const
{
    int l = 0;
    for (int i : s_)
        l += v[i];
    return l;
}

bool Parabolic::in_levi_span(const RootVec& v) const
{
    return std::all_of(s_.begin(), s_.end(), [&](int i) { return v[i] == 0; });
}

std::vector<RootVec> gp_weights(const Parabolic& p)
{
    std::vector<RootVec> out;
    for (const auto& alpha : p.root_system().positive_roots())
        if (!p.in_levi_span(alpha))
            out.push_back(-alpha);
    return out;
}

std::vector<std::vector<RootVec>> nil_filtration(const Parabolic& p)
{
    std::vector<std::vector<RootVec>> out;
    for (int i = 0;; ++i) {
        std::vector<RootVec> u;
        for (const auto& alpha : p.root_system().positive_roots())
            if (p.level(alpha) > i)
                u.push_back(alpha);
        if (u.empty())
            break;
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<GradedPiece> subquotient_partition(const Parabolic& p)
{
    // key: (level, |signature|)
    std::map<std::pair<int, std::vector<int>>, GradedPiece> groups;
    for (const auto& w : gp_weights(p)) {
        std::vector<int> sig;
        std::vector<int> abs_sig;
        for (int i : p.type()) {
            sig.push_back(w[i]);
            abs_sig.push_back(-w[i]);
        }
        const int lvl = -p.level(w);
        auto& piece = groups[{lvl, abs_sig}];
        if (piece.weights.empty()) {
            piece.signature = sig;
            piece.level = lvl;
        }
        piece.weights.push_back(w);
    }
    std::vector<GradedPiece> out;
    out.reserve(groups.size());
    for (auto& [key, piece] : groups)
        out.push_back(std::move(piece));
    return out;
}

std::vector<RootVec> phi_alpha(const Parabolic& p, int i)
{
    if (!p.in_type(i))
        throw InputError("simple root " + std::to_string(i + 1) + " is not in t(P)");
    std::vector<RootVec> out;
    for (const auto& alpha : p.root_system().positive_roots()) {
        bool match = alpha[i] == 1;
        for (int j : p.type())
            if (j != i && alpha[j] != 0)
                match = false;
        if (match)
            out.push_back(alpha);
    }
    return out;
}

std::vector<IndexSet> components(const Parabolic& p)
{
    const auto& rs = p.root_system();
    std::vector<IndexSet> out;
    std::vector<bool> used(rs.rank(), false);
    for (int start : p.type()) {
        if (used[start])
            continue;
        IndexSet comp{start};
        used[start] = true;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (int j : p.type())
                if (!used[j] && rs.adjacent(comp[k], j)) {
                    used[j] = true;
                    comp.push_back(j);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<IndexSet> scheme_components(const Parabolic& p)
{
    std::vector<IndexSet> out;
    for (int i : p.type())
        out.push_back(IndexSet{i});
    return out;
}

std::vector<RootVec> w_po(const Parabolic& p, const IndexSet& o)
{
    std::vector<RootVec> out;
    for (int i : o) {
        auto part = phi_alpha(p, i);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace canred
