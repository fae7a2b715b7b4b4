#include "canred/rootsys.hpp"

#include "canred/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

namespace canred {

LieType LieType::make(Family family, int rank)
{
    bool ok = false;
    switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    }
    if (!ok)
        throw InputError("invalid rank " + std::to_string(rank) + " for family " +
                         std::string(1, static_cast<char>(family)));
    return LieType{family, rank};
}

LieType LieType::parse(std::string_view text)
{
    if (text.size() < 2)
        throw InputError("unknown Lie type '" + std::string(text) + "'");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (std::string_view("ABCDEFG").find(f) == std::string_view::npos)
        throw InputError("unknown Lie family in '" + std::string(text) + "'");
    int rank = 0;
    for (char c : text.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 1000)
            throw InputError("malformed rank in '" + std::string(text) + "'");
        rank = rank * 10 + (c - '0');
    }
    return make(static_cast<Family>(f), rank);
}

std::string LieType::name() const
{
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

int LieType::dimension() const
{
    const int n = rank;
    switch (family) {
    case Family::A: return n * n + 2 * n;
    case Family::B:
    case Family::C: return 2 * n * n + n;
    case Family::D: return 2 * n * n - n;
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
    }
    return 0;
}

RootVec RootVec::simple(std::size_t rank, int i)
{
    RootVec v(std::vector<int>(rank, 0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

int RootVec::height() const
{
    int h = 0;
    for (int c : k_)
        h += c;
    return h;
}

bool RootVec::is_zero() const
{
    return std::all_of(k_.begin(), k_.end(), [](int c) { return c == 0; });
}

bool RootVec::is_positive() const
{
    return !is_zero() && std::all_of(k_.begin(), k_.end(), [](int c) { return c >= 0; });
}

bool RootVec::is_negative() const
{
    return !is_zero() && std::all_of(k_.begin(), k_.end(), [](int c) { return c <= 0; });
}

RootVec RootVec::operator-() const
{
    RootVec r(*this);
    for (int& c : r.k_)
        c = -c;
    return r;
}

RootVec RootVec::operator+(const RootVec& o) const
{
    RootVec r(*this);
    for (std::size_t i = 0; i < k_.size(); ++i)
        r.k_[i] += o.k_[i];
    return r;
}

RootVec RootVec::operator-(const RootVec& o) const
{
    return *this + (-o);
}

RootVec RootVec::operator*(int s) const
{
    RootVec r(*this);
    for (int& c : r.k_)
        c *= s;
    return r;
}

WeightVec::WeightVec(const RootVec& root)
{
    r_.reserve(root.size());
    for (int c : root.coords())
        r_.emplace_back(c);
}

Rational WeightVec::coordinate_sum() const
{
    Rational s(0);
    for (const auto& c : r_)
        s += c;
    return s;
}

WeightVec WeightVec::operator+(const WeightVec& o) const
{
    WeightVec w(*this);
    for (std::size_t i = 0; i < r_.size(); ++i)
        w.r_[i] += o.r_[i];
    return w;
}

WeightVec WeightVec::operator-(const WeightVec& o) const
{
    return *this + (-o);
}

WeightVec WeightVec::operator-() const
{
    WeightVec w(*this);
    for (auto& c : w.r_)
        c = -c;
    return w;
}

WeightVec WeightVec::operator*(const Rational& s) const
{
    WeightVec w(*this);
    for (auto& c : w.r_)
        c *= s;
    return w;
}

IntMatrix cartan_matrix(const LieType& type)
{
    const int n = type.rank;
    IntMatrix c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        c[i][i] = 2;
    auto link = [&](int i, int j) {  // 1-based simple bond
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };
    switch (type.family) {
    case Family::A:
        for (int i = 1; i < n; ++i)
            link(i, i + 1);
        break;
    case Family::B:
        // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        for (int i = 1; i < n; ++i)
            link(i, i + 1);
        c[n - 1][n - 2] = -2;
        break;
    case Family::C:
        // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
        for (int i = 1; i < n; ++i)
            link(i, i + 1);
        c[n - 2][n - 1] = -2;
        break;
    case Family::D:
        for (int i = 1; i < n - 1; ++i)
            link(i, i + 1);
        link(n - 2, n);
        break;
    case Family::E:
        link(1, 3);
        link(2, 4);
        for (int i = 3; i < n; ++i)
            link(i, i + 1);
        break;
    case Family::F:
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        link(1, 2);
        link(2, 3);
        link(3, 4);
        c[2][1] = -2;
        break;
    case Family::G:
        // alpha_1 short, alpha_2 long: <alpha_2, alpha_1^vee> = -3
        link(1, 2);
        c[0][1] = -3;
        break;
    }
    return c;
}

namespace {

void validate_cartan(const IntMatrix& c)
{
    const std::size_t n = c.size();
    if (n == 0)
        throw InputError("empty Cartan matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i].size() != n)
            throw InputError("Cartan matrix is not square");
        if (c[i][i] != 2)
            throw InputError("Cartan diagonal entry != 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (c[i][j] > 0 || c[i][j] < -3)
                throw InputError("Cartan off-diagonal entry out of range");
            if ((c[i][j] == 0) != (c[j][i] == 0))
                throw InputError("Cartan zero pattern not symmetric");
        }
    }
}

std::vector<Rational> symmetrize(const IntMatrix& c)
{
    const int n = static_cast<int>(c.size());
    std::vector<Rational> d(n, Rational(0));
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        seen[start] = true;
        d[start] = 1;
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            comp.push_back(i);
            for (int j = 0; j < n; ++j) {
                if (j == i || c[i][j] == 0)
                    continue;
                Rational dj = d[i] * c[i][j] / c[j][i];
                dj.canonicalize();
                if (!seen[j]) {
                    seen[j] = true;
                    d[j] = dj;
                    queue.push_back(j);
                } else if (d[j] != dj) {
                    throw InputError("Cartan matrix is not symmetrizable");
                }
            }
        }
        Rational least = d[comp.front()];
        for (int i : comp)
            least = std::min(least, d[i]);
        for (int i : comp)
            d[i] /= least;
    }
    return d;
}

}  // namespace

RootSystem RootSystem::build(const LieType& type)
{
    RootSystem rs = from_cartan(cartan_matrix(type), type.name());
    rs.type_ = type;
    return rs;
}

RootSystem RootSystem::from_cartan(IntMatrix cartan, std::string label)
{
    validate_cartan(cartan);
    RootSystem rs;
    rs.label_ = std::move(label);
    rs.cartan_ = std::move(cartan);
    rs.finish();
    return rs;
}

void RootSystem::finish()
{
    const int n = rank();
    sym_ = symmetrize(cartan_);

    // Closure by root strings, one height layer at a time. Every root of
    // smaller height is known when a layer is processed, so the downward
    // string length p is exact.
    std::set<RootVec> known;
    std::vector<RootVec> layer;
    for (int i = 0; i < n; ++i)
        layer.push_back(RootVec::simple(n, i));
    constexpr std::size_t kRootLimit = 100000;
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end());
        for (const auto& r : layer) {
            known.insert(r);
            positive_.push_back(r);
        }
        if (positive_.size() > kRootLimit)
            throw InputError("Cartan matrix is not of finite type");
        std::set<RootVec> next;
        for (const auto& alpha : layer) {
            for (int i = 0; i < n; ++i) {
                const RootVec ai = RootVec::simple(n, i);
                int p = 0;
                while (known.count(alpha - ai * (p + 1)))
                    ++p;
                const int q = p - pairing(alpha, i);
                if (q > 0)
                    next.insert(alpha + ai);
            }
        }
        layer.assign(next.begin(), next.end());
    }
    for (std::size_t i = 0; i < positive_.size(); ++i)
        index_.emplace(positive_[i], i);

    // N = P^{-1} with P[i][j] = <alpha_i, alpha_j^vee> = C[j][i].
    RationalMatrix p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            p(i, j) = cartan_[j][i];
    fwm_ = p.inverse();
}

WeightVec RootSystem::fundamental_weight(int i) const
{
    WeightVec w(static_cast<std::size_t>(rank()));
    for (int j = 0; j < rank(); ++j)
        w[j] = fwm_(i, j);
    return w;
}

Rational RootSystem::pairing(const WeightVec& lambda, int i) const
{
    Rational s(0);
    for (int j = 0; j < rank(); ++j)
        s += lambda[j] * cartan_[i][j];
    return s;
}

int RootSystem::pairing(const RootVec& alpha, int i) const
{
    int s = 0;
    for (int j = 0; j < rank(); ++j)
        s += alpha[j] * cartan_[i][j];
    return s;
}

Rational RootSystem::inner_product(const WeightVec& lambda, const WeightVec& mu) const
{
    Rational s(0);
    for (int i = 0; i < rank(); ++i) {
        if (lambda[i] == 0)
            continue;
        for (int j = 0; j < rank(); ++j)
            if (cartan_[i][j] != 0)
                s += lambda[i] * mu[j] * sym_[i] * cartan_[i][j];
    }
    return s;
}

Rational RootSystem::coroot_pairing(const WeightVec& lambda, const RootVec& alpha) const
{
    const WeightVec a(alpha);
    Rational q = 2 * inner_product(lambda, a) / inner_product(a, a);
    q.canonicalize();
    return q;
}

bool RootSystem::is_dominant(const WeightVec& lambda, const IndexSet& levi) const
{
    return std::all_of(levi.begin(), levi.end(), [&](int j) { return pairing(lambda, j) >= 0; });
}

bool RootSystem::is_positive_root(const RootVec& v) const
{
    return index_.count(v) != 0;
}

bool RootSystem::is_root(const RootVec& v) const
{
    return is_positive_root(v) || is_positive_root(-v);
}

RootSystem levi_subsystem(const RootSystem& rs, const IndexSet& levi)
{
    if (levi.empty())
        throw InputError("empty Levi subsystem");
    IntMatrix sub(levi.size(), std::vector<int>(levi.size()));
    std::string label = rs.label() + "[";
    for (std::size_t a = 0; a < levi.size(); ++a) {
        for (std::size_t b = 0; b < levi.size(); ++b)
            sub[a][b] = rs.cartan()[levi[a]][levi[b]];
        label += (a ? "," : "") + std::to_string(levi[a] + 1);
    }
    label += "]";
    return RootSystem::from_cartan(std::move(sub), label);
}

IndexSet complement(const RootSystem& rs, const IndexSet& s)
{
    IndexSet out;
    for (int i = 0; i < rs.rank(); ++i)
        if (std::find(s.begin(), s.end(), i) == s.end())
            out.push_back(i);
    return out;
}

IndexSet from_nodes(std::vector<int> nodes)
{
    IndexSet out;
    out.reserve(nodes.size());
    for (int k : nodes) {
        if (k < 1)
            throw InputError("node labels are 1-based");
        out.push_back(k - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace canred
