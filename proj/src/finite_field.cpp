#include "canred/finite_field.hpp"

#include "canred/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace canred {

namespace {

std::vector<int> conway(int p, int k)
{
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},    {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 2}, {2, 4, 1}},    {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
        {{7, 2}, {3, 6, 1}},    {{7, 3}, {4, 0, 6, 1}},    {{7, 4}, {3, 4, 5, 0, 1}},
    };
    if (k == 1)
        return {};
    auto it = table.find({p, k});
    if (it == table.end())
        throw InputError("no field F_" + std::to_string(p) + "^" + std::to_string(k) + " available");
    return it->second;
}

}  // namespace

const FiniteField& FiniteField::get(int p, int k)
{
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw InputError("characteristic must be one of 2, 3, 5, 7");
    if (k < 1 || k > 4)
        throw InputError("extension degree must be between 1 and 4");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<FiniteField>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[{p, k}];
    if (!slot)
        slot.reset(new FiniteField(p, k, conway(p, k)));
    return *slot;
}

const FiniteField& FiniteField::parse(std::string_view name)
{
    if (name.size() < 2 || (name[0] != 'F' && name[0] != 'f'))
        throw InputError("field name must look like F4, F16, F9, ...");
    long q = 0;
    for (char c : name.substr(1)) {
        if (c < '0' || c > '9' || q > 100000)
            throw InputError("malformed field name '" + std::string(name) + "'");
        q = q * 10 + (c - '0');
    }
    for (int p : {2, 3, 5, 7}) {
        long power = 1;
        for (int k = 1; k <= 4; ++k) {
            power *= p;
            if (power == q)
                return get(p, k);
        }
    }
    throw InputError("unsupported field '" + std::string(name) + "'");
}

FiniteField::FiniteField(int p, int k, std::vector<int> modulus) : p_(p), k_(k), modulus_(std::move(modulus))
{
    q_ = 1;
    for (int i = 0; i < k_; ++i)
        q_ *= static_cast<std::uint32_t>(p_);

    // Find a generator of the multiplicative group; starting at x for
    // extensions. If the modulus were reducible no element would have order q-1.
    log_.assign(q_, 0);
    for (std::uint32_t cand = (k_ == 1 ? 2 : static_cast<std::uint32_t>(p_)); cand < q_ || q_ == 2; ++cand) {
        const Fq g{q_ == 2 ? 1u : cand};
        std::vector<Fq> powers;
        powers.reserve(q_ - 1);
        Fq x = one();
        std::vector<bool> hit(q_, false);
        bool full = true;
        for (std::uint32_t e = 0; e + 1 < q_; ++e) {
            if (hit[x.v]) {
                full = false;
                break;
            }
            hit[x.v] = true;
            powers.push_back(x);
            x = mul_poly(x, g);
        }
        if (full && x == one()) {
            exp_ = std::move(powers);
            break;
        }
        if (q_ == 2)
            break;
    }
    if (exp_.size() != q_ - 1)
        throw std::logic_error("modulus polynomial is not irreducible");
    for (std::uint32_t e = 0; e < exp_.size(); ++e)
        log_[exp_[e].v] = e;
}

std::vector<int> FiniteField::digits(Fq a) const
{
    std::vector<int> d(k_, 0);
    std::uint32_t v = a.v;
    for (int i = 0; i < k_; ++i) {
        d[i] = static_cast<int>(v % p_);
        v /= p_;
    }
    return d;
}

Fq FiniteField::pack(const std::vector<int>& d) const
{
    std::uint32_t v = 0;
    for (int i = k_ - 1; i >= 0; --i)
        v = v * p_ + static_cast<std::uint32_t>(((d[i] % p_) + p_) % p_);
    return Fq{v};
}

Fq FiniteField::from_int(long n) const
{
    long r = n % p_;
    if (r < 0)
        r += p_;
    return Fq{static_cast<std::uint32_t>(r)};
}

Fq FiniteField::element(std::uint32_t index) const
{
    if (index >= q_)
        throw std::out_of_range("field element index");
    return Fq{index};
}

Fq FiniteField::add(Fq a, Fq b) const
{
    if (p_ == 2)
        return Fq{a.v ^ b.v};
    auto da = digits(a);
    auto db = digits(b);
    for (int i = 0; i < k_; ++i)
        da[i] += db[i];
    return pack(da);
}

Fq FiniteField::neg(Fq a) const
{
    if (p_ == 2)
        return a;
    auto d = digits(a);
    for (int& c : d)
        c = -c;
    return pack(d);
}

Fq FiniteField::sub(Fq a, Fq b) const
{
    return add(a, neg(b));
}

Fq FiniteField::mul_poly(Fq a, Fq b) const
{
    const auto da = digits(a);
    const auto db = digits(b);
    std::vector<int> prod(2 * k_, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    // reduce by the monic modulus from the top degree down
    for (int deg = 2 * k_ - 1; deg >= k_; --deg) {
        const int c = prod[deg] % p_;
        if (c == 0)
            continue;
        for (int i = 0; i <= k_; ++i)
            prod[deg - k_ + i] = ((prod[deg - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    prod.resize(k_);
    return pack(prod);
}

Fq FiniteField::mul(Fq a, Fq b) const
{
    if (a.v == 0 || b.v == 0)
        return zero();
    return exp_[(log_[a.v] + log_[b.v]) % (q_ - 1)];
}

Fq FiniteField::inv(Fq a) const
{
    if (a.v == 0)
        throw std::domain_error("inverse of zero in " + name());
    return exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)];
}

Fq FiniteField::pow(Fq a, long e) const
{
    if (a.v == 0) {
        if (e < 0)
            throw std::domain_error("negative power of zero");
        return e == 0 ? one() : zero();
    }
    const long order = static_cast<long>(q_) - 1;
    long r = (static_cast<long>(log_[a.v]) * (e % order)) % order;
    if (r < 0)
        r += order;
    return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t FiniteField::log(Fq a) const
{
    if (a.v == 0)
        throw std::domain_error("log of zero");
    return log_[a.v];
}

std::string FiniteField::format(Fq a) const
{
    if (k_ == 1)
        return std::to_string(a.v);
    // coefficients as a polynomial in x, highest first
    const auto d = digits(a);
    std::string out;
    for (int i = k_ - 1; i >= 0; --i) {
        if (d[i] == 0)
            continue;
        if (!out.empty())
            out += "+";
        if (i == 0 || d[i] != 1)
            out += std::to_string(d[i]);
        if (i > 0)
            out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace canred
