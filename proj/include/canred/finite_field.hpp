#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace canred {

/// Element of a finite field, encoded as the base-p digits of its coordinates
/// in the polynomial basis 1, x, ..., x^{k-1}. Only meaningful together with
/// the FiniteField it came from.
struct Fq {
    std::uint32_t v = 0;
    bool operator==(const Fq&) const = default;
};

/// F_{p^k} for p in {2, 3, 5, 7} and k <= 4, in the polynomial basis modulo a
/// fixed Conway polynomial (primitive, so x generates the multiplicative group):
///
///   p=2: x^2+x+1, x^3+x+1, x^4+x+1
///   p=3: x^2+2x+2, x^3+2x+1, x^4+2x^3+2
///   p=5: x^2+4x+2, x^3+3x+3, x^4+4x^2+4x+2
///   p=7: x^2+6x+3, x^3+6x^2+4, x^4+5x^2+4x+3
///
/// Instances live for the whole program; get() hands out shared references.
class FiniteField {
public:
    static const FiniteField& get(int p, int k);
    /// "F2", "F4", "F9", "F16", ... (the order, not the exponent).
    static const FiniteField& parse(std::string_view name);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    /// Monic modulus, coefficients from x^0 upwards. Empty for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }
    std::string name() const { return "F" + std::to_string(q_); }

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    Fq from_int(long n) const;
    Fq element(std::uint32_t index) const;  ///< index in [0, q)
    /// The class of x (or of the least generator for prime fields).
    Fq generator() const { return exp_[1 % (q_ - 1)]; }

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;  ///< throws std::domain_error on zero
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, long e) const;  ///< negative exponents allowed for a != 0
    Fq frobenius(Fq a) const { return pow(a, p_); }

    /// Discrete logarithm to base generator(); throws std::domain_error on zero.
    std::uint32_t log(Fq a) const;

    /// Multiplication by schoolbook polynomial arithmetic, independent of the
    /// log tables. Used to build the tables and by tests.
    Fq mul_poly(Fq a, Fq b) const;

    std::string format(Fq a) const;

private:
    FiniteField(int p, int k, std::vector<int> modulus);

    std::vector<int> digits(Fq a) const;
    Fq pack(const std::vector<int>& d) const;

    int p_;
    int k_;
    std::uint32_t q_;
    std::vector<int> modulus_;
    std::vector<Fq> exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace canred
