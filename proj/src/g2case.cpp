#include "canred/g2case.hpp"

#include "canred/error.hpp"

#include <algorithm>
#include <functional>

namespace canred {

namespace {

void require_2x2(const FqMatrix& a)
{
    if (a.rows() != 2 || a.cols() != 2)
        throw InputError("expected a 2x2 matrix");
}

void require_p(int p)
{
    if (p != 2 && p != 3 && p != 5 && p != 7)
        throw InputError("characteristic must be one of 2, 3, 5, 7");
}

// Signed representative of a discrete log in (-(q-1)/2, (q-1)/2].
int signed_exponent(const FiniteField& f, Fq x)
{
    const long order = static_cast<long>(f.order()) - 1;
    long e = f.log(x);
    if (2 * e > order)
        e -= order;
    return static_cast<int>(e);
}

const RootSystem& g2()
{
    static const RootSystem rs = RootSystem::build(LieType::make(Family::G, 2));
    return rs;
}

// Weight with the given coroot pairings, in simple-root coordinates.
RootVec weight_from_pairings(int c1, int c2)
{
    const auto& c = g2().cartan();
    RationalMatrix m(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m(i, j) = c[i][j];
    const auto x = solve(m, {Rational(c1), Rational(c2)});
    RootVec out{0, 0};
    for (int i = 0; i < 2; ++i) {
        if (!is_integer(x[i]))
            throw std::logic_error("torus character off the root lattice");
        out[i] = static_cast<int>(x[i].get_num().get_si());
    }
    return out;
}

FqMatrix diag2(const FiniteField& f, Fq u)
{
    return FqMatrix::diagonal(f, {u, f.inv(u)});
}

}  // namespace

std::vector<std::string> v_basis(int p)
{
    if (p == 2)
        return {"w2^vee", "w1^vee", "w1^2", "w2^2", "w1", "w2"};
    return {"w2^vee", "w1^vee", "w1^2", "w1w2", "w2^2", "w1", "w2"};
}

std::vector<RootVec> v_weights(int p)
{
    if (p == 2)
        return {{2, 1}, {1, 1}, {1, 0}, {-1, 0}, {-1, -1}, {-2, -1}};
    return {{2, 1}, {1, 1}, {1, 0}, {0, 0}, {-1, 0}, {-1, -1}, {-2, -1}};
}

FqMatrix a_conj(const FqMatrix& a)
{
    require_2x2(a);
    if (!a.invertible())
        throw InputError("A^c needs an invertible matrix");
    const FqMatrix j(a.field(), {{0, 1}, {1, 0}});
    return j * a.inverse().transposed() * j;
}

FqMatrix square_rep(const FqMatrix& m)
{
    require_2x2(m);
    const FiniteField& f = m.field();
    if (f.characteristic() == 2)
        return m.frobenius();
    const Fq a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    const Fq two = f.from_int(2);
    FqMatrix s(f, 3, 3);
    s(0, 0) = f.mul(a, a);
    s(0, 1) = f.mul(a, b);
    s(0, 2) = f.mul(b, b);
    s(1, 0) = f.mul(two, f.mul(a, c));
    s(1, 1) = f.add(f.mul(a, d), f.mul(b, c));
    s(1, 2) = f.mul(two, f.mul(b, d));
    s(2, 0) = f.mul(c, c);
    s(2, 1) = f.mul(c, d);
    s(2, 2) = f.mul(d, d);
    return s;
}

FqMatrix embed_A(const FqMatrix& a)
{
    require_2x2(a);
    const Fq det_inv = a.field().inv(a.determinant());
    return FqMatrix::direct_sum({a_conj(a), square_rep(a).scaled(det_inv), a});
}

FqMatrix embed_B(const FqMatrix& b)
{
    require_2x2(b);
    const FiniteField& f = b.field();
    const Fq det = b.determinant();
    std::vector<FqMatrix> blocks{FqMatrix::diagonal(f, {f.inv(det)}), a_conj(b)};
    if (f.characteristic() != 2)
        blocks.push_back(FqMatrix::identity(f, 1));
    blocks.push_back(b);
    blocks.push_back(FqMatrix::diagonal(f, {det}));
    return FqMatrix::direct_sum(blocks);
}

TorusReport verify_torus_weights(int p)
{
    require_p(p);
    const FiniteField& f = FiniteField::get(p, 4);
    TorusReport r;
    r.p = p;
    r.field = f.name();
    r.basis = v_basis(p);
    r.weights = v_weights(p);

    const Fq u = f.generator();
    const FqMatrix ta = embed_A(diag2(f, u));
    const FqMatrix tb = embed_B(diag2(f, u));
    for (std::size_t i = 0; i < ta.rows(); ++i)
        r.exponents.emplace_back(signed_exponent(f, ta(i, i)), signed_exponent(f, tb(i, i)));

    RootVec sum{0, 0};
    for (const auto& w : r.weights) {
        r.pairings.emplace_back(g2().pairing(w, 0), g2().pairing(w, 1));
        sum = sum + w;
        if (w.is_zero())
            r.zero_weight_present = true;
    }
    r.weight_sum_zero = sum.is_zero();

    if (r.exponents.size() != r.pairings.size()) {
        r.message = "dimension " + std::to_string(r.exponents.size()) + " does not match " +
                    std::to_string(r.pairings.size()) + " listed weights";
        return r;
    }
    for (int eps : {1, -1}) {
        bool match = true;
        for (std::size_t i = 0; i < r.exponents.size(); ++i)
            if (r.exponents[i] != std::make_pair(r.pairings[i].first, eps * r.pairings[i].second))
                match = false;
        if (match) {
            r.epsilon = eps;
            break;
        }
    }
    const bool zero_rule = r.zero_weight_present == (p != 2);
    r.ok = r.epsilon != 0 && zero_rule && r.weight_sum_zero;
    if (r.epsilon == 0) {
        r.message = "no global sign matches; exponents:";
        for (std::size_t i = 0; i < r.exponents.size(); ++i)
            r.message += " " + r.basis[i] + "=(" + std::to_string(r.exponents[i].first) + "," +
                         std::to_string(r.exponents[i].second) + ")";
    } else if (!zero_rule) {
        r.message = "zero weight presence is wrong for this characteristic";
    }
    return r;
}

FqMatrix random_gl2(const FiniteField& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    for (;;) {
        FqMatrix m(f, 2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                m(i, j) = f.element(pick(rng));
        if (m.invertible())
            return m;
    }
}

HomomorphismReport homomorphism_check(const FiniteField& f, int samples, std::uint64_t seed)
{
    HomomorphismReport r;
    r.field = f.name();
    r.samples = samples;
    r.embed_A_ok = r.embed_B_ok = r.det_ok = true;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        const FqMatrix x = random_gl2(f, rng);
        const FqMatrix y = random_gl2(f, rng);
        const FqMatrix ax = embed_A(x), ay = embed_A(y), bx = embed_B(x), by = embed_B(y);
        if (r.embed_A_ok && !(embed_A(x * y) == ax * ay)) {
            r.embed_A_ok = false;
            r.witness = "embed_A fails on X=[" + x.format() + "], Y=[" + y.format() + "]";
        }
        if (r.embed_B_ok && !(embed_B(x * y) == bx * by)) {
            r.embed_B_ok = false;
            if (r.witness.empty())
                r.witness = "embed_B fails on X=[" + x.format() + "], Y=[" + y.format() + "]";
        }
        for (const auto* m : {&ax, &bx})
            if (r.det_ok && !(m->determinant() == f.one())) {
                r.det_ok = false;
                if (r.witness.empty())
                    r.witness = "determinant != 1 for X=[" + x.format() + "]";
            }
    }
    r.ok = r.embed_A_ok && r.embed_B_ok && r.det_ok;
    return r;
}

namespace {

struct BlockSpec {
    std::string name;
    std::size_t row0, col0;
    std::string formula;
    // left and right factors of X -> L X R^{-1}
    std::function<FqMatrix(const FqMatrix&)> left, right;
};

FqMatrix twisted(const FqMatrix& a)
{
    return square_rep(a).scaled(a.field().inv(a.determinant()));
}

std::vector<BlockSpec> block_specs()
{
    auto conj = [](const FqMatrix& a) { return a_conj(a); };
    auto self = [](const FqMatrix& a) { return a; };
    return {
        {"Hom(W^vee,W^[2])", 2, 0, "X -> (A^[2] det^-1) X (A^c)^-1", twisted, conj},
        {"Hom(W^vee,W)", 4, 0, "X -> A X (A^c)^-1", self, conj},
        {"Hom(W^[2],W)", 4, 2, "X -> A X (A^[2] det^-1)^-1", self, twisted},
    };
}

// 4x4 matrix of X -> g X g^{-1} restricted to a 2x2 block, in the row-major
// basis of the block. Throws std::logic_error if the image leaves the block.
FqMatrix block_action(const FqMatrix& g, const FqMatrix& ginv, std::size_t r0, std::size_t c0)
{
    const FiniteField& f = g.field();
    FqMatrix rho(f, 4, 4);
    for (std::size_t e = 0; e < 4; ++e) {
        FqMatrix x(f, g.rows(), g.cols());
        x(r0 + e / 2, c0 + e % 2) = f.one();
        const FqMatrix y = g * x * ginv;
        FqMatrix outside = y;
        outside.set_block(r0, c0, FqMatrix(f, 2, 2));
        if (!(outside == FqMatrix(f, g.rows(), g.cols())))
            throw std::logic_error("conjugation leaves the block");
        for (std::size_t k = 0; k < 4; ++k)
            rho(k, e) = y(r0 + k / 2, c0 + k % 2);
    }
    return rho;
}

FqMatrix formula_action(const BlockSpec& b, const FqMatrix& a)
{
    const FiniteField& f = a.field();
    const FqMatrix l = b.left(a);
    const FqMatrix rinv = b.right(a).inverse();
    FqMatrix rho(f, 4, 4);
    for (std::size_t e = 0; e < 4; ++e) {
        FqMatrix x(f, 2, 2);
        x(e / 2, e % 2) = f.one();
        const FqMatrix y = l * x * rinv;
        for (std::size_t k = 0; k < 4; ++k)
            rho(k, e) = y(k / 2, k % 2);
    }
    return rho;
}

}  // namespace

AdjointBlockReport adjoint_block_check(int samples, std::uint64_t seed)
{
    AdjointBlockReport r;
    const auto specs = block_specs();
    const TorusReport torus = verify_torus_weights(2);
    for (const auto& s : specs) {
        AdjointBlock b;
        b.name = s.name;
        b.row0 = s.row0;
        b.col0 = s.col0;
        b.formula = s.formula;
        b.formula_ok = true;
        // entry (i, j) scales by the character of basis i minus that of basis j
        for (std::size_t e = 0; e < 4; ++e) {
            const auto& ei = torus.exponents[s.row0 + e / 2];
            const auto& ej = torus.exponents[s.col0 + e % 2];
            const int z1 = ei.first - ej.first;
            const int z2 = torus.epsilon * (ei.second - ej.second);
            b.exponents.push_back(z1);
            b.weights.push_back(weight_from_pairings(z1, z2));
        }
        r.blocks.push_back(std::move(b));
    }

    std::mt19937_64 rng(seed);
    for (int k : {1, 2, 4}) {
        const FiniteField& f = FiniteField::get(2, k);
        r.fields.push_back(f.name());
        std::vector<FqMatrix> mats{FqMatrix::identity(f, 2), FqMatrix(f, {{1, 1}, {0, 1}})};
        for (int s = 0; s < samples; ++s)
            mats.push_back(random_gl2(f, rng));
        for (const auto& a : mats) {
            const FqMatrix g = embed_A(a);
            const FqMatrix ginv = g.inverse();
            for (std::size_t i = 0; i < specs.size(); ++i) {
                if (!r.blocks[i].formula_ok)
                    continue;
                bool same = false;
                try {
                    same = block_action(g, ginv, specs[i].row0, specs[i].col0) == formula_action(specs[i], a);
                } catch (const std::logic_error&) {
                    same = false;
                }
                if (!same) {
                    r.blocks[i].formula_ok = false;
                    if (r.witness.empty())
                        r.witness = specs[i].name + " fails for A=[" + a.format() + "] over " + f.name();
                }
            }
        }
        r.samples += static_cast<int>(mats.size());
    }

    std::vector<int> ex = r.blocks[2].exponents;
    std::sort(ex.begin(), ex.end());
    r.exponents_ok = ex == std::vector<int>{-3, -1, 1, 3};

    // Hom_L(block 1, block 3): T rho1(A) = rho3(A) T for a generating set of A over F16
    {
        const FiniteField& f = FiniteField::get(2, 4);
        std::vector<FqMatrix> gens{diag2(f, f.generator()), FqMatrix(f, {{1, 1}, {0, 1}}),
                                   FqMatrix(f, {{1, 0}, {1, 1}}), FqMatrix::diagonal(f, {f.generator(), f.one()})};
        std::mt19937_64 grng(seed + 1);
        for (int s = 0; s < 4; ++s)
            gens.push_back(random_gl2(f, grng));
        FqMatrix sys(f, 16 * gens.size(), 16);
        std::size_t row = 0;
        for (const auto& a : gens) {
            const FqMatrix r1 = formula_action(specs[0], a);
            const FqMatrix r3 = formula_action(specs[2], a);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j, ++row)
                    for (std::size_t k = 0; k < 4; ++k) {
                        sys(row, i * 4 + k) = f.add(sys(row, i * 4 + k), r1(k, j));
                        sys(row, k * 4 + j) = f.sub(sys(row, k * 4 + j), r3(i, k));
                    }
        }
        const auto null = sys.nullspace();
        r.intertwiner_dim = null.size();
        if (null.size() == 1) {
            FqMatrix t(f, 4, 4);
            for (std::size_t e = 0; e < 16; ++e)
                t(e / 4, e % 4) = null[0][e];
            r.intertwiner_invertible = t.invertible();
        }
    }

    r.ok = std::all_of(r.blocks.begin(), r.blocks.end(), [](const AdjointBlock& b) { return b.formula_ok; }) &&
           r.exponents_ok && r.intertwiner_dim == 1 && r.intertwiner_invertible;
    if (r.ok)
        r.witness.clear();
    else if (r.witness.empty())
        r.witness = !r.exponents_ok ? "torus exponents on Hom(W^[2],W) differ from {3,1,-1,-3}"
                                    : "blocks Hom(W^vee,W^[2]) and Hom(W^[2],W) are not isomorphic";
    return r;
}

FqMatrix one_param_matrix(const FiniteField& f, Fq a)
{
    FqMatrix m = FqMatrix::identity(f, 6);
    m(3, 1) = a;
    m(4, 2) = a;
    m(5, 0) = f.mul(a, a);
    return m;
}

OneParamReport one_param_check(const FiniteField& f)
{
    if (f.characteristic() != 2)
        throw InputError("the one-parameter subgroup matrix is the characteristic 2 form; got " + f.name());
    OneParamReport r;
    r.field = f.name();
    r.additive = r.equivariant = r.unipotent = true;
    const std::uint32_t q = f.order();
    const FqMatrix id = FqMatrix::identity(f, 6);
    const RootVec weight{-2, -1};
    const int eps = verify_torus_weights(2).epsilon;
    for (std::uint32_t i = 0; i < q; ++i) {
        const Fq a = f.element(i);
        const FqMatrix ma = one_param_matrix(f, a);
        for (std::uint32_t j = 0; j < q; ++j) {
            const Fq b = f.element(j);
            ++r.pairs;
            if (r.additive && !(ma * one_param_matrix(f, b) == one_param_matrix(f, f.add(a, b)))) {
                r.additive = false;
                r.witness = "M(" + f.format(a) + ") M(" + f.format(b) + ") != M(a+b)";
            }
        }
        FqMatrix n = ma + id;  // M(a) - I in characteristic 2
        const FqMatrix n2 = n * n;
        if (r.unipotent && (!(ma.determinant() == f.one()) || !(n2 == FqMatrix(f, 6, 6)))) {
            r.unipotent = false;
            if (r.witness.empty())
                r.witness = "M(" + f.format(a) + ") is not unipotent";
        }
        // torus elements of both factors act through the character of -(2,1)
        for (std::uint32_t k = 1; k < q; ++k) {
            const Fq u = f.element(k);
            const Fq chi_a = f.pow(u, g2().pairing(weight, 0));
            const Fq chi_b = f.pow(u, eps * g2().pairing(weight, 1));
            for (const auto& [t, chi] : {std::make_pair(embed_A(diag2(f, u)), chi_a),
                                         std::make_pair(embed_B(diag2(f, u)), chi_b)}) {
                if (r.equivariant && !(t * ma * t.inverse() == one_param_matrix(f, f.mul(chi, a)))) {
                    r.equivariant = false;
                    if (r.witness.empty())
                        r.witness = "torus action on M(" + f.format(a) + ") is not by a character";
                }
            }
        }
    }
    r.ok = r.additive && r.equivariant && r.unipotent;
    return r;
}

}  // namespace canred
