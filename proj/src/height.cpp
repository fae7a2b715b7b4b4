#include "canred/height.hpp"

#include "canred/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace canred {

namespace {

bool supported_on(const RootVec& alpha, const IndexSet& levi)
{
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] != 0 && !std::binary_search(levi.begin(), levi.end(), static_cast<int>(i)))
            return false;
    return true;
}

}  // namespace

Rational n_levi(const RootSystem& rs, const IndexSet& levi, const WeightVec& lambda)
{
    IndexSet sorted(levi);
    std::sort(sorted.begin(), sorted.end());
    Rational total(0);
    for (const auto& alpha : rs.positive_roots())
        if (supported_on(alpha, sorted))
            total += rs.coroot_pairing(lambda, alpha);
    return total;
}

Rational omega_norm(const RootSystem& rs, int k)
{
    if (k < 0 || k >= rs.rank())
        throw InputError("simple index out of range");
    const auto& n = rs.fundamental_weights();
    Rational row(0);
    for (int j = 0; j < rs.rank(); ++j)
        row += n(k, j);
    Rational q = row / n(k, k);
    q.canonicalize();
    return q;
}

Rational n_maximal_shortcut(const RootSystem& rs, int k, const WeightVec& lambda)
{
    Rational v = 2 * (lambda.coordinate_sum() - lambda[k] * omega_norm(rs, k));
    v.canonicalize();
    return v;
}

PieceHeight ht_piece(const Parabolic& p, const GradedPiece& piece)
{
    const auto& rs = p.root_system();
    bool found = false;
    PieceHeight best;
    for (const auto& w : piece.weights) {
        const RootVec beta = -w;
        const WeightVec lambda(beta);
        if (!rs.is_dominant(lambda, p.levi()))
            continue;
        Rational h = n_levi(rs, p.levi(), lambda);
        if (!found || h > best.ht || (h == best.ht && beta > best.argmax)) {
            best.ht = h;
            best.argmax = beta;
            found = true;
        }
    }
    if (!found)
        throw std::logic_error("graded piece without a Levi-dominant weight");
    return best;
}

std::vector<HeightRow> ht_table(const RootSystem& rs)
{
    std::vector<HeightRow> rows;
    for (int k = 0; k < rs.rank(); ++k) {
        const Parabolic p(rs, IndexSet{k});
        HeightRow row;
        row.k = k;
        row.omega_norm = omega_norm(rs, k);
        bool first = true;
        for (const auto& piece : subquotient_partition(p)) {
            const PieceHeight h = ht_piece(p, piece);
            // across pieces the lowest level attaining the maximum wins
            if (first || h.ht > row.ht) {
                row.ht = h.ht;
                row.argmax_root = h.argmax;
                first = false;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

SafeCharacteristic min_safe_char(const RootSystem& rs)
{
    SafeCharacteristic out;
    out.ht_max = 0;
    for (const auto& row : ht_table(rs))
        out.ht_max = std::max(out.ht_max, row.ht);
    // least integer strictly above ht_max
    mpz_class floor_ht = out.ht_max.get_num() / out.ht_max.get_den();
    long candidate = floor_ht.get_si() + 1;
    while (!is_prime(candidate))
        ++candidate;
    out.bound = candidate;
    return out;
}

std::vector<GradedPiece> low_height_failures(const Parabolic& p, long prime)
{
    if (!is_prime(prime))
        throw InputError(std::to_string(prime) + " is not a prime");
    std::vector<GradedPiece> out;
    for (const auto& piece : subquotient_partition(p))
        if (ht_piece(p, piece).ht >= prime)
            out.push_back(piece);
    return out;
}

}  // namespace canred
