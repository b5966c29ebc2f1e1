#include "chenranks/torsion.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "chenranks/elim.hpp"
#include "chenranks/errors.hpp"
#include "chenranks/polyring.hpp"

namespace chenranks {

using exactla::GfpOps;
using exactla::IntColumns;
using exactla::PrimeField;
using exactla::QOps;
using exactla::RankMode;
using exactla::RankStrategy;
using exactla::SparseMatrix;

namespace {

std::uint64_t product_code(std::uint64_t a, int da, std::uint64_t b, int db) {
    std::vector<int> va = MonomialBasis::decode(a, da);
    std::vector<int> vb = MonomialBasis::decode(b, db);
    va.insert(va.end(), vb.begin(), vb.end());
    std::sort(va.begin(), va.end());
    return MonomialBasis::encode(va);
}

// The kill space is computed as the kernel of the map sending a class in B_k
// to the tuple of its products with all monomials of S_d, each reduced to the
// free coordinates of B_{k+d}. Relation columns of degree k map into relation
// columns of degree k+d, so the map is well defined on B_k and its kernel
// dimension is dim B_k minus the rank of the assembled matrix.
long long kill_dimension_gfp(const AlexanderInvariant& inv, int k, int d, PrimeField F) {
    long long c = inv.quotient_dim();
    if (c == 0) return 0;
    int n = inv.n();
    long long s_src = to_i64(monomial_count(n, k - 2));
    long long dim_bk = c * s_src - gfp_eliminate(inv.reduced_koszul(k), F, false).rank;
    auto elim = gfp_eliminate(inv.reduced_koszul(k + d), F, true);
    const exactla::GfpQuotient& q = *elim.quotient;
    std::uint32_t nfree = static_cast<std::uint32_t>(q.free_rows.size());
    if (nfree == 0) return dim_bk;
    MonomialBasis src(n, k - 2);
    MonomialBasis mult(n, d);
    MonomialBasis dst(n, k + d - 2);
    GfpOps ops{F};
    std::vector<std::uint64_t> scratch(nfree, 0);
    IntColumns phi;
    phi.rows = static_cast<std::uint32_t>(mult.size()) * nfree;
    for (int nu = 0; nu < src.size(); ++nu)
        for (long long f = 0; f < c; ++f) {
            std::vector<std::pair<std::uint32_t, std::int64_t>> column;
            for (int m = 0; m < mult.size(); ++m) {
                std::uint32_t row =
                    static_cast<std::uint32_t>(dst.index(product_code(
                        src.codes[static_cast<std::size_t>(nu)], k - 2,
                        mult.codes[static_cast<std::size_t>(m)], d))) *
                        static_cast<std::uint32_t>(c) +
                    static_cast<std::uint32_t>(f);
                std::vector<std::pair<std::uint32_t, std::uint64_t>> unit{{row, 1}};
                for (const auto& [fi, val] : q.reduce(unit, ops, scratch))
                    column.emplace_back(static_cast<std::uint32_t>(m) * nfree + fi,
                                        static_cast<std::int64_t>(val));
            }
            phi.cols.push_back(std::move(column));
        }
    long long value = dim_bk - gfp_eliminate(phi, F, false).rank;
    if (value < 0) throw InvariantError("negative torsion dimension");
    return value;
}

long long kill_dimension_exact(const AlexanderInvariant& inv, int k, int d) {
    long long c = inv.quotient_dim();
    if (c == 0) return 0;
    int n = inv.n();
    long long s_src = to_i64(monomial_count(n, k - 2));
    long long dim_bk = c * s_src - q_eliminate(inv.reduced_koszul(k), false).rank;
    auto elim = q_eliminate(inv.reduced_koszul(k + d), true);
    const exactla::QQuotient& q = *elim.quotient;
    std::uint32_t nfree = static_cast<std::uint32_t>(q.free_rows.size());
    if (nfree == 0) return dim_bk;
    MonomialBasis src(n, k - 2);
    MonomialBasis mult(n, d);
    MonomialBasis dst(n, k + d - 2);
    QOps ops;
    std::vector<Rational> scratch(nfree, Rational(0));
    SparseMatrix phi(static_cast<int>(mult.size()) * static_cast<int>(nfree),
                     static_cast<int>(src.size()) * static_cast<int>(c));
    int column = 0;
    for (int nu = 0; nu < src.size(); ++nu)
        for (long long f = 0; f < c; ++f, ++column)
            for (int m = 0; m < mult.size(); ++m) {
                std::uint32_t row =
                    static_cast<std::uint32_t>(dst.index(product_code(
                        src.codes[static_cast<std::size_t>(nu)], k - 2,
                        mult.codes[static_cast<std::size_t>(m)], d))) *
                        static_cast<std::uint32_t>(c) +
                    static_cast<std::uint32_t>(f);
                std::vector<std::pair<std::uint32_t, Rational>> unit{{row, Rational(1)}};
                for (const auto& [fi, val] : q.reduce(unit, ops, scratch))
                    phi.set(static_cast<int>(static_cast<std::uint32_t>(m) * nfree + fi), column,
                            val);
            }
    phi.finalize();
    long long value = dim_bk - q_eliminate(phi, false).rank;
    if (value < 0) throw InvariantError("negative torsion dimension");
    return value;
}

long long kill_dimension(const AlexanderInvariant& inv, int k, int d,
                         const RankStrategy& strategy) {
    switch (strategy.mode) {
    case RankMode::exact:
        return kill_dimension_exact(inv, k, d);
    case RankMode::modular:
        return kill_dimension_gfp(inv, k, d, PrimeField{exactla::strategy_prime(strategy, 0)});
    case RankMode::verify: {
        std::uint64_t idx = 0;
        for (int round = 0; round < 4; ++round) {
            long long a =
                kill_dimension_gfp(inv, k, d, PrimeField{exactla::strategy_prime(strategy, idx++)});
            long long b =
                kill_dimension_gfp(inv, k, d, PrimeField{exactla::strategy_prime(strategy, idx++)});
            if (a == b) return a;
        }
        throw ResourceError("verify strategy: independent primes kept disagreeing");
    }
    }
    throw InputError("unknown rank mode");
}

} // namespace

Int bprime_hilbert(const HVector& h, int k) {
    if (k < 2) throw InputError("the comparison module starts in degree 2");
    Int total = 0;
    for (const auto& [r, count] : h.h) total += Int(static_cast<long>(count)) * bp_hilbert(r, k);
    return total;
}

TorsionValue h0_torsion(const AlexanderInvariant& invariant, int k, int window,
                        const RankStrategy& strategy) {
    if (k < 2) throw InputError("torsion starts in degree 2");
    if (window < 1) throw InputError("the torsion window must be at least 1");
    TorsionValue out;
    out.value = kill_dimension(invariant, k, 1, strategy);
    out.window_used = 1;
    while (out.window_used < window) {
        long long next = kill_dimension(invariant, k, out.window_used + 1, strategy);
        ++out.window_used;
        if (next < out.value)
            throw InvariantError("the torsion kill space shrank as the window grew");
        if (next == out.value) {
            out.stabilized = true;
            break;
        }
        out.value = next;
    }
    return out;
}

TorsionReport sheaf_sequence_report(const std::vector<long long>& b,
                                    const std::vector<long long>& bprime,
                                    const std::vector<long long>& h0, int k_min) {
    if (k_min < 2) throw InputError("the table starts in degree 2");
    if (b.empty() || b.size() != bprime.size() || b.size() != h0.size())
        throw InputError("the three dimension sequences must cover the same degrees");
    TorsionReport report;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0 || bprime[i] < 0 || h0[i] < 0)
            throw InputError("dimensions must be nonnegative");
        TorsionRow row;
        row.k = k_min + static_cast<int>(i);
        row.b = b[i];
        row.bprime = bprime[i];
        row.h0 = h0[i];
        row.h1 = bprime[i] - b[i] + h0[i];
        if (row.h1 < 0) report.consistent = false;
        report.rows.push_back(row);
    }
    return report;
}

TorsionReport torsion_table(const AlexanderInvariant& invariant, const HVector& h, int k_min,
                            int k_max, int window, const RankStrategy& strategy) {
    if (k_min < 2 || k_min > k_max) throw InputError("bad degree range");
    std::vector<long long> b, bp, h0;
    std::vector<TorsionValue> values;
    for (int k = k_min; k <= k_max; ++k) {
        b.push_back(to_i64(invariant.hilbert(k, strategy)));
        bp.push_back(to_i64(bprime_hilbert(h, k)));
        values.push_back(h0_torsion(invariant, k, window, strategy));
        h0.push_back(values.back().value);
    }
    TorsionReport report = sheaf_sequence_report(b, bp, h0, k_min);
    for (std::size_t i = 0; i < report.rows.size(); ++i)
        report.rows[i].h0_stabilized = values[i].stabilized;
    return report;
}

} // namespace chenranks
