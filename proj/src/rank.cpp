#include "chenranks/rank.hpp"

#include <algorithm>

#include "chenranks/errors.hpp"

namespace chenranks::exactla {

std::uint64_t strategy_prime(const RankStrategy& strategy, std::uint64_t index) {
    if (strategy.prime) {
        if (*strategy.prime <= (1ull << 31) || !is_prime_u64(*strategy.prime))
            throw InputError("modular strategy needs a prime > 2^31");
        return *strategy.prime;
    }
    return derived_prime(strategy.seed, index);
}

namespace {

constexpr int kVerifyRounds = 4;

template <typename EliminateModular, typename EliminateExact>
std::uint32_t dispatch_rank(const RankStrategy& strategy, EliminateModular mod_rank,
                            EliminateExact exact_rank) {
    switch (strategy.mode) {
        case RankMode::exact:
            return exact_rank();
        case RankMode::modular: {
            bool bad = false;
            std::uint64_t r = mod_rank(strategy_prime(strategy, 0), &bad);
            std::uint64_t idx = 1;
            while (bad) {
                if (idx > kVerifyRounds) throw ResourceError("no usable prime found");
                r = mod_rank(derived_prime(strategy.seed, idx++), &bad);
            }
            return static_cast<std::uint32_t>(r);
        }
        case RankMode::verify: {
            std::uint64_t idx = 0;
            for (int round = 0; round < kVerifyRounds; ++round) {
                bool bad1 = false, bad2 = false;
                std::uint64_t p1 = derived_prime(strategy.seed, idx++);
                std::uint64_t p2 = derived_prime(strategy.seed, idx++);
                std::uint64_t r1 = mod_rank(p1, &bad1);
                if (bad1) continue;
                std::uint64_t r2 = mod_rank(p2, &bad2);
                if (bad2) continue;
                if (r1 == r2) return static_cast<std::uint32_t>(r1);
                // prime collision: at least one prime divided a critical minor
            }
            throw ResourceError("verify strategy: independent primes kept disagreeing");
        }
    }
    throw InputError("unknown rank mode");
}

} // namespace

int rank(const SparseMatrix& m, const RankStrategy& strategy) {
    auto mod_rank = [&](std::uint64_t p, bool* bad) -> std::uint64_t {
        return gfp_eliminate(m, PrimeField{p}, false, bad).rank;
    };
    auto exact_rank = [&]() -> std::uint32_t { return q_eliminate(m, false).rank; };
    return static_cast<int>(dispatch_rank(strategy, mod_rank, exact_rank));
}

std::uint32_t rank_columns(const IntColumns& m, const RankStrategy& strategy) {
    auto mod_rank = [&](std::uint64_t p, bool* bad) -> std::uint64_t {
        if (bad) *bad = false;
        return gfp_eliminate(m, PrimeField{p}, false).rank;
    };
    auto exact_rank = [&]() -> std::uint32_t { return q_eliminate(m, false).rank; };
    return dispatch_rank(strategy, mod_rank, exact_rank);
}

std::vector<int> dense_rref(std::vector<std::vector<Rational>>& rows) {
    std::vector<int> pivot_cols;
    if (rows.empty()) return pivot_cols;
    std::size_t ncols = rows[0].size();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < ncols && pr < rows.size(); ++c) {
        std::size_t sel = pr;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pr], rows[sel]);
        Rational inv = Rational(1) / rows[pr][c];
        for (std::size_t j = c; j < ncols; ++j) rows[pr][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pr || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[pr][j];
        }
        pivot_cols.push_back(static_cast<int>(c));
        ++pr;
    }
    rows.resize(pr);
    return pivot_cols;
}

std::vector<std::vector<Rational>> rref_canonical(const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<Rational>> work = rows;
    dense_rref(work);
    return work;
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
    if (static_cast<std::size_t>(m.rows) * static_cast<std::size_t>(m.cols) > (1u << 22))
        throw ResourceError("kernel_basis is a dense small-system operation");
    std::vector<std::vector<Rational>> rows(
        static_cast<std::size_t>(m.rows), std::vector<Rational>(static_cast<std::size_t>(m.cols), Rational(0)));
    for (int c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.col[static_cast<std::size_t>(c)]) rows[r][static_cast<std::size_t>(c)] = v;
    std::vector<int> piv = dense_rref(rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(m.cols), Rational(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[static_cast<std::size_t>(piv[i])] = -rows[i][static_cast<std::size_t>(f)];
        basis.push_back(std::move(v));
    }
    return rref_canonical(basis);
}

} // namespace chenranks::exactla
