#ifndef CHENRANKS_RANK_HPP
#define CHENRANKS_RANK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "chenranks/elim.hpp"
#include "chenranks/sparse.hpp"

namespace chenranks::exactla {

enum class RankMode { exact, modular, verify };

// verify (the default) computes the rank modulo two independently derived
// random primes > 2^31 and retries with fresh primes on disagreement. The
// modular rank can only undershoot the rational rank (a nonzero minor mod p is
// nonzero over Q), so agreement of independent primes is a one-sided check
// with overwhelming margin; exact mode is the full certificate.
struct RankStrategy {
    RankMode mode = RankMode::verify;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> prime; // modular mode only; must exceed 2^31
};

int rank(const SparseMatrix& m, const RankStrategy& strategy);

// Hot path for internally built integer matrices (same strategy semantics).
std::uint32_t rank_columns(const IntColumns& m, const RankStrategy& strategy);

// Exact right null space, returned as a canonical reduced-row-echelon basis
// (rows of length m.cols). Intended for small systems.
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m);

// Canonical reduced row-echelon form of a list of vectors: zero rows dropped,
// pivots 1, pivot columns cleared, rows ordered by pivot. Two spanning sets of
// the same subspace produce identical output.
std::vector<std::vector<Rational>> rref_canonical(const std::vector<std::vector<Rational>>& rows);

// Dense exact RREF in place; returns pivot column indices. Shared helper for
// the small-system operations above.
std::vector<int> dense_rref(std::vector<std::vector<Rational>>& rows);

std::uint64_t strategy_prime(const RankStrategy& strategy, std::uint64_t index);

} // namespace chenranks::exactla

#endif
