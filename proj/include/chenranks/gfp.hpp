#ifndef CHENRANKS_GFP_HPP
#define CHENRANKS_GFP_HPP

#include <cstdint>
#include <random>

#include "chenranks/rational.hpp"

namespace chenranks::exactla {

// Z/p arithmetic for word-sized primes. Primes are drawn in [2^61, 2^62), so
// sums never overflow and products fit in 128 bits.
struct PrimeField {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t from_i64(std::int64_t v) const {
        std::int64_t m = v % static_cast<std::int64_t>(p);
        return m < 0 ? static_cast<std::uint64_t>(m + static_cast<std::int64_t>(p)) : static_cast<std::uint64_t>(m);
    }
    std::uint64_t from_int(const Int& z) const {
        // mpz_fdiv_ui floors, so the remainder is already in [0, p).
        return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
    }
    // num/den mod p; returns false if p divides den (caller redraws the prime).
    bool from_rational(const Rational& q, std::uint64_t& out) const {
        std::uint64_t den = from_int(q.get_den());
        if (den == 0) return false;
        out = mul(from_int(q.get_num()), inv(den));
        return true;
    }
};

bool is_prime_u64(std::uint64_t n);

// Uniform-ish random prime in [2^61, 2^62). Always > 2^31 as required.
std::uint64_t random_prime(std::mt19937_64& rng);

// The i-th prime derived from a seed (i = 0, 1, ... index independent draws).
std::uint64_t derived_prime(std::uint64_t seed, std::uint64_t index);

} // namespace chenranks::exactla

#endif
