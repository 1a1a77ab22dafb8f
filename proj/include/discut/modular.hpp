#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace discut {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    if ((a | b) < (std::uint64_t{1} << 32)) return (a * b) % p;
    __extension__ using u128 = unsigned __int128;
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t r = a + b;
    return (r >= p || r < a) ? r - p : r;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + (p - b); }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Inverse modulo a prime p (Fermat); a must be nonzero mod p.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// The `count` smallest primes strictly greater than M. Throws OverflowError
/// when the search would leave 64-bit range.
std::vector<std::uint64_t> gen_primes(std::uint64_t M, std::size_t count);

/// Coefficients a_0..a_D of the unique polynomial of degree <= D through
/// (j, evals[j]) for j = 0..D, modulo a prime p > D.
std::vector<std::uint64_t> interpolate_coefficients(std::span<const std::uint64_t> evals, std::uint64_t p);

}  // namespace discut
