#include "discut/modular.hpp"

#include "discut/graph.hpp"

namespace discut {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1u) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("zero has no inverse");
    return powmod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> gen_primes(std::uint64_t M, std::size_t count) {
    if (count == 0) throw InvalidInput("prime count must be positive");
    std::vector<std::uint64_t> out;
    std::uint64_t c = M;
    while (out.size() < count) {
        if (c == ~std::uint64_t{0}) throw OverflowError("no 64-bit prime above the requested bound");
        ++c;
        if (is_prime(c)) out.push_back(c);
    }
    return out;
}

std::vector<std::uint64_t> interpolate_coefficients(std::span<const std::uint64_t> evals, std::uint64_t p) {
    const std::size_t n = evals.size();
    if (n == 0) return {};
    const std::uint64_t D = n - 1;
    if (p <= D) throw InvalidInput("interpolation prime must exceed the degree");

    // master(x) = prod_{j=0..D} (x - j), degree D+1
    std::vector<std::uint64_t> master(n + 1, 0);
    master[0] = 1;
    for (std::uint64_t j = 0; j <= D; ++j) {
        for (std::size_t i = j + 1; i > 0; --i)
            master[i] = submod(master[i - 1], mulmod(master[i], j, p), p);
        master[0] = submod(0, mulmod(master[0], j, p), p);
    }
    const auto& poly = master;

    std::vector<std::uint64_t> fact(n, 1);
    for (std::size_t i = 1; i < n; ++i) fact[i] = mulmod(fact[i - 1], i % p, p);

    std::vector<std::uint64_t> coeff(n, 0), quotient(n);
    for (std::uint64_t i = 0; i <= D; ++i) {
        if (evals[i] % p == 0) continue;
        // denominator prod_{j != i} (i - j) = i! * (-1)^(D-i) * (D-i)!
        std::uint64_t denom = mulmod(fact[i], fact[D - i], p);
        if ((D - i) & 1u) denom = submod(0, denom, p);
        const std::uint64_t scale = mulmod(evals[i] % p, invmod(denom, p), p);
        // synthetic division of poly by (x - i), from the top coefficient
        std::uint64_t carry = 0;
        for (std::size_t d = n; d > 0; --d) {
            carry = addmod(poly[d], mulmod(carry, i, p), p);
            quotient[d - 1] = carry;
        }
        for (std::size_t d = 0; d < n; ++d) coeff[d] = addmod(coeff[d], mulmod(quotient[d], scale, p), p);
    }
    return coeff;
}

}  // namespace discut
