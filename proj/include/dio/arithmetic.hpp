#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dio {

// Thrown whenever a 64-bit count or intermediate would wrap. Counts must
// never be silently truncated, so every arithmetic step that can exceed the
// type goes through the checked helpers below.
struct OverflowError : std::overflow_error {
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

// Exact nonnegative solution count. Plain 64-bit; all producers use checked
// arithmetic, so a returned value is always exact.
using SolutionCount = std::uint64_t;

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y);
std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y);

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Floor square root, pure integer Newton iteration plus a correction loop so
// the boundary cases (m = k^2 - 1, k^2, near 2^63) come out exact.
std::uint64_t isqrt(std::uint64_t m);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

struct Factorization {
    std::uint64_t value = 1;
    // (prime, exponent), primes strictly increasing
    std::vector<std::pair<std::uint64_t, int>> factors;
};

// Trial division (wheel) up to 10^6, then Miller-Rabin + Pollard rho for the
// cofactor. Accepts 1 <= m <= 2^63 - 1; factorize(1) has an empty factor list.
Factorization factorize(std::uint64_t m);

// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(const Factorization& f);

std::uint64_t euler_phi(const Factorization& f);

// Moebius mu: 0 if any square divides, else (-1)^(number of primes).
int moebius(const Factorization& f);

// |{1 <= v <= x : v = r (mod a)}| for 0 <= r < a.
SolutionCount count_in_progression(std::uint64_t x, std::uint64_t a, std::uint64_t r);

// Generator of (Z/q)^* for an odd prime power q = p^e <= 2^31. The smallest
// root mod p is found first, then lifted: g with g^(p-1) != 1 (mod p^2)
// generates every power p^e, otherwise g + p does.
std::uint64_t primitive_root(std::uint64_t prime_power);

}  // namespace dio
