#include "dio/counting.hpp"

#include <stdexcept>

namespace dio {

namespace {

void validate(const Equation& eq) {
    if (eq.a == 0 || eq.b == 0 || eq.c == 0)
        throw std::invalid_argument("equation coefficients must be positive");
}

// a*n + b*c, checked. The exact divisor pairing needs the factorization of
// this value, so it must also stay within the 2^63 - 1 factorization range.
std::uint64_t rhs_product(const Equation& eq, std::uint64_t n) {
    const std::uint64_t M = checked_add(checked_mul(eq.a, n), checked_mul(eq.b, eq.c));
    if (M > 0x7fffffffffffffffULL)
        throw OverflowError("a*n + b*c exceeds 2^63 - 1");
    return M;
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint64_t>> list_solutions(const Equation& eq, std::uint64_t n) {
    validate(eq);
    const std::uint64_t M = rhs_product(eq, n);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sols;
    // u = a*x - c <= M caps x; below that y = (n + b*x) / (a*x - c) exactly
    // or not at all.
    const std::uint64_t x_max = M / eq.a + eq.c / eq.a + 1;
    for (std::uint64_t x = 1; x <= x_max; ++x) {
        const std::uint64_t ax = checked_mul(eq.a, x);
        if (ax <= eq.c) continue;  // u <= 0 has no positive partner for n >= 0
        const std::uint64_t u = ax - eq.c;
        if (u > M) break;
        const std::uint64_t num = checked_add(n, checked_mul(eq.b, x));
        if (num % u == 0) {
            const std::uint64_t y = num / u;
            if (y >= 1) sols.emplace_back(x, y);
        }
    }
    return sols;
}

SolutionCount count_bruteforce(const Equation& eq, std::uint64_t n) {
    return list_solutions(eq, n).size();
}

SolutionCount count_divisor(const Equation& eq, std::uint64_t n) {
    validate(eq);
    const std::uint64_t M = rhs_product(eq, n);
    const std::uint64_t a = eq.a;
    const std::uint64_t want_u = (a - eq.c % a) % a;  // -c mod a
    const std::uint64_t want_v = (a - eq.b % a) % a;  // -b mod a
    SolutionCount count = 0;
    for (std::uint64_t u : divisors(factorize(M))) {
        if (u % a == want_u && (M / u) % a == want_v) ++count;
    }
    return count;
}

SolutionCount sum_bruteforce(const Equation& eq, std::uint64_t N) {
    validate(eq);
    SolutionCount total = 0;
    for (std::uint64_t n = 0; n <= N; ++n) total = checked_add(total, count_divisor(eq, n));
    return total;
}

SolutionCount sum_hyperbola(std::uint64_t a, std::uint64_t N) {
    if (a < 2) throw std::invalid_argument("sum_hyperbola: needs the standard form with a >= 2");
    const std::uint64_t M = rhs_product(Equation{a, 1, 1}, N);  // a*N + 1, checked
    const std::uint64_t root = isqrt(M);
    const std::uint64_t r = a - 1;
    SolutionCount strip = 0;  // sum over u <= sqrt(M) in the class of -1
    for (std::uint64_t u = r; u <= root; u += a)
        strip = checked_add(strip, count_in_progression(M / u, a, r));
    const SolutionCount corner = count_in_progression(root, a, r);
    return checked_add(strip, strip) - checked_mul(corner, corner);
}

}  // namespace dio
