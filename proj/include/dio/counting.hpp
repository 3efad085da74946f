#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dio/arithmetic.hpp"

namespace dio {

// a*x*y - b*x - c*y = n over positive integers x, y. Multiplying by a gives
// (a*x - c)(a*y - b) = a*n + b*c, so solutions correspond to divisor pairs
// u*v = a*n + b*c with u = -c and v = -b (mod a). For n >= 0 both factors are
// positive: a negative pair would force a < min(b, c) and n < 0.
struct Equation {
    std::uint64_t a = 1;
    std::uint64_t b = 1;
    std::uint64_t c = 1;
};

// Definition-level count: walk x, solve for y by exact division. Keeps the
// divisor route honest; no factorization involved.
SolutionCount count_bruteforce(const Equation& eq, std::uint64_t n);

// Same solutions as explicit (x, y) pairs, ascending x.
std::vector<std::pair<std::uint64_t, std::uint64_t>> list_solutions(const Equation& eq, std::uint64_t n);

// Divisor count of a*n + b*c restricted to the two congruence classes.
SolutionCount count_divisor(const Equation& eq, std::uint64_t n);

// Summatory S(N) = sum of counts over 0 <= n <= N, one divisor count per n.
SolutionCount sum_bruteforce(const Equation& eq, std::uint64_t N);

// Summatory for the standard form (b = c = 1, a >= 2) via the hyperbola
// method on M = a*N + 1:
//   S = 2 * sum_{u <= sqrt(M), u = a-1 (mod a)} |{v <= M/u, v = a-1}|
//       - |{u <= sqrt(M), u = a-1}|^2.
// Every pair u*v <= M with u = v = -1 (mod a) has u*v = 1 (mod a), hence
// u*v = a*n + 1 for exactly one 0 <= n <= N.
SolutionCount sum_hyperbola(std::uint64_t a, std::uint64_t N);

}  // namespace dio
