#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dio/counting.hpp"

namespace dio {

// Closed-form mean value constant for the standard equation, a >= 2:
//   C(a) = 2 psi((a-1)/a) + 2 sum_{p|a} ln p / (p-1) + ln a + 2 gamma + 1.
double constant_c(std::uint64_t a);

// Constant obtained from a full residue evaluation of the generating
// Dirichlet series (the double pole at s = 1 of zeta(s)^2 prod (1-p^-s)^2
// contributes 2 gamma + 2 sum_{p|a} ln p/(p-1) on top of the log term):
//   C*(a) = 2 psi((a-1)/a) + ln a + 1.
// Empirically S(N) - (N ln N - C*(a) N)/a stays within the square root
// bound, while using constant_c leaves a linear drift of
// (2 gamma + 2 sum_{p|a} ln p/(p-1)) * N / a in the residue. See the scan
// command's --corrected-constant flag.
double constant_c_corrected(std::uint64_t a);

// (N ln N - C(a) N) / a with C(a) = constant_c(a). Needs N >= 1.
double main_term(std::uint64_t a, std::uint64_t N);

struct MeanValueRow {
    std::uint64_t a = 0;
    std::uint64_t N = 0;
    SolutionCount S = 0;
    double c_of_a = 0;
    double main = 0;
    double delta = 0;   // S - main, computed in one place to avoid cancellation surprises
    double bound = 0;   // phi(a) sqrt(N/a) (ln aN)^2
    double ratio = 0;   // |delta| / bound
    bool warn_a_large = false;  // a > N^(1/3) / ln N: asymptotic regime not reached
};

// One summatory data point via the hyperbola count. corrected_constant swaps
// constant_c for constant_c_corrected in main/delta/bound bookkeeping.
MeanValueRow evaluate_row(std::uint64_t a, std::uint64_t N, bool corrected_constant = false);

// Rows for an increasing N grid. Rows are independent; threads > 1 computes
// them concurrently, output order follows the grid either way.
std::vector<MeanValueRow> scan(std::uint64_t a, std::span<const std::uint64_t> grid,
                               unsigned threads = 1, bool corrected_constant = false);

struct ExponentFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
    std::size_t rows_used = 0;
};

// Least squares of ln |delta| against ln N. Rows with delta == 0 are
// dropped; at least 4 usable rows of a single a required.
ExponentFit fit_error_exponent(std::span<const MeanValueRow> rows);

// Parity-weighted mean of L(1, chi) over non-principal characters:
//   (1/phi(a)) sum_{chi != chi0} chi(-1) L(1, chi),
// which is real (conjugate characters pair up). The digamma route evaluates
// each L by closed form; the series route truncates at w. The identity under
// test says both equal l_parity_mean_closed:
//   -(1/a) (psi((a-1)/a) + sum_{p|a} ln p/(p-1) + ln a + gamma).
double l_parity_mean(std::uint64_t a);
double l_parity_mean_series(std::uint64_t a, std::uint64_t w);
double l_parity_mean_closed(std::uint64_t a);

struct HarmonicCheck {
    double lhs = 0;
    double rhs = 0;
    double scaled_gap = 0;  // w * |lhs - rhs|, which the identity keeps O(1)
};

// sum_{n <= w, n = -1 (mod a)} 1/n against (ln w - psi((a-1)/a) - ln a)/a.
HarmonicCheck progression_harmonic_check(std::uint64_t a, std::uint64_t w);

struct CheckPair {
    double lhs = 0;
    double rhs = 0;
};

// -sum_{m|a} mu(m) ln m / m  ==  (phi(a)/a) sum_{p|a} ln p/(p-1).
CheckPair mobius_log_identity_check(std::uint64_t a);

// integral_1^inf (a {(t+1)/a} - {t} - 1) / t^2 dt == psi((a-1)/a) + ln a + gamma.
// The integrand is constant on every [k, k+1), so the numeric side is the
// exact piece sum up to t_max plus the first-order tail; the residual error
// is well under (a+2)/t_max. lhs = numeric, rhs = closed form.
CheckPair fractional_integral_check(std::uint64_t a, std::uint64_t t_max);

}  // namespace dio
