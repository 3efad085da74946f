#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dio {

// Euler-Mascheroni constant as the standard library's audited literal.
double euler_gamma();

// Digamma psi(x) for x > 0. Absolute error <= 1e-12 over [1e-3, 1e6].
// Recurrence-shifts the argument to >= 10, then applies the asymptotic series
//   psi(x) ~ ln x - 1/(2x) - sum B_{2k} / (2k x^{2k}),  k = 1..7,
// whose first omitted term at x = 10 is below 5e-17.
double digamma(double x);

// Neumaier-compensated accumulator. The running error stays bounded by
// ~2 eps * sum |terms| regardless of length, and cancellation cases like
// {1e16, 1, -1e16} come out exact.
class KahanSum {
  public:
    void add(double x);
    KahanSum& operator+=(double x) {
        add(x);
        return *this;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double compensated_sum(std::span<const double> xs);

// sum of 1/n over n <= limit with n = residue (mod modulus), compensated.
double progression_harmonic(std::uint64_t modulus, std::uint64_t residue, std::uint64_t limit);

// Same sums for every residue class at once; one pass over n <= limit.
// Index r of the result is the class n = r (mod modulus).
std::vector<double> harmonic_by_residue(std::uint64_t modulus, std::uint64_t limit);

}  // namespace dio
