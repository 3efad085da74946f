#include "dio/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dio {

double euler_gamma() { return std::numbers::egamma_v<double>; }

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: argument must be positive");

    // Shift to x >= 10: psi(x) = psi(x + k) - sum_{j<k} 1/(x + j). The shift
    // terms are accumulated compensated because for tiny x the leading 1/x
    // dwarfs the result's final magnitude budget.
    KahanSum shift;
    while (x < 10.0) {
        shift.add(1.0 / x);
        x += 1.0;
    }

    // B_{2k}/(2k) for k = 1..7
    static constexpr double kCoeff[7] = {
        1.0 / 12.0,   -1.0 / 120.0,    1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    const double z = 1.0 / (x * x);
    double poly = kCoeff[6];
    for (int k = 5; k >= 0; --k) poly = poly * z + kCoeff[k];
    return std::log(x) - 0.5 / x - z * poly - shift.value();
}

void KahanSum::add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
        comp_ += (sum_ - t) + x;
    else
        comp_ += (x - t) + sum_;
    sum_ = t;
}

double compensated_sum(std::span<const double> xs) {
    KahanSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

double progression_harmonic(std::uint64_t modulus, std::uint64_t residue, std::uint64_t limit) {
    if (modulus == 0 || residue >= modulus)
        throw std::invalid_argument("progression_harmonic: need modulus >= 1, 0 <= residue < modulus");
    KahanSum s;
    std::uint64_t n = (residue == 0) ? modulus : residue;
    for (; n <= limit; n += modulus) s.add(1.0 / static_cast<double>(n));
    return s.value();
}

std::vector<double> harmonic_by_residue(std::uint64_t modulus, std::uint64_t limit) {
    if (modulus == 0) throw std::invalid_argument("harmonic_by_residue: modulus must be >= 1");
    std::vector<KahanSum> acc(modulus);
    std::uint64_t r = 1 % modulus;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        acc[r].add(1.0 / static_cast<double>(n));
        if (++r == modulus) r = 0;
    }
    std::vector<double> out(modulus);
    for (std::uint64_t i = 0; i < modulus; ++i) out[i] = acc[i].value();
    return out;
}

}  // namespace dio
