#include "dio/meanvalue.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <future>
#include <stdexcept>

#include "dio/characters.hpp"
#include "dio/special_functions.hpp"

namespace dio {

namespace {

// sum_{p|a} ln p / (p-1)
double prime_log_sum(std::uint64_t a) {
    KahanSum s;
    for (const auto& [p, e] : factorize(a).factors) {
        (void)e;
        s.add(std::log(static_cast<double>(p)) / static_cast<double>(p - 1));
    }
    return s.value();
}

double digamma_tail(std::uint64_t a) {
    return digamma(static_cast<double>(a - 1) / static_cast<double>(a));
}

void require_a(std::uint64_t a) {
    if (a < 2) throw std::invalid_argument("mean value constants need a >= 2");
}

}  // namespace

double constant_c(std::uint64_t a) {
    require_a(a);
    return 2.0 * digamma_tail(a) + 2.0 * prime_log_sum(a) + std::log(static_cast<double>(a)) +
           2.0 * euler_gamma() + 1.0;
}

double constant_c_corrected(std::uint64_t a) {
    require_a(a);
    return 2.0 * digamma_tail(a) + std::log(static_cast<double>(a)) + 1.0;
}

double main_term(std::uint64_t a, std::uint64_t N) {
    require_a(a);
    if (N < 1) throw std::invalid_argument("main_term: N must be >= 1");
    const double n = static_cast<double>(N);
    return (n * std::log(n) - constant_c(a) * n) / static_cast<double>(a);
}

MeanValueRow evaluate_row(std::uint64_t a, std::uint64_t N, bool corrected_constant) {
    require_a(a);
    if (N < 1) throw std::invalid_argument("evaluate_row: N must be >= 1");
    MeanValueRow row;
    row.a = a;
    row.N = N;
    row.S = sum_hyperbola(a, N);
    row.c_of_a = corrected_constant ? constant_c_corrected(a) : constant_c(a);
    const double n = static_cast<double>(N);
    const double af = static_cast<double>(a);
    row.main = (n * std::log(n) - row.c_of_a * n) / af;
    row.delta = static_cast<double>(row.S) - row.main;
    const double phi = static_cast<double>(euler_phi(factorize(a)));
    const double lg = std::log(af * n);
    row.bound = phi * std::sqrt(n / af) * lg * lg;
    row.ratio = std::abs(row.delta) / row.bound;
    row.warn_a_large = af * std::log(n) > std::cbrt(n);
    return row;
}

std::vector<MeanValueRow> scan(std::uint64_t a, std::span<const std::uint64_t> grid,
                               unsigned threads, bool corrected_constant) {
    std::vector<MeanValueRow> rows(grid.size());
    if (threads <= 1 || grid.size() <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            rows[i] = evaluate_row(a, grid[i], corrected_constant);
        return rows;
    }
    std::vector<std::future<void>> work;
    std::atomic<std::size_t> next{0};
    const unsigned spawned = std::min<unsigned>(threads, static_cast<unsigned>(grid.size()));
    for (unsigned t = 0; t < spawned; ++t) {
        work.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1))
                rows[i] = evaluate_row(a, grid[i], corrected_constant);
        }));
    }
    for (auto& f : work) f.get();  // rethrows worker exceptions
    return rows;
}

ExponentFit fit_error_exponent(std::span<const MeanValueRow> rows) {
    std::vector<double> xs, ys;
    std::uint64_t a = 0;
    for (const auto& row : rows) {
        if (a == 0) a = row.a;
        if (row.a != a) throw std::invalid_argument("fit_error_exponent: rows mix different a");
        if (row.delta == 0.0) continue;
        xs.push_back(std::log(static_cast<double>(row.N)));
        ys.push_back(std::log(std::abs(row.delta)));
    }
    if (xs.size() < 4)
        throw std::invalid_argument("fit_error_exponent: need at least 4 rows with nonzero delta");

    const auto n = static_cast<double>(xs.size());
    KahanSum sx, sy;
    for (double x : xs) sx.add(x);
    for (double y : ys) sy.add(y);
    const double mx = sx.value() / n, my = sy.value() / n;
    KahanSum sxx, sxy, syy;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx.add((xs[i] - mx) * (xs[i] - mx));
        sxy.add((xs[i] - mx) * (ys[i] - my));
        syy.add((ys[i] - my) * (ys[i] - my));
    }
    if (sxx.value() == 0.0) throw std::invalid_argument("fit_error_exponent: degenerate grid (single N)");

    ExponentFit fit;
    fit.slope = sxy.value() / sxx.value();
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy.value() == 0.0 ? 1.0 : (sxy.value() * sxy.value()) / (sxx.value() * syy.value());
    fit.rows_used = xs.size();
    return fit;
}

namespace {

double real_part_checked(std::complex<double> z, const char* what) {
    if (std::abs(z.imag()) > 1e-10)
        throw std::runtime_error(std::string(what) + ": imaginary residue above 1e-10");
    return z.real();
}

}  // namespace

double l_parity_mean(std::uint64_t a) {
    require_a(a);
    const CharacterGroup group(a);
    KahanSum re, im;
    for (const auto& chi : group.characters()) {
        if (chi.is_principal()) continue;
        const auto par = static_cast<double>(chi.parity());
        const std::complex<double> L = l_one_digamma(chi);
        re.add(par * L.real());
        im.add(par * L.imag());
    }
    const double phi = static_cast<double>(group.order());
    return real_part_checked({re.value() / phi, im.value() / phi}, "l_parity_mean");
}

double l_parity_mean_series(std::uint64_t a, std::uint64_t w) {
    require_a(a);
    const CharacterGroup group(a);
    const auto chars = group.characters();
    const auto values = l_one_series_all(group, w);
    KahanSum re, im;
    for (std::size_t i = 0; i < chars.size(); ++i) {
        if (chars[i].is_principal()) continue;
        const auto par = static_cast<double>(chars[i].parity());
        re.add(par * values[i].real());
        im.add(par * values[i].imag());
    }
    const double phi = static_cast<double>(group.order());
    return real_part_checked({re.value() / phi, im.value() / phi}, "l_parity_mean_series");
}

double l_parity_mean_closed(std::uint64_t a) {
    require_a(a);
    return -(digamma_tail(a) + prime_log_sum(a) + std::log(static_cast<double>(a)) + euler_gamma()) /
           static_cast<double>(a);
}

HarmonicCheck progression_harmonic_check(std::uint64_t a, std::uint64_t w) {
    require_a(a);
    if (w < a) throw std::invalid_argument("progression_harmonic_check: need w >= a");
    HarmonicCheck res;
    res.lhs = progression_harmonic(a, a - 1, w);
    res.rhs = (std::log(static_cast<double>(w)) - digamma_tail(a) - std::log(static_cast<double>(a))) /
              static_cast<double>(a);
    res.scaled_gap = static_cast<double>(w) * std::abs(res.lhs - res.rhs);
    return res;
}

CheckPair mobius_log_identity_check(std::uint64_t a) {
    if (a < 1) throw std::invalid_argument("mobius_log_identity_check: need a >= 1");
    const Factorization f = factorize(a);
    KahanSum lhs;
    for (std::uint64_t m : divisors(f)) {
        const int mu = moebius(factorize(m));
        if (mu == 0 || m == 1) continue;
        lhs.add(-static_cast<double>(mu) * std::log(static_cast<double>(m)) / static_cast<double>(m));
    }
    const double phi_over_a = static_cast<double>(euler_phi(f)) / static_cast<double>(a);
    return {lhs.value(), phi_over_a * prime_log_sum(a)};
}

CheckPair fractional_integral_check(std::uint64_t a, std::uint64_t t_max) {
    require_a(a);
    if (t_max < a) throw std::invalid_argument("fractional_integral_check: need t_max >= a");
    // On [k, k+1) the integrand numerator is the constant k - a*floor((k+1)/a)
    // (the sawtooth pattern 0, 1, ..., a-2, -1), so each piece integrates to
    // c_k (1/k - 1/(k+1)) exactly.
    KahanSum numeric;
    for (std::uint64_t k = 1; k < t_max; ++k) {
        const auto c = static_cast<double>(static_cast<std::int64_t>(k) -
                                           static_cast<std::int64_t>(a * ((k + 1) / a)));
        const double kf = static_cast<double>(k);
        numeric.add(c * (1.0 / kf - 1.0 / (kf + 1.0)));
    }
    // first-order tail: the period mean of c_k is ((a-1)(a-2)/2 - 1)/a
    const double mean_c = (static_cast<double>((a - 1) * (a - 2)) / 2.0 - 1.0) / static_cast<double>(a);
    numeric.add(mean_c / static_cast<double>(t_max));
    const double closed = digamma_tail(a) + std::log(static_cast<double>(a)) + euler_gamma();
    return {numeric.value(), closed};
}

}  // namespace dio
