#include "dio/arithmetic.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace dio {

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
    std::uint64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw OverflowError("64-bit add overflow: " + std::to_string(x) + " + " + std::to_string(y));
    return r;
}

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
    std::uint64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw OverflowError("64-bit mul overflow: " + std::to_string(x) + " * " + std::to_string(y));
    return r;
}

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(x) * y) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t isqrt(std::uint64_t m) {
    if (m == 0) return 0;
    // Newton in integers from a power-of-two overestimate. Iterating only
    // while the value strictly decreases avoids the classic two-cycle around
    // the root (for m = 3 the naive fixed-point loop flips between 1 and 2).
    std::uint64_t x = std::uint64_t{1} << ((std::bit_width(m) + 1) / 2);
    std::uint64_t next = (x + m / x) / 2;
    while (next < x) {
        x = next;
        next = (x + m / x) / 2;
    }
    while (x > m / x) --x;                         // x^2 > m without overflow
    while ((x + 1) <= m / (x + 1)) ++x;            // (x+1)^2 <= m
    return x;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;  // not a witness
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // composite proven
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for every n < 3.3 * 10^24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

namespace {

// Brent cycle variant of Pollard rho; deterministic because the polynomial
// increment c is stepped 1, 2, 3, ... until a split is found.
std::uint64_t pollard_rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, d = 1, saved = 2;
        std::uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (lam == power) {
                saved = x;
                power *= 2;
                lam = 0;
            }
            x = (mul_mod(x, x, n) + c) % n;
            ++lam;
            std::uint64_t diff = x > saved ? x - saved : saved - x;
            if (diff == 0) break;  // cycle closed without a factor, bump c
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

constexpr std::uint64_t kTrialLimit = 1000000;

}  // namespace

Factorization factorize(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("factorize: m must be >= 1");
    if (m > 0x7fffffffffffffffULL) throw std::invalid_argument("factorize: m exceeds 2^63 - 1");
    Factorization f;
    f.value = m;

    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        while (m % p == 0) {
            primes.push_back(p);
            m /= p;
        }
    }
    // wheel mod 30 skips multiples of 2, 3, 5
    static constexpr int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t d = 7;
    int w = 0;
    while (d <= kTrialLimit && d <= m / d) {
        while (m % d == 0) {
            primes.push_back(d);
            m /= d;
        }
        d += wheel[w];
        w = (w + 1) & 7;
    }
    if (m > 1) {
        if (d > m / d) {
            primes.push_back(m);  // cofactor below the trial bound squared is prime
        } else {
            factor_into(m, primes);
        }
    }

    std::sort(primes.begin(), primes.end());
    for (std::uint64_t p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            f.factors.back().second += 1;
        else
            f.factors.emplace_back(p, 1);
    }
    return f;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> ds{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = ds.size();
        std::uint64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::uint64_t euler_phi(const Factorization& f) {
    std::uint64_t phi = 1;
    for (const auto& [p, e] : f.factors) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

int moebius(const Factorization& f) {
    for (const auto& [p, e] : f.factors) {
        (void)p;
        if (e > 1) return 0;
    }
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

SolutionCount count_in_progression(std::uint64_t x, std::uint64_t a, std::uint64_t r) {
    if (a == 0 || r >= a) throw std::invalid_argument("count_in_progression: need a >= 1, 0 <= r < a");
    const std::uint64_t first = (r == 0) ? a : r;  // smallest positive member of the class
    if (x < first) return 0;
    return (x - first) / a + 1;
}

std::uint64_t primitive_root(std::uint64_t prime_power) {
    if (prime_power < 3 || prime_power > (std::uint64_t{1} << 31))
        throw std::invalid_argument("primitive_root: need 3 <= p^e <= 2^31");
    Factorization f = factorize(prime_power);
    if (f.factors.size() != 1 || f.factors[0].first == 2)
        throw std::invalid_argument("primitive_root: argument must be an odd prime power");
    const std::uint64_t p = f.factors[0].first;
    const int e = f.factors[0].second;

    const std::uint64_t grp = p - 1;
    std::vector<std::uint64_t> qs;  // distinct primes of p-1
    for (const auto& [q, k] : factorize(grp).factors) {
        (void)k;
        qs.push_back(q);
    }
    std::uint64_t g = 0;
    for (std::uint64_t cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (std::uint64_t q : qs) {
            if (pow_mod(cand, grp / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw std::logic_error("primitive_root: search failed");  // cannot happen for prime p
    if (e == 1) return g;
    // lift to p^e: g works for every power unless g^(p-1) = 1 (mod p^2)
    const std::uint64_t p2 = p * p;
    if (pow_mod(g, p - 1, p2) == 1) g += p;
    return g;
}

}  // namespace dio
