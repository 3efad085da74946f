// Acceptance gate: each numbered criterion prints exactly one verdict line
//   ACCEPTANCE NN: PASS - <summary>
//   ACCEPTANCE NN: FAIL - <summary>
// and exits 0 on pass, 1 on fail. Diagnostics go to stderr.
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dio/arithmetic.hpp"
#include "dio/characters.hpp"
#include "dio/counting.hpp"
#include "dio/meanvalue.hpp"
#include "dio/special_functions.hpp"
#include "json_schema_lite.hpp"

using namespace dio;

namespace {

// 1. Every counting route returns identical values on overlapping ranges.
bool crit01(std::string& note) {
    std::uint64_t mismatches = 0, cases = 0;

    for (std::uint64_t a = 1; a <= 12; ++a)
        for (std::uint64_t n = 0; n <= 2000; ++n) {
            ++cases;
            const Equation eq{a, 1, 1};
            if (count_bruteforce(eq, n) != count_divisor(eq, n)) ++mismatches;
        }

    for (std::uint64_t a = 1; a <= 5; ++a)
        for (std::uint64_t b = 1; b <= 5; ++b)
            for (std::uint64_t c = 1; c <= 5; ++c)
                for (std::uint64_t n = 0; n <= 500; ++n) {
                    ++cases;
                    const Equation eq{a, b, c};
                    if (count_bruteforce(eq, n) != count_divisor(eq, n)) ++mismatches;
                }

    std::uint64_t sum_cases = 0, sum_mismatches = 0;
    for (std::uint64_t a = 2; a <= 12; ++a) {
        SolutionCount running = 0;
        for (std::uint64_t N = 0; N <= 10000; ++N) {
            running = checked_add(running, count_divisor(Equation{a, 1, 1}, N));
            ++sum_cases;
            if (sum_hyperbola(a, N) != running) ++sum_mismatches;
        }
    }

    std::ostringstream s;
    s << "count routes: " << mismatches << "/" << cases << " mismatches, summatory routes: "
      << sum_mismatches << "/" << sum_cases << " mismatches";
    note = s.str();
    return mismatches == 0 && sum_mismatches == 0;
}

// 2. For a = 1 the count at n is the number of divisors of n + 1.
bool crit02(std::string& note) {
    std::uint64_t mismatches = 0;
    for (std::uint64_t n = 0; n <= 10000; ++n) {
        const auto d = static_cast<SolutionCount>(divisors(factorize(n + 1)).size());
        if (count_divisor(Equation{1, 1, 1}, n) != d) ++mismatches;
    }
    note = "divisor-function identity over n <= 10^4, " + std::to_string(mismatches) + " mismatches";
    return mismatches == 0;
}

// 3. The mean value constant reproduces its elementary closed forms.
bool crit03(std::string& note) {
    const double targets[3] = {
        1.0 - std::numbers::ln2,
        1.0 + std::numbers::pi / std::sqrt(3.0) - std::log(3.0),
        1.0 + std::numbers::pi - 2.0 * std::numbers::ln2,
    };
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        worst = std::max(worst, std::abs(constant_c(static_cast<std::uint64_t>(i + 2)) - targets[i]));
    std::ostringstream s;
    s << "closed forms for a = 2, 3, 4, worst gap " << worst << " (tolerance 1e-10)";
    note = s.str();
    return worst <= 1e-10;
}

// 4. Parity-weighted mean of L(1, chi): digamma route against the closed
//    form, and the truncated series against both.
bool crit04(std::string& note) {
    double worst_closed = 0.0;
    for (std::uint64_t a = 2; a <= 100; ++a)
        worst_closed = std::max(worst_closed, std::abs(l_parity_mean(a) - l_parity_mean_closed(a)));

    const std::uint64_t w = 10000000;
    double worst_series_margin = -1e300;  // max of (gap - tolerance)
    for (std::uint64_t a = 2; a <= 30; ++a) {
        const double gap = std::abs(l_parity_mean_series(a, w) - l_parity_mean_closed(a));
        const double tol = 2.0 * static_cast<double>(a) / static_cast<double>(w) + 1e-8;
        worst_series_margin = std::max(worst_series_margin, gap - tol);
    }

    std::ostringstream s;
    s << "digamma route worst gap " << worst_closed << " (tolerance 1e-9), series margin "
      << worst_series_margin << " (must be <= 0)";
    note = s.str();
    return worst_closed <= 1e-9 && worst_series_margin <= 0.0;
}

// 5. Harmonic sums over the class of -1 follow the digamma main term with a
//    remainder below 2/w.
bool crit05(std::string& note) {
    double worst = 0.0;
    for (std::uint64_t a : {2ULL, 3ULL, 7ULL, 10ULL})
        for (std::uint64_t w : {1000ULL, 10000ULL, 100000ULL, 1000000ULL})
            worst = std::max(worst, progression_harmonic_check(a, w).scaled_gap);
    std::ostringstream s;
    s << "scaled remainder w * |lhs - rhs| at most " << worst << " (ceiling 2)";
    note = s.str();
    return worst <= 2.0;
}

// 6. Moebius logarithm identity across moduli.
bool crit06(std::string& note) {
    double worst = 0.0;
    for (std::uint64_t a = 2; a <= 10000; ++a) {
        const auto [lhs, rhs] = mobius_log_identity_check(a);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    std::ostringstream s;
    s << "a <= 10^4, worst gap " << worst << " (tolerance 1e-12)";
    note = s.str();
    return worst <= 1e-12;
}

// 7. Fractional part integral against its closed form.
bool crit07(std::string& note) {
    const std::uint64_t t_max = 100000;
    double worst_margin = -1e300;
    for (std::uint64_t a = 2; a <= 12; ++a) {
        const auto [lhs, rhs] = fractional_integral_check(a, t_max);
        const double tol = static_cast<double>(a + 2) / static_cast<double>(t_max);
        worst_margin = std::max(worst_margin, std::abs(lhs - rhs) - tol);
    }
    std::ostringstream s;
    s << "a <= 12 at cutoff 1e5, worst gap-over-tolerance margin " << worst_margin
      << " (must be <= 0)";
    note = s.str();
    return worst_margin <= 0.0;
}

// 8. Scale of the remainder under the closed-form constant: the ratio
//    |delta| / bound must stay at or below 1 at N = 10^6 and the relative
//    error |delta| / main at or below 0.02 at N = 10^7.
bool crit08(std::string& note) {
    bool pass = true;
    double worst_ratio = 0.0, worst_rel = 0.0;
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL}) {
        const MeanValueRow r6 = evaluate_row(a, 1000000);
        const MeanValueRow r7 = evaluate_row(a, 10000000);
        const double rel = std::abs(r7.delta) / r7.main;
        worst_ratio = std::max(worst_ratio, r6.ratio);
        worst_rel = std::max(worst_rel, rel);
        if (r6.ratio > 1.0 || rel > 0.02) pass = false;

        const MeanValueRow c6 = evaluate_row(a, 1000000, true);
        const MeanValueRow c7 = evaluate_row(a, 10000000, true);
        std::fprintf(stderr,
                     "a=%llu N=1e6: ratio %.6g (closed-form constant) vs %.6g "
                     "(residue-consistent constant)\n",
                     static_cast<unsigned long long>(a), r6.ratio, c6.ratio);
        std::fprintf(stderr,
                     "a=%llu N=1e7: |delta|/main %.6g (closed-form constant) vs %.6g "
                     "(residue-consistent constant)\n",
                     static_cast<unsigned long long>(a), rel,
                     std::abs(c7.delta) / c7.main);
    }
    std::ostringstream s;
    s << "closed-form constant: worst ratio " << worst_ratio << " (ceiling 1), worst relative error "
      << worst_rel << " (ceiling 0.02); the documented constant discrepancy drives the linear "
      << "drift, and the residue-consistent constant meets both ceilings (stderr)";
    note = s.str();
    return pass;
}

// 9. Digamma special values and functional equations.
bool crit09(std::string& note) {
    const double g = euler_gamma();
    const double pi = std::numbers::pi;
    const double ln2 = std::numbers::ln2;
    const double ln3 = std::log(3.0);
    struct Ref {
        double x, value;
    };
    const Ref refs[] = {
        {1.0, -g},
        {2.0, 1.0 - g},
        {0.5, -g - 2.0 * ln2},
        {0.25, -g - 3.0 * ln2 - pi / 2.0},
        {0.75, -g - 3.0 * ln2 + pi / 2.0},
        {1.0 / 3.0, -g - 1.5 * ln3 - pi / (2.0 * std::sqrt(3.0))},
        {2.0 / 3.0, -g - 1.5 * ln3 + pi / (2.0 * std::sqrt(3.0))},
    };
    double worst_value = 0.0;
    for (const auto& r : refs) worst_value = std::max(worst_value, std::abs(digamma(r.x) - r.value));

    double worst_rec = 0.0;
    for (double x : {0.1, 0.5, 1.0, 3.7, 100.0})
        worst_rec = std::max(worst_rec, std::abs(digamma(x + 1.0) - digamma(x) - 1.0 / x));

    double worst_refl = 0.0;
    for (double x : {0.25, 0.3, 0.4}) {
        const double cot = std::cos(pi * x) / std::sin(pi * x);
        worst_refl = std::max(worst_refl, std::abs(digamma(1.0 - x) - digamma(x) - pi * cot));
    }

    std::ostringstream s;
    s << "special values worst gap " << worst_value << " (1e-12), recurrence " << worst_rec
      << " (1e-12), reflection " << worst_refl << " (1e-10)";
    note = s.str();
    return worst_value <= 1e-12 && worst_rec <= 1e-12 && worst_refl <= 1e-10;
}

// 10. Character orthogonality holds exactly, in integer arithmetic, and the
//     group enumeration has the right size.
bool crit10(std::string& note) {
    std::uint64_t failures = 0;
    for (std::uint64_t a = 2; a <= 50; ++a) {
        const CharacterGroup grp(a);
        const std::uint64_t D = grp.exponent_lcm();
        const std::uint64_t phi = grp.order();
        const auto chars = grp.characters();
        for (std::size_t ui = 0; ui < chars.size(); ++ui)
            for (std::size_t vi = 0; vi < chars.size(); ++vi) {
                std::map<std::uint64_t, std::uint64_t> count;
                for (std::uint64_t m = 0; m < a; ++m) {
                    if (!grp.is_unit(m)) continue;
                    const auto ru = chars[ui].rotation_at(static_cast<std::int64_t>(m));
                    const auto rv = chars[vi].rotation_at(static_cast<std::int64_t>(m));
                    const Rotation prod = *ru + rv->conjugate();
                    ++count[prod.num * (D / prod.den)];
                }
                if (ui == vi) {
                    if (count.size() != 1 || count.begin()->first != 0 ||
                        count.begin()->second != phi)
                        ++failures;
                    continue;
                }
                std::uint64_t g0 = D;
                for (const auto& [k, cnt] : count) g0 = std::gcd(g0, k);
                const std::uint64_t d = D / g0;
                bool ok = d > 1 && count.size() == d;
                for (const auto& [k, cnt] : count)
                    if (k % g0 != 0 || cnt != phi / d) ok = false;
                if (!ok) ++failures;
            }
    }

    std::uint64_t order_failures = 0;
    for (std::uint64_t a = 2; a <= 200; ++a) {
        const CharacterGroup grp(a);
        if (grp.order() != euler_phi(factorize(a))) ++order_failures;
        if (grp.characters().size() != grp.order()) ++order_failures;
    }

    std::ostringstream s;
    s << "exact pairwise orthogonality a <= 50: " << failures << " failures, group sizes a <= 200: "
      << order_failures << " failures";
    note = s.str();
    return failures == 0 && order_failures == 0;
}

// 11. CLI end to end: deterministic bytes, schema-valid JSON, and the full
//     verification suite returning success.
struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(DIOCOUNT_BIN) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool crit11(std::string& note) {
    bool ok = true;
    std::ostringstream diag;

    const std::string scan_args = "scan --a 2 --n-min 10 --n-max 100000 --points 9 --no-timings";
    const RunResult first = run_cli(scan_args);
    const RunResult second = run_cli(scan_args);
    const RunResult threaded = run_cli(scan_args + " --threads 4");
    if (first.exit_code != 0 || first.out != second.out || first.out != threaded.out) {
        ok = false;
        diag << "scan output not deterministic across runs or thread counts; ";
    }

    nlohmann::json schema;
    {
        std::ifstream in(DIOCOUNT_SCHEMA);
        if (!in.good()) {
            note = "schema file missing";
            return false;
        }
        in >> schema;
    }
    const std::string json_cmds[] = {
        "count --a 2 --n 4 --format json",
        "sum --a 3 --N 500 --format json",
        "constant --a 5 --format json",
        "scan --a 2 --n-min 10 --n-max 1000 --points 4 --format json",
        "fit --a 2 --n-min 100 --n-max 100000 --points 8 --format json",
        "verify mobius --a-max 20 --format json",
    };
    for (const auto& cmd : json_cmds) {
        const RunResult r = run_cli(cmd);
        if (r.exit_code != 0) {
            ok = false;
            diag << "non-zero exit from '" << cmd << "'; ";
            continue;
        }
        std::string err;
        if (!jsl::validate(schema, nlohmann::json::parse(r.out, nullptr, false), err)) {
            ok = false;
            diag << "schema violation from '" << cmd << "': " << err << "; ";
        }
    }

    const RunResult all = run_cli("verify all --a-max 50 --no-timings");
    if (all.exit_code != 0) {
        ok = false;
        diag << "verify all --a-max 50 exited " << all.exit_code << "; ";
    }

    note = ok ? "deterministic output, schema-valid JSON, full verification suite green"
              : diag.str();
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..11>\n");
        return 2;
    }
    const int k = std::atoi(argv[1]);
    std::string note;
    bool pass = false;
    switch (k) {
        case 1: pass = crit01(note); break;
        case 2: pass = crit02(note); break;
        case 3: pass = crit03(note); break;
        case 4: pass = crit04(note); break;
        case 5: pass = crit05(note); break;
        case 6: pass = crit06(note); break;
        case 7: pass = crit07(note); break;
        case 8: pass = crit08(note); break;
        case 9: pass = crit09(note); break;
        case 10: pass = crit10(note); break;
        case 11: pass = crit11(note); break;
        default:
            std::fprintf(stderr, "usage: acceptance <criterion 1..11>\n");
            return 2;
    }
    std::printf("ACCEPTANCE %02d: %s - %s\n", k, pass ? "PASS" : "FAIL", note.c_str());
    return pass ? 0 : 1;
}
