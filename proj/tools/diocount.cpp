// diocount: exact counts and mean-value data for a*x*y - b*x - c*y = n.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dio/arithmetic.hpp"
#include "dio/characters.hpp"
#include "dio/counting.hpp"
#include "dio/meanvalue.hpp"
#include "dio/output_record.hpp"
#include "dio/special_functions.hpp"

namespace {

using dio::OutputRecord;
using dio::OutputRow;

struct GlobalOpts {
    std::string format = "csv";
    std::string output;
    unsigned threads = 1;
    bool no_timings = false;
    int verbosity = 0;
};

int emit(const OutputRecord& rec, const GlobalOpts& g) {
    const std::string text = g.format == "json" ? dio::to_json(rec, !g.no_timings)
                                                : dio::to_csv(rec, !g.no_timings);
    if (g.output.empty()) {
        std::fputs(text.c_str(), stdout);
        return 0;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << g.output << "\n";
        return 2;
    }
    out << text;
    return 0;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Runs fn(i) for i < count on the requested number of workers, keeping
// results indexed. Worker exceptions surface on get().
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> work;
    for (unsigned t = 0; t < std::min<unsigned>(threads, count); ++t) {
        work.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        }));
    }
    for (auto& f : work) f.get();
}

std::vector<std::uint64_t> geometric_grid(std::uint64_t n_min, std::uint64_t n_max, unsigned points) {
    if (n_min < 1 || n_min > n_max) throw std::invalid_argument("grid: need 1 <= n-min <= n-max");
    if (points < 1) throw std::invalid_argument("grid: need points >= 1");
    std::vector<std::uint64_t> grid;
    if (points == 1 || n_min == n_max) {
        grid.push_back(n_min);
        if (points > 1 && n_max != n_min) grid.push_back(n_max);
        return grid;
    }
    const double lo = std::log(static_cast<double>(n_min));
    const double hi = std::log(static_cast<double>(n_max));
    for (unsigned i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        auto n = static_cast<std::uint64_t>(std::llround(std::exp(x)));
        n = std::clamp<std::uint64_t>(n, n_min, n_max);
        if (grid.empty() || n > grid.back()) grid.push_back(n);  // collapse duplicates
    }
    if (grid.back() != n_max) grid.push_back(n_max);
    return grid;
}

OutputRow mean_value_output_row(const dio::MeanValueRow& r) {
    return OutputRow{
        {"a", r.a},   {"N", r.N},         {"S", r.S},         {"C_a", r.c_of_a},
        {"main", r.main}, {"delta", r.delta}, {"bound", r.bound}, {"ratio", r.ratio},
        {"warn_a_large", r.warn_a_large},
    };
}

std::vector<dio::MeanValueRow> scan_rows(std::uint64_t a, const std::vector<std::uint64_t>& grid,
                                         const GlobalOpts& g, bool corrected, OutputRecord& rec) {
    std::vector<dio::MeanValueRow> rows(grid.size());
    rec.timings_ms.assign(grid.size(), 0.0);
    std::atomic<std::size_t> done{0};
    parallel_for(grid.size(), g.threads, [&](std::size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        rows[i] = dio::evaluate_row(a, grid[i], corrected);
        rec.timings_ms[i] = ms_since(t0);
        const std::size_t k = done.fetch_add(1) + 1;
        if (g.verbosity >= 1)
            std::fprintf(stderr, "scan: %zu/%zu rows done (N = %llu)\n", k, grid.size(),
                         static_cast<unsigned long long>(grid[i]));
    });
    return rows;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOpts {
    std::uint64_t a_max = 50;
    std::uint64_t n_max = 2000;     // oracle: count range
    std::uint64_t sum_max = 10000;  // oracle: summatory range
    std::uint64_t t_max = 100000;   // integral cutoff
    std::vector<std::uint64_t> w_list = {1000, 10000, 100000, 1000000};
    double tolerance = 0;  // 0 = per-check default
};

struct VerifyCaseResult {
    OutputRow row;
    bool pass = false;
    double ms = 0;
};

OutputRow verify_row(const std::string& check, std::uint64_t a, std::uint64_t param, double lhs,
                     double rhs, double gap, double tol, bool pass) {
    return OutputRow{{"check", check}, {"a", a},     {"param", param},       {"lhs", lhs},
                     {"rhs", rhs},     {"gap", gap}, {"tolerance", tol},     {"pass", pass}};
}

void run_cases(std::vector<std::function<VerifyCaseResult()>>& cases, const GlobalOpts& g,
               OutputRecord& rec, bool& all_pass, const char* label) {
    std::vector<VerifyCaseResult> results(cases.size());
    std::atomic<std::size_t> done{0};
    parallel_for(cases.size(), g.threads, [&](std::size_t i) {
        const auto t0 = std::chrono::steady_clock::now();
        results[i] = cases[i]();
        results[i].ms = ms_since(t0);
        const std::size_t k = done.fetch_add(1) + 1;
        if (g.verbosity >= 1) std::fprintf(stderr, "verify %s: %zu/%zu cases\n", label, k, cases.size());
    });
    for (auto& r : results) {
        all_pass = all_pass && r.pass;
        rec.rows.push_back(std::move(r.row));
        rec.timings_ms.push_back(r.ms);
    }
    cases.clear();
}

void add_lemma5_cases(std::vector<std::function<VerifyCaseResult()>>& cases, const VerifyOpts& v) {
    const double tol = v.tolerance > 0 ? v.tolerance : 1e-9;
    for (std::uint64_t a = 2; a <= v.a_max; ++a) {
        cases.push_back([a, tol] {
            const double lhs = dio::l_parity_mean(a);
            const double rhs = dio::l_parity_mean_closed(a);
            const double gap = std::abs(lhs - rhs);
            return VerifyCaseResult{verify_row("lemma5", a, 0, lhs, rhs, gap, tol, gap <= tol),
                                    gap <= tol};
        });
    }
}

void add_lemma6_cases(std::vector<std::function<VerifyCaseResult()>>& cases, const VerifyOpts& v) {
    const double tol = v.tolerance > 0 ? v.tolerance : 2.0;  // ceiling on w * |lhs - rhs|
    for (std::uint64_t a = 2; a <= v.a_max; ++a) {
        for (std::uint64_t w : v.w_list) {
            if (w < a) continue;
            cases.push_back([a, w, tol] {
                const auto hc = dio::progression_harmonic_check(a, w);
                const bool pass = hc.scaled_gap <= tol;
                return VerifyCaseResult{
                    verify_row("lemma6", a, w, hc.lhs, hc.rhs, hc.scaled_gap, tol, pass), pass};
            });
        }
    }
}

void add_mobius_cases(std::vector<std::function<VerifyCaseResult()>>& cases, const VerifyOpts& v) {
    const double tol = v.tolerance > 0 ? v.tolerance : 1e-12;
    for (std::uint64_t a = 2; a <= v.a_max; ++a) {
        cases.push_back([a, tol] {
            const auto [lhs, rhs] = dio::mobius_log_identity_check(a);
            const double gap = std::abs(lhs - rhs);
            return VerifyCaseResult{verify_row("mobius", a, 0, lhs, rhs, gap, tol, gap <= tol),
                                    gap <= tol};
        });
    }
}

void add_integral_cases(std::vector<std::function<VerifyCaseResult()>>& cases, const VerifyOpts& v) {
    for (std::uint64_t a = 2; a <= v.a_max; ++a) {
        const std::uint64_t t_max = std::max(v.t_max, a);
        const double tol =
            v.tolerance > 0 ? v.tolerance : static_cast<double>(a + 2) / static_cast<double>(t_max);
        cases.push_back([a, t_max, tol] {
            const auto [lhs, rhs] = dio::fractional_integral_check(a, t_max);
            const double gap = std::abs(lhs - rhs);
            return VerifyCaseResult{verify_row("integral", a, t_max, lhs, rhs, gap, tol, gap <= tol),
                                    gap <= tol};
        });
    }
}

void add_oracle_cases(std::vector<std::function<VerifyCaseResult()>>& cases, const VerifyOpts& v) {
    // count route agreement, standard form
    for (std::uint64_t a = 1; a <= v.a_max; ++a) {
        cases.push_back([a, n_max = v.n_max] {
            std::uint64_t checked = 0, agree = 0;
            for (std::uint64_t n = 0; n <= n_max; ++n) {
                ++checked;
                const dio::Equation eq{a, 1, 1};
                if (dio::count_bruteforce(eq, n) == dio::count_divisor(eq, n)) ++agree;
            }
            const auto gap = static_cast<double>(checked - agree);
            return VerifyCaseResult{verify_row("oracle_count", a, n_max, static_cast<double>(checked),
                                               static_cast<double>(agree), gap, 0, gap == 0),
                                    gap == 0};
        });
    }
    // divisor-function identity for a = 1
    cases.push_back([n_max = v.n_max] {
        std::uint64_t checked = 0, agree = 0;
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            ++checked;
            const auto d = static_cast<std::uint64_t>(dio::divisors(dio::factorize(n + 1)).size());
            if (dio::count_divisor(dio::Equation{1, 1, 1}, n) == d) ++agree;
        }
        const auto gap = static_cast<double>(checked - agree);
        return VerifyCaseResult{verify_row("oracle_divisor_id", 1, n_max, static_cast<double>(checked),
                                           static_cast<double>(agree), gap, 0, gap == 0),
                                gap == 0};
    });
    // generalized coefficients, small box
    for (std::uint64_t a = 1; a <= std::min<std::uint64_t>(v.a_max, 5); ++a) {
        cases.push_back([a, n_cap = std::min<std::uint64_t>(v.n_max, 500)] {
            std::uint64_t checked = 0, agree = 0;
            for (std::uint64_t b = 1; b <= 5; ++b)
                for (std::uint64_t c = 1; c <= 5; ++c)
                    for (std::uint64_t n = 0; n <= n_cap; ++n) {
                        ++checked;
                        const dio::Equation eq{a, b, c};
                        if (dio::count_bruteforce(eq, n) == dio::count_divisor(eq, n)) ++agree;
                    }
            const auto gap = static_cast<double>(checked - agree);
            return VerifyCaseResult{verify_row("oracle_general", a, n_cap, static_cast<double>(checked),
                                               static_cast<double>(agree), gap, 0, gap == 0),
                                    gap == 0};
        });
    }
    // summatory agreement: incremental divisor sums against the hyperbola count
    for (std::uint64_t a = 2; a <= v.a_max; ++a) {
        cases.push_back([a, sum_max = v.sum_max] {
            std::uint64_t checked = 0, agree = 0;
            dio::SolutionCount running = 0;
            for (std::uint64_t N = 0; N <= sum_max; ++N) {
                running = dio::checked_add(running, dio::count_divisor(dio::Equation{a, 1, 1}, N));
                ++checked;
                if (dio::sum_hyperbola(a, N) == running) ++agree;
            }
            const auto gap = static_cast<double>(checked - agree);
            return VerifyCaseResult{verify_row("oracle_sum", a, sum_max, static_cast<double>(checked),
                                               static_cast<double>(agree), gap, 0, gap == 0),
                                    gap == 0};
        });
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solution counts and mean-value asymptotics for a*x*y - b*x - c*y = n"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", g.output, "write output to a file instead of stdout");
    app.add_option("--threads", g.threads, "worker threads for independent rows (0 = hardware)");
    app.add_flag("--no-timings", g.no_timings, "omit the timing footer/field");
    app.add_flag("-v,--verbose", g.verbosity, "progress on stderr; repeat for more");

    std::uint64_t a = 2, n = 0, b = 1, c = 1, N = 0;
    std::uint64_t n_min = 1, n_max = 1000;
    unsigned points = 8;
    bool corrected = false;
    std::string method = "auto", which;
    VerifyOpts vopts;

    auto* cmd_count = app.add_subcommand("count", "count solutions of the equation at one n");
    cmd_count->add_option("--a", a, "coefficient a")->required();
    cmd_count->add_option("--n", n, "right-hand side n")->required();
    cmd_count->add_option("--b", b, "coefficient b (default 1)");
    cmd_count->add_option("--c", c, "coefficient c (default 1)");

    auto* cmd_sum = app.add_subcommand("sum", "summatory count over 0 <= n <= N");
    cmd_sum->add_option("--a", a, "coefficient a")->required();
    cmd_sum->add_option("--N", N, "upper limit N")->required();
    cmd_sum->add_option("--b", b, "coefficient b (default 1)");
    cmd_sum->add_option("--c", c, "coefficient c (default 1)");
    cmd_sum->add_option("--method", method, "hyperbola | divisor | auto")
        ->check(CLI::IsMember({"hyperbola", "divisor", "auto"}));

    auto* cmd_constant = app.add_subcommand("constant", "mean value constant C(a)");
    cmd_constant->add_option("--a", a, "coefficient a")->required();
    cmd_constant->add_flag("--corrected", corrected, "residue-consistent constant instead of the closed form");

    auto* cmd_scan = app.add_subcommand("scan", "summatory rows over a geometric N grid");
    cmd_scan->add_option("--a", a, "coefficient a")->required();
    cmd_scan->add_option("--n-min", n_min, "smallest N (default 1)");
    cmd_scan->add_option("--n-max", n_max, "largest N (default 1000)");
    cmd_scan->add_option("--points", points, "grid size (default 8)");
    cmd_scan->add_flag("--corrected-constant", corrected, "use the residue-consistent constant");

    auto* cmd_fit = app.add_subcommand("fit", "least squares exponent of |delta| against N");
    cmd_fit->add_option("--a", a, "coefficient a")->required();
    cmd_fit->add_option("--n-min", n_min, "smallest N (default 1)");
    cmd_fit->add_option("--n-max", n_max, "largest N (default 1000)");
    cmd_fit->add_option("--points", points, "grid size (default 8)");
    cmd_fit->add_flag("--corrected-constant", corrected, "use the residue-consistent constant");

    auto* cmd_verify = app.add_subcommand("verify", "run the numerical identity checks");
    cmd_verify->add_option("which", which, "lemma5 | lemma6 | mobius | integral | oracle | all")
        ->required()
        ->check(CLI::IsMember({"lemma5", "lemma6", "mobius", "integral", "oracle", "all"}));
    cmd_verify->add_option("--a-max", vopts.a_max, "largest modulus / coefficient (default 50)");
    cmd_verify->add_option("--n-max", vopts.n_max, "oracle count range (default 2000)");
    cmd_verify->add_option("--sum-max", vopts.sum_max, "oracle summatory range (default 10000)");
    cmd_verify->add_option("--t-max", vopts.t_max, "integral cutoff (default 100000)");
    cmd_verify->add_option("--w", vopts.w_list, "lemma6 cutoffs (default 1e3 1e4 1e5 1e6)");
    cmd_verify->add_option("--tolerance", vopts.tolerance, "override the per-check default tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, any parse failure is a usage error
    }

    if (g.threads == 0) g.threads = std::max(1u, std::thread::hardware_concurrency());

    try {
        OutputRecord rec;
        int exit_code = 0;

        if (cmd_count->parsed()) {
            rec.command = "count";
            const dio::Equation eq{a, b, c};
            const auto t0 = std::chrono::steady_clock::now();
            const dio::SolutionCount R = dio::count_divisor(eq, n);
            rec.timings_ms.push_back(ms_since(t0));
            rec.parameters = {{"a", std::to_string(a)}, {"n", std::to_string(n)},
                              {"b", std::to_string(b)}, {"c", std::to_string(c)}};
            rec.rows.push_back(OutputRow{{"a", a}, {"n", n}, {"b", b}, {"c", c}, {"R", R}});
            if (g.verbosity >= 1 && n <= 1000000) rec.solutions = dio::list_solutions(eq, n);
        } else if (cmd_sum->parsed()) {
            rec.command = "sum";
            if (method == "auto") method = (b == 1 && c == 1 && a >= 2) ? "hyperbola" : "divisor";
            const auto t0 = std::chrono::steady_clock::now();
            dio::SolutionCount S;
            if (method == "hyperbola") {
                if (b != 1 || c != 1)
                    throw std::invalid_argument("sum: hyperbola method requires b = c = 1");
                S = dio::sum_hyperbola(a, N);
            } else {
                S = dio::sum_bruteforce(dio::Equation{a, b, c}, N);
            }
            rec.timings_ms.push_back(ms_since(t0));
            rec.parameters = {{"a", std::to_string(a)}, {"N", std::to_string(N)},
                              {"b", std::to_string(b)}, {"c", std::to_string(c)},
                              {"method", method}};
            rec.rows.push_back(OutputRow{{"a", a}, {"N", N}, {"S", S}, {"method", method}});
        } else if (cmd_constant->parsed()) {
            rec.command = "constant";
            const double C = corrected ? dio::constant_c_corrected(a) : dio::constant_c(a);
            rec.parameters = {{"a", std::to_string(a)}, {"corrected", corrected ? "true" : "false"}};
            rec.rows.push_back(OutputRow{{"a", a}, {"C_a", C}, {"corrected", corrected}});
        } else if (cmd_scan->parsed()) {
            rec.command = "scan";
            rec.parameters = {{"a", std::to_string(a)},
                              {"n_min", std::to_string(n_min)},
                              {"n_max", std::to_string(n_max)},
                              {"points", std::to_string(points)},
                              {"corrected", corrected ? "true" : "false"}};
            const auto grid = geometric_grid(n_min, n_max, points);
            for (const auto& row : scan_rows(a, grid, g, corrected, rec))
                rec.rows.push_back(mean_value_output_row(row));
        } else if (cmd_fit->parsed()) {
            rec.command = "fit";
            rec.parameters = {{"a", std::to_string(a)},
                              {"n_min", std::to_string(n_min)},
                              {"n_max", std::to_string(n_max)},
                              {"points", std::to_string(points)},
                              {"corrected", corrected ? "true" : "false"}};
            const auto grid = geometric_grid(n_min, n_max, points);
            const auto rows = scan_rows(a, grid, g, corrected, rec);
            const dio::ExponentFit fit = dio::fit_error_exponent(rows);
            rec.rows.push_back(OutputRow{{"a", a},
                                         {"slope", fit.slope},
                                         {"intercept", fit.intercept},
                                         {"r_squared", fit.r_squared},
                                         {"rows_used", static_cast<std::uint64_t>(fit.rows_used)}});
        } else if (cmd_verify->parsed()) {
            rec.command = "verify";
            rec.parameters = {{"which", which},
                              {"a_max", std::to_string(vopts.a_max)},
                              {"n_max", std::to_string(vopts.n_max)},
                              {"sum_max", std::to_string(vopts.sum_max)},
                              {"t_max", std::to_string(vopts.t_max)}};
            bool all_pass = true;
            std::vector<std::function<VerifyCaseResult()>> cases;
            if (which == "lemma5" || which == "all") {
                add_lemma5_cases(cases, vopts);
                run_cases(cases, g, rec, all_pass, "lemma5");
            }
            if (which == "lemma6" || which == "all") {
                add_lemma6_cases(cases, vopts);
                run_cases(cases, g, rec, all_pass, "lemma6");
            }
            if (which == "mobius" || which == "all") {
                add_mobius_cases(cases, vopts);
                run_cases(cases, g, rec, all_pass, "mobius");
            }
            if (which == "integral" || which == "all") {
                add_integral_cases(cases, vopts);
                run_cases(cases, g, rec, all_pass, "integral");
            }
            if (which == "oracle" || which == "all") {
                add_oracle_cases(cases, vopts);
                run_cases(cases, g, rec, all_pass, "oracle");
            }
            if (!all_pass) exit_code = 1;
        }

        const int emit_code = emit(rec, g);
        return emit_code != 0 ? emit_code : exit_code;
    } catch (const dio::OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
