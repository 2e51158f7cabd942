// Command-line front end: build, invert, verify, window-check, and benchmark
// the Cartan-matrix catalog. Exit codes: 0 success, 1 verification or
// singularity failure, 2 invalid parameters.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "cartankit/catalog.hpp"
#include "cartankit/closed_form.hpp"
#include "cartankit/errors.hpp"
#include "cartankit/infinite.hpp"
#include "cartankit/linalg.hpp"
#include "cartankit/render.hpp"
#include "cartankit/verify.hpp"

namespace ck = cartankit;

namespace {

struct FamilyArgs {
    std::string family;
    long n = 0;
    long m = 0;
    std::string alpha;
    bool literal_blocks = false;
    std::string format = "pretty";
};

void add_family_flags(CLI::App* cmd, FamilyArgs& args, bool with_format = true) {
    cmd->add_option("--family", args.family, "Family name (A, B, C, D, S, R, E6..G2, superA, superB, superB0, superC, superD, D21alpha, superF4, superG3)")
        ->required();
    cmd->add_option("-n,--rank", args.n, "Rank parameter n");
    cmd->add_option("--m", args.m, "Parameter m (super families)");
    cmd->add_option("--alpha", args.alpha, "Rational alpha as p/q (D21alpha)");
    cmd->add_flag("--literal-blocks", args.literal_blocks,
                  "Build the naive-literal, known-inconsistent degenerate variants");
    if (with_format)
        cmd->add_option("--format", args.format, "Output format: pretty, csv, latex, json");
}

ck::FamilySpec spec_from_args(const FamilyArgs& args) {
    ck::FamilySpec spec;
    spec.family = ck::family_from_name(args.family);
    spec.m = args.m;
    spec.n = args.n;
    if (!args.alpha.empty()) spec.alpha = ck::parse_rational(args.alpha);
    ck::validate(spec);
    return spec;
}

void print_matrix(const ck::FamilySpec& spec, const ck::Matrix& m, const std::string& format) {
    const ck::OutputFormat fmt = ck::format_from_name(format);
    if (fmt == ck::OutputFormat::Json)
        std::cout << ck::render_json(spec, m);
    else
        std::cout << ck::render_matrix(m, fmt);
}

int run_show(const FamilyArgs& args) {
    const ck::FamilySpec spec = spec_from_args(args);
    print_matrix(spec, ck::build(spec, args.literal_blocks), args.format);
    return 0;
}

int run_invert(const FamilyArgs& args, const std::string& method) {
    const ck::FamilySpec spec = spec_from_args(args);
    ck::Matrix inv;
    if (method == "formula") {
        inv = ck::inverse_matrix(spec);
    } else if (method == "oracle") {
        try {
            inv = ck::invert_exact(ck::build(spec, args.literal_blocks));
        } catch (const ck::SingularError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    } else if (method == "proof") {
        inv = ck::inverse_via_proof_path(spec);
    } else {
        throw ck::InvalidParams("unknown method '" + method + "'");
    }
    print_matrix(spec, inv, args.format);
    return 0;
}

long jobs_from_env() {
    if (const char* env = std::getenv("CARTANKIT_JOBS")) {
        const long v = std::atol(env);
        if (v >= 1) return v;
    }
    return 1;
}

// Grid for one family, honoring the pinned parameters.
std::vector<ck::FamilySpec> family_grid(ck::Family family, long max_rank, long pin_m,
                                        const std::string& alpha) {
    std::vector<ck::FamilySpec> grid;
    auto keep = [&](const ck::FamilySpec& s) {
        if (pin_m > 0 && s.m != pin_m) return;
        grid.push_back(s);
    };
    const long simple_cap = max_rank > 0 ? max_rank : 64;
    const long super_cap = max_rank > 0 ? max_rank : 32;
    switch (family) {
        case ck::Family::A: case ck::Family::S:
            for (long n = 1; n <= simple_cap; ++n) keep(ck::FamilySpec::simple(family, n));
            break;
        case ck::Family::B: case ck::Family::C: case ck::Family::D: case ck::Family::R:
            for (long n = 2; n <= simple_cap; ++n) keep(ck::FamilySpec::simple(family, n));
            break;
        case ck::Family::SuperA:
            for (long m = 0; m <= super_cap; ++m)
                for (long n = 0; n <= super_cap; ++n)
                    if (m != n) keep(ck::FamilySpec::super(family, m, n));
            break;
        case ck::Family::SuperB:
            for (long m = 1; m <= super_cap; ++m)
                for (long n = 1; n <= super_cap; ++n) keep(ck::FamilySpec::super(family, m, n));
            break;
        case ck::Family::SuperD:
            for (long m = 2; m <= super_cap; ++m)
                for (long n = 1; n <= super_cap; ++n) keep(ck::FamilySpec::super(family, m, n));
            break;
        case ck::Family::SuperB0: case ck::Family::SuperC:
            for (long n = 2; n <= super_cap; ++n) keep(ck::FamilySpec::simple(family, n));
            break;
        case ck::Family::D21Alpha:
            if (!alpha.empty()) {
                ck::FamilySpec s = ck::FamilySpec::d21(ck::parse_rational(alpha));
                ck::validate(s);
                keep(s);
            } else {
                for (const auto& a : ck::default_alpha_samples()) keep(ck::FamilySpec::d21(a));
            }
            break;
        default:
            keep(ck::FamilySpec::exceptional(family));
            break;
    }
    return grid;
}

int run_verify(const FamilyArgs& args, bool all, long max_rank, long jobs) {
    std::vector<ck::FamilySpec> grid;
    if (all || args.family.empty()) {
        grid = ck::default_grid();
    } else {
        grid = family_grid(ck::family_from_name(args.family), max_rank, args.m, args.alpha);
    }
    if (grid.empty()) throw ck::InvalidParams("empty verification grid");

    const auto start = std::chrono::steady_clock::now();
    std::vector<std::optional<std::string>> results(grid.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i)
            results[i] = ck::check_spec(grid[i], args.literal_blocks);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (long w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < grid.size(); i = next++)
                    results[i] = ck::check_spec(grid[i], args.literal_blocks);
            });
        for (auto& t : workers) t.join();
    }

    std::map<std::string, std::pair<long, long>> per_family;  // name -> {specs, failures}
    long failures = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        auto& counts = per_family[ck::family_name(grid[i].family)];
        ++counts.first;
        if (results[i]) {
            ++counts.second;
            ++failures;
            std::cout << "MISMATCH " << *results[i] << "\n";
        }
    }
    for (const auto& [name, counts] : per_family)
        std::cout << name << ": " << counts.first << " specs, " << counts.second
                  << " failures\n";
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << "total: " << grid.size() << " specs, " << failures << " failures, " << ms
              << " ms\n";
    return failures ? 1 : 0;
}

int run_window(const std::string& family, long m, long lo, long hi, bool check,
               bool literal_blocks, const std::string& format) {
    ck::InfFamilySpec spec{ck::inf_family_from_name(family), m, literal_blocks};
    ck::validate(spec);
    const ck::Window window{lo, hi};

    const auto cartan = ck::materialize(spec, window, ck::WindowSide::Cartan);
    const auto inverse = ck::materialize(spec, window, ck::WindowSide::Inverse);
    const ck::OutputFormat fmt = ck::format_from_name(format);

    std::cout << "labels:";
    for (long l : cartan.labels) std::cout << ' ' << l;
    std::cout << "\ncartan window:\n" << ck::render_matrix(cartan.mat, fmt);
    std::cout << "inverse window:\n" << ck::render_matrix(inverse.mat, fmt);

    if (check) {
        const ck::VerificationReport report = ck::verify_window(spec, window);
        std::cout << "check: " << report.checked_pairs << " pairs, "
                  << report.failures.size() << " failures\n";
        if (!report.passed) {
            const auto& f = report.failures.front();
            std::cout << "first failure at (" << f.i << "," << f.j << "): expected "
                      << ck::to_string(f.expected) << " actual " << ck::to_string(f.actual)
                      << "\n";
            return 1;
        }
    }
    return 0;
}

int run_bench(const FamilyArgs& args, long repeat) {
    const ck::FamilySpec spec = spec_from_args(args);
    const ck::Matrix cartan = ck::build(spec);

    auto time_ms = [&](auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        for (long r = 0; r < repeat; ++r) fn();
        const auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(t1 - t0).count() / repeat;
    };

    ck::Matrix formula, oracle, proof;
    const double formula_ms = time_ms([&] { formula = ck::inverse_matrix(spec); });
    const double oracle_ms = time_ms([&] { oracle = ck::invert_exact(cartan); });
    double proof_ms = -1;
    if (ck::has_proof_path(spec))
        proof_ms = time_ms([&] { proof = ck::inverse_via_proof_path(spec); });

    if (!(formula == oracle) || (ck::has_proof_path(spec) && !(formula == proof))) {
        std::cerr << "error: inversion paths disagree for " << ck::describe(spec) << "\n";
        return 1;
    }

    std::cout << "family,size,method,repeat,ms\n";
    const std::size_t size = formula.rows();
    std::cout << ck::describe(spec) << "," << size << ",formula," << repeat << ","
              << formula_ms << "\n";
    std::cout << ck::describe(spec) << "," << size << ",oracle," << repeat << "," << oracle_ms
              << "\n";
    if (proof_ms >= 0)
        std::cout << ck::describe(spec) << "," << size << ",proof," << repeat << ","
                  << proof_ms << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cartan matrices of the classical Lie (super)algebras, their exact "
                 "closed-form inverses, and the machinery to verify them"};
    app.require_subcommand(1);

    FamilyArgs show_args;
    auto* show = app.add_subcommand("show", "Print a Cartan matrix");
    add_family_flags(show, show_args);

    FamilyArgs invert_args;
    std::string method = "formula";
    auto* invert = app.add_subcommand("invert", "Print an inverse Cartan matrix");
    add_family_flags(invert, invert_args);
    invert->add_option("--method", method, "formula (closed form), oracle (elimination), proof (update pipeline)");

    FamilyArgs verify_args;
    bool verify_all = false;
    long max_rank = 0;
    long jobs = jobs_from_env();
    auto* verify = app.add_subcommand(
        "verify", "Run formula-vs-oracle-vs-proof-path and product-identity checks");
    verify->add_option("--family", verify_args.family, "Restrict to one family");
    verify->add_option("--max", max_rank, "Cap the rank parameters");
    verify->add_option("--m", verify_args.m, "Pin m (super families)");
    verify->add_option("--alpha", verify_args.alpha, "Rational alpha as p/q (D21alpha)");
    verify->add_flag("--literal-blocks", verify_args.literal_blocks,
                     "Check the naive-literal degenerate variants (expected to fail)");
    verify->add_flag("--all", verify_all, "Run the full default grid");
    verify->add_option("--jobs", jobs, "Worker threads (env CARTANKIT_JOBS)");

    std::string win_family;
    long win_m = 0, win_lo = 0, win_hi = 0;
    bool win_check = false, win_literal = false;
    std::string win_format = "pretty";
    auto* window = app.add_subcommand("window", "Materialize and check an infinite-family window");
    window->add_option("--family", win_family, "Ainf+, Ainf-, Binf, Dinf, superAinf, superAinfinf, superBinf, superDinf")
        ->required();
    window->add_option("--m", win_m, "Parameter m (super infinite families)");
    window->add_option("--lo", win_lo, "Window lower label")->required();
    window->add_option("--hi", win_hi, "Window upper label")->required();
    window->add_flag("--check", win_check, "Run the two-sided product-identity check");
    window->add_flag("--literal-blocks", win_literal,
                     "Use the naive-literal boundary variant (expected to fail)");
    window->add_option("--format", win_format, "Output format");

    FamilyArgs bench_args;
    long repeat = 1;
    auto* bench = app.add_subcommand("bench", "Time formula vs oracle vs proof-path inversion");
    add_family_flags(bench, bench_args, false);
    bench->add_option("--repeat", repeat, "Repetitions per method");

    CLI11_PARSE(app, argc, argv);

    try {
        if (show->parsed()) return run_show(show_args);
        if (invert->parsed()) return run_invert(invert_args, method);
        if (verify->parsed()) return run_verify(verify_args, verify_all, max_rank, jobs);
        if (window->parsed())
            return run_window(win_family, win_m, win_lo, win_hi, win_check, win_literal,
                              win_format);
        if (bench->parsed()) return run_bench(bench_args, repeat);
    } catch (const ck::InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
