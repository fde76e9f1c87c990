// Command-line front end: every exact quantity (mean, pmf, variance, bounds,
// remainder, exit time), the seeded Monte Carlo estimator, and the exact
// self-verification suite, emitted as JSON or CSV tables.
//
// Exit codes: 0 success, 1 usage error, 2 verification/consistency failure.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rps/asymptotics.hpp"
#include "rps/game.hpp"
#include "rps/markov.hpp"
#include "rps/output.hpp"
#include "rps/rational.hpp"
#include "rps/recurrence.hpp"
#include "rps/simulate.hpp"
#include "rps/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConsistency = 2;

struct EmitOptions {
    std::string format = "json";
    std::string output;
};

void emit_text(const std::string& text, const EmitOptions& opt) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.output);
    if (!file) throw std::runtime_error("cannot open output file: " + opt.output);
    file << text;
}

void emit(const std::vector<rps::OutputRecord>& records, const EmitOptions& opt) {
    emit_text(opt.format == "csv" ? rps::to_csv_text(records) : rps::to_json_text(records), opt);
}

unsigned threads_from_env() {
    const char* raw = std::getenv("RPS_STOPTIME_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;  // auto
    try {
        const unsigned long v = std::stoul(raw);
        if (v == 0 || v > 4096) throw std::out_of_range("range");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("RPS_STOPTIME_THREADS must be a positive integer");
    }
}

int run_mean(long n, const std::string& method, const EmitOptions& opt) {
    std::vector<std::string> methods;
    if (method == "all")
        methods = {"recurrence", "closed-form", "matrix"};
    else
        methods = {method};

    std::vector<rps::OutputRecord> records;
    for (const auto& m : methods) {
        rps::Rational value;
        if (n == 1) {
            value = rps::Rational(0);  // tau_1 = 0 by convention
        } else if (m == "recurrence") {
            value = rps::mean_by_recurrence(n);
        } else if (m == "closed-form") {
            value = rps::mean_by_closed_form(n);
        } else {
            value = rps::mean_by_matrix(n);
        }
        records.push_back(rps::make_record(n, "mean", value, {{"method", m}}));
    }
    emit(records, opt);

    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].exact != records[0].exact) {
            std::cerr << "mean: cross-method mismatch at n = " << n << ": "
                      << records[0].metadata.at("method") << " vs "
                      << records[i].metadata.at("method") << "\n";
            return kExitConsistency;
        }
    }
    return kExitOk;
}

int run_pmf(long n, std::optional<long> k_max, std::optional<double> tail,
            const EmitOptions& opt) {
    rps::StoppingTimePMF table;
    if (k_max)
        table = rps::pmf_table(n, *k_max);
    else
        table = rps::pmf_table_to_tail(n, tail.value_or(1e-12));

    std::vector<rps::OutputRecord> records;
    for (std::size_t i = 0; i < table.probs.size(); ++i)
        records.push_back(
            rps::make_record(n, "pmf", table.probs[i], {{"k", std::to_string(i + 1)}}));
    records.push_back(rps::make_record(n, "pmf", table.tail_mass, {{"k", "tail"}}));
    emit(records, opt);
    return kExitOk;
}

int run_variance(long n, const EmitOptions& opt) {
    emit({rps::make_record(n, "variance", rps::variance(n))}, opt);
    return kExitOk;
}

int run_bounds(long n, const EmitOptions& opt) {
    const auto [lower, upper] = rps::bounds(n);
    emit({rps::make_record(n, "bounds", lower, {{"bound", "lower"}}),
          rps::make_record(n, "bounds", upper, {{"bound", "upper"}})},
         opt);
    return kExitOk;
}

int run_remainder(long n, std::uint64_t l_max, const EmitOptions& opt) {
    const rps::Rational exact = rps::remainder_exact(n);
    const auto [approx, bound] = rps::remainder_series(n, l_max);

    std::ostringstream approx_text, bound_text;
    approx_text.precision(15);
    approx_text << approx;
    bound_text.precision(15);
    bound_text << bound;

    emit({rps::make_record(n, "remainder", exact, {{"method", "exact"}}),
          rps::make_approx_record(n, "remainder", approx_text.str(),
                                  {{"method", "series"},
                                   {"l_max", std::to_string(l_max)},
                                   {"truncation_bound", bound_text.str()}})},
         opt);
    return kExitOk;
}

int run_exit_time(long n, const EmitOptions& opt) {
    const rps::ExitTimeLaw law = rps::exit_time_mean(n);
    emit({rps::make_record(n, "exit_time", law.mean,
                           {{"stay_prob", law.stay_prob.str()}})},
         opt);
    return kExitOk;
}

int run_simulate(long n, std::uint64_t trials, std::uint64_t seed, const EmitOptions& opt) {
    const rps::SimulationReport report = rps::estimate(n, trials, seed, threads_from_env());

    std::ostringstream hist;
    bool first = true;
    for (const auto& [k, c] : report.histogram) {
        if (!first) hist << ";";
        hist << k << ":" << c;
        first = false;
    }
    auto fmt = [](double v) {
        std::ostringstream os;
        os.precision(15);
        os << v;
        return os.str();
    };
    emit({rps::make_approx_record(n, "simulation", fmt(report.mean),
                                  {{"seed", std::to_string(report.seed)},
                                   {"trials", std::to_string(report.trials)},
                                   {"variance", fmt(report.variance)},
                                   {"std_error", fmt(report.std_error)},
                                   {"max_k", std::to_string(report.max_k_observed)},
                                   {"rng", report.rng},
                                   {"histogram", hist.str()}})},
         opt);
    return kExitOk;
}

int run_verify(long n_max, const EmitOptions& opt) {
    const rps::VerifyReport report = rps::run_verification(n_max);

    if (opt.format == "csv") {
        std::ostringstream os;
        os << "name,passed,cases,detail\n";
        for (const auto& c : report.checks)
            os << c.name << "," << (c.passed ? "true" : "false") << "," << c.cases << ","
               << c.detail << "\n";
        emit_text(os.str(), opt);
    } else {
        nlohmann::json j;
        j["n_max"] = report.n_max;
        j["passed"] = report.passed;
        j["checks"] = nlohmann::json::array();
        for (const auto& c : report.checks)
            j["checks"].push_back(
                {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
        emit_text(j.dump(2) + "\n", opt);
    }

    if (!report.passed) {
        for (const auto& c : report.checks)
            if (!c.passed) {
                std::cerr << "verify: invariant '" << c.name << "' failed: " << c.detail << "\n";
                break;
            }
        return kExitConsistency;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stopping-time toolkit for the n-player rock-paper-scissors "
                 "elimination game"};
    app.require_subcommand(1);
    app.fallthrough();

    EmitOptions opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", opt.output, "Write to a file instead of stdout");

    int rc = kExitOk;

    long mean_n = 0;
    std::string mean_method = "all";
    auto* mean_cmd = app.add_subcommand("mean", "Mean number of rounds E_n");
    mean_cmd->add_option("--n", mean_n, "Number of players")->required();
    mean_cmd->add_option("--method", mean_method, "recurrence|closed-form|matrix|all")
        ->check(CLI::IsMember({"recurrence", "closed-form", "matrix", "all"}))
        ->capture_default_str();
    mean_cmd->callback([&] { rc = run_mean(mean_n, mean_method, opt); });

    long pmf_n = 0;
    std::optional<long> pmf_k_max;
    std::optional<double> pmf_tail;
    auto* pmf_cmd = app.add_subcommand("pmf", "Stopping-time distribution P(tau_n = k)");
    pmf_cmd->add_option("--n", pmf_n, "Number of players")->required();
    auto* kopt = pmf_cmd->add_option("--k-max", pmf_k_max, "Emit rows k = 1..k_max");
    pmf_cmd->add_option("--tail", pmf_tail, "Emit rows until the exact tail drops below this")
        ->excludes(kopt);
    pmf_cmd->callback([&] { rc = run_pmf(pmf_n, pmf_k_max, pmf_tail, opt); });

    long var_n = 0;
    auto* var_cmd = app.add_subcommand("variance", "Variance of the stopping time");
    var_cmd->add_option("--n", var_n, "Number of players")->required();
    var_cmd->callback([&] { rc = run_variance(var_n, opt); });

    long bounds_n = 0;
    auto* bounds_cmd = app.add_subcommand("bounds", "Exact growth bounds on E_n");
    bounds_cmd->add_option("--n", bounds_n, "Number of players")->required();
    bounds_cmd->callback([&] { rc = run_bounds(bounds_n, opt); });

    long rem_n = 0;
    std::uint64_t rem_l_max = 1000000;
    auto* rem_cmd = app.add_subcommand(
        "remainder", "Remainder E_n - (1/3)(3/2)^n, exact and by truncated series");
    rem_cmd->add_option("--n", rem_n, "Number of players")->required();
    rem_cmd->add_option("--l-max", rem_l_max, "Series truncation point")->capture_default_str();
    rem_cmd->callback([&] { rc = run_remainder(rem_n, rem_l_max, opt); });

    long exit_n = 0;
    auto* exit_cmd = app.add_subcommand("exit", "First exit time from the initial state");
    exit_cmd->add_option("--n", exit_n, "Number of players")->required();
    exit_cmd->callback([&] { rc = run_exit_time(exit_n, opt); });

    long sim_n = 0;
    std::uint64_t sim_trials = 100000;
    std::uint64_t sim_seed = 0;
    auto* sim_cmd = app.add_subcommand("simulate", "Seeded Monte Carlo estimate");
    sim_cmd->add_option("--n", sim_n, "Number of players")->required();
    sim_cmd->add_option("--trials", sim_trials, "Number of games")->capture_default_str();
    sim_cmd->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
    sim_cmd->callback([&] { rc = run_simulate(sim_n, sim_trials, sim_seed, opt); });

    long verify_n_max = 20;
    auto* verify_cmd = app.add_subcommand("verify", "Run the exact self-consistency suite");
    verify_cmd->add_option("--n-max", verify_n_max, "Check all 2 <= n <= n_max")
        ->capture_default_str();
    verify_cmd->callback([&] { rc = run_verify(verify_n_max, opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return rc;
}
