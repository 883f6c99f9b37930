// antlyzer: decide termination of linear/affine while-loops by computing the
// asymptotic nontermination set exactly and checking its emptiness over the
// chosen domain. Subcommands: analyze, fuzz, simulate.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "antlyzer/analyzer.hpp"
#include "antlyzer/error.hpp"
#include "antlyzer/oracle.hpp"

namespace {

using namespace antlyzer;

// 0 = analysis completed (any verdict), 2 = input/parse error,
// 3 = internal limit exceeded
constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_internal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

domain_kind domain_from(const std::string& s) {
    if (s == "int") return domain_kind::integers;
    if (s == "rat") return domain_kind::rationals;
    return domain_kind::reals;
}

struct analyze_flags {
    std::vector<std::string> files;
    std::string domain = "int";
    std::string format = "text";
    bool emit_precondition = false;
    bool witness_trace = false;
    long max_window = 1000;
    long ilp_budget = 200000;
    unsigned long seed = 0;
    unsigned jobs = 1;
};

struct file_outcome {
    int code = exit_ok;
    std::string out; // stdout payload
    std::string err; // stderr payload
};

// short trace of the guard-row values along the witness orbit, for --witness
std::string witness_trace(const loop_program& p, const std::vector<scalar>& w) {
    const long steps = 10;
    const auto values = trajectory_values(p, w, steps);
    std::ostringstream out;
    out << "witness guard values (rows x steps 0.." << steps << "):\n";
    for (size_t i = 0; i < values.size(); ++i) {
        out << "  row " << i + 1 << ":";
        for (const auto& v : values[i]) out << " " << v.str();
        out << "\n";
    }
    return out.str();
}

file_outcome analyze_one(const std::string& path, const analyze_flags& fl, bool multi) {
    file_outcome res;
    try {
        const auto text = read_file(path);
        const auto ast = parse(text);
        const auto program = build_program(ast, domain_from(fl.domain));

        analyze_options opts;
        opts.emit_precondition = fl.emit_precondition;
        opts.max_window = fl.max_window;
        opts.ilp_budget = fl.ilp_budget;
        opts.seed = fl.seed;
        const auto report = analyze(program, opts);

        std::ostringstream out;
        if (fl.format == "json") {
            if (multi) {
                nlohmann::ordered_json line;
                line["file"] = path;
                line["report"] = nlohmann::ordered_json::parse(report_to_json(report));
                out << line.dump() << "\n";
            } else {
                out << report_to_json(report) << "\n";
            }
        } else {
            if (multi) out << "=== " << path << " ===\n";
            out << report_to_text(report);
            if (fl.witness_trace && report.witness) out << witness_trace(program, *report.witness);
        }
        res.out = out.str();
    } catch (const parse_error& e) {
        res.code = exit_input;
        res.err = path + ": " + e.what() + "\n";
    } catch (const nonstrict_unsupported_error& e) {
        res.code = exit_input;
        res.err = path + ": " + std::string(e.what()) + "\n";
    } catch (const internal_error& e) {
        res.code = exit_internal;
        res.err = path + ": internal limit exceeded: " + std::string(e.what()) + "\n";
    } catch (const error& e) {
        res.code = std::string(e.what()).rfind("cannot open", 0) == 0 ? exit_input
                                                                      : exit_internal;
        res.err = path + ": " + std::string(e.what()) + "\n";
    }
    return res;
}

int cmd_analyze(const analyze_flags& fl) {
    const bool multi = fl.files.size() > 1;
    std::vector<file_outcome> results(fl.files.size());

    const unsigned jobs =
        std::max(1u, std::min<unsigned>(fl.jobs, static_cast<unsigned>(fl.files.size())));
    if (jobs == 1) {
        for (size_t i = 0; i < fl.files.size(); ++i)
            results[i] = analyze_one(fl.files[i], fl, multi);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (size_t i = t; i < fl.files.size(); i += jobs)
                    results[i] = analyze_one(fl.files[i], fl, multi);
            });
        for (auto& th : pool) th.join();
    }

    int code = exit_ok;
    for (const auto& r : results) {
        std::cout << r.out;
        std::cerr << r.err;
        code = std::max(code, r.code);
    }
    return code;
}

int cmd_fuzz(long count, size_t dim, long range, unsigned long seed, bool affine) {
    int code = exit_ok;
    long violations_total = 0;
    for (long i = 0; i < count; ++i) {
        fuzz_config cfg;
        cfg.n = dim;
        cfg.range = range;
        cfg.affine = affine;
        cfg.seed = seed + static_cast<unsigned long>(i);

        nlohmann::ordered_json line;
        line["seed"] = cfg.seed;
        try {
            const auto drawn = random_program(cfg);
            const auto report = analyze(drawn.program);

            diff_config dc;
            dc.seed = cfg.seed;
            const auto diff = differential_check(drawn.program, report.v, report.witness,
                                                 report.ant ? *report.ant
                                                            : sls_empty(drawn.program.a.rows()),
                                                 dc);
            line["verdict"] = verdict_name(report.v);
            line["checks"] = diff.checks;
            nlohmann::ordered_json viol = nlohmann::ordered_json::array();
            for (const auto& v : diff.violations) {
                std::string at = v.what + " at (";
                for (size_t k = 0; k < v.point.size(); ++k)
                    at += (k ? "," : "") + v.point[k].str();
                viol.push_back(at + ")");
            }
            line["violations"] = std::move(viol);
            violations_total += static_cast<long>(diff.violations.size());
        } catch (const error& e) {
            line["verdict"] = "ERROR";
            line["checks"] = 0;
            line["violations"] = nlohmann::ordered_json::array({std::string(e.what())});
            code = exit_internal;
        }
        std::cout << line.dump() << "\n";
    }
    std::cerr << count << " programs, " << violations_total << " violations\n";
    return code;
}

int cmd_simulate(const std::string& path, const std::string& input, long steps,
                 const std::string& domain) {
    const auto text = read_file(path);
    const auto program = build_program(parse(text), domain_from(domain));

    std::vector<scalar> x;
    std::stringstream ss(input);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        const auto l = piece.find_first_not_of(" \t");
        const auto r = piece.find_last_not_of(" \t");
        if (l == std::string::npos) throw error("empty coordinate in --input");
        const auto v = rational::parse(piece.substr(l, r - l + 1));
        if (!v) throw error("cannot parse coordinate '" + piece + "' in --input");
        x.emplace_back(*v);
    }
    if (x.size() != program.a.rows())
        throw error("--input has " + std::to_string(x.size()) + " coordinates, program has " +
                    std::to_string(program.a.rows()) + " variables");

    for (long k = 0; k <= steps; ++k) {
        std::cout << "k=" << k << "  x=(";
        for (size_t i = 0; i < x.size(); ++i) std::cout << (i ? ", " : "") << x[i].str();
        std::cout << ")\n";
        if (!guard_holds(program, x)) {
            std::cout << "terminated at step " << k << " (guard failed)\n";
            return exit_ok;
        }
        if (k < steps) x = loop_step(program, x);
    }
    std::cout << "survived " << steps << " steps\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"termination analysis for linear and affine while-loops"};
    app.require_subcommand(1);

    analyze_flags fl;
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze loop programs");
    analyze_cmd->add_option("files", fl.files, "loop program files")
        ->required()
        ->check(CLI::ExistingFile);
    analyze_cmd->add_option("--domain", fl.domain, "variable domain")
        ->check(CLI::IsMember({"int", "rat", "real"}))
        ->capture_default_str();
    analyze_cmd->add_option("--format", fl.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    analyze_cmd->add_flag("--emit-precondition", fl.emit_precondition,
                          "also emit the terminating precondition (complement)");
    analyze_cmd->add_flag("--witness", fl.witness_trace,
                          "print guard values along the witness orbit (text format)");
    analyze_cmd->add_option("--max-window", fl.max_window,
                            "steps a nontermination witness must survive")
        ->capture_default_str();
    analyze_cmd->add_option("--ilp-budget", fl.ilp_budget,
                            "branch-and-bound node budget for integer emptiness")
        ->capture_default_str();
    analyze_cmd->add_option("--seed", fl.seed, "seed for downstream sampling")
        ->capture_default_str();
    analyze_cmd->add_option("--jobs", fl.jobs, "analyze files concurrently")
        ->capture_default_str();

    long fz_count = 100, fz_range = 5;
    size_t fz_dim = 3;
    unsigned long fz_seed = 0;
    bool fz_affine = false;
    auto* fuzz_cmd =
        app.add_subcommand("fuzz", "random programs: analyze and cross-check by simulation");
    fuzz_cmd->add_option("--count", fz_count, "number of programs")->capture_default_str();
    fuzz_cmd->add_option("--dim", fz_dim, "number of variables")->capture_default_str();
    fuzz_cmd->add_option("--range", fz_range, "entry range [-m, m]")->capture_default_str();
    fuzz_cmd->add_option("--seed", fz_seed, "base seed")->capture_default_str();
    fuzz_cmd->add_flag("--affine", fz_affine, "draw affine programs");

    std::string sim_file, sim_input, sim_domain = "int";
    long sim_steps = 100;
    auto* sim_cmd = app.add_subcommand("simulate", "run a program exactly from a start point");
    sim_cmd->add_option("file", sim_file, "loop program file")
        ->required()
        ->check(CLI::ExistingFile);
    sim_cmd->add_option("--input", sim_input, "start point, e.g. \"1,-2,3/4\"")->required();
    sim_cmd->add_option("--steps", sim_steps, "maximum steps")->capture_default_str();
    sim_cmd->add_option("--domain", sim_domain, "variable domain")
        ->check(CLI::IsMember({"int", "rat", "real"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_input; // help/version are not errors
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(fl);
        if (fuzz_cmd->parsed()) return cmd_fuzz(fz_count, fz_dim, fz_range, fz_seed, fz_affine);
        if (sim_cmd->parsed()) return cmd_simulate(sim_file, sim_input, sim_steps, sim_domain);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const nonstrict_unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const internal_error& e) {
        std::cerr << "internal limit exceeded: " << e.what() << "\n";
        return exit_internal;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return std::string(e.what()).rfind("cannot open", 0) == 0 ? exit_input : exit_internal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_ok;
}
