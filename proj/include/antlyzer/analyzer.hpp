#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antlyzer/frontend.hpp"
#include "antlyzer/oracle.hpp"
#include "antlyzer/semilinear.hpp"

namespace antlyzer {

enum class unknown_reason {
    none,
    unsupported_spectrum,
    assumption_g_violated,
    assumption_a_violated,
    ilp_budget_exhausted,
};

// json token for the reason; "" when none
std::string unknown_reason_name(unknown_reason r);

struct analyze_options {
    bool emit_precondition = false; // DNF complement can blow up, so opt-in
    long max_window = 1000;         // a reported witness must survive this many steps
    long ilp_budget = 200000;       // branch-and-bound node budget (integer domain)
    unsigned long seed = 0;         // reserved for downstream sampling; analyze() is deterministic
};

struct spectrum_summary_entry {
    std::string factor; // irreducible factor of the characteristic polynomial, in x
    int multiplicity = 1;
    std::string kind;               // "rational" | "real-quadratic" | "complex-pair"
    std::optional<std::string> value; // eigenvalue for the real kinds
    std::string module_sq;            // |eigenvalue|^2, comparable across classes
    std::optional<int> unity; // order of eigenvalue/|eigenvalue| as a root of unity
};

struct analysis_report {
    verdict v = verdict::unknown;
    domain_kind domain = domain_kind::integers;
    std::vector<std::string> names; // variable order for locus printing

    // spectrum of the analyzed update: A itself for a homogeneous program,
    // the homogenized (n+1)-square matrix for an affine one
    std::vector<spectrum_summary_entry> spectrum;

    std::string assumption_g;             // "pass" | "fail: ..." | "n/a"
    std::string assumption_a;             // same, checked on the original update
    std::string assumption_h_after_power; // "pass" once the construction ran

    long n_period = 0; // power period N; 0 = not reached
    std::optional<semilinear_set> ant;
    std::optional<std::vector<scalar>> witness; // survives max_window steps
    std::optional<semilinear_set> terminating_precondition;

    unknown_reason reason = unknown_reason::none;
    std::vector<std::string> notes;
    long elapsed_ms = 0;
};

// Full pipeline: spectrum -> assumption checks -> ANT construction ->
// emptiness over the program's domain -> verdict. Every analysis failure
// mode is an UNKNOWN verdict with a reason; only resource exhaustion in the
// witness search throws (internal_error).
analysis_report analyze(const loop_program& p, const analyze_options& opts = {});

// serialization (report.cpp); json is deterministic except stats.elapsed_ms
std::string report_to_json(const analysis_report& r);
std::string report_to_text(const analysis_report& r);

} // namespace antlyzer
