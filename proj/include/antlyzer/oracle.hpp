#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antlyzer/frontend.hpp"
#include "antlyzer/semilinear.hpp"

namespace antlyzer {

enum class verdict { terminates, nonterminates, unknown };

std::string verdict_name(verdict v);

struct sim_result {
    bool terminated = false;
    long steps = 0; // failure index when terminated, else the window that was survived
};

// one loop iteration x := A x + c, and the guard conjunction f_i . x > b_i
std::vector<scalar> loop_step(const loop_program& p, const std::vector<scalar>& x);
bool guard_holds(const loop_program& p, const std::vector<scalar>& x);

// Exact iteration of x := A x + c; the loop runs while every guard row
// satisfies f_i . x > b_i. Terminated(k) means the guard held for 0..k-1 and
// failed at k. x0 may have irrational coordinates (ANT sample points do).
sim_result simulate(const loop_program& p, const std::vector<scalar>& x0, long k_max);

// raw guard-row values f_i(x_k) for k = 0..k_max (inclusive), regardless of
// whether the guard fails along the way
std::vector<std::vector<scalar>> trajectory_values(const loop_program& p,
                                                   const std::vector<scalar>& x0, long k_max);

struct diff_config {
    long survive_window = 1000;    // NONTERMINATES witnesses must survive this
    long terminate_window = 10000; // complement samples must halt within this
    long tail_window = 200;        // ANT samples: failure-free suffix of this length
    long tail_hard_cap = 20000;    // ... found within this many steps
    int max_samples = 8;
    unsigned long seed = 0;
};

struct diff_violation {
    std::string what;
    std::vector<scalar> point;
};

struct diff_report {
    int checks = 0;
    std::vector<diff_violation> violations;
    std::vector<std::string> notes; // skipped checks and why

    bool consistent() const { return violations.empty(); }
};

// Cross-validate an analysis outcome against bounded exact simulation:
// (i) a NONTERMINATES witness survives the window, (ii) guard failures along
// sampled ANT orbits settle: a failure-free suffix of tail_window steps shows
// up within tail_hard_cap (near-boundary samples can have onsets far past any
// fixed window, so the scan extends itself past the last failure seen),
// (iii) sampled integer points outside the ANT set terminate (complement
// sampling is skipped with a note when the set has irrational coefficients).
diff_report differential_check(const loop_program& p, verdict v,
                               const std::optional<std::vector<scalar>>& witness,
                               const semilinear_set& ant, const diff_config& cfg = {});

struct fuzz_config {
    size_t n = 3;
    long range = 5;
    size_t rows = 1;
    bool affine = false;
    unsigned long seed = 0;
    domain_kind domain = domain_kind::integers;
};

struct random_program_result {
    loop_program program;
    long rejected = 0; // draws discarded for an unsupported spectrum
};

// Deterministic for a fixed config. Draws integer entries until the update
// matrix has a supported spectrum (the rejection count is reported).
random_program_result random_program(const fuzz_config& cfg);

} // namespace antlyzer
