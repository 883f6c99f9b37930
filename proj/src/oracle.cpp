#include "antlyzer/oracle.hpp"

#include <random>

#include "antlyzer/error.hpp"
#include "antlyzer/spectrum.hpp"

namespace antlyzer {

bool guard_holds(const loop_program& p, const std::vector<scalar>& x) {
    for (size_t i = 0; i < p.f.size(); ++i) {
        const scalar v = p.f[i].eval(x) - scalar(p.b[i]);
        if (v.sign() <= 0) return false;
    }
    return true;
}

std::vector<scalar> loop_step(const loop_program& p, const std::vector<scalar>& x) {
    std::vector<scalar> y = p.a.apply(x);
    for (size_t i = 0; i < y.size(); ++i)
        if (!p.c[i].is_zero()) y[i] = y[i] + p.c[i];
    return y;
}

std::string verdict_name(verdict v) {
    switch (v) {
        case verdict::terminates: return "TERMINATES";
        case verdict::nonterminates: return "NONTERMINATES";
        case verdict::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

sim_result simulate(const loop_program& p, const std::vector<scalar>& x0, long k_max) {
    if (x0.size() != p.a.rows())
        throw precondition_error("simulate: initial state has the wrong dimension");
    std::vector<scalar> x = x0;
    for (long k = 0; k < k_max; ++k) {
        if (!guard_holds(p, x)) return {true, k};
        x = loop_step(p, x);
    }
    return {false, k_max};
}

std::vector<std::vector<scalar>> trajectory_values(const loop_program& p,
                                                   const std::vector<scalar>& x0, long k_max) {
    if (x0.size() != p.a.rows())
        throw precondition_error("trajectory: initial state has the wrong dimension");
    std::vector<std::vector<scalar>> out;
    out.reserve(static_cast<size_t>(k_max) + 1);
    std::vector<scalar> x = x0;
    for (long k = 0;; ++k) {
        std::vector<scalar> vals;
        vals.reserve(p.f.size());
        for (const auto& f : p.f) vals.push_back(f.eval(x));
        out.push_back(std::move(vals));
        if (k == k_max) break;
        x = loop_step(p, x);
    }
    return out;
}

namespace {

// Walk the orbit until the guard failures die out: success once tail_window
// failure-free steps follow the last failure seen, abandoned at hard_cap.
// A point whose dominant coefficient has the wrong sign fails forever and
// runs into the cap; a slow-onset member just moves the suffix out.
// Returns the last failure index (-1 for a clean orbit) and sets *settled.
long settle_scan(const loop_program& p, const std::vector<scalar>& x0, long tail_window,
                 long hard_cap, bool* settled) {
    long last = -1;
    std::vector<scalar> x = x0;
    for (long k = 0; k <= hard_cap; ++k) {
        if (!guard_holds(p, x)) last = k;
        if (k - last >= tail_window) {
            *settled = true;
            return last;
        }
        x = loop_step(p, x);
    }
    *settled = false;
    return last;
}

} // namespace

diff_report differential_check(const loop_program& p, verdict v,
                               const std::optional<std::vector<scalar>>& witness,
                               const semilinear_set& ant, const diff_config& cfg) {
    diff_report rep;

    if (v == verdict::unknown) {
        rep.notes.push_back("verdict UNKNOWN: nothing to validate");
        return rep;
    }

    if (v == verdict::nonterminates) {
        ++rep.checks;
        if (!witness) {
            rep.violations.push_back({"NONTERMINATES without a witness", {}});
        } else {
            const auto sim = simulate(p, *witness, cfg.survive_window);
            if (sim.terminated)
                rep.violations.push_back(
                    {"witness terminated at step " + std::to_string(sim.steps), *witness});
        }
    }

    // (ii) one sample per ANT disjunct: failures must clear out of the tail
    int sampled = 0;
    for (const auto& d : ant.disjuncts) {
        if (sampled >= cfg.max_samples) break;
        semilinear_set one{ant.dimension, {d}};
        const auto pt = is_empty_real(one);
        if (pt.status != emptiness_status::non_empty) continue;
        ++sampled;
        ++rep.checks;
        bool settled = false;
        const long lf = settle_scan(p, pt.witness, cfg.tail_window, cfg.tail_hard_cap, &settled);
        if (!settled)
            rep.violations.push_back(
                {"ANT sample guard failures never settled, last at step " + std::to_string(lf),
                 pt.witness});
    }

    // (iii) integer samples outside the set must terminate
    if (!sls_is_rational(ant)) {
        rep.notes.push_back("complement sampling skipped: ANT has irrational coefficients");
        return rep;
    }
    const auto co = simplify_over_reals(sls_complement(ant));
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> entry(-10, 10);
    int co_sampled = 0;
    for (const auto& d : co.disjuncts) {
        if (co_sampled >= cfg.max_samples) break;
        semilinear_set one{co.dimension, {d}};
        const auto pt = is_empty_integer(one, 20000);
        if (pt.status != emptiness_status::non_empty) continue;
        ++co_sampled;
        ++rep.checks;
        const auto sim = simulate(p, pt.witness, cfg.terminate_window);
        if (!sim.terminated)
            rep.violations.push_back({"complement sample survived " +
                                          std::to_string(cfg.terminate_window) + " steps",
                                      pt.witness});
    }
    // a few random integer points classified exactly, then checked both ways
    for (int t = 0; t < cfg.max_samples; ++t) {
        std::vector<scalar> x;
        x.reserve(ant.dimension);
        for (size_t i = 0; i < ant.dimension; ++i) x.push_back(scalar(entry(rng)));
        ++rep.checks;
        if (contains(ant, x)) {
            bool settled = false;
            const long lf = settle_scan(p, x, cfg.tail_window, cfg.tail_hard_cap, &settled);
            if (!settled)
                rep.violations.push_back(
                    {"ANT point guard failures never settled, last at step " + std::to_string(lf),
                     x});
        } else {
            const auto sim = simulate(p, x, cfg.terminate_window);
            if (!sim.terminated)
                rep.violations.push_back({"point outside ANT survived " +
                                              std::to_string(cfg.terminate_window) + " steps",
                                          x});
        }
    }
    return rep;
}

random_program_result random_program(const fuzz_config& cfg) {
    if (cfg.n == 0 || cfg.range <= 0 || cfg.rows == 0)
        throw precondition_error("random_program: need n >= 1, range >= 1, rows >= 1");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> entry(-cfg.range, cfg.range);

    random_program_result out;
    for (long attempt = 0;; ++attempt) {
        if (attempt > 10000)
            throw internal_error("random_program: no supported spectrum in 10000 draws");
        matrix a(cfg.n, cfg.n);
        for (size_t i = 0; i < cfg.n; ++i)
            for (size_t j = 0; j < cfg.n; ++j) a.at(i, j) = scalar(entry(rng));
        if (!decompose(a).supported()) {
            ++out.rejected;
            continue;
        }
        out.program.a = std::move(a);
        break;
    }

    auto nonzero_row = [&]() {
        std::vector<scalar> row(cfg.n);
        for (;;) {
            bool any = false;
            for (size_t j = 0; j < cfg.n; ++j) {
                const long v = entry(rng);
                row[j] = scalar(v);
                any = any || v != 0;
            }
            if (any) return row;
        }
    };

    for (size_t i = 0; i < cfg.rows; ++i) {
        row_form f(nonzero_row());
        out.program.f.push_back(std::move(f));
        out.program.b.push_back(cfg.affine ? rational(entry(rng)) : rational(0));
    }
    for (size_t i = 0; i < cfg.n; ++i)
        out.program.c.push_back(cfg.affine ? scalar(entry(rng)) : scalar(0));
    for (size_t i = 0; i < cfg.n; ++i) out.program.names.push_back("x" + std::to_string(i + 1));
    out.program.domain = cfg.domain;
    return out;
}

} // namespace antlyzer
