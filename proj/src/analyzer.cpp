#include "antlyzer/analyzer.hpp"

#include <chrono>
#include <utility>

#include "antlyzer/ant.hpp"
#include "antlyzer/error.hpp"
#include "antlyzer/spectrum.hpp"

namespace antlyzer {

namespace {

std::vector<spectrum_summary_entry> summarize_spectrum(const spectrum_info& info) {
    std::vector<spectrum_summary_entry> out;
    out.reserve(info.classes.size());
    for (const auto& c : info.classes) {
        spectrum_summary_entry e;
        e.factor = c.factor.str("x");
        e.multiplicity = c.multiplicity;
        switch (c.kind) {
        case eigen_kind::rational_real: e.kind = "rational"; break;
        case eigen_kind::quadratic_real: e.kind = "real-quadratic"; break;
        case eigen_kind::complex_pair: e.kind = "complex-pair"; break;
        }
        if (c.kind != eigen_kind::complex_pair) e.value = c.value.str();
        e.module_sq = c.module_sq.str();
        if (!c.is_zero()) e.unity = unity_order(c);
        out.push_back(std::move(e));
    }
    return out;
}

bool update_is_integral(const loop_program& p) {
    for (size_t i = 0; i < p.a.rows(); ++i)
        for (size_t j = 0; j < p.a.cols(); ++j) {
            const scalar& v = p.a.at(i, j);
            if (!v.is_rational() || !v.rational_value().is_integer()) return false;
        }
    for (const auto& v : p.c)
        if (!v.is_rational() || !v.rational_value().is_integer()) return false;
    return true;
}

// The emptiness witness is some point of the ANT set; its orbit fails the
// guard only finitely often. Walk forward past the last failure and return
// the first state opening a clean stretch of max_window steps. The ANT set
// is closed under the update, so the advanced state still belongs to it.
std::vector<scalar> advance_witness(const loop_program& p, std::vector<scalar> x,
                                    long max_window) {
    constexpr long scan_cap = 2000; // failures past this would contradict membership
    const long horizon = scan_cap + max_window;
    std::vector<scalar> candidate; // first state of the current clean stretch
    long run = 0;
    for (long k = 0; k <= horizon; ++k) {
        if (guard_holds(p, x)) {
            if (run == 0) candidate = x;
            if (++run >= max_window) return candidate;
        } else {
            run = 0;
        }
        x = loop_step(p, x);
    }
    throw internal_error("witness advancement exhausted its horizon of " +
                         std::to_string(horizon) + " steps");
}

void fill_precondition(analysis_report& r, const analyze_options& opts) {
    if (!opts.emit_precondition || !r.ant) return;
    if (!sls_is_rational(*r.ant)) {
        r.notes.push_back("terminating precondition refused: the set has irrational "
                          "coefficients, so its complement is not representable here");
        return;
    }
    r.terminating_precondition = sls_complement(*r.ant);
}

} // namespace

std::string unknown_reason_name(unknown_reason r) {
    switch (r) {
    case unknown_reason::none: return "";
    case unknown_reason::unsupported_spectrum: return "unsupported_spectrum";
    case unknown_reason::assumption_g_violated: return "assumption_G_violated";
    case unknown_reason::assumption_a_violated: return "assumption_A_violated";
    case unknown_reason::ilp_budget_exhausted: return "ilp_budget_exhausted";
    }
    return "";
}

analysis_report analyze(const loop_program& p, const analyze_options& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    analysis_report r;
    r.domain = p.domain;
    r.names = p.names;
    r.assumption_g = "n/a";
    r.assumption_a = "n/a";
    r.assumption_h_after_power = "n/a";

    const auto finish = [&](analysis_report& rep) -> analysis_report& {
        rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        return rep;
    };

    const bool homogeneous = p.is_homogeneous();
    const matrix analyzed = homogeneous ? p.a : homogenize_update(p.a, p.c);

    const auto sp = decompose(analyzed);
    if (!sp.supported()) {
        r.v = verdict::unknown;
        r.reason = unknown_reason::unsupported_spectrum;
        r.notes.push_back("characteristic polynomial has the irreducible factor " +
                          sp.offending->str("x") + " of degree >= 3");
        return finish(r);
    }
    r.spectrum = summarize_spectrum(*sp.info);
    if (!homogeneous)
        r.notes.push_back("affine update homogenized: the spectrum shown includes the "
                          "eigenvalue 1 of the added coordinate");

    if (homogeneous) {
        const auto g = check_assumption_g(*sp.info);
        r.assumption_g = g.pass ? "pass" : "fail: " + g.detail;
        if (!g.pass) {
            r.v = verdict::unknown;
            r.reason = unknown_reason::assumption_g_violated;
            return finish(r);
        }
    } else {
        // condition (A) on the original update is exactly condition (G) on the
        // homogenized one; check it where the diagnostics read best
        const auto sp_orig = decompose(p.a);
        if (!sp_orig.supported())
            throw internal_error("original update unsupported but homogenization passed");
        const auto a_rep = check_assumption_a(*sp_orig.info);
        r.assumption_a = a_rep.pass ? "pass" : "fail: " + a_rep.detail;
        if (!a_rep.pass) {
            r.v = verdict::unknown;
            r.reason = unknown_reason::assumption_a_violated;
            return finish(r);
        }
    }

    r.n_period = power_period_n(analyzed, *sp.info);
    if (homogeneous) {
        r.ant = ant_homogeneous(p.a, p.f);
    } else {
        std::vector<row_form> guards;
        guards.reserve(p.f.size());
        for (size_t i = 0; i < p.f.size(); ++i)
            guards.emplace_back(p.f[i].coeffs, scalar(-p.b[i])); // f.x > b as f.x - b > 0
        r.ant = ant_affine(p.a, p.c, guards);
    }
    r.assumption_h_after_power = "pass"; // verified inside the power-period computation

    if (p.domain == domain_kind::integers && !update_is_integral(p))
        r.notes.push_back("update is not integral: a nontermination witness certifies the "
                          "rational orbit; TERMINATES verdicts are unaffected");

    emptiness_result em;
    switch (p.domain) {
    case domain_kind::integers: em = is_empty_integer(*r.ant, opts.ilp_budget); break;
    case domain_kind::rationals: em = is_empty_rational(*r.ant); break;
    case domain_kind::reals: em = is_empty_real(*r.ant); break;
    }

    switch (em.status) {
    case emptiness_status::empty:
        r.v = verdict::terminates;
        break;
    case emptiness_status::unknown:
        r.v = verdict::unknown;
        r.reason = unknown_reason::ilp_budget_exhausted;
        r.notes.push_back(em.note);
        break;
    case emptiness_status::non_empty: {
        r.v = verdict::nonterminates;
        auto w = advance_witness(p, em.witness, opts.max_window);
        if (!contains(*r.ant, w))
            throw internal_error("advanced witness escaped the computed set");
        r.witness = std::move(w);
        break;
    }
    }

    fill_precondition(r, opts);
    return finish(r);
}

} // namespace antlyzer
