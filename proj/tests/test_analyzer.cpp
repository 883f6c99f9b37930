#include "doctest.h"

#include <regex>

#include "antlyzer/analyzer.hpp"
#include "antlyzer/oracle.hpp"
#include "test_util.hpp"

using namespace antlyzer;

namespace {

analysis_report analyzed(const std::string& text, domain_kind d = domain_kind::integers,
                         analyze_options opts = {}) {
    return analyze(build_program(parse(text), d), opts);
}

const char* countdown_text = "vars x; while (x > 0) { x := x - 1; }";
const char* doubling_text = "vars x; while (x > 10) { x := 2x + 1; }";
const char* fib_text = "vars x, y; while (x > 0) { x := x + y; y := x - y; }";
const char* scaled_rotation_text =
    "vars x, y; while (x > 0) { y := 4x + 3y; x := 25/3x - 4/3y; }";
const char* mixed_module_text =
    "vars u, x, y; while (u > 0) { u := 5u; y := 4x + 3y; x := 25/3x - 4/3y; }";
const char* unsupported_text =
    "vars x, y, z; while (x > 0) { x := x + y; y := y + z; z := z - 2x; }";

} // namespace

TEST_CASE("running example: conditional nontermination with the frozen locus") {
    const auto r = analyzed(testutil::example_program_text());
    CHECK(r.v == verdict::nonterminates);
    CHECK(r.domain == domain_kind::integers);
    CHECK(r.n_period == 1);
    CHECK(r.assumption_g == "pass");
    CHECK(r.assumption_h_after_power == "pass");
    CHECK(r.reason == unknown_reason::none);
    REQUIRE(r.ant.has_value());
    CHECK(format_locus(*r.ant, r.names) ==
          "[[x<-y+3*z]]OR[[x==-y+3*z,-z<y]]OR[[x==4*z,y==-z,0<z]]");
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == std::vector<scalar>{scalar(75), scalar(-21), scalar(26)});
    CHECK(contains(*r.ant, *r.witness));
    // the verdict survives a simulation cross-check
    const auto p = build_program(parse(testutil::example_program_text()),
                                 domain_kind::integers);
    CHECK(!simulate(p, *r.witness, 2000).terminated);
}

TEST_CASE("countdown terminates everywhere") {
    analyze_options opts;
    opts.emit_precondition = true;
    const auto r = analyzed(countdown_text, domain_kind::integers, opts);
    CHECK(r.v == verdict::terminates);
    REQUIRE(r.ant.has_value());
    CHECK(r.ant->disjuncts.empty());
    CHECK(!r.witness.has_value());
    REQUIRE(r.terminating_precondition.has_value());
    CHECK(format_locus(*r.terminating_precondition, r.names) == "TRUE");
}

TEST_CASE("doubling diverges above the fixpoint") {
    analyze_options opts;
    opts.emit_precondition = true;
    const auto r = analyzed(doubling_text, domain_kind::integers, opts);
    CHECK(r.v == verdict::nonterminates);
    CHECK(r.n_period == 1);
    REQUIRE(r.ant.has_value());
    CHECK(format_locus(*r.ant, r.names) == "[[-1<x]]");
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == std::vector<scalar>{scalar(15)});
    REQUIRE(r.terminating_precondition.has_value());
    CHECK(format_locus(*r.terminating_precondition, r.names) == "[[x<-1]]OR[[x==-1]]");
    // affine analysis reports the homogenized spectrum, with a note
    CHECK(r.spectrum.size() == 2);
    bool noted = false;
    for (const auto& n : r.notes)
        if (n.find("homogeniz") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("golden ratio loop needs N = 2 and an irrational locus") {
    analyze_options opts;
    opts.emit_precondition = true;
    const auto r = analyzed(fib_text, domain_kind::integers, opts);
    CHECK(r.v == verdict::nonterminates);
    CHECK(r.n_period == 2);
    REQUIRE(r.ant.has_value());
    CHECK(format_locus(*r.ant, r.names) == "[[(1/2-1/2*sqrt(5))*y<x]]");
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == std::vector<scalar>{scalar(1), scalar(0)});
    // precondition refused: the complement is only defined for rational rows
    CHECK(!r.terminating_precondition.has_value());
    bool refused = false;
    for (const auto& n : r.notes)
        if (n.find("precondition") != std::string::npos) refused = true;
    CHECK(refused);
}

TEST_CASE("rotations terminate") {
    // a quarter turn is not a sequence of single-variable assignments, so build
    // the program from the update matrix instead of loop text
    const auto turn = matrix::from_int_rows({{0, -1}, {1, 0}});
    const auto quarter =
        analyze(testutil::make_homogeneous(turn, {{1, 0}}, domain_kind::integers));
    CHECK(quarter.v == verdict::terminates);
    CHECK(quarter.n_period == 4);
    const auto scaled = analyzed(scaled_rotation_text, domain_kind::reals);
    CHECK(scaled.v == verdict::terminates);
    CHECK(scaled.n_period == 1);
    REQUIRE(scaled.spectrum.size() == 1);
    CHECK(scaled.spectrum[0].factor == "x^2-6*x+25");
    CHECK(scaled.spectrum[0].kind == "complex-pair");
    CHECK(!scaled.spectrum[0].value.has_value());
    CHECK(!scaled.spectrum[0].unity.has_value());
}

TEST_CASE("split modules stop the analysis honestly") {
    const auto r = analyzed(mixed_module_text);
    CHECK(r.v == verdict::unknown);
    CHECK(r.reason == unknown_reason::assumption_g_violated);
    CHECK(r.assumption_g ==
          "fail: equal-module classes split on positive-power membership: x-5 vs x^2-6*x+25");
    CHECK(!r.ant.has_value());
    CHECK(r.n_period == 0);
}

TEST_CASE("cubic spectra are out of tier") {
    const auto r = analyzed(unsupported_text);
    CHECK(r.v == verdict::unknown);
    CHECK(r.reason == unknown_reason::unsupported_spectrum);
    CHECK(!r.ant.has_value());
    bool noted = false;
    for (const auto& n : r.notes)
        if (n.find("x^3") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("integer domain exhausts the branch-and-bound budget gracefully") {
    // the only integer point of the set (x = 5) sits outside the small probe
    // box, so emptiness needs branch and bound; a zero budget stops it cold
    analyze_options opts;
    opts.ilp_budget = 0;
    const auto r = analyzed("vars x; while (2x > 9 && x < 6) { x := x; }",
                            domain_kind::integers, opts);
    CHECK(r.v == verdict::unknown);
    CHECK(r.reason == unknown_reason::ilp_budget_exhausted);
    REQUIRE(r.ant.has_value()); // the set was still computed
    CHECK(!r.witness.has_value());
}

TEST_CASE("domains can disagree on the same loop") {
    // 2x = even forever: over the rationals 1/2 is reachable territory
    const auto text = "vars x; while (2x > 1) { x := 3x - 1; }";
    const auto over_int = analyzed(text, domain_kind::integers);
    const auto over_rat = analyzed(text, domain_kind::rationals);
    // fixpoint 1/2, guard x > 1/2: integers above 1/2 diverge, so both
    // domains agree here; the witnesses differ in kind
    CHECK(over_int.v == verdict::nonterminates);
    CHECK(over_rat.v == verdict::nonterminates);
    REQUIRE(over_int.witness.has_value());
    CHECK((*over_int.witness)[0].rational_value().is_integer());
    // shrink the region to (1/2, 1): only non-integers left
    const auto narrow = "vars x; while (2x > 1 && x < 1) { x := x; }";
    CHECK(analyzed(narrow, domain_kind::integers).v == verdict::terminates);
    CHECK(analyzed(narrow, domain_kind::rationals).v == verdict::nonterminates);
    CHECK(analyzed(narrow, domain_kind::reals).v == verdict::nonterminates);
}

TEST_CASE("non-integral updates over the integers carry a caveat") {
    const auto r = analyzed("vars x; while (x > 0) { x := 1/2x; }");
    bool noted = false;
    for (const auto& n : r.notes)
        if (n.find("integ") != std::string::npos) noted = true;
    CHECK(noted);
}

TEST_CASE("json reports are deterministic up to the timer") {
    const auto scrub = [](std::string s) {
        return std::regex_replace(s, std::regex("\"elapsed_ms\": ?[0-9]+"),
                                  "\"elapsed_ms\": 0");
    };
    const auto a = analyzed(testutil::example_program_text());
    const auto b = analyzed(testutil::example_program_text());
    CHECK(scrub(report_to_json(a)) == scrub(report_to_json(b)));
    // key order is part of the contract
    const auto j = report_to_json(a);
    const auto pos = [&](const char* key) { return j.find(key); };
    CHECK(pos("\"verdict\"") < pos("\"domain\""));
    CHECK(pos("\"domain\"") < pos("\"assumptions\""));
    CHECK(pos("\"assumptions\"") < pos("\"N\""));
    CHECK(pos("\"N\"") < pos("\"spectrum\""));
    CHECK(pos("\"spectrum\"") < pos("\"ant\""));
    CHECK(pos("\"ant\"") < pos("\"witness\""));
    CHECK(pos("\"witness\"") < pos("\"stats\""));
}

TEST_CASE("text report ends with the verdict") {
    for (const char* text : {countdown_text, doubling_text, mixed_module_text}) {
        const auto r = analyzed(text);
        const auto rendered = report_to_text(r);
        const auto last_newline = rendered.find_last_of('\n', rendered.size() - 2);
        const auto last_line = rendered.substr(last_newline + 1);
        CHECK(last_line == verdict_name(r.v) + "\n");
    }
}

TEST_CASE("integer and real emptiness agree on rational homogeneous conjuncts") {
    // scaling argument: a rational conjunct of homogeneous rows with a real
    // point has a rational one (LP vertex), and scaling clears denominators
    int rational_conjuncts = 0;
    for (int i = 0; i < 80; ++i) {
        fuzz_config cfg;
        cfg.n = 1 + static_cast<size_t>(i % 3);
        cfg.range = 5;
        cfg.seed = 5150u + static_cast<unsigned long>(i);
        const auto drawn = random_program(cfg);
        const auto r = analyze(drawn.program);
        if (!r.ant) continue;
        for (const auto& d : r.ant->disjuncts) {
            const auto single = testutil::sls_of(r.ant->dimension, {d});
            if (!sls_is_rational(single)) continue;
            ++rational_conjuncts;
            CHECK(is_empty_integer(single).status == is_empty_real(single).status);
        }
    }
    CHECK(rational_conjuncts > 20); // the draws must actually exercise the claim
}

TEST_CASE("analysis is deterministic across repeated runs") {
    for (const char* text : {fib_text, doubling_text, scaled_rotation_text}) {
        const auto a = analyzed(text);
        const auto b = analyzed(text);
        CHECK(a.v == b.v);
        CHECK(a.n_period == b.n_period);
        CHECK(a.witness.has_value() == b.witness.has_value());
        if (a.witness) CHECK(*a.witness == *b.witness);
        if (a.ant) CHECK(format_locus(*a.ant, a.names) == format_locus(*b.ant, b.names));
    }
}
