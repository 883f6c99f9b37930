#include "doctest.h"

#include <random>

#include "antlyzer/frontend.hpp"
#include "test_util.hpp"

using namespace antlyzer;

namespace {

// reference semantics: run the body once, each assignment reading the
// already updated state
std::vector<rational> run_body(const program_ast& ast, std::vector<rational> state) {
    for (const auto& as : ast.body) {
        rational v = as.value.constant;
        for (size_t j = 0; j < state.size(); ++j) v += as.value.coeffs[j] * state[j];
        state[as.target] = v;
    }
    return state;
}

ast_expr expr_of(std::vector<rational> coeffs, rational constant) {
    ast_expr e;
    e.coeffs = std::move(coeffs);
    e.constant = std::move(constant);
    return e;
}

program_ast rand_ast(std::mt19937_64& rng) {
    static const std::vector<std::string> pool{"a", "b", "c"};
    program_ast ast;
    const size_t n = 1 + rng() % 3;
    ast.vars.assign(pool.begin(), pool.begin() + static_cast<long>(n));
    auto rand_expr = [&] {
        std::vector<rational> c(n);
        for (auto& v : c) v = testutil::rand_rational(rng, 3);
        return expr_of(std::move(c), testutil::rand_rational(rng, 3));
    };
    const size_t guards = 1 + rng() % 2;
    for (size_t i = 0; i < guards; ++i) {
        ast_condition cond;
        cond.lhs = rand_expr();
        cond.op = static_cast<rel_op>(rng() % 4);
        cond.rhs = rand_expr();
        ast.guard.push_back(std::move(cond));
    }
    const size_t body = rng() % 4;
    for (size_t i = 0; i < body; ++i) {
        ast_assignment as;
        as.target = rng() % n;
        as.value = rand_expr();
        ast.body.push_back(std::move(as));
    }
    return ast;
}

} // namespace

TEST_CASE("running example composes to the exact integer update") {
    const auto ast = parse(testutil::example_program_text());
    CHECK(ast.vars == std::vector<std::string>{"x", "y", "z"});
    const auto [a, c] = compose_assignments(ast);
    CHECK(a == matrix::from_int_rows({{-20, -9, 75}, {7, 8, -21}, {-7, -3, 26}}));
    for (const auto& v : c) CHECK(v == rational(0));
}

TEST_CASE("assignments read the already updated state") {
    const auto ast = parse("vars x, y; while (x > 0) { x := y; y := x; }");
    const auto [a, c] = compose_assignments(ast);
    // y := x sees the new x, so both components end up as the old y
    CHECK(a == matrix::from_int_rows({{0, 1}, {0, 1}}));
    // the textbook swap via a scratch variable still works out
    const auto swapped = parse("vars x, y, t; while (x > 0) { t := x; x := y; y := t; }");
    const auto [a2, c2] = compose_assignments(swapped);
    CHECK(a2 == matrix::from_int_rows({{0, 1, 0}, {1, 0, 0}, {1, 0, 0}}));
}

TEST_CASE("composition agrees with direct execution") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 100; ++t) {
        const auto ast = rand_ast(rng);
        const auto [a, c] = compose_assignments(ast);
        std::vector<rational> x0(ast.vars.size());
        for (auto& v : x0) v = testutil::rand_rational(rng, 5);
        const auto direct = run_body(ast, x0);
        for (size_t i = 0; i < x0.size(); ++i) {
            rational composed = c[i];
            for (size_t j = 0; j < x0.size(); ++j)
                composed += a.at(i, j).rational_value() * x0[j];
            CHECK(composed == direct[i]);
        }
    }
}

TEST_CASE("pretty printing round-trips") {
    std::mt19937_64 rng(72);
    for (int t = 0; t < 100; ++t) {
        const auto ast = rand_ast(rng);
        const auto text = pretty_print(ast);
        CHECK(parse(text) == ast);
    }
}

TEST_CASE("terms: implicit multiplication, signs, folded constants") {
    const auto ast = parse("vars x, y; while (x > 0) { x := 2*y - 1/2x + 3 - 1; }");
    REQUIRE(ast.body.size() == 1);
    CHECK(ast.body[0].value ==
          expr_of({rational(-1, 2), rational(2)}, rational(2)));
    const auto neg = parse("vars x; while (-x + 1 > -2) { x := -3/4x; }");
    CHECK(neg.guard[0].lhs == expr_of({rational(-1)}, rational(1)));
    CHECK(neg.guard[0].rhs == expr_of({rational(0)}, rational(-2)));
    CHECK(neg.body[0].value == expr_of({rational(-3, 4)}, rational(0)));
    // same variable mentioned twice folds
    const auto twice = parse("vars x; while (x > 0) { x := x + x; }");
    CHECK(twice.body[0].value == expr_of({rational(2)}, rational(0)));
}

TEST_CASE("parser rejections") {
    CHECK_THROWS_AS(parse("vars x, y; while (x > 0) { x := x*y; }"), nonlinear_term_error);
    CHECK_THROWS_AS(parse("vars x; while (x > 0) { x := x*2; }"), parse_error);
    CHECK_THROWS_AS(parse("vars x; while (z > 0) { x := x; }"), undeclared_variable_error);
    CHECK_THROWS_AS(parse("vars x; while (x > 0) { x := 1/0x; }"), parse_error);
    CHECK_THROWS_AS(parse("vars x; while (x > 0) { x := x; } trailing"), parse_error);
    CHECK_THROWS_AS(parse("vars x; while (x == 0) { x := x; }"), parse_error);
    try {
        parse("vars x;\nwhile (x > 0) { x := ; }");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 22);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("guard normalization per domain") {
    const auto ex = parse(testutil::example_program_text());
    const auto rows = normalize_guard(ex, domain_kind::integers);
    REQUIRE(rows.f.size() == 1);
    CHECK(rows.f[0].coeffs ==
          std::vector<scalar>{scalar(1), scalar(rational(-1, 2)), scalar(-2)});
    CHECK(rows.b[0] == rational(0));

    // strict "<" flips the row over any domain
    const auto lt = parse("vars x; while (x < 5) { x := x; }");
    for (auto d : {domain_kind::integers, domain_kind::rationals, domain_kind::reals}) {
        const auto r = normalize_guard(lt, d);
        CHECK(r.f[0].coeffs == std::vector<scalar>{scalar(-1)});
        CHECK(r.b[0] == rational(-5));
    }

    // non-strict bounds tighten by one step over the integers only
    const auto ge = parse("vars x; while (x >= 1) { x := x; }");
    const auto rge = normalize_guard(ge, domain_kind::integers);
    CHECK(rge.f[0].coeffs == std::vector<scalar>{scalar(1)});
    CHECK(rge.b[0] == rational(0));
    CHECK_THROWS_AS(normalize_guard(ge, domain_kind::rationals), nonstrict_unsupported_error);
    CHECK_THROWS_AS(normalize_guard(ge, domain_kind::reals), nonstrict_unsupported_error);

    const auto le = parse("vars x; while (x <= 5) { x := x; }");
    const auto rle = normalize_guard(le, domain_kind::integers);
    CHECK(rle.f[0].coeffs == std::vector<scalar>{scalar(-1)});
    CHECK(rle.b[0] == rational(-6));

    // fractional coefficients scale up before the bound drops
    const auto frac = parse("vars x; while (1/2x >= 3) { x := x; }");
    const auto rfrac = normalize_guard(frac, domain_kind::integers);
    CHECK(rfrac.f[0].coeffs == std::vector<scalar>{scalar(1)});
    CHECK(rfrac.b[0] == rational(5));
}

TEST_CASE("program building") {
    const auto ex = build_program(parse(testutil::example_program_text()),
                                  domain_kind::integers);
    CHECK(ex.is_homogeneous());
    CHECK(ex.names == std::vector<std::string>{"x", "y", "z"});
    CHECK(ex.domain == domain_kind::integers);
    CHECK(ex.a == matrix::from_int_rows({{-20, -9, 75}, {7, 8, -21}, {-7, -3, 26}}));

    const auto dbl =
        build_program(parse("vars x; while (x > 10) { x := 2x + 1; }"), domain_kind::rationals);
    CHECK(!dbl.is_homogeneous());
    CHECK(dbl.a == matrix::from_int_rows({{2}}));
    CHECK(dbl.b == std::vector<rational>{rational(10)});
    CHECK(dbl.c == std::vector<scalar>{scalar(1)});
}

TEST_CASE("domain names") {
    CHECK(domain_name(domain_kind::integers) == "int");
    CHECK(domain_name(domain_kind::rationals) == "rat");
    CHECK(domain_name(domain_kind::reals) == "real");
}
