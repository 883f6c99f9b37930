#include "doctest.h"

#include "antlyzer/spectrum.hpp"
#include "test_util.hpp"

using namespace antlyzer;

namespace {

spectrum_info decomposed(const matrix& a) {
    auto r = decompose(a);
    REQUIRE(r.supported());
    return *r.info;
}

const eigen_class& class_with_factor(const spectrum_info& s, const std::string& f,
                                     int which = 0) {
    for (const auto& c : s.classes)
        if (c.factor.str() == f && which-- == 0) return c;
    FAIL(("no class with factor " + f));
    return s.classes.front();
}

matrix companion(const unipoly& p) { // p monic
    const size_t n = static_cast<size_t>(p.degree());
    matrix c(n, n);
    for (size_t i = 1; i < n; ++i) c.at(i, i - 1) = scalar(1);
    for (size_t i = 0; i < n; ++i) c.at(i, n - 1) = scalar(-p.coeff(i));
    return c;
}

const matrix quarter_turn = matrix::from_int_rows({{0, -1}, {1, 0}});
const matrix scaled_turn = matrix::from_int_rows({{3, -4}, {4, 3}});

} // namespace

TEST_CASE("running example spectrum: three simple rational eigenvalues") {
    const matrix a = matrix::from_int_rows({{-20, -9, 75}, {7, 8, -21}, {-7, -3, 26}});
    const auto s = decomposed(a);
    REQUIRE(s.classes.size() == 3);
    const std::vector<std::pair<std::string, long>> expected{{"x-1", 1}, {"x-5", 25}, {"x-8", 64}};
    for (const auto& [f, msq] : expected) {
        const auto& c = class_with_factor(s, f);
        CHECK(c.kind == eigen_kind::rational_real);
        CHECK(c.multiplicity == 1);
        CHECK(c.space_dim == 1);
        CHECK(c.module_sq == scalar(msq));
        CHECK(unity_order(c) == 1);
    }
    CHECK(check_assumption_h(s).pass);
    CHECK(check_assumption_g(s).pass);
    CHECK(check_assumption_a(s).pass);
    CHECK(power_period_n(a, s) == 1);
}

TEST_CASE("golden ratio pair: two real roots of one irreducible quadratic") {
    const matrix fib = matrix::from_int_rows({{1, 1}, {1, 0}});
    const auto s = decomposed(fib);
    REQUIRE(s.classes.size() == 2);
    const scalar half(rational(1, 2));
    const scalar phi = half + half * scalar::sqrt_int(5);
    const scalar psi = half - half * scalar::sqrt_int(5);
    for (const auto& c : s.classes) {
        CHECK(c.kind == eigen_kind::quadratic_real);
        CHECK(c.factor.str() == "x^2-x-1");
        CHECK(c.multiplicity == 1);
        CHECK(c.space_dim == 1);
        CHECK(c.module_sq == c.value * c.value);
        CHECK((c.value == phi || c.value == psi));
        CHECK(unity_order(c) == (c.value == phi ? 1 : 2));
    }
    const auto h = check_assumption_h(s);
    CHECK(!h.pass);
    CHECK(h.detail == "negative real eigenvalue, factor x^2-x-1");
    CHECK(check_assumption_g(s).pass);
    CHECK(power_period_n(fib, s) == 2);
}

TEST_CASE("quarter turn: fourth root of unity") {
    const auto s = decomposed(quarter_turn);
    REQUIRE(s.classes.size() == 1);
    const auto& c = s.classes[0];
    CHECK(c.kind == eigen_kind::complex_pair);
    CHECK(c.factor.str() == "x^2+1");
    CHECK(c.trace_s == rational(0));
    CHECK(c.norm_p == rational(1));
    CHECK(c.module_sq == scalar(1));
    CHECK(c.space_dim == 2);
    CHECK(unity_order(c) == 4);
    CHECK(check_assumption_h(s).pass);
    CHECK(check_assumption_g(s).pass);
    CHECK(check_assumption_a(s).pass); // i^4 = 1 is a positive power
    CHECK(power_period_n(quarter_turn, s) == 4);
    CHECK(mat_pow(quarter_turn, 4) == matrix::identity(2));
}

TEST_CASE("third and sixth order rotations") {
    const matrix third = companion(unipoly({rational(1), rational(1), rational(1)}));
    const auto s3 = decomposed(third);
    CHECK(unity_order(s3.classes[0]) == 3);
    CHECK(power_period_n(third, s3) == 3);
    const matrix sixth = companion(unipoly({rational(1), rational(-1), rational(1)}));
    const auto s6 = decomposed(sixth);
    CHECK(unity_order(s6.classes[0]) == 6);
    CHECK(power_period_n(sixth, s6) == 6);
}

TEST_CASE("scaled rotation: no power is ever positive") {
    const auto s = decomposed(scaled_turn);
    REQUIRE(s.classes.size() == 1);
    const auto& c = s.classes[0];
    CHECK(c.factor.str() == "x^2-6*x+25");
    CHECK(c.trace_s == rational(6));
    CHECK(c.norm_p == rational(25));
    CHECK(c.module_sq == scalar(25));
    CHECK(!unity_order(c).has_value());
    CHECK(check_assumption_h(s).pass);
    CHECK(check_assumption_g(s).pass);
    CHECK(check_assumption_a(s).pass); // module 25, the unit-circle clause is vacuous
    CHECK(power_period_n(scaled_turn, s) == 1);
}

TEST_CASE("irrational rotation on the unit circle fails the power condition") {
    const scalar f35(rational(3, 5)), f45(rational(4, 5));
    const matrix a = matrix::from_rows({{f35, scalar(0) - f45}, {f45, f35}});
    const auto s = decomposed(a);
    CHECK(check_assumption_g(s).pass);
    const auto r = check_assumption_a(s);
    CHECK(!r.pass);
    CHECK(r.detail == "module-1 class without a positive power, factor x^2-6/5*x+1");
}

TEST_CASE("equal modules split on positive-power membership") {
    // eigenvalue 5 next to the pair 3 +- 4i: same module, one rotates forever
    const matrix a =
        matrix::from_int_rows({{5, 0, 0}, {0, 3, -4}, {0, 4, 3}});
    const auto s = decomposed(a);
    const auto g = check_assumption_g(s);
    CHECK(!g.pass);
    CHECK(g.detail ==
          "equal-module classes split on positive-power membership: x-5 vs x^2-6*x+25");
    CHECK(!check_assumption_a(s).pass);
    const auto h = check_assumption_h(s);
    CHECK(!h.pass);
    CHECK(h.detail ==
          "positive eigenvalue of factor x-5 shares its module with factor x^2-6*x+25");
}

TEST_CASE("negative real eigenvalues square away") {
    const matrix a = matrix::from_int_rows({{2, 0}, {0, -2}});
    const auto s = decomposed(a);
    const auto h = check_assumption_h(s);
    CHECK(!h.pass);
    CHECK(h.detail == "negative real eigenvalue, factor x+2");
    CHECK(check_assumption_g(s).pass); // both 2 and -2 have positive powers
    CHECK(power_period_n(a, s) == 2);
    const matrix neg = matrix::from_int_rows({{-3}});
    const auto sn = decomposed(neg);
    CHECK(unity_order(sn.classes[0]) == 2);
    CHECK(power_period_n(neg, sn) == 2);
}

TEST_CASE("zero eigenvalues carry no angular order") {
    const matrix nil = matrix::from_int_rows({{0, 1}, {0, 0}});
    const auto s = decomposed(nil);
    REQUIRE(s.classes.size() == 1);
    CHECK(s.classes[0].is_zero());
    CHECK(s.classes[0].multiplicity == 2);
    CHECK_THROWS_AS(unity_order(s.classes[0]), precondition_error);
    CHECK(check_assumption_h(s).pass);
    CHECK(check_assumption_g(s).pass);
    CHECK(power_period_n(nil, s) == 1);
}

TEST_CASE("repeated complex pair stays one class") {
    const matrix a = matrix::from_int_rows(
        {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
    const auto s = decomposed(a);
    REQUIRE(s.classes.size() == 1);
    CHECK(s.classes[0].factor.str() == "x^2+1");
    CHECK(s.classes[0].multiplicity == 2);
    CHECK(s.classes[0].space_dim == 4);
    CHECK(unity_order(s.classes[0]) == 4);
}

TEST_CASE("jordan block keeps its full invariant subspace") {
    const matrix a = matrix::from_int_rows({{2, 1}, {0, 2}});
    const auto s = decomposed(a);
    REQUIRE(s.classes.size() == 1);
    CHECK(s.classes[0].value == scalar(2));
    CHECK(s.classes[0].multiplicity == 2);
    CHECK(s.classes[0].space_dim == 2);
    CHECK(s.classes[0].projector == matrix::identity(2));
}

TEST_CASE("irreducible cubic factors are classified as out of tier") {
    const unipoly cubic({rational(-2), rational(-1), rational(0), rational(1)}); // x^3-x-2
    const auto r = decompose(companion(cubic));
    CHECK(!r.supported());
    REQUIRE(r.offending.has_value());
    CHECK(*r.offending == cubic);
    // same cubic hiding next to a supported eigenvalue
    matrix mixed(4, 4);
    mixed.at(0, 0) = scalar(2);
    const matrix comp = companion(cubic);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) mixed.at(i + 1, j + 1) = comp.at(i, j);
    const auto r2 = decompose(mixed);
    CHECK(!r2.supported());
    REQUIRE(r2.offending.has_value());
    CHECK(*r2.offending == cubic);
}
