#include "doctest.h"

#include <random>

#include "antlyzer/semilinear.hpp"
#include "test_util.hpp"

using namespace antlyzer;

namespace {

using testutil::lc;
using testutil::sls_of;

bool integral(const std::vector<scalar>& x) {
    for (const auto& v : x)
        if (!v.is_rational() || !v.rational_value().is_integer()) return false;
    return true;
}

semilinear_set rand_rational_set(std::mt19937_64& rng, size_t dim) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> count(1, 2);
    semilinear_set s;
    s.dimension = dim;
    const int nd = count(rng);
    for (int d = 0; d < nd; ++d) {
        conjunct c;
        const int nr = count(rng);
        for (int r = 0; r < nr; ++r) {
            std::vector<long> row(dim);
            for (auto& v : row) v = coeff(rng);
            c.constraints.push_back(
                lc(row, coeff(rng), rng() % 2 ? relation::gt : relation::eq));
        }
        s.disjuncts.push_back(std::move(c));
    }
    return s;
}

} // namespace

TEST_CASE("constraint canonicalization scales to coprime integers") {
    const auto eq = canonicalize_constraint(lc({2, 4}, 6, relation::eq));
    CHECK(eq.coeffs == std::vector<scalar>{scalar(1), scalar(2)});
    CHECK(eq.constant == scalar(3));
    // equality rows flip to a positive leading coefficient
    const auto flipped = canonicalize_constraint(lc({-2, -4}, -6, relation::eq));
    CHECK(flipped.coeffs == eq.coeffs);
    CHECK(flipped.constant == eq.constant);
    // strict rows only admit positive scales: the sign pattern survives
    const auto gt = canonicalize_constraint(lc({-2, 4}, 6, relation::gt));
    CHECK(gt.coeffs == std::vector<scalar>{scalar(-1), scalar(2)});
    CHECK(gt.constant == scalar(3));
    // fractions clear to integers
    conjunct frac;
    frac.constraints.push_back({{scalar(rational(1, 2)), scalar(rational(1, 3))},
                                scalar(rational(1, 6)),
                                relation::gt});
    const auto canon = canonicalize_constraint(frac.constraints[0]);
    CHECK(canon.coeffs == std::vector<scalar>{scalar(3), scalar(2)});
    CHECK(canon.constant == scalar(1));
}

TEST_CASE("irrational rows normalize the leading coefficient to one") {
    const scalar half(rational(1, 2));
    const scalar phi = half + half * scalar::sqrt_int(5);
    linear_constraint row{{phi, scalar(1)}, scalar(0), relation::gt};
    const auto canon = canonicalize_constraint(row);
    CHECK(canon.coeffs[0] == scalar(1));
    CHECK(canon.coeffs[1] == phi - scalar(1)); // 1/phi
    CHECK(canon.constant.is_zero());
}

TEST_CASE("conjunct canonicalization drops trivial rows and duplicates") {
    conjunct c;
    c.constraints.push_back(lc({1, -1}, 0, relation::gt));
    c.constraints.push_back(lc({2, -2}, 0, relation::gt)); // same row, scaled
    c.constraints.push_back(lc({0, 0}, 5, relation::gt));  // 5 > 0, trivially true
    c.constraints.push_back(lc({0, 0}, 0, relation::eq));  // 0 = 0
    const auto canon = canonicalize_conjunct(c);
    REQUIRE(canon.has_value());
    CHECK(canon->constraints.size() == 1);
    // a trivially false row kills the conjunct
    conjunct dead;
    dead.constraints.push_back(lc({0, 0}, 0, relation::gt));
    CHECK(!canonicalize_conjunct(dead).has_value());
    conjunct dead2;
    dead2.constraints.push_back(lc({0, 0}, 3, relation::eq));
    CHECK(!canonicalize_conjunct(dead2).has_value());
}

TEST_CASE("equalities with radicals force each radical part to vanish") {
    const scalar half(rational(1, 2));
    const scalar phi = half + half * scalar::sqrt_int(5);
    const linear_constraint row{{phi, scalar(1)}, scalar(0), relation::eq};
    const auto rows = split_equality_by_radicand(row);
    REQUIRE(rows.size() == 2);
    conjunct c{rows};
    // rational solutions of phi*x + y = 0 are exactly x = y = 0
    const auto expected = sls_of(2, {conjunct{{lc({1, 0}, 0, relation::eq),
                                               lc({0, 1}, 0, relation::eq)}}});
    CHECK(sls_equivalent(sls_of(2, {c}), expected));
    // rational equalities pass through as one row
    CHECK(split_equality_by_radicand(lc({2, 3}, -5, relation::eq)).size() == 1);
}

TEST_CASE("set operations have the right membership semantics") {
    // sampling keeps this cheap: nesting complements of multi-disjunct sets
    // multiplies conjunct counts, which exact equivalence would have to LP away
    std::mt19937_64 rng(51);
    for (int t = 0; t < 40; ++t) {
        const size_t dim = 1 + rng() % 2;
        const auto a = rand_rational_set(rng, dim);
        const auto b = rand_rational_set(rng, dim);
        const auto u = sls_union(a, b);
        const auto i = sls_intersect(a, b);
        const auto na = sls_complement(a);
        for (int s = 0; s < 15; ++s) {
            std::vector<scalar> x(dim);
            for (auto& v : x) v = scalar(testutil::rand_rational(rng, 4));
            CHECK(contains(u, x) == (contains(a, x) || contains(b, x)));
            CHECK(contains(i, x) == (contains(a, x) && contains(b, x)));
            CHECK(contains(na, x) == !contains(a, x));
        }
        CHECK(is_empty_real(sls_intersect(a, na)).status == emptiness_status::empty);
    }
}

TEST_CASE("set algebra identities hold exactly on small sets") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> coeff(-3, 3);
    auto rand_conjunct_set = [&](size_t dim) {
        conjunct c;
        const int nr = 1 + static_cast<int>(rng() % 2);
        for (int r = 0; r < nr; ++r) {
            std::vector<long> row(dim);
            for (auto& v : row) v = coeff(rng);
            c.constraints.push_back(
                lc(row, coeff(rng), rng() % 2 ? relation::gt : relation::eq));
        }
        return sls_of(dim, {c});
    };
    for (int t = 0; t < 25; ++t) {
        const size_t dim = 1 + rng() % 2;
        const auto a = rand_conjunct_set(dim);
        const auto b = rand_conjunct_set(dim);
        CHECK(sls_equivalent(a, a));
        CHECK(sls_equivalent(sls_union(a, sls_empty(dim)), a));
        CHECK(sls_equivalent(sls_intersect(a, sls_universe(dim)), a));
        CHECK(sls_equivalent(sls_complement(sls_complement(a)), a));
        CHECK(sls_equivalent(sls_union(a, sls_complement(a)), sls_universe(dim)));
        CHECK(sls_equivalent(sls_intersect(a, b), sls_intersect(b, a)));
        CHECK(sls_equivalent(sls_complement(sls_union(a, b)),
                             sls_intersect(sls_complement(a), sls_complement(b))));
    }
}

TEST_CASE("emptiness over the reals, rationals and integers") {
    // x > -1: nonempty everywhere
    const auto open = sls_of(1, {conjunct{{lc({1}, 1, relation::gt)}}});
    for (auto* f : {&is_empty_real, &is_empty_rational}) {
        const auto r = f(open);
        CHECK(r.status == emptiness_status::non_empty);
        CHECK(contains(open, r.witness));
    }
    const auto oi = is_empty_integer(open);
    CHECK(oi.status == emptiness_status::non_empty);
    CHECK(contains(open, oi.witness));
    CHECK(integral(oi.witness));

    // 2x = 1: rational point, no integer point
    const auto half_line = sls_of(1, {conjunct{{lc({2}, -1, relation::eq)}}});
    const auto hr = is_empty_rational(half_line);
    CHECK(hr.status == emptiness_status::non_empty);
    CHECK(hr.witness[0] == scalar(rational(1, 2)));
    CHECK(is_empty_integer(half_line).status == emptiness_status::empty);

    // 0 < x < 1: real points only
    const auto gap = sls_of(1, {conjunct{{lc({1}, 0, relation::gt), lc({-1}, 1, relation::gt)}}});
    CHECK(is_empty_real(gap).status == emptiness_status::non_empty);
    CHECK(is_empty_rational(gap).status == emptiness_status::non_empty);
    CHECK(is_empty_integer(gap).status == emptiness_status::empty);

    // x = 4z, y = -z, z > 0: integer ray
    const auto ray = sls_of(3, {conjunct{{lc({1, 0, -4}, 0, relation::eq),
                                          lc({0, 1, 1}, 0, relation::eq),
                                          lc({0, 0, 1}, 0, relation::gt)}}});
    const auto ri = is_empty_integer(ray);
    CHECK(ri.status == emptiness_status::non_empty);
    CHECK(contains(ray, ri.witness));
    CHECK(integral(ri.witness));
}

TEST_CASE("emptiness with irrational coefficients") {
    const scalar half(rational(1, 2));
    const scalar phi = half + half * scalar::sqrt_int(5);
    // phi*x + y > 0 has integer points
    semilinear_set s;
    s.dimension = 2;
    s.disjuncts.push_back(conjunct{{{{phi, scalar(1)}, scalar(0), relation::gt}}});
    const auto r = is_empty_integer(s);
    CHECK(r.status == emptiness_status::non_empty);
    CHECK(contains(s, r.witness));
    CHECK(integral(r.witness));

    // sqrt(2)*x = 1 has real points but no rational ones
    semilinear_set line;
    line.dimension = 1;
    line.disjuncts.push_back(
        conjunct{{{{scalar::sqrt_int(2)}, scalar(-1), relation::eq}}});
    CHECK(is_empty_real(line).status == emptiness_status::non_empty);
    CHECK(is_empty_integer(line).status == emptiness_status::empty);

    // phi*x + y > 0 and its negation together are empty over R
    semilinear_set both;
    both.dimension = 2;
    both.disjuncts.push_back(
        conjunct{{{{phi, scalar(1)}, scalar(0), relation::gt},
                  {{scalar(0) - phi, scalar(-1)}, scalar(0), relation::gt}}});
    CHECK(is_empty_real(both).status == emptiness_status::empty);
    CHECK(is_empty_integer(both).status == emptiness_status::empty);
}

TEST_CASE("integer emptiness agrees with box enumeration") {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> rows(1, 3);
    for (int t = 0; t < 80; ++t) {
        const size_t dim = 1 + rng() % 3;
        conjunct c;
        const int nr = rows(rng);
        for (int r = 0; r < nr; ++r) {
            std::vector<long> row(dim);
            for (auto& v : row) v = coeff(rng);
            c.constraints.push_back(
                lc(row, coeff(rng), rng() % 2 ? relation::gt : relation::eq));
        }
        const auto s = sls_of(dim, {c});
        const auto solved = is_empty_integer(s);
        REQUIRE(solved.status != emptiness_status::unknown);
        const auto boxed = testutil::box_integer_point(c, dim, 6);
        if (solved.status == emptiness_status::empty) {
            CHECK(!boxed.has_value());
        } else {
            CHECK(contains(s, solved.witness));
            CHECK(integral(solved.witness));
        }
    }
}

TEST_CASE("infeasible conjuncts are dropped over the reals") {
    const auto s = sls_of(1, {conjunct{{lc({1}, 0, relation::gt), lc({-1}, 0, relation::gt)}},
                              conjunct{{lc({1}, -1, relation::gt)}}});
    const auto simplified = simplify_over_reals(s);
    CHECK(simplified.disjuncts.size() == 1);
    CHECK(sls_equivalent(simplified, s));
}

TEST_CASE("membership") {
    const auto s = sls_of(3, {conjunct{{lc({-1, -1, 3}, 0, relation::gt)}},
                              conjunct{{lc({1, 0, -4}, 0, relation::eq),
                                        lc({0, 1, 1}, 0, relation::eq),
                                        lc({0, 0, 1}, 0, relation::gt)}}});
    CHECK(contains(s, {scalar(-10), scalar(0), scalar(0)}));
    CHECK(contains(s, {scalar(4), scalar(-1), scalar(1)}));
    CHECK(!contains(s, {scalar(1), scalar(0), scalar(0)}));
    CHECK(contains(sls_universe(2), {scalar(7), scalar(-7)}));
    CHECK(!contains(sls_empty(2), {scalar(0), scalar(0)}));
}

TEST_CASE("locus rendering") {
    CHECK(format_locus(sls_universe(2)) == "TRUE");
    CHECK(format_locus(sls_empty(2)) == "FALSE");
    const auto golden = sls_of(3, {conjunct{{lc({-1, -1, 3}, 0, relation::gt)}},
                                   conjunct{{lc({1, 1, -3}, 0, relation::eq),
                                             lc({0, 1, 1}, 0, relation::gt)}},
                                   conjunct{{lc({1, 0, -4}, 0, relation::eq),
                                             lc({0, 1, 1}, 0, relation::eq),
                                             lc({0, 0, 1}, 0, relation::gt)}}});
    CHECK(format_locus(golden) ==
          "[[u1<-u2+3*u3]]OR[[u1==-u2+3*u3,-u3<u2]]OR[[u1==4*u3,u2==-u3,0<u3]]");
    CHECK(format_locus(sls_of(2, {conjunct{{lc({1, 0}, -1, relation::eq),
                                            lc({0, 1}, -2, relation::gt)}}}),
                       {"x", "y"}) == "[[x==1,2<y]]");
}
