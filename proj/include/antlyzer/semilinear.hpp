#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antlyzer/scalar.hpp"

namespace antlyzer {

enum class relation { eq, gt };

// coeffs . x + constant  (= 0 | > 0)
struct linear_constraint {
    std::vector<scalar> coeffs;
    scalar constant;
    relation rel = relation::eq;
};

// Conjunction of constraints; an empty list is the full space.
struct conjunct {
    std::vector<linear_constraint> constraints;
};

// Finite union of conjuncts; an empty list is the empty set.
struct semilinear_set {
    size_t dimension = 0;
    std::vector<conjunct> disjuncts;
};

enum class emptiness_status { empty, non_empty, unknown };

struct emptiness_result {
    emptiness_status status = emptiness_status::empty;
    std::vector<scalar> witness; // set when non_empty
    std::string note;            // set when unknown
};

semilinear_set sls_empty(size_t dim);
semilinear_set sls_universe(size_t dim);

// Scale to a canonical representative: rational rows become coprime integers
// (positive leading coefficient for eq rows, order-preserving positive scale
// for gt rows); irrational rows get leading coefficient +-1. Trivially true
// rows are dropped; a trivially false row makes the whole conjunct nullopt.
// Rows are deduplicated and sorted.
linear_constraint canonicalize_constraint(linear_constraint c);
std::optional<conjunct> canonicalize_conjunct(const conjunct& c);

bool sls_is_rational(const semilinear_set& s);

// Rewrite an equality with irrational coefficients as the rational equalities
// a rational (or integral) point must satisfy: the basis radicals over Q are
// linearly independent, so the coefficient of each radicand must vanish on
// its own. Rational equalities come back unchanged (as a single row).
std::vector<linear_constraint> split_equality_by_radicand(const linear_constraint& c);

semilinear_set sls_union(const semilinear_set& a, const semilinear_set& b);
semilinear_set sls_intersect(const semilinear_set& a, const semilinear_set& b);

// Complement within R^n. Only rational sets are supported; irrational
// coefficients raise unsupported_error.
semilinear_set sls_complement(const semilinear_set& s);

// Drop conjuncts with no real point (exact LP per conjunct). The set is
// unchanged as a subset of R^n.
semilinear_set simplify_over_reals(const semilinear_set& s);

bool contains(const semilinear_set& s, const std::vector<scalar>& point);

// Emptiness of the set of real points. Total: never returns unknown.
emptiness_result is_empty_real(const semilinear_set& s);

// Emptiness of the set of rational points. Total; the witness is rational.
emptiness_result is_empty_rational(const semilinear_set& s);

// Emptiness of the set of integer points. Complete on conjuncts whose
// inequality rows are rational after equality elimination; branch-and-bound
// with an LP relaxation otherwise, returning unknown when node_budget runs
// out. The witness is integral.
emptiness_result is_empty_integer(const semilinear_set& s, long node_budget = 200000);

// Extensional equality over R^n (rational sets only).
bool sls_equivalent(const semilinear_set& a, const semilinear_set& b);

// Render as a disjunction of bracketed conjunctions, e.g.
//   [[u1<-u2+3*u3]]OR[[u1==-u2+3*u3,-u3<u2]]
// Equality rows are put in reduced row echelon form and solved for their
// pivot variable; pivot variables are substituted out of the strict rows,
// which are then written with the lowest-index variable isolated. The full
// space prints TRUE, the empty set FALSE. names defaults to u1..un.
std::string format_locus(const semilinear_set& s, std::vector<std::string> names = {});

} // namespace antlyzer
