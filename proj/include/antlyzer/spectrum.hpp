#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antlyzer/matrix.hpp"

namespace antlyzer {

enum class eigen_kind {
    rational_real,  // linear factor, rational eigenvalue (possibly 0)
    quadratic_real, // one real root of an irreducible quadratic with positive discriminant
    complex_pair,   // conjugate pair from an irreducible quadratic with negative discriminant
};

struct eigen_class {
    eigen_kind kind;
    unipoly factor;    // the irreducible rational factor this class came from
    int multiplicity;  // exponent of the factor in the characteristic polynomial
    scalar value;      // real kinds: the eigenvalue itself (exact)
    rational trace_s;  // complex pair: mu + conj(mu)
    rational norm_p;   // complex pair: mu * conj(mu) = |mu|^2
    scalar module_sq;  // |eigenvalue|^2, comparable across classes
    int space_dim;     // dimension bound of the invariant subspace: m, or 2m for a pair
    matrix projector;  // exact spectral projector onto that subspace

    bool is_zero() const { return kind == eigen_kind::rational_real && value.is_zero(); }
};

struct spectrum_info {
    size_t n = 0;
    std::vector<eigen_class> classes;
};

// decompose(A): factor the characteristic polynomial and build one class per
// real eigenvalue / conjugate pair, with exact projectors. Irreducible factors
// of degree >= 3 are outside the supported tier: info is empty and offending
// carries such a factor (a classification, not an error).
struct spectrum_result {
    std::optional<spectrum_info> info;
    std::optional<unipoly> offending;
    bool supported() const { return info.has_value(); }
};
spectrum_result decompose(const matrix& a);

// order of eigenvalue/|eigenvalue| as a root of unity, if it is one.
// real positive -> 1, real negative -> 2; complex pairs are decided through
// the minimal polynomial of mu/conj(mu) against the finite cyclotomic list
// {x-1, x+1, x^2+x+1, x^2+1, x^2-x+1}. pre: nonzero class.
std::optional<int> unity_order(const eigen_class& c);

struct assumption_report {
    bool pass = true;
    std::string detail; // human-readable witness when pass == false
};

// real spectrum nonnegative, and no positive real eigenvalue shares its
// module with any other class
assumption_report check_assumption_h(const spectrum_info& s);

// within every group of nonzero classes of equal module, either all or none
// have a positive power (all-or-none membership in R(A))
assumption_report check_assumption_g(const spectrum_info& s);

// check_assumption_g plus: no class of module exactly 1 outside R(A)
assumption_report check_assumption_a(const spectrum_info& s);

// smallest N >= 1 with A^N free of the rotation obstruction: lcm of the unity
// orders present in the spectrum. Postcondition (verified at runtime):
// decompose(A^N) passes check_assumption_h; guaranteed when A passes (G).
long power_period_n(const matrix& a, const spectrum_info& s);

} // namespace antlyzer
