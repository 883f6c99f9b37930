#pragma once

#include <vector>

#include "antlyzer/matrix.hpp"
#include "antlyzer/semilinear.hpp"
#include "antlyzer/spectrum.hpp"

namespace antlyzer {

// The asymptotic non-termination set of a loop "while f_i(x) > 0 for all i:
// x := A x (+ c)": every initial state some iterate of which makes all guards
// positive forever. Termination of the loop on an A-stable set K is exactly
// the emptiness of the intersection of K with this set.

// For a real eigenvalue t != 0 of multiplicity d, the contribution of its
// generalized eigenspace to f(A^k x) is (sum_i alpha_i(x) k^i) t^k with
// linear coefficient maps alpha_0..alpha_{d-1}; returned in that order.
// pre: f homogeneous, c a real class with nonzero value.
std::vector<row_form> coefficient_forms(const row_form& f, const matrix& a,
                                        const eigen_class& c);

// Rows whose joint vanishing is equivalent to the class contributing nothing
// to f(A^k x) for any k: the coefficient maps for a nonzero real class, the
// first space_dim terms of the recurrence for a complex pair or the zero
// class. pre: f homogeneous.
std::vector<row_form> vanishing_constraints(const row_form& f, const matrix& a,
                                            const eigen_class& c);

// ANT set when every nonzero real eigenvalue is positive and no positive
// eigenvalue shares its module (the shape guaranteed after raising to the
// power period): a union, over positive eigenvalues t in decreasing order and
// degrees l, of "higher modules vanish, alpha_{t,i} = 0 for i > l,
// alpha_{t,l} > 0", intersected over the guard rows.
semilinear_set ant_homogeneous_positive(const matrix& a, const std::vector<row_form>& guards);

// General homogeneous case: with N the least common multiple of the unity
// orders of the eigenvalues with some positive power, A^N has the positive
// shape above and
//   ANT(A, f) = intersection over l < N of ANT(A^N, f o A^l).
// When N = 1 this returns ant_homogeneous_positive(a, guards) unchanged.
// pre: the spectrum is supported and passes check_assumption_g.
semilinear_set ant_homogeneous(const matrix& a, const std::vector<row_form>& guards);

// [[A, c], [0, 1]]: the affine update x := A x + c as a linear update on
// (x, t) with the invariant slice t = 1.
matrix homogenize_update(const matrix& a, const std::vector<scalar>& c);

// Affine case: homogenize, run the homogeneous construction one dimension
// up (guard constants ride along as the coefficient of t), then pin t = 1,
// turning the extra coordinate back into constant terms.
// pre: the homogenized spectrum is supported and passes check_assumption_g
// (equivalently, A itself passes check_assumption_a).
semilinear_set ant_affine(const matrix& a, const std::vector<scalar>& c,
                          const std::vector<row_form>& guards);

} // namespace antlyzer
