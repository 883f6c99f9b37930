#pragma once

#include <string>
#include <vector>

#include "antlyzer/poly.hpp"
#include "antlyzer/scalar.hpp"

namespace antlyzer {

// dense matrix with exact scalar entries, row-major
class matrix {
  public:
    matrix() : rows_(0), cols_(0) {}
    matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    static matrix identity(size_t n);
    static matrix from_rows(const std::vector<std::vector<scalar>>& rows);
    static matrix from_int_rows(const std::vector<std::vector<long>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    bool is_rational() const;
    bool is_square() const { return rows_ == cols_; }

    friend matrix operator+(const matrix& a, const matrix& b);
    friend matrix operator-(const matrix& a, const matrix& b);
    friend matrix operator*(const matrix& a, const matrix& b);
    matrix scaled(const scalar& k) const;
    matrix transpose() const;
    friend bool operator==(const matrix& a, const matrix& b);
    friend bool operator!=(const matrix& a, const matrix& b) { return !(a == b); }

    std::vector<scalar> apply(const std::vector<scalar>& x) const;     // M * x
    std::vector<scalar> apply_row(const std::vector<scalar>& r) const; // r * M

    std::string str() const;

  private:
    size_t rows_, cols_;
    std::vector<scalar> e_;
};

// linear functional x -> coeffs . x + constant
struct row_form {
    std::vector<scalar> coeffs;
    scalar constant; // zero for homogeneous forms

    row_form() = default;
    explicit row_form(std::vector<scalar> c, scalar k = scalar())
        : coeffs(std::move(c)), constant(std::move(k)) {}

    bool is_homogeneous() const { return constant.is_zero(); }
    scalar eval(const std::vector<scalar>& x) const;
    row_form after(const matrix& m) const; // x -> coeffs.(M x) + constant
};

// ---- exact linear algebra (linalg.cpp) ----

// characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence;
// pre: A square with rational entries. Result is monic of degree n.
unipoly char_poly(const matrix& a);

// basis of the right kernel of A (exact Gaussian elimination, pivots chosen
// by nonzero sign test; no thresholds anywhere)
std::vector<std::vector<scalar>> kernel_basis(const matrix& a);

long rank(const matrix& a);

// solve A x = b over the scalar field; nullopt if inconsistent. When the
// system is underdetermined the free variables are set to zero.
std::optional<std::vector<scalar>> solve_linear(const matrix& a, const std::vector<scalar>& b);

// spectral projector onto Ker(q(A)^m) along the complement, where
// char_poly(A) = q^m * rest with q irreducible over the working field and
// gcd(q^m, rest) = 1: pi = u(A) * rest(A) with u * rest = 1 mod q^m.
matrix spectral_projector(const matrix& a, const scalar_poly& q, int m, const scalar_poly& rest);

matrix mat_pow(const matrix& a, unsigned long k);
std::vector<matrix> mat_power_table(const matrix& a, size_t kmax); // [I, A, ..., A^kmax]

// evaluate a polynomial at a square matrix
matrix poly_at_matrix(const scalar_poly& p, const matrix& a);

} // namespace antlyzer
