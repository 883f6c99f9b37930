#include "antlyzer/matrix.hpp"

namespace antlyzer {

unipoly char_poly(const matrix& a) {
    if (!a.is_square())
        throw precondition_error("char_poly: square matrix required");
    if (!a.is_rational())
        throw precondition_error("char_poly: rational entries required");
    size_t n = a.rows();
    // Faddeev-LeVerrier over Q: M_0 = 0, c_n = 1;
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    std::vector<rational> c(n + 1);
    c[n] = rational(1);
    // keep the recurrence in plain rational arrays (cheaper than scalar)
    std::vector<std::vector<rational>> A(n, std::vector<rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            A[i][j] = a.at(i, j).rational_value();
    std::vector<std::vector<rational>> M(n, std::vector<rational>(n)); // M_0 = 0
    for (size_t k = 1; k <= n; ++k) {
        // M = A*M + c[n-k+1]*I
        std::vector<std::vector<rational>> next(n, std::vector<rational>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (A[i][l].is_zero())
                    continue;
                for (size_t j = 0; j < n; ++j)
                    if (!M[l][j].is_zero())
                        next[i][j] += A[i][l] * M[l][j];
            }
        for (size_t i = 0; i < n; ++i)
            next[i][i] += c[n - k + 1];
        M = std::move(next);
        // c[n-k] = -tr(A*M)/k
        rational tr;
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l)
                if (!A[i][l].is_zero() && !M[l][i].is_zero())
                    tr += A[i][l] * M[l][i];
        c[n - k] = -tr / rational(static_cast<long>(k));
    }
    return unipoly(std::move(c));
}

namespace {

// row-reduce in place; returns pivot column per pivot row. full exactness:
// pivot choice is simply the first row with a nonzero entry in the column.
struct echelon {
    std::vector<std::vector<scalar>> rows;
    std::vector<size_t> pivot_cols;
};

echelon reduce(std::vector<std::vector<scalar>> rows, size_t cols) {
    echelon e;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t sel = rows.size();
        for (size_t i = r; i < rows.size(); ++i) {
            if (!rows[i][c].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        scalar inv = rows[r][c].inverse();
        for (size_t j = c; j < rows[r].size(); ++j)
            rows[r][j] = rows[r][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero())
                continue;
            scalar f = rows[i][c];
            for (size_t j = c; j < rows[i].size(); ++j)
                rows[i][j] -= f * rows[r][j];
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.rows = std::move(rows);
    return e;
}

} // namespace

std::vector<std::vector<scalar>> kernel_basis(const matrix& a) {
    size_t n = a.cols();
    std::vector<std::vector<scalar>> rows(a.rows(), std::vector<scalar>(n));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < n; ++j)
            rows[i][j] = a.at(i, j);
    echelon e = reduce(std::move(rows), n);
    std::vector<bool> is_pivot(n, false);
    for (size_t c : e.pivot_cols)
        is_pivot[c] = true;
    std::vector<std::vector<scalar>> basis;
    for (size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc])
            continue;
        std::vector<scalar> v(n);
        v[fc] = scalar(rational(1));
        for (size_t pr = 0; pr < e.pivot_cols.size(); ++pr)
            v[e.pivot_cols[pr]] = scalar() - e.rows[pr][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

long rank(const matrix& a) {
    std::vector<std::vector<scalar>> rows(a.rows(), std::vector<scalar>(a.cols()));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            rows[i][j] = a.at(i, j);
    return static_cast<long>(reduce(std::move(rows), a.cols()).pivot_cols.size());
}

std::optional<std::vector<scalar>> solve_linear(const matrix& a, const std::vector<scalar>& b) {
    if (b.size() != a.rows())
        throw precondition_error("solve_linear: rhs length mismatch");
    size_t n = a.cols();
    std::vector<std::vector<scalar>> rows(a.rows(), std::vector<scalar>(n + 1));
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < n; ++j)
            rows[i][j] = a.at(i, j);
        rows[i][n] = b[i];
    }
    echelon e = reduce(std::move(rows), n); // do not pivot on the rhs column
    // inconsistent iff some row is (0 ... 0 | nonzero)
    for (const auto& row : e.rows) {
        bool all_zero = true;
        for (size_t j = 0; j < n; ++j)
            if (!row[j].is_zero()) {
                all_zero = false;
                break;
            }
        if (all_zero && !row[n].is_zero())
            return std::nullopt;
    }
    std::vector<scalar> x(n);
    for (size_t pr = 0; pr < e.pivot_cols.size(); ++pr)
        x[e.pivot_cols[pr]] = e.rows[pr][n];
    return x;
}

matrix poly_at_matrix(const scalar_poly& p, const matrix& a) {
    if (!a.is_square())
        throw precondition_error("poly_at_matrix: square matrix required");
    size_t n = a.rows();
    matrix acc(n, n);
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * a;
        if (!p.coeffs()[i].is_zero())
            for (size_t d = 0; d < n; ++d)
                acc.at(d, d) += p.coeffs()[i];
    }
    return acc;
}

matrix spectral_projector(const matrix& a, const scalar_poly& q, int m, const scalar_poly& rest) {
    if (m < 1)
        throw precondition_error("spectral_projector: multiplicity must be >= 1");
    scalar_poly qm = q.pow(static_cast<unsigned>(m));
    auto x = poly_xgcd(rest, qm);
    if (x.g.degree() != 0)
        throw precondition_error("spectral_projector: q^m and rest are not coprime");
    // x.u * rest + x.v * q^m = 1, so u(A) rest(A) acts as identity on Ker(q(A)^m)
    // and annihilates the complementary invariant subspace
    return poly_at_matrix(x.u * rest, a);
}

matrix mat_pow(const matrix& a, unsigned long k) {
    if (!a.is_square())
        throw precondition_error("mat_pow: square matrix required");
    matrix acc = matrix::identity(a.rows());
    matrix base = a;
    while (k) {
        if (k & 1)
            acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::vector<matrix> mat_power_table(const matrix& a, size_t kmax) {
    if (!a.is_square())
        throw precondition_error("mat_power_table: square matrix required");
    std::vector<matrix> t;
    t.reserve(kmax + 1);
    t.push_back(matrix::identity(a.rows()));
    for (size_t k = 1; k <= kmax; ++k)
        t.push_back(t.back() * a);
    return t;
}

} // namespace antlyzer
