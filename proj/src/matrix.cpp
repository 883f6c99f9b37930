#include "antlyzer/matrix.hpp"

#include <sstream>

namespace antlyzer {

matrix matrix::identity(size_t n) {
    matrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = scalar(rational(1));
    return m;
}

matrix matrix::from_rows(const std::vector<std::vector<scalar>>& rows) {
    if (rows.empty())
        return matrix(0, 0);
    matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw precondition_error("matrix: ragged row list");
        for (size_t j = 0; j < m.cols_; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

matrix matrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<scalar>> s;
    s.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<scalar> row;
        row.reserve(r.size());
        for (long v : r)
            row.emplace_back(rational(v));
        s.push_back(std::move(row));
    }
    return from_rows(s);
}

bool matrix::is_rational() const {
    for (const auto& v : e_)
        if (!v.is_rational())
            return false;
    return true;
}

matrix operator+(const matrix& a, const matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw precondition_error("matrix: shape mismatch in +");
    matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i)
        r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

matrix operator-(const matrix& a, const matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw precondition_error("matrix: shape mismatch in -");
    matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i)
        r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

matrix operator*(const matrix& a, const matrix& b) {
    if (a.cols_ != b.rows_)
        throw precondition_error("matrix: shape mismatch in *");
    matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const scalar& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const scalar& bkj = b.at(k, j);
                if (!bkj.is_zero())
                    r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

matrix matrix::scaled(const scalar& k) const {
    matrix r(*this);
    for (auto& v : r.e_)
        v = v * k;
    return r;
}

matrix matrix::transpose() const {
    matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool operator==(const matrix& a, const matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (!(a.e_[i] == b.e_[i]))
            return false;
    return true;
}

std::vector<scalar> matrix::apply(const std::vector<scalar>& x) const {
    if (x.size() != cols_)
        throw precondition_error("matrix: vector length mismatch");
    std::vector<scalar> r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !x[j].is_zero())
                r[i] += at(i, j) * x[j];
    return r;
}

std::vector<scalar> matrix::apply_row(const std::vector<scalar>& r) const {
    if (r.size() != rows_)
        throw precondition_error("matrix: row vector length mismatch");
    std::vector<scalar> out(cols_);
    for (size_t j = 0; j < cols_; ++j)
        for (size_t i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero() && !r[i].is_zero())
                out[j] += r[i] * at(i, j);
    return out;
}

std::string matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        if (i)
            os << "; ";
        for (size_t j = 0; j < cols_; ++j) {
            if (j)
                os << ", ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

scalar row_form::eval(const std::vector<scalar>& x) const {
    if (x.size() != coeffs.size())
        throw precondition_error("row_form: dimension mismatch");
    scalar acc = constant;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero() && !x[i].is_zero())
            acc += coeffs[i] * x[i];
    return acc;
}

row_form row_form::after(const matrix& m) const {
    return row_form(m.apply_row(coeffs), constant);
}

} // namespace antlyzer
