#include "antlyzer/lp.hpp"

#include <algorithm>

#include "antlyzer/error.hpp"

namespace antlyzer {

namespace {

// Dense exact tableau. Columns 0..nvars-1 are structural variables, column
// nvars is the right-hand side. Basis columns are kept in canonical (identity)
// form by full row elimination on every pivot.
struct tableau {
    size_t nvars = 0;
    std::vector<std::vector<scalar>> rows; // each of length nvars + 1
    std::vector<size_t> basis;             // basic variable per row

    scalar& rhs(size_t i) { return rows[i][nvars]; }
    const scalar& rhs(size_t i) const { return rows[i][nvars]; }

    void pivot(size_t r, size_t c) {
        const scalar inv = rows[r][c].inverse();
        for (auto& v : rows[r]) v = v * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const scalar f = rows[i][c];
            for (size_t j = 0; j <= nvars; ++j)
                rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        basis[r] = c;
    }

    // Maximize cost . x with Bland's rule (smallest eligible entering column,
    // smallest basic variable on ratio ties). enterable() filters columns that
    // may enter. Returns when no reduced cost is positive.
    template <typename Pred>
    void solve(const std::vector<scalar>& cost, Pred enterable) {
        for (;;) {
            // reduced costs r_j = c_j - c_B . column_j
            size_t enter = nvars;
            for (size_t j = 0; j < nvars; ++j) {
                if (!enterable(j)) continue;
                scalar rc = cost[j];
                for (size_t i = 0; i < rows.size(); ++i) {
                    if (basis[i] == j) { rc = scalar(0); break; } // basic: reduced cost 0
                    if (!cost[basis[i]].is_zero() && !rows[i][j].is_zero())
                        rc = rc - cost[basis[i]] * rows[i][j];
                }
                if (rc.sign() > 0) { enter = j; break; }
            }
            if (enter == nvars) return; // optimal

            size_t leave = rows.size();
            scalar best_ratio;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter].sign() <= 0) continue;
                const scalar ratio = rhs(i) * rows[i][enter].inverse();
                if (leave == rows.size() || cmp(ratio, best_ratio) < 0 ||
                    (cmp(ratio, best_ratio) == 0 && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == rows.size())
                throw internal_error("lp: unbounded objective; the eps cap row should prevent this");
            pivot(leave, enter);
        }
    }

    scalar value_of(size_t var) const {
        for (size_t i = 0; i < rows.size(); ++i)
            if (basis[i] == var) return rhs(i);
        return scalar(0);
    }
};

} // namespace

lp_outcome strict_feasibility_lp(const std::vector<lp_row>& rows, size_t nvars) {
    for (const auto& r : rows)
        if (r.a.size() != nvars)
            throw precondition_error("lp: row width does not match the variable count");

    const size_t n_slack =
        static_cast<size_t>(std::count_if(rows.begin(), rows.end(), [](const lp_row& r) {
            return r.rel != lp_rel::eq;
        }));

    // Column layout: x+ (nvars) | x- (nvars) | eps | slacks | cap slack | artificials.
    const size_t eps_col = 2 * nvars;
    const size_t slack0 = eps_col + 1;
    const size_t cap_col = slack0 + n_slack;
    const size_t art0 = cap_col + 1;
    const size_t m = rows.size() + 1; // + the eps <= 1 cap row
    const size_t total = art0 + m;

    tableau t;
    t.nvars = total;
    t.rows.assign(m, std::vector<scalar>(total + 1, scalar(0)));
    t.basis.assign(m, 0);

    size_t slack_ix = slack0;
    for (size_t i = 0; i < rows.size(); ++i) {
        auto& row = t.rows[i];
        for (size_t j = 0; j < nvars; ++j) {
            row[j] = rows[i].a[j];
            row[nvars + j] = -rows[i].a[j];
        }
        if (rows[i].rel == lp_rel::gt) row[eps_col] = scalar(-1);
        if (rows[i].rel != lp_rel::eq) row[slack_ix++] = scalar(-1);
        row[total] = -rows[i].a0;
    }
    {
        auto& cap = t.rows[m - 1];
        cap[eps_col] = scalar(1);
        cap[cap_col] = scalar(1);
        cap[total] = scalar(1);
    }

    // Sign-normalize right-hand sides, then install the artificial basis.
    for (size_t i = 0; i < m; ++i) {
        if (t.rhs(i).sign() < 0)
            for (auto& v : t.rows[i]) v = -v;
        t.rows[i][art0 + i] = scalar(1);
        t.basis[i] = art0 + i;
    }

    // Phase 1: drive the artificials to zero (maximize -sum of artificials).
    std::vector<scalar> cost1(total, scalar(0));
    for (size_t j = art0; j < total; ++j) cost1[j] = scalar(-1);
    t.solve(cost1, [](size_t) { return true; });

    for (size_t i = 0; i < m; ++i)
        if (t.basis[i] >= art0 && t.rhs(i).sign() != 0)
            return {false, scalar(0), {}}; // relaxation infeasible

    // Pivot out any artificial still basic at zero; a row with no structural
    // entry left is a redundant 0 = 0 constraint and can be dropped.
    for (size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < art0) { ++i; continue; }
        size_t col = art0;
        for (size_t j = 0; j < art0; ++j)
            if (!t.rows[i][j].is_zero()) { col = j; break; }
        if (col < art0) {
            t.pivot(i, col); // rhs is zero, so feasibility is preserved
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    // Phase 2: maximize eps. Artificial columns are frozen out.
    std::vector<scalar> cost2(total, scalar(0));
    cost2[eps_col] = scalar(1);
    t.solve(cost2, [art0](size_t j) { return j < art0; });

    lp_outcome out;
    out.feasible = true;
    out.eps = t.value_of(eps_col);
    out.point.reserve(nvars);
    for (size_t j = 0; j < nvars; ++j)
        out.point.push_back(t.value_of(j) - t.value_of(nvars + j));
    return out;
}

} // namespace antlyzer
