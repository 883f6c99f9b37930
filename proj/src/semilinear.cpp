#include "antlyzer/semilinear.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "antlyzer/error.hpp"
#include "antlyzer/lp.hpp"
#include "antlyzer/matrix.hpp"

namespace antlyzer {

namespace {

int leading_index(const std::vector<scalar>& v) {
    for (size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) return static_cast<int>(j);
    return -1;
}

bool constraint_is_rational(const linear_constraint& c) {
    if (!c.constant.is_rational()) return false;
    for (const auto& v : c.coeffs)
        if (!v.is_rational()) return false;
    return true;
}

int cmp_vectors(const std::vector<scalar>& a, const std::vector<scalar>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t j = 0; j < a.size(); ++j) {
        const int c = cmp(a[j], b[j]);
        if (c != 0) return c;
    }
    return 0;
}

bool constraint_less(const linear_constraint& a, const linear_constraint& b) {
    if (a.rel != b.rel) return a.rel == relation::eq; // equalities first
    const int la = leading_index(a.coeffs), lb = leading_index(b.coeffs);
    if (la != lb) return la < lb;
    const int c = cmp_vectors(a.coeffs, b.coeffs);
    if (c != 0) return c < 0;
    return cmp(a.constant, b.constant) < 0;
}

bool constraint_equal(const linear_constraint& a, const linear_constraint& b) {
    return a.rel == b.rel && a.constant == b.constant && cmp_vectors(a.coeffs, b.coeffs) == 0;
}

bool conjunct_equal(const conjunct& a, const conjunct& b) {
    if (a.constraints.size() != b.constraints.size()) return false;
    for (size_t i = 0; i < a.constraints.size(); ++i)
        if (!constraint_equal(a.constraints[i], b.constraints[i])) return false;
    return true;
}

scalar eval_constraint(const linear_constraint& c, const std::vector<scalar>& x) {
    scalar acc = c.constant;
    for (size_t j = 0; j < c.coeffs.size(); ++j) {
        if (c.coeffs[j].is_zero() || x[j].is_zero()) continue;
        acc = acc + c.coeffs[j] * x[j];
    }
    return acc;
}

bool constraint_holds(const linear_constraint& c, const std::vector<scalar>& x) {
    const int s = eval_constraint(c, x).sign();
    return c.rel == relation::eq ? s == 0 : s > 0;
}

// Canonicalize conjuncts, drop syntactically false ones, absorb into the
// universe when an empty conjunct appears, and deduplicate preserving the
// first-occurrence order (callers rely on disjunct order being stable).
semilinear_set normalize_set(semilinear_set s) {
    std::vector<conjunct> out;
    for (const auto& d : s.disjuncts) {
        auto can = canonicalize_conjunct(d);
        if (!can) continue;
        if (can->constraints.empty()) return sls_universe(s.dimension);
        bool seen = false;
        for (const auto& prev : out)
            if (conjunct_equal(prev, *can)) { seen = true; break; }
        if (!seen) out.push_back(std::move(*can));
    }
    return {s.dimension, std::move(out)};
}

std::vector<lp_row> to_lp_rows(const conjunct& c) {
    std::vector<lp_row> rows;
    rows.reserve(c.constraints.size());
    for (const auto& cons : c.constraints)
        rows.push_back({cons.coeffs, cons.constant,
                        cons.rel == relation::eq ? lp_rel::eq : lp_rel::gt});
    return rows;
}

struct real_point {
    bool nonempty = false;
    std::vector<scalar> x;
};

real_point conjunct_real_point(const conjunct& c, size_t dim) {
    const auto out = strict_feasibility_lp(to_lp_rows(c), dim);
    if (!out.feasible) return {};
    const bool has_gt = std::any_of(c.constraints.begin(), c.constraints.end(),
                                    [](const linear_constraint& r) { return r.rel == relation::gt; });
    if (has_gt && out.eps.sign() <= 0) return {};
    return {true, out.point};
}

} // namespace

std::vector<linear_constraint> split_equality_by_radicand(const linear_constraint& c) {
    const size_t n = c.coeffs.size();
    std::map<bigint, linear_constraint> rows;
    auto row_for = [&](const bigint& key) -> linear_constraint& {
        auto it = rows.find(key);
        if (it == rows.end()) {
            linear_constraint fresh;
            fresh.coeffs.assign(n, scalar(0));
            fresh.constant = scalar(0);
            fresh.rel = relation::eq;
            it = rows.emplace(key, std::move(fresh)).first;
        }
        return it->second;
    };
    for (size_t j = 0; j < n; ++j)
        for (const auto& [mask, q] : c.coeffs[j].coords())
            row_for(c.coeffs[j].radicand_product(mask)).coeffs[j] = scalar(q);
    for (const auto& [mask, q] : c.constant.coords())
        row_for(c.constant.radicand_product(mask)).constant = scalar(q);
    std::vector<linear_constraint> out;
    out.reserve(rows.size());
    for (auto& [key, row] : rows) out.push_back(std::move(row));
    return out;
}

semilinear_set sls_empty(size_t dim) { return {dim, {}}; }

semilinear_set sls_universe(size_t dim) {
    semilinear_set s;
    s.dimension = dim;
    s.disjuncts.push_back(conjunct{});
    return s;
}

linear_constraint canonicalize_constraint(linear_constraint c) {
    const int lead = leading_index(c.coeffs);
    if (lead < 0) return c;

    scalar factor;
    if (constraint_is_rational(c)) {
        bigint num_gcd = 0, den_lcm = 1;
        auto fold = [&](const scalar& s) {
            const rational r = s.rational_value();
            if (r.is_zero()) return;
            num_gcd = gcd(num_gcd, r.num());
            den_lcm = lcm(den_lcm, r.den());
        };
        for (const auto& v : c.coeffs) fold(v);
        fold(c.constant);
        factor = scalar(rational(den_lcm, num_gcd)); // positive
        if (c.rel == relation::eq && c.coeffs[lead].sign() < 0) factor = -factor;
    } else if (c.rel == relation::eq) {
        factor = c.coeffs[lead].inverse(); // leading coefficient becomes 1
    } else {
        // order-preserving: scale by 1/|lead|, leaving the leading sign
        const scalar lead_val = c.coeffs[lead];
        factor = lead_val.inverse() * scalar(lead_val.sign());
    }
    for (auto& v : c.coeffs) v = v * factor;
    c.constant = c.constant * factor;
    return c;
}

std::optional<conjunct> canonicalize_conjunct(const conjunct& c) {
    conjunct out;
    for (const auto& raw : c.constraints) {
        linear_constraint cons = canonicalize_constraint(raw);
        if (leading_index(cons.coeffs) < 0) {
            const int s = cons.constant.sign();
            const bool holds = cons.rel == relation::eq ? s == 0 : s > 0;
            if (!holds) return std::nullopt;
            continue; // trivially true
        }
        out.constraints.push_back(std::move(cons));
    }
    std::stable_sort(out.constraints.begin(), out.constraints.end(), constraint_less);
    out.constraints.erase(std::unique(out.constraints.begin(), out.constraints.end(),
                                      constraint_equal),
                          out.constraints.end());
    return out;
}

bool sls_is_rational(const semilinear_set& s) {
    for (const auto& d : s.disjuncts)
        for (const auto& c : d.constraints)
            if (!constraint_is_rational(c)) return false;
    return true;
}

semilinear_set sls_union(const semilinear_set& a, const semilinear_set& b) {
    if (a.dimension != b.dimension)
        throw precondition_error("set union: dimension mismatch");
    semilinear_set s;
    s.dimension = a.dimension;
    s.disjuncts = a.disjuncts;
    s.disjuncts.insert(s.disjuncts.end(), b.disjuncts.begin(), b.disjuncts.end());
    return normalize_set(std::move(s));
}

semilinear_set sls_intersect(const semilinear_set& a, const semilinear_set& b) {
    if (a.dimension != b.dimension)
        throw precondition_error("set intersection: dimension mismatch");
    semilinear_set s;
    s.dimension = a.dimension;
    for (const auto& da : a.disjuncts)
        for (const auto& db : b.disjuncts) {
            conjunct merged = da;
            merged.constraints.insert(merged.constraints.end(), db.constraints.begin(),
                                      db.constraints.end());
            s.disjuncts.push_back(std::move(merged));
        }
    return normalize_set(std::move(s));
}

semilinear_set sls_complement(const semilinear_set& s) {
    if (!sls_is_rational(s))
        throw unsupported_error("set complement is only supported for rational coefficients");
    semilinear_set acc = sls_universe(s.dimension);
    for (const auto& d : s.disjuncts) {
        semilinear_set neg = sls_empty(s.dimension);
        for (const auto& cons : d.constraints) {
            linear_constraint flipped;
            flipped.coeffs.reserve(cons.coeffs.size());
            for (const auto& v : cons.coeffs) flipped.coeffs.push_back(-v);
            flipped.constant = -cons.constant;
            flipped.rel = relation::gt;
            if (cons.rel == relation::eq) {
                // not(v = 0)  <=>  v > 0 or -v > 0
                linear_constraint pos = cons;
                pos.rel = relation::gt;
                neg.disjuncts.push_back({{pos}});
                neg.disjuncts.push_back({{flipped}});
            } else {
                // not(v > 0)  <=>  -v > 0 or v = 0
                linear_constraint zero = cons;
                zero.rel = relation::eq;
                neg.disjuncts.push_back({{flipped}});
                neg.disjuncts.push_back({{zero}});
            }
        }
        acc = simplify_over_reals(sls_intersect(acc, neg));
        if (acc.disjuncts.empty()) return acc;
    }
    return acc;
}

semilinear_set simplify_over_reals(const semilinear_set& s) {
    semilinear_set out = normalize_set(s);
    std::vector<conjunct> kept;
    for (auto& d : out.disjuncts)
        if (conjunct_real_point(d, out.dimension).nonempty) kept.push_back(std::move(d));
    out.disjuncts = std::move(kept);
    return out;
}

bool contains(const semilinear_set& s, const std::vector<scalar>& point) {
    if (point.size() != s.dimension)
        throw precondition_error("contains: point dimension mismatch");
    for (const auto& d : s.disjuncts) {
        bool all = true;
        for (const auto& c : d.constraints)
            if (!constraint_holds(c, point)) { all = false; break; }
        if (all) return true;
    }
    return false;
}

emptiness_result is_empty_real(const semilinear_set& s) {
    for (const auto& d : s.disjuncts) {
        auto rp = conjunct_real_point(d, s.dimension);
        if (rp.nonempty) return {emptiness_status::non_empty, std::move(rp.x), ""};
    }
    return {emptiness_status::empty, {}, ""};
}

emptiness_result is_empty_rational(const semilinear_set& s) {
    const size_t n = s.dimension;
    for (const auto& raw : s.disjuncts) {
        auto can = canonicalize_conjunct(raw);
        if (!can) continue;

        std::vector<linear_constraint> eqs, gts;
        for (const auto& c : can->constraints) {
            if (c.rel == relation::gt) {
                gts.push_back(c);
            } else if (constraint_is_rational(c)) {
                eqs.push_back(c);
            } else {
                auto split = split_equality_by_radicand(c);
                eqs.insert(eqs.end(), split.begin(), split.end());
            }
        }

        // rational parametrization x = x0 + V z of the equality solutions
        std::vector<scalar> x0(n, scalar(0));
        std::vector<std::vector<scalar>> cols;
        if (eqs.empty()) {
            cols.resize(n, std::vector<scalar>(n, scalar(0)));
            for (size_t j = 0; j < n; ++j) cols[j][j] = scalar(1);
        } else {
            matrix m(eqs.size(), n);
            std::vector<scalar> rhs;
            rhs.reserve(eqs.size());
            for (size_t i = 0; i < eqs.size(); ++i) {
                for (size_t j = 0; j < n; ++j) m.at(i, j) = eqs[i].coeffs[j];
                rhs.push_back(-eqs[i].constant);
            }
            auto part = solve_linear(m, rhs);
            if (!part) continue; // equalities have no solution at all
            x0 = std::move(*part);
            cols = kernel_basis(m);
        }
        const size_t k = cols.size();

        auto lift = [&](const std::vector<scalar>& z) {
            std::vector<scalar> x = x0;
            for (size_t j = 0; j < k; ++j) {
                if (z[j].is_zero()) continue;
                for (size_t i = 0; i < n; ++i) x[i] = x[i] + cols[j][i] * z[j];
            }
            return x;
        };

        if (gts.empty())
            return {emptiness_status::non_empty, lift(std::vector<scalar>(k, scalar(0))), ""};

        // substitute the parametrization into the strict rows
        std::vector<lp_row> zrows;
        zrows.reserve(gts.size());
        for (const auto& g : gts) {
            lp_row zr;
            zr.rel = lp_rel::gt;
            zr.a.assign(k, scalar(0));
            zr.a0 = g.constant;
            for (size_t i = 0; i < n; ++i) {
                if (g.coeffs[i].is_zero()) continue;
                zr.a0 = zr.a0 + g.coeffs[i] * x0[i];
                for (size_t j = 0; j < k; ++j)
                    zr.a[j] = zr.a[j] + g.coeffs[i] * cols[j][i];
            }
            zrows.push_back(std::move(zr));
        }

        const auto out = strict_feasibility_lp(zrows, k);
        if (!out.feasible || out.eps.sign() <= 0) continue;

        bool rational_pt = true;
        for (const auto& v : out.point)
            if (!v.is_rational()) { rational_pt = false; break; }
        if (rational_pt)
            return {emptiness_status::non_empty, lift(out.point), ""};

        // The margins at the LP point are >= eps > 0 and rationals are dense,
        // so snapping z to dyadic rationals succeeds once the grid is fine.
        for (int bits = 4; bits <= 256; bits *= 2) {
            const rational grid = rational(bigint(1) << bits, 1);
            std::vector<scalar> z;
            z.reserve(k);
            for (const auto& v : out.point)
                z.push_back(scalar(rational((v * scalar(grid)).floor(), grid.num())));
            const auto x = lift(z);
            bool ok = true;
            for (const auto& c : can->constraints)
                if (!constraint_holds(c, x)) { ok = false; break; }
            if (ok) return {emptiness_status::non_empty, x, ""};
        }
        throw internal_error("rational emptiness: dyadic snapping failed to converge");
    }
    return {emptiness_status::empty, {}, ""};
}

bool sls_equivalent(const semilinear_set& a, const semilinear_set& b) {
    if (a.dimension != b.dimension) return false;
    const auto d1 = is_empty_real(sls_intersect(a, sls_complement(b)));
    if (d1.status != emptiness_status::empty) return false;
    const auto d2 = is_empty_real(sls_intersect(b, sls_complement(a)));
    return d2.status == emptiness_status::empty;
}

namespace {

std::string coeff_prefix(const scalar& v, bool first) {
    // render v as a multiplier for "*name"; assumes v is neither 0, 1 nor -1
    std::string body;
    if (v.coords().size() > 1) {
        body = "(" + v.str() + ")";
        return first ? body : "+" + body;
    }
    body = v.str();
    if (!first && body[0] != '-') body = "+" + body;
    return body;
}

std::string format_affine(const std::vector<scalar>& coeffs, const scalar& constant,
                          const std::vector<std::string>& names) {
    std::string out;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        const scalar& v = coeffs[j];
        if (v.is_zero()) continue;
        const bool first = out.empty();
        if (v == scalar(1)) {
            out += first ? names[j] : "+" + names[j];
        } else if (v == scalar(-1)) {
            out += "-" + names[j];
        } else {
            out += coeff_prefix(v, first) + "*" + names[j];
        }
    }
    if (constant.sign() != 0) {
        std::string cs = constant.str();
        if (!out.empty() && cs[0] != '-') cs = "+" + cs;
        out += cs;
    }
    return out.empty() ? "0" : out;
}

// nullopt: the conjunct is syntactically false; empty string: trivially true
std::optional<std::string> format_conjunct(const conjunct& c, size_t dim,
                                           const std::vector<std::string>& names) {
    struct wrow {
        std::vector<scalar> a;
        scalar a0;
    };
    std::vector<wrow> eqs, gts;
    for (const auto& cons : c.constraints) {
        wrow w{cons.coeffs, cons.constant};
        w.a.resize(dim, scalar(0));
        (cons.rel == relation::eq ? eqs : gts).push_back(std::move(w));
    }

    // reduced row echelon form of the equalities
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t col = 0; col < dim && r < eqs.size(); ++col) {
        size_t sel = eqs.size();
        for (size_t i = r; i < eqs.size(); ++i)
            if (!eqs[i].a[col].is_zero()) { sel = i; break; }
        if (sel == eqs.size()) continue;
        std::swap(eqs[r], eqs[sel]);
        const scalar inv = eqs[r].a[col].inverse();
        for (auto& v : eqs[r].a) v = v * inv;
        eqs[r].a0 = eqs[r].a0 * inv;
        for (size_t i = 0; i < eqs.size(); ++i) {
            if (i == r || eqs[i].a[col].is_zero()) continue;
            const scalar f = eqs[i].a[col];
            for (size_t j = 0; j < dim; ++j) eqs[i].a[j] = eqs[i].a[j] - f * eqs[r].a[j];
            eqs[i].a0 = eqs[i].a0 - f * eqs[r].a0;
        }
        pivot_cols.push_back(col);
        ++r;
    }
    for (size_t i = r; i < eqs.size(); ++i)
        if (eqs[i].a0.sign() != 0) return std::nullopt; // 0 = nonzero
    eqs.resize(r);

    // substitute the pivot variables out of the strict rows
    for (auto& g : gts)
        for (size_t i = 0; i < eqs.size(); ++i) {
            const scalar f = g.a[pivot_cols[i]];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) g.a[j] = g.a[j] - f * eqs[i].a[j];
            g.a0 = g.a0 - f * eqs[i].a0;
        }

    std::vector<std::string> atoms;
    for (size_t i = 0; i < eqs.size(); ++i) {
        std::vector<scalar> rhs(dim, scalar(0));
        for (size_t j = 0; j < dim; ++j)
            if (j != pivot_cols[i]) rhs[j] = -eqs[i].a[j];
        atoms.push_back(names[pivot_cols[i]] + "==" + format_affine(rhs, -eqs[i].a0, names));
    }
    for (auto& g : gts) {
        const int lead = leading_index(g.a);
        if (lead < 0) {
            if (g.a0.sign() > 0) continue; // trivially true after substitution
            return std::nullopt;
        }
        const scalar lv = g.a[lead];
        const int s = lv.sign();
        const scalar norm = lv.inverse() * scalar(s); // positive
        for (auto& v : g.a) v = v * norm;
        g.a0 = g.a0 * norm;
        std::vector<scalar> rest(dim, scalar(0));
        for (size_t j = 0; j < dim; ++j)
            if (static_cast<int>(j) != lead) rest[j] = s > 0 ? -g.a[j] : g.a[j];
        const scalar rest0 = s > 0 ? -g.a0 : g.a0;
        if (s > 0)
            atoms.push_back(format_affine(rest, rest0, names) + "<" + names[lead]);
        else
            atoms.push_back(names[lead] + "<" + format_affine(rest, rest0, names));
    }

    if (atoms.empty()) return std::string();
    std::string out = "[[";
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += ",";
        out += atoms[i];
    }
    out += "]]";
    return out;
}

} // namespace

std::string format_locus(const semilinear_set& s, std::vector<std::string> names) {
    if (names.empty()) {
        for (size_t j = 1; j <= s.dimension; ++j) names.push_back("u" + std::to_string(j));
    } else if (names.size() != s.dimension) {
        throw precondition_error("format_locus: name count does not match the dimension");
    }
    std::vector<std::string> parts;
    for (const auto& d : s.disjuncts) {
        auto piece = format_conjunct(d, s.dimension, names);
        if (!piece) continue;
        if (piece->empty()) return "TRUE"; // a full-space disjunct absorbs the rest
        parts.push_back(std::move(*piece));
    }
    if (parts.empty()) return "FALSE";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "OR";
        out += parts[i];
    }
    return out;
}

} // namespace antlyzer
