#include <algorithm>
#include <optional>

#include "antlyzer/error.hpp"
#include "antlyzer/lp.hpp"
#include "antlyzer/rational.hpp"
#include "antlyzer/semilinear.hpp"

// Integer emptiness of a semilinear set, one conjunct at a time:
//
//   1. sweep a small box of integer points (cheap, and it pins down the
//      natural witnesses like unit vectors),
//   2. a homogeneous all-rational conjunct is integer-feasible iff it is
//      real-feasible (scale a rational point by the common denominator),
//   3. eliminate the equalities exactly over Z (extended-gcd column
//      reduction), leaving strict rows over the lattice parameters,
//   4. if those rows are rational: clear denominators, rewrite > 0 as >= 1,
//      divide each row by the gcd of its coefficients and round the bound up,
//      then branch and bound with an exact LP relaxation,
//   5. otherwise branch and bound directly on the strict system (LP with
//      maximized slack as the pruning test).
//
// Branch and bound carries a node budget shared across the whole set; when it
// runs out the result is unknown rather than a guess.

namespace antlyzer {

namespace {

bool constraint_is_rational_row(const linear_constraint& c) {
    if (!c.constant.is_rational()) return false;
    for (const auto& v : c.coeffs)
        if (!v.is_rational()) return false;
    return true;
}

bool holds_at(const linear_constraint& c, const std::vector<scalar>& x) {
    scalar acc = c.constant;
    for (size_t j = 0; j < c.coeffs.size(); ++j)
        if (!c.coeffs[j].is_zero() && !x[j].is_zero()) acc = acc + c.coeffs[j] * x[j];
    const int s = acc.sign();
    return c.rel == relation::eq ? s == 0 : s > 0;
}

bool conjunct_holds_at(const conjunct& c, const std::vector<scalar>& x) {
    for (const auto& cons : c.constraints)
        if (!holds_at(cons, x)) return false;
    return true;
}

// all integer points with |x_i| <= radius, ordered by 1-norm and then
// lexicographically descending, so (1,0,...) precedes (0,1,...) precedes 0's
// negative mirror images
std::vector<std::vector<long>> probe_points(size_t n, long radius) {
    std::vector<std::vector<long>> pts;
    std::vector<long> cur(n, -radius);
    for (;;) {
        pts.push_back(cur);
        size_t i = 0;
        while (i < n && cur[i] == radius) cur[i++] = -radius;
        if (i == n) break;
        ++cur[i];
    }
    std::sort(pts.begin(), pts.end(), [](const std::vector<long>& a, const std::vector<long>& b) {
        long la = 0, lb = 0;
        for (long v : a) la += v < 0 ? -v : v;
        for (long v : b) lb += v < 0 ? -v : v;
        if (la != lb) return la < lb;
        return a > b; // lexicographically descending
    });
    return pts;
}

// ---- affine integer lattice: common solutions of integer rows a . x = r ----

struct int_lattice {
    std::vector<bigint> origin;
    std::vector<std::vector<bigint>> dirs; // basis of the homogeneous part
};

bigint idot(const std::vector<bigint>& a, const std::vector<bigint>& b) {
    bigint s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// absorb one equation at a time, keeping dirs unimodularly equivalent to the
// lattice of remaining degrees of freedom
std::optional<int_lattice> solve_integer_rows(
    size_t n, const std::vector<std::pair<std::vector<bigint>, bigint>>& rows) {
    int_lattice lat;
    lat.origin.assign(n, 0);
    lat.dirs.assign(n, std::vector<bigint>(n, 0));
    for (size_t i = 0; i < n; ++i) lat.dirs[i][i] = 1;

    for (const auto& [a, rhs] : rows) {
        std::vector<bigint> w(lat.dirs.size());
        for (size_t j = 0; j < lat.dirs.size(); ++j) w[j] = idot(a, lat.dirs[j]);
        bigint residue = rhs - idot(a, lat.origin);

        size_t lead = lat.dirs.size();
        for (size_t j = 0; j < lat.dirs.size(); ++j) {
            if (w[j] == 0) continue;
            if (lead == lat.dirs.size()) {
                lead = j;
                continue;
            }
            // unimodular 2-column move sending (w_lead, w_j) to (gcd, 0)
            bigint g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w[lead].get_mpz_t(),
                       w[j].get_mpz_t());
            const bigint p = w[lead] / g, q = w[j] / g;
            std::vector<bigint> col_lead(n), col_j(n);
            for (size_t i = 0; i < n; ++i) {
                col_lead[i] = s * lat.dirs[lead][i] + t * lat.dirs[j][i];
                col_j[i] = -q * lat.dirs[lead][i] + p * lat.dirs[j][i];
            }
            lat.dirs[lead] = std::move(col_lead);
            lat.dirs[j] = std::move(col_j);
            w[lead] = g;
            w[j] = 0;
        }

        if (lead == lat.dirs.size()) {
            if (residue != 0) return std::nullopt;
            continue;
        }
        if (w[lead] < 0) {
            for (auto& v : lat.dirs[lead]) v = -v;
            w[lead] = -w[lead];
        }
        if (residue % w[lead] != 0) return std::nullopt;
        const bigint q = residue / w[lead];
        for (size_t i = 0; i < n; ++i) lat.origin[i] += q * lat.dirs[lead][i];
        lat.dirs.erase(lat.dirs.begin() + static_cast<std::ptrdiff_t>(lead));
    }
    return lat;
}

// ---- branch and bound ----

struct bb_state {
    long budget;
    long used = 0;
    bool exhausted = false;
};

constexpr int bb_max_depth = 4096; // paths deeper than this count as budget loss

// Rational case: rows c . z >= d with integer data, z free integers.
std::optional<std::vector<bigint>> bb_rational(std::vector<std::pair<std::vector<bigint>, bigint>> rows,
                                               size_t k, bb_state& st, int depth = 0) {
    if (st.exhausted || ++st.used > st.budget || depth > bb_max_depth) {
        st.exhausted = true;
        return std::nullopt;
    }
    std::vector<lp_row> lrows;
    lrows.reserve(rows.size());
    for (const auto& [c, d] : rows) {
        lp_row r;
        r.rel = lp_rel::ge;
        r.a.reserve(k);
        for (const auto& v : c) r.a.push_back(scalar(rational(v)));
        r.a0 = scalar(rational(-d));
        lrows.push_back(std::move(r));
    }
    const auto relax = strict_feasibility_lp(lrows, k);
    if (!relax.feasible) return std::nullopt;

    size_t frac = k;
    rational frac_val;
    for (size_t j = 0; j < k; ++j) {
        const rational v = relax.point[j].rational_value(); // rational data: exact
        if (!v.is_integer()) {
            frac = j;
            frac_val = v;
            break;
        }
    }
    if (frac == k) {
        std::vector<bigint> z;
        z.reserve(k);
        for (const auto& v : relax.point) z.push_back(v.rational_value().num());
        return z;
    }

    const bigint fl = frac_val.floor();
    std::vector<bigint> unit(k, 0);

    auto left = rows; // z_frac <= floor
    unit[frac] = -1;
    left.emplace_back(unit, -fl);
    if (auto z = bb_rational(std::move(left), k, st, depth + 1)) return z;
    if (st.exhausted) return std::nullopt;

    auto right = rows; // z_frac >= floor + 1
    unit[frac] = 1;
    right.emplace_back(unit, fl + 1);
    return bb_rational(std::move(right), k, st, depth + 1);
}

// Irrational case: strict scalar rows plus accumulated integer branch rows.
std::optional<std::vector<bigint>> bb_scalar(const std::vector<lp_row>& strict,
                                             std::vector<std::pair<std::vector<bigint>, bigint>> bounds,
                                             size_t k, bb_state& st, int depth = 0) {
    if (st.exhausted || ++st.used > st.budget || depth > bb_max_depth) {
        st.exhausted = true;
        return std::nullopt;
    }
    std::vector<lp_row> lrows = strict;
    for (const auto& [c, d] : bounds) {
        lp_row r;
        r.rel = lp_rel::ge;
        r.a.reserve(k);
        for (const auto& v : c) r.a.push_back(scalar(rational(v)));
        r.a0 = scalar(rational(-d));
        lrows.push_back(std::move(r));
    }
    const auto relax = strict_feasibility_lp(lrows, k);
    if (!relax.feasible || relax.eps.sign() <= 0) return std::nullopt;

    size_t frac = k;
    for (size_t j = 0; j < k; ++j) {
        const scalar& v = relax.point[j];
        if (!v.is_rational() || !v.rational_value().is_integer()) {
            frac = j;
            break;
        }
    }
    if (frac == k) {
        std::vector<bigint> z;
        z.reserve(k);
        for (const auto& v : relax.point) z.push_back(v.rational_value().num());
        return z;
    }

    const bigint fl = relax.point[frac].floor();
    std::vector<bigint> unit(k, 0);

    auto left = bounds;
    unit[frac] = -1;
    left.emplace_back(unit, -fl);
    if (auto z = bb_scalar(strict, std::move(left), k, st, depth + 1)) return z;
    if (st.exhausted) return std::nullopt;

    auto right = std::move(bounds);
    unit[frac] = 1;
    right.emplace_back(unit, fl + 1);
    return bb_scalar(strict, std::move(right), k, st, depth + 1);
}

struct conjunct_answer {
    emptiness_status status = emptiness_status::empty;
    std::vector<scalar> witness;
};

conjunct_answer integer_point_of_conjunct(const conjunct& can, size_t n, bb_state& st) {
    // 1. small-box sweep against the exact constraints
    const long radius = n <= 4 ? 2 : (n <= 8 ? 1 : 0);
    if (radius > 0) {
        for (const auto& p : probe_points(n, radius)) {
            std::vector<scalar> x;
            x.reserve(n);
            for (long v : p) x.push_back(scalar(v));
            if (conjunct_holds_at(can, x)) return {emptiness_status::non_empty, std::move(x)};
        }
    }

    // 2. homogeneous rational conjuncts: integer-feasible iff real-feasible
    bool rational_rows = true, homogeneous = true;
    for (const auto& c : can.constraints) {
        if (!constraint_is_rational_row(c)) rational_rows = false;
        if (!c.constant.is_zero()) homogeneous = false;
    }
    if (rational_rows && homogeneous) {
        semilinear_set one{n, {can}};
        const auto re = is_empty_real(one);
        if (re.status == emptiness_status::empty) return {emptiness_status::empty, {}};
        bigint den = 1;
        for (const auto& v : re.witness) den = lcm(den, v.rational_value().den());
        std::vector<scalar> x;
        x.reserve(n);
        for (const auto& v : re.witness)
            x.push_back(scalar(v.rational_value() * rational(den)));
        if (!conjunct_holds_at(can, x))
            throw internal_error("integer emptiness: scaled homogeneous witness failed its own rows");
        return {emptiness_status::non_empty, std::move(x)};
    }

    // 3. equality elimination over Z
    std::vector<std::pair<std::vector<bigint>, bigint>> eq_rows;
    std::vector<linear_constraint> gts;
    for (const auto& c : can.constraints) {
        if (c.rel == relation::gt) {
            gts.push_back(c);
            continue;
        }
        for (const auto& piece : split_equality_by_radicand(c)) {
            bigint den = piece.constant.rational_value().den();
            for (const auto& v : piece.coeffs) den = lcm(den, v.rational_value().den());
            std::vector<bigint> a;
            a.reserve(n);
            for (const auto& v : piece.coeffs) {
                const rational r = v.rational_value() * rational(den);
                a.push_back(r.num());
            }
            const rational rhs = -piece.constant.rational_value() * rational(den);
            eq_rows.emplace_back(std::move(a), rhs.num());
        }
    }
    const auto lat = solve_integer_rows(n, eq_rows);
    if (!lat) return {emptiness_status::empty, {}};
    const size_t k = lat->dirs.size();

    auto lift = [&](const std::vector<bigint>& z) {
        std::vector<scalar> x;
        x.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            bigint v = lat->origin[i];
            for (size_t j = 0; j < k; ++j) v += lat->dirs[j][i] * z[j];
            x.push_back(scalar(rational(v)));
        }
        return x;
    };

    // substitute x = origin + dirs . z into the strict rows
    std::vector<lp_row> zrows;
    zrows.reserve(gts.size());
    for (const auto& g : gts) {
        lp_row zr;
        zr.rel = lp_rel::gt;
        zr.a.assign(k, scalar(0));
        zr.a0 = g.constant;
        for (size_t i = 0; i < n; ++i) {
            if (g.coeffs[i].is_zero()) continue;
            zr.a0 = zr.a0 + g.coeffs[i] * scalar(rational(lat->origin[i]));
            for (size_t j = 0; j < k; ++j)
                if (lat->dirs[j][i] != 0)
                    zr.a[j] = zr.a[j] + g.coeffs[i] * scalar(rational(lat->dirs[j][i]));
        }
        zrows.push_back(std::move(zr));
    }

    if (k == 0 || gts.empty()) {
        // no freedom left, or nothing strict: the origin decides
        for (const auto& zr : zrows)
            if (zr.a0.sign() <= 0) return {emptiness_status::empty, {}};
        auto x = lift(std::vector<bigint>(k, 0));
        if (!conjunct_holds_at(can, x))
            throw internal_error("integer emptiness: lattice origin failed the residual rows");
        return {emptiness_status::non_empty, std::move(x)};
    }

    bool zrows_rational = true;
    for (const auto& zr : zrows) {
        if (!zr.a0.is_rational()) zrows_rational = false;
        for (const auto& v : zr.a)
            if (!v.is_rational()) zrows_rational = false;
    }

    std::optional<std::vector<bigint>> z;
    if (zrows_rational) {
        // clear denominators, turn c.z + c0 > 0 into c.z >= 1 - c0, and
        // tighten: divide by gcd(c) and round the bound up
        std::vector<std::pair<std::vector<bigint>, bigint>> irows;
        for (const auto& zr : zrows) {
            bigint den = zr.a0.rational_value().den();
            for (const auto& v : zr.a) den = lcm(den, v.rational_value().den());
            std::vector<bigint> c;
            c.reserve(k);
            bigint g = 0;
            for (const auto& v : zr.a) {
                c.push_back((v.rational_value() * rational(den)).num());
                g = gcd(g, c.back());
            }
            const bigint c0 = (zr.a0.rational_value() * rational(den)).num();
            bigint d = 1 - c0;
            if (g == 0) {
                if (d > 0) return {emptiness_status::empty, {}}; // 0 >= positive
                continue;
            }
            bigint dq;
            mpz_cdiv_q(dq.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
            for (auto& v : c) v /= g;
            irows.emplace_back(std::move(c), dq);
        }
        z = bb_rational(std::move(irows), k, st);
    } else {
        z = bb_scalar(zrows, {}, k, st);
    }

    if (!z) {
        if (st.exhausted) return {emptiness_status::unknown, {}};
        return {emptiness_status::empty, {}};
    }
    auto x = lift(*z);
    if (!conjunct_holds_at(can, x))
        throw internal_error("integer emptiness: branch and bound witness failed verification");
    return {emptiness_status::non_empty, std::move(x)};
}

} // namespace

emptiness_result is_empty_integer(const semilinear_set& s, long node_budget) {
    bb_state st{node_budget};
    bool any_unknown = false;
    for (const auto& raw : s.disjuncts) {
        auto can = canonicalize_conjunct(raw);
        if (!can) continue;
        if (can->constraints.empty())
            return {emptiness_status::non_empty, std::vector<scalar>(s.dimension, scalar(0)), ""};
        auto ans = integer_point_of_conjunct(*can, s.dimension, st);
        if (ans.status == emptiness_status::non_empty)
            return {emptiness_status::non_empty, std::move(ans.witness), ""};
        if (ans.status == emptiness_status::unknown) any_unknown = true;
    }
    if (any_unknown)
        return {emptiness_status::unknown, {}, "branch and bound node budget exhausted"};
    return {emptiness_status::empty, {}, ""};
}

} // namespace antlyzer
