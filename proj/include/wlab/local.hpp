#ifndef WLAB_LOCAL_HPP
#define WLAB_LOCAL_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wlab/big_complex.hpp"
#include "wlab/curve.hpp"
#include "wlab/errors.hpp"
#include "wlab/homopoly.hpp"
#include "wlab/point.hpp"
#include "wlab/series.hpp"

namespace wlab {

// Intersection multiplicity value; `saturated` means "at least value",
// i.e. every computed series coefficient vanished up to the truncation.
struct Multiplicity {
    int value = 0;
    bool saturated = false;

    friend bool operator==(const Multiplicity& a, const Multiplicity& b) {
        return a.value == b.value && a.saturated == b.saturated;
    }
    std::string str() const {
        return saturated ? (">=" + std::to_string(value)) : std::to_string(value);
    }
};

// Branch of C at a smooth point: in the chart where coordinate `chart`
// equals 1, the dependent coordinate is a power series in the offset of
// the parameter coordinate from its value at p.
template <class K>
struct BranchSeries {
    int chart;  // coordinate dehomogenized to 1
    int param;  // transverse variable: local parameter x = (coord - value at p)
    int dep;    // coordinate solved as a series in x
    K param_at_p;
    Series<K> dep_series; // dep(x); dep_series[0] = dep coordinate at p
    int order;            // series valid through x^order
};

namespace detail {

template <class K>
std::array<K, 3> gradient_at(const HomogeneousPoly<K>& f, const ProjectivePoint<K>& p) {
    return {f.partial(0).evaluate(p.coords()), f.partial(1).evaluate(p.coords()),
            f.partial(2).evaluate(p.coords())};
}

// Natural evaluation scale of a form at a point: sum of |coef| * |p|^exp.
inline BigFloat eval_scale(const HomogeneousPoly<BigComplex>& f,
                           const ProjectivePoint<BigComplex>& p) {
    mpfr_prec_t prec = 64;
    for (const auto& [e, coef] : f.terms()) {
        prec = std::max(prec, coef.prec());
        break;
    }
    BigFloat acc = BigFloat(prec);
    for (const auto& [e, coef] : f.terms()) {
        BigFloat t = coef.abs();
        for (int i = 0; i < 3; ++i) {
            BigFloat a = p[i].abs();
            for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) t = t * a;
        }
        acc = acc + t;
    }
    BigFloat one = BigFloat::from_long(1, prec);
    return acc > one ? acc : one;
}

} // namespace detail

template <class K>
bool on_curve(const HomogeneousPoly<K>& f, const ProjectivePoint<K>& p) {
    K v = f.evaluate(p.coords());
    if constexpr (is_exact_v<K>) {
        return exact_zero(v);
    } else {
        BigFloat scale = detail::eval_scale(f, p);
        return !(v.abs() > scale * tau_rank(v.prec()));
    }
}

template <class K>
bool on_curve(const CurveSpec<K>& c, const ProjectivePoint<K>& p) {
    return on_curve(c.poly(), p);
}

template <class K>
bool gradient_vanishes(const HomogeneousPoly<K>& f, const ProjectivePoint<K>& p) {
    auto g = detail::gradient_at(f, p);
    if constexpr (is_exact_v<K>) {
        return exact_zero(g[0]) && exact_zero(g[1]) && exact_zero(g[2]);
    } else {
        BigFloat scale = BigFloat::from_long(0, g[0].prec());
        for (int v = 0; v < 3; ++v) {
            BigFloat s = detail::eval_scale(f.partial(v), p);
            if (s > scale) scale = s;
        }
        BigFloat thr = scale * tau_rank(g[0].prec());
        return !(g[0].abs() > thr) && !(g[1].abs() > thr) && !(g[2].abs() > thr);
    }
}

template <class K>
void require_smooth_point(const HomogeneousPoly<K>& f, const ProjectivePoint<K>& p) {
    if (!on_curve(f, p)) {
        std::string residual = scalar_str(f.evaluate(p.coords()));
        throw NotOnCurveError("point " + p.str() + " is not on the curve (residual " +
                              residual + ")");
    }
    if (gradient_vanishes(f, p))
        throw SingularPointError("curve is singular at " + p.str());
}

template <class K>
void require_smooth_point(const CurveSpec<K>& c, const ProjectivePoint<K>& p) {
    require_smooth_point(c.poly(), p);
}

// Tangent line: coefficients are the gradient components at p.
template <class K>
HomogeneousPoly<K> tangent_line(const HomogeneousPoly<K>& f,
                                const ProjectivePoint<K>& p) {
    require_smooth_point(f, p);
    auto g = detail::gradient_at(f, p);
    HomogeneousPoly<K> line(1);
    line.add_term({1, 0, 0}, g[0]);
    line.add_term({0, 1, 0}, g[1]);
    line.add_term({0, 0, 1}, g[2]);
    return line;
}

template <class K>
HomogeneousPoly<K> tangent_line(const CurveSpec<K>& c, const ProjectivePoint<K>& p) {
    return tangent_line(c.poly(), p);
}

namespace detail {

// Compose a form with the branch data: substitute, in the branch chart,
// param -> param_at_p + x and dep -> dep_series; returns D's restriction
// to the branch as a series in x, truncated at `order`.
template <class K>
Series<K> compose_on_branch(const HomogeneousPoly<K>& d, const BranchSeries<K>& bs,
                            int order) {
    const K& proto = bs.param_at_p;
    // powers of (param_at_p + x) and of dep_series up to deg(d)
    Series<K> u = series_zero(order, proto);
    u[0] = bs.param_at_p;
    if (order >= 1) u[1] = one_like(proto);
    Series<K> v = series_truncate(bs.dep_series, order);
    int dd = d.degree();
    std::vector<Series<K>> upow, vpow;
    upow.push_back(series_const(order, one_like(proto)));
    vpow.push_back(series_const(order, one_like(proto)));
    for (int k = 1; k <= dd; ++k) {
        upow.push_back(series_mul(upow.back(), u));
        vpow.push_back(series_mul(vpow.back(), v));
    }
    Series<K> acc = series_zero(order, proto);
    for (const auto& [e, coef] : d.terms()) {
        int a = e[static_cast<std::size_t>(bs.param)];
        int b = e[static_cast<std::size_t>(bs.dep)];
        // chart exponent contributes 1^c
        Series<K> t = series_scale(series_mul(upow[static_cast<std::size_t>(a)],
                                              vpow[static_cast<std::size_t>(b)]),
                                   coef);
        acc = series_add(acc, t);
    }
    return acc;
}

} // namespace detail

// Optional overrides let property tests force a specific admissible chart.
struct BranchOptions {
    std::optional<int> chart;
    std::optional<int> param;
};

template <class K>
BranchSeries<K> branch_series(const HomogeneousPoly<K>& f, const ProjectivePoint<K>& p,
                              int order, const BranchOptions& opts = {}) {
    if (order < 1) throw InputError("branch series order must be >= 1");
    if (f.degree() < 1) throw InputError("branch series needs a nonconstant form");
    require_smooth_point(f, p);
    auto grad = detail::gradient_at(f, p);

    // chart: largest-magnitude coordinate (float) / last nonzero (exact)
    int chart;
    if (opts.chart) {
        chart = *opts.chart;
        if (chart < 0 || chart > 2 || exact_zero(p[chart]))
            throw InputError("invalid chart override");
    } else if constexpr (is_exact_v<K>) {
        chart = p.normalized_index();
    } else {
        chart = 0;
        BigFloat best = p[0].abs();
        for (int i = 1; i < 3; ++i)
            if (p[i].abs() > best) {
                best = p[i].abs();
                chart = i;
            }
    }

    // dependent coordinate: the non-chart coordinate with a usable
    // partial; the transverse parameter is the remaining one, preferring
    // x over y over z.
    int param = -1, dep = -1;
    if (opts.param) {
        param = *opts.param;
        if (param == chart || param < 0 || param > 2)
            throw InputError("invalid parameter override");
        dep = 3 - chart - param;
        if (exact_zero(grad[static_cast<std::size_t>(dep)]))
            throw InputError("overridden chart has zero partial for the dependent "
                             "coordinate");
    } else if constexpr (is_exact_v<K>) {
        for (int t = 0; t < 3 && param < 0; ++t) {
            if (t == chart) continue;
            int d = 3 - chart - t;
            if (!exact_zero(grad[static_cast<std::size_t>(d)])) {
                param = t;
                dep = d;
            }
        }
        if (param < 0)
            throw SingularPointError("no usable dependent coordinate at " + p.str());
    } else {
        int cand[2], nc = 0;
        for (int t = 0; t < 3; ++t)
            if (t != chart) cand[nc++] = t;
        // pick transverse t so that |grad[dep]| is maximal; tie -> smaller t
        BigFloat g0 = grad[static_cast<std::size_t>(3 - chart - cand[0])].abs();
        BigFloat g1 = grad[static_cast<std::size_t>(3 - chart - cand[1])].abs();
        if (g1 > g0) {
            param = cand[1];
        } else {
            param = cand[0];
        }
        dep = 3 - chart - param;
    }

    // affine coordinates relative to the chart
    K ch_inv = inv_of(p[chart]);
    K u0 = p[param] * ch_inv;
    K v0 = p[dep] * ch_inv;

    BranchSeries<K> bs{chart, param, dep, u0, series_zero(order, u0), order};
    bs.dep_series[0] = v0;

    // dG/dv at the point, where G is F restricted to the chart. Constant
    // through the iteration because it only depends on the base point.
    HomogeneousPoly<K> fd = f.partial(dep);
    std::array<K, 3> affine = p.coords();
    for (auto& v : affine) v = v * ch_inv;
    K gy = fd.evaluate(affine);
    if (exact_zero(gy))
        throw SingularPointError("implicit function condition failed at " + p.str());
    K gy_inv = inv_of(gy);

    // order-by-order undetermined coefficients:
    //   c_m = -[x^m] F(u0 + x, y_partial(x)) / Fy
    for (int m = 1; m <= order; ++m) {
        Series<K> comp = detail::compose_on_branch(f, bs, m);
        bs.dep_series[m] = -(comp[m] * gy_inv);
    }
    return bs;
}

template <class K>
BranchSeries<K> branch_series(const CurveSpec<K>& c, const ProjectivePoint<K>& p,
                              int order, const BranchOptions& opts = {}) {
    return branch_series(c.poly(), p, order, opts);
}

// Largest x-power dividing the composed series; `saturated` when every
// coefficient through x^order is (numerically) zero.
template <class K>
Multiplicity series_valuation(const Series<K>& s) {
    if constexpr (is_exact_v<K>) {
        for (int i = 0; i <= s.order(); ++i)
            if (!exact_zero(s[i])) return {i, false};
        return {s.order() + 1, true};
    } else {
        BigFloat scale(s[0].prec());
        for (int i = 0; i <= s.order(); ++i) {
            BigFloat a = s[i].abs();
            if (a > scale) scale = a;
        }
        if (scale.is_zero()) return {s.order() + 1, true};
        BigFloat thr = scale * tau_rank(s[0].prec());
        for (int i = 0; i <= s.order(); ++i)
            if (s[i].abs() > thr) return {i, false};
        return {s.order() + 1, true};
    }
}

template <class K>
Multiplicity intersection_multiplicity(const HomogeneousPoly<K>& f,
                                       const HomogeneousPoly<K>& d,
                                       const ProjectivePoint<K>& p, int order) {
    if (d.is_zero()) throw InputError("intersection with the zero form");
    BranchSeries<K> bs = branch_series(f, p, order);
    return series_valuation(detail::compose_on_branch(d, bs, order));
}

template <class K>
Multiplicity intersection_multiplicity(const CurveSpec<K>& c,
                                       const HomogeneousPoly<K>& d,
                                       const ProjectivePoint<K>& p, int order = 24) {
    return intersection_multiplicity(c.poly(), d, p, order);
}

template <class K>
Multiplicity intersection_multiplicity(const HomogeneousPoly<K>& d,
                                       const BranchSeries<K>& bs) {
    if (d.is_zero()) throw InputError("intersection with the zero form");
    return series_valuation(detail::compose_on_branch(d, bs, bs.order));
}

// Residual of the defining equation along the branch (diagnostic; the
// construction solves it to zero order by order).
template <class K>
Series<K> branch_residual(const CurveSpec<K>& c, const BranchSeries<K>& bs) {
    return detail::compose_on_branch(c.poly(), bs, bs.order);
}

} // namespace wlab

#endif
