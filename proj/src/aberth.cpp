#include <algorithm>
#include <vector>

#include "wlab/roots.hpp"

// Aberth-Ehrlich simultaneous iteration; multiple roots arrive as
// clusters and are collapsed by a multiplicity-aware Newton refinement
// at boosted precision.

namespace wlab {

namespace {

// p(z) and p'(z) in one Horner sweep.
std::pair<BigComplex, BigComplex> horner2(const std::vector<BigComplex>& c,
                                          const BigComplex& z) {
    BigComplex p = c.back();
    BigComplex dp = zero_like(z);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    return {p, dp};
}

std::vector<BigComplex> raise_precision(const std::vector<BigComplex>& c,
                                        mpfr_prec_t prec) {
    std::vector<BigComplex> out;
    out.reserve(c.size());
    for (const auto& v : c) {
        BigFloat re(prec), im(prec);
        mpfr_set(re.raw(), v.re().raw(), MPFR_RNDN); // exact: precision grows
        mpfr_set(im.raw(), v.im().raw(), MPFR_RNDN);
        out.emplace_back(std::move(re), std::move(im));
    }
    return out;
}

} // namespace

std::vector<BigComplex> aberth_roots(const UniPoly<BigComplex>& p) {
    if (p.is_zero()) throw Error("roots of the zero polynomial");
    const mpfr_prec_t prec = p.leading().prec();
    std::vector<BigComplex> out;
    if (p.degree() == 0) return out;

    // exact zero roots: strip trailing structural zeros
    std::vector<BigComplex> c = p.coeffs();
    std::size_t val = 0;
    while (val < c.size() - 1 && c[val].is_zero()) ++val;
    for (std::size_t i = 0; i < val; ++i) out.emplace_back(prec);
    c.erase(c.begin(), c.begin() + static_cast<long>(val));
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0) return out;

    // normalize (better-scaled Horner)
    BigComplex lead_inv = c.back().inv();
    for (auto& v : c) v = v * lead_inv;

    // Cauchy-style radius
    BigFloat radius = BigFloat::from_long(0, prec);
    for (int i = 0; i < n; ++i) {
        BigFloat a = c[static_cast<std::size_t>(i)].abs();
        if (a > radius) radius = a;
    }
    radius = radius + BigFloat::from_long(1, prec);

    // initial points on a circle with an irrational-ish angular offset
    std::vector<BigComplex> z;
    z.reserve(static_cast<std::size_t>(n));
    BigFloat two_pi(prec);
    mpfr_const_pi(two_pi.raw(), MPFR_RNDN);
    two_pi = two_pi * BigFloat::from_long(2, prec);
    for (int k = 0; k < n; ++k) {
        BigFloat ang = two_pi *
                       (BigFloat::from_long(4 * k + 1, prec) /
                        BigFloat::from_long(4 * n, prec));
        BigFloat s(prec), co(prec);
        mpfr_sin_cos(s.raw(), co.raw(), ang.raw(), MPFR_RNDN);
        z.emplace_back(radius * co * BigFloat::from_double(0.9, prec),
                       radius * s * BigFloat::from_double(0.9, prec));
    }

    const BigFloat target = BigFloat::pow2(-static_cast<long>(prec) + 24, prec);
    BigFloat last_max = radius;
    int stagnant = 0;
    for (int iter = 0; iter < 500; ++iter) {
        BigFloat max_step(prec);
        for (int k = 0; k < n; ++k) {
            auto [pv, dpv] = horner2(c, z[static_cast<std::size_t>(k)]);
            if (pv.is_zero()) continue;
            BigComplex w = dpv.is_zero() ? BigComplex::from_long(0, prec)
                                         : pv * dpv.inv();
            // Aberth correction: w / (1 - w * sum 1/(z_k - z_j))
            BigComplex s(prec);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                BigComplex d = z[static_cast<std::size_t>(k)] -
                               z[static_cast<std::size_t>(j)];
                if (d.is_zero()) continue;
                s = s + d.inv();
            }
            BigComplex denom = BigComplex::from_long(1, prec) - w * s;
            BigComplex step = denom.is_zero() ? w : w * denom.inv();
            z[static_cast<std::size_t>(k)] = z[static_cast<std::size_t>(k)] - step;
            BigFloat m = step.abs() /
                         (BigFloat::from_long(1, prec) +
                          z[static_cast<std::size_t>(k)].abs());
            if (m > max_step) max_step = m;
        }
        if (!(max_step > target)) break;
        // multiple roots: steps plateau around eps^(1/m); stop when stuck
        if (!(max_step < last_max * BigFloat::from_double(0.99, prec))) {
            if (++stagnant > 12) break;
        } else {
            stagnant = 0;
        }
        last_max = max_step;
    }
    for (auto& r : z) out.push_back(std::move(r));
    return out;
}

std::vector<std::pair<BigComplex, int>> cluster_roots(std::vector<BigComplex> roots,
                                                      const UniPoly<BigComplex>& p) {
    const mpfr_prec_t prec = p.leading().prec();
    const BigFloat rho = cluster_radius(prec);
    const std::size_t n = roots.size();
    std::vector<int> group(n, -1);
    int ng = 0;
    // union by chaining: same-group when within rho of any member
    for (std::size_t i = 0; i < n; ++i) {
        if (group[i] >= 0) continue;
        group[i] = ng;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < n; ++b) {
                if (group[b] >= 0) continue;
                BigFloat d = (roots[a] - roots[b]).abs();
                BigFloat scale = BigFloat::from_long(1, prec) + roots[a].abs();
                if (d < rho * scale) {
                    group[b] = ng;
                    stack.push_back(b);
                }
            }
        }
        ++ng;
    }

    // refine each cluster center by multiplicity-aware Newton at boosted
    // precision (the division by m restores quadratic convergence at an
    // m-fold root)
    const mpfr_prec_t hi = prec * 2 + 64;
    std::vector<BigComplex> chi = raise_precision(p.coeffs(), hi);
    std::vector<std::pair<BigComplex, int>> out;
    for (int g = 0; g < ng; ++g) {
        BigComplex center(hi);
        int m = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (group[i] == g) {
                BigComplex r = raise_precision({roots[i]}, hi)[0];
                center = center + r;
                ++m;
            }
        center = center * BigComplex::from_long(m, hi).inv();
        BigComplex mult = BigComplex::from_long(m, hi);
        for (int it = 0; it < 64; ++it) {
            auto [pv, dpv] = horner2(chi, center);
            if (pv.is_zero() || dpv.is_zero()) break;
            BigComplex step = mult * pv * dpv.inv();
            center = center - step;
            if (!(step.abs() >
                  BigFloat::pow2(-static_cast<long>(hi) + 16, hi) *
                      (BigFloat::from_long(1, hi) + center.abs())))
                break;
        }
        // round back to working precision
        BigFloat re(prec), im(prec);
        mpfr_set(re.raw(), center.re().raw(), MPFR_RNDN);
        mpfr_set(im.raw(), center.im().raw(), MPFR_RNDN);
        out.emplace_back(BigComplex(std::move(re), std::move(im)), m);
    }
    // deterministic order: by real part, then imaginary part
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int cr = mpfr_cmp(a.first.re().raw(), b.first.re().raw());
        if (cr != 0) return cr < 0;
        return mpfr_cmp(a.first.im().raw(), b.first.im().raw()) < 0;
    });
    return out;
}

std::vector<std::pair<BigComplex, int>> isolate_complex_roots(
    const UniPoly<BigComplex>& p) {
    if (p.is_zero()) throw Error("isolate_roots of the zero polynomial");
    if (p.degree() == 0) return {};
    return cluster_roots(aberth_roots(p), p);
}

} // namespace wlab
