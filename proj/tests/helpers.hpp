#ifndef WLAB_TEST_HELPERS_HPP
#define WLAB_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "wlab/curve.hpp"
#include "wlab/local.hpp"
#include "wlab/number_field.hpp"
#include "wlab/roots.hpp"

namespace wlab_test {

using namespace wlab;

inline UniPoly<Rational> qpoly(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly<Rational>(std::move(c));
}

inline NumberFieldPtr fermat_field() {
    return NumberField::make(qpoly({1, 0, 0, 0, 0, 0, 1})); // t^6 + 1
}

template <class K>
HomogeneousPoly<K> fermat_poly(const K& one) {
    HomogeneousPoly<K> f(6);
    f.add_term({6, 0, 0}, one);
    f.add_term({0, 6, 0}, one);
    f.add_term({0, 0, 6}, one);
    return f;
}

inline CurveSpec<Rational> fermat_q() {
    return CurveSpec<Rational>(fermat_poly(Rational(1)), "fermat");
}

inline CurveSpec<NFElem> fermat_nf(const NumberFieldPtr& F) {
    return CurveSpec<NFElem>(fermat_poly(F->from_rational(Rational(1))), "fermat");
}

inline CurveSpec<BigComplex> fermat_c(mpfr_prec_t prec) {
    return CurveSpec<BigComplex>(fermat_poly(BigComplex::from_long(1, prec)),
                                 "fermat");
}

// Random dense sextic with small rational coefficients; `bump` keeps the
// Fermat diagonal so the curve stays comfortably smooth.
inline CurveSpec<Rational> random_sextic_q(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-10, 10);
    HomogeneousPoly<Rational> f(6);
    f.add_term({6, 0, 0}, Rational(7));
    f.add_term({0, 6, 0}, Rational(7));
    f.add_term({0, 0, 6}, Rational(7));
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; a + b <= 6; ++b) {
            int v = num(rng);
            if (v) f.add_term({a, b, 6 - a - b}, Rational(v, 10));
        }
    return CurveSpec<Rational>(std::move(f));
}

inline CurveSpec<BigComplex> to_complex(const CurveSpec<Rational>& c,
                                        mpfr_prec_t prec) {
    HomogeneousPoly<BigComplex> f(6);
    for (const auto& [e, coef] : c.poly().terms())
        f.add_term(e, BigComplex::from_rational(coef, prec));
    return CurveSpec<BigComplex>(std::move(f), c.label());
}

// A random smooth point on a complex sextic: draw x0, y0, solve the
// degree-6 equation in z, take a root.
inline ProjectivePoint<BigComplex> random_point_on(const CurveSpec<BigComplex>& c,
                                                   std::mt19937_64& rng,
                                                   mpfr_prec_t prec) {
    std::uniform_int_distribution<int> num(-100, 100);
    for (int attempt = 0; attempt < 60; ++attempt) {
        BigComplex x0(BigFloat::from_long(num(rng), prec) / BigFloat::from_long(64, prec),
                      BigFloat::from_long(num(rng), prec) / BigFloat::from_long(97, prec));
        BigComplex y0(BigFloat::from_long(num(rng), prec) / BigFloat::from_long(71, prec),
                      BigFloat::from_long(num(rng), prec) / BigFloat::from_long(83, prec));
        // restrict F to the pencil (x0 : y0 : z)
        std::vector<BigComplex> coef(7, BigComplex(prec));
        for (const auto& [e, cf] : c.poly().terms()) {
            BigComplex t = cf;
            for (int k = 0; k < e[0]; ++k) t = t * x0;
            for (int k = 0; k < e[1]; ++k) t = t * y0;
            coef[static_cast<std::size_t>(e[2])] = coef[static_cast<std::size_t>(e[2])] + t;
        }
        UniPoly<BigComplex> pz(coef);
        if (pz.is_zero() || pz.degree() < 1) continue;
        auto roots = isolate_complex_roots(pz);
        std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
        BigComplex z0 = roots[pick(rng)].first;
        ProjectivePoint<BigComplex> p(x0, y0, z0);
        if (on_curve(c, p) && !gradient_vanishes(c.poly(), p)) return p;
    }
    throw Error("random_point_on: no smooth point found");
}

} // namespace wlab_test

#endif
