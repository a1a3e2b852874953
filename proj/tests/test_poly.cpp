#include "doctest.h"

#include <random>

#include "wlab/curve.hpp"
#include "wlab/homopoly.hpp"
#include "wlab/number_field.hpp"
#include "wlab/rational.hpp"

using namespace wlab;

namespace {

HomogeneousPoly<Rational> fermat6() {
    HomogeneousPoly<Rational> f(6);
    f.add_term({6, 0, 0}, Rational(1));
    f.add_term({0, 6, 0}, Rational(1));
    f.add_term({0, 0, 6}, Rational(1));
    return f;
}

} // namespace

TEST_CASE("evaluate") {
    auto f = fermat6();
    CHECK(f.evaluate({Rational(1), Rational(0), Rational(0)}) == Rational(1));

    HomogeneousPoly<Rational> xyz(3);
    xyz.add_term({1, 1, 1}, Rational(1));
    CHECK(xyz.evaluate({Rational(1), Rational(2), Rational(3)}) == Rational(6));

    // Fermat at (0 : 1 : zeta) with zeta^6 = -1 vanishes
    auto F = NumberField::make(UniPoly<Rational>(
        std::vector<Rational>{Rational(1), Rational(0), Rational(0), Rational(0),
                              Rational(0), Rational(0), Rational(1)}));
    NFElem zeta = F->generator();
    HomogeneousPoly<NFElem> fn(6);
    NFElem one = F->from_rational(Rational(1));
    fn.add_term({6, 0, 0}, one);
    fn.add_term({0, 6, 0}, one);
    fn.add_term({0, 0, 6}, one);
    CHECK(fn.evaluate({zero_like(one), one, zeta}).is_zero());
}

TEST_CASE("partial derivatives") {
    HomogeneousPoly<Rational> x6(6);
    x6.add_term({6, 0, 0}, Rational(1));
    auto dx = x6.partial(0);
    REQUIRE(dx.terms().size() == 1);
    CHECK(dx.terms().begin()->first == Exponents{5, 0, 0});
    CHECK(dx.terms().begin()->second == Rational(6));
    CHECK(x6.partial(1).is_zero());

    HomogeneousPoly<Rational> x3z3(6);
    x3z3.add_term({3, 0, 3}, Rational(1));
    auto dz = x3z3.partial(2);
    REQUIRE(dz.terms().size() == 1);
    CHECK(dz.terms().begin()->first == Exponents{3, 0, 2});
    CHECK(dz.terms().begin()->second == Rational(3));
}

TEST_CASE("hessian") {
    // x^2+y^2+z^2 -> det(2 I3) = 8 as a degree-0 form
    HomogeneousPoly<Rational> q(2);
    q.add_term({2, 0, 0}, Rational(1));
    q.add_term({0, 2, 0}, Rational(1));
    q.add_term({0, 0, 2}, Rational(1));
    auto hq = hessian(q);
    REQUIRE(hq.terms().size() == 1);
    CHECK(hq.terms().begin()->second == Rational(8));
    CHECK(hq.degree() == 0);

    // det diag(30x^4, 30y^4, 30z^4) = 27000 x^4 y^4 z^4
    auto hf = hessian(fermat6());
    REQUIRE(hf.terms().size() == 1);
    CHECK(hf.terms().begin()->first == Exponents{4, 4, 4});
    CHECK(hf.terms().begin()->second == Rational(27000));
    CHECK(hf.degree() == 12);

    // hessian(xyz) = 2xyz (all-off-diagonal determinant, expanded by hand)
    HomogeneousPoly<Rational> xyz(3);
    xyz.add_term({1, 1, 1}, Rational(1));
    auto hx = hessian(xyz);
    REQUIRE(hx.terms().size() == 1);
    CHECK(hx.terms().begin()->first == Exponents{1, 1, 1});
    CHECK(hx.terms().begin()->second == Rational(2));
}

TEST_CASE("euler relation and hessian degree on random forms") {
    std::mt19937_64 rng(91);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> degd(1, 6);
    for (int trial = 0; trial < 50; ++trial) {
        int d = degd(rng);
        HomogeneousPoly<Rational> f(d);
        for (int a = 0; a <= d; ++a)
            for (int b = 0; a + b <= d; ++b) {
                int v = coef(rng);
                if (v) f.add_term({a, b, d - a - b}, Rational(v));
            }
        if (f.is_zero()) continue;
        // x Fx + y Fy + z Fz = d F
        CHECK(euler_combination(f) == f.scaled(Rational(d)));
        if (d >= 2) {
            auto h = hessian(f);
            if (!h.is_zero()) CHECK(h.degree() == 3 * (d - 2));
        }
    }
}

TEST_CASE("canonical term order and printing") {
    HomogeneousPoly<Rational> f(3);
    f.add_term({0, 0, 3}, Rational(2));
    f.add_term({3, 0, 0}, Rational(1));
    f.add_term({1, 1, 1}, Rational(-1, 2));
    CHECK(f.str() == "x^3 - 1/2*x*y*z + 2*z^3");

    // cancellation removes the stored term
    f.add_term({3, 0, 0}, Rational(-1));
    CHECK(f.terms().size() == 2);
    CHECK_THROWS_AS(f.add_term({2, 0, 0}, Rational(1)), InputError);
}

TEST_CASE("curve spec validates degree") {
    CHECK_NOTHROW(CurveSpec<Rational>(fermat6(), "fermat"));
    HomogeneousPoly<Rational> quintic(5);
    quintic.add_term({5, 0, 0}, Rational(1));
    CHECK_THROWS_AS(CurveSpec<Rational>{quintic}, InputError);
    CHECK_THROWS_AS(CurveSpec<Rational>{HomogeneousPoly<Rational>(6)}, InputError);
    CHECK(CurveSpec<Rational>::genus() == 10);
}
