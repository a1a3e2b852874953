#include <algorithm>
#include <vector>

#include "wlab/roots.hpp"

namespace wlab {

namespace {

// Clear denominators and content: primitive integer coefficients.
std::vector<mpz_class> primitive_int_coeffs(const UniPoly<Rational>& p) {
    mpz_class den_lcm(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.num() * (den_lcm / c.den()));
    mpz_class g(0);
    for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : out) c /= g;
    return out;
}

UniPoly<Rational> from_int_coeffs(const std::vector<mpz_class>& c) {
    std::vector<Rational> q;
    q.reserve(c.size());
    for (const auto& v : c) q.emplace_back(Rational(v));
    return UniPoly<Rational>(std::move(q));
}

// All rational roots of a square-free polynomial: isolate real roots,
// then shrink each interval until the simplest rational inside either is
// a root or provably cannot be one (denominators of rational roots
// divide the leading coefficient).
std::vector<Rational> rational_roots_squarefree(const UniPoly<Rational>& sf) {
    std::vector<mpz_class> zc = primitive_int_coeffs(sf);
    UniPoly<Rational> p = from_int_coeffs(zc);
    RealIsolation iso = isolate_real_roots(zc);
    std::vector<Rational> out;
    for (const auto& r : iso.exact_roots)
        if (p.eval(r).is_zero()) out.push_back(r);

    // width below 1/lead^2 leaves room for at most one candidate
    mpz_class lead_abs = abs(zc.back());
    Rational qmax = Rational(lead_abs);
    Rational width_target = (qmax * qmax + qmax).inv();

    for (auto [lo, hi] : iso.intervals) {
        Rational flo = p.eval(lo), fhi = p.eval(hi);
        if (flo.is_zero()) { // interval endpoints are binary rationals
            out.push_back(lo);
            continue;
        }
        if (fhi.is_zero()) {
            out.push_back(hi);
            continue;
        }
        bool found = false;
        while (!found) {
            Rational cand = simplest_rational_in(lo, hi);
            if (p.eval(cand).is_zero()) {
                out.push_back(cand);
                found = true;
                break;
            }
            if (hi - lo < width_target) break; // root is irrational
            Rational mid = (lo + hi) * Rational(1, 2);
            Rational fmid = p.eval(mid);
            if (fmid.is_zero()) {
                out.push_back(mid);
                found = true;
                break;
            }
            if (fmid.sign() == flo.sign()) {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

RationalRoots isolate_rational_roots(const UniPoly<Rational>& p) {
    if (p.is_zero()) throw InputError("isolate_roots of the zero polynomial");
    RationalRoots out;
    if (p.degree() == 0) return out;
    auto classes = squarefree_decomposition(p);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& g = classes[i];
        if (g.is_zero() || g.degree() == 0) continue;
        int mult = static_cast<int>(i) + 1;
        auto roots = rational_roots_squarefree(g);
        for (const auto& r : roots) out.roots.emplace_back(r, mult);
        int residual_degree = g.degree() - static_cast<int>(roots.size());
        if (residual_degree > 0)
            out.residual.push_back(ResidualFactor{residual_degree, mult});
    }
    return out;
}

std::vector<BigComplex> field_embeddings(const NumberFieldPtr& field,
                                         mpfr_prec_t prec) {
    UniPoly<BigComplex> m = embed_poly(field->modulus(), prec);
    auto clusters = isolate_complex_roots(m);
    std::vector<BigComplex> out;
    for (const auto& [r, mult] : clusters)
        for (int i = 0; i < mult; ++i) out.push_back(r); // square-free: mult 1
    // designated embedding first: sort by imaginary part descending, then
    // real part descending
    std::sort(out.begin(), out.end(), [](const BigComplex& a, const BigComplex& b) {
        int ci = mpfr_cmp(a.im().raw(), b.im().raw());
        if (ci != 0) return ci > 0;
        return mpfr_cmp(a.re().raw(), b.re().raw()) > 0;
    });
    return out;
}

BigComplex embed_nf(const NFElem& x, const BigComplex& theta_embed) {
    const mpfr_prec_t prec = theta_embed.prec();
    BigComplex acc(prec);
    const auto& c = x.poly().coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * theta_embed + BigComplex::from_rational(c[i], prec);
    return acc;
}

UniPoly<BigComplex> embed_poly(const UniPoly<Rational>& p, mpfr_prec_t prec) {
    std::vector<BigComplex> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(BigComplex::from_rational(v, prec));
    return UniPoly<BigComplex>(std::move(c));
}

UniPoly<BigComplex> embed_poly(const UniPoly<NFElem>& p, const BigComplex& theta_embed) {
    std::vector<BigComplex> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(embed_nf(v, theta_embed));
    return UniPoly<BigComplex>(std::move(c));
}

std::vector<UniPoly<Rational>> recognize_algebraic(const BigComplex& target,
                                                   const BigComplex& theta_embed,
                                                   int field_degree,
                                                   mpfr_prec_t prec) {
    std::vector<UniPoly<Rational>> out;
    // lattice rows: [ e_i | S*Re(b_i) | S*Im(b_i) ] for b_i = theta^i and
    // b_d = -target; a short vector encodes sum c_i theta^i - q*target ~ 0
    const long scale_bits = static_cast<long>(prec) - 48;
    BigFloat scale = BigFloat::pow2(scale_bits, prec);
    const int d = field_degree;
    std::vector<std::vector<mpz_class>> basis;
    auto to_scaled_int = [&](const BigFloat& v) {
        BigFloat s = v * scale;
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), s.raw(), MPFR_RNDN);
        return z;
    };
    BigComplex power = BigComplex::from_long(1, prec);
    for (int i = 0; i <= d; ++i) {
        std::vector<mpz_class> row(static_cast<std::size_t>(d + 3), mpz_class(0));
        row[static_cast<std::size_t>(i)] = 1;
        BigComplex b = (i < d) ? power : -target;
        row[static_cast<std::size_t>(d + 1)] = to_scaled_int(b.re());
        row[static_cast<std::size_t>(d + 2)] = to_scaled_int(b.im());
        basis.push_back(std::move(row));
        if (i < d) power = power * theta_embed;
    }
    lll_reduce(basis);

    // A degenerate embedding (deg(theta) < d) fills the reduced basis
    // with exact kernel relations, and the wanted q != 0 relation may
    // only appear as a small combination of rows. Enumerate {-1,0,1}
    // combinations and keep those whose embedding residual is tiny.
    mpz_class thresh = mpz_class(1) << static_cast<unsigned long>(
                           std::max<long>(scale_bits - 64, 8));
    mpz_class thresh2 = thresh * thresh;
    const std::size_t rows = basis.size(), cols = basis[0].size();
    std::vector<int> pick(rows, -1);
    std::vector<mpz_class> v(cols);
    while (true) {
        for (auto& x : v) x = 0;
        for (std::size_t i = 0; i < rows; ++i)
            if (pick[i] != 0)
                for (std::size_t t = 0; t < cols; ++t)
                    v[t] += pick[i] > 0 ? basis[i][t] : -basis[i][t];
        const mpz_class& q = v[static_cast<std::size_t>(d)];
        if (q != 0) {
            mpz_class r2 = v[cols - 2] * v[cols - 2] + v[cols - 1] * v[cols - 1];
            if (r2 <= thresh2) {
                std::vector<Rational> coef;
                coef.reserve(static_cast<std::size_t>(d));
                for (int i = 0; i < d; ++i)
                    coef.push_back(Rational(mpq_class(v[static_cast<std::size_t>(i)], q)));
                UniPoly<Rational> cand(std::move(coef));
                bool dup = false;
                for (const auto& seen : out)
                    if (seen == cand) dup = true;
                if (!dup) out.push_back(std::move(cand));
            }
        }
        // next {-1,0,1} tuple
        std::size_t pos = 0;
        while (pos < rows && pick[pos] == 1) pick[pos++] = -1;
        if (pos == rows) break;
        ++pick[pos];
    }
    return out;
}

namespace {

// K-rational roots of a square-free polynomial over the field: exact
// rational roots via the component trick, plus LLL-recognized algebraic
// roots verified exactly. Returns roots and how much degree was matched.
std::vector<NFElem> nf_roots_squarefree(const UniPoly<NFElem>& sf, mpfr_prec_t prec) {
    std::vector<NFElem> out;
    const NFElem proto = sf.leading();
    const NumberFieldPtr field = proto.field();
    const int d = field->degree();

    // rational roots: a rational r is a root iff every t-component of the
    // coefficient list vanishes at r; intersect via gcd of the components
    UniPoly<Rational> comp_gcd;
    for (int j = 0; j < d; ++j) {
        std::vector<Rational> cj;
        for (const auto& c : sf.coeffs()) cj.push_back(c.poly().coeff_or(j, Rational(0)));
        UniPoly<Rational> pj(std::move(cj));
        if (pj.is_zero()) continue;
        comp_gcd = comp_gcd.is_zero() ? pj.monic() : poly_gcd(comp_gcd, pj);
        if (comp_gcd.degree() == 0) break;
    }
    if (!comp_gcd.is_zero() && comp_gcd.degree() > 0) {
        for (const auto& r : rational_roots_squarefree(comp_gcd))
            out.push_back(field->from_rational(r));
    }

    // Algebraic roots: embed, solve numerically, reconstruct, verify.
    // Every embedding is swept: over a reducible modulus each ring
    // homomorphism only exposes the roots living in its component.
    for (const BigComplex& theta : field_embeddings(field, prec)) {
        UniPoly<BigComplex> pc = embed_poly(sf, theta);
        if (pc.is_zero() || pc.degree() != sf.degree()) continue;
        for (const auto& [r, mult] : isolate_complex_roots(pc)) {
            (void)mult;
            for (const auto& cand : recognize_algebraic(r, theta, d, prec)) {
                NFElem alpha(field, cand);
                if (alpha.is_rational()) continue; // already found exactly
                if (!exact_zero(sf.eval(alpha))) continue;
                bool dup = false;
                for (const auto& seen : out)
                    if (seen == alpha) dup = true;
                if (!dup) out.push_back(alpha);
            }
        }
    }
    return out;
}

} // namespace

NFRoots isolate_nf_roots(const UniPoly<NFElem>& p, mpfr_prec_t prec) {
    if (p.is_zero()) throw InputError("isolate_roots of the zero polynomial");
    NFRoots out;
    if (p.degree() == 0) return out;
    auto classes = squarefree_decomposition(p);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& g = classes[i];
        if (g.is_zero() || g.degree() == 0) continue;
        int mult = static_cast<int>(i) + 1;
        auto roots = nf_roots_squarefree(g, prec);
        for (const auto& r : roots) out.roots.emplace_back(r, mult);
        int residual_degree = g.degree() - static_cast<int>(roots.size());
        if (residual_degree > 0)
            out.residual.push_back(ResidualFactor{residual_degree, mult});
    }
    return out;
}

} // namespace wlab
