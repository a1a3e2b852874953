#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "wlab/roots.hpp"

// Real-root isolation for square-free integer polynomials by the
// Vincent-Collins-Akritas bisection with Descartes' rule of signs.

namespace wlab {

namespace {

using ZPoly = std::vector<mpz_class>; // dense, lowest degree first

int sign_variations(const ZPoly& p) {
    int v = 0, last = 0;
    for (const auto& c : p) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// p(x) -> p(x + 1), classic O(n^2) in-place Taylor shift.
void shift_by_one(ZPoly& p) {
    const std::size_t n = p.size();
    if (n < 2) return;
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t j = n - 1; j-- > k;) p[j] += p[j + 1];
}

// p(x) -> 2^n p(x/2)
void scale_half(ZPoly& p) {
    const std::size_t n = p.size();
    for (std::size_t j = 0; j < n; ++j)
        p[j] <<= static_cast<unsigned long>(n - 1 - j);
}

// variation count of (1+x)^n p(1/(1+x)): reverse then shift by one
int variations_01(ZPoly p) {
    std::reverse(p.begin(), p.end());
    shift_by_one(p);
    return sign_variations(p);
}

struct Ctx {
    RealIsolation* out;
    bool negate; // mapping back to the negative axis
    long scale_log2;
};

Rational map_back(const Ctx& c, const mpz_class& num, unsigned long den_log2) {
    // value = num / 2^den_log2 * 2^scale_log2, negated on the (-inf,0) pass
    mpq_class v(num);
    long e = c.scale_log2 - static_cast<long>(den_log2);
    if (e >= 0) {
        mpz_class n = v.get_num() << static_cast<unsigned long>(e);
        v = mpq_class(n);
    } else {
        v /= mpq_class(mpz_class(1) << static_cast<unsigned long>(-e));
    }
    v.canonicalize();
    if (c.negate) v = -v;
    return Rational(std::move(v));
}

void emit_interval(const Ctx& c, const mpz_class& lo, const mpz_class& hi,
                   unsigned long den_log2) {
    Rational a = map_back(c, lo, den_log2);
    Rational b = map_back(c, hi, den_log2);
    if (b < a) std::swap(a, b);
    c.out->intervals.emplace_back(std::move(a), std::move(b));
}

// Roots of p in the window (base/2^depth, (base+1)/2^depth) of the unit
// interval; p is pre-transformed so the current window looks like (0,1).
void vca(ZPoly p, const mpz_class& base, unsigned long depth, const Ctx& ctx) {
    int v = variations_01(p);
    if (v == 0) return;
    if (v == 1) {
        emit_interval(ctx, base, base + 1, depth);
        return;
    }
    // left half: q(x) = 2^n p(x/2); right half: q(x + 1)
    ZPoly q = std::move(p);
    scale_half(q);
    mpz_class at_mid(0); // q(1) = 2^n p(1/2)
    for (std::size_t j = q.size(); j-- > 0;) at_mid += q[j];
    mpz_class left_base = base << 1;
    if (at_mid == 0) {
        ctx.out->exact_roots.push_back(map_back(ctx, left_base + 1, depth + 1));
        // divide the root at x=1 out so variation counts stay honest
        ZPoly r(q.size() - 1);
        mpz_class carry(0);
        for (std::size_t j = q.size(); j-- > 1;) {
            carry += q[j];
            r[j - 1] = carry;
        }
        q = std::move(r);
    }
    ZPoly right = q;
    shift_by_one(right);
    vca(std::move(q), left_base, depth + 1, ctx);
    vca(std::move(right), left_base + 1, depth + 1, ctx);
}

ZPoly strip_content(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) return p;
    mpz_class g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : p) c /= g;
    return p;
}

} // namespace

RealIsolation isolate_real_roots(const std::vector<mpz_class>& coeffs) {
    RealIsolation out;
    ZPoly p = strip_content(coeffs);
    if (p.empty()) throw Error("real root isolation of the zero polynomial");
    std::size_t val = 0;
    while (val < p.size() && p[val] == 0) ++val;
    if (val > 0) {
        out.exact_roots.push_back(Rational(0));
        p.erase(p.begin(), p.begin() + static_cast<long>(val));
    }
    if (p.size() < 2) return out;

    // Cauchy bound 2^b >= 1 + max|c_i| / |c_n|
    std::size_t lead_bits = mpz_sizeinbase(p.back().get_mpz_t(), 2);
    std::size_t max_bits = 1;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        max_bits = std::max(max_bits, mpz_sizeinbase(p[i].get_mpz_t(), 2));
    long b = static_cast<long>(max_bits) - static_cast<long>(lead_bits) + 2;
    if (b < 1) b = 1;

    for (int negate = 0; negate < 2; ++negate) {
        ZPoly q = p;
        if (negate)
            for (std::size_t j = 1; j < q.size(); j += 2) q[j] = -q[j];
        // roots of q in (0, 2^b) are the roots of q(2^b x) in (0, 1)
        for (std::size_t j = 0; j < q.size(); ++j)
            q[j] <<= static_cast<unsigned long>(b) * j;
        Ctx ctx{&out, negate == 1, b};
        vca(std::move(q), mpz_class(0), 0, ctx);
    }
    return out;
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (hi < lo) throw Error("simplest_rational_in: empty interval");
    mpq_class a = lo.raw(), b = hi.raw();
    if (sgn(a) <= 0 && sgn(b) >= 0) return Rational(0);
    bool neg = false;
    if (sgn(b) < 0) {
        std::swap(a, b);
        a = -a;
        b = -b;
        neg = true;
    }
    // 0 < a <= b; continued-fraction walk
    std::vector<mpz_class> cf;
    mpq_class num_a = a, num_b = b;
    while (true) {
        mpz_class fa;
        mpz_fdiv_q(fa.get_mpz_t(), num_a.get_num().get_mpz_t(),
                   num_a.get_den().get_mpz_t());
        mpz_class c = fa; // ceil(a)
        if (mpq_class(c) < num_a) c += 1;
        if (mpq_class(c) <= num_b) {
            cf.push_back(c);
            break;
        }
        cf.push_back(fa);
        mpq_class ra = num_b - mpq_class(fa);
        mpq_class rb = num_a - mpq_class(fa);
        num_a = 1 / ra;
        num_b = 1 / rb;
    }
    mpq_class v(cf.back());
    for (std::size_t i = cf.size(); i-- > 1;) v = mpq_class(cf[i - 1]) + 1 / v;
    v.canonicalize();
    if (neg) v = -v;
    return Rational(std::move(v));
}

} // namespace wlab
