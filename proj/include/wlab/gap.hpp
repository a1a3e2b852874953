#ifndef WLAB_GAP_HPP
#define WLAB_GAP_HPP

#include <array>
#include <string>
#include <vector>

#include "wlab/local.hpp"
#include "wlab/matrix.hpp"

namespace wlab {

// The canonical system Q = |K| of a smooth plane sextic, cut by cubics:
// ten monomials in canonical order, projective dimension 9, degree 18.
struct CanonicalSystem {
    static constexpr int size = 10;
    static constexpr int projective_dimension = 9;
    static constexpr int degree = 18;

    static const std::array<Exponents, 10>& basis() {
        static const std::array<Exponents, 10> b = {{{3, 0, 0},
                                                     {2, 1, 0},
                                                     {2, 0, 1},
                                                     {1, 2, 0},
                                                     {1, 1, 1},
                                                     {1, 0, 2},
                                                     {0, 3, 0},
                                                     {0, 2, 1},
                                                     {0, 1, 2},
                                                     {0, 0, 3}}};
        return b;
    }

    template <class K>
    static HomogeneousPoly<K> basis_poly(int k, const K& proto) {
        return HomogeneousPoly<K>::monomial(basis()[static_cast<std::size_t>(k)],
                                            one_like(proto));
    }

    // Cubic with the given coefficient vector (canonical order).
    template <class K>
    static HomogeneousPoly<K> from_coefficients(const std::vector<K>& v) {
        HomogeneousPoly<K> out(3);
        for (int k = 0; k < size; ++k)
            out.add_term(basis()[static_cast<std::size_t>(k)],
                         v[static_cast<std::size_t>(k)]);
        return out;
    }
};

// The ten 1-gaps n_1 < ... < n_10, a subset of {1,...,19}.
struct GapSequence {
    std::array<int, 10> gaps;

    explicit GapSequence(const std::array<int, 10>& g) : gaps(g) {
        for (int i = 0; i < 10; ++i) {
            if (gaps[static_cast<std::size_t>(i)] < 1 ||
                gaps[static_cast<std::size_t>(i)] > 19)
                throw InconsistencyError("gap outside {1,...,19}");
            if (i > 0 && gaps[static_cast<std::size_t>(i)] <=
                             gaps[static_cast<std::size_t>(i - 1)])
                throw InconsistencyError("gap sequence not strictly increasing");
        }
    }

    int weight() const {
        int w = 0;
        for (int r = 1; r <= 10; ++r)
            w += gaps[static_cast<std::size_t>(r - 1)] - r;
        return w;
    }

    bool generic() const {
        for (int r = 1; r <= 10; ++r)
            if (gaps[static_cast<std::size_t>(r - 1)] != r) return false;
        return true;
    }

    std::string str() const {
        std::string s = "{";
        for (int i = 0; i < 10; ++i) {
            if (i) s += ",";
            s += std::to_string(gaps[static_cast<std::size_t>(i)]);
        }
        return s + "}";
    }

    friend bool operator==(const GapSequence& a, const GapSequence& b) {
        return a.gaps == b.gaps;
    }
};

inline int weight(const GapSequence& g) { return g.weight(); }

// Gap-based weight vs the Wronskian valuation oracle.
struct WeightReport {
    int gap_weight = 0;
    int wronskian_valuation = 0;
    bool agree = false;
};

namespace detail {

// The ten basis cubics composed with the branch, each truncated at `order`.
template <class K>
std::vector<Series<K>> basis_on_branch(const BranchSeries<K>& bs, int order) {
    std::vector<Series<K>> out;
    out.reserve(10);
    const K proto = bs.param_at_p;
    for (int k = 0; k < CanonicalSystem::size; ++k) {
        HomogeneousPoly<K> b = CanonicalSystem::basis_poly(k, proto);
        out.push_back(compose_on_branch(b, bs, order));
    }
    return out;
}

template <class K>
Matrix<K> rows_from_series(const std::vector<Series<K>>& comps, int rows,
                           const K& proto) {
    Matrix<K> m = Matrix<K>::zero(static_cast<std::size_t>(rows), 10, proto);
    for (int j = 0; j < rows; ++j)
        for (int k = 0; k < 10; ++k)
            m.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) =
                comps[static_cast<std::size_t>(k)][j];
    return m;
}

// Rank of a condition matrix. Rows carry wildly different magnitudes on
// the float backend (coefficient orders grow geometrically), so they are
// equilibrated first; scaling rows by nonzero scalars preserves rank.
template <class K>
std::size_t condition_rank(Matrix<K> m) {
    if constexpr (is_exact_v<K>) {
        return rank_exact(std::move(m));
    } else {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            BigFloat mx = m.at(i, 0).abs();
            for (std::size_t j = 1; j < m.cols(); ++j) {
                BigFloat c = m.at(i, j).abs();
                if (c > mx) mx = c;
            }
            if (mx.is_zero()) continue;
            BigComplex s(BigFloat::from_long(1, mx.prec()) / mx, BigFloat(mx.prec()));
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * s;
        }
        mpfr_prec_t prec = m.at(0, 0).prec();
        return rank_numeric(std::move(m),
                            [](const BigComplex& v) { return v.abs(); },
                            tau_rank(prec));
    }
}

} // namespace detail

// The ell x 10 matrix whose (j,k) entry is the x^j coefficient of basis
// cubic k along the branch; dim Q(-ell.p) = 10 - rank.
template <class K>
Matrix<K> condition_matrix(const CurveSpec<K>& c, const ProjectivePoint<K>& p,
                           int ell, int order = 24) {
    if (ell < 0) throw InputError("negative multiplicity bound");
    if (ell > order)
        throw InputError("condition order " + std::to_string(ell) +
                         " exceeds branch truncation " + std::to_string(order));
    BranchSeries<K> bs = branch_series(c, p, order);
    auto comps = detail::basis_on_branch(bs, std::max(0, ell - 1));
    return detail::rows_from_series(comps, ell, bs.param_at_p);
}

// Gap criterion: ell is a gap iff adding the x^(ell-1) condition row
// raises the rank. Exactly ten gaps must appear by ell = 19.
template <class K>
GapSequence gap_sequence(const CurveSpec<K>& c, const ProjectivePoint<K>& p,
                         int order = 24) {
    if (order < 19) throw InputError("gap sequence needs branch order >= 19");
    BranchSeries<K> bs = branch_series(c, p, order);
    auto comps = detail::basis_on_branch(bs, 18);
    std::array<int, 10> gaps{};
    int found = 0;
    std::size_t prev_rank = 0;
    for (int ell = 1; ell <= 19 && found < 10; ++ell) {
        Matrix<K> m = detail::rows_from_series(comps, ell, bs.param_at_p);
        std::size_t r = detail::condition_rank(std::move(m));
        if (r > prev_rank + 1 || r < prev_rank)
            throw InconsistencyError("rank staircase step outside {0,1} at order " +
                                     std::to_string(ell));
        if (r == prev_rank + 1) gaps[static_cast<std::size_t>(found++)] = ell;
        prev_rank = r;
    }
    if (found < 10)
        throw InconsistencyError(
            "fewer than 10 rank increments by order 19 at " + p.str() +
            " (numerical rank failure or non-smooth input)");
    return GapSequence(gaps);
}

namespace detail {

struct SeriesValChecked {
    int val;       // valuation if decidable
    bool beyond;   // true when everything visible vanished
};

template <class K>
SeriesValChecked checked_valuation(const Series<K>& s, int known,
                                   const BigFloat* noise_floor) {
    if constexpr (is_exact_v<K>) {
        (void)noise_floor;
        for (int i = 0; i <= known; ++i)
            if (!exact_zero(s[i])) return {i, false};
        return {known + 1, true};
    } else {
        BigFloat mx(s[0].prec());
        for (int i = 0; i <= known; ++i) {
            BigFloat a = s[i].abs();
            if (a > mx) mx = a;
        }
        BigFloat thr = mx * tau_rank(s[0].prec());
        if (noise_floor && *noise_floor > thr) thr = *noise_floor;
        for (int i = 0; i <= known; ++i)
            if (s[i].abs() > thr) return {i, false};
        return {known + 1, true};
    }
}

template <class K>
BigFloat series_max_abs(const Series<K>& s) {
    BigFloat mx(s[0].prec());
    for (int i = 0; i <= s.order(); ++i) {
        BigFloat a = s[i].abs();
        if (a > mx) mx = a;
    }
    return mx;
}

// Valuation at x=0 of det of a matrix of truncated series, computed by
// elimination with minimal-valuation complete pivoting. Every division
// is by x^v * unit with v minimal in the submatrix, so quotients stay in
// the series ring; each step spends v orders of known precision.
// Returns -1 when the available precision cannot certify the result.
template <class K>
int series_det_valuation(std::vector<std::vector<Series<K>>> m, int known) {
    const int n = static_cast<int>(m.size());
    int total = 0;
    BigFloat noise(64);
    bool have_noise = false;
    if constexpr (!is_exact_v<K>) {
        mpfr_prec_t prec = m[0][0].c[0].prec();
        BigFloat mx(prec);
        for (auto& row : m)
            for (auto& e : row) {
                BigFloat a = series_max_abs(e);
                if (a > mx) mx = a;
            }
        noise = mx * tau_rank(prec);
        have_noise = true;
    }
    for (int k = 0; k < n; ++k) {
        if (known < 0) return -1;
        int best_val = known + 1;
        int pi = -1, pj = -1;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                auto v = checked_valuation(m[static_cast<std::size_t>(i)]
                                            [static_cast<std::size_t>(j)],
                                           known, have_noise ? &noise : nullptr);
                if (!v.beyond && v.val < best_val) {
                    best_val = v.val;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) return -1; // det vanishes to available order
        total += best_val;
        std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(pi)]);
        for (int i = 0; i < n; ++i)
            std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);
        if (k == n - 1) break;

        int new_known = known - best_val;
        if (new_known < 0) return -1;
        // pivot = x^v * u with u a unit; divide the whole pivot row by x^v
        auto shift_div = [&](const Series<K>& s) {
            return series_truncate(series_shift_down(s, best_val), new_known);
        };
        std::vector<Series<K>> prow;
        prow.reserve(static_cast<std::size_t>(n - k));
        for (int j = k; j < n; ++j)
            prow.push_back(shift_div(m[static_cast<std::size_t>(k)]
                                      [static_cast<std::size_t>(j)]));
        Series<K> uinv = series_inverse(prow[0]);
        BigFloat maxf(64);
        for (int i = k + 1; i < n; ++i) {
            // factor f = e_i / pivot; val(e_i) >= v by pivot minimality
            Series<K> f = series_mul(
                shift_div(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]),
                uinv);
            if constexpr (!is_exact_v<K>) {
                BigFloat a = series_max_abs(f);
                if (a > maxf) maxf = a;
            }
            for (int j = k + 1; j < n; ++j) {
                Series<K> cur = series_truncate(
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                    new_known);
                Series<K> upd = series_mul(f, prow[static_cast<std::size_t>(j - k)]);
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    series_add(cur, series_scale(upd, -one_like(cur[0])));
            }
        }
        if constexpr (!is_exact_v<K>) {
            BigFloat one = BigFloat::from_long(1, maxf.prec());
            noise = noise * (one + maxf) + noise;
        }
        known = new_known;
    }
    return total;
}

} // namespace detail

// Independent weight oracle: valuation at x=0 of
// det[ d^j/dx^j (b_k(x, y(x))) ], j = 0..9 over the canonical basis.
// Truncation is escalated until the valuation is certified.
template <class K>
int wronskian_weight(const CurveSpec<K>& c, const ProjectivePoint<K>& p,
                     int order = 36) {
    if (order < 28) throw InputError("wronskian needs truncation order >= 28");
    for (int n = order; n <= order + 32; n += 8) {
        BranchSeries<K> bs = branch_series(c, p, n);
        auto comps = detail::basis_on_branch(bs, n);
        const int m_known = n - 9;
        std::vector<std::vector<Series<K>>> w;
        w.reserve(10);
        std::vector<Series<K>> row = comps;
        for (int j = 0; j < 10; ++j) {
            std::vector<Series<K>> trunc;
            trunc.reserve(10);
            for (const auto& s : row) trunc.push_back(series_truncate(s, m_known));
            w.push_back(std::move(trunc));
            if (j < 9)
                for (auto& s : row) s = series_derivative(s);
        }
        int v = detail::series_det_valuation(std::move(w), m_known);
        // distrust results that consumed all available orders
        if (v >= 0 && v < m_known) return v;
    }
    throw SaturationError("wronskian valuation not certified at " + p.str() +
                          "; raise the truncation order");
}

template <class K>
WeightReport weight_report(const CurveSpec<K>& c, const ProjectivePoint<K>& p) {
    GapSequence g = gap_sequence(c, p);
    int wv = wronskian_weight(c, p);
    return WeightReport{g.weight(), wv, g.weight() == wv};
}

// Lemma count formula: g(g^2-1) one-weights in total for q = 1, and
// (2q-1)^2 (g-1)^2 g for q >= 2.
inline long long weierstrass_count(long long g, long long q) {
    if (g < 2) throw InputError("genus must be >= 2");
    if (q < 1) throw InputError("q must be >= 1");
    if (q == 1) return g * (g * g - 1);
    return (2 * q - 1) * (2 * q - 1) * (g - 1) * (g - 1) * g;
}

} // namespace wlab

#endif
