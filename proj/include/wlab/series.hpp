#ifndef WLAB_SERIES_HPP
#define WLAB_SERIES_HPP

#include <vector>

#include "wlab/errors.hpp"
#include "wlab/field.hpp"

namespace wlab {

// Truncated power series in one local parameter: coefficients of
// x^0..x^order, always stored dense (size == order+1).
template <class K>
struct Series {
    std::vector<K> c;

    int order() const { return static_cast<int>(c.size()) - 1; }
    const K& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    K& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
};

template <class K>
Series<K> series_zero(int order, const K& proto) {
    return Series<K>{std::vector<K>(static_cast<std::size_t>(order) + 1,
                                    zero_like(proto))};
}

template <class K>
Series<K> series_const(int order, const K& value) {
    Series<K> s = series_zero(order, value);
    s[0] = value;
    return s;
}

template <class K>
Series<K> series_add(const Series<K>& a, const Series<K>& b) {
    int n = std::min(a.order(), b.order());
    Series<K> out = series_zero(n, a.c[0]);
    for (int i = 0; i <= n; ++i) out[i] = a[i] + b[i];
    return out;
}

template <class K>
Series<K> series_scale(const Series<K>& a, const K& s) {
    Series<K> out = a;
    for (auto& v : out.c) v = v * s;
    return out;
}

template <class K>
Series<K> series_mul(const Series<K>& a, const Series<K>& b) {
    int n = std::min(a.order(), b.order());
    Series<K> out = series_zero(n, a.c[0]);
    for (int i = 0; i <= n; ++i) {
        if (exact_zero(a[i])) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (exact_zero(b[j])) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
    return out;
}

template <class K>
Series<K> series_truncate(const Series<K>& a, int order) {
    if (order >= a.order()) return a;
    Series<K> out = series_zero(order, a.c[0]);
    for (int i = 0; i <= order; ++i) out[i] = a[i];
    return out;
}

// Formal derivative; the known order drops by one.
template <class K>
Series<K> series_derivative(const Series<K>& a) {
    if (a.order() < 1) throw Error("derivative of order-0 series");
    Series<K> out = series_zero(a.order() - 1, a.c[0]);
    for (int i = 1; i <= a.order(); ++i)
        out[i - 1] = a[i] * from_int(a[i], i);
    return out;
}

// Multiplicative inverse of a unit series (nonzero constant term).
template <class K>
Series<K> series_inverse(const Series<K>& a) {
    K c0_inv = inv_of(a[0]);
    Series<K> out = series_zero(a.order(), a.c[0]);
    out[0] = c0_inv;
    for (int n = 1; n <= a.order(); ++n) {
        K acc = zero_like(c0_inv);
        for (int k = 1; k <= n; ++k) acc = acc + a[k] * out[n - k];
        out[n] = -(acc * c0_inv);
    }
    return out;
}

// x^k * a, truncated at the same order.
template <class K>
Series<K> series_shift_up(const Series<K>& a, int k) {
    Series<K> out = series_zero(a.order(), a.c[0]);
    for (int i = 0; i + k <= a.order(); ++i) out[i + k] = a[i];
    return out;
}

// a / x^k; requires the first k coefficients to be structural zeros
// (caller has already decided they are negligible for floats).
template <class K>
Series<K> series_shift_down(const Series<K>& a, int k) {
    Series<K> out = series_zero(a.order() - k, a.c[0]);
    for (int i = k; i <= a.order(); ++i) out[i - k] = a[i];
    return out;
}

} // namespace wlab

#endif
