#ifndef WLAB_POINT_HPP
#define WLAB_POINT_HPP

#include <array>
#include <string>

#include "wlab/big_complex.hpp"
#include "wlab/errors.hpp"
#include "wlab/field.hpp"

namespace wlab {

namespace detail {

template <class K>
int last_significant_coord(const std::array<K, 3>& v) {
    if constexpr (is_exact_v<K>) {
        for (int i = 2; i >= 0; --i)
            if (!exact_zero(v[static_cast<std::size_t>(i)])) return i;
        return -1;
    } else {
        BigFloat m = v[0].abs();
        for (int i = 1; i < 3; ++i) {
            BigFloat c = v[static_cast<std::size_t>(i)].abs();
            if (c > m) m = c;
        }
        if (m.is_zero()) return -1;
        BigFloat thr = m * tau_rank(v[0].prec());
        for (int i = 2; i >= 0; --i)
            if (v[static_cast<std::size_t>(i)].abs() > thr) return i;
        return -1;
    }
}

} // namespace detail

// Point of the projective plane, stored normalized: the last significant
// coordinate is scaled to exactly 1.
template <class K>
class ProjectivePoint {
public:
    ProjectivePoint(const K& x, const K& y, const K& z) : v_{x, y, z} {
        int k = detail::last_significant_coord(v_);
        if (k < 0) throw InputError("projective point with all-zero coordinates");
        K s = inv_of(v_[static_cast<std::size_t>(k)]);
        for (auto& c : v_) c = c * s;
        v_[static_cast<std::size_t>(k)] = one_like(s);
        norm_index_ = k;
    }

    const std::array<K, 3>& coords() const { return v_; }
    const K& operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    int normalized_index() const { return norm_index_; }

    std::string str() const {
        return "(" + scalar_str(v_[0]) + " : " + scalar_str(v_[1]) + " : " +
               scalar_str(v_[2]) + ")";
    }

private:
    std::array<K, 3> v_;
    int norm_index_;
};

template <class K>
    requires is_exact_v<K>
bool operator==(const ProjectivePoint<K>& p, const ProjectivePoint<K>& q) {
    for (int i = 0; i < 3; ++i)
        if (!(p[i] == q[i])) return false;
    return true;
}

// Projective closeness for the float backend: compare the two points in
// the chart of p's largest coordinate.
inline bool projectively_close(const ProjectivePoint<BigComplex>& p,
                               const ProjectivePoint<BigComplex>& q,
                               const BigFloat& radius) {
    int k = 0;
    BigFloat best = p[0].abs();
    for (int i = 1; i < 3; ++i) {
        BigFloat c = p[i].abs();
        if (c > best) {
            best = c;
            k = i;
        }
    }
    BigFloat qk = q[k].abs();
    BigFloat qmax = q[0].abs();
    for (int i = 1; i < 3; ++i) {
        BigFloat c = q[i].abs();
        if (c > qmax) qmax = c;
    }
    // q has nothing significant where p is largest: not close.
    if (!(qk > qmax * tau_rank(q[k].prec()))) return false;
    BigComplex pk_inv = p[k].inv();
    BigComplex qk_inv = q[k].inv();
    for (int i = 0; i < 3; ++i) {
        BigFloat d = (p[i] * pk_inv - q[i] * qk_inv).abs();
        if (!(d < radius)) return false;
    }
    return true;
}

} // namespace wlab

#endif
