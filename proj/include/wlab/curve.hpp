#ifndef WLAB_CURVE_HPP
#define WLAB_CURVE_HPP

#include <string>
#include <utility>

#include "wlab/homopoly.hpp"

namespace wlab {

// A smooth plane sextic. Degree is enforced here; smoothness is checked
// pointwise by the local machinery (a singular point is a hard error).
template <class K>
class CurveSpec {
public:
    explicit CurveSpec(HomogeneousPoly<K> f, std::string label = "")
        : f_(std::move(f)), label_(std::move(label)) {
        if (f_.degree() != 6)
            throw InputError("curve must have degree 6, got degree " +
                             std::to_string(f_.degree()));
        if (f_.is_zero()) throw InputError("curve polynomial is zero");
    }

    const HomogeneousPoly<K>& poly() const { return f_; }
    const std::string& label() const { return label_; }
    static constexpr int genus() { return 10; } // (6-1)(6-2)/2

private:
    HomogeneousPoly<K> f_;
    std::string label_;
};

} // namespace wlab

#endif
