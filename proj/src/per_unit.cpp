#include "dualgrid/per_unit.hpp"

#include <stdexcept>

namespace dualgrid {

PerUnitBase::PerUnitBase(double s_base_w, double v_base_v)
    : s_base_(s_base_w), v_base_(v_base_v) {
    if (!(s_base_w > 0.0) || !(v_base_v > 0.0)) {
        throw std::invalid_argument("PerUnitBase: base power and voltage must be > 0");
    }
    i_base_ = s_base_ / v_base_;
    z_base_ = v_base_ * v_base_ / s_base_;
}

}  // namespace dualgrid
