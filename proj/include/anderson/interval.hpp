#pragma once

#include <stdexcept>

namespace anderson {

// Closed interval [lo, hi].
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo <= hi)) throw std::invalid_argument("Interval requires lo <= hi");
  }

  double length() const { return hi - lo; }
  double center() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool disjoint(const Interval& other) const { return hi < other.lo || other.hi < lo; }

  static Interval centered(double mid, double half_width) {
    return Interval(mid - half_width, mid + half_width);
  }
};

}  // namespace anderson
