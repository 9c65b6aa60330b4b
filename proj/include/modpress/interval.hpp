#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace modpress {

// Closed interval [lo, hi] on the extended real line; the universal return
// type for certified enclosures. Transcendental steps round outward by a few
// ulps instead of toggling FPU rounding modes.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double point) : lo(point), hi(point) {}  // NOLINT: implicit on purpose
  Interval(double l, double h) : lo(l), hi(h) {}

  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool valid() const { return lo <= hi; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool is_finite() const { return std::isfinite(lo) && std::isfinite(hi); }

  static Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
  }
};

inline double step_up(double x, int ulps = 2) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, std::numeric_limits<double>::infinity());
  return x;
}

inline double step_down(double x, int ulps = 2) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  return x;
}

inline Interval outward(const Interval& a, int ulps = 2) {
  return {step_down(a.lo, ulps), step_up(a.hi, ulps)};
}

inline Interval operator+(const Interval& a, const Interval& b) {
  return {step_down(a.lo + b.lo, 1), step_up(a.hi + b.hi, 1)};
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return {step_down(a.lo - b.hi, 1), step_up(a.hi - b.lo, 1)};
}

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

// Scaling by an exact scalar.
inline Interval operator*(double t, const Interval& a) {
  if (t >= 0) return {step_down(t * a.lo, 1), step_up(t * a.hi, 1)};
  return {step_down(t * a.hi, 1), step_up(t * a.lo, 1)};
}

inline Interval iv_log(const Interval& a) {
  double lo = a.lo <= 0 ? -std::numeric_limits<double>::infinity() : step_down(std::log(a.lo));
  double hi = std::isinf(a.hi) ? a.hi : step_up(std::log(a.hi));
  return {lo, hi};
}

inline Interval iv_exp(const Interval& a) {
  double lo = std::isinf(a.lo) && a.lo < 0 ? 0.0 : std::max(0.0, step_down(std::exp(a.lo)));
  double hi = std::isinf(a.hi) ? a.hi : step_up(std::exp(a.hi));
  return {lo, hi};
}

// Reciprocal of an interval with lo > 0; [x, inf) maps to (0, 1/x].
inline Interval iv_inv_pos(const Interval& a) {
  double hi = step_up(1.0 / a.lo);
  double lo = std::isinf(a.hi) ? 0.0 : step_down(1.0 / a.hi);
  return {lo, hi};
}

// Quotient a/b for b with positive lower endpoint.
inline Interval iv_div_pos(const Interval& a, const Interval& b) {
  double lo = std::min(std::min(a.lo / b.lo, a.lo / b.hi), std::min(a.hi / b.lo, a.hi / b.hi));
  double hi = std::max(std::max(a.lo / b.lo, a.lo / b.hi), std::max(a.hi / b.lo, a.hi / b.hi));
  return {step_down(lo), step_up(hi)};
}

inline Interval iv_mul(const Interval& a, const Interval& b) {
  double v[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {step_down(*std::min_element(v, v + 4)), step_up(*std::max_element(v, v + 4))};
}

}  // namespace modpress
