#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <string>

#include "clusterrad/errors.hpp"

namespace clusterrad {

/// A real number or +infinity. -infinity and NaN are unrepresentable:
/// every potential handled here is bounded below.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;

  explicit ExtendedReal(double v) : value_(v) {
    if (std::isnan(v)) throw DomainError("extended_real", "NaN is not an extended real");
    if (v == -std::numeric_limits<double>::infinity())
      throw DomainError("extended_real", "-infinity is not an extended real");
  }

  static constexpr ExtendedReal infinity() {
    ExtendedReal e;
    e.value_ = std::numeric_limits<double>::infinity();
    return e;
  }

  bool isInfinite() const { return std::isinf(value_); }
  bool isFinite() const { return !isInfinite(); }

  /// Raw value; +inf for the infinite element.
  double value() const { return value_; }

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
    if (a.isInfinite() || b.isInfinite()) return infinity();
    return ExtendedReal(a.value_ + b.value_);
  }

  /// Scaling by a positive factor (inverse temperature).
  friend ExtendedReal operator*(double scale, ExtendedReal x) {
    if (!(scale > 0.0)) throw DomainError("extended_real", "scale factor must be positive");
    if (x.isInfinite()) return infinity();
    return ExtendedReal(scale * x.value_);
  }

  friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.value_ == b.value_; }
  friend std::partial_ordering operator<=>(ExtendedReal a, ExtendedReal b) {
    return a.value_ <=> b.value_;
  }

 private:
  double value_ = 0.0;
};

/// e^{-x}; exactly 0 for x = +inf.
inline double boltzmannFactor(ExtendedReal x) {
  return x.isInfinite() ? 0.0 : std::exp(-x.value());
}

/// e^{-x} - 1; exactly -1 for x = +inf.
inline double mayerFactor(ExtendedReal x) {
  return x.isInfinite() ? -1.0 : std::expm1(-x.value());
}

}  // namespace clusterrad
