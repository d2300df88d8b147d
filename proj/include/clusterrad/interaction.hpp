#pragma once

#include <cstddef>
#include <vector>

#include "clusterrad/extended_real.hpp"

namespace clusterrad {

/// Symmetric pair interaction V_ij on vertices 0..n-1 with values in R ∪ {+inf}.
/// The diagonal is never stored. A pair with V_ij = +inf is "incompatible".
class InteractionMatrix {
 public:
  InteractionMatrix() = default;
  explicit InteractionMatrix(int n);

  int size() const { return n_; }

  ExtendedReal operator()(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, ExtendedReal v) { entries_[index(i, j)] = v; }
  void set(int i, int j, double v) { set(i, j, ExtendedReal(v)); }

  bool compatible(int i, int j) const { return (*this)(i, j).isFinite(); }
  bool isBounded() const;
  bool isRepulsive() const;
  /// Largest |V_ij| over finite entries.
  double maxAbsFinite() const;

  /// Entrywise sum in extended arithmetic (sizes must agree).
  friend InteractionMatrix operator+(const InteractionMatrix& a, const InteractionMatrix& b);
  /// V^H of the regularization: +inf entries replaced by H.
  InteractionMatrix capped(double h) const;
  InteractionMatrix scaled(double c) const;

 private:
  std::size_t index(int i, int j) const;

  int n_ = 0;
  std::vector<ExtendedReal> entries_;
};

}  // namespace clusterrad
