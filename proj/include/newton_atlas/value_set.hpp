#pragma once

#include <algorithm>
#include <vector>

#include "rational.hpp"

namespace newton_atlas {

// Finite set of complex values up to a clustering tolerance: no two stored
// values are within cluster_tol of each other, and values are kept sorted by
// (re, im).
class ValueSet {
 public:
  explicit ValueSet(double cluster_tol = 1e-8) : cluster_tol_(cluster_tol) {}

  ValueSet(std::vector<ComplexValue> values, double cluster_tol) : cluster_tol_(cluster_tol) {
    std::sort(values.begin(), values.end(), less);
    for (const auto& v : values) insert(v);
  }

  // Adds v unless a stored value lies within the tolerance.
  void insert(ComplexValue v) {
    if (contains(v)) return;
    v = normalize_zero(v);
    values_.insert(std::upper_bound(values_.begin(), values_.end(), v, less), v);
  }

  void merge(const ValueSet& other) {
    for (const auto& v : other.values_) insert(v);
  }

  bool contains(ComplexValue v) const { return contains(v, cluster_tol_); }

  bool contains(ComplexValue v, double tol) const {
    return std::any_of(values_.begin(), values_.end(), [&](ComplexValue w) { return std::abs(v - w) <= tol; });
  }

  ValueSet shifted(ComplexValue offset) const {
    ValueSet out(cluster_tol_);
    for (const auto& v : values_) out.insert(v + offset);
    return out;
  }

  ValueSet scaled(double factor) const {
    ValueSet out(cluster_tol_);
    for (const auto& v : values_) out.insert(v * factor);
    return out;
  }

  const std::vector<ComplexValue>& values() const { return values_; }
  double cluster_tol() const { return cluster_tol_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  // Same number of values and every value of one set near one of the other.
  bool approx_equal(const ValueSet& other, double tol) const {
    if (size() != other.size()) return false;
    for (const auto& v : values_)
      if (!other.contains(v, tol)) return false;
    for (const auto& v : other.values_)
      if (!contains(v, tol)) return false;
    return true;
  }

 private:
  static bool less(const ComplexValue& a, const ComplexValue& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  }

  std::vector<ComplexValue> values_;
  double cluster_tol_;
};

inline ValueSet set_union(const ValueSet& a, const ValueSet& b) {
  ValueSet out(a.cluster_tol());
  std::vector<ComplexValue> all(a.values());
  all.insert(all.end(), b.values().begin(), b.values().end());
  return ValueSet(std::move(all), a.cluster_tol());
}

}  // namespace newton_atlas
