#pragma once

#include "multconv/error.hpp"
#include "multconv/surd.hpp"

#include <map>

namespace multconv {

/* Finitely atomic signed measure: location -> nonzero Surd weight. Adding a
 * weight merges with an existing atom and erases it on exact cancellation, so
 * structural equality of the maps is equality of measures. */
template <class Key, class Less, class DimOf>
class AtomicMeasure {
 public:
  using Atoms = std::map<Key, Surd, Less>;

  AtomicMeasure() = default;
  explicit AtomicMeasure(int dim) : dim_(dim) {}

  int dim() const noexcept { return dim_; }
  const Atoms& atoms() const noexcept { return atoms_; }
  bool is_zero() const noexcept { return atoms_.empty(); }
  std::size_t size() const noexcept { return atoms_.size(); }

  void add(const Key& at, const Surd& w) {
    require_same_dim(DimOf{}(at), dim_, "add atom");
    if (w.is_zero()) return;
    auto [it, inserted] = atoms_.try_emplace(at, w);
    if (!inserted) {
      it->second += w;
      if (it->second.is_zero()) atoms_.erase(it);
    }
  }

  Surd weight(const Key& at) const {
    auto it = atoms_.find(at);
    return it == atoms_.end() ? Surd() : it->second;
  }

  Surd total_mass() const {
    Surd s;
    for (const auto& [k, w] : atoms_) s += w;
    return s;
  }

  AtomicMeasure operator-() const {
    AtomicMeasure out = *this;
    for (auto& [k, w] : out.atoms_) w = -w;
    return out;
  }

  AtomicMeasure& operator+=(const AtomicMeasure& b) {
    require_same_dim(dim_, b.dim_, "measure sum");
    for (const auto& [k, w] : b.atoms_) add(k, w);
    return *this;
  }

  AtomicMeasure& operator-=(const AtomicMeasure& b) {
    require_same_dim(dim_, b.dim_, "measure difference");
    for (const auto& [k, w] : b.atoms_) add(k, -w);
    return *this;
  }

  AtomicMeasure& operator*=(const Surd& c) {
    if (c.is_zero()) {
      atoms_.clear();
      return *this;
    }
    for (auto& [k, w] : atoms_) w *= c;
    return *this;
  }

  friend AtomicMeasure operator+(AtomicMeasure a, const AtomicMeasure& b) { return a += b; }
  friend AtomicMeasure operator-(AtomicMeasure a, const AtomicMeasure& b) { return a -= b; }
  friend AtomicMeasure operator*(const Surd& c, AtomicMeasure a) { return a *= c; }
  friend AtomicMeasure operator*(AtomicMeasure a, const Surd& c) { return a *= c; }

  friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) {
    return a.dim_ == b.dim_ && a.atoms_ == b.atoms_;
  }

  /// Applies f to every location and merges the results (pushforward).
  template <class F>
  AtomicMeasure pushforward(F f) const {
    AtomicMeasure out(dim_);
    for (const auto& [k, w] : atoms_) out.add(f(k), w);
    return out;
  }

  template <class Pred>
  AtomicMeasure filter(Pred keep) const {
    AtomicMeasure out(dim_);
    for (const auto& [k, w] : atoms_) {
      if (keep(k)) out.atoms_.emplace_hint(out.atoms_.end(), k, w);
    }
    return out;
  }

 private:
  int dim_ = 0;
  Atoms atoms_;
};

}  // namespace multconv
