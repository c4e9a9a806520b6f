#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fpncw/errors.hpp"

namespace fpncw {

/// A possibility/membership degree in the closed unit interval.
/// Construction rejects anything outside [0,1] (including NaN), so a Degree
/// held anywhere in the library is always valid.
class Degree {
 public:
  constexpr Degree() = default;

  explicit Degree(double v) : v_(v == 0.0 ? 0.0 : v) {
    if (!(v >= 0.0 && v <= 1.0))
      throw Error("degree out of range: " + std::to_string(v));
  }

  constexpr double value() const { return v_; }

  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr auto operator<=>(Degree, Degree) = default;

 private:
  double v_ = 0.0;
};

/// Lattice meet (minimum) of two degrees.
constexpr Degree dmin(Degree a, Degree b) { return b < a ? b : a; }

/// Lattice join (maximum) of two degrees.
constexpr Degree dmax(Degree a, Degree b) { return a < b ? b : a; }

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// Ordered finite list of distinct symbol names. Order is significant:
/// fuzzy sets over a universe index their grades by it.
class Universe {
 public:
  explicit Universe(std::vector<std::string> symbols);

  static UniversePtr of(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  const std::string& symbol(std::size_t i) const;

  /// Index of a symbol; throws UnknownName if absent.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Fuzzy subset of a finite universe, stored as a total grade vector in
/// universe order. Absent entries are membership 0. Immutable once built.
class FuzzySet {
 public:
  /// The empty fuzzy set (membership identically zero).
  explicit FuzzySet(UniversePtr universe);

  FuzzySet(UniversePtr universe, std::vector<Degree> grades);

  /// Crisp singleton 1/x at the named symbol.
  static FuzzySet singleton(UniversePtr universe, std::string_view symbol);
  static FuzzySet singleton(UniversePtr universe, std::size_t index);

  /// Build from (symbol, membership) pairs; unlisted symbols get 0.
  static FuzzySet of(UniversePtr universe,
                     std::initializer_list<std::pair<std::string_view, double>> entries);

  const UniversePtr& universe() const { return universe_; }
  std::size_t size() const { return grades_.size(); }
  Degree operator[](std::size_t i) const { return grades_[i]; }
  Degree at(std::string_view symbol) const;
  const std::vector<Degree>& grades() const { return grades_; }
  bool is_empty() const;

  /// Structural equality: same universe content and bitwise-equal grades.
  friend bool operator==(const FuzzySet& a, const FuzzySet& b);

 private:
  UniversePtr universe_;
  std::vector<Degree> grades_;
};

/// Pointwise maximum. Throws UniverseMismatch unless both sets share a universe.
FuzzySet unite(const FuzzySet& a, const FuzzySet& b);

/// Pointwise minimum. Throws UniverseMismatch unless both sets share a universe.
FuzzySet intersect(const FuzzySet& a, const FuzzySet& b);

/// Scale product: (lambda . A)(x) = lambda ∧ A(x).
FuzzySet scale_product(Degree lambda, const FuzzySet& a);

/// Greatest membership value; 0 for the empty fuzzy set.
Degree height(const FuzzySet& a);

/// Symbols with positive membership, in universe order.
std::vector<std::string> support(const FuzzySet& a);

/// Pointwise containment A(x) <= B(x). Throws UniverseMismatch.
bool is_subset(const FuzzySet& a, const FuzzySet& b);

/// Mutual containment. Throws UniverseMismatch.
bool equals(const FuzzySet& a, const FuzzySet& b);

namespace detail {
/// Shared-universe check used by every binary operation: same object or
/// equal symbol lists.
void require_same_universe(const FuzzySet& a, const FuzzySet& b);
void require_same_universe(const UniversePtr& a, const UniversePtr& b);
}  // namespace detail

}  // namespace fpncw
