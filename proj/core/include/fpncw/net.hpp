#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpncw/fuzzy.hpp"

namespace fpncw {

/// Net state: one degree per place, in place declaration order.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {}

  static Marking zero(std::size_t places) { return Marking(std::vector<Degree>(places)); }
  static Marking of(std::initializer_list<double> values);

  std::size_t size() const { return degrees_.size(); }
  Degree operator[](std::size_t i) const { return degrees_[i]; }
  const std::vector<Degree>& degrees() const { return degrees_; }

  friend bool operator==(const Marking&, const Marking&) = default;

 private:
  std::vector<Degree> degrees_;
};

/// Bitwise hash over the degree vector. Sound for deduplication because the
/// firing rule only copies existing values around (min/max value-closure).
struct MarkingHash {
  std::size_t operator()(const Marking& m) const;
};

/// Height of the pointwise minimum of two markings, height(a ∩ b).
Degree overlap(const Marking& a, const Marking& b);

/// Directed arc from a transition to a place, carrying a fuzzy truth value.
struct OutputArc {
  std::size_t place;
  Degree beta;

  friend bool operator==(const OutputArc&, const OutputArc&) = default;
};

/// Fuzzy Petri net: places, transitions with firing thresholds, directed
/// arcs, and an initial marking. Arc lists are kept per transition in
/// ascending place order; names resolve by declaration order.
struct Fpn {
  std::vector<std::string> places;
  std::vector<std::string> transitions;
  std::vector<Degree> alpha;                      // threshold per transition
  std::vector<std::vector<std::size_t>> inputs;   // input places per transition
  std::vector<std::vector<OutputArc>> outputs;    // output arcs per transition
  Marking initial;                                // M0

  std::size_t place_index(std::string_view name) const;
  std::size_t transition_index(std::string_view name) const;

  friend bool operator==(const Fpn&, const Fpn&) = default;
};

/// Fpn plus a fuzzy truth value on each place->transition arc, aligned with
/// Fpn::inputs entry for entry.
struct WeightedFpn {
  Fpn fpn;
  std::vector<std::vector<Degree>> w;

  friend bool operator==(const WeightedFpn&, const WeightedFpn&) = default;
};

/// One structural defect found by validate.
struct Violation {
  std::string where;
  std::string message;
};

/// Check the structural net constraints (thresholds and truth values in
/// (0,1], no isolated places or transitions, arc indices in range, marking
/// length). Returns every violation found rather than failing on the first.
std::vector<Violation> validate(const Fpn& net);
std::vector<Violation> validate(const WeightedFpn& net);

/// Least input-place degree of t under m; 1 when t has no input places.
Degree mu(const Fpn& net, const Marking& m, std::size_t t);

/// True iff every input place of t meets the threshold alpha(t).
bool is_enabled(const Fpn& net, const Marking& m, std::size_t t);

/// Single-transition state change. Throws DisabledTransition if t is not
/// enabled at m.
Marking fire(const Fpn& net, const Marking& m, std::size_t t);

/// Iterated firing; empty sequence returns m unchanged. Returns nullopt as
/// soon as any step is disabled (the sequence is undefined, not an error).
std::optional<Marking> fire_seq(const Fpn& net, const Marking& m,
                                std::span<const std::size_t> seq);

struct ReachOptions {
  std::size_t max_markings = 1'000'000;
};

/// All markings reachable from the initial marking, in breadth-first
/// discovery order (initial marking first, successors tried in transition
/// declaration order). Throws BudgetExceeded past max_markings.
std::vector<Marking> reachable(const Fpn& net, const ReachOptions& opt = {});

/// State change of a weighted net: the propagated strength is additionally
/// capped by the least input-arc value of t.
Marking fire_weighted(const WeightedFpn& net, const Marking& m, std::size_t t);

/// Fold the input-arc values into beta, yielding a plain Fpn with the same
/// state transition mechanism.
Fpn normalize_w(const WeightedFpn& net);

}  // namespace fpncw
