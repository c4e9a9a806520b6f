#include "fpncw/net.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace fpncw {

namespace {

void require_transition(const Fpn& net, std::size_t t) {
  if (t >= net.transitions.size()) throw UnknownName("transition index out of range");
}

void require_marking(const Fpn& net, const Marking& m) {
  if (m.size() != net.places.size())
    throw Error("marking length does not match place count");
}

}  // namespace

Marking Marking::of(std::initializer_list<double> values) {
  std::vector<Degree> degrees;
  degrees.reserve(values.size());
  for (double v : values) degrees.push_back(Degree(v));
  return Marking(std::move(degrees));
}

std::size_t MarkingHash::operator()(const Marking& m) const {
  // FNV-1a over the raw bits; Degree normalizes -0.0 at construction.
  std::uint64_t h = 1469598103934665603ull;
  for (Degree d : m.degrees()) {
    h ^= std::bit_cast<std::uint64_t>(d.value());
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Degree overlap(const Marking& a, const Marking& b) {
  if (a.size() != b.size()) throw Error("marking length mismatch");
  Degree h;
  for (std::size_t i = 0; i < a.size(); ++i) h = dmax(h, dmin(a[i], b[i]));
  return h;
}

std::size_t Fpn::place_index(std::string_view name) const {
  for (std::size_t i = 0; i < places.size(); ++i)
    if (places[i] == name) return i;
  throw UnknownName("unknown place '" + std::string(name) + "'");
}

std::size_t Fpn::transition_index(std::string_view name) const {
  for (std::size_t i = 0; i < transitions.size(); ++i)
    if (transitions[i] == name) return i;
  throw UnknownName("unknown transition '" + std::string(name) + "'");
}

std::vector<Violation> validate(const Fpn& net) {
  std::vector<Violation> out;
  auto flag = [&out](std::string where, std::string message) {
    out.push_back({std::move(where), std::move(message)});
  };

  if (net.places.empty()) flag("places", "no places declared");
  if (net.transitions.empty()) flag("transitions", "no transitions declared");
  for (std::size_t i = 0; i < net.places.size(); ++i)
    for (std::size_t j = i + 1; j < net.places.size(); ++j)
      if (net.places[i] == net.places[j])
        flag(net.places[i], "duplicate place name");
  for (std::size_t i = 0; i < net.transitions.size(); ++i)
    for (std::size_t j = i + 1; j < net.transitions.size(); ++j)
      if (net.transitions[i] == net.transitions[j])
        flag(net.transitions[i], "duplicate transition name");

  const std::size_t n = net.places.size();
  const std::size_t m = net.transitions.size();
  if (net.alpha.size() != m) flag("alpha", "threshold list length does not match transitions");
  if (net.inputs.size() != m) flag("arcs-in", "input arc table length does not match transitions");
  if (net.outputs.size() != m) flag("arcs-out", "output arc table length does not match transitions");
  if (net.initial.size() != n) flag("m0", "marking length does not match place count");
  if (net.alpha.size() != m || net.inputs.size() != m || net.outputs.size() != m)
    return out;  // per-transition checks would index out of bounds

  std::vector<bool> place_touched(n, false);
  for (std::size_t t = 0; t < m; ++t) {
    const std::string& name = net.transitions[t];
    if (net.alpha[t] == Degree()) flag(name, "alpha out of (0,1]");
    std::unordered_set<std::size_t> seen_in;
    for (std::size_t p : net.inputs[t]) {
      if (p >= n) {
        flag(name, "input arc references unknown place");
        continue;
      }
      if (!seen_in.insert(p).second) flag(name, "duplicate input arc");
      place_touched[p] = true;
    }
    std::unordered_set<std::size_t> seen_out;
    for (const OutputArc& arc : net.outputs[t]) {
      if (arc.place >= n) {
        flag(name, "output arc references unknown place");
        continue;
      }
      if (!seen_out.insert(arc.place).second) flag(name, "duplicate output arc");
      if (arc.beta == Degree()) flag(name, "beta out of (0,1]");
      place_touched[arc.place] = true;
    }
    if (net.inputs[t].empty() && net.outputs[t].empty())
      flag(name, "isolated transition");
  }
  for (std::size_t p = 0; p < n; ++p)
    if (!place_touched[p]) flag(net.places[p], "isolated place");
  return out;
}

std::vector<Violation> validate(const WeightedFpn& net) {
  std::vector<Violation> out = validate(net.fpn);
  if (net.w.size() != net.fpn.transitions.size()) {
    out.push_back({"w", "input arc value table length does not match transitions"});
    return out;
  }
  for (std::size_t t = 0; t < net.w.size(); ++t) {
    if (t < net.fpn.inputs.size() && net.w[t].size() != net.fpn.inputs[t].size()) {
      out.push_back({net.fpn.transitions[t], "input arc values not aligned with input arcs"});
      continue;
    }
    for (Degree d : net.w[t])
      if (d == Degree()) out.push_back({net.fpn.transitions[t], "w out of (0,1]"});
  }
  return out;
}

Degree mu(const Fpn& net, const Marking& m, std::size_t t) {
  require_transition(net, t);
  require_marking(net, m);
  Degree v(1.0);  // infimum over an empty input set
  for (std::size_t p : net.inputs[t]) v = dmin(v, m[p]);
  return v;
}

bool is_enabled(const Fpn& net, const Marking& m, std::size_t t) {
  require_transition(net, t);
  require_marking(net, m);
  for (std::size_t p : net.inputs[t])
    if (m[p] < net.alpha[t]) return false;
  return true;
}

namespace {

// Common body of fire and fire_weighted: strength is the value propagated to
// output places before the per-arc beta cap.
Marking fire_with_strength(const Fpn& net, const Marking& m, std::size_t t,
                           Degree strength) {
  std::vector<Degree> next(m.degrees());
  std::vector<bool> is_input(net.places.size(), false);
  for (std::size_t p : net.inputs[t]) {
    is_input[p] = true;
    next[p] = Degree();  // token removed; outputs below restore the loop case
  }
  for (const OutputArc& arc : net.outputs[t]) {
    Degree v = dmin(strength, arc.beta);
    next[arc.place] = is_input[arc.place] ? v : dmax(m[arc.place], v);
  }
  return Marking(std::move(next));
}

}  // namespace

Marking fire(const Fpn& net, const Marking& m, std::size_t t) {
  require_transition(net, t);
  require_marking(net, m);
  if (!is_enabled(net, m, t))
    throw DisabledTransition("transition '" + net.transitions[t] + "' is not enabled");
  return fire_with_strength(net, m, t, mu(net, m, t));
}

std::optional<Marking> fire_seq(const Fpn& net, const Marking& m,
                                std::span<const std::size_t> seq) {
  Marking cur = m;
  for (std::size_t t : seq) {
    require_transition(net, t);
    if (!is_enabled(net, cur, t)) return std::nullopt;
    cur = fire(net, cur, t);
  }
  return cur;
}

std::vector<Marking> reachable(const Fpn& net, const ReachOptions& opt) {
  require_marking(net, net.initial);
  std::vector<Marking> order{net.initial};
  std::unordered_set<Marking, MarkingHash> seen{net.initial};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Marking cur = order[head];  // copy: order grows while we iterate
    for (std::size_t t = 0; t < net.transitions.size(); ++t) {
      if (!is_enabled(net, cur, t)) continue;
      Marking next = fire(net, cur, t);
      if (seen.insert(next).second) {
        if (order.size() >= opt.max_markings)
          throw BudgetExceeded("reachability budget exceeded");
        order.push_back(std::move(next));
      }
    }
  }
  return order;
}

Marking fire_weighted(const WeightedFpn& net, const Marking& m, std::size_t t) {
  require_transition(net.fpn, t);
  require_marking(net.fpn, m);
  if (net.w.size() != net.fpn.transitions.size() ||
      net.w[t].size() != net.fpn.inputs[t].size())
    throw Error("input arc values not aligned with input arcs");
  if (!is_enabled(net.fpn, m, t))
    throw DisabledTransition("transition '" + net.fpn.transitions[t] + "' is not enabled");
  Degree strength = mu(net.fpn, m, t);
  for (Degree d : net.w[t]) strength = dmin(strength, d);
  return fire_with_strength(net.fpn, m, t, strength);
}

Fpn normalize_w(const WeightedFpn& net) {
  if (net.w.size() != net.fpn.transitions.size())
    throw Error("input arc value table length does not match transitions");
  Fpn out = net.fpn;
  for (std::size_t t = 0; t < out.transitions.size(); ++t) {
    if (net.w[t].size() != out.inputs[t].size())
      throw Error("input arc values not aligned with input arcs");
    Degree cap(1.0);
    for (Degree d : net.w[t]) cap = dmin(cap, d);
    for (OutputArc& arc : out.outputs[t]) arc.beta = dmin(cap, arc.beta);
  }
  return out;
}

}  // namespace fpncw
