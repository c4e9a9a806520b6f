#include "fpncw/automaton.hpp"

#include <unordered_map>

namespace fpncw {

std::vector<Violation> validate(const Facw& m) {
  std::vector<Violation> out;
  const std::size_t n = m.state_count();
  if (m.initial >= n) out.push_back({"initial", "initial state out of range"});
  if (!(m.finals.universe() == m.states || *m.finals.universe() == *m.states))
    out.push_back({"final", "final set is not over the states"});
  if (m.delta.size() != n) {
    out.push_back({"delta", "transition table length does not match states"});
    return out;
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (m.delta[q].size() != m.alphabet.size()) {
      out.push_back({m.states->symbol(q), "transition row length does not match alphabet"});
      continue;
    }
    for (const FuzzySet& image : m.delta[q])
      if (!(image.universe() == m.states || *image.universe() == *m.states))
        out.push_back({m.states->symbol(q), "transition image is not over the states"});
  }
  return out;
}

FuzzySet delta_ext(const Facw& m, std::size_t state, const WordString& s) {
  if (state >= m.state_count()) throw UnknownName("state index out of range");
  const std::vector<std::size_t> words = detail::resolve_words(m.alphabet, s);
  FuzzySet cur = FuzzySet::singleton(m.states, state);
  for (std::size_t w : words) {
    FuzzySet next(m.states);
    for (std::size_t q = 0; q < m.state_count(); ++q) {
      if (cur[q] == Degree()) continue;
      next = unite(next, scale_product(cur[q], m.delta[q][w]));
    }
    cur = std::move(next);
  }
  return cur;
}

Degree accept_facw(const Facw& m, const WordString& s) {
  return height(intersect(delta_ext(m, m.initial, s), m.finals));
}

Fpncw facw_to_fpncw(const Facw& m) {
  Degree threshold;
  bool any = false;
  for (std::size_t q = 0; q < m.state_count(); ++q) {
    for (std::size_t w = 0; w < m.alphabet.size(); ++w) {
      for (std::size_t r = 0; r < m.state_count(); ++r) {
        Degree d = m.delta[q][w][r];
        if (d == Degree()) continue;
        threshold = any ? dmin(threshold, d) : d;
        any = true;
      }
    }
  }
  if (!any) throw Error("automaton has no positive transition degree");

  Fpn fpn;
  fpn.places = m.states->symbols();
  std::vector<Degree> m0(fpn.places.size());
  m0[m.initial] = Degree(1.0);
  fpn.initial = Marking(std::move(m0));

  std::vector<std::size_t> labels;
  for (std::size_t q = 0; q < m.state_count(); ++q) {
    for (std::size_t w = 0; w < m.alphabet.size(); ++w) {
      for (std::size_t r = 0; r < m.state_count(); ++r) {
        Degree d = m.delta[q][w][r];
        if (d == Degree()) continue;
        fpn.transitions.push_back("t_(" + m.states->symbol(q) + "," +
                                  m.alphabet[w].name + "," + m.states->symbol(r) + ")");
        fpn.alpha.push_back(threshold);
        fpn.inputs.push_back({q});
        fpn.outputs.push_back({{r, d}});
        labels.push_back(w);
      }
    }
  }
  return Fpncw{std::move(fpn), Marking(m.finals.grades()), m.alphabet,
               std::move(labels)};
}

NetToAutomaton fpncw_to_facw(const Fpncw& net, const ReachOptions& opt) {
  std::vector<Marking> states = reachable(net.fpn, opt);
  std::unordered_map<Marking, std::size_t, MarkingHash> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states.size(); ++i) {
    index.emplace(states[i], i);
    names.push_back("q" + std::to_string(i));
  }
  UniversePtr q = Universe::of(std::move(names));

  std::vector<Degree> finals(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    finals[i] = overlap(states[i], net.final_marking);

  std::vector<std::vector<FuzzySet>> delta(
      states.size(), std::vector<FuzzySet>(net.alphabet.size(), FuzzySet(q)));
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t t = 0; t < net.fpn.transitions.size(); ++t) {
      if (!is_enabled(net.fpn, states[i], t)) continue;
      std::size_t target = index.at(fire(net.fpn, states[i], t));
      std::vector<Degree> grades = delta[i][net.label[t]].grades();
      grades[target] = Degree(1.0);
      delta[i][net.label[t]] = FuzzySet(q, std::move(grades));
    }
  }

  Facw facw{q, net.alphabet, std::move(delta), 0, FuzzySet(q, std::move(finals))};
  return NetToAutomaton{std::move(facw), std::move(states)};
}

}  // namespace fpncw
