#include "fpncw/reasoner.hpp"

namespace fpncw {

RuleBase build_rule_base(const Fpncw& net) {
  RuleBase rb;
  rb.place_universe = Universe::of(net.fpn.places);
  for (std::size_t t = 0; t < net.fpn.transitions.size(); ++t) {
    std::vector<Degree> distribution(net.fpn.places.size());
    for (const OutputArc& arc : net.fpn.outputs[t]) distribution[arc.place] = arc.beta;
    const Word& word = net.label_of(t);
    rb.rules.push_back({t, net.fpn.inputs[t], word.name, word.meaning,
                        FuzzySet(rb.place_universe, std::move(distribution))});
  }
  for (std::size_t r = 0; r < rb.rules.size(); ++r) {
    const auto& places = rb.rules[r].antecedent_places;
    bool placed = false;
    for (RuleGroup& g : rb.groups) {
      if (g.places == places) {
        g.rules.push_back(r);
        placed = true;
        break;
      }
    }
    if (!placed) rb.groups.push_back({places, {r}});
  }
  return rb;
}

std::vector<Rule> matching_rules(std::span<const Rule> group, const FuzzySet& word) {
  std::vector<Rule> out;
  for (const Rule& r : group)
    if (height(intersect(r.label, word)) > Degree()) out.push_back(r);
  return out;
}

FuzzySet infer(std::span<const Rule> rules, const FuzzySet& word) {
  if (rules.empty()) throw Error("infer: empty rule list");
  const auto& antecedents = rules.front().antecedent_places;
  const UniversePtr& places = rules.front().consequent.universe();
  std::vector<Degree> out(places->size());
  for (const Rule& r : rules) {
    if (r.antecedent_places != antecedents)
      throw Error("infer: rules span multiple groups");
    Degree h = height(intersect(r.label, word));
    for (std::size_t p = 0; p < out.size(); ++p)
      out[p] = dmax(out[p], dmin(h, r.consequent[p]));
  }
  return FuzzySet(places, std::move(out));
}

FuzzySet gmp(std::span<const GmpRule> rules, std::span<const FuzzySet> facts) {
  if (rules.empty()) throw Error("gmp: empty rule list");
  if (facts.empty()) throw Error("gmp: no facts");
  const UniversePtr& out_universe = rules.front().consequent.universe();
  for (const GmpRule& rule : rules) {
    if (rule.antecedents.size() != facts.size())
      throw Error("gmp: antecedent arity does not match fact count");
    for (std::size_t j = 0; j < facts.size(); ++j)
      detail::require_same_universe(rule.antecedents[j], facts[j]);
    detail::require_same_universe(rule.consequent.universe(), out_universe);
  }
  std::vector<Degree> out(out_universe->size());
  for (const GmpRule& rule : rules) {
    for (std::size_t y = 0; y < out.size(); ++y) {
      Degree b = rule.consequent[y];
      Degree conjunction(1.0);
      for (std::size_t j = 0; j < facts.size(); ++j) {
        Degree sup;
        for (std::size_t x = 0; x < facts[j].size(); ++x)
          sup = dmax(sup, dmin(dmin(rule.antecedents[j][x], facts[j][x]), b));
        conjunction = dmin(conjunction, sup);
      }
      out[y] = dmax(out[y], conjunction);
    }
  }
  return FuzzySet(out_universe, std::move(out));
}

}  // namespace fpncw
