#pragma once

#include <span>
#include <string>
#include <vector>

#include "fpncw/cw.hpp"

namespace fpncw {

/// One IF-THEN rule read off a transition: IF every input place holds a full
/// token AND the label matches, THEN the next-state distribution over places
/// is the transition's beta profile.
struct Rule {
  std::size_t transition;                      // source transition index
  std::vector<std::size_t> antecedent_places;  // input places, ascending
  std::string label_name;
  FuzzySet label;                              // word meaning over the symbols
  FuzzySet consequent;                         // distribution over the places
};

/// Rules sharing one antecedent place set.
struct RuleGroup {
  std::vector<std::size_t> places;  // the common input places
  std::vector<std::size_t> rules;   // indices into RuleBase::rules
};

struct RuleBase {
  UniversePtr place_universe;   // the places, as a universe for distributions
  std::vector<Rule> rules;      // one per transition, declaration order
  std::vector<RuleGroup> groups;
};

/// One rule per transition, grouped by identical antecedent place sets
/// (groups ordered by first member's declaration order).
RuleBase build_rule_base(const Fpncw& net);

/// The rules of a group whose labels overlap the given word with positive
/// height; only these can contribute to an inference conclusion.
std::vector<Rule> matching_rules(std::span<const Rule> group, const FuzzySet& word);

/// Max-min conclusion distribution for a word fact against same-group rules:
/// D(p) = max over rules of [height(label ∩ word) ∧ consequent(p)].
/// Throws on an empty rule list or rules from different groups.
FuzzySet infer(std::span<const Rule> rules, const FuzzySet& word);

/// A general Mamdani IF-THEN rule: q antecedent fuzzy sets and a consequent.
struct GmpRule {
  std::vector<FuzzySet> antecedents;
  FuzzySet consequent;
};

/// Generalized modus ponens under the max-min implication:
/// B'(y) = max_i min_j { max_x [A_ij(x) ∧ A'_j(x) ∧ B_i(y)] }.
/// Facts must match every rule's antecedents in arity and universes.
FuzzySet gmp(std::span<const GmpRule> rules, std::span<const FuzzySet> facts);

}  // namespace fpncw
