#pragma once

#include <vector>

#include "fpncw/cw.hpp"

namespace fpncw {

/// Fuzzy automaton for computing with words: finite states, a word alphabet,
/// a fuzzy transition function, an initial state, and a fuzzy set of final
/// states. delta is total: delta[q][w] is the (possibly empty) fuzzy subset
/// of states entered from q on word w.
struct Facw {
  UniversePtr states;                        // state names, as a universe
  Alphabet alphabet;
  std::vector<std::vector<FuzzySet>> delta;  // [state][word] -> fuzzy subset of states
  std::size_t initial;                       // q0
  FuzzySet finals;                           // F over the states

  std::size_t state_count() const { return states->size(); }

  friend bool operator==(const Facw&, const Facw&) = default;
};

std::vector<Violation> validate(const Facw& m);

/// Extended transition set: 1/p on the empty string, then one max-min
/// composition step per word via the scale product.
FuzzySet delta_ext(const Facw& m, std::size_t state, const WordString& s);

/// Degree to which the automaton accepts s: height(delta_ext(q0, s) ∩ F).
Degree accept_facw(const Facw& m, const WordString& s);

/// Build the language-equal net: one place per state, one transition per
/// positive (state, word, state') triple with that single input and output
/// place, a uniform threshold equal to the least positive transition degree,
/// a crisp initial token at q0, and final marking F. Throws when the
/// automaton has no positive transition degree at all.
Fpncw facw_to_fpncw(const Facw& m);

struct NetToAutomaton {
  Facw facw;
  std::vector<Marking> state_markings;  // the marking behind each state
};

/// Build the language-equal automaton: one state per reachable marking
/// (breadth-first order, named q0, q1, ...), crisp transitions wherever a
/// labeled firing leads from one reachable marking to another, and final
/// degrees height(q ∩ M1).
NetToAutomaton fpncw_to_facw(const Fpncw& net, const ReachOptions& opt = {});

}  // namespace fpncw
