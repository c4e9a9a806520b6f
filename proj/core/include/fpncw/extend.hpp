#pragma once

#include <span>
#include <vector>

#include "fpncw/reasoner.hpp"

namespace fpncw {

/// How one synthesized transition came to be: which rule group and new word
/// produced it, and which original transitions' rules contributed.
struct Provenance {
  std::size_t group;                      // rule-base group index
  std::size_t word;                       // index into the new-word list
  std::vector<std::size_t> contributing;  // original transition indices

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Extension of an Fpncw for computing with more words. The original net is
/// a full subnet: places, markings, and the leading transitions, arcs,
/// thresholds, words, and labels are preserved verbatim; synthesized
/// transitions and new words follow them.
struct Fpncmw {
  Fpncw net;
  std::size_t base_transitions;        // |T| of the original net
  std::size_t base_words;              // alphabet size of the original net
  std::vector<Provenance> provenance;  // one per transition past base_transitions

  friend bool operator==(const Fpncmw&, const Fpncmw&) = default;
};

/// Extend the net with new words. For every rule group and new word with at
/// least one positively-overlapping rule label, a transition is synthesized:
/// inputs are the group's places, the threshold is the greatest contributing
/// threshold, and the output distribution is the max-min inference conclusion
/// for the word. Words matching nothing are added to the alphabet without
/// transitions. Throws on name collisions with the existing alphabet.
Fpncmw extend(const Fpncw& net, std::span<const Word> new_words);

/// The input net recovered by dropping the synthesized transitions and words.
Fpncw original_net(const Fpncmw& ext);

/// Verify, at one marking and transition, that firing the extended net equals
/// the combination of original-net firings: for a synthesized t', the result
/// at place p is max over contributing t_s of
/// [height(label(t_s) ∩ label(t')) ∧ f(M,t_s)(p)], joined with M(p) outside
/// t''s input places; for an original t, plain equality with the original
/// firing. Throws DisabledTransition when the firing is undefined at (m, t).
bool check_theorem1(const Fpncmw& ext, const Marking& m, std::size_t t);

std::vector<Violation> validate(const Fpncmw& ext);

}  // namespace fpncw
