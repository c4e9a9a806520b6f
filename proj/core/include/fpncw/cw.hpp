#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpncw/net.hpp"

namespace fpncw {

/// A word: a named fuzzy subset of the symbol alphabet.
struct Word {
  std::string name;
  FuzzySet meaning;

  friend bool operator==(const Word&, const Word&) = default;
};

/// Ordered list of words with distinct names, all over one symbol universe.
/// Names are the identity of a word; two entries with equal meanings but
/// different names are distinct labels.
class Alphabet {
 public:
  Alphabet(UniversePtr sigma, std::vector<Word> words);

  const UniversePtr& sigma() const { return sigma_; }
  std::size_t size() const { return words_.size(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  const std::vector<Word>& words() const { return words_; }

  std::size_t index_of(std::string_view name) const;  // throws UnknownName
  bool contains(std::string_view name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return (a.sigma_ == b.sigma_ || *a.sigma_ == *b.sigma_) && a.words_ == b.words_;
  }

 private:
  UniversePtr sigma_;
  std::vector<Word> words_;
};

/// A string of word names, possibly empty.
using WordString = std::vector<std::string>;

/// Fuzzy Petri net for computing with words: an Fpn with a final marking,
/// a word alphabet, and a total transition labeling.
struct Fpncw {
  Fpn fpn;
  Marking final_marking;            // M1
  Alphabet alphabet;
  std::vector<std::size_t> label;   // per transition: index into the alphabet

  const Word& label_of(std::size_t t) const;

  friend bool operator==(const Fpncw&, const Fpncw&) = default;
};

std::vector<Violation> validate(const Fpncw& net);

/// Word names of a transition sequence, position by position.
WordString label_of_seq(const Fpncw& net, std::span<const std::size_t> seq);

/// Deduplicated markings reachable from M0 through transition sequences
/// labeled exactly s, computed level by level. Empty when no such sequence
/// is fireable.
std::vector<Marking> label_frontier(const Fpncw& net, const WordString& s);

/// Degree to which the net accepts s: the greatest overlap of a frontier
/// marking with the final marking. Sequences whose firing is undefined
/// contribute nothing.
Degree accept(const Fpncw& net, const WordString& s);

/// Brute-force route to the same degree: walk every transition sequence of
/// length |s|, filtering by label and definedness. Kept free of the frontier
/// machinery so the two can cross-check each other. Throws BudgetExceeded
/// when |s| exceeds depth_bound.
Degree accept_oracle(const Fpncw& net, const WordString& s, std::size_t depth_bound = 6);

struct LanguageEntry {
  WordString string;
  Degree degree;
};

/// Acceptance degrees of every word string up to max_len, in length-then-
/// lexicographic order (alphabet declaration order). Zero-degree strings are
/// dropped unless include_zero is set.
std::vector<LanguageEntry> language_table(const Fpncw& net, std::size_t max_len,
                                          bool include_zero = false);

namespace detail {
/// Resolve word names to alphabet indices; throws UnknownName.
std::vector<std::size_t> resolve_words(const Alphabet& alphabet, const WordString& s);
}  // namespace detail

}  // namespace fpncw
