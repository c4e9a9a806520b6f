#include "fpncw/cw.hpp"

#include <unordered_set>

namespace fpncw {

Alphabet::Alphabet(UniversePtr sigma, std::vector<Word> words)
    : sigma_(std::move(sigma)), words_(std::move(words)) {
  if (!sigma_) throw Error("alphabet requires a symbol universe");
  std::unordered_set<std::string> names;
  for (const Word& w : words_) {
    if (w.name.empty()) throw Error("word name must be nonempty");
    if (!names.insert(w.name).second)
      throw Error("duplicate word name '" + w.name + "'");
    detail::require_same_universe(w.meaning.universe(), sigma_);
  }
}

std::size_t Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i].name == name) return i;
  throw UnknownName("unknown word '" + std::string(name) + "'");
}

bool Alphabet::contains(std::string_view name) const {
  for (const Word& w : words_)
    if (w.name == name) return true;
  return false;
}

const Word& Fpncw::label_of(std::size_t t) const {
  if (t >= label.size()) throw UnknownName("transition index out of range");
  return alphabet[label[t]];
}

std::vector<Violation> validate(const Fpncw& net) {
  std::vector<Violation> out = validate(net.fpn);
  if (net.final_marking.size() != net.fpn.places.size())
    out.push_back({"m1", "marking length does not match place count"});
  if (net.label.size() != net.fpn.transitions.size()) {
    out.push_back({"transitions", "labeling is not total"});
    return out;
  }
  for (std::size_t t = 0; t < net.label.size(); ++t)
    if (net.label[t] >= net.alphabet.size())
      out.push_back({net.fpn.transitions[t], "label names no alphabet word"});
  return out;
}

namespace detail {

std::vector<std::size_t> resolve_words(const Alphabet& alphabet, const WordString& s) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (const std::string& name : s) out.push_back(alphabet.index_of(name));
  return out;
}

}  // namespace detail

WordString label_of_seq(const Fpncw& net, std::span<const std::size_t> seq) {
  WordString out;
  out.reserve(seq.size());
  for (std::size_t t : seq) out.push_back(net.label_of(t).name);
  return out;
}

std::vector<Marking> label_frontier(const Fpncw& net, const WordString& s) {
  const std::vector<std::size_t> words = detail::resolve_words(net.alphabet, s);
  std::vector<Marking> frontier{net.fpn.initial};
  for (std::size_t w : words) {
    std::vector<Marking> next;
    std::unordered_set<Marking, MarkingHash> seen;
    for (const Marking& m : frontier) {
      for (std::size_t t = 0; t < net.fpn.transitions.size(); ++t) {
        if (net.label[t] != w || !is_enabled(net.fpn, m, t)) continue;
        Marking r = fire(net.fpn, m, t);
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return frontier;
}

Degree accept(const Fpncw& net, const WordString& s) {
  Degree best;
  for (const Marking& m : label_frontier(net, s))
    best = dmax(best, overlap(m, net.final_marking));
  return best;
}

namespace {

Degree oracle_walk(const Fpncw& net, const Marking& m,
                   std::span<const std::size_t> words, std::size_t pos) {
  if (pos == words.size()) return overlap(m, net.final_marking);
  Degree best;
  for (std::size_t t = 0; t < net.fpn.transitions.size(); ++t) {
    if (net.label[t] != words[pos]) continue;      // label filter
    if (!is_enabled(net.fpn, m, t)) continue;      // undefined branch
    best = dmax(best, oracle_walk(net, fire(net.fpn, m, t), words, pos + 1));
  }
  return best;
}

}  // namespace

Degree accept_oracle(const Fpncw& net, const WordString& s, std::size_t depth_bound) {
  if (s.size() > depth_bound) throw BudgetExceeded("oracle depth bound exceeded");
  const std::vector<std::size_t> words = detail::resolve_words(net.alphabet, s);
  return oracle_walk(net, net.fpn.initial, words, 0);
}

std::vector<LanguageEntry> language_table(const Fpncw& net, std::size_t max_len,
                                          bool include_zero) {
  std::vector<LanguageEntry> out;
  std::vector<WordString> level{WordString{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const WordString& s : level) {
      Degree d = accept(net, s);
      if (include_zero || d > Degree()) out.push_back({s, d});
    }
    if (len == max_len) break;
    std::vector<WordString> next;
    next.reserve(level.size() * net.alphabet.size());
    for (const WordString& s : level) {
      for (std::size_t w = 0; w < net.alphabet.size(); ++w) {
        WordString t = s;
        t.push_back(net.alphabet[w].name);
        next.push_back(std::move(t));
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace fpncw
