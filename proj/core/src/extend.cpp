#include "fpncw/extend.hpp"

#include <algorithm>
#include <unordered_set>

namespace fpncw {

Fpncmw extend(const Fpncw& net, std::span<const Word> new_words) {
  std::unordered_set<std::string> names;
  for (const Word& w : new_words) {
    if (net.alphabet.contains(w.name))
      throw Error("new word '" + w.name + "' collides with the existing alphabet");
    if (!names.insert(w.name).second)
      throw Error("duplicate new word '" + w.name + "'");
    detail::require_same_universe(w.meaning.universe(), net.alphabet.sigma());
  }

  const RuleBase rb = build_rule_base(net);

  Fpncmw ext{net, net.fpn.transitions.size(), net.alphabet.size(), {}};
  std::vector<Word> words = net.alphabet.words();
  words.insert(words.end(), new_words.begin(), new_words.end());
  ext.net.alphabet = Alphabet(net.alphabet.sigma(), std::move(words));

  Fpn& fpn = ext.net.fpn;
  for (std::size_t i = 0; i < rb.groups.size(); ++i) {
    const RuleGroup& group = rb.groups[i];
    for (std::size_t j = 0; j < new_words.size(); ++j) {
      std::vector<Rule> contributing;
      for (std::size_t r : group.rules)
        if (height(intersect(rb.rules[r].label, new_words[j].meaning)) > Degree())
          contributing.push_back(rb.rules[r]);
      if (contributing.empty()) continue;

      std::string name =
          "t'_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      if (std::find(fpn.transitions.begin(), fpn.transitions.end(), name) !=
          fpn.transitions.end())
        throw Error("synthesized transition name '" + name + "' already taken");

      Degree threshold;
      for (const Rule& r : contributing)
        threshold = dmax(threshold, fpn.alpha[r.transition]);

      const FuzzySet distribution = infer(contributing, new_words[j].meaning);
      std::vector<OutputArc> outputs;
      for (std::size_t p = 0; p < fpn.places.size(); ++p) {
        bool in_some_consequent = false;
        for (const Rule& r : contributing)
          if (r.consequent[p] > Degree()) in_some_consequent = true;
        if (in_some_consequent) outputs.push_back({p, distribution[p]});
      }

      fpn.transitions.push_back(std::move(name));
      fpn.alpha.push_back(threshold);
      fpn.inputs.push_back(group.places);
      fpn.outputs.push_back(std::move(outputs));
      ext.net.label.push_back(ext.base_words + j);

      std::vector<std::size_t> sources;
      for (const Rule& r : contributing) sources.push_back(r.transition);
      ext.provenance.push_back({i, j, std::move(sources)});
    }
  }
  return ext;
}

Fpncw original_net(const Fpncmw& ext) {
  Fpncw out = ext.net;
  out.fpn.transitions.resize(ext.base_transitions);
  out.fpn.alpha.resize(ext.base_transitions);
  out.fpn.inputs.resize(ext.base_transitions);
  out.fpn.outputs.resize(ext.base_transitions);
  out.label.resize(ext.base_transitions);
  std::vector<Word> words(ext.net.alphabet.words().begin(),
                          ext.net.alphabet.words().begin() + ext.base_words);
  out.alphabet = Alphabet(ext.net.alphabet.sigma(), std::move(words));
  return out;
}

bool check_theorem1(const Fpncmw& ext, const Marking& m, std::size_t t) {
  const Fpn& fpn = ext.net.fpn;
  if (t >= fpn.transitions.size()) throw UnknownName("transition index out of range");
  if (!is_enabled(fpn, m, t))
    throw DisabledTransition("firing undefined at this marking and transition");

  const Marking lhs = fire(fpn, m, t);
  const Fpncw orig = original_net(ext);
  if (t < ext.base_transitions) return lhs == fire(orig.fpn, m, t);

  const Provenance& prov = ext.provenance[t - ext.base_transitions];
  const FuzzySet& new_label = ext.net.label_of(t).meaning;

  std::vector<Degree> rhs(m.degrees());
  for (std::size_t p : fpn.inputs[t]) rhs[p] = Degree();
  for (std::size_t s : prov.contributing) {
    if (!is_enabled(orig.fpn, m, s))
      throw DisabledTransition("firing undefined at this marking and transition");
    Degree h = height(intersect(orig.label_of(s).meaning, new_label));
    Marking fs = fire(orig.fpn, m, s);
    for (std::size_t p = 0; p < rhs.size(); ++p)
      rhs[p] = dmax(rhs[p], dmin(h, fs[p]));
  }
  return lhs == Marking(std::move(rhs));
}

std::vector<Violation> validate(const Fpncmw& ext) {
  std::vector<Violation> out = validate(ext.net);
  const std::size_t total = ext.net.fpn.transitions.size();
  if (ext.base_transitions > total)
    out.push_back({"extension", "base transition count exceeds transition count"});
  if (ext.base_words > ext.net.alphabet.size())
    out.push_back({"extension", "base word count exceeds alphabet size"});
  if (ext.provenance.size() != total - std::min(ext.base_transitions, total)) {
    out.push_back({"provenance", "one entry per synthesized transition required"});
    return out;
  }
  for (std::size_t k = 0; k < ext.provenance.size(); ++k) {
    const Provenance& p = ext.provenance[k];
    const std::string& name = ext.net.fpn.transitions[ext.base_transitions + k];
    if (p.contributing.empty()) out.push_back({name, "no contributing rules"});
    for (std::size_t s : p.contributing)
      if (s >= ext.base_transitions)
        out.push_back({name, "contributing rule is not an original transition"});
  }
  return out;
}

}  // namespace fpncw
