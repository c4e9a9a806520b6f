#include "fpncw/model_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace fpncw {

namespace {

struct RawLine {
  int no;
  std::string text;
};

struct Section {
  std::string name;
  int line;
  std::vector<RawLine> lines;
};

struct DocText {
  std::vector<std::string> notes;
  std::string kind;
  int kind_line = 0;
  int version = 0;
  std::vector<Section> sections;
};

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool valid_name(const std::string& name) {
  return !name.empty() && name != "->" &&
         name.find_first_of("#:/[],= \t") == std::string::npos;
}

void check_name(const std::string& name, int line) {
  if (!valid_name(name)) throw ParseError(line, "invalid name '" + name + "'");
}

double parse_double(const std::string& tok, int line) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected a number, got '" + tok + "'");
  return v;
}

Degree parse_unit_degree(const std::string& tok, int line) {
  double v = parse_double(tok, line);
  if (!(v >= 0.0 && v <= 1.0))
    throw ParseError(line, "degree out of range: '" + tok + "'");
  return Degree(v);
}

Degree parse_positive_degree(const std::string& tok, int line) {
  Degree d = parse_unit_degree(tok, line);
  if (d == Degree()) throw ParseError(line, "degree out of range: '" + tok + "' (must be in (0,1])");
  return d;
}

int parse_int(const std::string& tok, int line) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

// "key=value" -> value, enforcing the key.
std::string expect_kv(const std::string& tok, std::string_view key, int line) {
  std::size_t eq = tok.find('=');
  if (eq == std::string::npos || tok.substr(0, eq) != key)
    throw ParseError(line, "expected '" + std::string(key) + "=...', got '" + tok + "'");
  return tok.substr(eq + 1);
}

DocText lex(std::string_view text) {
  DocText doc;
  std::vector<RawLine> lines;
  {
    int no = 0;
    std::size_t pos = 0;
    bool in_header = true;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      std::string_view raw =
          text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
      ++no;
      std::string t = trim(raw);
      if (in_header) {
        if (t.empty()) {
          // skip
        } else if (t[0] == '#') {
          std::string note = t.substr(1);
          if (!note.empty() && note[0] == ' ') note = note.substr(1);
          doc.notes.push_back(note);
        } else {
          in_header = false;
        }
      }
      if (!in_header) {
        std::size_t hash = t.find('#');
        if (hash != std::string::npos) t = trim(t.substr(0, hash));
        if (!t.empty()) lines.push_back({no, t});
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }
  if (lines.empty()) throw ParseError(1, "empty document");

  std::size_t i = 0;
  {
    auto toks = split_tokens(lines[i].text);
    if (toks.size() != 2 || toks[0] != "kind")
      throw ParseError(lines[i].no, "expected 'kind <name>'");
    doc.kind = toks[1];
    doc.kind_line = lines[i].no;
    ++i;
  }
  if (i >= lines.size()) throw ParseError(lines.back().no, "expected 'version <n>'");
  {
    auto toks = split_tokens(lines[i].text);
    if (toks.size() != 2 || toks[0] != "version")
      throw ParseError(lines[i].no, "expected 'version <n>'");
    doc.version = parse_int(toks[1], lines[i].no);
    ++i;
  }
  for (; i < lines.size(); ++i) {
    const RawLine& line = lines[i];
    if (line.text.front() == '[') {
      if (line.text.back() != ']')
        throw ParseError(line.no, "malformed section header");
      std::string name = trim(line.text.substr(1, line.text.size() - 2));
      if (name.empty()) throw ParseError(line.no, "empty section name");
      doc.sections.push_back({name, line.no, {}});
    } else {
      if (doc.sections.empty())
        throw ParseError(line.no, "content before the first section");
      doc.sections.back().lines.push_back(line);
    }
  }
  return doc;
}

// Checks that exactly the expected sections are present, each once.
std::unordered_map<std::string, const Section*> index_sections(
    const DocText& doc, const std::vector<std::string>& expected) {
  std::unordered_map<std::string, const Section*> out;
  for (const Section& s : doc.sections) {
    if (std::find(expected.begin(), expected.end(), s.name) == expected.end())
      throw ParseError(s.line, "unexpected section [" + s.name + "]");
    if (!out.emplace(s.name, &s).second)
      throw ParseError(s.line, "duplicate section [" + s.name + "]");
  }
  for (const std::string& name : expected)
    if (!out.count(name))
      throw ParseError(doc.kind_line, "missing section [" + name + "]");
  return out;
}

std::vector<std::string> read_names(const Section& s) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const RawLine& line : s.lines) {
    for (std::string& tok : split_tokens(line.text)) {
      check_name(tok, line.no);
      if (!seen.insert(tok).second)
        throw ParseError(line.no, "duplicate name '" + tok + "'");
      out.push_back(std::move(tok));
    }
  }
  if (out.empty()) throw ParseError(s.line, "section [" + s.name + "] is empty");
  return out;
}

Marking read_marking(const Section& s, std::size_t places) {
  std::vector<Degree> degrees;
  for (const RawLine& line : s.lines)
    for (const std::string& tok : split_tokens(line.text))
      degrees.push_back(parse_unit_degree(tok, line.no));
  if (degrees.size() != places)
    throw ParseError(s.line, "section [" + s.name + "] must list " +
                                 std::to_string(places) + " degrees");
  return Marking(std::move(degrees));
}

// "value/symbol" entries of one fuzzy set over the given universe.
FuzzySet read_fuzzy_entries(const std::vector<std::string>& toks, std::size_t first,
                            const UniversePtr& universe, int line) {
  std::vector<Degree> grades(universe->size());
  std::vector<bool> set(universe->size(), false);
  for (std::size_t i = first; i < toks.size(); ++i) {
    std::size_t slash = toks[i].find('/');
    if (slash == std::string::npos)
      throw ParseError(line, "expected 'value/symbol', got '" + toks[i] + "'");
    Degree value = parse_unit_degree(toks[i].substr(0, slash), line);
    std::string symbol = toks[i].substr(slash + 1);
    if (!universe->contains(symbol))
      throw ParseError(line, "unknown symbol '" + symbol + "'");
    std::size_t idx = universe->index_of(symbol);
    if (set[idx]) throw ParseError(line, "duplicate entry for '" + symbol + "'");
    set[idx] = true;
    grades[idx] = value;
  }
  return FuzzySet(universe, std::move(grades));
}

Alphabet read_alphabet(const Section& s, const UniversePtr& sigma) {
  std::vector<Word> words;
  std::unordered_set<std::string> seen;
  for (const RawLine& line : s.lines) {
    auto toks = split_tokens(line.text);
    if (toks.empty() || toks[0].back() != ':')
      throw ParseError(line.no, "expected '<word>: value/symbol ...'");
    std::string name = toks[0].substr(0, toks[0].size() - 1);
    check_name(name, line.no);
    if (!seen.insert(name).second)
      throw ParseError(line.no, "duplicate word '" + name + "'");
    words.push_back({std::move(name), read_fuzzy_entries(toks, 1, sigma, line.no)});
  }
  if (words.empty()) throw ParseError(s.line, "section [alphabet] is empty");
  return Alphabet(sigma, std::move(words));
}

struct TransitionRow {
  std::string name;
  Degree alpha;
  std::string label;  // empty when the kind is unlabeled
};

std::vector<TransitionRow> read_transitions(const Section& s, bool labeled) {
  std::vector<TransitionRow> out;
  std::unordered_set<std::string> seen;
  for (const RawLine& line : s.lines) {
    auto toks = split_tokens(line.text);
    std::size_t expected = labeled ? 3 : 2;
    if (toks.size() != expected)
      throw ParseError(line.no, labeled
                                    ? "expected '<name> alpha=<degree> label=<word>'"
                                    : "expected '<name> alpha=<degree>'");
    TransitionRow row;
    row.name = toks[0];
    check_name(row.name, line.no);
    if (!seen.insert(row.name).second)
      throw ParseError(line.no, "duplicate transition '" + row.name + "'");
    row.alpha = parse_positive_degree(expect_kv(toks[1], "alpha", line.no), line.no);
    if (labeled) {
      row.label = expect_kv(toks[2], "label", line.no);
      check_name(row.label, line.no);
    }
    out.push_back(std::move(row));
  }
  if (out.empty()) throw ParseError(s.line, "section [transitions] is empty");
  return out;
}

std::size_t index_of_name(const std::vector<std::string>& names,
                          const std::string& name, const char* what, int line) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw ParseError(line, std::string("unknown ") + what + " '" + name + "'");
}

void read_arcs_in(const Section& s, Fpn& net) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const RawLine& line : s.lines) {
    auto toks = split_tokens(line.text);
    if (toks.size() != 3 || toks[1] != "->")
      throw ParseError(line.no, "expected '<place> -> <transition>'");
    std::size_t p = index_of_name(net.places, toks[0], "place", line.no);
    std::size_t t = index_of_name(net.transitions, toks[2], "transition", line.no);
    if (!seen.insert({p, t}).second) throw ParseError(line.no, "duplicate arc");
    net.inputs[t].push_back(p);
  }
  for (auto& in : net.inputs) std::sort(in.begin(), in.end());
}

// Returns the line number each (transition, place) arc came from so [w] can
// report against the right location.
void read_arcs_out(const Section& s, Fpn& net) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const RawLine& line : s.lines) {
    auto toks = split_tokens(line.text);
    if (toks.size() != 4 || toks[1] != "->")
      throw ParseError(line.no, "expected '<transition> -> <place> beta=<degree>'");
    std::size_t t = index_of_name(net.transitions, toks[0], "transition", line.no);
    std::size_t p = index_of_name(net.places, toks[2], "place", line.no);
    Degree beta = parse_positive_degree(expect_kv(toks[3], "beta", line.no), line.no);
    if (!seen.insert({t, p}).second) throw ParseError(line.no, "duplicate arc");
    net.outputs[t].push_back({p, beta});
  }
  for (auto& out : net.outputs)
    std::sort(out.begin(), out.end(),
              [](const OutputArc& a, const OutputArc& b) { return a.place < b.place; });
}

std::vector<std::vector<Degree>> read_w(const Section& s, const Fpn& net) {
  std::map<std::pair<std::size_t, std::size_t>, Degree> values;
  for (const RawLine& line : s.lines) {
    auto toks = split_tokens(line.text);
    if (toks.size() != 4 || toks[1] != "->")
      throw ParseError(line.no, "expected '<place> -> <transition> w=<degree>'");
    std::size_t p = index_of_name(net.places, toks[0], "place", line.no);
    std::size_t t = index_of_name(net.transitions, toks[2], "transition", line.no);
    bool is_input = std::find(net.inputs[t].begin(), net.inputs[t].end(), p) !=
                    net.inputs[t].end();
    if (!is_input)
      throw ParseError(line.no, "w given for a pair that is not an input arc");
    Degree w = parse_positive_degree(expect_kv(toks[3], "w", line.no), line.no);
    if (!values.emplace(std::make_pair(p, t), w).second)
      throw ParseError(line.no, "duplicate arc");
  }
  std::vector<std::vector<Degree>> out(net.transitions.size());
  for (std::size_t t = 0; t < net.transitions.size(); ++t) {
    for (std::size_t p : net.inputs[t]) {
      auto it = values.find({p, t});
      if (it == values.end())
        throw ParseError(s.line, "missing w for arc " + net.places[p] + " -> " +
                                     net.transitions[t]);
      out[t].push_back(it->second);
    }
  }
  return out;
}

// Shared by fpn / weighted-fpn / fpncw / fpncmw: structure minus the w,
// final-marking, alphabet, and provenance extras.
Fpn read_fpn_structure(const std::unordered_map<std::string, const Section*>& secs,
                       const std::vector<TransitionRow>& rows) {
  Fpn net;
  net.places = read_names(*secs.at("places"));
  for (const TransitionRow& row : rows) {
    net.transitions.push_back(row.name);
    net.alpha.push_back(row.alpha);
  }
  net.inputs.resize(net.transitions.size());
  net.outputs.resize(net.transitions.size());
  read_arcs_in(*secs.at("arcs-in"), net);
  read_arcs_out(*secs.at("arcs-out"), net);
  net.initial = read_marking(*secs.at("m0"), net.places.size());
  return net;
}

std::vector<std::size_t> resolve_labels(const std::vector<TransitionRow>& rows,
                                        const Alphabet& alphabet, const Section& s) {
  std::vector<std::size_t> out;
  for (const TransitionRow& row : rows) {
    if (!alphabet.contains(row.label))
      throw ParseError(s.line, "label '" + row.label + "' names no alphabet word");
    out.push_back(alphabet.index_of(row.label));
  }
  return out;
}

Fpncw read_fpncw(const std::unordered_map<std::string, const Section*>& secs) {
  UniversePtr sigma = Universe::of(read_names(*secs.at("sigma")));
  auto rows = read_transitions(*secs.at("transitions"), /*labeled=*/true);
  Fpn fpn = read_fpn_structure(secs, rows);
  Marking m1 = read_marking(*secs.at("m1"), fpn.places.size());
  Alphabet alphabet = read_alphabet(*secs.at("alphabet"), sigma);
  std::vector<std::size_t> labels =
      resolve_labels(rows, alphabet, *secs.at("transitions"));
  return Fpncw{std::move(fpn), std::move(m1), std::move(alphabet), std::move(labels)};
}

Fpncmw read_fpncmw(const DocText& doc,
                   const std::unordered_map<std::string, const Section*>& secs) {
  Fpncw net = read_fpncw(secs);

  const Section& ext = *secs.at("extension");
  std::size_t base_transitions = 0, base_words = 0;
  bool have_t = false, have_w = false;
  for (const RawLine& line : ext.lines) {
    auto toks = split_tokens(line.text);
    if (toks.size() != 2)
      throw ParseError(line.no, "expected 'base-transitions <n>' or 'base-words <n>'");
    int v = parse_int(toks[1], line.no);
    if (v < 0) throw ParseError(line.no, "count must be nonnegative");
    if (toks[0] == "base-transitions") {
      base_transitions = static_cast<std::size_t>(v);
      have_t = true;
    } else if (toks[0] == "base-words") {
      base_words = static_cast<std::size_t>(v);
      have_w = true;
    } else {
      throw ParseError(line.no, "unknown key '" + toks[0] + "'");
    }
  }
  if (!have_t || !have_w)
    throw ParseError(ext.line, "section [extension] needs base-transitions and base-words");
  if (base_transitions > net.fpn.transitions.size())
    throw ParseError(ext.line, "base-transitions exceeds transition count");
  if (base_words > net.alphabet.size())
    throw ParseError(ext.line, "base-words exceeds alphabet size");

  const Section& prov = *secs.at("provenance");
  std::vector<Provenance> entries;
  std::size_t next = base_transitions;
  for (const RawLine& line : prov.lines) {
    auto toks = split_tokens(line.text);
    if (toks.size() != 4)
      throw ParseError(line.no, "expected '<transition> group=<n> word=<word> from=<t1,...>'");
    if (next >= net.fpn.transitions.size() || toks[0] != net.fpn.transitions[next])
      throw ParseError(line.no, "provenance must list synthesized transitions in order");
    ++next;
    Provenance p;
    int group = parse_int(expect_kv(toks[1], "group", line.no), line.no);
    if (group < 1) throw ParseError(line.no, "group index must be positive");
    p.group = static_cast<std::size_t>(group - 1);
    std::string word = expect_kv(toks[2], "word", line.no);
    if (!net.alphabet.contains(word))
      throw ParseError(line.no, "unknown word '" + word + "'");
    std::size_t widx = net.alphabet.index_of(word);
    if (widx < base_words)
      throw ParseError(line.no, "provenance word '" + word + "' is not a new word");
    p.word = widx - base_words;
    std::string from = expect_kv(toks[3], "from", line.no);
    std::size_t pos = 0;
    while (pos <= from.size()) {
      std::size_t comma = from.find(',', pos);
      std::string name = from.substr(
          pos, comma == std::string::npos ? from.size() - pos : comma - pos);
      if (name.empty()) throw ParseError(line.no, "empty transition in from=");
      std::size_t t = index_of_name(net.fpn.transitions, name, "transition", line.no);
      if (t >= base_transitions)
        throw ParseError(line.no, "contributing transition '" + name + "' is not original");
      p.contributing.push_back(t);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    entries.push_back(std::move(p));
  }
  if (next != net.fpn.transitions.size())
    throw ParseError(prov.line, "provenance must cover every synthesized transition");
  (void)doc;
  return Fpncmw{std::move(net), base_transitions, base_words, std::move(entries)};
}

Facw read_facw(const std::unordered_map<std::string, const Section*>& secs) {
  UniversePtr sigma = Universe::of(read_names(*secs.at("sigma")));
  UniversePtr states = Universe::of(read_names(*secs.at("states")));
  Alphabet alphabet = read_alphabet(*secs.at("alphabet"), sigma);

  const Section& init = *secs.at("initial");
  std::vector<std::string> init_toks;
  for (const RawLine& line : init.lines)
    for (std::string& tok : split_tokens(line.text)) init_toks.push_back(std::move(tok));
  if (init_toks.size() != 1)
    throw ParseError(init.line, "section [initial] must name exactly one state");
  if (!states->contains(init_toks[0]))
    throw ParseError(init.line, "unknown state '" + init_toks[0] + "'");
  std::size_t initial = states->index_of(init_toks[0]);

  const Section& fin = *secs.at("final");
  std::vector<std::string> fin_toks;
  int fin_line = fin.line;
  for (const RawLine& line : fin.lines) {
    for (std::string& tok : split_tokens(line.text)) fin_toks.push_back(std::move(tok));
    fin_line = line.no;
  }
  FuzzySet finals = read_fuzzy_entries(fin_toks, 0, states, fin_line);

  std::vector<std::vector<FuzzySet>> delta(
      states->size(), std::vector<FuzzySet>(alphabet.size(), FuzzySet(states)));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const RawLine& line : secs.at("delta")->lines) {
    auto toks = split_tokens(line.text);
    if (toks.size() < 2 || toks[1].back() != ':')
      throw ParseError(line.no, "expected '<state> <word>: value/state ...'");
    if (!states->contains(toks[0]))
      throw ParseError(line.no, "unknown state '" + toks[0] + "'");
    std::size_t q = states->index_of(toks[0]);
    std::string word = toks[1].substr(0, toks[1].size() - 1);
    if (!alphabet.contains(word))
      throw ParseError(line.no, "unknown word '" + word + "'");
    std::size_t w = alphabet.index_of(word);
    if (!seen.insert({q, w}).second)
      throw ParseError(line.no, "duplicate delta row");
    delta[q][w] = read_fuzzy_entries(toks, 2, states, line.no);
  }

  return Facw{std::move(states), std::move(alphabet), std::move(delta), initial,
              std::move(finals)};
}

// ---------------------------------------------------------------------------
// Serialization

void emit_fuzzy_entries(std::string& out, const FuzzySet& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Degree()) continue;
    out += " " + format_degree(a[i]) + "/" + a.universe()->symbol(i);
  }
}

void emit_symbol_line(std::string& out, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? " " : "") + names[i];
  out += "\n";
}

void emit_marking_line(std::string& out, const Marking& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    out += (i ? " " : "") + format_degree(m[i]);
  out += "\n";
}

void emit_fpn_sections(std::string& out, const Fpn& net, const Fpncw* labeled,
                       const std::vector<std::vector<Degree>>* w) {
  out += "\n[places]\n";
  emit_symbol_line(out, net.places);

  out += "\n[transitions]\n";
  for (std::size_t t = 0; t < net.transitions.size(); ++t) {
    out += net.transitions[t] + " alpha=" + format_degree(net.alpha[t]);
    if (labeled) out += " label=" + labeled->label_of(t).name;
    out += "\n";
  }

  out += "\n[arcs-in]\n";
  for (std::size_t p = 0; p < net.places.size(); ++p)
    for (std::size_t t = 0; t < net.transitions.size(); ++t)
      if (std::find(net.inputs[t].begin(), net.inputs[t].end(), p) !=
          net.inputs[t].end())
        out += net.places[p] + " -> " + net.transitions[t] + "\n";

  out += "\n[arcs-out]\n";
  for (std::size_t t = 0; t < net.transitions.size(); ++t)
    for (const OutputArc& arc : net.outputs[t])
      out += net.transitions[t] + " -> " + net.places[arc.place] +
             " beta=" + format_degree(arc.beta) + "\n";

  if (w) {
    out += "\n[w]\n";
    for (std::size_t p = 0; p < net.places.size(); ++p) {
      for (std::size_t t = 0; t < net.transitions.size(); ++t) {
        auto it = std::find(net.inputs[t].begin(), net.inputs[t].end(), p);
        if (it == net.inputs[t].end()) continue;
        std::size_t k = static_cast<std::size_t>(it - net.inputs[t].begin());
        out += net.places[p] + " -> " + net.transitions[t] +
               " w=" + format_degree((*w)[t][k]) + "\n";
      }
    }
  }

  out += "\n[m0]\n";
  emit_marking_line(out, net.initial);
}

void emit_alphabet(std::string& out, const Alphabet& alphabet) {
  out += "\n[alphabet]\n";
  for (const Word& w : alphabet.words()) {
    out += w.name + ":";
    emit_fuzzy_entries(out, w.meaning);
    out += "\n";
  }
}

void emit_sigma(std::string& out, const UniversePtr& sigma) {
  out += "\n[sigma]\n";
  emit_symbol_line(out, sigma->symbols());
}

void emit_fpncw(std::string& out, const Fpncw& net) {
  emit_sigma(out, net.alphabet.sigma());
  emit_fpn_sections(out, net.fpn, &net, nullptr);
  out += "\n[m1]\n";
  emit_marking_line(out, net.final_marking);
  emit_alphabet(out, net.alphabet);
}

}  // namespace

std::string_view kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::fpn: return "fpn";
    case ModelKind::weighted_fpn: return "weighted-fpn";
    case ModelKind::fpncw: return "fpncw";
    case ModelKind::fpncmw: return "fpncmw";
    case ModelKind::facw: return "facw";
    case ModelKind::words: return "words";
  }
  throw Error("unreachable model kind");
}

ModelDocument parse_model(std::string_view text) {
  DocText doc = lex(text);
  if (doc.version != 1)
    throw ParseError(doc.kind_line, "unsupported schema version " +
                                        std::to_string(doc.version));
  ModelDocument out;
  out.schema_version = doc.version;
  out.notes = doc.notes;

  if (doc.kind == "fpn") {
    out.kind = ModelKind::fpn;
    auto secs = index_sections(doc, {"places", "transitions", "arcs-in", "arcs-out", "m0"});
    out.body = read_fpn_structure(secs, read_transitions(*secs.at("transitions"), false));
  } else if (doc.kind == "weighted-fpn") {
    out.kind = ModelKind::weighted_fpn;
    auto secs = index_sections(doc, {"places", "transitions", "arcs-in", "arcs-out", "w", "m0"});
    Fpn fpn = read_fpn_structure(secs, read_transitions(*secs.at("transitions"), false));
    auto w = read_w(*secs.at("w"), fpn);
    out.body = WeightedFpn{std::move(fpn), std::move(w)};
  } else if (doc.kind == "fpncw") {
    out.kind = ModelKind::fpncw;
    auto secs = index_sections(doc, {"sigma", "places", "transitions", "arcs-in",
                                     "arcs-out", "m0", "m1", "alphabet"});
    out.body = read_fpncw(secs);
  } else if (doc.kind == "fpncmw") {
    out.kind = ModelKind::fpncmw;
    auto secs = index_sections(doc, {"sigma", "places", "transitions", "arcs-in",
                                     "arcs-out", "m0", "m1", "alphabet", "extension",
                                     "provenance"});
    out.body = read_fpncmw(doc, secs);
  } else if (doc.kind == "facw") {
    out.kind = ModelKind::facw;
    auto secs = index_sections(doc, {"sigma", "states", "alphabet", "initial",
                                     "final", "delta"});
    out.body = read_facw(secs);
  } else if (doc.kind == "words") {
    out.kind = ModelKind::words;
    auto secs = index_sections(doc, {"sigma", "alphabet"});
    UniversePtr sigma = Universe::of(read_names(*secs.at("sigma")));
    out.body = WordList{read_alphabet(*secs.at("alphabet"), sigma)};
  } else {
    throw ParseError(doc.kind_line, "unknown kind '" + doc.kind + "'");
  }
  return out;
}

std::string serialize_model(const ModelDocument& doc) {
  std::string out;
  for (const std::string& note : doc.notes)
    out += note.empty() ? "#\n" : "# " + note + "\n";
  out += "kind " + std::string(kind_name(doc.kind)) + "\n";
  out += "version " + std::to_string(doc.schema_version) + "\n";

  switch (doc.kind) {
    case ModelKind::fpn:
      emit_fpn_sections(out, std::get<Fpn>(doc.body), nullptr, nullptr);
      break;
    case ModelKind::weighted_fpn: {
      const WeightedFpn& net = std::get<WeightedFpn>(doc.body);
      emit_fpn_sections(out, net.fpn, nullptr, &net.w);
      break;
    }
    case ModelKind::fpncw:
      emit_fpncw(out, std::get<Fpncw>(doc.body));
      break;
    case ModelKind::fpncmw: {
      const Fpncmw& ext = std::get<Fpncmw>(doc.body);
      emit_fpncw(out, ext.net);
      out += "\n[extension]\n";
      out += "base-transitions " + std::to_string(ext.base_transitions) + "\n";
      out += "base-words " + std::to_string(ext.base_words) + "\n";
      out += "\n[provenance]\n";
      for (std::size_t k = 0; k < ext.provenance.size(); ++k) {
        const Provenance& p = ext.provenance[k];
        out += ext.net.fpn.transitions[ext.base_transitions + k];
        out += " group=" + std::to_string(p.group + 1);
        out += " word=" + ext.net.alphabet[ext.base_words + p.word].name;
        out += " from=";
        for (std::size_t i = 0; i < p.contributing.size(); ++i)
          out += (i ? "," : "") + ext.net.fpn.transitions[p.contributing[i]];
        out += "\n";
      }
      break;
    }
    case ModelKind::facw: {
      const Facw& m = std::get<Facw>(doc.body);
      emit_sigma(out, m.alphabet.sigma());
      out += "\n[states]\n";
      emit_symbol_line(out, m.states->symbols());
      emit_alphabet(out, m.alphabet);
      out += "\n[initial]\n" + m.states->symbol(m.initial) + "\n";
      out += "\n[final]\n";
      if (!m.finals.is_empty()) {
        std::string entries;
        emit_fuzzy_entries(entries, m.finals);
        out += entries.substr(1) + "\n";  // drop the leading separator space
      }
      out += "\n[delta]\n";
      for (std::size_t q = 0; q < m.state_count(); ++q) {
        for (std::size_t w = 0; w < m.alphabet.size(); ++w) {
          if (m.delta[q][w].is_empty()) continue;
          out += m.states->symbol(q) + " " + m.alphabet[w].name + ":";
          emit_fuzzy_entries(out, m.delta[q][w]);
          out += "\n";
        }
      }
      break;
    }
    case ModelKind::words: {
      const WordList& words = std::get<WordList>(doc.body);
      emit_sigma(out, words.alphabet.sigma());
      emit_alphabet(out, words.alphabet);
      break;
    }
  }
  return out;
}

std::vector<Violation> validate(const ModelDocument& doc) {
  switch (doc.kind) {
    case ModelKind::fpn: return validate(std::get<Fpn>(doc.body));
    case ModelKind::weighted_fpn: return validate(std::get<WeightedFpn>(doc.body));
    case ModelKind::fpncw: return validate(std::get<Fpncw>(doc.body));
    case ModelKind::fpncmw: return validate(std::get<Fpncmw>(doc.body));
    case ModelKind::facw: return validate(std::get<Facw>(doc.body));
    case ModelKind::words: return {};  // the alphabet enforced its invariants
  }
  throw Error("unreachable model kind");
}

std::string format_degree(Degree d) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, d.value());
  if (ec != std::errc()) throw Error("degree formatting failed");
  return std::string(buf, p);
}

std::string format_marking(const Marking& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i)
    out += (i ? ", " : "") + format_degree(m[i]);
  return out + "]";
}

std::string format_zadeh(const FuzzySet& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Degree()) continue;
    if (!out.empty()) out += " + ";
    out += format_degree(a[i]) + "/" + a.universe()->symbol(i);
  }
  return out.empty() ? "0" : out;
}

Marking parse_marking_vector(std::string_view text, std::size_t expected_places) {
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']' || c == ',') c = ' ';
    cleaned += c;
  }
  std::vector<Degree> degrees;
  for (const std::string& tok : split_tokens(cleaned)) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw Error("expected a degree, got '" + tok + "'");
    degrees.push_back(Degree(v));
  }
  if (degrees.size() != expected_places)
    throw Error("marking must list " + std::to_string(expected_places) + " degrees");
  return Marking(std::move(degrees));
}

}  // namespace fpncw
