#include "fpncw/dot.hpp"

namespace fpncw {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void emit_net_body(std::string& out, const Fpn& net, const Fpncw* labeled,
                   const std::vector<std::vector<Degree>>* w) {
  for (std::size_t p = 0; p < net.places.size(); ++p) {
    std::string label = net.places[p];
    bool final_place = labeled && labeled->final_marking[p] > Degree();
    if (final_place)
      label += "\\nM1=" + format_degree(labeled->final_marking[p]);
    if (net.initial.size() == net.places.size() && net.initial[p] > Degree())
      label += "\\n\u25cf " + format_degree(net.initial[p]);
    out += "  " + quoted(net.places[p]) + " [shape=" +
           (final_place ? "doublecircle" : "circle") + ", label=" + quoted(label) +
           "];\n";
  }
  for (std::size_t t = 0; t < net.transitions.size(); ++t) {
    std::string label = net.transitions[t];
    if (labeled) label += " : " + labeled->label_of(t).name;
    label += "\\n\u03b1=" + format_degree(net.alpha[t]);
    out += "  " + quoted(net.transitions[t]) + " [shape=box, label=" + quoted(label) +
           "];\n";
  }
  for (std::size_t t = 0; t < net.transitions.size(); ++t) {
    for (std::size_t k = 0; k < net.inputs[t].size(); ++k) {
      std::size_t p = net.inputs[t][k];
      out += "  " + quoted(net.places[p]) + " -> " + quoted(net.transitions[t]);
      if (w) out += " [label=" + quoted(format_degree((*w)[t][k])) + "]";
      out += ";\n";
    }
    for (const OutputArc& arc : net.outputs[t])
      out += "  " + quoted(net.transitions[t]) + " -> " + quoted(net.places[arc.place]) +
             " [label=" + quoted(format_degree(arc.beta)) + "];\n";
  }
}

}  // namespace

std::string to_dot(const Fpn& net) {
  std::string out = "digraph fpn {\n  rankdir=LR;\n";
  emit_net_body(out, net, nullptr, nullptr);
  return out + "}\n";
}

std::string to_dot(const WeightedFpn& net) {
  std::string out = "digraph fpn {\n  rankdir=LR;\n";
  emit_net_body(out, net.fpn, nullptr, &net.w);
  return out + "}\n";
}

std::string to_dot(const Fpncw& net) {
  std::string out = "digraph fpncw {\n  rankdir=LR;\n";
  emit_net_body(out, net.fpn, &net, nullptr);
  return out + "}\n";
}

std::string to_dot(const Facw& m) {
  std::string out = "digraph facw {\n  rankdir=LR;\n";
  out += "  __start [shape=point];\n";
  for (std::size_t q = 0; q < m.state_count(); ++q) {
    std::string label = m.states->symbol(q) + "|" + format_degree(m.finals[q]);
    out += "  " + quoted(m.states->symbol(q)) + " [shape=box, label=" + quoted(label) +
           "];\n";
  }
  out += "  __start -> " + quoted(m.states->symbol(m.initial)) + ";\n";
  for (std::size_t q = 0; q < m.state_count(); ++q) {
    for (std::size_t w = 0; w < m.alphabet.size(); ++w) {
      const FuzzySet& image = m.delta[q][w];
      for (std::size_t r = 0; r < image.size(); ++r) {
        if (image[r] == Degree()) continue;
        out += "  " + quoted(m.states->symbol(q)) + " -> " + quoted(m.states->symbol(r)) +
               " [label=" +
               quoted(m.alphabet[w].name + "|" + format_degree(image[r])) + "];\n";
      }
    }
  }
  return out + "}\n";
}

std::string to_dot(const ModelDocument& doc) {
  switch (doc.kind) {
    case ModelKind::fpn: return to_dot(std::get<Fpn>(doc.body));
    case ModelKind::weighted_fpn: return to_dot(std::get<WeightedFpn>(doc.body));
    case ModelKind::fpncw: return to_dot(std::get<Fpncw>(doc.body));
    case ModelKind::fpncmw: return to_dot(std::get<Fpncmw>(doc.body).net);
    case ModelKind::facw: return to_dot(std::get<Facw>(doc.body));
    case ModelKind::words: throw Error("a words document has no graph form");
  }
  throw Error("unreachable model kind");
}

}  // namespace fpncw
