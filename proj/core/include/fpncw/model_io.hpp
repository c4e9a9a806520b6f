#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fpncw/automaton.hpp"
#include "fpncw/extend.hpp"

namespace fpncw {

enum class ModelKind { fpn, weighted_fpn, fpncw, fpncmw, facw, words };

std::string_view kind_name(ModelKind kind);

/// A words document: a named word alphabet over a declared symbol set.
struct WordList {
  Alphabet alphabet;

  friend bool operator==(const WordList&, const WordList&) = default;
};

/// One parsed model file. Leading '#' comment lines are kept as notes and
/// re-emitted by the serializer, so canonical files round-trip byte for byte.
struct ModelDocument {
  ModelKind kind;
  int schema_version = 1;
  std::vector<std::string> notes;
  std::variant<Fpn, WeightedFpn, Fpncw, Fpncmw, Facw, WordList> body;

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

/// Parse a model document. Throws ParseError (with the offending line) on
/// syntax errors, unknown references, out-of-range degrees, duplicate or
/// missing sections.
ModelDocument parse_model(std::string_view text);

/// Canonical text form: fixed section order, declaration-order entries,
/// place-major input arcs, transition-major output arcs, shortest exact
/// decimal degrees.
std::string serialize_model(const ModelDocument& doc);

/// Structural validation of whatever the document holds.
std::vector<Violation> validate(const ModelDocument& doc);

/// Shortest decimal representation that parses back to the same value.
std::string format_degree(Degree d);

/// Bracketed vector in place order, e.g. [0.9, 1, 0, 0, 0].
std::string format_marking(const Marking& m);

/// Zadeh-style sum, e.g. "0.9/p3 + 0.2/p4"; "0" for the empty fuzzy set.
std::string format_zadeh(const FuzzySet& a);

/// Accepts the bracketed form as well as bare whitespace/comma-separated
/// degrees; entry count must match expected_places.
Marking parse_marking_vector(std::string_view text, std::size_t expected_places);

}  // namespace fpncw
