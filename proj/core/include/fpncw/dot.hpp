#pragma once

#include <string>

#include "fpncw/model_io.hpp"

namespace fpncw {

/// Graphviz text. Places are circles (double circles where the final marking
/// is positive), transitions are boxes annotated with their threshold, output
/// arcs carry their truth value, and positive initial degrees show as a token
/// dot on the place.
std::string to_dot(const Fpn& net);
std::string to_dot(const WeightedFpn& net);
std::string to_dot(const Fpncw& net);

/// Automaton graph: state boxes "q|final degree", arcs "word|degree".
std::string to_dot(const Facw& m);

/// Dispatch on the document kind; throws for a words document.
std::string to_dot(const ModelDocument& doc);

}  // namespace fpncw
