#include "fpncw/fuzzy.hpp"

#include <algorithm>

namespace fpncw {

Universe::Universe(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error("universe must be nonempty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].empty()) throw Error("universe symbol name must be nonempty");
    if (!index_.emplace(symbols_[i], i).second)
      throw Error("duplicate universe symbol '" + symbols_[i] + "'");
  }
}

UniversePtr Universe::of(std::vector<std::string> symbols) {
  return std::make_shared<const Universe>(std::move(symbols));
}

const std::string& Universe::symbol(std::size_t i) const {
  if (i >= symbols_.size()) throw UnknownName("symbol index out of range");
  return symbols_[i];
}

std::size_t Universe::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    throw UnknownName("unknown symbol '" + std::string(name) + "'");
  return it->second;
}

bool Universe::contains(std::string_view name) const {
  return index_.find(std::string(name)) != index_.end();
}

FuzzySet::FuzzySet(UniversePtr universe)
    : universe_(std::move(universe)), grades_(universe_ ? universe_->size() : 0) {
  if (!universe_) throw Error("fuzzy set requires a universe");
}

FuzzySet::FuzzySet(UniversePtr universe, std::vector<Degree> grades)
    : universe_(std::move(universe)), grades_(std::move(grades)) {
  if (!universe_) throw Error("fuzzy set requires a universe");
  if (grades_.size() != universe_->size())
    throw Error("grade vector length does not match universe size");
}

FuzzySet FuzzySet::singleton(UniversePtr universe, std::string_view symbol) {
  std::size_t i = universe->index_of(symbol);
  return singleton(std::move(universe), i);
}

FuzzySet FuzzySet::singleton(UniversePtr universe, std::size_t index) {
  if (index >= universe->size()) throw UnknownName("symbol index out of range");
  std::vector<Degree> grades(universe->size());
  grades[index] = Degree(1.0);
  return FuzzySet(std::move(universe), std::move(grades));
}

FuzzySet FuzzySet::of(UniversePtr universe,
                      std::initializer_list<std::pair<std::string_view, double>> entries) {
  std::vector<Degree> grades(universe->size());
  for (const auto& [symbol, value] : entries)
    grades[universe->index_of(symbol)] = Degree(value);
  return FuzzySet(std::move(universe), std::move(grades));
}

Degree FuzzySet::at(std::string_view symbol) const {
  return grades_[universe_->index_of(symbol)];
}

bool FuzzySet::is_empty() const {
  return std::all_of(grades_.begin(), grades_.end(),
                     [](Degree d) { return d == Degree(); });
}

bool operator==(const FuzzySet& a, const FuzzySet& b) {
  return (a.universe_ == b.universe_ || *a.universe_ == *b.universe_) &&
         a.grades_ == b.grades_;
}

namespace detail {

void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) return;
  if (!(*a == *b)) throw UniverseMismatch("fuzzy sets live over different universes");
}

void require_same_universe(const FuzzySet& a, const FuzzySet& b) {
  require_same_universe(a.universe(), b.universe());
}

}  // namespace detail

FuzzySet unite(const FuzzySet& a, const FuzzySet& b) {
  detail::require_same_universe(a, b);
  std::vector<Degree> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dmax(a[i], b[i]);
  return FuzzySet(a.universe(), std::move(out));
}

FuzzySet intersect(const FuzzySet& a, const FuzzySet& b) {
  detail::require_same_universe(a, b);
  std::vector<Degree> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dmin(a[i], b[i]);
  return FuzzySet(a.universe(), std::move(out));
}

FuzzySet scale_product(Degree lambda, const FuzzySet& a) {
  std::vector<Degree> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dmin(lambda, a[i]);
  return FuzzySet(a.universe(), std::move(out));
}

Degree height(const FuzzySet& a) {
  Degree h;
  for (std::size_t i = 0; i < a.size(); ++i) h = dmax(h, a[i]);
  return h;
}

std::vector<std::string> support(const FuzzySet& a) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > Degree()) out.push_back(a.universe()->symbol(i));
  return out;
}

bool is_subset(const FuzzySet& a, const FuzzySet& b) {
  detail::require_same_universe(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

bool equals(const FuzzySet& a, const FuzzySet& b) {
  return is_subset(a, b) && is_subset(b, a);
}

}  // namespace fpncw
