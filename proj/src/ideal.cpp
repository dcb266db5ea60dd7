#include "rqns/ideal.hpp"

#include <algorithm>
#include <string>

#include "rqns/errors.hpp"

namespace rqns {

namespace {

// Keeps g only when it is not h + s for an already-kept h and s in S^0.
std::vector<int64_t> minimize(const NumericalSemigroup& s, std::vector<int64_t> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<int64_t> kept;
  for (int64_t g : gens) {
    bool redundant = false;
    for (int64_t h : kept) {
      if (g - h == 0 || s.contains(g - h)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      kept.push_back(g);
    }
  }
  return kept;
}

}  // namespace

Ideal Ideal::from_generators(const NumericalSemigroup& s, std::vector<int64_t> gens) {
  if (gens.empty()) {
    throw NotInAmbient("ideal: empty generating set");
  }
  for (int64_t g : gens) {
    if (!s.contains(g)) {
      throw NotInAmbient("ideal: generator " + std::to_string(g) +
                         " is not a member of the ambient semigroup");
    }
  }
  Ideal ideal(s, minimize(s, std::move(gens)));
  // Every member at or beyond c + min(G) is in the ideal, so the finite
  // part is empty exactly when no member below that point is missed.
  int64_t hi = s.conductor() + ideal.min_generators().front();
  bool whole = true;
  for (int64_t x = s.multiplicity(); x < hi && whole; ++x) {
    if (s.contains(x) && !ideal.contains(x)) {
      whole = false;
    }
  }
  if (whole) {
    throw ImproperIdeal("ideal: generated ideal is the whole semigroup");
  }
  return ideal;
}

Ideal Ideal::cutting(const NumericalSemigroup& s, int64_t k) {
  if (k <= s.multiplicity()) {
    throw ImproperIdeal("cutting ideal: cutting point " + std::to_string(k) +
                        " does not leave a proper ideal");
  }
  // Members at or beyond max(c, k) + m are m + (smaller member >= k).
  int64_t hi = std::max(s.conductor(), k) + s.multiplicity();
  std::vector<int64_t> gens;
  for (int64_t x = k; x < hi; ++x) {
    if (s.contains(x)) {
      gens.push_back(x);
    }
  }
  return from_generators(s, std::move(gens));
}

bool Ideal::contains(int64_t x) const {
  for (int64_t g : min_generators_) {
    if (x == g || ambient_.contains(x - g)) {
      return true;
    }
  }
  return false;
}

}  // namespace rqns
