#include "rqns/morphisms.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "rqns/errors.hpp"

namespace rqns {

std::map<std::string, std::string> SemigroupMap::by_label(
    const FiniteSemigroup& source, const FiniteSemigroup& target) const {
  std::map<std::string, std::string> out;
  for (size_t i = 0; i < assignment.size(); ++i) {
    out[source.label(i)] = target.label(assignment[i]);
  }
  return out;
}

bool is_homomorphism(const SemigroupMap& f, const FiniteSemigroup& a,
                     const FiniteSemigroup& b) {
  if (f.assignment.size() != a.size()) {
    return false;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) {
      auto p = static_cast<size_t>(a.product(i, j));
      if (b.product(f.assignment[i], f.assignment[j]) !=
          static_cast<int>(f.assignment[p])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Least n >= 1 with x^n == zero, or 0 for the zero element itself.
int nil_depth(const FiniteSemigroup& q, size_t x) {
  if (x == q.zero()) {
    return 0;
  }
  size_t power = x;
  for (int n = 1; n <= static_cast<int>(q.size()) + 1; ++n) {
    if (power == q.zero()) {
      return n;
    }
    power = static_cast<size_t>(q.product(power, x));
  }
  return static_cast<int>(q.size()) + 2;  // no zero power: not nilpotent
}

// One fixed factorization of every non-zero element over the minimal
// generating system, as exponent-free generator sequences.
std::vector<std::vector<size_t>> representative_words(const FiniteSemigroup& q,
                                                      const std::vector<size_t>& gens) {
  std::vector<std::vector<size_t>> word(q.size());
  std::vector<char> known(q.size(), 0);
  std::queue<size_t> queue;
  for (size_t g : gens) {
    word[g] = {g};
    known[g] = 1;
    queue.push(g);
  }
  while (!queue.empty()) {
    size_t x = queue.front();
    queue.pop();
    for (size_t g : gens) {
      auto y = static_cast<size_t>(q.product(x, g));
      if (y != q.zero() && !known[y]) {
        word[y] = word[x];
        word[y].push_back(g);
        known[y] = 1;
        queue.push(y);
      }
    }
  }
  for (size_t x = 0; x < q.size(); ++x) {
    if (x != q.zero() && !known[x]) {
      throw NotNilpotent("isomorphism search: element " + q.label(x) +
                         " is not a product of minimal generators");
    }
  }
  return word;
}

std::optional<size_t> evaluate(const FiniteSemigroup& b,
                               const std::vector<size_t>& images,
                               const CommutativeWord& w,
                               const std::map<std::string, size_t>& gen_index) {
  bool have = false;
  size_t value = 0;
  for (const auto& [name, exp] : w) {
    size_t g = images[gen_index.at(name)];
    for (int e = 0; e < exp; ++e) {
      value = have ? static_cast<size_t>(b.product(value, g)) : g;
      have = true;
    }
  }
  return have ? std::optional<size_t>(value) : std::nullopt;
}

}  // namespace

std::vector<SemigroupMap> isomorphisms_via_generators(const FiniteSemigroup& a,
                                                      const FiniteSemigroup& b,
                                                      const Presentation& p) {
  std::vector<size_t> gens_a = minimal_generating_system(a);
  {
    std::set<std::string> want, have;
    for (size_t g : gens_a) {
      want.insert(a.label(g));
    }
    have.insert(p.generators.begin(), p.generators.end());
    if (want != have) {
      throw PresentationMismatch(
          "isomorphism search: presentation generators differ from the minimal "
          "generating system");
    }
  }
  std::vector<SemigroupMap> found;
  if (a.size() != b.size()) {
    return found;
  }
  std::vector<size_t> gens_b = minimal_generating_system(b);
  if (gens_a.size() != gens_b.size()) {
    return found;
  }
  // p.generators in a fixed order; position of each generator label.
  std::map<std::string, size_t> gen_index;
  std::vector<size_t> gen_elem;  // element of a per p.generator
  for (size_t i = 0; i < p.generators.size(); ++i) {
    gen_index[p.generators[i]] = i;
    gen_elem.push_back(*a.index_of(p.generators[i]));
  }
  std::vector<std::vector<size_t>> word_a = representative_words(a, gens_a);

  std::sort(gens_b.begin(), gens_b.end());
  std::vector<size_t> perm(gens_b.size());
  std::iota(perm.begin(), perm.end(), size_t{0});
  do {
    std::vector<size_t> images(p.generators.size());
    bool ok = true;
    for (size_t i = 0; i < images.size() && ok; ++i) {
      images[i] = gens_b[perm[i]];
      // Generators of matching nilpotency depth only; completeness is
      // unaffected since depth is an isomorphism invariant.
      ok = nil_depth(a, gen_elem[i]) == nil_depth(b, images[i]);
    }
    if (!ok) {
      continue;
    }
    for (const auto& [u, v] : p.relations) {
      if (evaluate(b, images, u, gen_index) != evaluate(b, images, v, gen_index)) {
        ok = false;
        break;
      }
    }
    for (const auto& u : p.zero_relations) {
      if (!ok) {
        break;
      }
      ok = evaluate(b, images, u, gen_index) == std::optional<size_t>(b.zero());
    }
    if (!ok) {
      continue;
    }
    // Extend along representative words and verify the result.
    SemigroupMap f;
    f.assignment.assign(a.size(), b.zero());
    for (size_t x = 0; x < a.size(); ++x) {
      if (x == a.zero()) {
        continue;
      }
      size_t value = 0;
      bool have = false;
      for (size_t g : word_a[x]) {
        size_t img = images[gen_index.at(a.label(g))];
        value = have ? static_cast<size_t>(b.product(value, img)) : img;
        have = true;
      }
      f.assignment[x] = value;
    }
    std::vector<char> hit(b.size(), 0);
    for (size_t v : f.assignment) {
      hit[v] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) == hit.end() && is_homomorphism(f, a, b)) {
      found.push_back(std::move(f));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<SemigroupMap> isomorphisms_via_generators(const FiniteSemigroup& a,
                                                      const FiniteSemigroup& b) {
  return isomorphisms_via_generators(a, b, table_presentation(a));
}

std::vector<SemigroupMap> automorphism_group(const FiniteSemigroup& a) {
  return isomorphisms_via_generators(a, a);
}

std::optional<SemigroupMap> brute_force_isomorphic(const FiniteSemigroup& a,
                                                   const FiniteSemigroup& b,
                                                   size_t size_limit) {
  if (a.size() > size_limit || b.size() > size_limit) {
    throw ResourceBound("brute force isomorphism: size exceeds limit " +
                        std::to_string(size_limit));
  }
  if (a.size() != b.size()) {
    return std::nullopt;
  }
  size_t n = a.size();
  std::vector<char> decomposable_a(n, 0), decomposable_b(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      decomposable_a[static_cast<size_t>(a.product(i, j))] = 1;
      decomposable_b[static_cast<size_t>(b.product(i, j))] = 1;
    }
  }
  std::vector<size_t> image(n, n);
  std::vector<char> used(n, 0);
  auto compatible = [&](size_t x, size_t y) {
    if ((x == a.zero()) != (y == b.zero())) {
      return false;
    }
    if (decomposable_a[x] != decomposable_b[y]) {
      return false;
    }
    return nil_depth(a, x) == nil_depth(b, y);
  };
  auto consistent = [&](size_t upto) {
    for (size_t x = 0; x <= upto; ++x) {
      for (size_t y = 0; y <= upto; ++y) {
        auto p = static_cast<size_t>(a.product(x, y));
        int q = b.product(image[x], image[y]);
        if (p <= upto) {
          if (q != static_cast<int>(image[p])) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, size_t x) -> bool {
    if (x == n) {
      return true;
    }
    for (size_t y = 0; y < n; ++y) {
      if (used[y] || !compatible(x, y)) {
        continue;
      }
      image[x] = y;
      used[y] = 1;
      if (consistent(x) && self(self, x + 1)) {
        return true;
      }
      used[y] = 0;
      image[x] = n;
    }
    return false;
  };
  if (!rec(rec, 0)) {
    return std::nullopt;
  }
  return SemigroupMap{image};
}

}  // namespace rqns
