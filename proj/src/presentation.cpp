#include "rqns/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "rqns/errors.hpp"

namespace rqns {

int degree(const CommutativeWord& w) {
  int d = 0;
  for (const auto& [g, e] : w) {
    d += e;
  }
  return d;
}

std::string format_word(const CommutativeWord& w) {
  std::string out;
  for (const auto& [g, e] : w) {
    if (!out.empty()) {
      out += "*";
    }
    out += g;
    if (e > 1) {
      out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::string Presentation::format() const {
  std::ostringstream out;
  out << "<";
  for (size_t i = 0; i < generators.size(); ++i) {
    out << (i ? "," : "") << generators[i];
  }
  out << " |";
  bool first = true;
  for (const auto& [u, v] : relations) {
    out << (first ? " " : ", ") << format_word(u) << "=" << format_word(v);
    first = false;
  }
  for (const auto& u : zero_relations) {
    out << (first ? " " : ", ") << format_word(u) << "=0";
    first = false;
  }
  out << ">";
  return out.str();
}

std::vector<std::vector<int>> integer_factorizations(int64_t n,
                                                     const std::vector<int64_t>& gens) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(gens.size(), 0);
  // Exponent of gens[i] chosen ascending, so the output is lexicographic.
  auto rec = [&](auto&& self, size_t i, int64_t rest) -> void {
    if (i + 1 == gens.size()) {
      if (rest % gens[i] == 0) {
        current[i] = static_cast<int>(rest / gens[i]);
        out.push_back(current);
        current[i] = 0;
      }
      return;
    }
    for (int64_t e = 0; e * gens[i] <= rest; ++e) {
      current[i] = static_cast<int>(e);
      self(self, i + 1, rest - e * gens[i]);
    }
    current[i] = 0;
  };
  if (!gens.empty() && n >= 0) {
    rec(rec, 0, n);
  }
  return out;
}

namespace {

std::string letter_name(size_t i) {
  if (i < 26) {
    return std::string(1, static_cast<char>('a' + i));
  }
  return "g" + std::to_string(i);
}

CommutativeWord word_of(const std::vector<int>& exps,
                        const std::vector<std::string>& names) {
  CommutativeWord w;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 0) {
      w[names[i]] = exps[i];
    }
  }
  return w;
}

bool supported_on(const CommutativeWord& w, const std::set<std::string>& names) {
  for (const auto& [g, e] : w) {
    if (names.count(g) == 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

Presentation minimal_presentation(const NumericalSemigroup& s) {
  const std::vector<int64_t>& gens = s.min_generators();
  std::vector<std::string> names;
  for (size_t i = 0; i < gens.size(); ++i) {
    names.push_back(letter_name(i));
  }
  Presentation p;
  p.generators = names;
  if (gens.size() <= 1) {
    return p;
  }
  // Beyond c + 2*max(gens) every two factorizations are linked through a
  // common generator, so the factorization graph is connected there.
  int64_t hi = s.conductor() + 2 * gens.back();
  for (int64_t n = s.multiplicity(); n < hi; ++n) {
    if (!s.contains(n)) {
      continue;
    }
    std::vector<std::vector<int>> facts = integer_factorizations(n, gens);
    if (facts.size() <= 1) {
      continue;
    }
    // Connected components of factorizations sharing a generator.
    std::vector<size_t> comp(facts.size());
    std::iota(comp.begin(), comp.end(), size_t{0});
    auto find = [&](size_t x) {
      while (comp[x] != x) {
        comp[x] = comp[comp[x]];
        x = comp[x];
      }
      return x;
    };
    for (size_t i = 0; i < facts.size(); ++i) {
      for (size_t j = i + 1; j < facts.size(); ++j) {
        bool shares = false;
        for (size_t t = 0; t < gens.size(); ++t) {
          if (facts[i][t] > 0 && facts[j][t] > 0) {
            shares = true;
            break;
          }
        }
        if (shares) {
          comp[std::max(find(i), find(j))] = std::min(find(i), find(j));
        }
      }
    }
    // One relation linking the least factorization of the first component
    // to the least factorization of each further component.
    std::map<size_t, std::vector<int>> least;
    for (size_t i = 0; i < facts.size(); ++i) {
      size_t r = find(i);
      if (least.count(r) == 0) {
        least[r] = facts[i];  // facts are produced in lexicographic order
      }
    }
    if (least.size() >= 2) {
      auto it = least.begin();
      const std::vector<int>& base = it->second;
      for (++it; it != least.end(); ++it) {
        // Written with the lexicographically larger factorization first,
        // e.g. a^5 = b^3.
        const std::vector<int>& lhs = std::max(base, it->second);
        const std::vector<int>& rhs = std::min(base, it->second);
        p.relations.emplace_back(word_of(lhs, names), word_of(rhs, names));
      }
    }
  }
  return p;
}

Presentation quotient_presentation(const NumericalSemigroup& s, const Ideal& ideal) {
  Presentation p = minimal_presentation(s);
  const std::vector<int64_t>& gens = s.min_generators();
  for (int64_t g : ideal.min_generators()) {
    // A minimal generator is indecomposable, so its only factorization is
    // the single letter, matching the convention for g in I and X.
    std::vector<std::vector<int>> facts = integer_factorizations(g, gens);
    p.zero_relations.push_back(word_of(facts.front(), p.generators));
  }
  return p;
}

Presentation reduced_quotient_presentation(const NumericalSemigroup& s,
                                           const Ideal& ideal) {
  Presentation full = minimal_presentation(s);
  const std::vector<int64_t>& gens = s.min_generators();
  std::set<std::string> kept_names;
  Presentation p;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!ideal.contains(gens[i])) {
      p.generators.push_back(full.generators[i]);
      kept_names.insert(full.generators[i]);
    }
  }
  for (const auto& [u, v] : full.relations) {
    bool u_in = supported_on(u, kept_names);
    bool v_in = supported_on(v, kept_names);
    if (u_in && v_in) {
      p.relations.emplace_back(u, v);
    } else if (u_in) {
      p.zero_relations.push_back(u);
    } else if (v_in) {
      p.zero_relations.push_back(v);
    }
  }
  for (int64_t g : ideal.min_generators()) {
    bool is_min_gen =
        std::binary_search(gens.begin(), gens.end(), g);
    if (is_min_gen) {
      continue;  // its letter is simply absent from the generator list
    }
    std::vector<std::vector<int>> facts = integer_factorizations(g, gens);
    CommutativeWord w = word_of(facts.front(), full.generators);
    if (!supported_on(w, kept_names)) {
      // An ideal generator outside X factors over X \ I only.
      throw PresentationMismatch("reduced presentation: representative word of " +
                                 std::to_string(g) + " leaves the kept generators");
    }
    p.zero_relations.push_back(w);
  }
  return p;
}

namespace {

using Exps = std::vector<int>;

bool dominates(const Exps& w, const Exps& z) {
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] < z[i]) {
      return false;
    }
  }
  return true;
}

Exps to_exps(const CommutativeWord& w, const std::vector<std::string>& names) {
  Exps e(names.size(), 0);
  for (const auto& [g, exp] : w) {
    auto it = std::find(names.begin(), names.end(), g);
    if (it == names.end()) {
      throw PresentationMismatch("presentation: word uses unknown generator " + g);
    }
    e[static_cast<size_t>(it - names.begin())] = exp;
  }
  return e;
}

}  // namespace

FiniteSemigroup semigroup_from_presentation(const Presentation& p, int size_bound) {
  size_t k = p.generators.size();
  if (k == 0) {
    throw PresentationMismatch("presentation: no generators");
  }
  std::vector<Exps> zero_words;
  for (const auto& w : p.zero_relations) {
    zero_words.push_back(to_exps(w, p.generators));
  }
  std::vector<std::pair<Exps, Exps>> rels;
  for (const auto& [u, v] : p.relations) {
    rels.emplace_back(to_exps(u, p.generators), to_exps(v, p.generators));
  }
  auto is_dead = [&](const Exps& w) {
    for (const Exps& z : zero_words) {
      if (dominates(w, z)) {
        return true;
      }
    }
    return false;
  };

  std::map<Exps, int> id;        // live word -> union-find node (>= 1)
  std::vector<int> parent;       // node 0 is the zero class
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
    }
  };

  while (true) {
    // Live words by degree: a word survives while it dominates no known
    // zero word.  A word all of whose one-step subwords died has died too,
    // so growing live parents by one generator reaches every survivor.
    // Growth stops at the degree cap; if survivors remain there once no
    // further zeros can be derived, the presentation is not nilpotent
    // within the bound.
    id.clear();
    std::vector<Exps> frontier;
    for (size_t i = 0; i < k; ++i) {
      Exps unit(k, 0);
      unit[i] = 1;
      if (!is_dead(unit)) {
        frontier.push_back(unit);
      }
    }
    bool truncated = false;
    int depth = 1;
    while (!frontier.empty() && depth <= size_bound) {
      std::set<Exps> next;
      for (const Exps& w : frontier) {
        id.emplace(w, 0);
        for (size_t i = 0; i < k; ++i) {
          Exps grown = w;
          ++grown[i];
          if (!is_dead(grown)) {
            next.insert(grown);
          }
        }
      }
      frontier.assign(next.begin(), next.end());
      ++depth;
    }
    truncated = !frontier.empty();
    int next_id = 1;
    for (auto& [w, node] : id) {
      node = next_id++;
    }
    parent.assign(static_cast<size_t>(next_id), 0);
    std::iota(parent.begin(), parent.end(), 0);

    for (const auto& [w, node] : id) {
      for (const auto& [u, v] : rels) {
        for (int dir = 0; dir < 2; ++dir) {
          const Exps& from = dir ? v : u;
          const Exps& to = dir ? u : v;
          if (!dominates(w, from)) {
            continue;
          }
          Exps t = w;
          for (size_t i = 0; i < k; ++i) {
            t[i] += to[i] - from[i];
          }
          auto it = id.find(t);
          if (it != id.end()) {
            unite(node, it->second);
          } else if (is_dead(t)) {
            unite(node, 0);
          }
          // A target beyond the enumerated region proves nothing yet.
        }
      }
    }

    std::vector<Exps> new_zeros;
    for (const auto& [w, node] : id) {
      if (find(node) == 0) {
        new_zeros.push_back(w);
      }
    }
    if (new_zeros.empty()) {
      if (truncated) {
        throw SizeBoundExceeded(
            "presented semigroup: words of degree beyond the size bound " +
            std::to_string(size_bound) + " survive; presentation not nilpotent?");
      }
      break;
    }
    zero_words.insert(zero_words.end(), new_zeros.begin(), new_zeros.end());
  }

  // Collect classes; the representative is the least live word of a class.
  std::map<int, Exps> rep;
  for (const auto& [w, node] : id) {
    int r = find(node);
    if (rep.count(r) == 0) {
      rep[r] = w;  // map iteration is in lexicographic word order
    }
  }
  if (static_cast<int>(rep.size()) + 1 > size_bound) {
    throw SizeBoundExceeded("presented semigroup: more than " +
                            std::to_string(size_bound) + " classes");
  }
  std::vector<int> roots;
  std::vector<std::string> labels;
  std::map<int, int> index_of_root;
  for (const auto& [r, w] : rep) {
    index_of_root[r] = static_cast<int>(roots.size());
    roots.push_back(r);
    labels.push_back(format_word(word_of(w, p.generators)));
  }
  size_t n = roots.size();
  labels.push_back("0");
  int zero_index = static_cast<int>(n);
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, zero_index));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Exps prod = rep[roots[i]];
      const Exps& other = rep[roots[j]];
      for (size_t t = 0; t < k; ++t) {
        prod[t] += other[t];
      }
      auto it = id.find(prod);
      if (it != id.end() && find(it->second) != 0) {
        table[i][j] = index_of_root[find(it->second)];
      }
    }
  }
  return FiniteSemigroup(std::move(labels), static_cast<size_t>(zero_index),
                         std::move(table));
}

Presentation table_presentation(const FiniteSemigroup& q) {
  std::vector<size_t> gens = minimal_generating_system(q);
  if (gens.empty()) {
    throw PresentationMismatch("table presentation: semigroup has no generators");
  }
  std::vector<std::string> names;
  std::map<size_t, size_t> gen_pos;
  for (size_t i = 0; i < gens.size(); ++i) {
    names.push_back(q.label(gens[i]));
    gen_pos[gens[i]] = i;
  }
  // One fixed factorization per non-zero element, by breadth-first
  // closure; in a nilpotent semigroup the generators reach everything.
  std::vector<Exps> word(q.size());
  std::queue<size_t> queue;
  for (size_t g : gens) {
    word[g].assign(gens.size(), 0);
    word[g][gen_pos[g]] = 1;
    queue.push(g);
  }
  while (!queue.empty()) {
    size_t x = queue.front();
    queue.pop();
    for (size_t g : gens) {
      auto y = static_cast<size_t>(q.product(x, g));
      if (y != q.zero() && word[y].empty()) {
        word[y] = word[x];
        ++word[y][gen_pos[g]];
        queue.push(y);
      }
    }
  }
  for (size_t x = 0; x < q.size(); ++x) {
    if (x != q.zero() && word[x].empty()) {
      throw NotNilpotent("table presentation: element " + q.label(x) +
                         " is not a product of minimal generators");
    }
  }
  Presentation p;
  p.generators = names;
  std::set<std::pair<CommutativeWord, CommutativeWord>> rel_set;
  std::set<CommutativeWord> zero_set;
  for (size_t i = 0; i < q.size(); ++i) {
    if (i == q.zero()) {
      continue;
    }
    for (size_t j = i; j < q.size(); ++j) {
      if (j == q.zero()) {
        continue;
      }
      Exps sum = word[i];
      for (size_t t = 0; t < sum.size(); ++t) {
        sum[t] += word[j][t];
      }
      CommutativeWord lhs = word_of(sum, names);
      auto prod = static_cast<size_t>(q.product(i, j));
      if (prod == q.zero()) {
        zero_set.insert(lhs);
      } else {
        CommutativeWord rhs = word_of(word[prod], names);
        if (lhs != rhs) {
          rel_set.emplace(lhs, rhs);
        }
      }
    }
  }
  p.relations.assign(rel_set.begin(), rel_set.end());
  p.zero_relations.assign(zero_set.begin(), zero_set.end());
  return p;
}

}  // namespace rqns
