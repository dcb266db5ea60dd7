#include "rqns/finite_semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rqns/errors.hpp"

namespace rqns {

FiniteSemigroup::FiniteSemigroup(std::vector<std::string> elements, size_t zero_index,
                                 std::vector<std::vector<int>> table)
    : elements_(std::move(elements)), zero_(zero_index), table_(std::move(table)) {
  size_t n = elements_.size();
  if (n == 0) {
    throw InvalidTable("table: no elements");
  }
  if (zero_ >= n || table_.size() != n) {
    throw InvalidTable("table: dimension mismatch");
  }
  for (const auto& row : table_) {
    if (row.size() != n) {
      throw InvalidTable("table: dimension mismatch");
    }
    for (int v : row) {
      if (v < 0 || static_cast<size_t>(v) >= n) {
        throw InvalidTable("table: entry out of range");
      }
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (table_[zero_][i] != static_cast<int>(zero_) ||
        table_[i][zero_] != static_cast<int>(zero_)) {
      throw InvalidTable("table: designated zero is not absorbing");
    }
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      for (size_t k = 0; k < n; ++k) {
        if (table_[table_[i][j]][k] != table_[i][table_[j][k]]) {
          throw InvalidTable("table: not associative at (" + elements_[i] + "," +
                             elements_[j] + "," + elements_[k] + ")");
        }
      }
    }
  }
}

std::optional<size_t> FiniteSemigroup::index_of(const std::string& label) const {
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == label) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<size_t, size_t>> FiniteSemigroup::commutativity_witness() const {
  for (size_t i = 0; i < size(); ++i) {
    for (size_t j = i + 1; j < size(); ++j) {
      if (table_[i][j] != table_[j][i]) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

bool FiniteSemigroup::is_commutative() const {
  return !commutativity_witness().has_value();
}

std::set<size_t> power_layer(const FiniteSemigroup& q, int i) {
  std::set<size_t> layer;
  for (size_t x = 0; x < q.size(); ++x) {
    layer.insert(x);
  }
  for (int step = 1; step < i; ++step) {
    std::set<size_t> next;
    for (size_t x : layer) {
      for (size_t y = 0; y < q.size(); ++y) {
        next.insert(static_cast<size_t>(q.product(x, y)));
      }
    }
    if (next == layer) {
      break;
    }
    layer = std::move(next);
  }
  return layer;
}

int nilpotency_class(const FiniteSemigroup& q) {
  std::set<size_t> layer = power_layer(q, 1);
  int n = 1;
  while (layer.size() > 1) {
    std::set<size_t> next;
    for (size_t x : layer) {
      for (size_t y = 0; y < q.size(); ++y) {
        next.insert(static_cast<size_t>(q.product(x, y)));
      }
    }
    if (next == layer) {
      throw NotNilpotent("nilpotency_class: powers stabilize at size " +
                         std::to_string(layer.size()));
    }
    layer = std::move(next);
    ++n;
  }
  return n;
}

std::vector<size_t> minimal_generating_system(const FiniteSemigroup& q) {
  std::vector<char> decomposable(q.size(), 0);
  for (size_t i = 0; i < q.size(); ++i) {
    for (size_t j = 0; j < q.size(); ++j) {
      decomposable[static_cast<size_t>(q.product(i, j))] = 1;
    }
  }
  std::vector<size_t> gens;
  for (size_t i = 0; i < q.size(); ++i) {
    if (i != q.zero() && !decomposable[i]) {
      gens.push_back(i);
    }
  }
  return gens;
}

std::optional<CancellationWitness> cancellation_witness(const FiniteSemigroup& q) {
  for (size_t a = 0; a < q.size(); ++a) {
    if (a == q.zero()) {
      continue;
    }
    for (size_t b = 0; b < q.size(); ++b) {
      if (b == q.zero()) {
        continue;
      }
      int ab = q.product(a, b);
      if (ab == static_cast<int>(q.zero())) {
        continue;
      }
      for (size_t c = b + 1; c < q.size(); ++c) {
        if (c == q.zero()) {
          continue;
        }
        if (q.product(a, c) == ab) {
          return CancellationWitness{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

FiniteSemigroup direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b) {
  size_t n = a.size(), m = b.size();
  std::vector<std::string> elements;
  elements.reserve(n * m);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      elements.push_back("(" + a.label(i) + "," + b.label(j) + ")");
    }
  }
  std::vector<std::vector<int>> table(n * m, std::vector<int>(n * m));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      for (size_t k = 0; k < n; ++k) {
        for (size_t l = 0; l < m; ++l) {
          table[i * m + j][k * m + l] =
              a.product(i, k) * static_cast<int>(m) + b.product(j, l);
        }
      }
    }
  }
  return FiniteSemigroup(std::move(elements), a.zero() * m + b.zero(),
                         std::move(table));
}

FiniteSemigroup quotient_by_congruence(
    const FiniteSemigroup& q, const std::vector<std::pair<size_t, size_t>>& pairs) {
  size_t n = q.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&](size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](size_t x, size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  };
  for (auto [x, y] : pairs) {
    unite(x, y);
  }
  // Close under translations until a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = x + 1; y < n; ++y) {
        if (find(x) != find(y)) {
          continue;
        }
        for (size_t t = 0; t < n; ++t) {
          changed |= unite(static_cast<size_t>(q.product(x, t)),
                           static_cast<size_t>(q.product(y, t)));
          changed |= unite(static_cast<size_t>(q.product(t, x)),
                           static_cast<size_t>(q.product(t, y)));
        }
      }
    }
  }
  // Classes in order of their smallest member.
  std::map<size_t, std::vector<size_t>> classes;
  for (size_t x = 0; x < n; ++x) {
    classes[find(x)].push_back(x);
  }
  std::map<size_t, int> class_index;
  std::vector<std::string> labels;
  size_t zero_class = 0;
  for (const auto& [root, members] : classes) {
    if (members.size() == 1) {
      labels.push_back(q.label(members.front()));
    } else {
      std::string label = "{";
      for (size_t i = 0; i < members.size(); ++i) {
        label += (i ? "," : "") + q.label(members[i]);
      }
      labels.push_back(label + "}");
    }
    class_index[root] = static_cast<int>(class_index.size());
    if (root == find(q.zero())) {
      zero_class = static_cast<size_t>(class_index[root]);
      labels.back() = q.label(q.zero());
    }
  }
  size_t k = classes.size();
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (const auto& [ri, mi] : classes) {
    for (const auto& [rj, mj] : classes) {
      table[static_cast<size_t>(class_index[ri])][static_cast<size_t>(class_index[rj])] =
          class_index[find(static_cast<size_t>(q.product(mi.front(), mj.front())))];
    }
  }
  return FiniteSemigroup(std::move(labels), zero_class, std::move(table));
}

}  // namespace rqns
