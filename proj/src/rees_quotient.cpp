#include "rqns/rees_quotient.hpp"

#include <algorithm>
#include <sstream>

#include "rqns/errors.hpp"

namespace rqns {

namespace {

FiniteSemigroup build_table(const NumericalSemigroup& s, const Ideal& ideal,
                            std::vector<int64_t>& finite_part) {
  if (!(ideal.ambient() == s)) {
    throw AmbientMismatch("rees_quotient: ideal has a different ambient semigroup");
  }
  // Members at or beyond c(S) + min(G) are in the ideal, so the finite
  // part lives below that.
  int64_t hi = s.conductor() + ideal.min_generators().front();
  finite_part.clear();
  for (int64_t x = s.multiplicity(); x < hi; ++x) {
    if (s.contains(x) && !ideal.contains(x)) {
      finite_part.push_back(x);
    }
  }
  size_t n = finite_part.size();
  std::vector<std::string> labels;
  for (int64_t x : finite_part) {
    labels.push_back(std::to_string(x));
  }
  labels.push_back("inf");
  int inf = static_cast<int>(n);
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, inf));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      int64_t sum = finite_part[i] + finite_part[j];
      auto it = std::lower_bound(finite_part.begin(), finite_part.end(), sum);
      if (it != finite_part.end() && *it == sum) {
        table[i][j] = static_cast<int>(it - finite_part.begin());
      }
    }
  }
  return FiniteSemigroup(std::move(labels), n, std::move(table));
}

}  // namespace

ReesQuotient::ReesQuotient(const NumericalSemigroup& s, const Ideal& ideal)
    : ambient_(s), ideal_(ideal), table_(build_table(s, ideal, finite_part_)) {}

NumericalSemigroup conductor_normalize(const NumericalSemigroup& s, int64_t k) {
  if (k <= s.multiplicity()) {
    throw ImproperIdeal("conductor_normalize: cutting point leaves no finite part");
  }
  if (k <= s.conductor() && !s.contains(k - 1)) {
    // T = S together with everything from k on.  k - 1 stays a gap, so
    // the conductor of T is exactly k and the members below it are those
    // of S.  (With k - 1 in S the conductor would drop below k and the
    // quotient would change, hence the fallthrough.)
    std::vector<int64_t> smalls;
    for (int64_t x = 1; x <= k; ++x) {
      if (x == k || s.contains(x)) {
        smalls.push_back(x);
      }
    }
    return NumericalSemigroup::from_small_elements(smalls, k);
  }
  // T = 2S together with everything from 2k on; 2k - 1 is odd, so the
  // conductor is exactly 2k, and doubling preserves the truncated sums.
  std::vector<int64_t> smalls;
  for (int64_t x : s.small_elements()) {
    if (2 * x < 2 * k) {
      smalls.push_back(2 * x);
    }
  }
  for (int64_t x = s.conductor() + 1; 2 * x < 2 * k; ++x) {
    smalls.push_back(2 * x);
  }
  smalls.push_back(2 * k);
  return NumericalSemigroup::from_small_elements(smalls, 2 * k);
}

FiniteSemigroup naturals_quotient(int64_t r) {
  size_t n = static_cast<size_t>(r - 1);
  std::vector<std::string> labels;
  for (size_t i = 1; i <= n; ++i) {
    labels.push_back(std::to_string(i));
  }
  labels.push_back("inf");
  int inf = static_cast<int>(n);
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1, inf));
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= n; ++j) {
      if (i + j <= n) {
        table[i - 1][j - 1] = static_cast<int>(i + j - 1);
      }
    }
  }
  return FiniteSemigroup(std::move(labels), n, std::move(table));
}

std::string format_table(const FiniteSemigroup& q) {
  size_t width = 1;
  for (size_t i = 0; i < q.size(); ++i) {
    width = std::max(width, q.label(i).size());
  }
  std::ostringstream out;
  auto cell = [&](const std::string& s) {
    out << ' ' << std::string(width - s.size(), ' ') << s;
  };
  cell("+");
  out << " |";
  for (size_t j = 0; j < q.size(); ++j) {
    cell(q.label(j));
  }
  out << '\n';
  out << std::string((width + 1) * (q.size() + 1) + 2, '-') << '\n';
  for (size_t i = 0; i < q.size(); ++i) {
    cell(q.label(i));
    out << " |";
    for (size_t j = 0; j < q.size(); ++j) {
      cell(q.label(static_cast<size_t>(q.product(i, j))));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rqns
