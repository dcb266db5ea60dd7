#include "rqns/numerical_semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rqns/errors.hpp"

namespace rqns {

namespace {

int64_t gcd_of(const std::vector<int64_t>& v) {
  int64_t g = 0;
  for (int64_t x : v) {
    g = std::gcd(g, x);
  }
  return g;
}

// Membership bitmap of <gens> on [0, bound].  Assumes gcd(gens) == 1.
std::vector<char> reachable_upto(const std::vector<int64_t>& gens, int64_t bound) {
  std::vector<char> in(static_cast<size_t>(bound) + 1, 0);
  for (int64_t g : gens) {
    if (g <= bound) {
      in[static_cast<size_t>(g)] = 1;
    }
  }
  for (int64_t x = 1; x <= bound; ++x) {
    if (in[static_cast<size_t>(x)]) {
      continue;
    }
    for (int64_t g : gens) {
      if (g < x && in[static_cast<size_t>(x - g)]) {
        in[static_cast<size_t>(x)] = 1;
        break;
      }
    }
  }
  return in;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<int64_t> gens) {
  if (gens.empty()) {
    throw ClosureViolation("from_generators: empty generating set");
  }
  for (int64_t g : gens) {
    if (g <= 0) {
      throw ClosureViolation("from_generators: generators must be positive");
    }
  }
  int64_t d = gcd_of(gens);
  for (int64_t& g : gens) {
    g /= d;
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // F(S) <= (a1 - 1)(an - 1) - 1, so this bound sees the whole conductor
  // region and one multiplicity past it.
  int64_t m = gens.front();
  int64_t bound = gens.front() * gens.back() + m + 1;
  std::vector<char> in = reachable_upto(gens, bound);

  int64_t frob = 0;
  for (int64_t x = bound - m - 1; x >= 1; --x) {
    if (!in[static_cast<size_t>(x)]) {
      frob = x;
      break;
    }
  }
  NumericalSemigroup s;
  s.conductor_ = frob + 1;
  for (int64_t x = 1; x <= s.conductor_; ++x) {
    if (in[static_cast<size_t>(x)]) {
      s.small_elements_.push_back(x);
    }
  }
  // x >= c + m decomposes as m + (x - m); generators live below that.
  auto decomposable = [&s](int64_t x) {
    for (int64_t y : s.small_elements_) {
      if (y >= x) {
        break;
      }
      if (s.contains(x - y)) {
        return true;
      }
    }
    return false;
  };
  for (int64_t x : s.small_elements_) {
    if (!decomposable(x)) {
      s.min_generators_.push_back(x);
    }
  }
  for (int64_t x = s.conductor_ + 1; x < s.conductor_ + m; ++x) {
    if (!decomposable(x)) {
      s.min_generators_.push_back(x);
    }
  }
  return s;
}

NumericalSemigroup NumericalSemigroup::from_small_elements(std::vector<int64_t> smalls,
                                                           int64_t conductor) {
  std::sort(smalls.begin(), smalls.end());
  smalls.erase(std::unique(smalls.begin(), smalls.end()), smalls.end());
  if (smalls.empty() || conductor <= 0 || smalls.back() != conductor) {
    throw ClosureViolation(
        "from_small_elements: conductor must be the largest small element");
  }
  if (smalls.front() <= 0) {
    throw ClosureViolation("from_small_elements: members must be positive");
  }
  std::set<int64_t> members(smalls.begin(), smalls.end());
  auto in = [&](int64_t x) { return x >= conductor || members.count(x) > 0; };
  for (int64_t a : smalls) {
    for (int64_t b : smalls) {
      if (!in(a + b)) {
        throw ClosureViolation("from_small_elements: " + std::to_string(a) + "+" +
                               std::to_string(b) + " falls in a gap");
      }
    }
  }
  // Everything below conductor is listed; sums of a small element and a
  // tail element land at or beyond the conductor, so closure holds.
  std::vector<int64_t> gens = smalls;
  for (int64_t x = conductor + 1; x < conductor + smalls.front(); ++x) {
    gens.push_back(x);
  }
  NumericalSemigroup s = from_generators(gens);
  if (s.small_elements_ != smalls) {
    // Cannot happen for a closed set with gcd-1 tail; defends against a
    // closed set whose gcd normalization changed the elements.
    throw ClosureViolation("from_small_elements: set is not canonical");
  }
  return s;
}

bool NumericalSemigroup::contains(int64_t x) const {
  if (x >= conductor_) {
    return true;
  }
  return std::binary_search(small_elements_.begin(), small_elements_.end(), x);
}

std::vector<int64_t> NumericalSemigroup::apery_set(int64_t n) const {
  if (!contains(n)) {
    throw NotAMember("apery_set: " + std::to_string(n) + " is not a member");
  }
  std::vector<int64_t> ap(static_cast<size_t>(n), -1);
  int64_t found = 0;
  for (int64_t s = 0; found < n; ++s) {
    if (s != 0 && !contains(s)) {
      continue;
    }
    int64_t r = s % n;
    if (ap[static_cast<size_t>(r)] < 0) {
      ap[static_cast<size_t>(r)] = s;
      ++found;
    }
  }
  return ap;
}

bool NumericalSemigroup::is_symmetric() const {
  if (conductor_ == 1) {
    throw UndefinedForFullSemigroup("is_symmetric: undefined for N");
  }
  int64_t f = frobenius();
  for (int64_t z = 1; z <= f; ++z) {
    if (!contains(z) && !(f - z == 0 || contains(f - z))) {
      return false;
    }
  }
  return true;
}

bool NumericalSemigroup::is_pseudo_symmetric() const {
  if (conductor_ == 1) {
    throw UndefinedForFullSemigroup("is_pseudo_symmetric: undefined for N");
  }
  int64_t f = frobenius();
  if (f % 2 != 0) {
    return false;
  }
  for (int64_t z = 1; z <= f; ++z) {
    if (z == f / 2 || contains(z)) {
      continue;
    }
    if (!(f - z == 0 || contains(f - z))) {
      return false;
    }
  }
  return true;
}

bool NumericalSemigroup::is_irreducible() const {
  return is_symmetric() || is_pseudo_symmetric();
}

int64_t NumericalSemigroup::genus() const {
  return frobenius() - static_cast<int64_t>(small_elements_.size()) + 1;
}

namespace {

// Subsets of {1..f-1} are explored as bitmasks; bit (x-1) set means x is a
// member.  A mask is admissible when no two members sum to f and every
// member sum below f is again a member.
bool closed_mask(uint32_t mask, int64_t f) {
  for (int64_t a = 1; a < f; ++a) {
    if (!(mask >> (a - 1) & 1u)) {
      continue;
    }
    for (int64_t b = a; b < f; ++b) {
      if (!(mask >> (b - 1) & 1u)) {
        continue;
      }
      int64_t s = a + b;
      if (s == f) {
        return false;
      }
      if (s < f && !(mask >> (s - 1) & 1u)) {
        return false;
      }
    }
  }
  return true;
}

NumericalSemigroup semigroup_of_mask(uint32_t mask, int64_t f) {
  std::vector<int64_t> smalls;
  for (int64_t x = 1; x < f; ++x) {
    if (mask >> (x - 1) & 1u) {
      smalls.push_back(x);
    }
  }
  smalls.push_back(f + 1);
  return NumericalSemigroup::from_small_elements(smalls, f + 1);
}

template <typename Body>
std::vector<NumericalSemigroup> enumerate_impl(int64_t f, int64_t max_frobenius,
                                               Body&& run) {
  if (f < 1) {
    throw ResourceBound("enumerate_by_frobenius: f must be positive");
  }
  if (f > max_frobenius) {
    throw ResourceBound("enumerate_by_frobenius: f=" + std::to_string(f) +
                        " exceeds limit " + std::to_string(max_frobenius));
  }
  std::vector<NumericalSemigroup> out = run(f);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<NumericalSemigroup> enumerate_by_frobenius_serial(int64_t f,
                                                              int64_t max_frobenius) {
  return enumerate_impl(f, max_frobenius, [](int64_t ff) {
    std::vector<NumericalSemigroup> out;
    uint32_t total = 1u << (ff - 1);
    for (uint32_t mask = 0; mask < total; ++mask) {
      if (closed_mask(mask, ff)) {
        out.push_back(semigroup_of_mask(mask, ff));
      }
    }
    return out;
  });
}

std::vector<NumericalSemigroup> enumerate_by_frobenius(int64_t f,
                                                       int64_t max_frobenius) {
  return enumerate_impl(f, max_frobenius, [](int64_t ff) {
    std::vector<NumericalSemigroup> out;
    int64_t total = int64_t{1} << (ff - 1);
#pragma omp parallel
    {
      std::vector<NumericalSemigroup> local;
#pragma omp for schedule(dynamic, 1024) nowait
      for (int64_t mask = 0; mask < total; ++mask) {
        if (closed_mask(static_cast<uint32_t>(mask), ff)) {
          local.push_back(semigroup_of_mask(static_cast<uint32_t>(mask), ff));
        }
      }
#pragma omp critical
      out.insert(out.end(), local.begin(), local.end());
    }
    return out;
  });
}

}  // namespace rqns
