#include "rqns/decider.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "rqns/errors.hpp"
#include "rqns/rees_quotient.hpp"

namespace rqns {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::in_class:
      return "in_class";
    case Verdict::not_in_class:
      return "not_in_class";
    default:
      return "unknown";
  }
}

std::string to_string(SemigroupClass c) {
  switch (c) {
    case SemigroupClass::CN:
      return "CN";
    case SemigroupClass::CQNS:
      return "CQNS";
    case SemigroupClass::RQNS:
      return "RQNS";
    default:
      return "NcapCom";
  }
}

Certificate check_ncap_com(const FiniteSemigroup& q) {
  if (auto w = q.commutativity_witness()) {
    return Certificate{Verdict::not_in_class, SemigroupClass::NcapCom,
                       "not commutative: " + q.label(w->first) + "*" +
                           q.label(w->second) + " != " + q.label(w->second) + "*" +
                           q.label(w->first),
                       std::nullopt, 0};
  }
  try {
    nilpotency_class(q);
  } catch (const NotNilpotent&) {
    for (size_t i = 0; i < q.size(); ++i) {
      if (i != q.zero() && static_cast<size_t>(q.product(i, i)) == i) {
        return Certificate{Verdict::not_in_class, SemigroupClass::NcapCom,
                           "not nilpotent: non-zero idempotent " + q.label(i),
                           std::nullopt, 0};
      }
    }
    return Certificate{Verdict::not_in_class, SemigroupClass::NcapCom,
                       "not nilpotent: power sets stabilize above one element",
                       std::nullopt, 0};
  }
  return Certificate{Verdict::in_class, SemigroupClass::NcapCom, "", std::nullopt, 0};
}

std::optional<Certificate> necessary_conditions_rqns(const FiniteSemigroup& q) {
  Certificate base = check_ncap_com(q);
  if (!base.in_class()) {
    base.class_name = SemigroupClass::RQNS;
    return base;
  }
  if (auto w = cancellation_witness(q)) {
    return Certificate{Verdict::not_in_class, SemigroupClass::RQNS,
                       "finite-part cancellation fails: " + q.label(w->a) + "*" +
                           q.label(w->b) + " = " + q.label(w->a) + "*" +
                           q.label(w->c) + " != 0 with " + q.label(w->b) +
                           " != " + q.label(w->c),
                       std::nullopt, 0};
  }
  return std::nullopt;
}

std::optional<std::string> cqns_obstruction(const FiniteSemigroup& q) {
  std::vector<size_t> gens = minimal_generating_system(q);
  if (gens.size() != 2) {
    return std::nullopt;
  }
  for (size_t g : gens) {
    size_t sq = static_cast<size_t>(q.product(g, g));
    if (static_cast<size_t>(q.product(g, sq)) != q.zero()) {
      return std::nullopt;
    }
  }
  std::set<size_t> p2 = power_layer(q, 2);
  std::set<size_t> p3 = power_layer(q, 3);
  std::set<size_t> p4 = power_layer(q, 4);
  if (p2.size() - p3.size() != 2 || p3.size() - p4.size() != 1) {
    return std::nullopt;
  }
  return "two minimal generators " + q.label(gens[0]) + ", " + q.label(gens[1]) +
         " with both cubes zero and successive power layers of sizes 2 and 1: no "
         "numerical semigroup cut at a point yields this table";
}

namespace {

// All factorizations of each non-zero element as exponent vectors over the
// minimal generating system, found by peeling one generator at a time.
std::vector<std::vector<std::vector<int>>> all_factorizations(
    const FiniteSemigroup& q, const std::vector<size_t>& gens) {
  size_t n = q.size();
  size_t k = gens.size();
  std::vector<std::vector<std::vector<int>>> facts(n);
  std::vector<char> done(n, 0);
  std::function<void(size_t)> fill = [&](size_t x) {
    if (done[x]) {
      return;
    }
    done[x] = 1;
    std::set<std::vector<int>> seen;
    for (size_t gi = 0; gi < k; ++gi) {
      if (gens[gi] == x) {
        std::vector<int> unit(k, 0);
        unit[gi] = 1;
        seen.insert(unit);
      }
      for (size_t y = 0; y < n; ++y) {
        if (y == q.zero() || static_cast<size_t>(q.product(gens[gi], y)) != x) {
          continue;
        }
        fill(y);
        for (std::vector<int> f : facts[y]) {
          ++f[gi];
          seen.insert(std::move(f));
        }
      }
    }
    facts[x].assign(seen.begin(), seen.end());
  };
  for (size_t x = 0; x < n; ++x) {
    if (x != q.zero()) {
      fill(x);
    }
  }
  return facts;
}

// Verification hook: given the finite-part labels (gcd-normalized, indexed
// by element), rebuild a quotient and hand back the realization if it
// matches the input table exactly under the labeling.
using LeafVerifier = std::function<std::optional<Realization>(
    const std::vector<int64_t>& values)>;

// Backtracking over injective generator labels; labels of every other
// element are forced by any one factorization, with the agreement of all
// factorizations and the bound enforced as the support completes.
class LabelSearch {
 public:
  LabelSearch(const FiniteSemigroup& q, int64_t bound, LeafVerifier verify)
      : q_(q), bound_(bound), verify_(std::move(verify)) {
    gens_ = minimal_generating_system(q);
    std::vector<std::vector<std::vector<int>>> facts =
        all_factorizations(q, gens_);
    size_t k = gens_.size();
    ref_.assign(q.size(), {});
    compute_at_.assign(k, {});
    diff_at_.assign(k, {});
    for (size_t x = 0; x < q.size(); ++x) {
      if (x == q.zero()) {
        continue;
      }
      ref_[x] = facts[x].front();
      size_t top = 0;
      for (size_t j = 0; j < k; ++j) {
        if (ref_[x][j] != 0) {
          top = j;
        }
      }
      compute_at_[top].push_back(x);
      for (size_t fi = 1; fi < facts[x].size(); ++fi) {
        std::vector<int> d(k);
        size_t dtop = 0;
        for (size_t j = 0; j < k; ++j) {
          d[j] = facts[x][fi][j] - ref_[x][j];
          if (d[j] != 0) {
            dtop = j;
          }
        }
        diff_at_[dtop].push_back(std::move(d));
      }
    }
    labels_.assign(k, 0);
    value_.assign(q.size(), 0);
  }

  std::optional<Realization> run() {
    computed_.clear();
    used_.clear();
    return extend(0);
  }

 private:
  std::optional<Realization> extend(size_t j) {
    if (j == gens_.size()) {
      std::vector<int64_t> values = value_;
      int64_t d = 0;
      for (size_t x : computed_) {
        d = std::gcd(d, values[x]);
      }
      for (size_t x : computed_) {
        values[x] /= d;
      }
      return verify_(values);
    }
    for (int64_t l = 1; l <= bound_; ++l) {
      labels_[j] = l;
      size_t added = 0;
      bool ok = true;
      for (size_t x : compute_at_[j]) {
        int64_t v = 0;
        for (size_t i = 0; i <= j; ++i) {
          v += static_cast<int64_t>(ref_[x][i]) * labels_[i];
        }
        if (v > bound_ || used_.count(v)) {
          ok = false;
          break;
        }
        value_[x] = v;
        used_.insert(v);
        computed_.push_back(x);
        ++added;
      }
      if (ok) {
        for (const std::vector<int>& d : diff_at_[j]) {
          int64_t s = 0;
          for (size_t i = 0; i <= j; ++i) {
            s += static_cast<int64_t>(d[i]) * labels_[i];
          }
          if (s != 0) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        // Sums mapping to infinity may never collide with a finite label.
        for (size_t ai = computed_.size() - added; ai < computed_.size() && ok;
             ++ai) {
          for (size_t x : computed_) {
            if (static_cast<size_t>(q_.product(computed_[ai], x)) == q_.zero() &&
                used_.count(value_[computed_[ai]] + value_[x])) {
              ok = false;
              break;
            }
          }
        }
      }
      if (ok) {
        if (auto r = extend(j + 1)) {
          return r;
        }
      }
      while (added--) {
        used_.erase(value_[computed_.back()]);
        computed_.pop_back();
      }
    }
    return std::nullopt;
  }

  const FiniteSemigroup& q_;
  int64_t bound_;
  LeafVerifier verify_;
  std::vector<size_t> gens_;
  std::vector<std::vector<int>> ref_;
  std::vector<std::vector<size_t>> compute_at_;
  std::vector<std::vector<std::vector<int>>> diff_at_;
  std::vector<int64_t> labels_;
  std::vector<int64_t> value_;
  std::vector<size_t> computed_;
  std::set<int64_t> used_;
};

// Checks that the labeling is an isomorphism onto the rebuilt quotient.
bool labeling_matches(const FiniteSemigroup& q, const std::vector<int64_t>& values,
                      const ReesQuotient& rq) {
  const FiniteSemigroup& t = rq.table();
  if (t.size() != q.size()) {
    return false;
  }
  std::vector<size_t> phi(q.size());
  for (size_t x = 0; x < q.size(); ++x) {
    auto idx = t.index_of(x == q.zero() ? "inf" : std::to_string(values[x]));
    if (!idx) {
      return false;
    }
    phi[x] = *idx;
  }
  for (size_t a = 0; a < q.size(); ++a) {
    for (size_t b = 0; b < q.size(); ++b) {
      if (static_cast<size_t>(t.product(phi[a], phi[b])) !=
          phi[static_cast<size_t>(q.product(a, b))]) {
        return false;
      }
    }
  }
  return true;
}

std::map<std::string, int64_t> labeling_map(const FiniteSemigroup& q,
                                            const std::vector<int64_t>& values) {
  std::map<std::string, int64_t> out;
  for (size_t x = 0; x < q.size(); ++x) {
    if (x != q.zero()) {
      out[q.label(x)] = values[x];
    }
  }
  return out;
}

std::optional<Realization> verify_rqns_leaf(const FiniteSemigroup& q,
                                            const std::vector<int64_t>& values) {
  std::set<int64_t> labels;
  for (size_t x = 0; x < q.size(); ++x) {
    if (x != q.zero()) {
      labels.insert(values[x]);
    }
  }
  NumericalSemigroup s =
      NumericalSemigroup::from_generators({labels.begin(), labels.end()});
  // The complement of the label set must be an ideal: whenever a label
  // splits as a sum of two members, both parts carry labels too.
  for (int64_t l : labels) {
    for (int64_t u = 1; 2 * u <= l; ++u) {
      if (s.contains(u) && s.contains(l - u) &&
          (!labels.count(u) || !labels.count(l - u))) {
        return std::nullopt;
      }
    }
  }
  int64_t lo = s.multiplicity();
  while (labels.count(lo) || !s.contains(lo)) {
    ++lo;
  }
  std::vector<int64_t> ideal_gens;
  for (int64_t x = lo; x < s.conductor() + lo; ++x) {
    if (s.contains(x) && !labels.count(x)) {
      ideal_gens.push_back(x);
    }
  }
  Ideal ideal = Ideal::from_generators(s, std::move(ideal_gens));
  ReesQuotient rq(s, ideal);
  if (!labeling_matches(q, values, rq)) {
    return std::nullopt;
  }
  return Realization{s, ideal, labeling_map(q, values)};
}

std::optional<Realization> verify_cqns_leaf(const FiniteSemigroup& q,
                                            const std::vector<int64_t>& values) {
  std::vector<int64_t> smalls;
  for (size_t x = 0; x < q.size(); ++x) {
    if (x != q.zero()) {
      smalls.push_back(values[x]);
    }
  }
  std::sort(smalls.begin(), smalls.end());
  int64_t cut = smalls.back() + 1;
  // The member set is the labels together with everything from the cut
  // on.  Closure only needs checking below the cut.
  std::set<int64_t> members(smalls.begin(), smalls.end());
  for (int64_t a : smalls) {
    for (int64_t b : smalls) {
      if (a + b < cut && members.count(a + b) == 0) {
        return std::nullopt;
      }
    }
  }
  // The conductor can sit below the cut, so canonicalize before building.
  int64_t conductor = 1;
  for (int64_t x = cut - 1; x >= 1; --x) {
    if (members.count(x) == 0) {
      conductor = x + 1;
      break;
    }
  }
  std::vector<int64_t> canonical;
  for (int64_t x : smalls) {
    if (x <= conductor) {
      canonical.push_back(x);
    }
  }
  if (canonical.empty() || canonical.back() != conductor) {
    canonical.push_back(conductor);
  }
  NumericalSemigroup s = NumericalSemigroup::from_small_elements(canonical, conductor);
  Ideal ideal = Ideal::cutting(s, cut);
  ReesQuotient rq(s, ideal);
  if (!labeling_matches(q, values, rq)) {
    return std::nullopt;
  }
  return Realization{s, ideal, labeling_map(q, values)};
}

int64_t effective_bound(const FiniteSemigroup& q, int64_t label_bound) {
  if (label_bound > 0) {
    return label_bound;
  }
  int64_t n = static_cast<int64_t>(q.size());
  return 4 * n * n;
}

Certificate decide_realizable(const FiniteSemigroup& q, int64_t label_bound,
                              SemigroupClass cls, const LeafVerifier& verify) {
  if (auto neg = necessary_conditions_rqns(q)) {
    neg->class_name = cls;
    return *neg;
  }
  if (q.size() == 1) {
    return Certificate{Verdict::not_in_class, cls,
                       "the one-element semigroup needs the improper ideal I = S "
                       "and is excluded by convention",
                       std::nullopt, 0};
  }
  if (cls == SemigroupClass::CQNS) {
    if (auto reason = cqns_obstruction(q)) {
      return Certificate{Verdict::not_in_class, cls, *reason, std::nullopt, 0};
    }
  }
  int64_t bound = effective_bound(q, label_bound);
  LabelSearch search(q, bound, verify);
  if (auto r = search.run()) {
    return Certificate{Verdict::in_class, cls, "", std::move(r), bound};
  }
  return Certificate{Verdict::unknown, cls,
                     "no realization with labels up to " + std::to_string(bound),
                     std::nullopt, bound};
}

}  // namespace

Certificate decide_rqns(const FiniteSemigroup& q, int64_t label_bound) {
  return decide_realizable(q, label_bound, SemigroupClass::RQNS,
                           [&q](const std::vector<int64_t>& values) {
                             return verify_rqns_leaf(q, values);
                           });
}

Certificate decide_cqns(const FiniteSemigroup& q, int64_t label_bound) {
  return decide_realizable(q, label_bound, SemigroupClass::CQNS,
                           [&q](const std::vector<int64_t>& values) {
                             return verify_cqns_leaf(q, values);
                           });
}

Certificate decide_cn(const FiniteSemigroup& q) {
  if (auto neg = necessary_conditions_rqns(q)) {
    neg->class_name = SemigroupClass::CN;
    return *neg;
  }
  if (q.size() == 1) {
    return Certificate{Verdict::not_in_class, SemigroupClass::CN,
                       "the one-element semigroup needs the improper ideal I = S "
                       "and is excluded by convention",
                       std::nullopt, 0};
  }
  std::vector<size_t> gens = minimal_generating_system(q);
  if (gens.size() != 1) {
    return Certificate{Verdict::not_in_class, SemigroupClass::CN,
                       "every quotient of the naturals is monogenic; this table "
                       "has " + std::to_string(gens.size()) + " minimal generators",
                       std::nullopt, 0};
  }
  int64_t n = static_cast<int64_t>(q.size());
  std::vector<int64_t> values(q.size(), 0);
  size_t p = gens[0];
  for (int64_t i = 1; i < n; ++i) {
    values[p] = i;
    p = static_cast<size_t>(q.product(gens[0], p));
  }
  NumericalSemigroup s = NumericalSemigroup::naturals();
  Ideal ideal = Ideal::cutting(s, n);
  ReesQuotient rq(s, ideal);
  if (!labeling_matches(q, values, rq)) {
    return Certificate{Verdict::not_in_class, SemigroupClass::CN,
                       "powers of the single generator do not match N/I_" +
                           std::to_string(n),
                       std::nullopt, 0};
  }
  return Certificate{Verdict::in_class, SemigroupClass::CN, "",
                     Realization{s, ideal, labeling_map(q, values)}, 0};
}

}  // namespace rqns
