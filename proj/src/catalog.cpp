#include "rqns/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "rqns/errors.hpp"
#include "rqns/ideal.hpp"
#include "rqns/io.hpp"
#include "rqns/morphisms.hpp"
#include "rqns/rees_quotient.hpp"

namespace rqns {

using nlohmann::json;

namespace {

// The conductor cut leaves nothing when the conductor equals the
// multiplicity; the quotient degenerates to the zero alone.
FiniteSemigroup conductor_cut_table(const NumericalSemigroup& s) {
  try {
    ReesQuotient q(s, Ideal::cutting(s, s.conductor()));
    return q.table();
  } catch (const ImproperIdeal&) {
    return FiniteSemigroup({"inf"}, 0, {{0}});
  }
}

bool quotients_isomorphic(const FiniteSemigroup& a, const FiniteSemigroup& b) {
  if (a.size() != b.size()) {
    return false;
  }
  if (a.size() == 1) {
    return true;
  }
  return !isomorphisms_via_generators(a, b).empty();
}

TableRow build_row(int64_t f) {
  TableRow row{f, {}};
  for (const NumericalSemigroup& s : enumerate_by_frobenius_serial(f, f)) {
    FiniteSemigroup q = conductor_cut_table(s);
    int nc = nilpotency_class(q);
    row.entries.push_back(TableEntry{s, s.is_irreducible(), std::move(q), nc, -1});
  }
  // Colors: same-size quotients share an index exactly when isomorphic.
  for (size_t i = 0; i < row.entries.size(); ++i) {
    int next = 0;
    for (size_t j = 0; j < i; ++j) {
      if (row.entries[j].quotient.size() != row.entries[i].quotient.size()) {
        continue;
      }
      if (quotients_isomorphic(row.entries[j].quotient, row.entries[i].quotient)) {
        row.entries[i].iso_class = row.entries[j].iso_class;
        break;
      }
      next = std::max(next, row.entries[j].iso_class + 1);
    }
    if (row.entries[i].iso_class < 0) {
      row.entries[i].iso_class = next;
    }
  }
  return row;
}

}  // namespace

TableReport build_table(int64_t max_frobenius) {
  if (max_frobenius < 1 || max_frobenius > 20) {
    throw ResourceBound("build_table: frobenius bound " +
                        std::to_string(max_frobenius) + " outside 1..20");
  }
  TableReport report{max_frobenius, std::vector<TableRow>(max_frobenius)};
#pragma omp parallel for schedule(dynamic)
  for (int64_t f = 1; f <= max_frobenius; ++f) {
    report.rows[f - 1] = build_row(f);
  }
  return report;
}

std::optional<SizeClassFailure> size_class_claim_failure(const TableReport& report) {
  std::vector<const TableEntry*> all;
  for (const TableRow& row : report.rows) {
    for (const TableEntry& e : row.entries) {
      all.push_back(&e);
    }
  }
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (all[i]->quotient.size() != all[j]->quotient.size()) {
        continue;
      }
      bool same_class = all[i]->nilpotency_class == all[j]->nilpotency_class;
      bool iso = quotients_isomorphic(all[i]->quotient, all[j]->quotient);
      if (iso != same_class) {
        return SizeClassFailure{all[i]->semigroup, all[j]->semigroup, iso};
      }
    }
  }
  return std::nullopt;
}

ScanReport scan_conjecture_symmetric(int64_t max_frobenius) {
  if (max_frobenius < 1 || max_frobenius > 20) {
    throw ResourceBound("scan_conjecture_symmetric: frobenius bound " +
                        std::to_string(max_frobenius) + " outside 1..20");
  }
  ScanReport report{max_frobenius, {}, {}};
  for (int64_t f = 1; f <= max_frobenius; ++f) {
    for (const NumericalSemigroup& s : enumerate_by_frobenius(f, max_frobenius)) {
      if (s.is_symmetric()) {
        report.symmetric.push_back(s);
      }
    }
  }
  std::vector<FiniteSemigroup> quotients;
  quotients.reserve(report.symmetric.size());
  for (const NumericalSemigroup& s : report.symmetric) {
    quotients.push_back(conductor_cut_table(s));
  }
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < quotients.size(); ++i) {
    for (size_t j = i + 1; j < quotients.size(); ++j) {
      if (quotients[i].size() == quotients[j].size()) {
        pairs.emplace_back(i, j);
      }
    }
  }
  std::vector<size_t> hits;
#pragma omp parallel for schedule(dynamic)
  for (size_t p = 0; p < pairs.size(); ++p) {
    if (quotients_isomorphic(quotients[pairs[p].first], quotients[pairs[p].second])) {
#pragma omp critical
      hits.push_back(p);
    }
  }
  std::sort(hits.begin(), hits.end());
  for (size_t p : hits) {
    report.collisions.push_back(
        ScanCollision{report.symmetric[pairs[p].first], report.symmetric[pairs[p].second]});
  }
  return report;
}

CounterexampleReport verify_non_irreducible_counterexample() {
  NumericalSemigroup target = NumericalSemigroup::from_generators({4, 11, 13, 18});
  FiniteSemigroup q = conductor_cut_table(target);
  CounterexampleReport report{target,
                              q.size(),
                              minimal_generating_system(q).size(),
                              nilpotency_class(q),
                              {},
                              {},
                              false,
                              false};
  size_t with_f11 = 0;
  for (int64_t f : {11, 12}) {
    for (const NumericalSemigroup& s : enumerate_by_frobenius(f)) {
      if (s.is_irreducible() && s.small_elements().size() == 6) {
        report.candidates.push_back(s);
        if (f == 11) {
          ++with_f11;
        }
      }
    }
  }
  for (const NumericalSemigroup& s : report.candidates) {
    FiniteSemigroup cq = conductor_cut_table(s);
    if (nilpotency_class(cq) == report.nilpotency_class) {
      report.class4_candidates.push_back(s);
    }
    if (quotients_isomorphic(q, cq)) {
      report.any_isomorphic = true;
    }
  }
  report.confirmed = report.quotient_size == 6 && report.min_generator_count == 3 &&
                     report.nilpotency_class == 4 && report.candidates.size() == 8 &&
                     with_f11 == 6 && report.class4_candidates.size() == 1 &&
                     !report.any_isomorphic;
  if (report.confirmed) {
    // The lone class-4 candidate must fail on generator count alone.
    FiniteSemigroup cq = conductor_cut_table(report.class4_candidates.front());
    report.confirmed = minimal_generating_system(cq).size() == 2;
  }
  return report;
}

json table_report_to_json(const TableReport& report) {
  json rows = json::array();
  for (const TableRow& row : report.rows) {
    json entries = json::array();
    for (const TableEntry& e : row.entries) {
      entries.push_back(json{{"semigroup", format_small_elements(e.semigroup)},
                             {"min_generators", e.semigroup.min_generators()},
                             {"irreducible", e.irreducible},
                             {"quotient_size", e.quotient.size()},
                             {"nilpotency_class", e.nilpotency_class},
                             {"iso_class", e.iso_class}});
    }
    rows.push_back(json{{"frobenius", row.frobenius}, {"entries", entries}});
  }
  return json{{"max_frobenius", report.max_frobenius}, {"rows", rows}};
}

std::string table_report_to_markdown(const TableReport& report) {
  std::ostringstream out;
  out << "| F | semigroups (small elements; * = irreducible; #n = isomorphism "
         "class among quotients of equal size) |\n";
  out << "|---|---|\n";
  for (const TableRow& row : report.rows) {
    out << "| " << row.frobenius << " | ";
    for (size_t i = 0; i < row.entries.size(); ++i) {
      const TableEntry& e = row.entries[i];
      if (i) {
        out << ", ";
      }
      out << format_small_elements(e.semigroup) << (e.irreducible ? "*" : "")
          << " #" << e.iso_class;
    }
    out << " |\n";
  }
  return out.str();
}

json scan_report_to_json(const ScanReport& report) {
  json sym = json::array();
  for (const NumericalSemigroup& s : report.symmetric) {
    sym.push_back(format_small_elements(s));
  }
  json cols = json::array();
  for (const ScanCollision& c : report.collisions) {
    cols.push_back(json{{"a", format_small_elements(c.a)},
                        {"b", format_small_elements(c.b)}});
  }
  return json{{"max_frobenius", report.max_frobenius},
              {"symmetric", sym},
              {"collisions", cols}};
}

json counterexample_report_to_json(const CounterexampleReport& report) {
  json cands = json::array();
  for (const NumericalSemigroup& s : report.candidates) {
    cands.push_back(format_small_elements(s));
  }
  json class4 = json::array();
  for (const NumericalSemigroup& s : report.class4_candidates) {
    class4.push_back(format_small_elements(s));
  }
  return json{{"semigroup", format_generators(report.semigroup)},
              {"quotient_size", report.quotient_size},
              {"min_generator_count", report.min_generator_count},
              {"nilpotency_class", report.nilpotency_class},
              {"candidates", cands},
              {"class4_candidates", class4},
              {"any_isomorphic", report.any_isomorphic},
              {"confirmed", report.confirmed}};
}

}  // namespace rqns
