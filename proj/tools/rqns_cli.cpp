#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "rqns/catalog.hpp"
#include "rqns/decider.hpp"
#include "rqns/errors.hpp"
#include "rqns/io.hpp"
#include "rqns/morphisms.hpp"
#include "rqns/presentation.hpp"
#include "rqns/rees_quotient.hpp"
#include "rqns/varieties.hpp"

using nlohmann::json;

namespace {

int64_t frobenius_limit() {
  if (const char* env = std::getenv("RQNS_MAX_FROBENIUS")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw rqns::ParseError("RQNS_MAX_FROBENIUS: bad integer \"" +
                             std::string(env) + "\"");
    }
  }
  return 20;
}

rqns::FiniteSemigroup load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw rqns::ParseError(path + ": cannot open");
  }
  return rqns::table_from_json(json::parse(in));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw rqns::ParseError(path + ": cannot write");
  }
  out << content;
}

rqns::Ideal make_ideal(const rqns::NumericalSemigroup& s,
                       const std::vector<int64_t>& ideal_gens, int64_t cut) {
  if (!ideal_gens.empty()) {
    return rqns::Ideal::from_generators(s, ideal_gens);
  }
  return rqns::Ideal::cutting(s, cut);
}

int run_info(const std::string& sg) {
  rqns::NumericalSemigroup s = rqns::parse_semigroup(sg);
  std::cout << "semigroup        " << rqns::format_generators(s) << " = "
            << rqns::format_small_elements(s) << "\n"
            << "frobenius        " << s.frobenius() << "\n"
            << "conductor        " << s.conductor() << "\n"
            << "multiplicity     " << s.multiplicity() << "\n"
            << "embedding dim    " << s.embedding_dim() << "\n"
            << "genus            " << s.genus() << "\n"
            << "irreducible      " << (s.is_irreducible() ? "yes" : "no");
  if (s.is_symmetric()) {
    std::cout << " (symmetric)";
  } else if (s.is_pseudo_symmetric()) {
    std::cout << " (pseudo-symmetric)";
  }
  std::cout << "\n";
  return 0;
}

int run_quotient(const std::string& sg, const std::vector<int64_t>& ideal_gens,
                 int64_t cut, bool as_json) {
  rqns::NumericalSemigroup s = rqns::parse_semigroup(sg);
  rqns::ReesQuotient q(s, make_ideal(s, ideal_gens, cut));
  if (as_json) {
    std::cout << rqns::table_to_json(q.table()).dump(2) << "\n";
    return 0;
  }
  std::cout << "finite part     ";
  for (int64_t x : q.finite_part()) {
    std::cout << " " << x;
  }
  std::cout << "\n" << rqns::format_table(q.table());
  std::cout << "nilpotency class " << rqns::nilpotency_class(q.table()) << "\n";
  std::cout << "min generators  ";
  for (size_t g : rqns::minimal_generating_system(q.table())) {
    std::cout << " " << q.table().label(g);
  }
  std::cout << "\n";
  return 0;
}

int run_present(const std::string& sg, const std::vector<int64_t>& ideal_gens,
                int64_t cut, bool reduced) {
  rqns::NumericalSemigroup s = rqns::parse_semigroup(sg);
  if (ideal_gens.empty() && cut < 0) {
    std::cout << rqns::minimal_presentation(s).format() << "\n";
    return 0;
  }
  rqns::Ideal ideal = make_ideal(s, ideal_gens, cut);
  rqns::Presentation p = reduced ? rqns::reduced_quotient_presentation(s, ideal)
                                 : rqns::quotient_presentation(s, ideal);
  std::cout << p.format() << "\n";
  return 0;
}

int run_iso(const std::string& a_path, const std::string& b_path, bool all) {
  rqns::FiniteSemigroup a = load_table(a_path);
  rqns::FiniteSemigroup b = load_table(b_path);
  std::vector<rqns::SemigroupMap> maps = rqns::isomorphisms_via_generators(a, b);
  if (maps.empty()) {
    std::cout << "not isomorphic\n";
    return 1;
  }
  size_t shown = all ? maps.size() : 1;
  for (size_t i = 0; i < shown; ++i) {
    json m;
    for (const auto& [from, to] : maps[i].by_label(a, b)) {
      m[from] = to;
    }
    std::cout << m.dump() << "\n";
  }
  return 0;
}

int run_aut(const std::string& path) {
  rqns::FiniteSemigroup a = load_table(path);
  std::vector<rqns::SemigroupMap> maps = rqns::automorphism_group(a);
  std::cout << maps.size() << " automorphisms\n";
  for (const auto& f : maps) {
    json m;
    for (const auto& [from, to] : f.by_label(a, a)) {
      m[from] = to;
    }
    std::cout << m.dump() << "\n";
  }
  return 0;
}

int run_decide(const std::string& path, const std::string& cls, int64_t bound) {
  rqns::FiniteSemigroup q = load_table(path);
  rqns::Certificate cert = [&] {
    if (cls == "cn") {
      return rqns::decide_cn(q);
    }
    if (cls == "cqns") {
      return rqns::decide_cqns(q, bound);
    }
    if (cls == "rqns") {
      return rqns::decide_rqns(q, bound);
    }
    return rqns::check_ncap_com(q);
  }();
  std::cout << rqns::certificate_to_json(cert).dump(2) << "\n";
  switch (cert.verdict) {
    case rqns::Verdict::in_class:
      return 0;
    case rqns::Verdict::not_in_class:
      return 1;
    default:
      return 2;
  }
}

int run_table(int64_t max_f, const std::string& out_dir) {
  if (max_f > frobenius_limit()) {
    throw rqns::ResourceBound("table: max frobenius " + std::to_string(max_f) +
                              " exceeds limit " + std::to_string(frobenius_limit()));
  }
  rqns::TableReport report = rqns::build_table(max_f);
  write_file(out_dir + "/table.json", rqns::table_report_to_json(report).dump(2) + "\n");
  write_file(out_dir + "/table.md", rqns::table_report_to_markdown(report));
  for (const rqns::TableRow& row : report.rows) {
    size_t irr = 0;
    for (const rqns::TableEntry& e : row.entries) {
      irr += e.irreducible;
    }
    std::cout << "F=" << row.frobenius << ": " << row.entries.size()
              << " semigroups, " << irr << " irreducible\n";
  }
  return 0;
}

int run_scan(int64_t max_f, const std::string& out_path) {
  if (max_f > frobenius_limit()) {
    throw rqns::ResourceBound("scan-conjecture: max frobenius " +
                              std::to_string(max_f) + " exceeds limit " +
                              std::to_string(frobenius_limit()));
  }
  rqns::ScanReport report = rqns::scan_conjecture_symmetric(max_f);
  write_file(out_path, rqns::scan_report_to_json(report).dump(2) + "\n");
  std::cout << report.symmetric.size() << " symmetric semigroups, "
            << report.collisions.size() << " isomorphic pairs\n";
  return report.collisions.empty() ? 0 : 1;
}

int run_counterexample() {
  rqns::CounterexampleReport report = rqns::verify_non_irreducible_counterexample();
  std::cout << rqns::counterexample_report_to_json(report).dump(2) << "\n";
  return report.confirmed ? 0 : 1;
}

int run_separate(const std::string& text) {
  rqns::Identity id = rqns::Identity::parse(text);
  rqns::SeparationResult result = rqns::separating_index(id);
  rqns::FiniteSemigroup q = rqns::naturals_quotient(result.r);
  std::cout << "identity        " << id.format() << "\n"
            << "separating r    " << result.r << "\n"
            << "witness         " << result.witness.describe(id, q) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees quotients of numerical semigroups"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "cap worker threads");

  std::string semigroup, table_a, table_b, cls = "rqns", out_dir = ".";
  std::string out_path = "conjecture_scan.json", identity;
  std::vector<int64_t> ideal_gens;
  int64_t cut = -1, bound = 0, max_f = 10;
  bool as_json = false, reduced = false, all = false;

  CLI::App* info = app.add_subcommand("info", "notable elements of a semigroup");
  info->add_option("semigroup", semigroup)->required();

  CLI::App* quotient = app.add_subcommand("quotient", "Rees quotient by an ideal");
  quotient->add_option("semigroup", semigroup)->required();
  auto* qcut = quotient->add_option("--cut", cut, "cutting point");
  quotient->add_option("--ideal", ideal_gens, "ideal generators")->excludes(qcut);
  quotient->add_flag("--json", as_json, "emit the table as JSON");

  CLI::App* present = app.add_subcommand("present", "presentations");
  present->add_option("semigroup", semigroup)->required();
  auto* pcut = present->add_option("--cut", cut, "cutting point");
  present->add_option("--ideal", ideal_gens, "ideal generators")->excludes(pcut);
  present->add_flag("--reduced", reduced, "reduced presentation over the finite part");

  CLI::App* iso = app.add_subcommand("iso", "isomorphism test between two tables");
  iso->add_option("a", table_a)->required();
  iso->add_option("b", table_b)->required();
  iso->add_flag("--all", all, "list every isomorphism");

  CLI::App* aut = app.add_subcommand("aut", "automorphism group of a table");
  aut->add_option("table", table_a)->required();

  CLI::App* decide = app.add_subcommand("decide", "classify a table");
  decide->add_option("table", table_a)->required();
  decide->add_option("--class", cls, "cn|cqns|rqns|ncom")
      ->check(CLI::IsMember({"cn", "cqns", "rqns", "ncom"}));
  decide->add_option("--bound", bound, "label bound for the realization search");

  CLI::App* table = app.add_subcommand("table", "catalog with isomorphism classes");
  table->add_option("--max-frobenius", max_f);
  table->add_option("--out", out_dir, "output directory");

  CLI::App* scan = app.add_subcommand("scan-conjecture",
                                      "pairwise scan of symmetric semigroups");
  scan->add_option("--max-frobenius", max_f);
  scan->add_option("--out", out_path, "report path");

  app.add_subcommand("verify-counterexample",
                     "no irreducible semigroup yields the <4,11,13,18> quotient");

  CLI::App* separate = app.add_subcommand("separate",
                                          "least quotient of N failing an identity");
  separate->add_option("identity", identity, "e.g. \"x^2*y = x*y^2\" or \"x^3 = 0\"")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

#ifdef _OPENMP
  if (threads > 0) {
    omp_set_num_threads(threads);
  }
#endif

  try {
    if (info->parsed()) {
      return run_info(semigroup);
    }
    if (quotient->parsed()) {
      return run_quotient(semigroup, ideal_gens, cut, as_json);
    }
    if (present->parsed()) {
      return run_present(semigroup, ideal_gens, cut, reduced);
    }
    if (iso->parsed()) {
      return run_iso(table_a, table_b, all);
    }
    if (aut->parsed()) {
      return run_aut(table_a);
    }
    if (decide->parsed()) {
      return run_decide(table_a, cls, bound);
    }
    if (table->parsed()) {
      return run_table(max_f, out_dir);
    }
    if (scan->parsed()) {
      return run_scan(max_f, out_path);
    }
    if (separate->parsed()) {
      return run_separate(identity);
    }
    return run_counterexample();
  } catch (const rqns::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const rqns::ResourceBound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
