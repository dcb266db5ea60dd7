#include "rqns/io.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rqns/errors.hpp"

namespace rqns {

using nlohmann::json;

std::string format_small_elements(const NumericalSemigroup& s) {
  std::ostringstream out;
  out << "{";
  for (int64_t x : s.small_elements()) {
    if (x != s.small_elements().front()) {
      out << ",";
    }
    out << x;
  }
  out << "^>}";
  return out.str();
}

std::string format_generators(const NumericalSemigroup& s) {
  std::ostringstream out;
  out << "<";
  for (size_t i = 0; i < s.min_generators().size(); ++i) {
    out << (i ? "," : "") << s.min_generators()[i];
  }
  out << ">";
  return out.str();
}

namespace {

std::vector<int64_t> parse_int_list(const std::string& body, const std::string& ctx) {
  std::vector<int64_t> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw ParseError(ctx + ": bad integer \"" + item + "\"");
    }
  }
  if (out.empty()) {
    throw ParseError(ctx + ": empty list");
  }
  return out;
}

}  // namespace

NumericalSemigroup parse_semigroup(const std::string& text) {
  std::string t = text;
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.size() >= 2 && t.front() == '<' && t.back() == '>') {
    return NumericalSemigroup::from_generators(
        parse_int_list(t.substr(1, t.size() - 2), "generators"));
  }
  if (t.size() >= 4 && t.front() == '{' && t.substr(t.size() - 3) == "^>}") {
    std::vector<int64_t> smalls =
        parse_int_list(t.substr(1, t.size() - 4), "small elements");
    return NumericalSemigroup::from_small_elements(smalls, smalls.back());
  }
  throw ParseError("semigroup: expected <g1,g2,...> or {s1,...,c^>}, got \"" + text +
                   "\"");
}

json semigroup_to_json(const NumericalSemigroup& s) {
  return json{{"min_generators", s.min_generators()},
              {"small_elements", s.small_elements()},
              {"conductor", s.conductor()}};
}

NumericalSemigroup semigroup_from_json(const json& j) {
  NumericalSemigroup s = NumericalSemigroup::from_generators(
      j.at("min_generators").get<std::vector<int64_t>>());
  if (j.contains("small_elements") &&
      s.small_elements() != j.at("small_elements").get<std::vector<int64_t>>()) {
    throw ParseError("semigroup json: small_elements disagree with generators");
  }
  if (j.contains("conductor") && s.conductor() != j.at("conductor").get<int64_t>()) {
    throw ParseError("semigroup json: conductor disagrees with generators");
  }
  return s;
}

json ideal_to_json(const Ideal& ideal) {
  return json{{"ambient", semigroup_to_json(ideal.ambient())},
              {"ideal_generators", ideal.min_generators()}};
}

Ideal ideal_from_json(const json& j) {
  return Ideal::from_generators(semigroup_from_json(j.at("ambient")),
                                j.at("ideal_generators").get<std::vector<int64_t>>());
}

json table_to_json(const FiniteSemigroup& q) {
  return json{{"elements", q.elements()},
              {"zero", q.label(q.zero())},
              {"table", q.table()}};
}

FiniteSemigroup table_from_json(const json& j) {
  auto elements = j.at("elements").get<std::vector<std::string>>();
  auto zero_label = j.at("zero").get<std::string>();
  auto it = std::find(elements.begin(), elements.end(), zero_label);
  if (it == elements.end()) {
    throw ParseError("table json: zero label not among elements");
  }
  return FiniteSemigroup(elements, static_cast<size_t>(it - elements.begin()),
                         j.at("table").get<std::vector<std::vector<int>>>());
}

json presentation_to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& [u, v] : p.relations) {
    rels.push_back(json{{"lhs", u}, {"rhs", v}});
  }
  json zeros = json::array();
  for (const auto& u : p.zero_relations) {
    zeros.push_back(u);
  }
  return json{{"generators", p.generators},
              {"relations", rels},
              {"zero_relations", zeros}};
}

json certificate_to_json(const Certificate& c) {
  json out{{"verdict", to_string(c.verdict)},
           {"class", to_string(c.class_name)},
           {"reason", c.reason},
           {"bound_used", c.bound_used}};
  if (c.realization) {
    out["realization"] = json{{"semigroup", semigroup_to_json(c.realization->semigroup)},
                              {"ideal_generators", c.realization->ideal.min_generators()},
                              {"labeling", c.realization->labeling}};
  }
  return out;
}

}  // namespace rqns
