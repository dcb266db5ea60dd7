#include "rqns/varieties.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rqns/errors.hpp"
#include "rqns/rees_quotient.hpp"

namespace rqns {

namespace {

std::string format_side(const std::vector<std::string>& vars,
                        const std::vector<int>& exps) {
  std::string out;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (exps[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += "*";
    }
    out += vars[i];
    if (exps[i] > 1) {
      out += "^" + std::to_string(exps[i]);
    }
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string Identity::format() const {
  return format_side(variables, lhs) + " = " +
         (rhs ? format_side(variables, *rhs) : std::string("0"));
}

Identity Identity::parse(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) {
    throw ParseError("identity: expected '=' in \"" + text + "\"");
  }
  auto strip = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(),
                           [](unsigned char c) { return std::isspace(c); }),
            s.end());
    return s;
  };
  std::string left = strip(text.substr(0, eq));
  std::string right = strip(text.substr(eq + 1));
  if (left.empty() || right.empty()) {
    throw ParseError("identity: empty side in \"" + text + "\"");
  }

  Identity id;
  auto var_index = [&id](const std::string& name) {
    for (size_t i = 0; i < id.variables.size(); ++i) {
      if (id.variables[i] == name) {
        return i;
      }
    }
    id.variables.push_back(name);
    return id.variables.size() - 1;
  };
  auto parse_side = [&](const std::string& side) {
    std::vector<int> exps(id.variables.size(), 0);
    std::stringstream ss(side);
    std::string term;
    while (std::getline(ss, term, '*')) {
      if (term.empty()) {
        throw ParseError("identity: empty factor in \"" + side + "\"");
      }
      std::string name = term;
      int exp = 1;
      auto caret = term.find('^');
      if (caret != std::string::npos) {
        name = term.substr(0, caret);
        try {
          exp = std::stoi(term.substr(caret + 1));
        } catch (const std::exception&) {
          throw ParseError("identity: bad exponent in \"" + term + "\"");
        }
      }
      if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])) || exp < 1) {
        throw ParseError("identity: bad factor \"" + term + "\"");
      }
      size_t v = var_index(name);
      exps.resize(id.variables.size(), 0);
      exps[v] += exp;
    }
    return exps;
  };
  id.lhs = parse_side(left);
  if (right != "0") {
    id.rhs = parse_side(right);
    id.lhs.resize(id.variables.size(), 0);
    id.rhs->resize(id.variables.size(), 0);
  } else {
    id.lhs.resize(id.variables.size(), 0);
  }
  return id;
}

std::string IdentityWitness::describe(const Identity& id,
                                      const FiniteSemigroup& q) const {
  std::string out;
  for (size_t i = 0; i < assignment.size(); ++i) {
    out += (i ? ", " : "") + id.variables[i] + "=" + q.label(assignment[i]);
  }
  return out;
}

namespace {

std::optional<size_t> evaluate_side(const FiniteSemigroup& q,
                                    const std::vector<int>& exps,
                                    const std::vector<size_t>& assignment) {
  bool have = false;
  size_t value = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    for (int e = 0; e < exps[i]; ++e) {
      value = have ? static_cast<size_t>(q.product(value, assignment[i])) : assignment[i];
      have = true;
    }
  }
  return have ? std::optional<size_t>(value) : std::nullopt;
}

}  // namespace

std::optional<IdentityWitness> falsifying_assignment(const FiniteSemigroup& q,
                                                     const Identity& id) {
  size_t n = id.variables.size();
  std::vector<size_t> assignment(n, 0);
  while (true) {
    auto left = evaluate_side(q, id.lhs, assignment);
    bool holds;
    if (id.is_zero_equation()) {
      holds = left == std::optional<size_t>(q.zero());
    } else {
      holds = left == evaluate_side(q, *id.rhs, assignment);
    }
    if (!holds) {
      return IdentityWitness{assignment};
    }
    size_t i = n;
    while (i > 0) {
      if (++assignment[i - 1] < q.size()) {
        break;
      }
      assignment[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      return std::nullopt;
    }
  }
}

std::optional<int> nilpotency_class_opt(const FiniteSemigroup& q) {
  try {
    return nilpotency_class(q);
  } catch (const NotNilpotent&) {
    return std::nullopt;
  }
}

int64_t separation_bound(const Identity& id) {
  int64_t sum_l = 0;
  for (int e : id.lhs) {
    sum_l += e;
  }
  if (id.is_zero_equation()) {
    return 1 + sum_l;
  }
  int64_t sum_r = 0;
  for (int e : *id.rhs) {
    sum_r += e;
  }
  if (id.variables.size() <= 1) {
    // Single-variable equations: the paper's max over 2 <= i <= n is
    // empty, so cap with the sums plus the largest single exponent.
    int64_t big = std::max(sum_l, sum_r);
    return 1 + big + big;
  }
  int64_t best = std::max(sum_l, sum_r);
  for (size_t i = 1; i < id.lhs.size(); ++i) {
    best = std::max(best, sum_l + id.lhs[i]);
  }
  return 1 + best;
}

SeparationResult separating_index(const Identity& id) {
  if (id.is_trivial()) {
    throw TrivialIdentity("separating_index: identity holds in every semigroup");
  }
  int64_t cap = separation_bound(id);
  for (int64_t r = 1; r <= cap; ++r) {
    FiniteSemigroup q = naturals_quotient(r);
    if (auto w = falsifying_assignment(q, id)) {
      return SeparationResult{r, *w};
    }
  }
  throw ResourceBound("separating_index: no quotient of N up to r=" +
                      std::to_string(cap) + " falsifies " + id.format());
}

}  // namespace rqns
