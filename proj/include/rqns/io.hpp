#ifndef RQNS_IO_HPP_
#define RQNS_IO_HPP_

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "rqns/decider.hpp"
#include "rqns/finite_semigroup.hpp"
#include "rqns/ideal.hpp"
#include "rqns/numerical_semigroup.hpp"
#include "rqns/presentation.hpp"

namespace rqns {

// Compact small-element notation, e.g. "{3,5,6,8^>}": the ^> element is
// the conductor, from which everything on is a member.
std::string format_small_elements(const NumericalSemigroup& s);
// Generator notation, e.g. "<3,5>".
std::string format_generators(const NumericalSemigroup& s);

// Accepts both notations above.
NumericalSemigroup parse_semigroup(const std::string& text);

nlohmann::json semigroup_to_json(const NumericalSemigroup& s);
NumericalSemigroup semigroup_from_json(const nlohmann::json& j);

nlohmann::json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const nlohmann::json& j);

// {"elements":["3","5",...,"inf"], "zero":"inf", "table":[[...]]}
nlohmann::json table_to_json(const FiniteSemigroup& q);
FiniteSemigroup table_from_json(const nlohmann::json& j);

nlohmann::json presentation_to_json(const Presentation& p);

nlohmann::json certificate_to_json(const Certificate& c);

}  // namespace rqns

#endif  // RQNS_IO_HPP_
