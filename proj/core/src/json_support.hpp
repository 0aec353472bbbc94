#pragma once

#include "json.hpp"
#include "milnor/polynomial.hpp"

namespace milnor::detail {

using json = nlohmann::ordered_json;

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

}  // namespace milnor::detail
