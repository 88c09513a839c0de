#include "hlvir/serialize.hpp"

namespace hlvir {

Json monomial_to_json(const Monomial& m) {
  Json out = Json::object();
  for (int i = 1; i <= m.max_variable(); ++i) {
    if (m.exponent(i) != 0) out[std::to_string(i)] = m.exponent(i);
  }
  return out;
}

Monomial monomial_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("monomial JSON must be an object");
  Monomial m;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int index = 0;
    try {
      index = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size() || index < 1) throw InvalidArgument("bad variable index '" + key + "'");
    if (!value.is_number_integer() || value.get<int>() < 0) throw InvalidArgument("exponents are non-negative integers");
    m = m.times_variable(index, value.get<int>());
  }
  return m;
}

std::pair<std::string, std::string> split_poly_term(std::string_view body) {
  body = text::trim(body);
  if (!body.empty() && body.front() == 't') return {"", std::string(body)};
  int depth = 0;
  for (std::size_t i = 0; i + 1 < body.size(); ++i) {
    if (body[i] == '(' || body[i] == '[') ++depth;
    if (body[i] == ')' || body[i] == ']') --depth;
    if (depth == 0 && body[i] == '*' && body[i + 1] == 't') {
      return {std::string(body.substr(0, i)), std::string(body.substr(i + 1))};
    }
  }
  return {std::string(body), ""};
}

}  // namespace hlvir
