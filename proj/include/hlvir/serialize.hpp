#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hlvir/errors.hpp"
#include "hlvir/field.hpp"
#include "hlvir/qcombination.hpp"
#include "hlvir/text.hpp"
#include "hlvir/tpoly.hpp"

namespace hlvir {

using Json = nlohmann::json;

/// {"1": 2, "3": 1} for t1^2*t3.
Json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

/// [{"monomial": {...}, "coeff": "..."}, ...] in canonical term order.
template <class F>
Json poly_to_json(const TPoly<F>& f) {
  Json out = Json::array();
  for (const auto& [m, c] : f.terms()) out.push_back({{"monomial", monomial_to_json(m)}, {"coeff", c.to_string()}});
  return out;
}

template <CoeffField K>
TPoly<typename K::value_type> poly_from_json(const Json& j, const K& field) {
  if (!j.is_array()) throw InvalidArgument("polynomial JSON must be an array");
  TPoly<typename K::value_type> out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("monomial") || !term.contains("coeff") || !term["coeff"].is_string()) {
      throw InvalidArgument("polynomial term needs \"monomial\" and a string \"coeff\"");
    }
    out.add_term(monomial_from_json(term["monomial"]), field.parse(term["coeff"].get<std::string>()));
  }
  return out;
}

/// [{"label": [2,1], "coeff": "..."}, ...] in label order.
template <class F>
Json combination_to_json(const QCombination<F>& q) {
  Json out = Json::array();
  for (const auto& [label, c] : q.terms()) out.push_back({{"label", label.parts()}, {"coeff", c.to_string()}});
  return out;
}

template <CoeffField K>
QCombination<typename K::value_type> combination_from_json(const Json& j, const K& field) {
  if (!j.is_array()) throw InvalidArgument("combination JSON must be an array");
  QCombination<typename K::value_type> out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("label") || !term["label"].is_array() || !term.contains("coeff") ||
        !term["coeff"].is_string()) {
      throw InvalidArgument("combination term needs an array \"label\" and a string \"coeff\"");
    }
    std::vector<int> parts;
    for (const auto& p : term["label"]) {
      if (!p.is_number_integer()) throw InvalidArgument("labels hold integers");
      parts.push_back(p.get<int>());
    }
    out.add(LambdaVector(std::move(parts)), field.parse(term["coeff"].get<std::string>()));
  }
  return out;
}

/// Splits one printed term "coeff*t1^2*t3" into its coefficient and monomial text.
/// The monomial starts at the first depth-0 "*t"; a body starting with 't' has coefficient 1.
std::pair<std::string, std::string> split_poly_term(std::string_view body);

/// Inverse of TPoly::to_string for coefficients of `field`.
template <CoeffField K>
TPoly<typename K::value_type> poly_from_text(std::string_view input, const K& field) {
  TPoly<typename K::value_type> out;
  const auto t = text::trim(input);
  if (t == "0") return out;
  if (t.empty()) throw InvalidArgument("empty polynomial");
  for (const auto& term : text::split_signed_terms(t)) {
    auto [coeff_text, mono_text] = split_poly_term(term.body);
    // Rational functions print their own parentheses; other sums are wrapped by the term printer.
    const auto inner = std::is_same_v<K, RationalFunctionField> ? std::string_view(coeff_text)
                                                                 : text::strip_parens(coeff_text);
    auto c = coeff_text.empty() ? field.one() : field.parse(inner);
    if (term.negative) c = -c;
    out.add_term(mono_text.empty() ? Monomial() : Monomial::parse(mono_text), c);
  }
  return out;
}

}  // namespace hlvir
