#include "hlvir/virasoro.hpp"

#include <array>
#include <utility>

#include "hlvir/text.hpp"

namespace hlvir {

namespace {

constexpr std::array<std::pair<OperatorFamily, std::string_view>, 8> kFamilies{{
    {OperatorFamily::L, "L"},
    {OperatorFamily::Lhat, "Lhat"},
    {OperatorFamily::Ltilde, "Ltilde"},
    {OperatorFamily::W, "W"},
    {OperatorFamily::V, "V"},
    {OperatorFamily::LS, "LS"},
    {OperatorFamily::LShat, "LShat"},
    {OperatorFamily::WS, "WS"},
}};

bool is_schur(OperatorFamily family) {
  return family == OperatorFamily::LS || family == OperatorFamily::LShat || family == OperatorFamily::WS;
}

int parse_int(std::string_view text, std::string_view what) {
  const std::string s(text::trim(text));
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw InvalidArgument("malformed " + std::string(what) + " '" + s + "'");
  return value;
}

Rational half(long num) { return Rational(num, 2); }

}  // namespace

std::string_view family_name(OperatorFamily family) {
  for (const auto& [f, name] : kFamilies) {
    if (f == family) return name;
  }
  return "?";
}

VirasoroSpec VirasoroSpec::parse(std::string_view input) {
  const auto t = text::trim(input);
  const auto colon = t.find(':');
  const auto name = text::trim(t.substr(0, colon));
  VirasoroSpec spec;
  bool known = false;
  for (const auto& [f, n] : kFamilies) {
    if (n == name) {
      spec.family = f;
      known = true;
    }
  }
  if (!known) throw InvalidArgument("unknown operator family '" + std::string(name) + "'");
  bool have_n = false;
  bool have_m = false;
  if (colon != std::string_view::npos) {
    for (const auto& item : text::split_top_level(t.substr(colon + 1), ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw InvalidArgument("expected key=value in operator, got '" + item + "'");
      const auto key = text::trim(std::string_view(item).substr(0, eq));
      const auto value = std::string_view(item).substr(eq + 1);
      if (key == "n") {
        spec.n = parse_int(value, "n");
        have_n = true;
      } else if (key == "m") {
        spec.m = parse_int(value, "m");
        have_m = true;
      } else {
        throw InvalidArgument("unknown operator parameter '" + std::string(key) + "'");
      }
    }
  }
  if (!have_m) throw InvalidArgument("operator needs m");
  if (!is_schur(spec.family) && !have_n) throw InvalidArgument("operator needs n");
  if (is_schur(spec.family) && have_n) throw InvalidArgument("Schur operators take no n");
  spec.validate();
  return spec;
}

std::string VirasoroSpec::to_string() const {
  std::string out(family_name(family));
  out += ":";
  if (!is_schur(family)) out += "n=" + std::to_string(n) + ",";
  out += "m=" + std::to_string(m);
  return out;
}

void VirasoroSpec::validate() const {
  const std::string name(family_name(family));
  if (is_schur(family)) {
    if (n != 0) throw InvalidArgument(name + " takes no n");
    return;
  }
  if (n < 2) throw InvalidArgument(name + " needs n >= 2");
  if ((family == OperatorFamily::W || family == OperatorFamily::Ltilde) && m < 0) {
    throw InvalidArgument(name + " needs m >= 0");
  }
  if (family == OperatorFamily::V && m < 1) throw InvalidArgument("V needs m >= 1");
}

QCombination<Rational> rhs_schur_positive(int m, const LambdaVector& lambda) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  QCombination<Rational> out;
  for (int i = 1; i <= lambda.length(); ++i) {
    out.add(lambda.plus_at(i, -m), Rational(lambda[i - 1]) - half(2L * i + m - 1));
  }
  return out;
}

QCombination<Rational> rhs_schur_negative(int m, const LambdaVector& lambda) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  QCombination<Rational> out;
  const int l = lambda.length();
  for (int i = 1; i <= l; ++i) {
    out.add(lambda.plus_at(i, m), Rational(lambda[i - 1] - i) + half(m + 1));
  }
  for (int k = 1; k <= m; ++k) {
    const Rational sign((m - k) % 2 == 0 ? 1 : -1);
    out.add(lambda.concat(hook(k, m - k)), -sign * (Rational(l - k) + half(m + 1)));
  }
  return out;
}

QCombination<Rational> rhs_schur_vacuum(int m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  QCombination<Rational> out;
  for (int k = 1; k <= m; ++k) {
    const Rational sign((m - k + 1) % 2 == 0 ? 1 : -1);
    out.add(hook(k, m - k), sign * (Rational(-k) + half(m + 1)));
  }
  return out;
}

QCombination<Rational> rhs_hook_products(int m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  QCombination<Rational> out;
  for (int k = 1; k <= m; ++k) {
    const Rational sign((m - k) % 2 == 0 ? 1 : -1);
    out.add(hook(k, m - k), sign * Rational(2 * k - m - 1));
  }
  return out;
}

}  // namespace hlvir
