#include "hlvir/rho.hpp"

#include "hlvir/text.hpp"

namespace hlvir {

RhoSpec RhoSpec::root_of_unity(int n) {
  if (n < 2) throw InvalidArgument("root of unity order must be at least 2");
  return RhoSpec(RootOfUnity{n});
}

RhoSpec RhoSpec::parse(std::string_view input, int max_order) {
  const auto t = text::trim(input);
  if (t == "generic") return generic();
  if (t.substr(0, 3) == "xi:") {
    const std::string digits(t.substr(3));
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(digits, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("malformed root of unity '" + std::string(t) + "'");
    }
    if (used != digits.size()) throw InvalidArgument("malformed root of unity '" + std::string(t) + "'");
    if (n > max_order) {
      throw InvalidArgument("root of unity order " + std::to_string(n) + " exceeds the limit " +
                            std::to_string(max_order));
    }
    return root_of_unity(n);
  }
  return rational(Rational::parse(t));
}

int RhoSpec::order() const {
  if (const auto* r = std::get_if<RootOfUnity>(&value_)) return r->order;
  return 0;
}

std::string RhoSpec::to_string() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->to_string();
  if (const auto* r = std::get_if<RootOfUnity>(&value_)) return "xi:" + std::to_string(r->order);
  return "generic";
}

}  // namespace hlvir
