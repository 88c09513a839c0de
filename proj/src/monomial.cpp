#include "hlvir/monomial.hpp"

#include <algorithm>

#include "hlvir/errors.hpp"
#include "hlvir/partition.hpp"
#include "hlvir/text.hpp"

namespace hlvir {

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_) {
    if (e < 0) throw InvalidArgument("negative exponent in monomial");
  }
  trim_and_grade();
}

void Monomial::trim_and_grade() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
  degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) degree_ += static_cast<int>(i + 1) * exps_[i];
}

Monomial Monomial::variable(int index, int power) {
  if (index < 1) throw InvalidArgument("variable index must be >= 1");
  std::vector<int> e(static_cast<std::size_t>(index));
  e.back() = power;
  return Monomial(std::move(e));
}

Monomial Monomial::from_parts(const std::vector<int>& parts) {
  std::vector<int> e;
  for (int p : parts) {
    if (p < 1) throw InvalidArgument("t_lambda needs positive parts");
    if (static_cast<int>(e.size()) < p) e.resize(static_cast<std::size_t>(p));
    ++e[static_cast<std::size_t>(p - 1)];
  }
  return Monomial(std::move(e));
}

std::vector<int> Monomial::to_parts() const {
  std::vector<int> parts;
  for (int i = static_cast<int>(exps_.size()); i >= 1; --i) {
    parts.insert(parts.end(), static_cast<std::size_t>(exps_[static_cast<std::size_t>(i - 1)]), i);
  }
  return parts;
}

Monomial Monomial::times_variable(int index, int power) const {
  Monomial m = *this;
  if (static_cast<int>(m.exps_.size()) < index) m.exps_.resize(static_cast<std::size_t>(index));
  int& e = m.exps_[static_cast<std::size_t>(index - 1)];
  e += power;
  if (e < 0) throw InvalidArgument("monomial exponent would become negative");
  m.degree_ += index * power;
  if (e == 0) m.trim_and_grade();
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  const auto& a = exps_;
  const auto& b = other.exps_;
  m.exps_.resize(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) m.exps_[i] += b[i];
  m.degree_ = degree_ + other.degree_;
  return m;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(i + 1);
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

Monomial Monomial::parse(std::string_view input) {
  input = text::trim(input);
  if (input.empty() || input == "1") return {};
  Monomial m;
  for (const auto& factor : text::split_top_level(input, '*')) {
    if (factor.size() < 2 || factor.front() != 't') throw InvalidArgument("malformed monomial factor '" + factor + "'");
    const auto caret = factor.find('^');
    int index = 0;
    int power = 1;
    try {
      index = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
      if (caret != std::string::npos) power = std::stoi(factor.substr(caret + 1));
    } catch (const std::exception&) {
      throw InvalidArgument("malformed monomial factor '" + factor + "'");
    }
    if (index < 1 || power < 0) throw InvalidArgument("malformed monomial factor '" + factor + "'");
    m = m.times_variable(index, power);
  }
  return m;
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  for (const auto& p : partitions_of(d)) out.push_back(Monomial::from_parts(p.parts()));
  std::sort(out.begin(), out.end(), CanonicalOrder{});
  return out;
}

std::vector<Monomial> monomials_up_to_degree(int d) {
  std::vector<Monomial> out;
  for (int k = d; k >= 0; --k) {
    auto level = monomials_of_degree(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace hlvir
