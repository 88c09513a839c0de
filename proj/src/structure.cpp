#include "hlvir/structure.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace hlvir {

UniPoly phi_poly(int k) {
  UniPoly out = UniPoly::constant(Rational(1));
  for (int i = 1; i <= k; ++i) out = out * (UniPoly::constant(Rational(1)) - UniPoly::monomial(Rational(1), i));
  return out;
}

UniPoly b_poly(const Partition& mu) {
  UniPoly out = UniPoly::constant(Rational(1));
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out = out * phi_poly(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

RatFunc c_coeff_generic(const Partition& mu) {
  const int l = mu.length();
  if (l == 0) throw InvalidArgument("c_mu needs a nonempty partition");
  const int shift = mu.n_statistic() - l * (l - 1) / 2;
  const Rational sign((l - 1) % 2 == 0 ? 1 : -1);
  const UniPoly num = UniPoly::monomial(sign, shift) * phi_poly(l - 1);
  return RatFunc(num, b_poly(mu));
}

namespace {

using Cell = std::pair<int, int>;

bool is_border_strip(const Partition& outer, const Partition& inner) {
  std::set<Cell> cells;
  for (int i = 0; i < outer.length(); ++i) {
    const int start = i < inner.length() ? inner[i] : 0;
    for (int j = start; j < outer[i]; ++j) cells.insert({i, j});
  }
  if (cells.empty()) return false;
  for (const auto& [i, j] : cells) {
    if (cells.count({i + 1, j}) && cells.count({i, j + 1}) && cells.count({i + 1, j + 1})) return false;
  }
  std::set<Cell> seen{*cells.begin()};
  std::queue<Cell> todo;
  todo.push(*cells.begin());
  while (!todo.empty()) {
    const auto [i, j] = todo.front();
    todo.pop();
    for (const Cell& next : {Cell{i + 1, j}, Cell{i - 1, j}, Cell{i, j + 1}, Cell{i, j - 1}}) {
      if (cells.count(next) && seen.insert(next).second) todo.push(next);
    }
  }
  return seen.size() == cells.size();
}

int strip_height(const Partition& outer, const Partition& inner) {
  int rows = 0;
  for (int i = 0; i < outer.length(); ++i) {
    const int start = i < inner.length() ? inner[i] : 0;
    if (outer[i] > start) ++rows;
  }
  return rows - 1;
}

}  // namespace

QCombination<Rational> mn_expand(int r, const Partition& lambda) {
  if (r < 1) throw InvalidArgument("border strip size must be at least 1");
  QCombination<Rational> out;
  for (const auto& mu : partitions_of(lambda.size() + r)) {
    if (!mu.contains(lambda) || !is_border_strip(mu, lambda)) continue;
    out.add(LambdaVector(mu), Rational(strip_height(mu, lambda) % 2 == 0 ? 1 : -1));
  }
  return out;
}

}  // namespace hlvir
