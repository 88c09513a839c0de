#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hlvir/rho.hpp"
#include "hlvir/serialize.hpp"
#include "hlvir/structure.hpp"
#include "hlvir/vertex.hpp"

namespace hlvir {

enum class CaseKind {
  Positive,           // "T1.1": L_m^(n) Q_lambda, m >= 0, at xi_n
  Negative,           // "T1.2": L_{-m}^(n) Q_lambda, m >= 1, at xi_n
  NegativeFirstOrder, // "T3.3": Lhat_{-m}^(n) Q_lambda, m >= 1, at xi_n
  PowerProducts,      // "VmQ":  V_m^(n) Q_lambda, m >= 1, at xi_n
  SchurPositive,      // "TA.3": L_m^S s_lambda, m >= 1
  SchurNegative,      // "TA.4": L_{-m}^S s_lambda, m >= 1
  SchurVacuum,        // "baseA": L_{-m}^S 1
  HookProducts,       // "remarkA": sum_k p_k p_{m-k} as a signed hook sum
  Bracket,            // "bracket": [L_i, L_j] on monomials of degree <= D
  Multiplication,     // "mult": p_r Q_lambda
  Derivative,         // "deriv": d/dt_r Q_lambda
  Exchange,           // "exchange": B_{i-1}B_j - rho B_i B_{j-1} = rho B_j B_{i-1} - B_{j-1}B_i
  PowerTimesB,        // "pB": p_r B_m = B_m p_r + B_{m+r}
  AdjointTimesB,      // "perpB": t_r^perp B_m = B_{m-r}/r + B_m t_r^perp
  ShiftedSum,         // "sumB": sum_k (1-rho^k) B_{r-k} p_k on homogeneous input
  LhatCommutator,     // "LhatB": [Lhat_m^(n), B_r] at xi_n
  LtildeCommutator,   // "LtildeB": [Ltilde_m^(n), B_r] at xi_n, m >= 0
  SchurHatCommutator, // "LShatB": [LShat_m, B_r] at rho = 0
  SchurCommutator,    // "LSB": [L_m^S, B_r] at rho = 0, m != 0
};

struct IdentityCase {
  IdentityCase() = default;
  explicit IdentityCase(CaseKind k) : kind(k) {}

  CaseKind kind = CaseKind::Positive;
  int n = 2;
  int m = 1;
  int i = 0;
  int j = 0;
  int r = 1;
  int degree = 6;
  LambdaVector lambda;
  RhoSpec rho = RhoSpec::generic();  // used by mult, deriv, exchange, pB, perpB, sumB

  static CaseKind parse_kind(std::string_view id);
  static std::string_view kind_id(CaseKind kind);
  static const std::vector<std::string_view>& all_ids();

  [[nodiscard]] std::string id() const { return std::string(kind_id(kind)); }
  /// Only the parameters the case reads.
  [[nodiscard]] Json to_json() const;
  [[nodiscard]] std::string to_string() const;
};

struct Verdict {
  Json info;
  bool equal = false;
  std::string lhs;
  std::string rhs;
  std::string diff;
  Json lhs_json;
  Json rhs_json;
  Json diff_json;
  /// The right-hand side as a Q-combination, when the case has one.
  std::string expansion;
  /// Extra facts: the central constant of a bracket case, or the first failing monomial.
  std::string note;

  /// {"case", "equal", "lhs", "rhs", "diff"} plus optional "expansion" and "note".
  [[nodiscard]] Json to_json() const;
  [[nodiscard]] std::string to_text() const;
};

/// Engines and structures shared across cases, one per field.
class Workspace {
 public:
  explicit Workspace(CacheOptions cache = CacheOptions::from_environment()) : cache_(cache) {}

  template <CoeffField K>
  QEngine<K>& engine(const K& field) {
    return get<QEngine<K>>(engines_, field, [&] { return std::make_shared<QEngine<K>>(field, cache_); });
  }
  template <CoeffField K>
  Structure<K>& structure(const K& field) {
    return get<Structure<K>>(structures_, field, [&] { return std::make_shared<Structure<K>>(field); });
  }
  [[nodiscard]] const CacheOptions& cache() const { return cache_; }

 private:
  template <class T, class K, class Make>
  T& get(std::map<std::string, std::shared_ptr<void>>& table, const K& field, Make make) {
    const std::string key = field.description();
    auto it = table.find(key);
    if (it == table.end()) it = table.emplace(key, make()).first;
    return *static_cast<T*>(it->second.get());
  }

  CacheOptions cache_;
  std::map<std::string, std::shared_ptr<void>> engines_;
  std::map<std::string, std::shared_ptr<void>> structures_;
};

/// Evaluates both sides of `c` exactly. Throws InvalidArgument when the parameters
/// violate the case's hypotheses, SingularCoefficient / AdjointUndefined when a
/// needed coefficient does not exist at the chosen rho.
Verdict verify_case(const IdentityCase& c, Workspace& workspace);

/// n^2 (n-1) (i^3 - i) / 12 when i + j = 0, else 0.
Rational central_term(int n, int i, int j);

}  // namespace hlvir
