#include "hlvir/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <utility>

#include "hlvir/virasoro.hpp"

namespace hlvir {

namespace {

constexpr std::array<std::pair<CaseKind, std::string_view>, 19> kCaseIds{{
    {CaseKind::Positive, "T1.1"},
    {CaseKind::Negative, "T1.2"},
    {CaseKind::NegativeFirstOrder, "T3.3"},
    {CaseKind::PowerProducts, "VmQ"},
    {CaseKind::SchurPositive, "TA.3"},
    {CaseKind::SchurNegative, "TA.4"},
    {CaseKind::SchurVacuum, "baseA"},
    {CaseKind::HookProducts, "remarkA"},
    {CaseKind::Bracket, "bracket"},
    {CaseKind::Multiplication, "mult"},
    {CaseKind::Derivative, "deriv"},
    {CaseKind::Exchange, "exchange"},
    {CaseKind::PowerTimesB, "pB"},
    {CaseKind::AdjointTimesB, "perpB"},
    {CaseKind::ShiftedSum, "sumB"},
    {CaseKind::LhatCommutator, "LhatB"},
    {CaseKind::LtildeCommutator, "LtildeB"},
    {CaseKind::SchurHatCommutator, "LShatB"},
    {CaseKind::SchurCommutator, "LSB"},
}};

enum Param : unsigned { kN = 1, kM = 2, kI = 4, kJ = 8, kR = 16, kDegree = 32, kLambda = 64, kRho = 128 };

unsigned params_of(CaseKind kind) {
  switch (kind) {
    case CaseKind::Positive:
    case CaseKind::Negative:
    case CaseKind::NegativeFirstOrder:
    case CaseKind::PowerProducts:
      return kN | kM | kLambda;
    case CaseKind::SchurPositive:
    case CaseKind::SchurNegative:
      return kM | kLambda;
    case CaseKind::SchurVacuum:
    case CaseKind::HookProducts:
      return kM;
    case CaseKind::Bracket:
      return kN | kI | kJ | kDegree;
    case CaseKind::Multiplication:
    case CaseKind::Derivative:
      return kR | kLambda | kRho;
    case CaseKind::Exchange:
      return kI | kJ | kDegree | kRho;
    case CaseKind::PowerTimesB:
    case CaseKind::AdjointTimesB:
      return kR | kM | kDegree | kRho;
    case CaseKind::ShiftedSum:
      return kR | kDegree | kRho;
    case CaseKind::LhatCommutator:
    case CaseKind::LtildeCommutator:
      return kN | kM | kR | kDegree;
    case CaseKind::SchurHatCommutator:
    case CaseKind::SchurCommutator:
      return kM | kR | kDegree;
  }
  return 0;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

template <class F>
void fill_sides(Verdict& v, const TPoly<F>& lhs, const TPoly<F>& rhs) {
  const auto diff = lhs - rhs;
  v.equal = diff.is_zero();
  v.lhs = lhs.to_string();
  v.rhs = rhs.to_string();
  v.diff = diff.to_string();
  v.lhs_json = poly_to_json(lhs);
  v.rhs_json = poly_to_json(rhs);
  v.diff_json = poly_to_json(diff);
}

template <class F>
Verdict compare(const IdentityCase& c, const TPoly<F>& lhs, const TPoly<F>& rhs) {
  Verdict v;
  v.info = c.to_json();
  fill_sides(v, lhs, rhs);
  return v;
}

template <class F>
Verdict compare(const IdentityCase& c, const TPoly<F>& lhs, const TPoly<F>& rhs, const QCombination<F>& expansion) {
  Verdict v = compare(c, lhs, rhs);
  v.expansion = expansion.to_string();
  return v;
}

/// Compares two linear maps on every monomial of degree <= c.degree. The reported
/// sides are the images of the sum of all probes, or of the first failing monomial.
template <CoeffField K, class Lhs, class Rhs>
Verdict compare_on_monomials(const IdentityCase& c, const K& field, Lhs lhs_map, Rhs rhs_map) {
  using Poly = TPoly<typename K::value_type>;
  Poly lhs_total;
  Poly rhs_total;
  for (const auto& m : monomials_up_to_degree(c.degree)) {
    const auto f = Poly::term(m, field.one());
    const Poly a = lhs_map(f);
    const Poly b = rhs_map(f);
    if (a != b) {
      Verdict v = compare(c, a, b);
      v.note = "first mismatch on " + (m.is_one() ? std::string("1") : m.to_string());
      return v;
    }
    lhs_total += a;
    rhs_total += b;
  }
  Verdict v = compare(c, lhs_total, rhs_total);
  v.note = "checked on all monomials of degree <= " + std::to_string(c.degree);
  return v;
}

template <class F>
TPoly<F> power_sum(int k, const F& one) {
  return TPoly<F>::term(Monomial::variable(k), one * Rational(k));
}

// --- identity cases at rho = xi_n -------------------------------------------

Verdict identity_at_root(const IdentityCase& c, Workspace& w) {
  require(c.n >= 2, c.id() + " needs n >= 2");
  const CyclotomicField field(c.n);
  auto& engine = w.engine(field);
  auto& structure = w.structure(field);
  const auto q = engine.hl_q(c.lambda);
  QCombination<Cyclotomic> expansion;
  VirasoroSpec spec{OperatorFamily::L, c.n, c.m};
  switch (c.kind) {
    case CaseKind::Positive:
      require(c.m >= 0, "T1.1 needs m >= 0");
      expansion = rhs_positive(field, c.n, c.m, c.lambda);
      break;
    case CaseKind::Negative:
      require(c.m >= 1, "T1.2 needs m >= 1");
      spec.m = -c.m;
      expansion = rhs_negative(structure, c.n, c.m, c.lambda);
      break;
    case CaseKind::NegativeFirstOrder:
      require(c.m >= 1, "T3.3 needs m >= 1");
      spec = {OperatorFamily::Lhat, c.n, -c.m};
      expansion = rhs_negative_first_order(structure, c.n, c.m, c.lambda);
      break;
    default:
      require(c.m >= 1, "VmQ needs m >= 1");
      spec = {OperatorFamily::V, c.n, c.m};
      expansion = rhs_power_products(structure, c.n, c.m, c.lambda);
      break;
  }
  const auto lhs = apply(build_operator(spec, field), q);
  return compare(c, lhs, engine.evaluate(expansion), expansion);
}

// --- Schur cases at rho = 0 --------------------------------------------------

Verdict schur_case(const IdentityCase& c, Workspace& w) {
  require(c.m >= 1, c.id() + " needs m >= 1");
  const RationalField field(Rational(0));
  auto& engine = w.engine(field);
  switch (c.kind) {
    case CaseKind::SchurPositive: {
      const auto expansion = rhs_schur_positive(c.m, c.lambda);
      const auto lhs = apply(build_operator(VirasoroSpec{OperatorFamily::LS, 0, c.m}, field), engine.hl_q(c.lambda));
      return compare(c, lhs, engine.evaluate(expansion), expansion);
    }
    case CaseKind::SchurNegative: {
      const auto expansion = rhs_schur_negative(c.m, c.lambda);
      const auto lhs = apply(build_operator(VirasoroSpec{OperatorFamily::LS, 0, -c.m}, field), engine.hl_q(c.lambda));
      return compare(c, lhs, engine.evaluate(expansion), expansion);
    }
    case CaseKind::SchurVacuum: {
      const auto expansion = rhs_schur_vacuum(c.m);
      const auto lhs = apply(build_operator(VirasoroSpec{OperatorFamily::LS, 0, -c.m}, field),
                             TPoly<Rational>::constant(Rational(1)));
      return compare(c, lhs, engine.evaluate(expansion), expansion);
    }
    default: {
      const auto expansion = rhs_hook_products(c.m);
      TPoly<Rational> lhs;
      for (int k = 1; k <= c.m - 1; ++k) lhs += power_sum(k, Rational(1)) * power_sum(c.m - k, Rational(1));
      return compare(c, lhs, engine.evaluate(expansion), expansion);
    }
  }
}

// --- bracket ------------------------------------------------------------------

Verdict bracket_case(const IdentityCase& c) {
  require(c.n >= 2, "bracket needs n >= 2");
  require(c.degree >= 0, "degree must be non-negative");
  const RationalField field(Rational(0));
  const auto li = build_operator(VirasoroSpec{OperatorFamily::L, c.n, c.i}, field);
  const auto lj = build_operator(VirasoroSpec{OperatorFamily::L, c.n, c.j}, field);
  const auto lsum = build_operator(VirasoroSpec{OperatorFamily::L, c.n, c.i + c.j}, field);
  const Rational central = central_term(c.n, c.i, c.j);
  const Rational scale(static_cast<long>(c.n) * (c.i - c.j));
  Verdict v = compare_on_monomials(
      c, field, [&](const TPoly<Rational>& f) { return commutator_apply(li, lj, f); },
      [&](const TPoly<Rational>& f) { return apply(lsum, f) * scale + f * central; });
  // The constant produced on 1 once n(i-j)L_{i+j} is removed.
  const auto one = TPoly<Rational>::constant(Rational(1));
  const auto residue = commutator_apply(li, lj, one) - apply(lsum, one) * scale;
  const Rational* found = residue.find(Monomial());
  const Rational observed = found ? *found : Rational(0);
  v.note += "; central term " + observed.to_string() + " (expected " + central.to_string() + ")";
  v.equal = v.equal && observed == central && residue.size() <= 1;
  return v;
}

// --- formulas valid for any rho -------------------------------------------------

template <CoeffField K>
Verdict formula_case(const IdentityCase& c, const K& field, Workspace& w) {
  using F = typename K::value_type;
  require(c.r >= 1, c.id() + " needs r >= 1");
  auto& engine = w.engine(field);
  if (c.kind == CaseKind::Multiplication) {
    auto& structure = w.structure(field);
    const auto expansion = structure.multiply_p(c.r, c.lambda);
    const auto lhs = power_sum(c.r, field.one()) * engine.hl_q(c.lambda);
    return compare(c, lhs, engine.evaluate(expansion), expansion);
  }
  QCombination<F> shifted;
  for (int i = 1; i <= c.lambda.length(); ++i) shifted.add(c.lambda.plus_at(i, -c.r), one_minus_rho_pow(field, c.r));
  return compare(c, engine.hl_q(c.lambda).derivative(c.r), engine.evaluate(shifted), shifted);
}

template <CoeffField K>
Verdict vertex_identity(const IdentityCase& c, const K& field, Workspace& w) {
  using F = typename K::value_type;
  using Poly = TPoly<F>;
  require(c.degree >= 0, "degree must be non-negative");
  auto& e = w.engine(field);
  auto B = [&](int m, const Poly& f) { return e.apply_B(m, f); };
  const F rho = field.rho();
  switch (c.kind) {
    case CaseKind::Exchange:
      return compare_on_monomials(
          c, field, [&](const Poly& f) { return B(c.i - 1, B(c.j, f)) - B(c.i, B(c.j - 1, f)) * rho; },
          [&](const Poly& f) { return B(c.j, B(c.i - 1, f)) * rho - B(c.j - 1, B(c.i, f)); });
    case CaseKind::PowerTimesB: {
      require(c.r >= 1, "pB needs r >= 1");
      const auto p = power_sum(c.r, field.one());
      return compare_on_monomials(
          c, field, [&](const Poly& f) { return p * B(c.m, f); },
          [&](const Poly& f) { return B(c.m, p * f) + B(c.m + c.r, f); });
    }
    case CaseKind::AdjointTimesB: {
      require(c.r >= 1, "perpB needs r >= 1");
      (void)e.perp_t(c.r, Poly());  // surfaces AdjointUndefined before the sweep
      return compare_on_monomials(
          c, field, [&](const Poly& f) { return e.perp_t(c.r, B(c.m, f)); },
          [&](const Poly& f) { return B(c.m - c.r, f) * Rational(1, c.r) + B(c.m, e.perp_t(c.r, f)); });
    }
    default: {
      // Homogeneous f of degree a, N = max(a, a + r) + 1:
      // sum_{k<=N} (1 - rho^k) B_{r-k} p_k f = (r - sum_{k<=N} (1 - rho^k)) B_r f - sum_{k<=N} B_{r+k} d_k f
      auto bound = [&](const Poly& f) { return std::max(f.degree(), f.degree() + c.r) + 1; };
      return compare_on_monomials(
          c, field,
          [&](const Poly& f) {
            Poly out;
            for (int k = 1; k <= bound(f); ++k) out += B(c.r - k, power_sum(k, field.one()) * f) * one_minus_rho_pow(field, k);
            return out;
          },
          [&](const Poly& f) {
            const int n = bound(f);
            F scale = field.from_rational(Rational(c.r));
            Poly out;
            for (int k = 1; k <= n; ++k) {
              scale -= one_minus_rho_pow(field, k);
              out -= B(c.r + k, f.derivative(k));
            }
            return out + B(c.r, f) * scale;
          });
    }
  }
}

Verdict commutator_at_root(const IdentityCase& c, Workspace& w) {
  using Poly = TPoly<Cyclotomic>;
  require(c.n >= 2, c.id() + " needs n >= 2");
  require(c.degree >= 0, "degree must be non-negative");
  const CyclotomicField field(c.n);
  auto& e = w.engine(field);
  auto B = [&](int m, const Poly& f) { return e.apply_B(m, f); };
  const int n = c.n;
  const int m = c.m;
  const int mn = m * n;
  const bool tilde = c.kind == CaseKind::LtildeCommutator;
  require(!tilde || m >= 0, "LtildeB needs m >= 0");
  const auto op = build_operator(VirasoroSpec{tilde ? OperatorFamily::Ltilde : OperatorFamily::Lhat, n, m}, field);
  auto lhs = [&](const Poly& f) { return apply(op, B(c.r, f)) - B(c.r, apply(op, f)); };
  auto rhs = [&](const Poly& f) {
    Poly out;
    if (tilde) {
      // r B_{r-mn} + sum_{k=1}^{mn} (-xi^{-k}) B_{r-mn+k} d_k
      out = B(c.r - mn, f) * Rational(c.r);
      for (int k = 1; k <= mn; ++k) out -= B(c.r - mn + k, f.derivative(k)) * rho_pow(field, -k);
    } else if (m >= 0) {
      // (r - mn) B_{r-mn} - sum_{k=1}^{mn} B_{r-mn+k} d_k
      out = B(c.r - mn, f) * Rational(c.r - mn);
      for (int k = 1; k <= mn; ++k) out -= B(c.r - mn + k, f.derivative(k));
    } else {
      // r B_{r-mn} - sum_{k=1}^{-mn} (1 - xi^k) B_{r-mn-k} p_k
      out = B(c.r - mn, f) * Rational(c.r);
      for (int k = 1; k <= -mn; ++k) {
        out -= B(c.r - mn - k, power_sum(k, field.one()) * f) * one_minus_rho_pow(field, k);
      }
    }
    return out;
  };
  return compare_on_monomials(c, field, lhs, rhs);
}

Verdict commutator_schur(const IdentityCase& c, Workspace& w) {
  using Poly = TPoly<Rational>;
  require(c.degree >= 0, "degree must be non-negative");
  const RationalField field(Rational(0));
  auto& e = w.engine(field);
  auto B = [&](int m, const Poly& f) { return e.apply_B(m, f); };
  const int m = c.m;
  const bool full = c.kind == CaseKind::SchurCommutator;
  require(!full || m != 0, "LSB needs m != 0");
  const auto op = build_operator(VirasoroSpec{full ? OperatorFamily::LS : OperatorFamily::LShat, 0, m}, field);
  auto lhs = [&](const Poly& f) { return apply(op, B(c.r, f)) - B(c.r, apply(op, f)); };
  auto rhs = [&](const Poly& f) {
    Poly out;
    if (full) {
      // (r - (m+1)/2) B_{r-m} - B_r d_m  (m > 0),   ... - B_r p_{-m}  (m < 0)
      out = B(c.r - m, f) * (Rational(c.r) - Rational(m + 1, 2));
      out -= B(c.r, m > 0 ? f.derivative(m) : power_sum(-m, Rational(1)) * f);
    } else if (m >= 0) {
      out = B(c.r - m, f) * Rational(c.r - m);
      for (int k = 1; k <= m; ++k) out -= B(c.r - m + k, f.derivative(k));
    } else {
      out = B(c.r - m, f) * Rational(c.r);
      for (int k = 1; k <= -m; ++k) out -= B(c.r - m - k, power_sum(k, Rational(1)) * f);
    }
    return out;
  };
  return compare_on_monomials(c, field, lhs, rhs);
}

}  // namespace

CaseKind IdentityCase::parse_kind(std::string_view id) {
  for (const auto& [kind, name] : kCaseIds) {
    if (name == id) return kind;
  }
  throw InvalidArgument("unknown case '" + std::string(id) + "'");
}

std::string_view IdentityCase::kind_id(CaseKind kind) {
  for (const auto& [k, name] : kCaseIds) {
    if (k == kind) return name;
  }
  return "?";
}

const std::vector<std::string_view>& IdentityCase::all_ids() {
  static const std::vector<std::string_view> ids = [] {
    std::vector<std::string_view> out;
    for (const auto& [kind, name] : kCaseIds) out.push_back(name);
    return out;
  }();
  return ids;
}

Json IdentityCase::to_json() const {
  const unsigned p = params_of(kind);
  Json out = {{"id", id()}};
  if (p & kN) out["n"] = n;
  if (p & kM) out["m"] = m;
  if (p & kI) out["i"] = i;
  if (p & kJ) out["j"] = j;
  if (p & kR) out["r"] = r;
  if (p & kDegree) out["degree"] = degree;
  if (p & kLambda) out["lambda"] = lambda.parts();
  if (p & kRho) out["rho"] = rho.to_string();
  return out;
}

std::string IdentityCase::to_string() const {
  const unsigned p = params_of(kind);
  std::string out = id();
  auto add = [&](const std::string& key, const std::string& value) { out += " " + key + "=" + value; };
  if (p & kN) add("n", std::to_string(n));
  if (p & kM) add("m", std::to_string(m));
  if (p & kI) add("i", std::to_string(i));
  if (p & kJ) add("j", std::to_string(j));
  if (p & kR) add("r", std::to_string(r));
  if (p & kDegree) add("degree", std::to_string(degree));
  if (p & kLambda) add("lambda", lambda.to_string());
  if (p & kRho) add("rho", rho.to_string());
  return out;
}

Json Verdict::to_json() const {
  Json out = {{"case", info}, {"equal", equal}, {"lhs", lhs_json}, {"rhs", rhs_json}, {"diff", diff_json}};
  if (!expansion.empty()) out["expansion"] = expansion;
  if (!note.empty()) out["note"] = note;
  return out;
}

std::string Verdict::to_text() const {
  std::string out = std::string(equal ? "equal" : "NOT EQUAL") + "\n";
  out += "lhs: " + lhs + "\n";
  out += "rhs: " + rhs + "\n";
  if (!expansion.empty()) out += "expansion: " + expansion + "\n";
  out += "diff: " + diff + "\n";
  if (!note.empty()) out += "note: " + note + "\n";
  return out;
}

Rational central_term(int n, int i, int j) {
  if (i + j != 0) return Rational(0);
  const long cube = static_cast<long>(i) * i * i - i;
  return Rational(static_cast<long>(n) * n * (n - 1) * cube, 12);
}

Verdict verify_case(const IdentityCase& c, Workspace& w) {
  switch (c.kind) {
    case CaseKind::Positive:
    case CaseKind::Negative:
    case CaseKind::NegativeFirstOrder:
    case CaseKind::PowerProducts:
      return identity_at_root(c, w);
    case CaseKind::SchurPositive:
    case CaseKind::SchurNegative:
    case CaseKind::SchurVacuum:
    case CaseKind::HookProducts:
      return schur_case(c, w);
    case CaseKind::Bracket:
      return bracket_case(c);
    case CaseKind::Multiplication:
    case CaseKind::Derivative:
      return with_field(c.rho, [&](const auto& field) { return formula_case(c, field, w); });
    case CaseKind::Exchange:
    case CaseKind::PowerTimesB:
    case CaseKind::AdjointTimesB:
    case CaseKind::ShiftedSum:
      return with_field(c.rho, [&](const auto& field) { return vertex_identity(c, field, w); });
    case CaseKind::LhatCommutator:
    case CaseKind::LtildeCommutator:
      return commutator_at_root(c, w);
    case CaseKind::SchurHatCommutator:
    case CaseKind::SchurCommutator:
      return commutator_schur(c, w);
  }
  throw InvalidArgument("unknown case");
}

}  // namespace hlvir
