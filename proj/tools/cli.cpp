#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "hlvir/desk.hpp"
#include "hlvir/verify.hpp"
#include "hlvir/virasoro.hpp"

namespace hlvir::cli {

namespace {

struct Settings {
  std::string rho = "generic";
  std::string format = "text";
  bool no_cache = false;
  int max_order = 64;

  std::optional<std::string> lambda;
  std::optional<std::string> mu;
  std::optional<std::string> poly;
  std::optional<std::string> f;
  std::optional<std::string> g;
  std::string op;
  std::string case_id;
  std::string suite = "desk";
  std::vector<int> criteria;
  bool straighten = false;
  int r = 1;
  int n = 2;
  int m = 1;
  int i = 0;
  int j = 0;
  int degree = 6;
};

class Output {
 public:
  Output(const Settings& s, std::ostream& out) : json_(s.format == "json"), out_(out) {}
  [[nodiscard]] bool json() const { return json_; }

  template <class F>
  void poly(const TPoly<F>& p) {
    out_ << (json_ ? poly_to_json(p).dump() : p.to_string()) << "\n";
  }
  template <class F>
  void combination(const QCombination<F>& q) {
    out_ << (json_ ? combination_to_json(q).dump() : q.to_string()) << "\n";
  }
  template <class F>
  void scalar(const F& c) {
    out_ << (json_ ? Json{{"coeff", c.to_string()}}.dump() : c.to_string()) << "\n";
  }

 private:
  bool json_;
  std::ostream& out_;
};

CacheOptions cache_of(const Settings& s) {
  return s.no_cache ? CacheOptions{false, 0} : CacheOptions::from_environment();
}

LambdaVector need_lambda(const std::optional<std::string>& text, const char* flag) {
  if (!text) throw InvalidArgument(std::string("missing ") + flag);
  return LambdaVector::parse(*text);
}

/// The input polynomial of apply / perp: --poly text or Q_lambda from --lambda.
template <CoeffField K>
TPoly<typename K::value_type> input_poly(const Settings& s, const K& field, QEngine<K>& engine) {
  if (s.poly && s.lambda) throw InvalidArgument("give either --poly or --lambda, not both");
  if (s.poly) return poly_from_text(*s.poly, field);
  return engine.hl_q(need_lambda(s.lambda, "--lambda or --poly"));
}

template <CoeffField K>
TPoly<typename K::value_type> pairing_side(const std::optional<std::string>& poly, const std::optional<std::string>& label,
                                           const char* what, const K& field, QEngine<K>& engine) {
  if (poly && label) throw InvalidArgument(std::string("give one form of the ") + what + " argument");
  if (poly) return poly_from_text(*poly, field);
  return engine.hl_q(need_lambda(label, what));
}

int field_command(const std::string& command, const Settings& s, std::ostream& out) {
  const auto rho = RhoSpec::parse(s.rho, s.max_order);
  return with_field(rho, [&](const auto& field) -> int {
    using K = std::decay_t<decltype(field)>;
    QEngine<K> engine{field, cache_of(s)};
    Structure<K> structure{field};
    Output o{s, out};
    if (command == "q") {
      o.poly(engine.hl_q(need_lambda(s.lambda, "--lambda")));
    } else if (command == "straighten") {
      o.combination(structure.straighten(need_lambda(s.lambda, "--lambda")));
    } else if (command == "coeff") {
      const auto mu = need_lambda(s.mu, "--mu");
      if (!mu.is_partition() || mu.empty()) throw InvalidArgument("--mu must be a nonempty partition");
      o.scalar(structure.c_coeff(Partition(mu.parts())));
    } else if (command == "mulp") {
      const auto q = structure.multiply_p(s.r, need_lambda(s.lambda, "--lambda"));
      o.combination(s.straighten ? structure.straighten(q) : q);
    } else if (command == "pexpand") {
      o.combination(structure.p_expand(s.r));
    } else if (command == "apply") {
      const auto op = build_operator(VirasoroSpec::parse(s.op), field);
      o.poly(apply(op, input_poly(s, field, engine)));
    } else if (command == "perp") {
      o.poly(engine.perp_t(s.r, input_poly(s, field, engine)));
    } else if (command == "inner") {
      const auto a = pairing_side(s.f, s.lambda, "--f/--lambda", field, engine);
      const auto b = pairing_side(s.g, s.mu, "--g/--mu", field, engine);
      o.scalar(inner_product(a, b, field));
    } else if (command == "expand") {
      if constexpr (std::is_same_v<K, CyclotomicField>) {
        throw InvalidArgument("expand needs a generic or rational rho");
      } else {
        if (!s.poly) throw InvalidArgument("missing --poly");
        o.combination(expand_in_q_basis(poly_from_text(*s.poly, field), engine));
      }
    }
    return kOk;
  });
}

int mn_command(const Settings& s, std::ostream& out) {
  const auto lambda = need_lambda(s.lambda, "--lambda");
  if (!lambda.is_partition()) throw InvalidArgument("--lambda must be a partition");
  Output{s, out}.combination(mn_expand(s.r, Partition(lambda.parts())));
  return kOk;
}

int verify_command(const Settings& s, std::ostream& out) {
  IdentityCase c{IdentityCase::parse_kind(s.case_id)};
  c.n = s.n;
  c.m = s.m;
  c.i = s.i;
  c.j = s.j;
  c.r = s.r;
  c.degree = s.degree;
  if (s.lambda) c.lambda = LambdaVector::parse(*s.lambda);
  c.rho = RhoSpec::parse(s.rho, s.max_order);
  if (c.degree < 0 || c.degree > 16) throw InvalidArgument("--degree must lie in [0, 16]");
  Workspace workspace{cache_of(s)};
  const auto v = verify_case(c, workspace);
  if (s.format == "json") {
    out << v.to_json().dump() << "\n";
  } else {
    out << c.to_string() << ": " << v.to_text();
  }
  return v.equal ? kOk : kNotEqual;
}

/// rho = -1 over Q and rho = xi_2 in Q(xi_2) must give the same polynomials.
bool embedding_check(const CacheOptions& cache, std::ostream& out, bool json, Json& report) {
  QEngine<RationalField> rational{RationalField(Rational(-1)), cache};
  QEngine<CyclotomicField> cyclotomic{CyclotomicField(2), cache};
  long checked = 0;
  std::vector<std::string> failed;
  for (const auto& lambda : all_integer_vectors(3, -2, 5)) {
    const auto embedded = rational.hl_q(lambda).map_coefficients<Cyclotomic>(
        [&](const Rational& c) { return cyclotomic.field().from_rational(c); });
    ++checked;
    if (embedded != cyclotomic.hl_q(lambda)) failed.push_back(lambda.to_string());
  }
  const bool ok = failed.empty();
  if (json) {
    report["embedding"] = {{"passed", ok}, {"checks", checked}, {"failed", failed}};
  } else {
    out << (ok ? "PASS" : "FAIL") << "  embedding: rho = -1 and rho = xi:2 agree on Q_lambda, l <= 3, parts in [-2,5] ("
        << checked << " checks, " << failed.size() << " failures)\n";
    for (std::size_t k = 0; k < std::min<std::size_t>(failed.size(), 5); ++k) out << "      " << failed[k] << "\n";
  }
  return ok;
}

int selftest_command(const Settings& s, std::ostream& out) {
  if (s.suite != "desk") throw InvalidArgument("unknown suite '" + s.suite + "'");
  const bool json = s.format == "json";
  DeskOptions options;
  options.cache = cache_of(s);
  for (int c : s.criteria) {
    if (c < 1 || c > kDeskCriteria) throw InvalidArgument("criteria are numbered 1 to " + std::to_string(kDeskCriteria));
    options.only.insert(c);
  }
  if (!json) options.on_result = [&](const CriterionResult& r) { out << r.to_text() << std::flush; };
  const auto results = run_desk_suite(options);
  Json report = {{"suite", "desk"}, {"criteria", Json::array()}};
  long failures = 0;
  for (const auto& r : results) {
    failures += r.passed ? 0 : 1;
    report["criteria"].push_back({{"id", r.id},
                                  {"title", r.title},
                                  {"passed", r.passed},
                                  {"checks", r.checks},
                                  {"failures", r.failures},
                                  {"failed", r.failed}});
  }
  if (!embedding_check(options.cache, out, json, report)) ++failures;
  if (json) {
    report["failures"] = failures;
    out << report.dump() << "\n";
  } else {
    out << "desk suite: " << results.size() << " criteria plus embedding check, " << failures << " failures\n";
  }
  return failures == 0 ? kOk : kNotEqual;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Hall-Littlewood polynomials, vertex operators and Virasoro actions over exact fields", "hlvir"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--rho", s.rho, "0, -1, p/q, xi:<n> or generic")->capture_default_str();
  app.add_option("--format", s.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_flag("--no-cache", s.no_cache, "Disable the Q_lambda memo table");
  app.add_option("--max-order", s.max_order, "Largest n accepted in xi:<n>")->check(CLI::Range(2, 100000))->capture_default_str();

  auto lambda_opt = [&](CLI::App* sub, const char* help = "Comma-separated integers, may be empty") {
    sub->add_option("--lambda", s.lambda, help);
  };
  auto* q = app.add_subcommand("q", "Print Q_lambda");
  lambda_opt(q);
  auto* straighten = app.add_subcommand("straighten", "Rewrite Q_lambda in the partition basis");
  lambda_opt(straighten);
  app.add_subcommand("coeff", "Print c_mu(rho)")->add_option("--mu", s.mu, "A partition")->required();
  auto* mulp = app.add_subcommand("mulp", "Expand p_r Q_lambda");
  mulp->add_option("--r", s.r)->required();
  lambda_opt(mulp);
  mulp->add_flag("--straighten", s.straighten, "Straighten the result");
  app.add_subcommand("pexpand", "Expand p_r in the Q basis")->add_option("--r", s.r)->required();
  auto* mn = app.add_subcommand("mn", "Border-strip expansion of p_r s_lambda");
  mn->add_option("--r", s.r)->required();
  lambda_opt(mn, "A partition");
  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to Q_lambda or a polynomial");
  apply_cmd->add_option("--op", s.op, "e.g. L:n=2,m=-1 or LS:m=3")->required();
  lambda_opt(apply_cmd);
  apply_cmd->add_option("--poly", s.poly, "Polynomial text such as 1/2*t1^2 - 1*t2");
  auto* perp = app.add_subcommand("perp", "Apply the adjoint of multiplication by t_r");
  perp->add_option("--r", s.r)->required();
  lambda_opt(perp);
  perp->add_option("--poly", s.poly);
  auto* inner = app.add_subcommand("inner", "Scalar product of two polynomials");
  inner->add_option("--f", s.f);
  inner->add_option("--g", s.g);
  lambda_opt(inner, "First argument as Q_lambda");
  inner->add_option("--mu", s.mu, "Second argument as Q_mu");
  app.add_subcommand("expand", "Expand a polynomial in the Q basis")->add_option("--poly", s.poly)->required();
  auto* verify = app.add_subcommand("verify", "Check one identity exactly");
  std::vector<std::string> ids(IdentityCase::all_ids().begin(), IdentityCase::all_ids().end());
  verify->add_option("--case", s.case_id)->required()->check(CLI::IsMember(ids));
  verify->add_option("--n", s.n)->capture_default_str();
  verify->add_option("--m", s.m)->capture_default_str();
  verify->add_option("--i", s.i)->capture_default_str();
  verify->add_option("--j", s.j)->capture_default_str();
  verify->add_option("--r", s.r)->capture_default_str();
  verify->add_option("--degree", s.degree)->capture_default_str();
  lambda_opt(verify);
  auto* selftest = app.add_subcommand("selftest", "Run the desk-scale acceptance sweeps");
  selftest->add_option("--suite", s.suite)->capture_default_str();
  selftest->add_option("--criteria", s.criteria, "Subset of criteria to run")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "verify") return verify_command(s, out);
    if (command == "selftest") return selftest_command(s, out);
    if (command == "mn") return mn_command(s, out);
    return field_command(command, s, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SingularCoefficient& e) {
    err << "singular coefficient: " << e.what() << "\n";
    return kSingular;
  } catch (const PoleError& e) {
    err << "singular coefficient: " << e.what() << "\n";
    return kSingular;
  } catch (const DegeneratePairing& e) {
    err << "degenerate pairing: " << e.what() << "\n";
    return kDegeneratePairing;
  } catch (const AdjointUndefined& e) {
    err << "adjoint undefined: " << e.what() << "\n";
    return kAdjointUndefined;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMathError;
  }
}

}  // namespace hlvir::cli
