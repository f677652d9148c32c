#include "nhodge_cli/app.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "nhodge/random_instances.hpp"
#include "nhodge_cli/catalogue.hpp"
#include "nhodge_cli/report.hpp"

namespace nhodge::cli {

namespace {

// Raised for flag and file problems that CLI11 cannot see.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string ambient = "torus";
  int n = 0;
  std::string poly_file;
  std::string json_file;
  std::string expr;
  std::vector<std::string> ci_files;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<TPolynomial> load(const InputFlags& f) {
  const Ambient ambient = parse_ambient(f.ambient);
  auto text_poly = [&](const std::string& text) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == '{') return parse_poly_json(text);
      break;
    }
    if (f.n <= 0) throw UsageError("--n is required for text input");
    return parse_poly(text, ambient, f.n);
  };
  std::vector<TPolynomial> out;
  if (!f.poly_file.empty()) out.push_back(text_poly(slurp(f.poly_file)));
  if (!f.json_file.empty()) out.push_back(parse_poly_json(slurp(f.json_file)));
  if (!f.expr.empty()) out.push_back(text_poly(f.expr));
  for (const auto& path : f.ci_files) out.push_back(text_poly(slurp(path)));
  return out;
}

// A hypersurface or a complete intersection with its engine. Pinned in memory
// because the engine refers to the Newton data.
class Analysis {
 public:
  explicit Analysis(std::vector<TPolynomial> polys) : polys_(std::move(polys)) {
    if (polys_.size() == 1) {
      nd_.emplace(build_newton_data(polys_.front()));
      ks_ = std::make_unique<KSEngine>(*nd_);
    } else {
      cd_.emplace(build_cayley_data(make_ci_system(polys_)));
      ks_ = std::make_unique<KSEngine>(cd_->cayley);
    }
  }
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const std::vector<TPolynomial>& polys() const { return polys_; }
  bool is_ci() const { return cd_.has_value(); }
  const NewtonData& main() const { return cd_ ? cd_->cayley : *nd_; }
  Ambient ambient() const { return polys_.front().ambient; }
  bool is_bad(const RootOfUnity& lam) const { return main().is_bad(lam); }

  std::vector<RootOfUnity> spectrum() const {
    if (!cd_) return nd_->spectrum();
    std::set<Integer> orders = cd_->cayley.cell_orders();
    orders.insert(cd_->minkowski.cell_orders().begin(), cd_->minkowski.cell_orders().end());
    return roots_of_orders(orders);
  }
  HodgeResult concentrated(const RootOfUnity& lam) const {
    return cd_ ? concentrated_E(*cd_, *ks_, lam) : concentrated_E(*ks_, lam);
  }
  HodgeResult refined(const RootOfUnity& lam) const {
    return cd_ ? refined_E_ci(*cd_, *ks_, lam) : refined_E_torus(*ks_, lam);
  }
  JordanTable formula(const RootOfUnity& lam) const {
    return cd_ ? jordan_via_formula(*cd_, *ks_, lam) : jordan_via_formula(*ks_, lam);
  }
  MultiplicityFactorization multiplicity() const {
    return cd_ ? multiplicity_product(*cd_) : multiplicity_product(*nd_);
  }
  std::vector<OracleReport> selfcheck() const {
    return cd_ ? consistency_suite(make_ci_system(polys_)) : consistency_suite(polys_.front());
  }

  Json newton_section() const {
    Json out = newton_json(main());
    if (cd_) out["minkowski"] = newton_json(cd_->minkowski);
    return out;
  }

 private:
  std::vector<TPolynomial> polys_;
  std::optional<NewtonData> nd_;
  std::optional<CayleyData> cd_;
  std::unique_ptr<KSEngine> ks_;
};

RootOfUnity parse_lambda(const std::string& text) {
  static const std::regex form(R"(\s*(\d+)\s*/\s*(\d+)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, form)) {
    const Integer a(m[1].str()), b(m[2].str());
    if (b > 0 && a < b && gcd(a, b) == 1) return RootOfUnity(Rational(a, b));
  }
  throw UsageError("--lambda expects a reduced fraction a/b with 0 <= a < b (lambda = exp(2 pi i a/b)), got '" +
                   text + "'");
}

void add_input_flags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--ambient", f.ambient, "torus or affine")->check(CLI::IsMember({"torus", "affine"}));
  cmd->add_option("--n", f.n, "number of variables x1..xn");
  auto* poly = cmd->add_option("--poly", f.poly_file, "polynomial file (text or JSON)");
  auto* json = cmd->add_option("--json", f.json_file, "polynomial file in JSON form");
  auto* expr = cmd->add_option("--expr", f.expr, "polynomial given inline");
  poly->excludes(json)->excludes(expr);
  json->excludes(expr);
  cmd->add_option("--ci", f.ci_files, "further equations of a complete intersection (repeatable)");
}

struct Flags {
  InputFlags input;
  std::string output = "json";
  std::string lambda;
  bool refined = false;
  bool all = false;
  std::optional<std::uint64_t> seed;
  int count = 10;
};

std::vector<RootOfUnity> targets(const Analysis& a, const Flags& f) {
  if (!f.lambda.empty()) return {parse_lambda(f.lambda)};
  return a.spectrum();
}

std::vector<TPolynomial> random_inputs(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<TPolynomial> out;
  for (int i = 0; i < count; ++i) {
    InstanceShape shape;
    shape.ambient = i % 4 == 3 ? Ambient::Affine : Ambient::Torus;
    shape.n = 1 + i % 3;
    std::uniform_int_distribution<int> points(shape.n + 1, 12);
    shape.points = points(rng);
    out.push_back(random_hypersurface(rng, shape));
  }
  return out;
}

int execute(const std::string& command, const Flags& f, std::ostream& out, std::ostream& err) {
  std::vector<TPolynomial> polys = load(f.input);
  Json doc = document(command, polys);
  int status = Ok;
  std::string failure;

  if (command == "selfcheck") {
    std::vector<OracleReport> reports;
    if (!polys.empty()) reports = Analysis(polys).selfcheck();
    if (polys.empty() || f.seed) {
      const std::uint64_t seed = f.seed.value_or(1);
      doc["seed"] = seed;
      for (const auto& p : random_inputs(seed, f.count)) {
        auto more = consistency_suite(p);
        reports.insert(reports.end(), more.begin(), more.end());
      }
    }
    doc["consistency"] = consistency_json(reports);
    const auto failed = doc["consistency"]["failed"].get<std::size_t>();
    if (failed) {
      status = Internal;
      failure = "nhodge: selfcheck: " + std::to_string(failed) + " of " + std::to_string(reports.size()) +
                " checks failed";
    }
  } else {
    if (polys.empty()) throw UsageError("no input: pass --poly, --json, --expr or --ci");
    Analysis a(std::move(polys));
    if (command == "analyze") {
      doc["newton"] = a.newton_section();
      doc["predicates"] = predicates_json(a.main());
      doc["bad_orders"] = orders_json(a.main().bad_orders());
      doc["spectrum"] = spectrum_json(a.spectrum());
    } else if (command == "hodge") {
      if (f.refined && a.ambient() != Ambient::Torus) throw UsageError("--refined is available for the torus only");
      Json table = Json::object();
      Json skipped = Json::array();
      for (const auto& lam : targets(a, f)) {
        if (!f.refined && a.is_bad(lam)) {
          if (!f.lambda.empty()) raise(ErrorCode::BadLambda, "eigenvalue " + lam.to_string() + " lies in R_f");
          err << "nhodge: warning: skipping " << lam.to_string() << " (in R_f)\n";
          skipped.push_back(lam.to_string());
          continue;
        }
        table[lam.to_string()] = hodge_json(f.refined ? a.refined(lam) : a.concentrated(lam));
      }
      doc["hodge"] = std::move(table);
      doc["skipped"] = std::move(skipped);
    } else if (command == "jordan") {
      Json table = Json::object();
      Json skipped = Json::array();
      for (const auto& lam : targets(a, f)) {
        if (a.is_bad(lam)) {
          if (!f.all) raise(ErrorCode::BadLambda, "eigenvalue " + lam.to_string() + " lies in R_f");
          err << "nhodge: warning: skipping " << lam.to_string() << " (in R_f)\n";
          skipped.push_back(lam.to_string());
          continue;
        }
        const JordanTable via_e = jordan_via_E(a.concentrated(lam));
        const JordanTable via_formula = a.formula(lam);
        table[lam.to_string()] = jordan_json(via_e, via_formula);
        if (!(via_e == via_formula)) {
          status = Internal;
          failure = diagnostic(Error(ErrorCode::Inconsistent, "Jordan routes disagree at " + lam.to_string()));
        }
      }
      doc["jordan"] = std::move(table);
      doc["skipped"] = std::move(skipped);
    } else if (command == "multiplicity") {
      doc["multiplicity"] = multiplicity_json(a.multiplicity());
    }
  }

  if (f.output == "table")
    out << render_table(doc);
  else
    out << doc.dump(2) << "\n";
  if (!failure.empty()) err << failure << "\n";
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Limit mixed Hodge data and monodromy of degenerating hypersurfaces and complete intersections"};
  app.name("nhodge");
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--output", flags.output, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* analyze = app.add_subcommand("analyze", "Newton data, subdivision, R_f and spectrum");
  auto* hodge = app.add_subcommand("hodge", "equivariant limit Hodge polynomials E_lambda");
  auto* jordan = app.add_subcommand("jordan", "Jordan block counts of the monodromy");
  auto* multiplicity = app.add_subcommand("multiplicity", "characteristic product over the cells");
  auto* selfcheck = app.add_subcommand("selfcheck", "cross-route and oracle checks");
  for (auto* cmd : {analyze, hodge, jordan, multiplicity, selfcheck}) {
    add_input_flags(cmd, flags.input);
    cmd->add_option("--output", flags.output, "json or table")->check(CLI::IsMember({"json", "table"}));
  }
  hodge->add_option("--lambda", flags.lambda, "eigenvalue as a reduced phase a/b");
  hodge->add_flag("--refined", flags.refined, "three-variable E including bad eigenvalues (torus)");
  auto* lam = jordan->add_option("--lambda", flags.lambda, "eigenvalue as a reduced phase a/b");
  auto* all = jordan->add_flag("--all", flags.all, "every eigenvalue of the spectrum; bad ones are skipped");
  lam->excludes(all);
  selfcheck->add_option("--seed", flags.seed, "seed for random instances");
  selfcheck->add_option("--count", flags.count, "number of random instances")->check(CLI::Range(0, 1000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (jordan->parsed() && flags.lambda.empty() && !flags.all) throw UsageError("jordan needs --lambda a/b or --all");
    return execute(app.get_subcommands().front()->get_name(), flags, out, err);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : Usage;
  } catch (const UsageError& e) {
    err << "nhodge: " << e.what() << "\n";
    return Usage;
  } catch (const Error& e) {
    err << diagnostic(e) << "\n";
    return catalogue_entry(e.code()).exit_code;
  } catch (const std::exception& e) {
    err << "nhodge: internal error: " << e.what() << "\n";
    return Internal;
  }
}

}  // namespace nhodge::cli
