#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recipcas/certificates.hpp"
#include "recipcas/parser.hpp"

namespace {

using namespace recipcas;

constexpr int kExitOk = 0;
constexpr int kExitCertificateFailed = 1;
constexpr int kExitUsage = 2;

const char kUsage[] =
    "usage: recipcas [--vars N] <command> [args]\n"
    "\n"
    "commands:\n"
    "  eval EXPR                           normalize and print the canonical form\n"
    "  sigma EXPR                          apply the reciprocal involution\n"
    "  star F                              print f*, a(f) and t(f) for a polynomial f\n"
    "  val SPEC EXPR                       evaluate a valuation\n"
    "                                      SPEC: xadic:i | order | wsub:p,q,h |\n"
    "                                            gauss:VAR:SPEC | lex:VAR:SPEC\n"
    "  invert EXPR                         invert a unit reciprocal sum\n"
    "  length EXPR --deg D --height H --terms T\n"
    "                                      bounded exhaustive reciprocal-length search\n"
    "  check NAME [params] [--json]        run one certificate\n"
    "  check all [--json]                  run every certificate\n"
    "\n"
    "certificates:\n"
    "  non_ufd\n"
    "  beta_integrality P Q\n"
    "  theta_values P Q H\n"
    "  udiv_equivalence P Q G\n"
    "  prime_separation P1 Q1 [P2 Q2 ...]\n"
    "  finite_conductor_witness Q\n"
    "  overring_growth R P1 Q1 [P2 Q2 ...]\n"
    "  gdomain_identity EXPR\n"
    "  irreducibility_witness EXPR\n"
    "  egyptian_obstruction TRIALS [SEED]\n"
    "\n"
    "environment:\n"
    "  RECIPCAS_SEED         overrides the default sampling seed\n"
    "  RECIPCAS_TERM_BUDGET  overrides the unit-inversion term budget\n";

struct Options {
  int vars = 2;
  bool json = false;
  std::vector<std::string> positional;
};

long long parse_integer_arg(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error("invalid integer for " + flag + ": '" + text + "'");
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RECIPCAS_SEED"))
    return static_cast<std::uint64_t>(parse_integer_arg(env, "RECIPCAS_SEED"));
  return 42;
}

std::size_t term_budget() {
  if (const char* env = std::getenv("RECIPCAS_TERM_BUDGET"))
    return static_cast<std::size_t>(parse_integer_arg(env, "RECIPCAS_TERM_BUDGET"));
  return kDefaultTermBudget;
}

int emit_reports(const std::vector<CertificateReport>& reports, bool json) {
  if (json) {
    std::cout << (reports.size() == 1 ? report_to_json(reports.front())
                                      : reports_to_json(reports))
              << "\n";
  } else {
    bool first = true;
    for (const auto& report : reports) {
      if (!first) std::cout << "\n";
      std::cout << report_to_text(report);
      first = false;
    }
  }
  for (const auto& report : reports)
    if (!report.passed) return kExitCertificateFailed;
  return kExitOk;
}

std::pair<int, int> take_pair(const std::vector<std::string>& args, std::size_t index,
                              const std::string& what) {
  if (index + 1 >= args.size()) throw Error("expected a pair of integers for " + what);
  return {static_cast<int>(parse_integer_arg(args[index], what)),
          static_cast<int>(parse_integer_arg(args[index + 1], what))};
}

int run_check(const Options& options, std::uint64_t seed) {
  const auto& args = options.positional;
  if (args.size() < 2) throw Error("check requires a certificate name");
  const std::string& name = args[1];

  if (name == "all") {
    if (args.size() != 2) throw Error("check all takes no parameters");
    return emit_reports(run_all_certificates(seed), options.json);
  }

  CertificateReport report;
  if (name == "non_ufd") {
    if (args.size() != 2) throw Error("non_ufd takes no parameters");
    report = check_non_ufd();
  } else if (name == "beta_integrality") {
    if (args.size() != 4) throw Error("beta_integrality takes parameters P Q");
    report = check_beta_integrality(static_cast<int>(parse_integer_arg(args[2], "P")),
                                    static_cast<int>(parse_integer_arg(args[3], "Q")));
  } else if (name == "theta_values") {
    if (args.size() != 5) throw Error("theta_values takes parameters P Q H");
    report = check_theta_values(static_cast<int>(parse_integer_arg(args[2], "P")),
                                static_cast<int>(parse_integer_arg(args[3], "Q")),
                                static_cast<int>(parse_integer_arg(args[4], "H")));
  } else if (name == "udiv_equivalence") {
    if (args.size() != 5) throw Error("udiv_equivalence takes parameters P Q G");
    report = check_udiv_equivalence(static_cast<int>(parse_integer_arg(args[2], "P")),
                                    static_cast<int>(parse_integer_arg(args[3], "Q")),
                                    value_as_polynomial(parse_expression(args[4], 2)));
  } else if (name == "prime_separation") {
    if (args.size() < 4 || (args.size() - 2) % 2 != 0)
      throw Error("prime_separation takes pairs P1 Q1 [P2 Q2 ...]");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 2; i < args.size(); i += 2)
      pairs.push_back(take_pair(args, i, "prime_separation pair"));
    report = check_prime_separation(pairs);
  } else if (name == "finite_conductor_witness") {
    if (args.size() != 3) throw Error("finite_conductor_witness takes parameter Q");
    report = check_finite_conductor_witness(static_cast<int>(parse_integer_arg(args[2], "Q")));
  } else if (name == "overring_growth") {
    if (args.size() < 5 || (args.size() - 3) % 2 != 0)
      throw Error("overring_growth takes parameters R P1 Q1 [P2 Q2 ...]");
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 3; i < args.size(); i += 2)
      pairs.push_back(take_pair(args, i, "overring_growth pair"));
    report = check_overring_growth(static_cast<int>(parse_integer_arg(args[2], "R")), pairs);
  } else if (name == "gdomain_identity") {
    if (args.size() != 3) throw Error("gdomain_identity takes parameter EXPR");
    report = check_gdomain_identity(value_as_rational(parse_expression(args[2], options.vars)));
  } else if (name == "irreducibility_witness") {
    if (args.size() != 3) throw Error("irreducibility_witness takes parameter EXPR");
    const ParsedValue v = parse_expression(args[2], options.vars);
    const auto* rs = std::get_if<RecipSum>(&v);
    if (!rs) throw Error("irreducibility_witness expects a reciprocal sum (use recip(...))");
    report = check_irreducibility_witness(*rs);
  } else if (name == "egyptian_obstruction") {
    if (args.size() != 3 && args.size() != 4)
      throw Error("egyptian_obstruction takes parameters TRIALS [SEED]");
    const int trials = static_cast<int>(parse_integer_arg(args[2], "TRIALS"));
    const std::uint64_t s =
        args.size() == 4 ? static_cast<std::uint64_t>(parse_integer_arg(args[3], "SEED")) : seed;
    report = check_egyptian_obstruction(trials, s);
  } else {
    throw Error("unknown certificate '" + name + "'");
  }
  return emit_reports({report}, options.json);
}

int run(const Options& options, const std::map<std::string, std::string>& flags) {
  const auto& args = options.positional;
  if (args.empty()) {
    std::cerr << kUsage;
    return kExitUsage;
  }
  const std::string& command = args[0];

  if (command == "eval") {
    if (args.size() != 2) throw Error("eval takes exactly one expression");
    const ParsedValue v = parse_expression(args[1], options.vars);
    if (std::holds_alternative<RecipSum>(v))
      std::cout << to_string(value_as_rational(v)) << "\n";
    else
      std::cout << to_string(v) << "\n";
    return kExitOk;
  }
  if (command == "sigma") {
    if (args.size() != 2) throw Error("sigma takes exactly one expression");
    const RationalFunction image = sigma(value_as_rational(parse_expression(args[1], options.vars)));
    if (image.is_polynomial())
      std::cout << to_string(image.num()) << "\n";
    else
      std::cout << to_string(image) << "\n";
    return kExitOk;
  }
  if (command == "star") {
    if (args.size() != 2) throw Error("star takes exactly one polynomial");
    const Polynomial f = value_as_polynomial(parse_expression(args[1], options.vars));
    if (f.is_zero()) throw Error("star requires a nonzero polynomial");
    const StarForm star = star_transform(f);
    auto tuple = [](const std::vector<int>& v) {
      std::string out = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(v[i]);
      }
      return out + ")";
    };
    std::cout << "fstar: " << to_string(star.fstar) << "\n";
    std::cout << "a: " << tuple(star.a) << "\n";
    std::cout << "t: " << tuple(star.t) << "\n";
    return kExitOk;
  }
  if (command == "val") {
    if (args.size() != 3) throw Error("val takes SPEC and EXPR");
    const ValuationSpec spec = parse_valuation_spec(args[1], options.vars);
    const RationalFunction r = value_as_rational(parse_expression(args[2], options.vars));
    std::cout << to_string(value(spec, r)) << "\n";
    return kExitOk;
  }
  if (command == "invert") {
    if (args.size() != 2) throw Error("invert takes exactly one expression");
    const ParsedValue v = parse_expression(args[1], options.vars);
    const auto* rs = std::get_if<RecipSum>(&v);
    if (!rs) throw Error("invert expects a reciprocal sum (use recip(...))");
    const RecipSum inverse = invert_unit(*rs, term_budget());
    std::cout << "inverse: " << to_string(inverse) << "\n";
    std::cout << "product: " << to_string(recip_normalize(*rs) * recip_normalize(inverse)) << "\n";
    return kExitOk;
  }
  if (command == "length") {
    if (args.size() != 2) throw Error("length takes exactly one expression");
    const auto need = [&](const char* flag) {
      auto it = flags.find(flag);
      if (it == flags.end()) throw Error(std::string("length requires ") + flag);
      return parse_integer_arg(it->second, flag);
    };
    const RationalFunction r = value_as_rational(parse_expression(args[1], options.vars));
    const auto result = brute_force_length(r, static_cast<int>(need("--deg")), need("--height"),
                                           static_cast<int>(need("--terms")));
    if (result)
      std::cout << *result << "\n";
    else
      std::cout << "NotFound\n";
    return kExitOk;
  }
  if (command == "check") return run_check(options, default_seed());

  std::cerr << "error: unknown command '" << command << "'\n" << kUsage;
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  Options options;
  std::map<std::string, std::string> flags;
  try {
    for (int i = 1; i < argc; ++i) {
      const std::string arg = argv[i];
      if (arg == "--json") {
        options.json = true;
      } else if (arg == "--vars" || arg == "--deg" || arg == "--height" || arg == "--terms") {
        if (i + 1 >= argc) throw Error("missing value for " + arg);
        flags[arg] = argv[++i];
      } else if (arg.rfind("--", 0) == 0) {
        throw Error("unknown flag '" + arg + "'");
      } else {
        options.positional.push_back(arg);
      }
    }
    if (auto it = flags.find("--vars"); it != flags.end()) {
      options.vars = static_cast<int>(parse_integer_arg(it->second, "--vars"));
      if (options.vars < 1) throw Error("--vars must be at least 1");
    }
    return run(options, flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
