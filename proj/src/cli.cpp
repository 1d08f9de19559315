#include "rankforge/cli.hpp"

#include "rankforge/error.hpp"
#include "rankforge/factor.hpp"
#include "rankforge/io.hpp"
#include "rankforge/legendre.hpp"
#include "rankforge/nagao.hpp"
#include "rankforge/primes.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

namespace rankforge::cli {

namespace {

// An input problem attributable to one flag.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

// A computation that ran but whose check failed.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int threads = 1;
  unsigned long long seed = kDefaultSeed;
  std::string config;

  std::uint64_t p = 0;
  std::string modulus;
  std::uint64_t samples_table = 16;

  std::string field_path;
  std::string spec_path;
  std::string family_path;
  std::string out_path;
  std::uint64_t max_norm = 0;
  std::uint64_t max_p = 0;

  std::uint64_t max_q = 0;
  std::uint64_t exhaustive_max_q = 49;
  std::uint64_t samples = 1000;

  std::string method = "analytic";
  std::uint64_t direct_cap = 1000;
  std::string checkpoints;
  bool allow_bad = false;
};

struct Parsed {
  CLI::App app{"rankforge: rank-6 elliptic families over number fields"};
  Options opt;
  CLI::App* field_info = nullptr;
  CLI::App* ideals_list = nullptr;
  CLI::App* landau = nullptr;
  CLI::App* legendre_verify = nullptr;
  CLI::App* family_construct = nullptr;
  CLI::App* family_badprimes = nullptr;
  CLI::App* nagao_ap = nullptr;
  CLI::App* nagao_series = nullptr;
  CLI::App* rank = nullptr;
};

void build(Parsed& P) {
  auto& app = P.app;
  auto& o = P.opt;
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--seed", o.seed, "seed for randomized checks (RANKFORGE_SEED overrides)");
  app.add_option("--config", o.config, "JSON file of flag values; command-line flags win");

  auto* field = app.add_subcommand("field", "finite fields")->require_subcommand(1);
  P.field_info = field->add_subcommand("info", "order and a character table of F_p[x]/(modulus)");
  P.field_info->add_option("--p", o.p, "odd prime");
  P.field_info->add_option("--modulus", o.modulus, "monic irreducible modulus, constant first");
  P.field_info->add_option("--samples", o.samples_table, "rows of the character table");

  auto* ideals = app.add_subcommand("ideals", "prime ideals")->require_subcommand(1);
  P.ideals_list = ideals->add_subcommand("list", "prime ideals of norm <= X");
  P.ideals_list->add_option("--field", o.field_path, "field spec JSON");
  P.ideals_list->add_option("--max-norm", o.max_norm, "norm bound X");
  P.ideals_list->add_option("--out", o.out_path, "CSV output (default stdout)");

  P.landau = app.add_subcommand("landau", "sum of log N(P) over N(P) <= X");
  P.landau->add_option("--field", o.field_path, "field spec JSON");
  P.landau->add_option("--max-norm", o.max_norm, "norm bound X");

  auto* legendre = app.add_subcommand("legendre", "quadratic character sums")->require_subcommand(1);
  P.legendre_verify = legendre->add_subcommand("verify", "closed form against enumeration for odd q <= max-q");
  P.legendre_verify->add_option("--max-q", o.max_q, "largest prime power");
  P.legendre_verify->add_option("--exhaustive-max-q", o.exhaustive_max_q, "exhaustive up to this q");
  P.legendre_verify->add_option("--samples", o.samples, "random triples per larger q");
  P.legendre_verify->add_option("--out", o.out_path, "CSV output (default stdout)");

  auto* family = app.add_subcommand("family", "curve families")->require_subcommand(1);
  P.family_construct = family->add_subcommand("construct", "solve for the family coefficients");
  P.family_construct->add_option("--spec", o.spec_path, "family spec JSON");
  P.family_construct->add_option("--out", o.out_path, "family JSON output (default stdout)");
  P.family_badprimes = family->add_subcommand("badprimes", "bad and excluded primes up to N");
  P.family_badprimes->add_option("--family", o.family_path, "family JSON");
  P.family_badprimes->add_option("--max-p", o.max_p, "rational prime bound");
  P.family_badprimes->add_option("--out", o.out_path, "CSV output (default stdout)");

  auto* nagao = app.add_subcommand("nagao", "averaged traces of Frobenius")->require_subcommand(1);
  P.nagao_ap = nagao->add_subcommand("ap", "A_P at the primes above p");
  P.nagao_ap->add_option("--family", o.family_path, "family JSON");
  P.nagao_ap->add_option("--p", o.p, "rational prime");
  P.nagao_ap->add_option("--method", o.method, "direct, analytic or both")
      ->check(CLI::IsMember({"direct", "analytic", "both"}));
  P.nagao_ap->add_flag("--allow-bad", o.allow_bad, "compute at bad primes instead of failing");
  P.nagao_series = nagao->add_subcommand("series", "partial sums at checkpoints up to X");
  P.nagao_series->add_option("--family", o.family_path, "family JSON");
  P.nagao_series->add_option("--max-norm", o.max_norm, "norm bound X");
  P.nagao_series->add_option("--out", o.out_path, "CSV output (default stdout)");
  P.nagao_series->add_option("--method", o.method, "direct or analytic")
      ->check(CLI::IsMember({"direct", "analytic"}));
  P.nagao_series->add_option("--direct-cap", o.direct_cap, "largest norm handled by the direct method");
  P.nagao_series->add_option("--checkpoints", o.checkpoints, "comma-separated cutoffs");

  P.rank = app.add_subcommand("rank", "rank estimate from the partial sum at X");
  P.rank->add_option("--family", o.family_path, "family JSON");
  P.rank->add_option("--max-norm", o.max_norm, "norm bound X");
  P.rank->add_option("--method", o.method, "direct or analytic")->check(CLI::IsMember({"direct", "analytic"}));
  P.rank->add_option("--direct-cap", o.direct_cap, "largest norm handled by the direct method");
}

CLI::App* leaf(CLI::App* app) {
  for (;;) {
    auto subs = app->get_subcommands();
    if (subs.empty()) return app;
    app = subs.front();
  }
}

std::string json_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ',';
      s += json_scalar(e);
    }
    return s;
  }
  return v.dump();
}

// Appends config values for flags that the command line left unset.
std::vector<std::string> merge_config(const std::vector<std::string>& args, CLI::App* root, CLI::App* sub,
                                      const std::string& path) {
  Json doc;
  try {
    doc = read_json_file(path);
  } catch (const Error& e) {
    throw UsageError("--config", e.what());
  }
  if (!doc.is_object()) throw UsageError("--config", "config must be a JSON object");
  std::set<std::string> given;
  for (const auto& a : args)
    if (a.rfind("--", 0) == 0) given.insert(a.substr(0, a.find('=')));
  std::vector<std::string> merged = args;
  for (const auto& [key, value] : doc.items()) {
    const std::string flag = "--" + key;
    if (flag == "--config") continue;
    CLI::Option* opt = sub->get_option_no_throw(flag);
    if (!opt) opt = root->get_option_no_throw(flag);
    if (!opt) throw UsageError("--config", "unknown key '" + key + "' for this command");
    if (given.count(flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) merged.push_back(flag);
      continue;
    }
    merged.push_back(flag);
    merged.push_back(json_scalar(value));
  }
  return merged;
}

void require(bool present, const char* flag) {
  if (!present) throw UsageError(flag, "required");
}

template <class F>
auto with_flag(const char* flag, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InternalIdentityFailure) throw;
    throw UsageError(flag, e.what());
  }
}

NumberField load_field(const Options& o) {
  require(!o.field_path.empty(), "--field");
  return with_flag("--field", [&] { return field_from_json(read_json_file(o.field_path)); });
}

CurveFamily load_family(const Options& o) {
  require(!o.family_path.empty(), "--family");
  return with_flag("--family", [&] { return family_from_json(read_json_file(o.family_path)); });
}

std::uint64_t positive(std::uint64_t v, const char* flag) {
  if (v == 0) throw UsageError(flag, "required and must be positive");
  return v;
}

// Writes to --out when given, else to the stream.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  try {
    write_text_file(o.out_path, text);
  } catch (const Error& e) {
    throw UsageError("--out", e.what());
  }
}

int cmd_field_info(const Options& o, std::ostream& out) {
  if (o.p == 0) throw UsageError("--p", "required");
  std::vector<std::uint64_t> modulus{0, 1};
  if (!o.modulus.empty()) {
    modulus.clear();
    const IntegerPoly m = with_flag("--modulus", [&] { return parse_integer_poly(o.modulus); });
    for (const auto& c : m.coeffs()) modulus.push_back(with_flag("--modulus", [&] { return reduce_mod(c, o.p); }));
  }
  const FqField F = with_flag("--modulus", [&] {
    if (o.p == 2 || !is_prime(o.p)) throw UsageError("--p", "must be an odd prime");
    return FqField::make(o.p, modulus);
  });
  const std::uint64_t q = with_flag("--p", [&] { return F.order_u64(); });
  const std::uint64_t rows = std::min<std::uint64_t>(q, o.samples_table);
  std::ostringstream s;
  s << "q,index,element,chi\n";
  for (std::uint64_t i = 0; i < rows; ++i) {
    const FqElem u = F.from_index(i);
    s << q << ',' << i << ',' << csv_field(format_element(u)) << ',' << quadratic_character(u) << '\n';
  }
  emit(o, out, s.str());
  return kExitOk;
}

int cmd_ideals_list(const Options& o, std::ostream& out) {
  const NumberField K = load_field(o);
  const auto X = positive(o.max_norm, "--max-norm");
  const auto en = enumerate_prime_ideals(K, X, o.threads);
  std::ostringstream s;
  s << "norm,p,f,e,factor\n";
  for (const auto& P : en.ideals)
    s << P.norm << ',' << P.p << ',' << P.f << ',' << P.e << ',' << csv_field(P.factor_text()) << '\n';
  emit(o, out, s.str());
  return kExitOk;
}

int cmd_landau(const Options& o, std::ostream& out) {
  const NumberField K = load_field(o);
  const auto X = positive(o.max_norm, "--max-norm");
  const auto res = landau_sum(K, X, o.threads);
  out << "sum,ratio,count\n" << format_double(res.sum) << ',' << format_double(res.ratio) << ',' << res.count << '\n';
  return kExitOk;
}

int cmd_legendre_verify(const Options& o, std::ostream& out, std::uint64_t seed) {
  const auto max_q = positive(o.max_q, "--max-q");
  const auto rows = verify_legendre(max_q, o.exhaustive_max_q, o.samples, seed, o.threads);
  std::ostringstream s;
  s << "q,p,r,modulus,mode,triples,mismatches,conic_identity_failures,bound_violations,degenerate_triples,"
       "degenerate_outside_bound,status\n";
  bool ok = true;
  for (const auto& r : rows) {
    ok = ok && r.pass();
    s << r.q << ',' << r.p << ',' << r.r << ',' << csv_field(r.modulus) << ',' << (r.exhaustive ? "exhaustive" : "sampled")
      << ',' << r.triples << ',' << r.mismatches << ',' << r.conic_identity_failures << ',' << r.bound_violations << ','
      << r.degenerate_triples << ',' << r.degenerate_outside_bound << ',' << (r.pass() ? "pass" : "FAIL") << '\n';
  }
  emit(o, out, s.str());
  if (!ok) throw VerificationFailure("legendre verify: closed form and enumeration disagree");
  return kExitOk;
}

int cmd_family_construct(const Options& o, std::ostream& out) {
  require(!o.spec_path.empty(), "--spec");
  const CurveFamily fam =
      with_flag("--spec", [&] { return construct_family(family_spec_from_json(read_json_file(o.spec_path))); });
  emit(o, out, family_to_json(fam).dump(2) + "\n");
  return kExitOk;
}

std::string prime_label(const CurveFamily& fam, const PrimeIdeal& P) {
  return fam.spec.field.degree() == 1 ? std::string() : P.factor_text();
}

int cmd_family_badprimes(const Options& o, std::ostream& out) {
  const CurveFamily fam = load_family(o);
  const auto N = positive(o.max_p, "--max-p");
  const NumberField& K = fam.spec.field;
  std::ostringstream s;
  s << "p,norm,factor,reason\n";
  for (std::uint64_t p : primes_up_to(N)) {
    if (p == 2) {
      s << "2,,," << csv_field("bad prime: even characteristic") << '\n';
      continue;
    }
    if (K.is_excluded(p)) {
      s << p << ",,," << csv_field("excluded: divides the index bound 2 disc(m) or listed") << '\n';
      continue;
    }
    for (const auto& P : primes_above(K, p)) {
      const PrimeCheck c = is_good_prime(fam, P);
      if (!c.good()) s << p << ',' << P.norm << ',' << csv_field(prime_label(fam, P)) << ',' << csv_field(c.reason) << '\n';
    }
  }
  emit(o, out, s.str());
  return kExitOk;
}

std::string format_ap_row(const CurveFamily& fam, const ApResult& r) {
  std::ostringstream s;
  s << r.prime.p << ',' << r.prime.norm << ',' << csv_field(prime_label(fam, r.prime)) << ',' << to_string(r.method)
    << ',' << r.sum_a_t.get_str() << ',' << format_rational(r.A_p) << ',' << (r.good ? "true" : "false") << '\n';
  return s.str();
}

int cmd_nagao_ap(const Options& o, std::ostream& out) {
  const CurveFamily fam = load_family(o);
  if (o.p == 0 || !is_prime(o.p)) throw UsageError("--p", "must be a prime");
  if (o.p == 2) throw VerificationFailure("bad prime: even characteristic");
  const NumberField& K = fam.spec.field;
  if (K.is_excluded(o.p))
    throw VerificationFailure("excluded prime: " + std::to_string(o.p) + " divides the index bound of Z[theta]");
  const bool direct = o.method == "direct" || o.method == "both";
  const bool analytic = o.method == "analytic" || o.method == "both";
  std::ostringstream s;
  s << "p,norm,factor,method,sum_a_t,A_p,good\n";
  std::string failure;
  for (const auto& P : primes_above(K, o.p)) {
    if (!o.allow_bad) {
      const PrimeCheck c = is_good_prime(fam, P);
      if (!c.good()) throw VerificationFailure(c.reason);
    }
    std::optional<ApResult> d, a;
    if (direct) s << format_ap_row(fam, *(d = average_A_p_direct(fam, P, o.allow_bad)));
    if (analytic) s << format_ap_row(fam, *(a = average_A_p_analytic(fam, P, o.allow_bad)));
    if (d && a && d->sum_a_t != a->sum_a_t && failure.empty())
      failure = "methods disagree at norm " + std::to_string(P.norm) + ": direct " + d->sum_a_t.get_str() +
                ", analytic " + a->sum_a_t.get_str();
  }
  out << s.str();
  if (!failure.empty()) throw VerificationFailure(failure);
  return kExitOk;
}

NagaoOptions nagao_options(const Options& o) {
  NagaoOptions n;
  n.method = parse_method(o.method);
  n.direct_norm_cap = o.direct_cap;
  n.threads = o.threads;
  if (!o.checkpoints.empty()) {
    std::stringstream ss(o.checkpoints);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(part, &used);
        if (used != part.size() || v < 2) throw std::invalid_argument(part);
        n.checkpoints.push_back(v);
      } catch (const std::exception&) {
        throw UsageError("--checkpoints", "'" + part + "' is not an integer >= 2");
      }
    }
    std::sort(n.checkpoints.begin(), n.checkpoints.end());
    n.checkpoints.erase(std::unique(n.checkpoints.begin(), n.checkpoints.end()), n.checkpoints.end());
  }
  return n;
}

int cmd_nagao_series(const Options& o, std::ostream& out) {
  const CurveFamily fam = load_family(o);
  const auto X = positive(o.max_norm, "--max-norm");
  if (X < 2) throw UsageError("--max-norm", "must be at least 2");
  const NagaoOptions n = nagao_options(o);
  for (auto c : n.checkpoints)
    if (c > X) throw UsageError("--checkpoints", "cutoff " + std::to_string(c) + " exceeds --max-norm");
  std::ostringstream s;
  s << "X,partial_sum,ideals_used,ideals_skipped\n";
  for (const auto& r : nagao_partial_sum(fam, X, n))
    s << r.X << ',' << format_double(r.partial_sum) << ',' << r.ideals_used << ',' << r.ideals_skipped_bad << '\n';
  emit(o, out, s.str());
  return kExitOk;
}

int cmd_rank(const Options& o, std::ostream& out) {
  const CurveFamily fam = load_family(o);
  const auto X = positive(o.max_norm, "--max-norm");
  if (X < 2) throw UsageError("--max-norm", "must be at least 2");
  const RankEstimate r = rank_estimate(fam, X, nagao_options(o));
  out << "X: " << r.X << '\n'
      << "partial_sum: " << format_double(r.partial_sum) << '\n'
      << "theta_good: " << format_double(r.theta_good) << '\n'
      << "normalized: " << format_double(r.normalized) << '\n'
      << "residual: " << format_double(r.residual) << '\n'
      << "ideals_used: " << r.ideals_used << '\n'
      << "ideals_skipped: " << r.ideals_skipped_bad << '\n'
      << "rank estimate: " << r.nearest_integer;
  if (r.low_confidence) out << " (low confidence: no good primes up to X)";
  out << '\n';
  return kExitOk;
}

int dispatch(const Parsed& P, std::ostream& out) {
  const Options& o = P.opt;
  CLI::App* sub = leaf(const_cast<CLI::App*>(&P.app));
  if (sub == P.field_info) return cmd_field_info(o, out);
  if (sub == P.ideals_list) return cmd_ideals_list(o, out);
  if (sub == P.landau) return cmd_landau(o, out);
  if (sub == P.legendre_verify) {
    const std::uint64_t seed = [&] {
      try {
        return static_cast<std::uint64_t>(effective_seed(o.seed));
      } catch (const std::exception& e) {
        throw UsageError("RANKFORGE_SEED", e.what());
      }
    }();
    return cmd_legendre_verify(o, out, seed);
  }
  if (sub == P.family_construct) return cmd_family_construct(o, out);
  if (sub == P.family_badprimes) return cmd_family_badprimes(o, out);
  if (sub == P.nagao_ap) return cmd_nagao_ap(o, out);
  if (sub == P.nagao_series) return cmd_nagao_series(o, out);
  if (sub == P.rank) return cmd_rank(o, out);
  throw UsageError(sub->get_name(), "missing subcommand");
}

std::string one_line(std::string s) {
  for (auto& ch : s)
    if (ch == '\n' || ch == '\r') ch = ' ';
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

unsigned long long effective_seed(unsigned long long flag_value) {
  const char* env = std::getenv("RANKFORGE_SEED");
  if (!env || !*env) return flag_value;
  std::string text(env);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text[0] == '-') throw std::invalid_argument("not an unsigned integer: '" + text + "'");
  return v;
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    auto P = std::make_unique<Parsed>();
    build(*P);
    std::vector<std::string> argv = args;
    try {
      std::vector<std::string> rev(argv.rbegin(), argv.rend());
      P->app.parse(rev);
      if (!P->opt.config.empty()) {
        argv = merge_config(args, &P->app, leaf(&P->app), P->opt.config);
        P = std::make_unique<Parsed>();
        build(*P);
        std::vector<std::string> rev2(argv.rbegin(), argv.rend());
        P->app.parse(rev2);
      }
    } catch (const CLI::CallForHelp&) {
      out << P->app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << P->app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      // name the stray word rather than reporting a missing subcommand
      for (const auto& a : argv) {
        if (a.rfind("-", 0) == 0) break;
        if (!P->app.get_subcommand_no_throw(a)) {
          err << "error: " << a << ": unknown command\n";
          return kExitUsage;
        }
        break;
      }
      err << "error: " << one_line(e.what()) << '\n';
      return kExitUsage;
    }
    return dispatch(*P, out);
  } catch (const UsageError& e) {
    err << "error: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    err << one_line(e.what()) << '\n';
    return kExitVerificationFailure;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << one_line(e.what()) << '\n';
    return kExitVerificationFailure;
  }
}

}  // namespace rankforge::cli
