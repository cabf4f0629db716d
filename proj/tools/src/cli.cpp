#include "qauth_cli/cli.hpp"

#include <CLI11.hpp>

#include <bit>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "qauth/analytics.hpp"
#include "qauth/bch.hpp"
#include "qauth/codes.hpp"
#include "qauth/error.hpp"
#include "qauth/serialize.hpp"
#include "qauth/verify.hpp"

namespace qauth::cli {

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  // code build
  std::vector<std::string> bch;
  std::string primitive_poly;
  std::size_t repetition = 0;
  bool hamming74 = false;
  // shared
  std::vector<std::string> codes;
  std::string format;  ///< empty until parsed; see run()
  std::string out;
  bool exact = false;
  std::uint64_t trials = 10000;
  std::uint64_t seed = kDefaultSeed;
  std::string message;
  std::string forged_message;
  std::string on_decode_failure = "abort";
  bool verify = false;
};

// ---------------------------------------------------------------------------
// Code selection

LinearCode named_bch(std::size_t n, std::size_t m) {
  const int w = std::bit_width(n + 1) - 1;
  if (w < 2 || w > 8 || (std::size_t{1} << w) != n + 1) {
    throw ConfigError("bch-" + std::to_string(n) + "-" + std::to_string(m) + ": n must be 2^w - 1 with 2 <= w <= 8");
  }
  for (std::size_t t = 1; t < (std::size_t{1} << (w - 1)); ++t) {
    std::size_t dim = 0;
    try {
      dim = bch_dimension(w, t);
    } catch (const UnsupportedSize&) {
      break;
    }
    if (dim == m) return build_bch(w, t);
    if (dim < m) break;
  }
  throw ConfigError("no narrow-sense BCH code of length " + std::to_string(n) + " has dimension " +
                    std::to_string(m));
}

LinearCode resolve_code(const std::string& selector) {
  static const std::regex rep(R"(rep(\d+))");
  static const std::regex bch(R"(bch-(\d+)-(\d+))");
  std::smatch match;
  if (std::regex_match(selector, match, rep)) return make_repetition(std::stoul(match[1]));
  if (selector == "hamming74") return make_hamming_7_4();
  if (std::regex_match(selector, match, bch)) return named_bch(std::stoul(match[1]), std::stoul(match[2]));
  if (std::filesystem::is_regular_file(selector)) return read_code_file(selector);
  throw ConfigError("unknown code '" + selector + "'; use repN, hamming74, bch-<n>-<m> or a code-spec file");
}

std::vector<LinearCode> default_table_codes() {
  std::vector<LinearCode> codes;
  for (const auto& p : table1_bch_params()) codes.push_back(build_bch(p.w, p.t));
  return codes;
}

// ---------------------------------------------------------------------------
// Argument helpers

std::pair<std::string, std::string> split_kv(const std::string& token) {
  const auto eq = token.find('=');
  if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + token + "'");
  return {token.substr(0, eq), token.substr(eq + 1)};
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used, 0);
  } catch (const std::exception&) {
    throw ConfigError(what + ": not a number: '" + s + "'");
  }
  if (used != s.size()) throw ConfigError(what + ": not a number: '" + s + "'");
  return v;
}

/// Binary string, or hex with a 0x prefix.
BitWord parse_message(const std::string& s, std::size_t m, const std::string& what) {
  BitWord w(0);
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
    w = BitWord::from_hex(s, m);
  } else {
    w = BitWord::from_string(s);
  }
  if (w.size() != m) {
    throw ConfigError(what + " has " + std::to_string(w.size()) + " bits; the code needs m = " + std::to_string(m));
  }
  return w;
}

DecodeFailurePolicy parse_policy(const std::string& s) {
  if (s == "abort") return DecodeFailurePolicy::Abort;
  if (s == "resend_uncorrected") return DecodeFailurePolicy::ResendUncorrected;
  throw ConfigError("--on-decode-failure must be abort or resend_uncorrected");
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + "\n";
}

// ---------------------------------------------------------------------------
// Commands

int cmd_code_build(const Options& o, std::ostream& out, std::ostream& err) {
  const int chosen = (o.bch.empty() ? 0 : 1) + (o.repetition ? 1 : 0) + (o.hamming74 ? 1 : 0);
  if (chosen != 1) throw ConfigError("choose exactly one of --bch, --repetition, --hamming74");

  std::optional<LinearCode> code;
  if (!o.bch.empty()) {
    std::optional<std::uint64_t> w, t;
    for (const auto& tok : o.bch) {
      const auto [k, v] = split_kv(tok);
      if (k == "w") w = parse_uint(v, "--bch w");
      else if (k == "t") t = parse_uint(v, "--bch t");
      else throw ConfigError("--bch takes w=<exponent> t=<radius>");
    }
    if (!w || !t) throw ConfigError("--bch needs both w= and t=");
    const std::uint32_t poly =
        o.primitive_poly.empty() ? 0 : static_cast<std::uint32_t>(parse_uint(o.primitive_poly, "--primitive-poly"));
    code = build_bch(static_cast<int>(*w), *t, poly);
  } else if (o.repetition) {
    code = make_repetition(o.repetition);
  } else {
    code = make_hamming_7_4();
  }

  const bool orthogonal = (code->generator() * code->parity_check().transpose()) ==
                          BitMatrix(code->m(), code->n() - code->m());
  std::ostringstream summary;
  summary << "code " << code->name() << "\n"
          << "n = " << code->n() << "\n"
          << "m = " << code->m() << "\n"
          << "t = " << code->t() << "\n"
          << "rank(G) = " << rank(code->generator()) << "\n"
          << "rank(H) = " << rank(code->parity_check()) << "\n"
          << "G*H^T = 0: " << (orthogonal ? "yes" : "no") << "\n";

  const std::string spec = dump(code_to_json(*code));
  if (o.out.empty()) {
    err << summary.str();
    out << spec;
  } else {
    emit(o, spec, out);
    out << summary.str() << "wrote " << o.out << "\n";
  }
  return orthogonal ? kExitOk : kExitVerification;
}

int cmd_analytics_table(const Options& o, std::ostream& out) {
  std::vector<LinearCode> codes;
  if (o.codes.empty()) {
    codes = default_table_codes();
  } else {
    for (const auto& c : o.codes) codes.push_back(resolve_code(c));
  }
  const auto rows = table1(codes);

  if (o.format == "csv") {
    std::vector<std::string> header{"code", "n", "m", "t", "p_f", "p_dec", "p_f_prime", "key_overhead"};
    if (o.exact) header.insert(header.end(), {"p_f_exact", "p_dec_exact", "p_f_prime_exact", "key_overhead_exact"});
    std::string text = csv_line(header);
    for (const auto& r : rows) {
      std::vector<std::string> cells{r.code,
                                     std::to_string(r.n),
                                     std::to_string(r.m),
                                     std::to_string(r.t),
                                     r.p_f.to_scientific().to_string(),
                                     r.p_dec.to_scientific().to_string(),
                                     r.p_f_prime.to_scientific().to_string(),
                                     to_fixed(r.key_overhead, 2)};
      if (o.exact) {
        cells.insert(cells.end(), {r.p_f.to_string(), r.p_dec.to_string(), r.p_f_prime.to_string(),
                                   rational_string(r.key_overhead)});
      }
      text += csv_line(cells);
    }
    emit(o, text, out);
    return kExitOk;
  }

  Json config{{"codes", Json::array()}, {"exact", o.exact}, {"format", o.format}};
  for (const auto& c : codes) config["codes"].push_back(c.name());
  Json results = Json::array();
  for (const auto& r : rows) results.push_back(to_json(r, o.exact));
  emit(o, dump(make_envelope("analytics table", std::move(config), {{"rows", std::move(results)}})), out);
  return kExitOk;
}

AttackKind parse_attack(const std::string& s) {
  if (s == "honest") return AttackKind::Honest;
  if (s == "no-message") return AttackKind::NoMessage;
  if (s == "intercept-resend") return AttackKind::InterceptResend;
  throw ConfigError("unknown attack '" + s + "'");
}

int cmd_simulate(const std::string& kind_name, const Options& o, std::ostream& out) {
  if (o.codes.size() != 1) throw ConfigError("simulate needs exactly one --code");
  if (o.trials == 0) throw ConfigError("--trials must be >= 1");
  const LinearCode code = resolve_code(o.codes.front());

  AttackConfig cfg;
  cfg.kind = parse_attack(kind_name);
  cfg.on_decode_failure = parse_policy(o.on_decode_failure);
  if (!o.message.empty()) cfg.alice_message = parse_message(o.message, code.m(), "--message");
  if (!o.forged_message.empty()) cfg.forged_message = parse_message(o.forged_message, code.m(), "--forged-message");

  const TrialStats stats = monte_carlo(cfg, code, o.trials, o.seed);

  // Reference probability of acceptance, where an exact one is affordable.
  std::optional<ExactProb> reference;
  if (cfg.kind == AttackKind::Honest) {
    reference = ExactProb(Rational(1));
  } else if (cfg.kind == AttackKind::NoMessage && code.m() <= 20) {
    reference = oracle_no_message_any_codeword(code);
  } else if (cfg.kind == AttackKind::InterceptResend && code.n() <= kInterceptResendOracleMaxN) {
    reference = oracle_intercept_resend(code, cfg.on_decode_failure).exact_value;
  }

  bool verified = true;
  if (cfg.kind == AttackKind::Honest) {
    verified = stats.successes == stats.trials && stats.message_recovered == stats.trials;
  } else if (o.verify && reference) {
    verified = stats.interval_contains(reference->to_double());
  }

  Json config{{"attack", std::string(to_string(cfg.kind))},
              {"code", code.name()},
              {"trials", o.trials},
              {"seed", o.seed},
              {"message", o.message.empty() ? Json(nullptr) : Json(o.message)},
              {"forged_message", o.forged_message.empty() ? Json(nullptr) : Json(o.forged_message)},
              {"on_decode_failure", std::string(to_string(cfg.on_decode_failure))},
              {"format", o.format}};

  if (o.format == "csv") {
    std::string text = csv_line({"attack", "code", "trials", "accepted", "forged", "message_recovered", "estimate",
                                 "ci_low", "ci_high", "seed", "reference"});
    auto num = [](double v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", v);
      return std::string(buf);
    };
    text += csv_line({std::string(to_string(cfg.kind)), code.name(), std::to_string(stats.trials),
                      std::to_string(stats.successes), std::to_string(stats.forged),
                      std::to_string(stats.message_recovered), num(stats.estimate), num(stats.ci_low),
                      num(stats.ci_high), std::to_string(stats.seed), reference ? reference->to_string() : ""});
    emit(o, text, out);
  } else {
    Json results = to_json(stats);
    if (reference) {
      results["reference"] = to_json(*reference);
      results["reference_in_interval"] = stats.interval_contains(reference->to_double());
    } else {
      results["reference"] = nullptr;
    }
    results["verified"] = verified;
    emit(o, dump(make_envelope("simulate " + kind_name, std::move(config), std::move(results))), out);
  }
  return verified ? kExitOk : kExitVerification;
}

int cmd_oracle(const std::string& which, const Options& o, std::ostream& out) {
  if (o.codes.size() != 1) throw ConfigError("oracle needs exactly one --code");
  const LinearCode code = resolve_code(o.codes.front());
  Json config{{"oracle", which}, {"code", code.name()}};
  Json results;
  bool verified = true;
  std::vector<std::pair<std::string, OracleReport>> reports;

  if (which == "nomsg") {
    const OracleReport exact =
        make_report("p_f", oracle_no_message_exact_codeword(code), p_f_no_message(code.n()));
    verified = exact.equal;
    reports.emplace_back("exact_codeword", exact);
    results["exact_codeword"] = to_json(exact);
    const ExactProb any = oracle_no_message_any_codeword(code);
    results["any_codeword"] = to_json(any);
  } else if (which == "pdec") {
    const OracleReport r = oracle_p_dec(code);
    verified = r.equal;
    reports.emplace_back("p_dec", r);
    results = to_json(r);
  } else if (which == "ir") {
    const DecodeFailurePolicy policy = parse_policy(o.on_decode_failure);
    config["on_decode_failure"] = std::string(to_string(policy));
    const OracleReport r = oracle_intercept_resend(code, policy);
    reports.emplace_back("p_f_prime", r);
    results = to_json(r);
    results["matched_key_slice"] = to_json(oracle_intercept_resend_matched_key(code));
  } else {
    throw ConfigError("unknown oracle '" + which + "'; use nomsg, pdec or ir");
  }
  results["verified"] = verified;

  if (o.format == "csv") {
    std::string text = csv_line({"code", "quantity", "exact", "formula", "equal", "gap"});
    for (const auto& [label, r] : reports) {
      text += csv_line({code.name(), label, r.exact_value.to_string(), r.formula_value.to_string(),
                        r.equal ? "true" : "false", rational_string(r.gap)});
    }
    emit(o, text, out);
  } else {
    emit(o, dump(make_envelope("oracle " + which, std::move(config), std::move(results))), out);
  }
  return verified ? kExitOk : kExitVerification;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum message authentication: codes, analytics, attack simulation and oracles", "qauth"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "Write the report to this file instead of stdout");
  };

  auto* code = app.add_subcommand("code", "Build linear codes");
  code->require_subcommand(1);
  auto* build = code->add_subcommand("build", "Write a code-spec JSON file");
  build->add_option("--bch", o.bch, "BCH parameters, e.g. --bch w=6 t=10")->expected(2);
  build->add_option("--primitive-poly", o.primitive_poly, "Field polynomial as a bit mask, e.g. 0x43");
  build->add_option("--repetition", o.repetition, "Repetition code of odd length N");
  build->add_flag("--hamming74", o.hamming74, "Hamming(7,4)");
  build->add_option("--out", o.out, "Code-spec output file");

  auto* analytics = app.add_subcommand("analytics", "Closed-form security figures");
  analytics->require_subcommand(1);
  auto* table = analytics->add_subcommand("table", "Security table for a list of codes");
  table->add_option("--code", o.codes, "Code selector (repeatable); defaults to the eight BCH codes");
  table->add_flag("--exact", o.exact, "Include exact rationals");
  add_output(table);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo sessions");
  simulate->require_subcommand(1);
  std::vector<CLI::App*> sim_kinds;
  for (const char* k : {"honest", "no-message", "intercept-resend"}) {
    auto* s = simulate->add_subcommand(k, std::string(k) + " sessions");
    s->add_option("--code", o.codes, "Code selector")->required()->expected(1);
    s->add_option("--trials", o.trials, "Number of sessions");
    s->add_option("--seed", o.seed, "Root seed (default " + std::to_string(kDefaultSeed) + ")");
    s->add_option("--message", o.message, "Fixed message for Alice (binary, or hex with 0x)");
    s->add_option("--forged-message", o.forged_message, "Eve's forgery (binary, or hex with 0x)");
    s->add_option("--on-decode-failure", o.on_decode_failure, "abort | resend_uncorrected");
    s->add_flag("--verify", o.verify, "Exit 3 when the interval misses the exact reference value");
    add_output(s);
    sim_kinds.push_back(s);
  }

  auto* oracle = app.add_subcommand("oracle", "Exact enumeration oracles for small codes");
  oracle->require_subcommand(1);
  std::vector<CLI::App*> oracle_kinds;
  for (const char* k : {"nomsg", "pdec", "ir"}) {
    auto* s = oracle->add_subcommand(k, std::string(k) + " oracle");
    s->add_option("--code", o.codes, "Code selector")->required()->expected(1);
    s->add_option("--on-decode-failure", o.on_decode_failure, "abort | resend_uncorrected (ir only)");
    add_output(s);
    oracle_kinds.push_back(s);
  }

  try {
    app.parse(argc, argv);
    // Tables default to csv, every other report to json.
    if (o.format.empty()) o.format = table->parsed() ? "csv" : "json";

    if (build->parsed()) return cmd_code_build(o, out, err);
    if (table->parsed()) return cmd_analytics_table(o, out);
    for (auto* s : sim_kinds) {
      if (s->parsed()) return cmd_simulate(s->get_name(), o, out);
    }
    for (auto* s : oracle_kinds) {
      if (s->parsed()) return cmd_oracle(s->get_name(), o, out);
    }
    err << app.help();
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    // --help lands here with exit code 0.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UnsupportedSize& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace qauth::cli
