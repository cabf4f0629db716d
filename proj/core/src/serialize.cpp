#include "qauth/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qauth/bch.hpp"
#include "qauth/error.hpp"

namespace qauth {

namespace {

Json rows_to_json(const BitMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.row_words()) rows.push_back(r.to_hex());
  return rows;
}

BitMatrix rows_from_json(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of hex strings");
  std::vector<BitWord> rows;
  rows.reserve(j.size());
  for (const auto& r : j) {
    if (!r.is_string()) throw InvalidInput(std::string(what) + " must be an array of hex strings");
    rows.push_back(BitWord::from_hex(r.get<std::string>(), n));
  }
  if (rows.empty()) return BitMatrix(0, n);
  return BitMatrix(std::move(rows));
}

std::string hex_poly(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%X", v);
  return buf;
}

std::uint32_t poly_from_json(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint32_t>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used, 0);
    } catch (const std::exception&) {
      throw InvalidInput("primitive_poly is not a number: " + s);
    }
    if (used != s.size()) throw InvalidInput("primitive_poly is not a number: " + s);
    return static_cast<std::uint32_t>(v);
  }
  throw InvalidInput("primitive_poly must be a hex string or an integer");
}

template <class T>
T required(const Json& j, const char* key) {
  if (!j.contains(key)) throw InvalidInput(std::string("code spec is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(std::string("code spec field '") + key + "' has the wrong type");
  }
}

}  // namespace

Json code_to_json(const LinearCode& code) {
  Json j;
  j["name"] = code.name();
  j["n"] = code.n();
  j["m"] = code.m();
  j["t"] = code.t();
  j["generator_rows"] = rows_to_json(code.generator());
  j["parity_rows"] = rows_to_json(code.parity_check());
  if (code.field()) {
    j["field"] = {{"w", code.field()->w}, {"primitive_poly", hex_poly(code.field()->primitive_poly)}};
  } else {
    j["field"] = nullptr;
  }
  return j;
}

LinearCode code_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("code spec must be a JSON object");
  const auto name = required<std::string>(j, "name");
  const auto n = required<std::size_t>(j, "n");
  const auto m = required<std::size_t>(j, "m");
  const auto t = required<std::size_t>(j, "t");
  if (n == 0 || n > kMaxBits) throw InvalidInput("code spec n out of range");
  BitMatrix g = rows_from_json(j.at("generator_rows"), n, "generator_rows");
  BitMatrix h = j.contains("parity_rows") ? rows_from_json(j.at("parity_rows"), n, "parity_rows") : BitMatrix(0, n);
  if (g.rows() != m) throw InvalidInput("generator_rows count differs from m");
  if (h.rows() != n - m) throw InvalidInput("parity_rows count differs from n - m");

  if (j.contains("field") && !j.at("field").is_null()) {
    const Json& f = j.at("field");
    const int w = required<int>(f, "w");
    const std::uint32_t poly = f.contains("primitive_poly") ? poly_from_json(f.at("primitive_poly")) : 0;
    LinearCode built = build_bch(w, t, poly);
    if (built.n() != n || built.m() != m || built.t() != t) {
      throw InvalidInput("code spec parameters differ from the BCH code they describe");
    }
    if (!(built.generator() == g)) throw InvalidInput("generator_rows differ from the BCH construction");
    if (!(built.parity_check() == h)) throw InvalidInput("parity_rows differ from the BCH construction");
    return built;
  }
  return LinearCode(name, t, std::move(g), std::move(h));
}

void write_code_file(const LinearCode& code, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << code_to_json(code).dump(2) << '\n';
}

LinearCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read code spec " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("code spec " + path.string() + " is not valid JSON: " + e.what());
  }
  return code_from_json(j);
}

std::string rational_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Json to_json(const ExactProb& p) {
  return {{"numerator", p.numerator().str()},
          {"denominator", p.denominator().str()},
          {"scientific", p.to_scientific().to_string()},
          {"double", p.to_double()}};
}

Json to_json(const AdversaryTranscript& t) {
  Json j;
  j["x_e"] = t.x_e.to_string();
  j["m_e"] = t.m_e ? Json(t.m_e->to_string()) : Json(nullptr);
  j["decode_success"] = t.decode_success;
  j["corrected_positions"] = t.corrected_positions;
  j["x_e_prime"] = t.x_e_prime.to_string();
  j["resent"] = t.resent;
  j["forged_message"] = t.forged_message.to_string();
  return j;
}

Json to_json(const SessionRecord& rec) {
  Json j;
  j["code_name"] = rec.code_name;
  j["message_hex"] = rec.message.to_hex();
  j["accepted"] = rec.accepted();
  j["forged"] = rec.forged;
  j["adversary"] = rec.adversary;
  j["seed"] = rec.seed;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["t"] = rec.t;
  j["reject_reason"] = std::string(to_string(rec.outcome.reason()));
  if (rec.transcript) j["transcript"] = to_json(*rec.transcript);
  return j;
}

Json to_json(const OracleReport& r) {
  Json j;
  j["quantity"] = r.quantity;
  j["exact_value"] = to_json(r.exact_value);
  j["formula_value"] = to_json(r.formula_value);
  j["equal"] = r.equal;
  j["gap"] = rational_string(r.gap);
  j["gap_double"] = r.gap.convert_to<double>();
  return j;
}

Json to_json(const TrialStats& s) {
  Json j;
  j["trials"] = s.trials;
  j["successes"] = s.successes;
  j["forged"] = s.forged;
  j["message_recovered"] = s.message_recovered;
  j["estimate"] = s.estimate;
  j["ci_low"] = s.ci_low;
  j["ci_high"] = s.ci_high;
  j["confidence"] = s.confidence;
  j["seed"] = s.seed;
  return j;
}

Json to_json(const SecurityRow& row, bool exact) {
  auto prob = [exact](const ExactProb& p) -> Json {
    if (!exact) return p.to_scientific().to_string();
    return to_json(p);
  };
  Json j;
  j["code"] = row.code;
  j["n"] = row.n;
  j["m"] = row.m;
  j["t"] = row.t;
  j["p_f"] = prob(row.p_f);
  j["p_dec"] = prob(row.p_dec);
  j["p_f_prime"] = prob(row.p_f_prime);
  j["key_overhead"] = to_fixed(row.key_overhead, 2);
  if (exact) j["key_overhead_exact"] = rational_string(row.key_overhead);
  return j;
}

Json make_envelope(const std::string& command, Json config, Json results) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  j["results"] = std::move(results);
  return j;
}

}  // namespace qauth
