#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "qauth/adversary.hpp"
#include "qauth/analytics.hpp"
#include "qauth/codes.hpp"
#include "qauth/protocol.hpp"
#include "qauth/verify.hpp"

namespace qauth {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {name, n, m, t, generator_rows, parity_rows, field}. Rows are hex strings
/// with bit 0 in the high nibble of the first digit; field is null for codes
/// not built from a finite field.
[[nodiscard]] Json code_to_json(const LinearCode& code);

/// Inverse of code_to_json. A present field block rebuilds the BCH code from
/// (w, t, primitive_poly) and requires the stored matrices to match it, which
/// also restores the algebraic decoder. Throws InvalidInput on any mismatch.
[[nodiscard]] LinearCode code_from_json(const Json& j);

void write_code_file(const LinearCode& code, const std::filesystem::path& path);
[[nodiscard]] LinearCode read_code_file(const std::filesystem::path& path);

/// Key material and qubit records are never part of the output.
[[nodiscard]] Json to_json(const SessionRecord& rec);
[[nodiscard]] Json to_json(const AdversaryTranscript& t);
[[nodiscard]] Json to_json(const ExactProb& p);
[[nodiscard]] Json to_json(const OracleReport& r);
[[nodiscard]] Json to_json(const TrialStats& s);
/// With `exact`, each probability carries numerator/denominator strings.
[[nodiscard]] Json to_json(const SecurityRow& row, bool exact);

/// Reduced fraction "num/den" of a signed rational.
[[nodiscard]] std::string rational_string(const Rational& r);

/// {schema_version, command, config, results}
[[nodiscard]] Json make_envelope(const std::string& command, Json config, Json results);

}  // namespace qauth
