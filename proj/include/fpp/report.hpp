#pragma once

// JSON payloads for every report type, and the text renderings derived from
// them. Reports carry integers and strings only.

#include "fpp/algebra.hpp"
#include "fpp/endo.hpp"
#include "fpp/search.hpp"
#include "fpp/sympow.hpp"

#include <json.hpp>

#include <string>

namespace fpp {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

Json gf2_array(const std::vector<Gf2>& values);

Json describe_json(const GradedAlgebra& a);
Json lefschetz_json(const GradedAlgebra& a, const Gf2Matrix& matrix, const LefschetzReport& report,
                    const HomValidation& validation);
Json certificate_json(const FppCertificate& cert);
Json theorem3_json(const Theorem3Report& report);
Json crosscheck_json(const CrosscheckReport& report);
Json sym_formula_json(std::int64_t chi);
Json sym_square_json(const SymSquareReport& report);

// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

// Human-readable text for a full report envelope ({command, inputs, results, pass}).
std::string render_text(const Json& report);

}  // namespace fpp
