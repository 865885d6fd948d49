#pragma once

// Instance files written by the generators. An instance document is
//
//   {"kind": "quad" | "pair" | "jordan" | "exhaustive-ring", "family": ...,
//    "seed": ..., "scalar": ..., "matrices": {name: matrix}, ...}
//
// pairs also carry "n", Jordan instances carry "spec" and exhaustive rings
// carry "dim", "modulus", "n", "count" and "pairs" in place of "matrices".

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "osdrazin/report.hpp"
#include "osdrazin/spectra.hpp"

namespace osdrazin {

struct InstanceParams {
    std::string family;
    std::size_t dim = 3;
    std::string scalar = "rational";
    std::uint64_t seed = 0;
    unsigned index = 1;     ///< planted Drazin index (quads, planted pairs)
    std::size_t rank = 1;   ///< idempotent pairs
    unsigned exponent = 1;  ///< n in a b^n = b^{n+1}, b a^n = a^{n+1}
    std::string jordan;     ///< "lambda:size,..." for planted-jordan
};

const std::vector<std::string>& instance_families();

/// "1:2,0:1,1+i:1" -> blocks. Throws ParseError.
JordanSpec parse_jordan_spec(const std::string& text);

/// Builds the instance and re-verifies it through check_instance before
/// returning; a failure there throws InvariantViolation.
nlohmann::json gen_instance(const InstanceParams& params);

/// Re-checks the defining invariants of an instance document.
VerificationReport check_instance(const nlohmann::json& doc);

} // namespace osdrazin
