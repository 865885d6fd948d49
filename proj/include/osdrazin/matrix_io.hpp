#pragma once

// Text serialization of matrices. A matrix document is a JSON object
//
//   {"dim": 2, "scalar": "rational", "entries": [["1/2", "0"], ["0", "1"]]}
//
// with scalar one of "rational", "gaussian" or "mod:<m>". Entries use the
// canonical scalar spelling, so writing then reading is the identity.

#include <cstdint>
#include <string>
#include <variant>

#include "json.hpp"

#include "osdrazin/matrix.hpp"

namespace osdrazin {

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<Gaussian>, Matrix<ModInt>>;

/// Parsed form of "rational" | "gaussian" | "mod:<m>".
struct ScalarSpec {
    enum class Kind { rational, gaussian, modular } kind = Kind::rational;
    std::int64_t modulus = 0;

    static ScalarSpec parse(const std::string& text);
    std::string str() const;
    bool operator==(const ScalarSpec&) const = default;
};

inline std::string scalar_name(const RationalField&) { return "rational"; }
inline std::string scalar_name(const GaussianField&) { return "gaussian"; }
inline std::string scalar_name(const ModRing& r) { return r.name(); }

template <Scalar T>
nlohmann::json matrix_to_json(const Matrix<T>& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return {{"dim", m.dim()}, {"scalar", scalar_name(m.ring())}, {"entries", std::move(rows)}};
}

nlohmann::json matrix_to_json(const AnyMatrix& m);

/// Throws ParseError on malformed documents.
AnyMatrix matrix_from_json(const nlohmann::json& doc);

/// Typed read; throws ParseError when the document's scalar kind differs.
template <Scalar T>
Matrix<T> matrix_from_json_as(const nlohmann::json& doc)
{
    auto any = matrix_from_json(doc);
    if (auto* m = std::get_if<Matrix<T>>(&any)) return std::move(*m);
    throw ParseError("matrix has scalar '" + doc.value("scalar", std::string("?")) + "', not the requested kind");
}

std::string matrix_to_string(const AnyMatrix& m);
std::size_t dim_of(const AnyMatrix& m);

} // namespace osdrazin
