#include "osdrazin/matrix_io.hpp"

#include <charconv>

namespace osdrazin {

ScalarSpec ScalarSpec::parse(const std::string& text)
{
    if (text == "rational") return {Kind::rational, 0};
    if (text == "gaussian") return {Kind::gaussian, 0};
    if (text.rfind("mod:", 0) == 0) {
        std::int64_t m = 0;
        const char* first = text.data() + 4;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, m);
        if (ec != std::errc{} || ptr != last || m < 2)
            throw ParseError("bad modulus in scalar spec '" + text + "'");
        return {Kind::modular, m};
    }
    throw ParseError("unknown scalar spec '" + text + "' (expected rational, gaussian or mod:<m>)");
}

std::string ScalarSpec::str() const
{
    switch (kind) {
    case Kind::rational: return "rational";
    case Kind::gaussian: return "gaussian";
    case Kind::modular: return "mod:" + std::to_string(modulus);
    }
    return "?";
}

nlohmann::json matrix_to_json(const AnyMatrix& m)
{
    return std::visit([](const auto& mm) { return matrix_to_json(mm); }, m);
}

namespace {

template <class Ring>
auto read_entries(const nlohmann::json& doc, std::size_t n, const Ring& ring)
{
    using T = typename Ring::scalar_type;
    const auto& rows = doc.at("entries");
    if (!rows.is_array() || rows.size() != n) throw ParseError("entries must be an array of dim rows");
    std::vector<std::vector<T>> out;
    out.reserve(n);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw ParseError("each row must hold dim entries");
        std::vector<T> r;
        r.reserve(n);
        for (const auto& e : row) {
            if (e.is_number_integer()) r.push_back(ring.from_int(e.get<long>()));
            else if (e.is_string()) r.push_back(ring.parse(e.get<std::string>()));
            else throw ParseError("matrix entries must be strings");
        }
        out.push_back(std::move(r));
    }
    return Matrix<T>(out);
}

} // namespace

AnyMatrix matrix_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object()) throw ParseError("matrix document must be an object");
    try {
        const auto n = doc.at("dim").get<std::size_t>();
        if (n == 0) throw ParseError("dim must be positive");
        const auto spec = ScalarSpec::parse(doc.at("scalar").get<std::string>());
        switch (spec.kind) {
        case ScalarSpec::Kind::rational: return read_entries(doc, n, RationalField{});
        case ScalarSpec::Kind::gaussian: return read_entries(doc, n, GaussianField{});
        case ScalarSpec::Kind::modular: return read_entries(doc, n, ModRing{spec.modulus});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed matrix document: ") + e.what());
    }
    throw ParseError("unreachable scalar kind");
}

std::string matrix_to_string(const AnyMatrix& m)
{
    return std::visit([](const auto& mm) { return mm.str(); }, m);
}

std::size_t dim_of(const AnyMatrix& m)
{
    return std::visit([](const auto& mm) { return mm.dim(); }, m);
}

} // namespace osdrazin
