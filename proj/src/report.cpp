#include "osdrazin/report.hpp"

#include <algorithm>

namespace osdrazin {

bool VerificationReport::passed() const
{
    return !checks.empty() && failures() == 0;
}

std::size_t VerificationReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.second; }));
}

nlohmann::json VerificationReport::to_json() const
{
    if (checks.empty()) throw InvariantViolation("report '" + instance_id + "' has no checks");
    nlohmann::json doc;
    doc["instance"] = instance_id;
    doc["passed"] = passed();
    auto& cs = doc["checks"] = nlohmann::json::array();
    for (const auto& [name, ok] : checks) cs.push_back({{"name", name}, {"pass", ok}});
    if (witness) {
        nlohmann::json w{{"side", to_string(witness->side)},
                         {"kind", to_string(witness->kind)},
                         {"candidate", matrix_to_json(witness->candidate)}};
        w["index"] = witness->index ? nlohmann::json(*witness->index) : nlohmann::json(nullptr);
        doc["witness"] = std::move(w);
    }
    doc["indices"] = indices;
    doc["notes"] = notes;
    if (!matrices.empty()) {
        auto& ms = doc["matrices"] = nlohmann::json::object();
        for (const auto& [name, m] : matrices) ms[name] = matrix_to_json(m);
    }
    return doc;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& doc)
{
    try {
        VerificationReport r(doc.at("instance").get<std::string>());
        for (const auto& c : doc.at("checks")) r.check(c.at("name").get<std::string>(), c.at("pass").get<bool>());
        if (doc.contains("witness")) {
            const auto& w = doc["witness"];
            WitnessRecord rec{matrix_from_json(w.at("candidate")), parse_side(w.at("side").get<std::string>()),
                              parse_witness_kind(w.at("kind").get<std::string>()), std::nullopt};
            if (!w.at("index").is_null()) rec.index = w["index"].get<unsigned>();
            r.witness = std::move(rec);
        }
        if (doc.contains("indices")) r.indices = doc["indices"].get<std::map<std::string, long long>>();
        if (doc.contains("notes")) r.notes = doc["notes"].get<std::vector<std::string>>();
        if (doc.contains("matrices"))
            for (const auto& [name, m] : doc["matrices"].items()) r.matrices.emplace(name, matrix_from_json(m));
        if (r.checks.empty()) throw InvariantViolation("report '" + r.instance_id + "' has no checks");
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

} // namespace osdrazin
