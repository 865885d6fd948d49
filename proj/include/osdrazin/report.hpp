#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "osdrazin/drazin.hpp"
#include "osdrazin/matrix_io.hpp"

namespace osdrazin {

/// Type-erased Witness, as stored in reports.
struct WitnessRecord {
    AnyMatrix candidate;
    Side side = Side::left;
    WitnessKind kind = WitnessKind::drazin;
    std::optional<unsigned> index;

    template <Scalar T>
    static WitnessRecord from(const Witness<T>& w)
    {
        return {AnyMatrix(w.candidate), w.side, w.kind, w.index};
    }
};

/// Outcome of one verification trial: named predicate results plus whatever
/// was constructed along the way. Serialized as one JSON object per trial.
struct VerificationReport {
    std::string instance_id;
    std::vector<std::pair<std::string, bool>> checks;
    std::optional<WitnessRecord> witness;
    std::map<std::string, long long> indices;
    std::vector<std::string> notes;
    /// Inputs in full exact form. Campaigns fill this only for failed trials.
    std::map<std::string, AnyMatrix> matrices;

    explicit VerificationReport(std::string id = {}) : instance_id(std::move(id)) {}

    bool check(std::string name, bool ok)
    {
        checks.emplace_back(std::move(name), ok);
        return ok;
    }

    /// True iff there is at least one check and all of them passed.
    bool passed() const;
    std::size_t failures() const;

    template <Scalar T>
    void set_witness(const Witness<T>& w)
    {
        witness = WitnessRecord::from(w);
    }

    template <Scalar T>
    void attach(const std::string& name, const Matrix<T>& m)
    {
        matrices.insert_or_assign(name, AnyMatrix(m));
    }

    /// Throws InvariantViolation when `checks` is empty.
    nlohmann::json to_json() const;
    static VerificationReport from_json(const nlohmann::json& doc);
};

} // namespace osdrazin
