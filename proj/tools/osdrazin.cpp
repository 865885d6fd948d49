// osdrazin: generate instances, run verification campaigns, check files.
//
//   osdrazin run --theorem thm-3.5-left --trials 1000 --dim 3 --seed 1
//   osdrazin gen --family classical-quad --dim 2 --seed 7 --out quad.json
//   osdrazin check quad.json
//   osdrazin aggregate trials.jsonl
//   osdrazin spectrum matrix.json
//   osdrazin list

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "osdrazin/campaign.hpp"
#include "osdrazin/instances.hpp"
#include "osdrazin/spectra.hpp"

using namespace osdrazin;

namespace {

nlohmann::json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

int run(const CampaignConfig& cfg, const std::string& out, const std::string& format)
{
    const auto result = run_campaign(cfg);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw UsageError("cannot write " + out);
        for (const auto& r : result.reports) f << r.to_json().dump() << "\n";
    }
    if (format == "structured") std::cout << result.aggregate.dump(2) << "\n";
    else std::cout << aggregate_text(result.aggregate);
    std::cerr << std::fixed << std::setprecision(3) << "time: " << result.seconds << " s for "
              << result.reports.size() << " trials\n";
    return result.exit_status();
}

int aggregate(const std::string& path, const std::string& format)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::vector<VerificationReport> reports;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            reports.push_back(VerificationReport::from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    const auto agg = aggregate_reports(reports, {{"source", path}});
    if (format == "structured") std::cout << agg.dump(2) << "\n";
    else std::cout << aggregate_text(agg);
    return agg["failed"].get<std::size_t>() == 0 ? exit_pass : exit_failures;
}

int check(const std::string& path)
{
    const auto doc = read_json(path);
    const VerificationReport rep = doc.contains("kind") ? check_instance(doc) : VerificationReport::from_json(doc);
    std::cout << rep.to_json().dump(2) << "\n";
    return rep.passed() ? exit_pass : exit_failures;
}

int spectrum(const std::string& path)
{
    const auto doc = read_json(path);
    const auto& mdoc = doc.contains("matrices") ? doc["matrices"].at("a") : doc;
    const auto any = matrix_from_json(mdoc);
    SpectrumReport rep;
    if (const auto* r = std::get_if<RationalMatrix>(&any)) rep = group_spectrum(*r);
    else if (const auto* g = std::get_if<GaussianMatrix>(&any)) rep = group_spectrum(*g);
    else throw UsageError("spectra need rational or gaussian scalars");
    std::cout << rep.to_json().dump(2) << "\n";
    return exit_pass;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact one-sided Drazin inverse checks"};
    app.require_subcommand(1);

    CampaignConfig cfg;
    std::string run_out, run_format = "text";
    auto* run_cmd = app.add_subcommand("run", "run a seeded verification campaign");
    run_cmd->add_option("--theorem", cfg.theorem, "registered theorem id (see `list`)")->required();
    run_cmd->add_option("--trials", cfg.trials, "number of trials")->check(CLI::PositiveNumber);
    run_cmd->add_option("--dim", cfg.dim, "matrix dimension")->check(CLI::PositiveNumber);
    run_cmd->add_option("--dim-max", cfg.dim_max, "draw dimensions from [dim, dim-max]");
    run_cmd->add_option("--scalar", cfg.scalar, "rational, gaussian or mod:<m>");
    run_cmd->add_option("--seed", cfg.seed, "64-bit seed");
    run_cmd->add_option("--family", cfg.family, "generator family");
    run_cmd->add_option("--budget-seconds", cfg.budget_seconds, "wall-clock budget")->check(CLI::PositiveNumber);
    run_cmd->add_option("--out", run_out, "write per-trial reports as JSON lines");
    run_cmd->add_option("--format", run_format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

    InstanceParams params;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
    gen_cmd->add_option("--family", params.family, "instance family")
        ->required()
        ->check(CLI::IsMember(instance_families()));
    gen_cmd->add_option("--dim", params.dim, "matrix dimension")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--scalar", params.scalar, "rational, gaussian or mod:<m>");
    gen_cmd->add_option("--seed", params.seed, "64-bit seed");
    gen_cmd->add_option("--index", params.index, "planted Drazin index");
    gen_cmd->add_option("--rank", params.rank, "rank of idempotent pairs");
    gen_cmd->add_option("--exponent", params.exponent, "intertwining exponent n")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--spec", params.jordan, "Jordan blocks as lambda:size,...");
    gen_cmd->add_option("--out", gen_out, "output path (stdout when omitted)");

    std::string check_path;
    auto* check_cmd = app.add_subcommand("check", "re-verify an instance or report file");
    check_cmd->add_option("file", check_path)->required();

    std::string agg_path, agg_format = "text";
    auto* agg_cmd = app.add_subcommand("aggregate", "summarize a JSON-lines report file");
    agg_cmd->add_option("file", agg_path)->required();
    agg_cmd->add_option("--format", agg_format)->check(CLI::IsMember({"text", "structured"}));

    std::string spec_path;
    auto* spec_cmd = app.add_subcommand("spectrum", "eigenvalues, point indices and group spectrum of a matrix");
    spec_cmd->add_option("file", spec_path)->required();

    auto* list_cmd = app.add_subcommand("list", "registered theorem ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*run_cmd) return run(cfg, run_out, run_format);
        if (*gen_cmd) {
            write_text(gen_out, gen_instance(params).dump(2) + "\n");
            return exit_pass;
        }
        if (*check_cmd) return check(check_path);
        if (*agg_cmd) return aggregate(agg_path, agg_format);
        if (*spec_cmd) return spectrum(spec_path);
        if (*list_cmd) {
            for (const auto& t : registered_theorems()) {
                std::cout << std::left << std::setw(20) << t.id << t.summary << " [";
                for (std::size_t i = 0; i < t.families.size(); ++i) std::cout << (i ? ", " : "") << t.families[i];
                std::cout << "]\n";
            }
            return exit_pass;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return exit_failures;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failures;
    }
    return exit_usage;
}
