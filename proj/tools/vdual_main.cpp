#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "vdual/kernels.hpp"
#include "vdual/report.hpp"

using namespace vdual;

namespace {

struct CommonOpts {
    std::string input;
    bool json_out = false;
    bool no_timings = false;
    bool serial = false;
    uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--input", opts.input, "problem file")->required();
    cmd->add_flag("--json", opts.json_out, "emit the JSON report instead of text");
    cmd->add_flag("--no-timings", opts.no_timings,
                  "drop the timing fields (byte-reproducible output)");
    cmd->add_flag("--serial", opts.serial, "force the serial kernels");
    cmd->add_option("--seed", opts.seed, "default seed for randomized constructions");
}

int read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return 0;
}

int run_with(const CommonOpts& opts,
             const std::optional<std::vector<AnalysisRequest>>& override_analyses) {
    std::string text;
    if (int rc = read_file(opts.input, text)) return rc;
    ProblemFile problem;
    try {
        problem = parse_problem(text);
        if (override_analyses) problem.analyses = *override_analyses;
    } catch (const AlgebraError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    if (opts.serial) kernels::set_default_exec(kernels::Exec::Serial);
    RunOutcome outcome = run_problem(problem, opts.seed);
    if (opts.no_timings) scrub_timings(outcome.report);
    if (opts.json_out)
        std::cout << outcome.report.dump(2) << "\n";
    else
        std::cout << render_text_report(outcome.report);
    return outcome.had_errors ? 1 : 0;
}

AnalysisRequest make_request(const std::string& kind,
                             std::map<std::string, std::string> params) {
    AnalysisRequest req;
    req.kind = kind;
    req.params = std::move(params);
    return req;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vdual: duality certificates for residue products on singular varieties"};
    app.require_subcommand(1);

    CommonOpts report_opts;
    auto* cmd_report = app.add_subcommand("report", "run every analysis declared in the file");
    add_common(cmd_report, report_opts);

    CommonOpts gb_opts;
    std::string gb_ideal;
    auto* cmd_gb = app.add_subcommand("gb", "reduced Gröbner basis of an ideal");
    add_common(cmd_gb, gb_opts);
    cmd_gb->add_option("--ideal", gb_ideal, "ideal name (defaults to the only one)");

    CommonOpts resolve_opts;
    std::string resolve_ideal;
    auto* cmd_resolve = app.add_subcommand("resolve", "minimal free resolution and summary");
    add_common(cmd_resolve, resolve_opts);
    cmd_resolve->add_option("--ideal", resolve_ideal, "ideal name");

    CommonOpts loci_opts;
    std::string loci_ideal;
    auto* cmd_loci = app.add_subcommand("loci", "rank-degeneracy and intrinsic loci");
    add_common(cmd_loci, loci_opts);
    cmd_loci->add_option("--ideal", loci_ideal, "ideal name");

    CommonOpts duality_opts;
    std::string duality_ideal, duality_tuple;
    int duality_p = 0;
    auto* cmd_duality = app.add_subcommand("duality", "duality certificate or p-duality class");
    add_common(cmd_duality, duality_opts);
    cmd_duality->add_option("--ideal", duality_ideal, "ideal name");
    cmd_duality->add_option("--tuple", duality_tuple, "tuple name (certificate mode)");
    cmd_duality->add_option("--p", duality_p, "classification mode: length of the tuples");

    CommonOpts ce_opts;
    std::string ce_ideal;
    int ce_q = 0, ce_p = 0;
    auto* cmd_ce = app.add_subcommand("counterexample", "construct a duality counterexample");
    add_common(cmd_ce, ce_opts);
    cmd_ce->add_option("--ideal", ce_ideal, "ideal name");
    cmd_ce->add_option("--q", ce_q, "Cohen-Macaulay branch: tuple length");
    cmd_ce->add_option("--p", ce_p, "non-Cohen-Macaulay branch: tuple length");

    std::string replay_input;
    auto* cmd_replay = app.add_subcommand("replay", "re-verify the certificates of a JSON report");
    cmd_replay->add_option("--input", replay_input, "report JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    auto with_ideal = [](std::map<std::string, std::string> params, const std::string& name) {
        if (!name.empty()) params["ideal"] = name;
        return params;
    };

    if (cmd_report->parsed()) return run_with(report_opts, std::nullopt);
    if (cmd_gb->parsed())
        return run_with(gb_opts, {{make_request("gb", with_ideal({}, gb_ideal))}});
    if (cmd_resolve->parsed())
        return run_with(resolve_opts, {{make_request("resolve", with_ideal({}, resolve_ideal))}});
    if (cmd_loci->parsed())
        return run_with(loci_opts, {{make_request("loci", with_ideal({}, loci_ideal))}});
    if (cmd_duality->parsed()) {
        if (duality_tuple.empty() == (duality_p == 0)) {
            std::cerr << "error: duality needs exactly one of --tuple or --p\n";
            return 2;
        }
        auto params = with_ideal({}, duality_ideal);
        params["seed"] = std::to_string(duality_opts.seed);
        std::string kind;
        if (!duality_tuple.empty()) {
            params["tuple"] = duality_tuple;
            kind = "duality";
        } else {
            params["p"] = std::to_string(duality_p);
            kind = "p-duality";
        }
        return run_with(duality_opts, {{make_request(kind, std::move(params))}});
    }
    if (cmd_ce->parsed()) {
        if ((ce_q == 0) == (ce_p == 0)) {
            std::cerr << "error: counterexample needs exactly one of --q or --p\n";
            return 2;
        }
        auto params = with_ideal({}, ce_ideal);
        params["seed"] = std::to_string(ce_opts.seed);
        if (ce_q > 0)
            params["q"] = std::to_string(ce_q);
        else
            params["p"] = std::to_string(ce_p);
        return run_with(ce_opts, {{make_request("counterexample", std::move(params))}});
    }
    if (cmd_replay->parsed()) {
        std::string text;
        if (int rc = read_file(replay_input, text)) return rc;
        try {
            auto report = nlohmann::ordered_json::parse(text);
            auto stats = replay_report_certificates(report);
            std::cout << "certificate lines: " << stats.lines
                      << ", failures: " << stats.failures << "\n";
            return stats.failures == 0 ? 0 : 1;
        } catch (const std::exception& e) {
            std::cerr << "replay error: " << e.what() << "\n";
            return 2;
        }
    }
    return 2;
}
