#include "vdual/report.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "vdual/duality.hpp"

namespace vdual {

using json = nlohmann::ordered_json;

namespace {

json poly_strings(const std::vector<Polynomial>& polys) {
    json a = json::array();
    for (const auto& p : polys) a.push_back(to_string(p));
    return a;
}

json monomial_strings(const std::vector<Monomial>& monos, const RingPtr& ring) {
    json a = json::array();
    for (const auto& m : monos) a.push_back(to_string(Polynomial::monomial_term(ring, m, 1)));
    return a;
}

json table_json(const std::vector<ConditionRow>& rows) {
    json a = json::array();
    for (const auto& r : rows) {
        json row;
        row["k"] = r.k;
        row["empty"] = r.empty_locus;
        if (!r.empty_locus) row["codim"] = r.codim;
        row["bound"] = r.bound;
        row["ok"] = r.ok;
        a.push_back(std::move(row));
    }
    return a;
}

json certificate_json(const std::vector<CertificateLine>& lines) {
    json a = json::array();
    for (const auto& l : lines) {
        json line;
        line["claim"] = l.expect_member ? "member" : "non_member";
        line["lhs"] = to_string(l.lhs);
        line["ideal"] = poly_strings(l.ideal_gens);
        if (!l.note.empty()) line["note"] = l.note;
        a.push_back(std::move(line));
    }
    return a;
}

json complex_json(const FreeComplex& c) {
    json out;
    out["ranks"] = c.ranks;
    json diffs = json::array();
    for (int k = 1; k <= c.length(); ++k) {
        const PolyMatrix& d = c.diff(k);
        json rows = json::array();
        for (int r = 0; r < d.rows; ++r) {
            json row = json::array();
            for (int col = 0; col < d.cols; ++col) row.push_back(to_string(d.at(r, col)));
            rows.push_back(std::move(row));
        }
        diffs.push_back(std::move(rows));
    }
    out["differentials"] = std::move(diffs);
    if (c.degrees) out["degrees"] = *c.degrees;
    return out;
}

json locus_entry_json(const LocusEntry& e, bool codim_in_Z) {
    json out;
    out["k"] = e.k;
    out["empty"] = e.empty;
    if (!e.empty) {
        out["dim"] = e.dim;
        out[codim_in_Z ? "codim_in_Z" : "codim"] = e.codim;
    }
    out["generators"] = poly_strings(e.ideal.generators());
    return out;
}

json locus_report_json(const LocusReport& rep) {
    json out;
    out["p"] = rep.p;
    json chain = json::array();
    for (const auto& e : rep.ambient_chain) chain.push_back(locus_entry_json(e, false));
    out["ambient_chain"] = std::move(chain);
    json intr = json::array();
    for (const auto& e : rep.intrinsic) intr.push_back(locus_entry_json(e, true));
    out["intrinsic"] = std::move(intr);
    return out;
}

json counterexample_json(const Counterexample& ce, const std::string& branch) {
    json w;
    w["branch"] = branch;
    w["existence_only"] = false;
    w["tuple"] = poly_strings(ce.f.f);
    w["g"] = to_string(ce.g);
    if (ce.power_index > 0) w["power_index"] = ce.power_index;
    if (ce.failing_index > 0) w["failing_index"] = ce.failing_index;
    if (!ce.note.empty()) w["note"] = ce.note;
    w["certificate"] = certificate_json(ce.lines);
    return w;
}

struct Runner {
    const ProblemFile& problem;
    uint64_t default_seed;
    std::map<std::string, VarietyContext> contexts;

    const Ideal& named_ideal(const AnalysisRequest& req) {
        std::string name;
        if (req.params.count("ideal")) {
            name = req.params.at("ideal");
        } else if (problem.ideals.size() == 1) {
            name = problem.ideals.front().first;
        } else {
            fail("MissingParameter", "analysis needs ideal=NAME");
        }
        const Ideal* I = problem.find_ideal(name);
        if (!I) fail("MissingParameter", "unknown ideal " + name);
        return *I;
    }

    std::string ideal_name(const AnalysisRequest& req) {
        if (req.params.count("ideal")) return req.params.at("ideal");
        if (problem.ideals.size() == 1) return problem.ideals.front().first;
        fail("MissingParameter", "analysis needs ideal=NAME");
    }

    const VarietyContext& context_for(const AnalysisRequest& req) {
        std::string name = ideal_name(req);
        auto it = contexts.find(name);
        if (it != contexts.end()) return it->second;
        const Ideal* I = problem.find_ideal(name);
        if (!I) fail("MissingParameter", "unknown ideal " + name);
        auto [pos, inserted] = contexts.emplace(name, build_variety_context(*I));
        return pos->second;
    }

    TupleOnZ named_tuple(const AnalysisRequest& req, const VarietyContext& Z) {
        if (!req.params.count("tuple")) fail("MissingParameter", "analysis needs tuple=NAME");
        const auto* t = problem.find_tuple(req.params.at("tuple"));
        if (!t) fail("MissingParameter", "unknown tuple " + req.params.at("tuple"));
        return make_tuple_on_Z(Z, *t);
    }

    int int_param(const AnalysisRequest& req, const std::string& key) {
        if (!req.params.count(key)) fail("MissingParameter", "analysis needs " + key + "=N");
        const std::string& v = req.params.at(key);
        try {
            size_t used = 0;
            int out = std::stoi(v, &used);
            if (used != v.size()) throw std::invalid_argument(v);
            return out;
        } catch (const std::exception&) {
            fail("ParseError", "invalid integer for " + key + ": " + v);
        }
    }

    uint64_t seed_param(const AnalysisRequest& req) {
        if (!req.params.count("seed")) return default_seed;
        const std::string& v = req.params.at("seed");
        try {
            size_t used = 0;
            unsigned long long out = std::stoull(v, &used);
            if (used != v.size()) throw std::invalid_argument(v);
            return out;
        } catch (const std::exception&) {
            fail("ParseError", "invalid seed: " + v);
        }
    }

    json dispatch(const AnalysisRequest& req) {
        json result;
        if (req.kind == "gb") {
            const Ideal& I = named_ideal(req);
            result["ideal"] = ideal_name(req);
            result["order"] = "weighted-grevlex";
            result["basis"] = poly_strings(I.groebner().generators);
        } else if (req.kind == "resolve") {
            const Ideal& I = named_ideal(req);
            auto res = free_resolution(I, true);
            auto s = summarize(res, I);
            result["ideal"] = ideal_name(req);
            result["betti"] = s.betti;
            result["projective_dimension"] = s.projective_dimension;
            result["depth"] = s.depth;
            result["cohen_macaulay"] = s.is_cohen_macaulay;
            result["complex"] = complex_json(res);
        } else if (req.kind == "loci") {
            const VarietyContext& Z = context_for(req);
            result["ideal"] = ideal_name(req);
            result["report"] = locus_report_json(Z.loci);
        } else if (req.kind == "duality") {
            const VarietyContext& Z = context_for(req);
            TupleOnZ f = named_tuple(req, Z);
            auto v = duality_certificate(Z, f);
            result["ideal"] = ideal_name(req);
            result["tuple"] = poly_strings(f.f);
            result["status"] = to_string(v.status);
            result["table"] = table_json(v.table);
            if (!v.note.empty()) result["note"] = v.note;
        } else if (req.kind == "p-duality" || req.kind == "normality") {
            const VarietyContext& Z = context_for(req);
            int p = req.kind == "normality" ? 1 : int_param(req, "p");
            auto v = p_duality_classification(Z, p);
            result["ideal"] = ideal_name(req);
            result["p"] = p;
            if (req.kind == "normality")
                result["normal"] = (v.status == VerdictStatus::CertifiedHolds);
            result["status"] = to_string(v.status);
            result["table"] = table_json(v.table);
            if (v.status == VerdictStatus::FailsAtNearbyPoint && v.witness) {
                json w;
                w["branch"] = v.witness->branch;
                w["equality_k"] = v.witness->equality_k;
                w["existence_only"] = true;
                if (req.kind == "p-duality") {
                    // try to attach an explicit constructed witness
                    try {
                        if (v.witness->branch == "cohen-macaulay") {
                            auto ce = construct_counterexample_CM(Z, p, seed_param(req));
                            w = counterexample_json(ce, v.witness->branch);
                        } else {
                            auto ce = construct_counterexample_nonCM(Z, p, seed_param(req));
                            w = counterexample_json(ce, v.witness->branch);
                        }
                    } catch (const AlgebraError& e) {
                        w["existence_only"] = true;
                        w["note"] = std::string("no explicit witness constructed: ") + e.code();
                    }
                    w["equality_k"] = v.witness->equality_k;
                }
                result["witness"] = std::move(w);
            }
            if (!v.note.empty()) result["note"] = v.note;
        } else if (req.kind == "regular-sequence") {
            const VarietyContext& Z = context_for(req);
            TupleOnZ f = named_tuple(req, Z);
            auto r = is_regular_sequence_on(Z, f);
            result["ideal"] = ideal_name(req);
            result["tuple"] = poly_strings(f.f);
            result["regular"] = r.regular;
            if (!r.regular) {
                result["failing_index"] = r.failing_index;
                result["witness"] = to_string(*r.witness);
                result["certificate"] = certificate_json(r.lines);
            }
        } else if (req.kind == "depth-z1") {
            const VarietyContext& Z = context_for(req);
            int q = int_param(req, "q");
            auto r = depth_condition_Z1(Z, q);
            result["ideal"] = ideal_name(req);
            result["q"] = q;
            result["holds"] = r.holds;
            result["table"] = table_json(r.table);
        } else if (req.kind == "tensor-condition") {
            const VarietyContext& Z = context_for(req);
            TupleOnZ f = named_tuple(req, Z);
            auto r = tensor_condition(Z, f);
            result["ideal"] = ideal_name(req);
            result["tuple"] = poly_strings(f.f);
            result["holds"] = r.holds;
            result["table"] = table_json(r.table);
        } else if (req.kind == "counterexample") {
            const VarietyContext& Z = context_for(req);
            result["ideal"] = ideal_name(req);
            bool cm_branch = req.params.count("q") > 0;
            if (cm_branch == (req.params.count("p") > 0))
                fail("MissingParameter", "counterexample needs exactly one of q= or p=");
            if (cm_branch) {
                auto ce = construct_counterexample_CM(Z, int_param(req, "q"), seed_param(req));
                result["status"] = to_string(VerdictStatus::FailsWithWitness);
                result["witness"] = counterexample_json(ce, "cohen-macaulay");
            } else {
                auto ce = construct_counterexample_nonCM(Z, int_param(req, "p"), seed_param(req));
                result["status"] = to_string(VerdictStatus::FailsWithWitness);
                result["witness"] = counterexample_json(ce, "non-cohen-macaulay");
            }
        } else if (req.kind == "socle") {
            const Ideal& I = named_ideal(req);
            auto socle = socle_dimension(I);
            result["ideal"] = ideal_name(req);
            result["socle_dim"] = socle.socle_dim;
            result["staircase"] = monomial_strings(socle.staircase, I.ring());
            try {
                auto res = free_resolution(I, true);
                result["top_betti"] = res.ranks.back();
                result["match"] = (res.ranks.back() == socle.socle_dim);
            } catch (const AlgebraError& e) {
                // inhomogeneous Artinian ideals still get their socle dimension
                if (e.code() != "NotHomogeneous") throw;
                result["top_betti_skipped"] = e.code();
            }
        } else {
            fail("ParseError", "unknown analysis kind " + req.kind);
        }
        return result;
    }
};

} // namespace

RunOutcome run_problem(const ProblemFile& p, uint64_t default_seed) {
    RunOutcome out;
    json& rep = out.report;
    rep["schema_version"] = kReportSchemaVersion;
    rep["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    rep["seed"] = default_seed;
    rep["ring"] = {{"variables", p.ring->variables()}, {"weights", p.ring->weights()}};
    {
        json ideals = json::array();
        for (const auto& [name, I] : p.ideals) {
            json j;
            j["name"] = name;
            j["radical"] = I.declared_radical();
            j["pure"] = I.declared_pure_dimensional();
            j["generators"] = poly_strings(I.generators());
            ideals.push_back(std::move(j));
        }
        json tuples = json::array();
        for (const auto& [name, t] : p.tuples) {
            json j;
            j["name"] = name;
            j["entries"] = poly_strings(t);
            tuples.push_back(std::move(j));
        }
        rep["problem"] = {{"ideals", std::move(ideals)}, {"tuples", std::move(tuples)}};
    }

    Runner runner{p, default_seed, {}};
    json analyses = json::array();
    std::vector<double> per_analysis;
    auto t_start = std::chrono::steady_clock::now();
    for (const auto& req : p.analyses) {
        json entry;
        entry["kind"] = req.kind;
        json params;
        for (const auto& [k, v] : req.params) params[k] = v;
        entry["params"] = std::move(params);
        auto t0 = std::chrono::steady_clock::now();
        try {
            entry["ok"] = true;
            entry["result"] = runner.dispatch(req);
        } catch (const AlgebraError& e) {
            out.had_errors = true;
            entry["ok"] = false;
            entry["error"] = {{"code", e.code()}, {"message", e.what()}};
        }
        auto t1 = std::chrono::steady_clock::now();
        per_analysis.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        analyses.push_back(std::move(entry));
    }
    auto t_end = std::chrono::steady_clock::now();
    rep["analyses"] = std::move(analyses);
    rep["timings_ms"] = {
        {"total", std::chrono::duration<double, std::milli>(t_end - t_start).count()},
        {"per_analysis", per_analysis}};
    return out;
}

void scrub_timings(nlohmann::ordered_json& report) { report.erase("timings_ms"); }

namespace {

void collect_certificates(const json& node, std::vector<const json*>& out) {
    if (node.is_object()) {
        if (node.contains("certificate") && node["certificate"].is_array())
            out.push_back(&node["certificate"]);
        for (const auto& [key, value] : node.items()) {
            (void)key;
            collect_certificates(value, out);
        }
    } else if (node.is_array()) {
        for (const auto& value : node) collect_certificates(value, out);
    }
}

} // namespace

ReplayStats replay_report_certificates(const nlohmann::ordered_json& report) {
    ReplayStats stats;
    if (!report.contains("ring")) fail("ParseError", "report has no ring section");
    std::vector<std::string> vars = report["ring"]["variables"].get<std::vector<std::string>>();
    std::vector<long> weights = report["ring"]["weights"].get<std::vector<long>>();
    RingPtr ring = RingSpec::make(vars, weights);

    std::vector<const json*> certs;
    collect_certificates(report, certs);
    for (const json* cert : certs) {
        for (const auto& line : *cert) {
            ++stats.lines;
            CertificateLine cl;
            cl.expect_member = line.at("claim").get<std::string>() == "member";
            cl.lhs = parse_polynomial(ring, line.at("lhs").get<std::string>());
            for (const auto& g : line.at("ideal"))
                cl.ideal_gens.push_back(parse_polynomial(ring, g.get<std::string>()));
            if (!replay_certificate_line(cl)) ++stats.failures;
        }
    }
    return stats;
}

std::string render_text_report(const nlohmann::ordered_json& report) {
    std::ostringstream os;
    const auto& ring = report["ring"];
    os << "ring:";
    for (const auto& v : ring["variables"]) os << " " << v.get<std::string>();
    os << "  weights:";
    for (const auto& w : ring["weights"]) os << " " << w;
    os << "\n";
    int idx = 0;
    for (const auto& a : report["analyses"]) {
        ++idx;
        os << "[" << idx << "] " << a["kind"].get<std::string>();
        if (a.contains("params"))
            for (const auto& [k, v] : a["params"].items())
                os << " " << k << "=" << v.get<std::string>();
        os << ": ";
        if (!a["ok"].get<bool>()) {
            os << "ERROR " << a["error"]["code"].get<std::string>() << ": "
               << a["error"]["message"].get<std::string>() << "\n";
            continue;
        }
        const auto& r = a["result"];
        if (r.contains("status")) os << r["status"].get<std::string>();
        else if (r.contains("normal")) os << (r["normal"].get<bool>() ? "normal" : "not normal");
        else if (r.contains("regular")) os << (r["regular"].get<bool>() ? "regular" : "not regular");
        else if (r.contains("holds")) os << (r["holds"].get<bool>() ? "holds" : "fails");
        else if (r.contains("socle_dim"))
            os << "socle_dim=" << r["socle_dim"] << " top_betti=" << r["top_betti"];
        else if (r.contains("betti")) {
            os << "betti=[";
            bool first = true;
            for (const auto& b : r["betti"]) {
                os << (first ? "" : ",") << b;
                first = false;
            }
            os << "] depth=" << r["depth"];
        } else if (r.contains("basis"))
            os << r["basis"].size() << " basis elements";
        else if (r.contains("report"))
            os << "p=" << r["report"]["p"] << ", " << r["report"]["intrinsic"].size()
               << " intrinsic loci";
        else
            os << "ok";
        if (r.contains("witness") && r["witness"].contains("g"))
            os << "  witness g=" << r["witness"]["g"].get<std::string>();
        if (r.contains("normal") && r.contains("table")) {
            for (const auto& row : r["table"])
                if (!row["ok"].get<bool>() && !row["empty"].get<bool>())
                    os << "  (codim_Z Z^" << row["k"] << " = " << row["codim"] << " < "
                       << row["bound"] << ")";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace vdual
