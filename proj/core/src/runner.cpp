#include "prismlab/runner.hpp"

#include <chrono>

#include "prismlab/poly_parse.hpp"
#include "prismlab/suite.hpp"
#include "prismlab/util.hpp"

namespace prismlab {

const char* const kToolVersion = "prismlab 0.1.0";

using json = nlohmann::ordered_json;

json report_to_json(const CohomologyReport& rep) {
    json out = json::array();
    for (auto& e : rep.entries) {
        json row;
        row["degree"] = e.degree;
        row["weight"] = e.weight;
        row["twist"] = e.twist;
        row["free_rank"] = e.structure.free_rank;
        row["torsion"] = e.structure.torsion;
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

json check_to_json(const TheoremCheckResult& r) {
    json out;
    out["id"] = r.id;
    json params;
    for (auto& [k, v] : r.params) params[k] = v;
    out["params"] = std::move(params);
    switch (r.verdict) {
        case TheoremCheckResult::Verdict::pass: out["verdict"] = "pass"; break;
        case TheoremCheckResult::Verdict::fail: out["verdict"] = "fail"; break;
        case TheoremCheckResult::Verdict::unverified_hypothesis:
            out["verdict"] = "unverified-hypothesis";
            break;
    }
    out["evidence"] = r.evidence;
    return out;
}

struct TaskContext {
    const SessionSpec& spec;
    const RunOptions& opt;

    int trunc() const { return opt.trunc_override.value_or(spec.trunc); }
    int wmax() const { return opt.weight_override.value_or(spec.weight_max); }

    int arg_int(const SessionSpec::TaskDecl& t, const std::string& k, int dflt) const {
        auto it = t.args.find(k);
        if (it == t.args.end()) return dflt;
        return std::stoi(it->second);
    }
    std::string arg(const SessionSpec::TaskDecl& t, const std::string& k,
                    const std::string& dflt = "") const {
        auto it = t.args.find(k);
        return it == t.args.end() ? dflt : it->second;
    }

    LciInput lci_for(const SessionSpec::TaskDecl& t, int e, const std::string& ring_key = "ring",
                     const std::string& ideal_key = "ideal") const {
        std::string rn = arg(t, ring_key);
        if (rn.empty()) throw std::invalid_argument("task needs a '" + ring_key + "' argument");
        const auto* r = spec.find_ring(rn);
        std::string in = arg(t, ideal_key, "none");
        std::vector<Polynomial> gens;
        if (in != "none") {
            const auto* d = spec.find_ideal(in);
            gens = d->gens;
        }
        return make_lci(r->table, std::move(gens), e);
    }

    std::optional<LogConnection> crystal_for(const SessionSpec::TaskDecl& t,
                                             const LciInput& in) const {
        std::string cn = arg(t, "crystal");
        if (cn.empty()) return std::nullopt;
        const auto* c = spec.find_crystal(cn);
        LogConnection conn;
        conn.env = prismatic_envelope(in);
        conn.rank = static_cast<std::size_t>(c->rank);
        conn.weights = c->weights;
        auto geo = in.table->indices_with_role(VarRole::geometric);
        Polynomial zero = Polynomial::zero(conn.env.pres.table());
        conn.op.assign(geo.size(),
                       PolyMat(conn.rank, std::vector<Polynomial>(conn.rank, zero)));
        for (auto& [var, rows] : c->nabla_text) {
            std::size_t pos = geo.size();
            for (std::size_t i = 0; i < geo.size(); ++i)
                if (in.table->var(geo[i]).name == var) pos = i;
            if (pos == geo.size())
                throw std::invalid_argument("crystal " + c->name + ": nabla for variable " +
                                            var + " outside the ring");
            if (rows.size() != conn.rank)
                throw std::invalid_argument("crystal " + c->name + ": matrix rank mismatch");
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (rows[r].size() != conn.rank)
                    throw std::invalid_argument("crystal " + c->name + ": ragged matrix");
                for (std::size_t k = 0; k < rows[r].size(); ++k)
                    conn.op[pos][r][k] =
                        parse_polynomial(conn.env.pres.table(), rows[r][k]);
            }
        }
        return conn;
    }
};

json run_one(const TaskContext& ctx, const SessionSpec::TaskDecl& t, bool& any_fail) {
    json out;
    out["kind"] = t.kind;
    json args;
    for (auto& [k, v] : t.args) args[k] = v;
    out["args"] = std::move(args);

    const int e = ctx.arg_int(t, "e", ctx.trunc());
    const int W = ctx.arg_int(t, "weight_max", ctx.wmax());

    auto grade = [&](const TheoremCheckResult& r) {
        out["check"] = check_to_json(r);
        out["status"] = r.verdict == TheoremCheckResult::Verdict::pass ? "pass"
                        : r.verdict == TheoremCheckResult::Verdict::fail ? "fail"
                                                                         : "unverified";
        if (r.verdict == TheoremCheckResult::Verdict::fail) any_fail = true;
    };

    if (t.kind == "envelope") {
        LciInput in = ctx.lci_for(t, e);
        Envelope env = prismatic_envelope(in);
        json dims = json::array();
        bool ok = true;
        ReesOracle oracle(in.table, in.gens);
        for (int w = 0; w <= W; ++w) {
            json row;
            row["weight"] = w;
            row["dim"] = env.pres.slice_dim(w);
            if (ctx.opt.verify) {
                std::size_t want = oracle.envelope_slice_dim(w, e);
                row["oracle"] = want;
                if (want != env.pres.slice_dim(w)) ok = false;
            }
            dims.push_back(std::move(row));
        }
        out["presentation"] = json::array();
        for (auto& g : env.pres.defining_ideal().basis().polys)
            out["presentation"].push_back(g.str());
        out["t_torsion_free"] = env.pres.t_torsion_free_presented();
        out["certified"] = in.certified();
        out["slice_dims"] = std::move(dims);
        if (!env.pres.t_torsion_free_presented()) ok = false;
        out["status"] = ok ? "pass" : "fail";
        if (!ok) any_fail = true;
    } else if (t.kind == "prism_coh") {
        LciInput in = ctx.lci_for(t, e);
        auto crystal = ctx.crystal_for(t, in);
        CohomologyReport rep = prismatic_cohomology(in, W, crystal);
        out["cohomology"] = report_to_json(rep);
        bool ok = true;
        if (ctx.opt.verify) {
            TheoremCheckResult agree =
                cech_agreement_check(in, ctx.spec.cech_depth, W, crystal);
            out["verify"] = check_to_json(agree);
            ok = agree.verdict != TheoremCheckResult::Verdict::fail;
        }
        out["status"] = ok ? "pass" : "fail";
        if (!ok) any_fail = true;
    } else if (t.kind == "inf_coh") {
        LciInput in = ctx.lci_for(t, e);
        CohomologyReport rep = infinitesimal_cohomology(in, W);
        out["cohomology"] = report_to_json(rep);
        json stab = json::array();
        for (int w = 0; w <= W; ++w)
            stab.push_back(infinitesimal_stabilization_index(in, w));
        out["stabilization_index"] = std::move(stab);
        out["status"] = "pass";
    } else if (t.kind == "hodge_tate") {
        LciInput in = ctx.lci_for(t, std::max(e, 2));
        HodgeTateData data = hodge_tate_table(in, W);
        out["mod_t"] = report_to_json(data.mod_t);
        json bs = json::array();
        for (auto& [deg, w, m] : data.bockstein) {
            json entry;
            entry["degree"] = deg;
            entry["weight"] = w;
            entry["twist"] = 1;
            json rows = json::array();
            for (auto& r : m) {
                json row = json::array();
                for (auto& x : r) row.push_back(x.str());
                rows.push_back(std::move(row));
            }
            entry["matrix"] = std::move(rows);
            bs.push_back(std::move(entry));
        }
        out["bockstein"] = std::move(bs);
        grade(data.result);
    } else if (t.kind == "cech") {
        LciInput in = ctx.lci_for(t, e);
        auto crystal = ctx.crystal_for(t, in);
        int depth = ctx.arg_int(t, "depth", ctx.spec.cech_depth);
        CohomologyReport rep = cech_alexander(in, depth, W, crystal);
        out["cohomology"] = report_to_json(rep);
        grade(cech_agreement_check(in, depth, W, crystal));
    } else if (t.kind == "decalage") {
        grade(decalage_check(ctx.lci_for(t, e), W));
    } else if (t.kind == "reduction") {
        LciInput in = ctx.lci_for(t, std::max(e, 2));
        auto crystal = ctx.crystal_for(t, in);
        grade(reduction_check(in, W, crystal));
    } else if (t.kind == "kunneth") {
        LciInput a = ctx.lci_for(t, e);
        LciInput b = ctx.lci_for(t, e, "ring2", "ideal2");
        grade(kunneth_check(a, b, W, ctx.arg_int(t, "gr_cap", 2)));
    } else if (t.kind == "localize") {
        LciInput in = ctx.lci_for(t, e);
        std::string fx = ctx.arg(t, "f", "1");
        Polynomial f = parse_polynomial(in.table, fx);
        grade(localization_check(in, f, W, ctx.arg_int(t, "gr_cap", 2)));
    } else if (t.kind == "split") {
        grade(split_check(ctx.lci_for(t, e), W));
    } else if (t.kind == "resolve") {
        LciInput in = ctx.lci_for(t, e);
        QuotientPresentation B(in.table, Ideal(in.table, in.gens), e);
        std::vector<Polynomial> pair_gens;
        std::string pn = ctx.arg(t, "pair", "none");
        if (pn != "none") pair_gens = ctx.spec.find_ideal(pn)->gens;
        int N = ctx.arg_int(t, "level", ctx.spec.simp_level);
        ResolvedPair res = resolve_pair(B, pair_gens, N, W);
        out["pi0_exact"] = res.pi0_exact;
        json hv = json::array();
        for (auto& [n, v] : res.higher_vanishing) {
            json row;
            row["n"] = n;
            row["vanishes"] = v;
            hv.push_back(std::move(row));
        }
        out["higher_vanishing"] = std::move(hv);
        json lv = json::array();
        for (int n = 0; n <= res.algebra.truncation_level(); ++n)
            lv.push_back(res.algebra.level_size(n) - 1);  // without t
        out["level_variable_counts"] = std::move(lv);
        out["status"] = res.verified ? "pass" : "fail";
        if (!res.verified) any_fail = true;
    } else if (t.kind == "left_kan") {
        LciInput in = ctx.lci_for(t, 1);
        int N = ctx.arg_int(t, "level", ctx.spec.simp_level);
        LeftKanReport rep = left_kan_ht_pieces(in, N, W);
        auto rows = [&](const std::vector<std::array<std::size_t, 2>>& v) {
            json arr = json::array();
            for (std::size_t w = 0; w < v.size(); ++w) {
                json row;
                row["weight"] = w;
                row["realization"] = v[w][0];
                row["comparison"] = v[w][1];
                arr.push_back(std::move(row));
            }
            return arr;
        };
        out["gr0"] = rows(rep.gr0);
        out["gr1_h0"] = rows(rep.gr1_h0);
        out["gr1_hm1"] = rows(rep.gr1_hm1);
        out["status"] = rep.pass ? "pass" : "fail";
        if (!rep.pass) any_fail = true;
    } else if (t.kind == "psi_check") {
        LciInput in = ctx.lci_for(t, e);
        InfConnection coeff = InfConnection::structure_sheaf(in);
        std::string cn = ctx.arg(t, "crystal");
        if (!cn.empty()) {
            auto crystal = ctx.crystal_for(t, in);
            coeff.rank = crystal->rank;
            coeff.weights = crystal->weights;
            coeff.coeff.clear();
            for (auto& m : crystal->op) {
                PolyMat rows;
                for (auto& r : m) {
                    std::vector<Polynomial> row;
                    for (auto& p : r) {
                        if (!p.divisible_by_t(1))
                            throw std::invalid_argument(
                                "psi_check: crystal operators must be integral (t-divisible)");
                        row.push_back(p.divide_by_t(1).relabel(in.table));
                    }
                    rows.push_back(std::move(row));
                }
                coeff.coeff.push_back(std::move(rows));
            }
        }
        grade(psi_of_infinitesimal_check(in, coeff, W));
    } else {
        throw std::invalid_argument("unknown task kind " + t.kind);
    }
    return out;
}

}  // namespace

RunOutcome run_session(const SessionSpec& spec, const RunOptions& opt) {
    set_thread_count(opt.threads);
    RunOutcome outcome;
    json stable;
    stable["tool_version"] = kToolVersion;
    stable["seed"] = opt.seed;
    stable["spec_echo"] = render_spec(spec);

    json tasks = json::array();
    json timing = json::array();
    bool any_fail = false;
    TaskContext ctx{spec, opt};
    for (auto& t : spec.tasks) {
        auto start = std::chrono::steady_clock::now();
        json entry;
        try {
            entry = run_one(ctx, t, any_fail);
        } catch (const BudgetExceeded& ex) {
            entry["kind"] = t.kind;
            entry["status"] = "error";
            entry["error"] = std::string("resource budget exceeded: ") + ex.what();
            any_fail = true;
        } catch (const std::exception& ex) {
            entry["kind"] = t.kind;
            entry["status"] = "error";
            entry["error"] = ex.what();
            any_fail = true;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        timing.push_back(ms);
        tasks.push_back(std::move(entry));
    }
    stable["tasks"] = std::move(tasks);
    outcome.report["stable"] = std::move(stable);
    outcome.report["timing"] = std::move(timing);
    outcome.exit_code = any_fail ? 3 : 0;
    return outcome;
}

}  // namespace prismlab
