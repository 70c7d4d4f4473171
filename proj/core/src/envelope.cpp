#include "prismlab/envelope.hpp"

#include <algorithm>

namespace prismlab {

namespace {

int min_weight(const std::vector<Polynomial>& gens) {
    int mw = 0;
    for (auto& g : gens) {
        int w = *g.homogeneous_weight();
        if (mw == 0 || w < mw) mw = w;
    }
    return mw;
}

struct ReesBuild {
    VarTablePtr table;
    std::vector<std::string> names;
    Ideal saturated;
};

// adjoin one Rees variable per generator, impose t*x - f, saturate t-torsion
ReesBuild rees_core(const VarTablePtr& base, const std::vector<Polynomial>& gens,
                    const std::vector<std::pair<std::string, VarRole>>& rees_vars) {
    std::vector<Variable> extra;
    for (std::size_t q = 0; q < gens.size(); ++q) {
        auto w = gens[q].homogeneous_weight();
        if (!w || (*w <= 0 && !gens[q].is_zero()))
            throw std::invalid_argument("envelope: generators must be weighted-homogeneous "
                                        "of positive weight");
        extra.push_back({rees_vars[q].first, rees_vars[q].second, *w});
    }
    auto ext = base->extended(extra);
    Polynomial t = Polynomial::variable(ext, std::size_t{0});
    std::vector<Polynomial> rel;
    for (std::size_t q = 0; q < gens.size(); ++q)
        rel.push_back(t * Polynomial::variable(ext, rees_vars[q].first) - gens[q].relabel(ext));
    Ideal j0(ext, std::move(rel));
    return {ext, {}, saturate_t(j0)};
}

}  // namespace

LciInput make_lci(VarTablePtr table, std::vector<Polynomial> gens, int e,
                  bool run_certification, std::size_t max_permutations) {
    LciInput in;
    in.table = std::move(table);
    in.e = e;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.homogeneous_weight())
            throw std::invalid_argument("make_lci: inhomogeneous generator " + g.str());
        in.gens.push_back(std::move(g));
    }
    // R = P/(I, t) must be nonzero
    std::vector<Polynomial> with_t = in.gens;
    with_t.push_back(Polynomial::variable(in.table, std::size_t{0}));
    if (Ideal(in.table, with_t).is_unit_ideal())
        throw std::invalid_argument("make_lci: P/(I, t) is the zero ring");
    if (run_certification) {
        auto cert = certify_regularity(in.table, in.gens, max_permutations);
        if (cert.certified) {
            in.cert = LciInput::Cert::certified;
            in.cert_order = cert.order_used;
        } else {
            in.cert = LciInput::Cert::failed;
        }
    }
    return in;
}

Envelope prismatic_envelope(const LciInput& in) {
    if (Ideal(in.table, in.gens).is_unit_ideal())
        throw std::domain_error("prismatic_envelope: I is the unit ideal, envelope collapses "
                                "to the zero ring");
    std::vector<std::pair<std::string, VarRole>> rv;
    for (std::size_t q = 0; q < in.gens.size(); ++q)
        rv.emplace_back("_x" + std::to_string(q + 1), VarRole::envelope);
    ReesBuild rb = rees_core(in.table, in.gens, rv);
    Envelope env{QuotientPresentation(rb.table, rb.saturated, in.e), in, {}};
    for (auto& [n, r] : rv) env.rees_names.push_back(n);
    return env;
}

Derivation Envelope::rescaled_derivation(std::size_t geo_var) const {
    const auto& table = pres.table();
    Derivation d;
    d.var_images.assign(table->size(), Polynomial::zero(table));
    Polynomial t = Polynomial::variable(table, std::size_t{0});
    d.var_images[table->index_of(input.table->var(geo_var).name)] = t;
    for (std::size_t q = 0; q < rees_names.size(); ++q)
        d.var_images[table->index_of(rees_names[q])] =
            input.gens[q].relabel(table).derivative(
                table->index_of(input.table->var(geo_var).name));
    return d;
}

IndependenceReport generator_independence_check(const LciInput& in, const Polynomial& extra,
                                                int W) {
    IndependenceReport rep;
    Ideal I(in.table, in.gens);
    if (!extra.is_zero() && !I.contains(extra)) {
        rep.detail = "extra generator is not a member of the ideal";
        return rep;
    }
    Envelope env1 = prismatic_envelope(in);
    if (extra.is_zero()) {
        rep.pass = true;
        for (int w = 0; w <= W; ++w) {
            auto d = env1.pres.slice_dim(w);
            rep.dims.push_back({w, {d, d}});
        }
        rep.detail = "zero generator, trivially redundant";
        return rep;
    }
    LciInput enlarged = in;
    enlarged.gens.push_back(extra);
    Envelope env2 = prismatic_envelope(enlarged);

    bool dims_ok = true;
    for (int w = 0; w <= W; ++w) {
        auto d1 = env1.pres.slice_dim(w);
        auto d2 = env2.pres.slice_dim(w);
        rep.dims.push_back({w, {d1, d2}});
        dims_ok = dims_ok && d1 == d2;
    }

    // phi: env1 -> env2 on x-generators is the identity; relations map in
    bool maps_ok = true;
    for (auto& g : env1.pres.defining_ideal().generators())
        if (!env2.pres.nf_pre(g.relabel(env2.pres.table())).is_zero()) maps_ok = false;
    // psi: env2 -> env1, the redundant _y goes to sum a_q _x_q
    auto coeffs = express_in_generators(extra, in.gens);
    if (!coeffs) {
        rep.detail = "could not express the redundant generator in the ideal generators";
        return rep;
    }
    const auto& t1 = env1.pres.table();
    Polynomial y_image = Polynomial::zero(t1);
    for (std::size_t q = 0; q < in.gens.size(); ++q)
        y_image += (*coeffs)[q].relabel(t1) *
                   Polynomial::variable(t1, env1.rees_names[q]);
    RingMap psi(env2.pres.table(), t1);
    psi.set(env2.rees_names.back(), y_image);
    for (auto& g : env2.pres.defining_ideal().generators())
        if (!env1.pres.nf_pre(psi(g)).is_zero()) maps_ok = false;
    // phi then psi on the redundant generator returns its expansion
    Polynomial round = env2.pres.nf_pre(
        Polynomial::variable(env2.pres.table(), env2.rees_names.back()) -
        y_image.relabel(env2.pres.table()));
    if (!round.is_zero()) maps_ok = false;

    rep.pass = dims_ok && maps_ok;
    if (!dims_ok) rep.detail = "slice dimension mismatch";
    else if (!maps_ok) rep.detail = "generator maps fail to invert";
    return rep;
}

QuotientPresentation infinitesimal_envelope(const LciInput& in, int m) {
    if (m < 1) throw std::invalid_argument("infinitesimal_envelope: m >= 1 required");
    return QuotientPresentation(in.table, Ideal(in.table, ideal_power_gens(in.gens, m)), in.e);
}

int infinitesimal_stabilization_index(const LciInput& in, int w) {
    if (in.gens.empty()) return 1;
    int mw = min_weight(in.gens);
    return w / mw + 1;  // smallest m with m*mw > w
}

QuotientPresentation infinitesimal_model(const LciInput& in, int W) {
    int m = infinitesimal_stabilization_index(in, W) + 1;  // one extra for the differential
    return infinitesimal_envelope(in, m);
}

SelfProductEnvelope self_product_envelope(const LciInput& in, int level) {
    if (level < 0) throw std::invalid_argument("self_product_envelope: level >= 0");
    auto geo = in.table->indices_with_role(VarRole::geometric);
    std::vector<Variable> extra;
    SelfProductEnvelope sp;
    sp.input = in;
    sp.level = level;
    for (int j = 1; j <= level; ++j) {
        std::vector<std::string> row;
        for (auto gi : geo) {
            std::string name = "_del" + std::to_string(j) + "_" + std::to_string(gi);
            extra.push_back({name, VarRole::diagonal, in.table->var(gi).weight});
            row.push_back(name);
        }
        sp.delta_names.push_back(std::move(row));
    }
    auto pl = in.table->extended(extra);

    std::vector<Polynomial> gens;
    std::vector<std::pair<std::string, VarRole>> rv;
    for (std::size_t q = 0; q < in.gens.size(); ++q) {
        gens.push_back(in.gens[q].relabel(pl));
        rv.emplace_back("_x" + std::to_string(q + 1), VarRole::envelope);
        sp.rees_names.push_back(rv.back().first);
    }
    for (int j = 1; j <= level; ++j) {
        std::vector<std::string> row;
        for (std::size_t i = 0; i < geo.size(); ++i) {
            gens.push_back(Polynomial::variable(
                pl, sp.delta_names[static_cast<std::size_t>(j - 1)][i]));
            std::string name = "_d" + std::to_string(j) + "_" + std::to_string(geo[i]);
            rv.emplace_back(name, VarRole::diagonal);
            row.push_back(name);
        }
        sp.divided_names.push_back(std::move(row));
    }
    ReesBuild rb = rees_core(pl, gens, rv);
    sp.pres = QuotientPresentation(rb.table, rb.saturated, in.e);
    return sp;
}

namespace {

// (f(T + t*d) - f(T)) / t over the target table; geo_dst indexes the
// geometric variables inside dst, shifted_images their translates
Polynomial taylor_quotient(const Polynomial& f, const VarTablePtr& dst,
                           const std::vector<std::size_t>& geo_dst,
                           const std::vector<Polynomial>& shifted_images) {
    std::map<std::size_t, Polynomial> assign;
    Polynomial frel = f.relabel(dst);
    for (std::size_t i = 0; i < geo_dst.size(); ++i) assign.emplace(geo_dst[i], shifted_images[i]);
    Polynomial shifted = frel.substitute(assign);
    return (shifted - frel).divide_by_t(1);
}

}  // namespace

RingMap coface_map(const SelfProductEnvelope& from, const SelfProductEnvelope& to, int k) {
    const int l = from.level;
    if (to.level != l + 1 || k < 0 || k > l + 1)
        throw std::invalid_argument("coface_map: bad levels");
    const auto& src = from.pres.table();
    const auto& dst = to.pres.table();
    RingMap phi(src, dst);
    auto geo = from.input.table->indices_with_role(VarRole::geometric);

    auto dst_var = [&](const std::string& n) { return Polynomial::variable(dst, n); };
    Polynomial t = Polynomial::variable(dst, std::size_t{0});

    if (k == 0) {
        // T -> T + delta'_1, delta_j -> delta'_{j+1} - delta'_1
        std::vector<Polynomial> shifted;
        std::vector<std::size_t> geo_dst;
        for (std::size_t i = 0; i < geo.size(); ++i) {
            std::string name = from.input.table->var(geo[i]).name;
            Polynomial img = dst_var(name) + t * dst_var(to.divided_names[0][i]);
            phi.set(name, img);
            geo_dst.push_back(dst->index_of(name));
            shifted.push_back(img);
        }
        for (int j = 1; j <= l; ++j)
            for (std::size_t i = 0; i < geo.size(); ++i) {
                auto jj = static_cast<std::size_t>(j - 1);
                phi.set(from.delta_names[jj][i],
                        dst_var(to.delta_names[static_cast<std::size_t>(j)][i]) -
                            dst_var(to.delta_names[0][i]));
                phi.set(from.divided_names[jj][i],
                        dst_var(to.divided_names[static_cast<std::size_t>(j)][i]) -
                            dst_var(to.divided_names[0][i]));
            }
        // x_q -> x'_q + (f_q(T + t d'_1) - f_q(T)) / t
        for (std::size_t q = 0; q < from.rees_names.size(); ++q) {
            Polynomial quot =
                taylor_quotient(from.input.gens[q], dst, geo_dst, shifted);
            phi.set(from.rees_names[q], dst_var(to.rees_names[q]) + quot);
        }
    } else {
        // T, x fixed; delta_j -> delta'_j (j < k) or delta'_{j+1} (j >= k)
        for (int j = 1; j <= l; ++j) {
            std::size_t jj = static_cast<std::size_t>(j - 1);
            std::size_t tgt = static_cast<std::size_t>(j < k ? j - 1 : j);
            for (std::size_t i = 0; i < geo.size(); ++i) {
                phi.set(from.delta_names[jj][i], dst_var(to.delta_names[tgt][i]));
                phi.set(from.divided_names[jj][i], dst_var(to.divided_names[tgt][i]));
            }
        }
        for (std::size_t q = 0; q < from.rees_names.size(); ++q)
            phi.set(from.rees_names[q], dst_var(to.rees_names[q]));
    }
    return phi;
}

RingMap codegeneracy_map(const SelfProductEnvelope& from, const SelfProductEnvelope& to,
                         int k) {
    const int l = to.level;
    if (from.level != l + 1 || k < 0 || k > l)
        throw std::invalid_argument("codegeneracy_map: bad levels");
    const auto& src = from.pres.table();
    const auto& dst = to.pres.table();
    RingMap sig(src, dst);
    auto geo = to.input.table->indices_with_role(VarRole::geometric);
    auto dst_var = [&](const std::string& n) { return Polynomial::variable(dst, n); };

    for (int j = 1; j <= l + 1; ++j) {
        std::size_t jj = static_cast<std::size_t>(j - 1);
        for (std::size_t i = 0; i < geo.size(); ++i) {
            if (j == k + 1) {
                if (k == 0) {
                    sig.set(from.delta_names[jj][i], Polynomial::zero(dst));
                    sig.set(from.divided_names[jj][i], Polynomial::zero(dst));
                } else {
                    sig.set(from.delta_names[jj][i],
                            dst_var(to.delta_names[static_cast<std::size_t>(k - 1)][i]));
                    sig.set(from.divided_names[jj][i],
                            dst_var(to.divided_names[static_cast<std::size_t>(k - 1)][i]));
                }
            } else {
                std::size_t tgt = static_cast<std::size_t>(j <= k ? j - 1 : j - 2);
                sig.set(from.delta_names[jj][i], dst_var(to.delta_names[tgt][i]));
                sig.set(from.divided_names[jj][i], dst_var(to.divided_names[tgt][i]));
            }
        }
    }
    for (std::size_t q = 0; q < from.rees_names.size(); ++q)
        sig.set(from.rees_names[q], dst_var(to.rees_names[q]));
    return sig;
}

InjectivityReport envelope_injectivity_check(const LciInput& in, int n, int W) {
    InjectivityReport rep;
    LciInput trunc = in;
    trunc.e = n;
    QuotientPresentation a = infinitesimal_envelope(trunc, n);
    Envelope env = prismatic_envelope(trunc);
    rep.pass = true;
    for (int w = 0; w <= W; ++w) {
        const auto& basis = a.slice_basis(w);
        QMat m = qmat_zero(env.pres.slice_dim(w), basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c) {
            Polynomial img = env.pres.nf(
                Polynomial::monomial(a.table(), basis[c], Rational(1)).relabel(env.pres.table()));
            QVec col = env.pres.to_slice(img, w);
            for (std::size_t r = 0; r < col.size(); ++r) m[r][c] = col[r];
        }
        std::size_t ker = basis.size() - rank(m);
        rep.kernel_dims.push_back({w, ker});
        if (ker != 0) rep.pass = false;
    }
    return rep;
}

}  // namespace prismlab
