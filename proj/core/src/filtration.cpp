#include "prismlab/filtration.hpp"

#include <map>

namespace prismlab {

Envelope simpson_psi(const FilteredObject& f) {
    if (f.kind != FilteredObject::Kind::ideal_adic)
        throw std::invalid_argument("simpson_psi: presentation form only computed for "
                                    "ideal-adic filtrations");
    return prismatic_envelope(f.base);
}

FreeComplex simpson_psi_complex(const FilteredObject& f, int W) {
    if (f.kind != FilteredObject::Kind::lifted)
        throw std::invalid_argument("simpson_psi_complex: lifted filtrations on free de Rham "
                                    "complexes only");
    (void)W;
    // Termwise: Psi(M tensor Omega^j, I^{bullet-j}) = Psi(M, I^bullet M) with
    // a t^{-j} shift; the shifted colimit differentials become t * nabla.
    const InfConnection& c = *f.conn;
    LogConnection log;
    log.env = simpson_psi(FilteredObject::ideal_adic(c.in));
    log.rank = c.rank;
    log.weights = c.weights;
    const auto& table = log.env.pres.table();
    Polynomial t = Polynomial::variable(table, std::size_t{0});
    for (auto& m : c.coeff) {
        PolyMat rel;
        for (auto& row : m) {
            std::vector<Polynomial> r;
            for (auto& p : row) r.push_back(t * p.relabel(table));
            rel.push_back(std::move(r));
        }
        log.op.push_back(std::move(rel));
    }
    return divided_de_rham(log);
}

GrCheckReport psi_gr_check(const FilteredObject& f, int W) {
    if (f.kind != FilteredObject::Kind::ideal_adic)
        throw std::invalid_argument("psi_gr_check: ideal-adic filtrations only");
    Envelope env = simpson_psi(f);
    QuotientPresentation mod_t = env.pres.with_truncation(1);
    ReesOracle oracle(f.base.table, f.base.gens);
    GrCheckReport rep;
    rep.pass = true;
    for (int w = 0; w <= W; ++w) {
        GrCheckRow row;
        row.weight = w;
        row.psi_mod_t = mod_t.slice_dim(w);
        std::size_t total = 0;
        for (int n = 0; n <= oracle.max_power(w); ++n) {
            row.gr_dims.push_back(oracle.gr_dim(n, w));
            total += row.gr_dims.back();
        }
        if (total != row.psi_mod_t) rep.pass = false;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

FilteredObject convolution_filtration(const FilteredObject& f, const FilteredObject& g,
                                      int level_cap) {
    if (f.kind != FilteredObject::Kind::ideal_adic || g.kind != FilteredObject::Kind::ideal_adic)
        throw std::invalid_argument("convolution_filtration: ideal-adic inputs only");
    // tensor product over Q[t]: shared t, disjoint non-t variables
    std::vector<Variable> vars;
    vars.push_back(f.base.table->var(0));
    for (std::size_t i = 1; i < f.base.table->size(); ++i) vars.push_back(f.base.table->var(i));
    for (std::size_t i = 1; i < g.base.table->size(); ++i) {
        if (f.base.table->contains(g.base.table->var(i).name))
            throw std::invalid_argument("convolution_filtration: variable sets must be disjoint");
        vars.push_back(g.base.table->var(i));
    }
    auto table = std::make_shared<const VariableTable>(std::move(vars));

    std::vector<Polynomial> fg, gg;
    for (auto& p : f.base.gens) fg.push_back(p.relabel(table));
    for (auto& p : g.base.gens) gg.push_back(p.relabel(table));

    FilteredObject out;
    out.kind = FilteredObject::Kind::levelwise;
    out.base.table = table;
    out.base.e = f.base.e;
    out.exhaustive = f.exhaustive && g.exhaustive;
    for (int n = 1; n <= level_cap; ++n) {
        std::vector<Polynomial> gens;
        for (int i = 0; i <= n; ++i) {
            auto a = i == 0 ? std::vector<Polynomial>{} : ideal_power_gens(fg, i);
            auto b = (n - i) == 0 ? std::vector<Polynomial>{} : ideal_power_gens(gg, n - i);
            if (i == 0) {
                for (auto& q : b) gens.push_back(q);
            } else if (n - i == 0) {
                for (auto& p : a) gens.push_back(p);
            } else {
                for (auto& p : a)
                    for (auto& q : b) gens.push_back(p * q);
            }
        }
        out.levels.push_back(std::move(gens));
    }
    return out;
}

std::size_t levelwise_gr_dim(const FilteredObject& f, int n, int w) {
    if (f.kind != FilteredObject::Kind::levelwise)
        throw std::invalid_argument("levelwise_gr_dim: levelwise filtrations only");
    auto dim_of = [&](int lvl) -> std::size_t {
        if (lvl == 0) return weight_monomials(f.base.table, w, 0).size();
        if (lvl > static_cast<int>(f.levels.size()))
            throw std::out_of_range("levelwise_gr_dim: level beyond cap");
        ReesOracle oracle(f.base.table, f.levels[static_cast<std::size_t>(lvl - 1)]);
        return oracle.power_dim(1, w);
    };
    return dim_of(n) - dim_of(n + 1);
}

bool levelwise_is_adic(const FilteredObject& f, const Ideal& K) {
    if (f.kind != FilteredObject::Kind::levelwise) return false;
    for (std::size_t n = 1; n <= f.levels.size(); ++n) {
        Ideal lvl(f.base.table, f.levels[n - 1]);
        Ideal pw(f.base.table,
                 [&] {
                     auto gens = ideal_power_gens(K.generators(), static_cast<int>(n));
                     for (auto& g : gens) g = g.relabel(f.base.table);
                     return gens;
                 }());
        if (!ideals_equal(lvl, pw)) return false;
    }
    return true;
}

}  // namespace prismlab
