#include "prismlab/connection.hpp"

#include <algorithm>

namespace prismlab {

std::vector<std::pair<std::vector<std::size_t>, int>> kaehler_basis(const VarTablePtr& table,
                                                                    int i) {
    auto geo = table->indices_with_role(VarRole::geometric);
    std::vector<std::pair<std::vector<std::size_t>, int>> out;
    if (i < 0 || i > static_cast<int>(geo.size())) return out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == static_cast<std::size_t>(i)) {
            int w = 0;
            for (auto v : cur) w += table->var(v).weight;
            out.push_back({cur, w});
            return;
        }
        for (std::size_t k = start; k < geo.size(); ++k) {
            cur.push_back(geo[k]);
            rec(k + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

LogConnection structure_sheaf_connection(const Envelope& env) {
    LogConnection c;
    c.env = env;
    c.rank = 1;
    c.weights = {0};
    auto geo = env.input.table->indices_with_role(VarRole::geometric);
    Polynomial z = Polynomial::zero(env.pres.table());
    for (std::size_t i = 0; i < geo.size(); ++i)
        c.op.push_back(PolyMat(1, std::vector<Polynomial>(1, z)));
    return c;
}

std::vector<Polynomial> apply_rescaled_nabla(const LogConnection& c, std::size_t geo_pos,
                                             const std::vector<Polynomial>& v) {
    auto geo = c.geo();
    Derivation der = c.env.rescaled_derivation(geo[geo_pos]);
    std::vector<Polynomial> out(c.rank, Polynomial::zero(c.env.pres.table()));
    for (std::size_t b = 0; b < c.rank; ++b) {
        Polynomial acc = der.apply(v[b]);
        for (std::size_t a = 0; a < c.rank; ++a)
            if (!c.op[geo_pos][b][a].is_zero() && !v[a].is_zero())
                acc += c.op[geo_pos][b][a] * v[a];
        out[b] = c.env.pres.nf(acc);
    }
    return out;
}

bool check_integrality(const LogConnection& c) {
    QuotientPresentation mod_t = c.env.pres.with_truncation(1);
    for (auto& mat : c.op)
        for (auto& row : mat)
            for (auto& entry : row)
                if (!mod_t.nf(entry).is_zero()) return false;
    return true;
}

bool check_integrability(const LogConnection& c) {
    auto geo = c.geo();
    const auto& pres = c.env.pres;
    for (std::size_t i = 0; i < geo.size(); ++i) {
        Derivation di = c.env.rescaled_derivation(geo[i]);
        for (std::size_t j = i + 1; j < geo.size(); ++j) {
            Derivation dj = c.env.rescaled_derivation(geo[j]);
            for (std::size_t b = 0; b < c.rank; ++b)
                for (std::size_t a = 0; a < c.rank; ++a) {
                    Polynomial acc =
                        di.apply(c.op[j][b][a]) - dj.apply(c.op[i][b][a]);
                    for (std::size_t k = 0; k < c.rank; ++k)
                        acc += c.op[i][b][k] * c.op[j][k][a] -
                               c.op[j][b][k] * c.op[i][k][a];
                    if (!pres.nf(acc).is_zero()) return false;
                }
        }
    }
    return true;
}

namespace {

struct WedgeGen {
    std::size_t module_gen;
    std::vector<std::size_t> wedge;  // geometric var indices, increasing
};

// de Rham-shaped complex: terms M tensor wedge^j, entries delta_ab * D_i + op_i
FreeComplex de_rham_shape(const QuotientPresentation& pres,
                          const std::vector<std::size_t>& geo,
                          std::vector<Derivation> derivs, std::size_t rank,
                          const std::vector<int>& weights,
                          const std::vector<PolyMat>& ops) {
    const auto& table = pres.table();
    const int n = static_cast<int>(geo.size());
    std::vector<std::vector<WedgeGen>> levels(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        auto wedges = kaehler_basis(table, j);
        // kaehler_basis runs over the presentation table's geometric vars;
        // restrict to the requested ones (they coincide for envelopes)
        for (auto& [idx, w] : wedges) {
            bool ok = true;
            for (auto v : idx)
                if (std::find(geo.begin(), geo.end(), v) == geo.end()) ok = false;
            if (!ok) continue;
            for (std::size_t a = 0; a < rank; ++a)
                levels[static_cast<std::size_t>(j)].push_back({a, idx});
        }
    }
    std::vector<FreeComplex::Term> terms;
    for (auto& lvl : levels) {
        FreeComplex::Term t;
        for (auto& g : lvl) {
            std::string name = "m" + std::to_string(g.module_gen + 1) + "|d(";
            int w = weights[g.module_gen];
            for (std::size_t k = 0; k < g.wedge.size(); ++k) {
                name += (k ? "," : "") + table->var(g.wedge[k]).name;
                w += table->var(g.wedge[k]).weight;
            }
            name += ")";
            t.push_back({name, w});
        }
        terms.push_back(std::move(t));
    }

    std::vector<FreeComplex::OpMatrix> diffs;
    Polynomial zero = Polynomial::zero(table);
    for (int j = 0; j < n; ++j) {
        const auto& src = levels[static_cast<std::size_t>(j)];
        const auto& dst = levels[static_cast<std::size_t>(j + 1)];
        FreeComplex::OpMatrix m(dst.size(), std::vector<RingOp>(src.size(), RingOp::of(zero)));
        for (std::size_t cc = 0; cc < src.size(); ++cc) {
            for (std::size_t gi = 0; gi < geo.size(); ++gi) {
                std::size_t var = geo[gi];
                const auto& J = src[cc].wedge;
                if (std::find(J.begin(), J.end(), var) != J.end()) continue;
                std::vector<std::size_t> K = J;
                K.insert(std::upper_bound(K.begin(), K.end(), var), var);
                std::size_t pos = static_cast<std::size_t>(
                    std::lower_bound(K.begin(), K.end(), var) - K.begin());
                Rational sign(pos % 2 == 0 ? 1 : -1);
                for (std::size_t b = 0; b < rank; ++b) {
                    // target generator (b, K)
                    std::size_t rr = 0;
                    bool found = false;
                    for (; rr < dst.size(); ++rr)
                        if (dst[rr].module_gen == b && dst[rr].wedge == K) { found = true; break; }
                    if (!found) throw std::logic_error("de_rham_shape: wedge lookup");
                    RingOp& entry = m[rr][cc];
                    if (b == src[cc].module_gen)
                        entry.derivs.emplace_back(gi, Polynomial::constant(table, sign));
                    const Polynomial& nab = ops[gi][b][src[cc].module_gen];
                    if (!nab.is_zero()) entry.mult += nab * sign;
                }
            }
        }
        diffs.push_back(std::move(m));
    }
    return FreeComplex(pres, 0, std::move(terms), std::move(diffs), std::move(derivs));
}

void require_graded(const VarTablePtr& table, const std::vector<std::size_t>& geo,
                    std::size_t rank, const std::vector<int>& weights,
                    const std::vector<PolyMat>& ops) {
    for (std::size_t i = 0; i < geo.size(); ++i)
        for (std::size_t b = 0; b < rank; ++b)
            for (std::size_t a = 0; a < rank; ++a) {
                const Polynomial& p = ops[i][b][a];
                if (p.is_zero()) continue;
                auto w = p.homogeneous_weight();
                int need = weights[a] - weights[b] - table->var(geo[i]).weight;
                if (!w || *w != need)
                    throw std::invalid_argument(
                        "connection is not weight-graded: operator entry " + p.str());
            }
}

}  // namespace

FreeComplex divided_de_rham(const LogConnection& c) {
    auto geo_in = c.geo();
    const auto& table = c.env.pres.table();
    std::vector<std::size_t> geo;
    for (auto g : geo_in) geo.push_back(table->index_of(c.env.input.table->var(g).name));
    std::vector<PolyMat> ops;
    for (auto& m : c.op) {
        PolyMat rel;
        for (auto& row : m) {
            std::vector<Polynomial> r;
            for (auto& p : row) r.push_back(p.relabel(table));
            rel.push_back(std::move(r));
        }
        ops.push_back(std::move(rel));
    }
    require_graded(table, geo, c.rank, c.weights, ops);
    std::vector<Derivation> derivs;
    for (auto g : geo_in) derivs.push_back(c.env.rescaled_derivation(g));
    return de_rham_shape(c.env.pres, geo, std::move(derivs), c.rank, c.weights, ops);
}

InfConnection InfConnection::structure_sheaf(const LciInput& in) {
    InfConnection c;
    c.in = in;
    c.rank = 1;
    c.weights = {0};
    auto geo = in.table->indices_with_role(VarRole::geometric);
    Polynomial z = Polynomial::zero(in.table);
    for (std::size_t i = 0; i < geo.size(); ++i)
        c.coeff.push_back(PolyMat(1, std::vector<Polynomial>(1, z)));
    return c;
}

bool check_inf_integrability(const InfConnection& c, int W) {
    QuotientPresentation model = infinitesimal_model(c.in, W);
    auto geo = c.in.table->indices_with_role(VarRole::geometric);
    for (std::size_t i = 0; i < geo.size(); ++i)
        for (std::size_t j = i + 1; j < geo.size(); ++j)
            for (std::size_t b = 0; b < c.rank; ++b)
                for (std::size_t a = 0; a < c.rank; ++a) {
                    Polynomial acc = c.coeff[j][b][a].derivative(geo[i]) -
                                     c.coeff[i][b][a].derivative(geo[j]);
                    for (std::size_t k = 0; k < c.rank; ++k)
                        acc += c.coeff[i][b][k] * c.coeff[j][k][a] -
                               c.coeff[j][b][k] * c.coeff[i][k][a];
                    if (!model.nf(acc).is_zero()) return false;
                }
    return true;
}

LogConnection pullback_connection(const InfConnection& c) {
    if (!check_inf_integrability(c, 2 * c.in.e + 4))
        throw std::invalid_argument("pullback_connection: input connection not integrable");
    LogConnection out;
    out.env = prismatic_envelope(c.in);
    out.rank = c.rank;
    out.weights = c.weights;
    const auto& table = out.env.pres.table();
    Polynomial t = Polynomial::variable(table, std::size_t{0});
    for (auto& m : c.coeff) {
        PolyMat rel;
        for (auto& row : m) {
            std::vector<Polynomial> r;
            for (auto& p : row) r.push_back(t * p.relabel(table));
            rel.push_back(std::move(r));
        }
        out.op.push_back(std::move(rel));
    }
    if (!check_integrality(out) || !check_integrability(out))
        throw std::logic_error("pullback_connection: pullback failed its own invariants");
    return out;
}

FreeComplex infinitesimal_de_rham(const InfConnection& c, int W) {
    QuotientPresentation model = infinitesimal_model(c.in, W);
    auto geo = c.in.table->indices_with_role(VarRole::geometric);
    require_graded(c.in.table, geo, c.rank, c.weights, c.coeff);
    std::vector<Derivation> derivs;
    for (auto g : geo) {
        Derivation d;
        d.var_images.assign(c.in.table->size(), Polynomial::zero(c.in.table));
        d.var_images[g] = Polynomial::constant(c.in.table, Rational(1));
        derivs.push_back(std::move(d));
    }
    return de_rham_shape(model, geo, std::move(derivs), c.rank, c.weights, c.coeff);
}

TransitionData crystal_transition_series(const LogConnection& c) {
    if (!check_integrality(c))
        throw std::invalid_argument(
            "crystal_transition_series: connection is not integral, the Taylor series "
            "has no finite truncation");
    const int e = c.env.pres.truncation();
    auto geo = c.geo();
    const std::size_t n = geo.size();

    TransitionData td{self_product_envelope(c.env.input, 1), {}, false, false};
    const auto& t1 = td.d1.pres.table();

    // factorial scratch
    auto inv_factorial = [](int k) {
        Rational f(1);
        for (int i = 2; i <= k; ++i) f *= Rational(i);
        return f.inverse();
    };

    td.matrix.assign(c.rank, std::vector<Polynomial>(c.rank, Polynomial::zero(t1)));
    for (std::size_t a = 0; a < c.rank; ++a) {
        // iterate multi-indices E with |E| < e
        std::vector<int> E(n, 0);
        std::function<void(std::size_t, int, const std::vector<Polynomial>&)> rec =
            [&](std::size_t pos, int depth, const std::vector<Polynomial>& v) {
                // contribute current E with value v = prod nabla^E (m_a)
                Polynomial dpow = Polynomial::constant(t1, Rational(1));
                Rational coef(1);
                for (std::size_t i = 0; i < n; ++i) {
                    if (E[i] == 0) continue;
                    dpow = dpow *
                           Polynomial::variable(t1, td.d1.divided_names[0][i]).pow(E[i]);
                    coef *= inv_factorial(E[i]);
                }
                for (std::size_t b = 0; b < c.rank; ++b)
                    if (!v[b].is_zero())
                        td.matrix[b][a] += v[b].relabel(t1) * dpow * coef;
                if (depth + 1 >= e) return;
                for (std::size_t i = pos; i < n; ++i) {
                    ++E[i];
                    rec(i, depth + 1, apply_rescaled_nabla(c, i, v));
                    --E[i];
                }
            };
        std::vector<Polynomial> unit(c.rank, Polynomial::zero(c.env.pres.table()));
        unit[a] = Polynomial::constant(c.env.pres.table(), Rational(1));
        rec(0, 0, unit);
    }
    for (auto& row : td.matrix)
        for (auto& p : row) p = td.d1.pres.nf(p);

    // cocycle over D(2):  d1(Phi) = d2(Phi) * d0(Phi)
    SelfProductEnvelope sp2 = self_product_envelope(c.env.input, 2);
    auto push = [&](int k) {
        RingMap f = coface_map(td.d1, sp2, k);
        PolyMat out(c.rank, std::vector<Polynomial>(c.rank, Polynomial::zero(sp2.pres.table())));
        for (std::size_t b = 0; b < c.rank; ++b)
            for (std::size_t a = 0; a < c.rank; ++a) out[b][a] = sp2.pres.nf(f(td.matrix[b][a]));
        return out;
    };
    PolyMat m0 = push(0), m1 = push(1), m2 = push(2);
    td.cocycle_ok = true;
    for (std::size_t b = 0; b < c.rank; ++b)
        for (std::size_t a = 0; a < c.rank; ++a) {
            Polynomial acc = m1[b][a];
            for (std::size_t k = 0; k < c.rank; ++k) acc -= m2[b][k] * m0[k][a];
            if (!sp2.pres.nf(acc).is_zero()) td.cocycle_ok = false;
        }

    // linear term reproduces the defining difference map mod (Delta(1)/t)^2
    std::vector<Polynomial> quad = td.d1.pres.defining_ideal().generators();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            quad.push_back(Polynomial::variable(t1, td.d1.divided_names[0][i]) *
                           Polynomial::variable(t1, td.d1.divided_names[0][j]));
    quad.push_back(Polynomial::variable(t1, std::size_t{0}).pow(e));
    Ideal modsq(t1, std::move(quad));
    td.linear_term_ok = true;
    for (std::size_t b = 0; b < c.rank; ++b)
        for (std::size_t a = 0; a < c.rank; ++a) {
            Polynomial expect = a == b ? Polynomial::constant(t1, Rational(1))
                                       : Polynomial::zero(t1);
            for (std::size_t i = 0; i < n; ++i)
                expect += c.op[i][b][a].relabel(t1) *
                          Polynomial::variable(t1, td.d1.divided_names[0][i]);
            if (!modsq.normal_form(td.matrix[b][a] - expect).is_zero())
                td.linear_term_ok = false;
        }
    return td;
}

}  // namespace prismlab
