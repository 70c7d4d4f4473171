#include "prismlab/cotangent.hpp"

#include <algorithm>
#include <map>

namespace prismlab {

TwoTermComplex cotangent_complex(const LciInput& in) {
    QuotientPresentation R(in.table, Ideal(in.table, in.gens), 1);
    auto geo = in.table->indices_with_role(VarRole::geometric);

    FreeComplex::Term t_minus1, t_zero;
    for (std::size_t q = 0; q < in.gens.size(); ++q)
        t_minus1.push_back({"eps" + std::to_string(q + 1), *in.gens[q].homogeneous_weight()});
    for (auto g : geo) t_zero.push_back({"d" + in.table->var(g).name, in.table->var(g).weight});

    FreeComplex::OpMatrix d(t_zero.size(),
                            std::vector<RingOp>(t_minus1.size(),
                                                RingOp::of(Polynomial::zero(in.table))));
    for (std::size_t q = 0; q < in.gens.size(); ++q)
        for (std::size_t i = 0; i < geo.size(); ++i)
            d[i][q].mult += in.gens[q].derivative(geo[i]);

    return {in, FreeComplex(R, -1, {t_minus1, t_zero}, {d})};
}

FreeComplex wedge_power(const TwoTermComplex& L, int i) {
    if (i < 0) throw std::invalid_argument("wedge_power: i >= 0 required");
    const LciInput& in = L.in;
    const auto& pres = L.complex.presentation();
    auto geo = in.table->indices_with_role(VarRole::geometric);
    const std::size_t c = in.gens.size();
    std::vector<int> wf;
    for (auto& f : in.gens) wf.push_back(*f.homogeneous_weight());

    // degree -j basis: multiset of eps of size j  x  subset of dT of size i-j
    struct Gen {
        std::vector<std::size_t> sym;    // nondecreasing eps indices
        std::vector<std::size_t> wedge;  // increasing geometric positions
    };
    auto multisets = [&](int k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (cur.size() == static_cast<std::size_t>(k)) { out.push_back(cur); return; }
            for (std::size_t q = start; q < c; ++q) {
                cur.push_back(q);
                rec(q);
                cur.pop_back();
            }
        };
        rec(0);
        return out;
    };
    auto subsets = [&](int k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (cur.size() == static_cast<std::size_t>(k)) { out.push_back(cur); return; }
            for (std::size_t g = start; g < geo.size(); ++g) {
                cur.push_back(g);
                rec(g + 1);
                cur.pop_back();
            }
        };
        rec(0);
        return out;
    };

    std::vector<std::vector<Gen>> levels;  // index j = i .. 0 maps to degree -j
    for (int j = i; j >= 0; --j) {
        std::vector<Gen> lvl;
        if (i - j <= static_cast<int>(geo.size()))
            for (auto& s : multisets(j))
                for (auto& wset : subsets(i - j)) lvl.push_back({s, wset});
        levels.push_back(std::move(lvl));
    }

    auto gen_name = [&](const Gen& g) {
        std::string n = "s(";
        for (std::size_t k = 0; k < g.sym.size(); ++k)
            n += (k ? "," : "") + std::to_string(g.sym[k] + 1);
        n += ")w(";
        for (std::size_t k = 0; k < g.wedge.size(); ++k)
            n += (k ? "," : "") + in.table->var(geo[g.wedge[k]]).name;
        n += ")";
        return n;
    };
    auto gen_weight = [&](const Gen& g) {
        int w = 0;
        for (auto q : g.sym) w += wf[q];
        for (auto p : g.wedge) w += in.table->var(geo[p]).weight;
        return w;
    };

    std::vector<FreeComplex::Term> terms;
    for (auto& lvl : levels) {
        FreeComplex::Term t;
        for (auto& g : lvl) t.push_back({gen_name(g), gen_weight(g)});
        terms.push_back(std::move(t));
    }

    std::vector<FreeComplex::OpMatrix> diffs;
    Polynomial zero = Polynomial::zero(in.table);
    for (std::size_t lvl = 0; lvl + 1 < levels.size(); ++lvl) {
        const auto& src = levels[lvl];      // degree -(i-lvl)
        const auto& dst = levels[lvl + 1];  // one step up
        FreeComplex::OpMatrix m(dst.size(), std::vector<RingOp>(src.size(), RingOp::of(zero)));
        for (std::size_t cc = 0; cc < src.size(); ++cc) {
            const Gen& g = src[cc];
            for (std::size_t pos = 0; pos < g.sym.size(); ++pos) {
                if (pos > 0 && g.sym[pos] == g.sym[pos - 1]) continue;  // distinct values once
                int multiplicity = static_cast<int>(
                    std::count(g.sym.begin(), g.sym.end(), g.sym[pos]));
                std::size_t q = g.sym[pos];
                Gen reduced;
                reduced.sym = g.sym;
                reduced.sym.erase(reduced.sym.begin() + static_cast<long>(pos));
                // df_q = sum_k (df_q/dT_k) dT_k, wedge into the subset
                for (std::size_t gp = 0; gp < geo.size(); ++gp) {
                    if (std::find(g.wedge.begin(), g.wedge.end(), gp) != g.wedge.end())
                        continue;
                    Polynomial part = in.gens[q].derivative(geo[gp]);
                    if (part.is_zero()) continue;
                    Gen target = reduced;
                    target.wedge = g.wedge;
                    auto it = std::upper_bound(target.wedge.begin(), target.wedge.end(), gp);
                    std::size_t sign_pos =
                        static_cast<std::size_t>(it - target.wedge.begin());
                    target.wedge.insert(it, gp);
                    Rational sign(sign_pos % 2 == 0 ? 1 : -1);
                    std::size_t rr = 0;
                    bool found = false;
                    for (; rr < dst.size(); ++rr)
                        if (dst[rr].sym == target.sym && dst[rr].wedge == target.wedge) {
                            found = true;
                            break;
                        }
                    if (!found) throw std::logic_error("wedge_power: basis lookup");
                    m[rr][cc].mult += part * (sign * Rational(multiplicity));
                }
            }
        }
        diffs.push_back(std::move(m));
    }
    return FreeComplex(pres, -i, std::move(terms), std::move(diffs));
}

LciInput product_input(const LciInput& a, const LciInput& b) {
    std::vector<Variable> vars;
    vars.push_back(a.table->var(0));
    for (std::size_t i = 1; i < a.table->size(); ++i) vars.push_back(a.table->var(i));
    for (std::size_t i = 1; i < b.table->size(); ++i) {
        if (a.table->contains(b.table->var(i).name))
            throw std::invalid_argument("product_input: variable sets must be disjoint");
        vars.push_back(b.table->var(i));
    }
    auto table = std::make_shared<const VariableTable>(std::move(vars));
    std::vector<Polynomial> gens;
    for (auto& g : a.gens) gens.push_back(g.relabel(table));
    for (auto& g : b.gens) gens.push_back(g.relabel(table));
    return make_lci(table, std::move(gens), a.e);
}

CotangentKunnethResult cotangent_kunneth(const LciInput& a, const LciInput& b, int W) {
    CotangentKunnethResult res;
    LciInput prod = product_input(a, b);
    TwoTermComplex La = cotangent_complex(a), Lb = cotangent_complex(b),
                   Lp = cotangent_complex(prod);

    // the product differential must be block diagonal over the factors
    res.block_diagonal = true;
    const auto& d = Lp.complex.differential(-1);
    std::size_t ca = a.gens.size();
    auto geo_a = a.table->indices_with_role(VarRole::geometric);
    std::size_t na = geo_a.size();
    for (std::size_t r = 0; r < d.size(); ++r)
        for (std::size_t cgen = 0; cgen < d[r].size(); ++cgen) {
            bool cross = (r < na) != (cgen < ca);
            if (cross && !d[r][cgen].mult.is_zero()) res.block_diagonal = false;
        }

    CohomologyReport ra = cohomology_report(La.complex, W);
    CohomologyReport rb = cohomology_report(Lb.complex, W);
    CohomologyReport rp = cohomology_report(Lp.complex, W);

    QuotientPresentation Ra(a.table, Ideal(a.table, a.gens), 1);
    QuotientPresentation Rb(b.table, Ideal(b.table, b.gens), 1);

    res.pass = res.block_diagonal;
    for (int q = -1; q <= 0; ++q)
        for (int w = 0; w <= W; ++w) {
            // Kunneth over Q: H(p1*L1) = H(L1) (x) R2 and symmetrically
            std::size_t want = 0;
            for (int w1 = 0; w1 <= w; ++w1) {
                want += ra.q_dim(q, w1) * Rb.slice_dim(w - w1);
                want += Ra.slice_dim(w1) * rb.q_dim(q, w - w1);
            }
            std::size_t got = rp.q_dim(q, w);
            if (want != got) {
                res.pass = false;
                res.mismatches.push_back("H^" + std::to_string(q) + " weight " +
                                         std::to_string(w) + ": product " +
                                         std::to_string(got) + " vs factors " +
                                         std::to_string(want));
            }
        }
    return res;
}

}  // namespace prismlab
