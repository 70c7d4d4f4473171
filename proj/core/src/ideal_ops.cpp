#include "prismlab/ideal_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "prismlab/linalg.hpp"

namespace prismlab {

namespace {

// Enumerate non-t exponent patterns of a given weight (all non-t variables
// must have positive weight), then graft t-powers 0..t_cap.
void enumerate_weight_rec(const VariableTable& table, std::size_t var, int remaining,
                          Exponents& cur, std::vector<Exponents>& out) {
    if (var == table.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int w = table.var(var).weight;
    for (int k = 0; k * w <= remaining; ++k) {
        cur[var] = k;
        enumerate_weight_rec(table, var + 1, remaining - k * w, cur, out);
    }
    cur[var] = 0;
}

std::vector<Exponents> monomials_of_weight(const VarTablePtr& table, int weight, int t_cap) {
    std::vector<Exponents> base;
    if (weight >= 0) {
        Exponents cur(table->size(), 0);
        enumerate_weight_rec(*table, 1, weight, cur, base);
    }
    std::vector<Exponents> out;
    out.reserve(base.size() * static_cast<std::size_t>(t_cap + 1));
    for (auto& m : base)
        for (int a = 0; a <= t_cap; ++a) {
            Exponents e = m;
            e[0] = a;
            out.push_back(std::move(e));
        }
    return out;
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
    auto table = I.table();
    auto ext = table->extended({{"_w", VarRole::envelope, 1}});
    std::size_t wi = ext->index_of("_w");
    Polynomial w = Polynomial::variable(ext, wi);
    Polynomial one_minus_w = Polynomial::constant(ext, Rational(1)) - w;
    std::vector<Polynomial> gens;
    for (auto& g : I.generators()) gens.push_back(w * g.relabel(ext));
    for (auto& g : J.generators()) gens.push_back(one_minus_w * g.relabel(ext));
    Ideal mixed(ext, std::move(gens));
    Ideal elim = eliminate(mixed, {wi});
    std::vector<Polynomial> out;
    for (auto& g : elim.generators()) out.push_back(g.relabel(table));
    return Ideal(table, std::move(out));
}

Ideal colon_ideal(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("colon_ideal: f must be nonzero");
    Ideal meet = intersect(I, Ideal(I.table(), {f}));
    MonomialOrder ord = MonomialOrder::grevlex();
    OrderedPoly of = to_ordered(f, ord);
    std::vector<Polynomial> out;
    for (auto& g : meet.generators()) {
        auto [q, r] = divide_single(to_ordered(g, ord), of, ord);
        if (!r.empty()) throw std::logic_error("colon_ideal: inexact division");
        Polynomial qq = from_ordered(q, I.table());
        if (!qq.is_zero()) out.push_back(std::move(qq));
    }
    return Ideal(I.table(), std::move(out));
}

Ideal saturate_t(const Ideal& J) {
    auto table = J.table();
    auto ext = table->extended({{"_z", VarRole::envelope, 1}});
    std::size_t zi = ext->index_of("_z");
    std::vector<Polynomial> gens;
    for (auto& g : J.generators()) gens.push_back(g.relabel(ext));
    gens.push_back(Polynomial::variable(ext, std::size_t{0}) * Polynomial::variable(ext, zi) -
                   Polynomial::constant(ext, Rational(1)));
    Ideal mixed(ext, std::move(gens));
    Ideal elim = eliminate(mixed, {zi});
    std::vector<Polynomial> out;
    for (auto& g : elim.generators()) out.push_back(g.relabel(table));
    return Ideal(table, std::move(out));
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop) {
    if (drop.empty()) return Ideal(I.table(), I.basis().polys);
    MonomialOrder ord = MonomialOrder::elimination_block(drop);
    const auto& b = I.basis(ord);
    std::vector<Polynomial> kept;
    for (auto& g : b.polys) {
        bool clean = true;
        for (auto& [e, c] : g.terms())
            for (auto d : drop)
                if (e[d] != 0) { clean = false; break; }
        if (clean) kept.push_back(g);
    }
    return Ideal(I.table(), std::move(kept));
}

std::vector<Polynomial> ideal_power_gens(const std::vector<Polynomial>& gens, int m) {
    if (m < 0) throw std::invalid_argument("ideal_power_gens: negative power");
    if (gens.empty()) return m == 0 ? gens : std::vector<Polynomial>{};
    std::vector<Polynomial> out;
    if (m == 0) return out;  // unit ideal marker handled by callers
    // multisets of size m over gens, in lexicographic index order
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    for (;;) {
        Polynomial p = gens[static_cast<std::size_t>(idx[0])];
        for (std::size_t k = 1; k < idx.size(); ++k)
            p = p * gens[static_cast<std::size_t>(idx[k])];
        out.push_back(std::move(p));
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                               static_cast<int>(gens.size()) - 1)
            --pos;
        if (pos < 0) break;
        int v = ++idx[static_cast<std::size_t>(pos)];
        for (std::size_t k = static_cast<std::size_t>(pos) + 1; k < idx.size(); ++k)
            idx[k] = v;
    }
    return out;
}

RegularSequenceResult is_regular_sequence(const VarTablePtr& table,
                                          const std::vector<Polynomial>& seq) {
    std::vector<Polynomial> prev;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].is_zero()) return {false, static_cast<int>(i)};
        Ideal prev_ideal(table, prev);
        Ideal quot = colon_ideal(prev_ideal, seq[i]);
        for (auto& g : quot.generators())
            if (!prev_ideal.contains(g)) return {false, static_cast<int>(i)};
        prev.push_back(seq[i]);
    }
    if (!seq.empty() && Ideal(table, prev).is_unit_ideal())
        return {false, static_cast<int>(seq.size()) - 1};
    return {true, -1};
}

RegularityCertificate certify_regularity(const VarTablePtr& table,
                                         const std::vector<Polynomial>& gens,
                                         std::size_t max_permutations) {
    std::vector<std::size_t> perm(gens.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t tried = 0;
    do {
        if (++tried > max_permutations) break;
        std::vector<Polynomial> seq;
        seq.push_back(Polynomial::variable(table, std::size_t{0}));  // t first
        for (auto k : perm) seq.push_back(gens[k]);
        if (is_regular_sequence(table, seq).certified) return {true, perm};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {false, {}};
}

std::optional<std::vector<Polynomial>> express_in_generators(
    const Polynomial& p, const std::vector<Polynomial>& gens, int t_degree_cap) {
    auto table = p.table();
    if (table->has_negative_weight()) return std::nullopt;
    auto wp = p.homogeneous_weight();
    if (!wp) return std::nullopt;
    std::vector<int> wg;
    for (auto& g : gens) {
        auto w = g.homogeneous_weight();
        if (!w) return std::nullopt;
        wg.push_back(*w);
    }
    int max_gen_tdeg = 0;
    for (auto& g : gens) max_gen_tdeg = std::max(max_gen_tdeg, std::max(g.t_degree(), 0));

    for (int D = std::max(p.t_degree(), 0); D <= t_degree_cap; D += 2) {
        // columns: (generator j, multiplier monomial)
        std::vector<std::pair<std::size_t, Exponents>> cols;
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (auto& m : monomials_of_weight(table, *wp - wg[j], D))
                cols.emplace_back(j, m);
        if (cols.empty()) continue;
        auto rows = monomials_of_weight(table, *wp, D + max_gen_tdeg);
        std::map<Exponents, std::size_t> row_index;
        for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);

        QMat A = qmat_zero(rows.size(), cols.size());
        bool overflow = false;
        for (std::size_t c = 0; c < cols.size() && !overflow; ++c) {
            Polynomial prod = Polynomial::monomial(table, cols[c].second, Rational(1)) *
                              gens[cols[c].first];
            for (auto& [e, coef] : prod.terms()) {
                auto it = row_index.find(e);
                if (it == row_index.end()) { overflow = true; break; }
                A[it->second][c] = coef;
            }
        }
        if (overflow) continue;
        QVec b(rows.size(), Rational(0));
        bool fits = true;
        for (auto& [e, coef] : p.terms()) {
            auto it = row_index.find(e);
            if (it == row_index.end()) { fits = false; break; }
            b[it->second] = coef;
        }
        if (!fits) continue;
        auto x = solve(A, b);
        if (!x) continue;
        std::vector<Polynomial> out(gens.size(), Polynomial::zero(table));
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (!(*x)[c].is_zero())
                out[cols[c].first] +=
                    Polynomial::monomial(table, cols[c].second, (*x)[c]);
        return out;
    }
    return std::nullopt;
}

Ideal kernel_of_map(const VarTablePtr& src,
                    const std::vector<std::pair<std::string, Polynomial>>& images,
                    const Ideal& target_relations) {
    auto dst = target_relations.table();
    // combined table: target variables then the non-t source variables
    std::vector<Variable> extra;
    for (std::size_t i = 1; i < src->size(); ++i) {
        if (dst->contains(src->var(i).name))
            throw std::invalid_argument("kernel_of_map: name collision " + src->var(i).name);
        extra.push_back(src->var(i));
    }
    auto combined = dst->extended(extra);
    std::vector<Polynomial> gens;
    for (auto& g : target_relations.generators()) gens.push_back(g.relabel(combined));
    for (auto& [name, img] : images)
        gens.push_back(Polynomial::variable(combined, name) - img.relabel(combined));
    std::vector<std::size_t> drop;
    for (std::size_t i = 1; i < dst->size(); ++i)
        drop.push_back(combined->index_of(dst->var(i).name));
    Ideal elim = eliminate(Ideal(combined, std::move(gens)), drop);
    std::vector<Polynomial> out;
    for (auto& g : elim.generators()) out.push_back(g.relabel(src));
    return Ideal(src, std::move(out));
}

}  // namespace prismlab
