#include "prismlab/complexes.hpp"

#include <algorithm>

#include "prismlab/util.hpp"

namespace prismlab {

std::string ModuleStructure::str() const {
    std::string s = "free^" + std::to_string(free_rank);
    if (!torsion.empty()) {
        s += " + torsion[";
        for (std::size_t i = 0; i < torsion.size(); ++i)
            s += (i ? "," : "") + std::to_string(torsion[i]);
        s += "]";
    }
    return s;
}

ModuleStructure slice_cohomology(const SliceComplex& s, int degree, int e) {
    if (!s.has_degree(degree)) return {};
    std::size_t k = s.index_of(degree);
    std::size_t n = s.dims[k];
    ModuleStructure out;
    if (n == 0) return out;

    std::vector<QVec> cycles;
    if (k + 1 < s.dims.size() && s.dims[k + 1] > 0) {
        cycles = nullspace(s.d[k]);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            QVec v(n, Rational(0));
            v[i] = Rational(1);
            cycles.push_back(std::move(v));
        }
    }

    RowSpace bdry(n);
    if (k > 0 && s.dims[k - 1] > 0) {
        const QMat& dprev = s.d[k - 1];
        for (std::size_t c = 0; c < s.dims[k - 1]; ++c) {
            QVec col(n, Rational(0));
            for (std::size_t r = 0; r < n; ++r) col[r] = dprev[r][c];
            bdry.add(std::move(col));
        }
    }

    QuotientSpace H(bdry, cycles);
    out.q_dim = H.dim();
    if (H.dim() == 0) return out;

    std::size_t h = H.dim();
    QMat N = qmat_zero(h, h);
    for (std::size_t c = 0; c < h; ++c) {
        QVec tv = qmat_apply(s.t_act[k], H.reps()[c]);
        QVec coords = H.coords(tv);
        for (std::size_t r = 0; r < h; ++r) N[r][c] = coords[r];
    }
    std::vector<std::size_t> ranks;  // ranks of N^0..N^e
    ranks.push_back(h);
    QMat power = N;
    for (int a = 1; a <= e; ++a) {
        ranks.push_back(rank(power));
        power = qmat_mul(power, N);
    }
    if (ranks[static_cast<std::size_t>(e)] != 0)
        throw std::logic_error("slice_cohomology: t-action not nilpotent at truncation");
    out.free_rank = ranks[static_cast<std::size_t>(e - 1)];
    for (int a = 1; a < e; ++a) {
        std::size_t cnt = ranks[static_cast<std::size_t>(a - 1)] -
                          2 * ranks[static_cast<std::size_t>(a)] +
                          ranks[static_cast<std::size_t>(a + 1)];
        for (std::size_t i = 0; i < cnt; ++i) out.torsion.push_back(a);
    }
    std::size_t total = out.free_rank * static_cast<std::size_t>(e);
    for (int a : out.torsion) total += static_cast<std::size_t>(a);
    if (total != out.q_dim)
        throw std::logic_error("slice_cohomology: invariant factor bookkeeping failed");
    return out;
}

CohomologyReport cohomology_report(const ComplexSlicer& c, int W) {
    const int e = c.truncation();
    std::vector<std::vector<CohomologyEntry>> per_weight(static_cast<std::size_t>(W + 1));
    parallel_for(static_cast<std::size_t>(W + 1), [&](std::size_t wi) {
        int w = static_cast<int>(wi);
        SliceComplex s = c.slice(w);
        for (int deg = c.min_degree(); deg <= c.max_degree(); ++deg) {
            ModuleStructure m = slice_cohomology(s, deg, e);
            per_weight[wi].push_back({deg, w, 0, std::move(m)});
        }
    });
    CohomologyReport rep;
    for (std::size_t wi = 0; wi < per_weight.size(); ++wi)
        for (auto& entry : per_weight[wi]) rep.entries.push_back(entry);
    std::stable_sort(rep.entries.begin(), rep.entries.end(),
                     [](const CohomologyEntry& a, const CohomologyEntry& b) {
                         if (a.degree != b.degree) return a.degree < b.degree;
                         return a.weight < b.weight;
                     });
    return rep;
}

Polynomial Derivation::apply(const Polynomial& p) const {
    const auto& table = p.table();
    Polynomial out = Polynomial::zero(table);
    for (auto& [e, c] : p.terms()) {
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0 || var_images[v].is_zero()) continue;
            Exponents m = e;
            m[v] -= 1;
            out += Polynomial::monomial(table, m, c * Rational(e[v])) * var_images[v];
        }
    }
    return out;
}

FreeComplex::FreeComplex(QuotientPresentation pres, int min_deg, std::vector<Term> terms,
                         std::vector<OpMatrix> diffs, std::vector<Derivation> derivations)
    : pres_(std::move(pres)), min_deg_(min_deg), terms_(std::move(terms)),
      diffs_(std::move(diffs)), derivations_(std::move(derivations)) {
    if (terms_.empty()) throw std::invalid_argument("FreeComplex: no terms");
    if (diffs_.size() + 1 != terms_.size())
        throw std::invalid_argument("FreeComplex: differential count mismatch");
    for (std::size_t k = 0; k + 1 < terms_.size(); ++k) {
        const auto& m = diffs_[k];
        if (m.size() != terms_[k + 1].size())
            throw std::invalid_argument("FreeComplex: differential row count");
        for (auto& row : m)
            if (row.size() != terms_[k].size())
                throw std::invalid_argument("FreeComplex: differential column count");
    }
}

Polynomial FreeComplex::apply_entry(const RingOp& op, const Polynomial& p) const {
    Polynomial out = op.mult.is_zero() ? Polynomial::zero(pres_.table()) : op.mult * p;
    for (auto& [id, coeff] : op.derivs)
        out += coeff * derivations_[id].apply(p);
    return out;
}

std::vector<Polynomial> FreeComplex::apply_d_pre(int degree,
                                                 const std::vector<Polynomial>& v) const {
    const auto& pm = diffs_[idx(degree)];
    const auto& dst = terms_[idx(degree) + 1];
    std::vector<Polynomial> out(dst.size(), Polynomial::zero(pres_.table()));
    for (std::size_t r = 0; r < dst.size(); ++r) {
        Polynomial acc = Polynomial::zero(pres_.table());
        for (std::size_t g = 0; g < v.size(); ++g)
            if (!pm[r][g].trivial() && !v[g].is_zero()) acc += apply_entry(pm[r][g], v[g]);
        out[r] = pres_.nf_pre(acc);
    }
    return out;
}

void FreeComplex::verify_d2(int W) const {
    for (int w = 0; w <= W; ++w) {
        SliceComplex s = slice(w);
        for (std::size_t k = 0; k + 1 < s.d.size(); ++k) {
            QMat prod = qmat_mul(s.d[k + 1], s.d[k]);
            for (auto& row : prod)
                for (auto& x : row)
                    if (!x.is_zero())
                        throw std::logic_error("FreeComplex: d^2 != 0 in weight " +
                                               std::to_string(w));
        }
    }
}

std::vector<std::pair<std::size_t, Exponents>> FreeComplex::slice_layout(int degree,
                                                                         int w) const {
    std::vector<std::pair<std::size_t, Exponents>> layout;
    const Term& t = terms_[idx(degree)];
    for (std::size_t g = 0; g < t.size(); ++g)
        for (auto& m : pres_.slice_basis(w - t[g].weight)) layout.emplace_back(g, m);
    return layout;
}

SliceComplex FreeComplex::slice(int w) const {
    SliceComplex s;
    s.min_deg = min_deg_;
    const std::size_t nterms = terms_.size();

    std::vector<std::vector<std::pair<std::size_t, Exponents>>> layouts(nterms);
    std::vector<std::vector<std::size_t>> gen_offset(nterms);
    for (std::size_t k = 0; k < nterms; ++k) {
        const Term& t = terms_[k];
        gen_offset[k].assign(t.size(), 0);
        std::size_t off = 0;
        for (std::size_t g = 0; g < t.size(); ++g) {
            gen_offset[k][g] = off;
            off += pres_.slice_dim(w - t[g].weight);
        }
        layouts[k] = slice_layout(min_deg_ + static_cast<int>(k), w);
        s.dims.push_back(off);
    }

    for (std::size_t k = 0; k + 1 < nterms; ++k) {
        QMat m = qmat_zero(s.dims[k + 1], s.dims[k]);
        const auto& pm = diffs_[k];
        for (std::size_t c = 0; c < layouts[k].size(); ++c) {
            auto& [g, mono] = layouts[k][c];
            Polynomial basis_el = Polynomial::monomial(pres_.table(), mono, Rational(1));
            for (std::size_t r_gen = 0; r_gen < terms_[k + 1].size(); ++r_gen) {
                const RingOp& entry = pm[r_gen][g];
                if (entry.trivial()) continue;
                Polynomial img = pres_.nf(apply_entry(entry, basis_el));
                if (img.is_zero()) continue;
                int wdst = w - terms_[k + 1][r_gen].weight;
                QVec col = pres_.to_slice(img, wdst);
                for (std::size_t r = 0; r < col.size(); ++r)
                    m[gen_offset[k + 1][r_gen] + r][c] = col[r];
            }
        }
        s.d.push_back(std::move(m));
    }

    for (std::size_t k = 0; k < nterms; ++k) {
        QMat tmat = qmat_zero(s.dims[k], s.dims[k]);
        for (std::size_t g = 0; g < terms_[k].size(); ++g) {
            int wg = w - terms_[k][g].weight;
            QMat block = pres_.t_matrix(wg);
            for (std::size_t r = 0; r < block.size(); ++r)
                for (std::size_t c = 0; c < block[r].size(); ++c)
                    tmat[gen_offset[k][g] + r][gen_offset[k][g] + c] = block[r][c];
        }
        s.t_act.push_back(std::move(tmat));
    }
    return s;
}

FreeComplex koszul_complex(const QuotientPresentation& ambient,
                           const std::vector<Polynomial>& seq) {
    const int c = static_cast<int>(seq.size());
    std::vector<int> wts;
    for (auto& f : seq) {
        auto w = f.homogeneous_weight();
        if (!w) throw std::invalid_argument("koszul_complex: inhomogeneous entry");
        wts.push_back(*w);
    }
    std::vector<std::vector<std::vector<int>>> subsets(static_cast<std::size_t>(c) + 1);
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int start) {
        subsets[cur.size()].push_back(cur);
        for (int i = start; i < c; ++i) {
            cur.push_back(i);
            gen(i + 1);
            cur.pop_back();
        }
    };
    gen(0);
    for (auto& level : subsets) std::sort(level.begin(), level.end());

    std::vector<FreeComplex::Term> terms;
    std::vector<FreeComplex::OpMatrix> diffs;
    for (int k = c; k >= 0; --k) {
        FreeComplex::Term t;
        for (auto& S : subsets[static_cast<std::size_t>(k)]) {
            std::string name = "e[";
            int w = 0;
            for (std::size_t i = 0; i < S.size(); ++i) {
                name += (i ? "," : "") + std::to_string(S[i]);
                w += wts[static_cast<std::size_t>(S[i])];
            }
            name += "]";
            t.push_back({name, w});
        }
        terms.push_back(std::move(t));
    }
    for (int k = c; k >= 1; --k) {
        const auto& src = subsets[static_cast<std::size_t>(k)];
        const auto& dst = subsets[static_cast<std::size_t>(k - 1)];
        FreeComplex::OpMatrix m(
            dst.size(),
            std::vector<RingOp>(src.size(), RingOp::of(Polynomial::zero(ambient.table()))));
        for (std::size_t cc = 0; cc < src.size(); ++cc) {
            for (std::size_t j = 0; j < src[cc].size(); ++j) {
                std::vector<int> rest = src[cc];
                rest.erase(rest.begin() + static_cast<long>(j));
                auto it = std::lower_bound(dst.begin(), dst.end(), rest);
                std::size_t rr = static_cast<std::size_t>(it - dst.begin());
                Rational sign((j % 2 == 0) ? 1 : -1);
                m[rr][cc].mult += seq[static_cast<std::size_t>(src[cc][j])] * sign;
            }
        }
        diffs.push_back(std::move(m));
    }
    return FreeComplex(ambient, -c, std::move(terms), std::move(diffs));
}

}  // namespace prismlab
