#include "prismlab/cech.hpp"

#include <algorithm>
#include <map>

namespace prismlab {

namespace {

// Taylor transition matrix of an integral connection, with displacement in
// the first diagonal block of the target level.
PolyMat taylor_matrix(const LogConnection& c, const SelfProductEnvelope& target) {
    const int e = c.env.pres.truncation();
    auto geo = c.geo();
    const std::size_t n = geo.size();
    const auto& tt = target.pres.table();

    auto inv_factorial = [](int k) {
        Rational f(1);
        for (int i = 2; i <= k; ++i) f *= Rational(i);
        return f.inverse();
    };

    PolyMat phi(c.rank, std::vector<Polynomial>(c.rank, Polynomial::zero(tt)));
    for (std::size_t a = 0; a < c.rank; ++a) {
        std::vector<int> E(n, 0);
        std::function<void(std::size_t, int, const std::vector<Polynomial>&)> rec =
            [&](std::size_t pos, int depth, const std::vector<Polynomial>& v) {
                Polynomial dpow = Polynomial::constant(tt, Rational(1));
                Rational coef(1);
                for (std::size_t i = 0; i < n; ++i) {
                    if (E[i] == 0) continue;
                    dpow = dpow * Polynomial::variable(tt, target.divided_names[0][i]).pow(E[i]);
                    coef *= inv_factorial(E[i]);
                }
                for (std::size_t b = 0; b < c.rank; ++b)
                    if (!v[b].is_zero()) phi[b][a] += v[b].relabel(tt) * dpow * coef;
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
    for (auto& row : phi)
        for (auto& p : row) p = target.pres.nf(p);
    return phi;
}

}  // namespace

CechComplex::CechComplex(LogConnection crystal, int depth)
    : crystal_(std::move(crystal)), depth_(depth) {
    if (depth_ < 1) throw std::invalid_argument("CechComplex: depth >= 1 required");
    if (!check_integrality(crystal_))
        throw std::invalid_argument("CechComplex: crystal sections need an integral "
                                    "connection (transition series must terminate)");
    for (int l = 0; l <= depth_; ++l)
        levels_.push_back(self_product_envelope(crystal_.env.input, l));
    for (int l = 0; l < depth_; ++l) {
        std::vector<RingMap> cf;
        for (int k = 0; k <= l + 1; ++k)
            cf.push_back(coface_map(levels_[static_cast<std::size_t>(l)],
                                    levels_[static_cast<std::size_t>(l + 1)], k));
        cofaces_.push_back(std::move(cf));
        std::vector<RingMap> cd;
        for (int k = 0; k <= l; ++k)
            cd.push_back(codegeneracy_map(levels_[static_cast<std::size_t>(l + 1)],
                                          levels_[static_cast<std::size_t>(l)], k));
        codegens_.push_back(std::move(cd));
        taylor_.push_back(taylor_matrix(crystal_, levels_[static_cast<std::size_t>(l + 1)]));
    }
}

SliceComplex CechComplex::slice(int w) const {
    const int e = truncation();
    const std::size_t rank = crystal_.rank;

    // full (unnormalized) slice layout per level: (generator, monomial)
    struct Layout {
        std::vector<std::pair<std::size_t, Exponents>> basis;
        std::map<std::pair<std::size_t, Exponents>, std::size_t> index;
    };
    std::vector<Layout> full(static_cast<std::size_t>(depth_) + 1);
    for (int l = 0; l <= depth_; ++l) {
        auto& L = full[static_cast<std::size_t>(l)];
        const auto& pres = levels_[static_cast<std::size_t>(l)].pres;
        for (std::size_t a = 0; a < rank; ++a)
            for (auto& m : pres.slice_basis(w - crystal_.weights[a]))
                L.basis.emplace_back(a, m);
        for (std::size_t i = 0; i < L.basis.size(); ++i) L.index.emplace(L.basis[i], i);
    }

    auto expand = [&](int l, std::size_t a, const Polynomial& p, QVec& col) {
        const auto& L = full[static_cast<std::size_t>(l)];
        for (auto& [ee, cc] : p.terms()) {
            auto it = L.index.find(std::make_pair(a, ee));
            if (it == L.index.end()) throw std::logic_error("cech slice: term outside basis");
            col[it->second] += cc;
        }
    };

    // module map along a ring map with an optional matrix twist
    auto map_matrix = [&](int lsrc, int ldst, const RingMap& f, const PolyMat* twist) {
        const auto& src = full[static_cast<std::size_t>(lsrc)];
        const auto& dst = full[static_cast<std::size_t>(ldst)];
        const auto& pres = levels_[static_cast<std::size_t>(ldst)].pres;
        QMat m = qmat_zero(dst.basis.size(), src.basis.size());
        for (std::size_t c = 0; c < src.basis.size(); ++c) {
            auto& [a, mono] = src.basis[c];
            Polynomial g = f(Polynomial::monomial(f.src(), mono, Rational(1)));
            QVec col(dst.basis.size(), Rational(0));
            if (twist) {
                for (std::size_t b = 0; b < rank; ++b) {
                    const Polynomial& phi = (*twist)[b][a];
                    if (phi.is_zero()) continue;
                    expand(ldst, b, pres.nf(phi * g), col);
                }
            } else {
                expand(ldst, a, pres.nf(g), col);
            }
            for (std::size_t r = 0; r < col.size(); ++r) m[r][c] = col[r];
        }
        return m;
    };

    // normalized subspace: intersection of codegeneracy kernels
    std::vector<std::vector<QVec>> nbasis(static_cast<std::size_t>(depth_) + 1);
    for (int l = 0; l <= depth_; ++l) {
        std::size_t dim = full[static_cast<std::size_t>(l)].basis.size();
        if (l == 0) {
            for (std::size_t i = 0; i < dim; ++i) {
                QVec v(dim, Rational(0));
                v[i] = Rational(1);
                nbasis[0].push_back(std::move(v));
            }
            continue;
        }
        QMat rows;
        for (int k = 0; k <= l - 1; ++k) {
            QMat sk = map_matrix(l, l - 1, codegens_[static_cast<std::size_t>(l - 1)]
                                               [static_cast<std::size_t>(k)],
                                 nullptr);
            for (auto& r : sk) rows.push_back(std::move(r));
        }
        if (rows.empty()) rows.push_back(QVec(dim, Rational(0)));
        nbasis[static_cast<std::size_t>(l)] = nullspace(rows);
    }

    SliceComplex s;
    s.min_deg = 0;
    for (int l = 0; l <= depth_; ++l)
        s.dims.push_back(nbasis[static_cast<std::size_t>(l)].size());

    for (int l = 0; l < depth_; ++l) {
        std::size_t dim_src_full = full[static_cast<std::size_t>(l)].basis.size();
        std::size_t dim_dst_full = full[static_cast<std::size_t>(l + 1)].basis.size();
        QMat D = qmat_zero(dim_dst_full, dim_src_full);
        for (int k = 0; k <= l + 1; ++k) {
            const PolyMat* twist = k == 0 ? &taylor_[static_cast<std::size_t>(l)] : nullptr;
            QMat part = map_matrix(l, l + 1,
                                   cofaces_[static_cast<std::size_t>(l)]
                                           [static_cast<std::size_t>(k)],
                                   twist);
            Rational sign(k % 2 == 0 ? 1 : -1);
            for (std::size_t r = 0; r < dim_dst_full; ++r)
                for (std::size_t c = 0; c < dim_src_full; ++c)
                    if (!part[r][c].is_zero()) D[r][c] += part[r][c] * sign;
        }
        // restrict to the normalized bases: solve coordinates in the target
        const auto& nb_src = nbasis[static_cast<std::size_t>(l)];
        const auto& nb_dst = nbasis[static_cast<std::size_t>(l + 1)];
        QMat cols(dim_dst_full, QVec(nb_dst.size(), Rational(0)));
        for (std::size_t j = 0; j < nb_dst.size(); ++j)
            for (std::size_t i = 0; i < dim_dst_full; ++i) cols[i][j] = nb_dst[j][i];
        QMat red = qmat_zero(nb_dst.size(), nb_src.size());
        for (std::size_t c = 0; c < nb_src.size(); ++c) {
            QVec img = qmat_apply(D, nb_src[c]);
            auto x = solve(cols, img);
            if (!x)
                throw std::logic_error("cech slice: differential leaves the normalized "
                                       "subcomplex");
            for (std::size_t r = 0; r < nb_dst.size(); ++r) red[r][c] = (*x)[r];
        }
        s.d.push_back(std::move(red));
    }

    for (int l = 0; l <= depth_; ++l) {
        const auto& nb = nbasis[static_cast<std::size_t>(l)];
        std::size_t dim_full = full[static_cast<std::size_t>(l)].basis.size();
        const auto& pres = levels_[static_cast<std::size_t>(l)].pres;
        // full t-action
        QMat tfull = qmat_zero(dim_full, dim_full);
        for (std::size_t c = 0; c < dim_full; ++c) {
            auto& [a, mono] = full[static_cast<std::size_t>(l)].basis[c];
            Polynomial p = pres.nf(Polynomial::monomial(pres.table(), mono, Rational(1))
                                       .mul_by_t(1));
            QVec col(dim_full, Rational(0));
            expand(l, a, p, col);
            for (std::size_t r = 0; r < dim_full; ++r) tfull[r][c] = col[r];
        }
        QMat cols(dim_full, QVec(nb.size(), Rational(0)));
        for (std::size_t j = 0; j < nb.size(); ++j)
            for (std::size_t i = 0; i < dim_full; ++i) cols[i][j] = nb[j][i];
        QMat tm = qmat_zero(nb.size(), nb.size());
        for (std::size_t c = 0; c < nb.size(); ++c) {
            QVec img = qmat_apply(tfull, nb[c]);
            auto x = solve(cols, img);
            if (!x) throw std::logic_error("cech slice: t-action leaves normalized subcomplex");
            for (std::size_t r = 0; r < nb.size(); ++r) tm[r][c] = (*x)[r];
        }
        s.t_act.push_back(std::move(tm));
    }
    (void)e;
    return s;
}

}  // namespace prismlab
