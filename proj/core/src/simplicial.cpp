#include "prismlab/simplicial.hpp"

#include <algorithm>

namespace prismlab {

std::vector<std::vector<int>> monotone_surjections(int n, int d) {
    std::vector<std::vector<int>> out;
    if (n < d) return out;
    std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, int)> rec = [&](int pos, int last) {
        if (pos == n + 1) {
            if (last == d) out.push_back(cur);
            return;
        }
        // monotone, steps of 0 or 1, must end at d
        for (int v = last; v <= std::min(last + 1, d); ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    cur[0] = 0;
    rec(1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

TruncatedSimplicialAlgebra::TruncatedSimplicialAlgebra(VarTablePtr level0, int N, int e,
                                                       std::vector<bool> level0_ideal_flags)
    : N_(N), e_(e), base_(std::move(level0)), base_flags_(std::move(level0_ideal_flags)) {
    if (N_ < 1) throw std::invalid_argument("TruncatedSimplicialAlgebra: N >= 1");
    if (!base_flags_.empty() && base_flags_.size() != base_->size())
        throw std::invalid_argument("TruncatedSimplicialAlgebra: flag size mismatch");
    for (int n = 0; n <= N_; ++n) levels_.push_back(base_);
    rebuild_maps();
}

const RingMap& TruncatedSimplicialAlgebra::face(int n, int i) const {
    return faces_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)];
}

const RingMap& TruncatedSimplicialAlgebra::degeneracy(int n, int j) const {
    return degens_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
}

bool TruncatedSimplicialAlgebra::is_ideal_var(int n, std::size_t var) const {
    return ideal_flags_[static_cast<std::size_t>(n)][var];
}

Polynomial TruncatedSimplicialAlgebra::degenerate_along(const std::vector<int>& u,
                                                        const Polynomial& p) const {
    const int m = static_cast<int>(u.size()) - 1;
    int dprime = u.empty() ? 0 : u.back();
    if (m == dprime) return p.relabel(levels_[static_cast<std::size_t>(m)]);
    // find the first merged pair and factor through sigma_{p0}
    int p0 = -1;
    for (int q = 0; q < m; ++q)
        if (u[static_cast<std::size_t>(q)] == u[static_cast<std::size_t>(q + 1)]) { p0 = q; break; }
    std::vector<int> uprime;
    for (int r = 0; r <= m - 1; ++r)
        uprime.push_back(u[static_cast<std::size_t>(r <= p0 ? r : r + 1)]);
    Polynomial inner = degenerate_along(uprime, p);
    return degeneracy(m - 1, p0)(inner);
}

Polynomial TruncatedSimplicialAlgebra::cell_face_image(const CellFamily& fam, int n,
                                                       const std::vector<int>& /*surj*/,
                                                       const std::vector<int>& composite) const {
    const int d = fam.degree;
    auto tgt = levels_[static_cast<std::size_t>(n - 1)];
    // surjective composite: another cell of the family
    bool onto = true;
    {
        std::vector<bool> hit(static_cast<std::size_t>(d) + 1, false);
        for (int v : composite) hit[static_cast<std::size_t>(v)] = true;
        for (bool h : hit) onto = onto && h;
    }
    if (onto) {
        const auto& level_surjs = fam.surjections[static_cast<std::size_t>(n - 1 - d)];
        auto it = std::lower_bound(level_surjs.begin(), level_surjs.end(), composite);
        if (it == level_surjs.end() || *it != composite)
            throw std::logic_error("cell_face_image: missing surjection");
        std::size_t idx = static_cast<std::size_t>(it - level_surjs.begin());
        return Polynomial::variable(tgt, fam.names[static_cast<std::size_t>(n - 1 - d)][idx]);
    }
    // misses exactly the value 0: boundary datum, degenerated along c - 1
    bool misses_only_zero = true;
    {
        std::vector<bool> hit(static_cast<std::size_t>(d) + 1, false);
        for (int v : composite) hit[static_cast<std::size_t>(v)] = true;
        if (hit[0]) misses_only_zero = false;
        for (int v = 1; v <= d; ++v)
            if (!hit[static_cast<std::size_t>(v)]) misses_only_zero = false;
    }
    if (misses_only_zero) {
        std::vector<int> u;
        for (int v : composite) u.push_back(v - 1);
        return degenerate_along(u, fam.omega).relabel(tgt);
    }
    return Polynomial::zero(tgt);
}

void TruncatedSimplicialAlgebra::rebuild_maps() {
    // tables
    levels_.assign(static_cast<std::size_t>(N_) + 1, base_);
    ideal_flags_.assign(static_cast<std::size_t>(N_) + 1, {});
    for (int n = 0; n <= N_; ++n) {
        std::vector<Variable> extra;
        std::vector<bool> flags(base_->size(), false);
        // base-level ideal flags: variables marked at construction time stay
        // marked via cells only; base Y-variables handled by resolve_pair.
        for (std::size_t v = 0; v < base_->size(); ++v)
            flags[v] = base_flags_.empty() ? false : base_flags_[v];
        for (auto& fam : cells_) {
            if (n < fam.degree) continue;
            const auto& names = fam.names[static_cast<std::size_t>(n - fam.degree)];
            for (auto& nm : names) {
                extra.push_back({nm, VarRole::cell, fam.cell_weight});
                flags.push_back(fam.ideal_part);
            }
        }
        levels_[static_cast<std::size_t>(n)] = base_->extended(extra);
        ideal_flags_[static_cast<std::size_t>(n)] = std::move(flags);
    }

    // degeneracies first (faces use them through degenerate_along)
    degens_.clear();
    for (int n = 0; n < N_; ++n) {
        std::vector<RingMap> row;
        for (int j = 0; j <= n; ++j) {
            RingMap s(levels_[static_cast<std::size_t>(n)],
                      levels_[static_cast<std::size_t>(n + 1)]);
            for (auto& fam : cells_) {
                if (n < fam.degree) continue;
                const auto& surjs = fam.surjections[static_cast<std::size_t>(n - fam.degree)];
                const auto& names = fam.names[static_cast<std::size_t>(n - fam.degree)];
                for (std::size_t k = 0; k < surjs.size(); ++k) {
                    // composite with sigma_j
                    std::vector<int> c(static_cast<std::size_t>(n) + 2);
                    for (int q = 0; q <= n + 1; ++q)
                        c[static_cast<std::size_t>(q)] =
                            surjs[k][static_cast<std::size_t>(q <= j ? q : q - 1)];
                    const auto& up = fam.surjections[static_cast<std::size_t>(n + 1 - fam.degree)];
                    auto it = std::lower_bound(up.begin(), up.end(), c);
                    if (it == up.end() || *it != c)
                        throw std::logic_error("rebuild_maps: degenerate cell missing");
                    std::size_t idx = static_cast<std::size_t>(it - up.begin());
                    s.set(names[k],
                          Polynomial::variable(
                              levels_[static_cast<std::size_t>(n + 1)],
                              fam.names[static_cast<std::size_t>(n + 1 - fam.degree)][idx]));
                }
            }
            row.push_back(std::move(s));
        }
        degens_.push_back(std::move(row));
    }

    faces_.clear();
    for (int n = 1; n <= N_; ++n) {
        std::vector<RingMap> row;
        for (int i = 0; i <= n; ++i) {
            RingMap dmap(levels_[static_cast<std::size_t>(n)],
                         levels_[static_cast<std::size_t>(n - 1)]);
            for (auto& fam : cells_) {
                if (n < fam.degree) continue;
                const auto& surjs = fam.surjections[static_cast<std::size_t>(n - fam.degree)];
                const auto& names = fam.names[static_cast<std::size_t>(n - fam.degree)];
                for (std::size_t k = 0; k < surjs.size(); ++k) {
                    std::vector<int> c(static_cast<std::size_t>(n));
                    for (int q = 0; q <= n - 1; ++q)
                        c[static_cast<std::size_t>(q)] =
                            surjs[k][static_cast<std::size_t>(q < i ? q : q + 1)];
                    dmap.set(names[k], cell_face_image(fam, n, surjs[k], c));
                }
            }
            row.push_back(std::move(dmap));
        }
        faces_.push_back(std::move(row));
    }
}

void TruncatedSimplicialAlgebra::attach_cell(int d, const Polynomial& omega, bool ideal_part,
                                             const std::string& name_prefix) {
    if (d < 1 || d > N_) throw std::invalid_argument("attach_cell: degree out of range");
    Polynomial w = omega.relabel(levels_[static_cast<std::size_t>(d - 1)]);
    auto hw = w.homogeneous_weight();
    if (!hw) throw std::invalid_argument("attach_cell: inhomogeneous cycle");
    if (!w.is_zero() && *hw <= 0)
        throw std::invalid_argument("attach_cell: cycle must have positive weight");
    // normalized cycle: all faces vanish
    if (d >= 2)
        for (int i = 0; i <= d - 1; ++i)
            if (!face(d - 1, i)(w).is_zero())
                throw std::invalid_argument("attach_cell: boundary datum is not a normalized "
                                            "cycle (face " + std::to_string(i) + ")");
    CellFamily fam{d, w, ideal_part, name_prefix, 1, {}, {}};
    fam.cell_weight = w.is_zero() ? 1 : *hw;
    for (int n = d; n <= N_; ++n) {
        fam.surjections.push_back(monotone_surjections(n, d));
        std::vector<std::string> names;
        for (std::size_t k = 0; k < fam.surjections.back().size(); ++k)
            names.push_back(name_prefix + "_n" + std::to_string(n) + "_" + std::to_string(k));
        fam.names.push_back(std::move(names));
    }
    cells_.push_back(std::move(fam));
    rebuild_maps();
}

void TruncatedSimplicialAlgebra::verify_identities() const {
    auto check = [&](const Polynomial& a, const Polynomial& b, const char* what) {
        if (a != b) throw std::logic_error(std::string("simplicial identity failed: ") + what);
    };
    for (int n = 2; n <= N_; ++n)
        for (std::size_t v = 0; v < levels_[static_cast<std::size_t>(n)]->size(); ++v) {
            Polynomial x =
                Polynomial::variable(levels_[static_cast<std::size_t>(n)], v);
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    check(face(n - 1, i)(face(n, j)(x)), face(n - 1, j - 1)(face(n, i)(x)),
                          "d_i d_j = d_{j-1} d_i");
        }
    for (int n = 0; n + 1 < N_; ++n)
        for (std::size_t v = 0; v < levels_[static_cast<std::size_t>(n)]->size(); ++v) {
            Polynomial x = Polynomial::variable(levels_[static_cast<std::size_t>(n)], v);
            for (int i = 0; i <= n; ++i)
                for (int j = i; j <= n; ++j)
                    check(degeneracy(n + 1, j + 1)(degeneracy(n, i)(x)),
                          degeneracy(n + 1, i)(degeneracy(n, j)(x)),
                          "s_{j+1} s_i = s_i s_j (i <= j)");
        }
    for (int n = 1; n <= N_ - 1; ++n)
        for (std::size_t v = 0; v < levels_[static_cast<std::size_t>(n)]->size(); ++v) {
            Polynomial x = Polynomial::variable(levels_[static_cast<std::size_t>(n)], v);
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= n + 1; ++i) {
                    Polynomial lhs = face(n + 1, i)(degeneracy(n, j)(x));
                    Polynomial rhs(levels_[static_cast<std::size_t>(n)]);
                    if (i < j)
                        rhs = degeneracy(n - 1, j - 1)(face(n, i)(x));
                    else if (i == j || i == j + 1)
                        rhs = x;
                    else
                        rhs = degeneracy(n - 1, j)(face(n, i - 1)(x));
                    check(lhs.relabel(levels_[static_cast<std::size_t>(n)]),
                          rhs.relabel(levels_[static_cast<std::size_t>(n)]), "d_i s_j");
                }
        }
}


namespace {

// weight-w monomial basis of one level (free polynomial ring mod t^e)
std::vector<Exponents> level_slice(const TruncatedSimplicialAlgebra& A, int n, int w) {
    return weight_monomials(A.level(n), w, A.base_truncation() - 1);
}

QVec expand_in(const std::vector<Exponents>& basis, const Polynomial& p) {
    QVec v(basis.size(), Rational(0));
    for (auto& [e, c] : p.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), e);
        if (it == basis.end() || *it != e)
            throw std::logic_error("simplicial slice: term outside basis");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

QMat map_matrix(const TruncatedSimplicialAlgebra& A, const RingMap& f,
                const std::vector<Exponents>& src, const std::vector<Exponents>& dst) {
    QMat m = qmat_zero(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        Polynomial img =
            f(Polynomial::monomial(f.src(), src[c], Rational(1))).truncate_t(A.base_truncation());
        QVec col = expand_in(dst, img);
        for (std::size_t r = 0; r < dst.size(); ++r) m[r][c] = col[r];
    }
    return m;
}

// rows cutting out the normalized subspace (kernels of faces 1..n), plus the
// ideal-support restriction when requested
QMat normalization_rows(const TruncatedSimplicialAlgebra& A, int n, int w, bool ideal_part) {
    auto src = level_slice(A, n, w);
    QMat rows;
    if (n >= 1) {
        auto dst = level_slice(A, n - 1, w);
        for (int i = 1; i <= n; ++i) {
            QMat fm = map_matrix(A, A.face(n, i), src, dst);
            for (auto& r : fm) rows.push_back(std::move(r));
        }
    }
    if (ideal_part) {
        // coordinates on monomials with no ideal variable must vanish
        for (std::size_t k = 0; k < src.size(); ++k) {
            bool in_ideal = false;
            for (std::size_t v = 0; v < src[k].size(); ++v)
                if (src[k][v] > 0 && A.is_ideal_var(n, v)) in_ideal = true;
            if (!in_ideal) {
                QVec row(src.size(), Rational(0));
                row[k] = Rational(1);
                rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty()) rows.push_back(QVec(src.size(), Rational(0)));
    return rows;
}

std::vector<QVec> normalized_cycle_basis(const TruncatedSimplicialAlgebra& A, int n, int w,
                                         bool ideal_part) {
    auto src = level_slice(A, n, w);
    if (src.empty()) return {};
    QMat rows = normalization_rows(A, n, w, ideal_part);
    if (n >= 1) {
        auto dst = level_slice(A, n - 1, w);
        QMat d0 = map_matrix(A, A.face(n, 0), src, dst);
        for (auto& r : d0) rows.push_back(std::move(r));
    }
    return nullspace(rows);
}

std::vector<QVec> normalized_chain_basis(const TruncatedSimplicialAlgebra& A, int n, int w,
                                         bool ideal_part) {
    auto src = level_slice(A, n, w);
    if (src.empty()) return {};
    return nullspace(normalization_rows(A, n, w, ideal_part));
}

}  // namespace

std::size_t homotopy_group_dim(const TruncatedSimplicialAlgebra& A, int n, int w,
                               bool ideal_part) {
    if (n < 0 || n > A.truncation_level() - 1)
        throw std::out_of_range("homotopy_group_dim: truncation-correct range is n <= N-1");
    auto cycles = normalized_cycle_basis(A, n, w, ideal_part);
    if (cycles.empty()) return 0;
    auto src = level_slice(A, n, w);
    RowSpace bdry(src.size());
    auto chains_up = normalized_chain_basis(A, n + 1, w, ideal_part);
    if (!chains_up.empty()) {
        auto up = level_slice(A, n + 1, w);
        QMat d0 = map_matrix(A, A.face(n + 1, 0), up, src);
        for (auto& z : chains_up) bdry.add(qmat_apply(d0, z));
    }
    std::size_t cyc = 0;
    {
        RowSpace zs(src.size());
        for (auto& z : cycles) zs.add(z);
        cyc = zs.dim();
        for (auto& b : bdry.rows())
            if (!zs.contains(b)) throw std::logic_error("homotopy_group_dim: boundary not cycle");
    }
    return cyc - bdry.dim();
}

Ideal pi0_ideal(const TruncatedSimplicialAlgebra& A) {
    const auto& lvl0 = A.level(0);
    std::vector<Polynomial> gens;
    const auto& lvl1 = A.level(1);
    for (std::size_t v = 0; v < lvl1->size(); ++v) {
        if (v == 0) continue;  // t
        Polynomial x = Polynomial::variable(lvl1, v);
        Polynomial g = A.face(1, 0)(x) - A.face(1, 1)(x);
        if (!g.is_zero()) gens.push_back(g.relabel(lvl0));
    }
    return Ideal(lvl0, std::move(gens));
}

ResolvedPair resolve_pair(const QuotientPresentation& B, const std::vector<Polynomial>& ideal_gens,
                          int N, int W, std::size_t cell_budget) {
    // level 0: one _X per target variable, one _Y per ideal generator
    std::vector<Variable> vars;
    vars.push_back({"t", VarRole::deformation, 0});
    std::vector<std::pair<std::string, Polynomial>> images;
    std::size_t k = 0;
    for (std::size_t v = 1; v < B.table()->size(); ++v) {
        std::string name = "_X" + std::to_string(++k);
        vars.push_back({name, VarRole::cell, B.table()->var(v).weight});
        images.emplace_back(name, Polynomial::variable(B.table(), v));
    }
    std::vector<bool> flags(vars.size(), false);
    for (std::size_t l = 0; l < ideal_gens.size(); ++l) {
        auto w = ideal_gens[l].homogeneous_weight();
        if (!w || *w <= 0)
            throw std::invalid_argument("resolve_pair: ideal generators must be homogeneous");
        std::string name = "_Y" + std::to_string(l + 1);
        vars.push_back({name, VarRole::cell, *w});
        flags.push_back(true);
        images.emplace_back(name, ideal_gens[l]);
    }
    auto lvl0 = std::make_shared<const VariableTable>(std::move(vars));

    ResolvedPair out{TruncatedSimplicialAlgebra(lvl0, N, B.truncation(), flags), B, ideal_gens};
    TruncatedSimplicialAlgebra& A = out.algebra;

    Ideal K = kernel_of_map(lvl0, images, B.defining_ideal());

    std::size_t cells = 0;
    auto budget = [&](std::size_t more) {
        cells += more;
        if (cells > cell_budget) throw BudgetExceeded("resolve_pair: cell budget exceeded");
    };

    // degree-1 cells: kill ker(f0) and, inside the pair, ker(g0) = (Y) ^ K
    std::size_t uc = 0;
    for (auto& u : K.basis().polys) {
        budget(1);
        A.attach_cell(1, u, false, "_u1x" + std::to_string(++uc));
    }
    if (!ideal_gens.empty()) {
        std::vector<Polynomial> ygens;
        for (std::size_t l = 0; l < ideal_gens.size(); ++l)
            ygens.push_back(Polynomial::variable(lvl0, "_Y" + std::to_string(l + 1)));
        Ideal meet = intersect(Ideal(lvl0, ygens), K);
        std::size_t vc = 0;
        for (auto& v : meet.basis().polys) {
            budget(1);
            A.attach_cell(1, v, true, "_v1x" + std::to_string(++vc));
        }
    }

    // slicewise cell attachment for pi_1 .. pi_{N-1}
    for (int n = 1; n <= N - 1; ++n) {
        for (int w = 0; w <= W; ++w) {
            for (bool ideal_side : {true, false}) {
                if (ideal_side && ideal_gens.empty()) continue;
                for (int round = 0; round < 64; ++round) {
                    auto cycles = normalized_cycle_basis(A, n, w, ideal_side);
                    if (cycles.empty()) break;
                    auto src = level_slice(A, n, w);
                    RowSpace bdry(src.size());
                    auto chains_up = normalized_chain_basis(A, n + 1, w, ideal_side);
                    if (!chains_up.empty()) {
                        auto up = level_slice(A, n + 1, w);
                        QMat d0 = map_matrix(A, A.face(n + 1, 0), up, src);
                        for (auto& z : chains_up) bdry.add(qmat_apply(d0, z));
                    }
                    QuotientSpace H(bdry, cycles);
                    if (H.dim() == 0) break;
                    // one representative killed per round; attachment changes
                    // the boundaries, so recompute
                    Polynomial rep(A.level(n));
                    for (std::size_t i = 0; i < src.size(); ++i)
                        if (!H.reps()[0][i].is_zero())
                            rep += Polynomial::monomial(A.level(n), src[i], H.reps()[0][i]);
                    budget(1);
                    A.attach_cell(n + 1, rep, ideal_side,
                                  std::string(ideal_side ? "_v" : "_u") + std::to_string(n + 1) +
                                      "w" + std::to_string(w) + "x" + std::to_string(cells));
                }
            }
        }
    }

    // verification: pi_0 = (B, I) exactly, pi_n = 0 slicewise for 1 <= n <= N-1
    out.pi0_exact = ideals_equal(pi0_ideal(A), K);
    if (!ideal_gens.empty()) {
        // ideal-part pi_0 dims must match the I-slices inside B
        for (int w = 0; w <= W && out.pi0_exact; ++w) {
            std::size_t got = homotopy_group_dim(A, 0, w, true);
            // span of the ideal inside B, mod t^e
            const auto& basis = B.slice_basis(w);
            std::map<Exponents, std::size_t> index;
            for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
            RowSpace span(basis.size());
            for (auto& g : ideal_gens) {
                int wg = *g.homogeneous_weight();
                for (auto& m : weight_monomials(B.table(), w - wg, B.truncation() - 1)) {
                    Polynomial p = B.nf(g * Polynomial::monomial(B.table(), m, Rational(1)));
                    QVec vec(basis.size(), Rational(0));
                    for (auto& [ee, cc] : p.terms()) vec[index.at(ee)] = cc;
                    span.add(std::move(vec));
                }
            }
            if (got != span.dim()) out.pi0_exact = false;
        }
    }
    out.verified = out.pi0_exact;
    for (int n = 1; n <= N - 1; ++n) {
        bool vanish = true;
        for (int w = 0; w <= W; ++w) {
            if (homotopy_group_dim(A, n, w, false) != 0) vanish = false;
            if (!ideal_gens.empty() && homotopy_group_dim(A, n, w, true) != 0) vanish = false;
        }
        out.higher_vanishing.push_back({n, vanish});
        out.verified = out.verified && vanish;
    }
    return out;
}

std::size_t omega1_homotopy_dim(const TruncatedSimplicialAlgebra& A, int q, int w) {
    // slice basis of Omega^1 at level n: pairs (variable v != t, monomial of
    // weight w - wt v)
    auto slice = [&](int n) {
        std::vector<std::pair<std::size_t, Exponents>> out;
        const auto& table = A.level(n);
        for (std::size_t v = 1; v < table->size(); ++v)
            for (auto& m : weight_monomials(table, w - table->var(v).weight,
                                            A.base_truncation() - 1))
                out.emplace_back(v, m);
        return out;
    };
    auto matrix_of = [&](int n, int i, const std::vector<std::pair<std::size_t, Exponents>>& src,
                         const std::vector<std::pair<std::size_t, Exponents>>& dst) {
        const RingMap& f = A.face(n, i);
        const auto& tgt = A.level(n - 1);
        std::map<std::pair<std::size_t, Exponents>, std::size_t> index;
        for (std::size_t r = 0; r < dst.size(); ++r) index.emplace(dst[r], r);
        QMat m = qmat_zero(dst.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            auto& [v, mono] = src[c];
            Polynomial coeff =
                f(Polynomial::monomial(f.src(), mono, Rational(1))).truncate_t(A.base_truncation());
            Polynomial vin = f(Polynomial::variable(f.src(), v));
            for (std::size_t u = 1; u < tgt->size(); ++u) {
                Polynomial part = (coeff * vin.derivative(u)).truncate_t(A.base_truncation());
                for (auto& [ee, cc] : part.terms()) {
                    auto it = index.find(std::make_pair(u, ee));
                    if (it == index.end())
                        throw std::logic_error("omega1: term outside slice");
                    m[it->second][c] += cc;
                }
            }
        }
        return m;
    };
    auto normalized = [&](int n, const std::vector<std::pair<std::size_t, Exponents>>& src)
        -> std::vector<QVec> {
        if (src.empty()) return {};
        QMat rows;
        if (n >= 1) {
            auto dst = slice(n - 1);
            for (int i = 1; i <= n; ++i) {
                QMat fm = matrix_of(n, i, src, dst);
                for (auto& r : fm) rows.push_back(std::move(r));
            }
        }
        if (rows.empty()) rows.push_back(QVec(src.size(), Rational(0)));
        return nullspace(rows);
    };

    auto src = slice(q);
    if (src.empty()) return 0;
    // cycles
    std::vector<QVec> cycles;
    {
        QMat rows;
        if (q >= 1) {
            auto dst = slice(q - 1);
            for (int i = 1; i <= q; ++i) {
                QMat fm = matrix_of(q, i, src, dst);
                for (auto& r : fm) rows.push_back(std::move(r));
            }
            QMat d0 = matrix_of(q, 0, src, dst);
            for (auto& r : d0) rows.push_back(std::move(r));
        }
        if (rows.empty())
            for (std::size_t i = 0; i < src.size(); ++i) {
                QVec v(src.size(), Rational(0));
                v[i] = Rational(1);
                cycles.push_back(std::move(v));
            }
        else
            cycles = nullspace(rows);
    }
    RowSpace bdry(src.size());
    auto up_chains = normalized(q + 1, slice(q + 1));
    if (!up_chains.empty()) {
        QMat d0 = matrix_of(q + 1, 0, slice(q + 1), src);
        for (auto& z : up_chains) bdry.add(qmat_apply(d0, z));
    }
    RowSpace zs(src.size());
    for (auto& z : cycles) zs.add(z);
    return zs.dim() - bdry.dim();
}

LeftKanReport left_kan_ht_pieces(const LciInput& R, int N, int W) {
    if (N < 3)
        throw std::invalid_argument("left_kan_ht_pieces: N >= i+2 = 3 required for gr^1");
    QuotientPresentation Rp(R.table, Ideal(R.table, R.gens), 1);
    ResolvedPair res = resolve_pair(Rp, {}, N, W);
    TwoTermComplex L = cotangent_complex(R);
    CohomologyReport lrep = cohomology_report(L.complex, W);

    LeftKanReport rep;
    rep.pass = res.verified;
    for (int w = 0; w <= W; ++w) {
        std::size_t a = homotopy_group_dim(res.algebra, 0, w, false);
        std::size_t b = Rp.slice_dim(w);
        rep.gr0.push_back({a, b});
        if (a != b) rep.pass = false;

        std::size_t o0 = omega1_homotopy_dim(res.algebra, 0, w);
        std::size_t h0 = lrep.q_dim(0, w);
        rep.gr1_h0.push_back({o0, h0});
        if (o0 != h0) rep.pass = false;

        std::size_t o1 = omega1_homotopy_dim(res.algebra, 1, w);
        std::size_t hm1 = lrep.q_dim(-1, w);
        rep.gr1_hm1.push_back({o1, hm1});
        if (o1 != hm1) rep.pass = false;
    }
    return rep;
}


}  // namespace prismlab
