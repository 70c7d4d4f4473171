#include "prismlab/decalage.hpp"

#include <algorithm>

namespace prismlab {

EtaComplex::EtaComplex(const FreeComplex& base)
    : base_(base), pres1_(base.presentation().with_truncation(1)) {
    if (!base_.presentation().t_torsion_free_presented())
        throw std::invalid_argument("eta_t: input not presented t-torsion-free");
}

std::vector<Polynomial> EtaComplex::apply_d(int degree, const std::vector<Polynomial>& v) const {
    return base_.apply_d_pre(degree, v);
}

bool EtaComplex::contains(int degree, const std::vector<Polynomial>& v) const {
    if (degree == base_.max_degree()) return true;
    auto dv = apply_d(degree, v);
    for (auto& comp : dv)
        if (!pres1_.nf(comp).is_zero()) return false;
    return true;
}

EtaComplex::TermData EtaComplex::term_data(int degree, int w) const {
    FreeComplex m1 = base_.with_truncation(1);
    SliceComplex s1 = m1.slice(w);
    std::size_t k = s1.index_of(degree);
    std::size_t n = s1.dims[k];
    auto layout = m1.slice_layout(degree, w);
    const auto& term = base_.term(degree);
    const auto& table = base_.presentation().table();

    auto to_polyvec = [&](const QVec& coords) {
        std::vector<Polynomial> pv(term.size(), Polynomial::zero(table));
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!coords[i].is_zero())
                pv[layout[i].first] +=
                    Polynomial::monomial(table, layout[i].second, coords[i]);
        return pv;
    };

    std::vector<QVec> kernel;
    if (degree < base_.max_degree() && n > 0) {
        kernel = nullspace(s1.d[k]);
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            QVec v(n, Rational(0));
            v[i] = Rational(1);
            kernel.push_back(std::move(v));
        }
    }
    RowSpace span(n);
    TermData td;
    for (auto& v : kernel) {
        span.add(v);
        td.zgens.push_back(to_polyvec(v));
    }
    for (std::size_t i = 0; i < n; ++i) {
        QVec v(n, Rational(0));
        v[i] = Rational(1);
        if (span.add(v)) td.cgens.push_back(to_polyvec(v));
    }
    return td;
}

std::pair<std::vector<Polynomial>, std::vector<Polynomial>> EtaComplex::coords(
    int degree, int w, const TermData& td, const std::vector<Polynomial>& v) const {
    const auto& pres = base_.presentation();
    const auto& table = pres.table();
    const auto& term = base_.term(degree);
    const std::size_t nb = td.zgens.size() + td.cgens.size();

    auto basis_el = [&](std::size_t j) -> const std::vector<Polynomial>& {
        return j < td.zgens.size() ? td.zgens[j] : td.cgens[j - td.zgens.size()];
    };

    int maxtot = 0;
    auto bump = [&](const std::vector<Polynomial>& pv) {
        for (auto& p : pv)
            for (auto& [e, c] : p.terms()) maxtot = std::max(maxtot, total_degree(e));
    };
    bump(v);
    for (std::size_t j = 0; j < nb; ++j) bump(basis_el(j));

    int tv = 0;
    for (auto& p : v) tv = std::max(tv, p.t_degree());

    for (int T = tv + truncation() + 2; T <= tv + truncation() + 26; T += 4) {
        const int t_win = T + maxtot + 1;
        // window rows: (generator, standard monomial)
        std::vector<std::vector<Exponents>> win(term.size());
        std::map<std::pair<std::size_t, Exponents>, std::size_t> row_index;
        std::size_t rows = 0;
        for (std::size_t g = 0; g < term.size(); ++g) {
            win[g] = pres.pre_slice_basis(w - term[g].weight, t_win);
            for (auto& m : win[g]) row_index.emplace(std::make_pair(g, m), rows++);
        }
        auto expand = [&](const std::vector<Polynomial>& pv, QVec& col) -> bool {
            for (std::size_t g = 0; g < pv.size(); ++g)
                for (auto& [e, c] : pv[g].terms()) {
                    auto it = row_index.find(std::make_pair(g, e));
                    if (it == row_index.end()) return false;
                    col[it->second] = c;
                }
            return true;
        };

        QMat A = qmat_zero(rows, nb * static_cast<std::size_t>(T + 1));
        bool ok = true;
        for (std::size_t j = 0; j < nb && ok; ++j) {
            std::vector<Polynomial> cur = basis_el(j);
            for (std::size_t g = 0; g < cur.size(); ++g) cur[g] = pres.nf_pre(cur[g]);
            for (int a = 0; a <= T && ok; ++a) {
                QVec col(rows, Rational(0));
                if (!expand(cur, col)) { ok = false; break; }
                for (std::size_t r = 0; r < rows; ++r)
                    A[r][j * static_cast<std::size_t>(T + 1) + static_cast<std::size_t>(a)] =
                        col[r];
                for (std::size_t g = 0; g < cur.size(); ++g)
                    cur[g] = pres.nf_pre(cur[g].mul_by_t(1));
            }
        }
        if (!ok) continue;
        QVec b(rows, Rational(0));
        if (!expand(v, b)) continue;
        auto x = solve(A, b);
        if (!x) continue;

        std::vector<Polynomial> alpha, beta;
        for (std::size_t j = 0; j < nb; ++j) {
            Polynomial p(table);
            for (int a = 0; a <= T; ++a) {
                const Rational& c =
                    (*x)[j * static_cast<std::size_t>(T + 1) + static_cast<std::size_t>(a)];
                if (!c.is_zero()) {
                    Exponents e(table->size(), 0);
                    e[0] = a;
                    p += Polynomial::monomial(table, e, c);
                }
            }
            if (j < td.zgens.size()) alpha.push_back(std::move(p));
            else beta.push_back(std::move(p));
        }
        return {std::move(alpha), std::move(beta)};
    }
    throw std::logic_error("eta_t: coordinate solve did not stabilize");
}

SliceComplex EtaComplex::slice(int w) const {
    const int e = truncation();
    const int nterms = base_.max_degree() - base_.min_degree() + 1;
    std::vector<TermData> tds;
    for (int k = 0; k < nterms; ++k) tds.push_back(term_data(base_.min_degree() + k, w));

    SliceComplex s;
    s.min_deg = base_.min_degree();
    auto gens_of = [&](int k) { return tds[static_cast<std::size_t>(k)].zgens.size() +
                                       tds[static_cast<std::size_t>(k)].cgens.size(); };
    for (int k = 0; k < nterms; ++k)
        s.dims.push_back(gens_of(k) * static_cast<std::size_t>(e));

    // index (j, a) -> j*e + a
    for (int k = 0; k + 1 < nterms; ++k) {
        const auto& td = tds[static_cast<std::size_t>(k)];
        const auto& td1 = tds[static_cast<std::size_t>(k + 1)];
        const std::size_t nsrc = td.zgens.size() + td.cgens.size();
        QMat m = qmat_zero(s.dims[static_cast<std::size_t>(k + 1)],
                           s.dims[static_cast<std::size_t>(k)]);
        int deg = base_.min_degree() + k;
        for (std::size_t j = 0; j < nsrc; ++j) {
            // d_eta on the j-th basis element of E^k
            std::vector<Polynomial> dv;
            bool src_is_z = j < td.zgens.size();
            if (src_is_z)
                dv = apply_d(deg, td.zgens[j]);
            else
                dv = apply_d(deg, td.cgens[j - td.zgens.size()]);
            auto [alpha, beta] = coords(deg + 1, w, td1, dv);
            // src z: d_eta(z) = d(z)/t  ->  z-coeff alpha/t, (tc)-coeff beta/t^2
            // src tc: d_eta(tc) = d(c)  ->  z-coeff alpha,   (tc)-coeff beta/t
            int zdiv = src_is_z ? 1 : 0;
            int cdiv = src_is_z ? 2 : 1;
            for (std::size_t l = 0; l < alpha.size(); ++l) {
                Polynomial q = alpha[l];
                if (!q.divisible_by_t(zdiv))
                    throw std::logic_error("eta_t: differential not divisible as required");
                q = q.divide_by_t(zdiv);
                for (auto& [ex, c] : q.terms())
                    for (int a = 0; a + ex[0] < e; ++a)
                        m[(l * static_cast<std::size_t>(e)) +
                          static_cast<std::size_t>(a + ex[0])]
                         [j * static_cast<std::size_t>(e) + static_cast<std::size_t>(a)] += c;
            }
            for (std::size_t l = 0; l < beta.size(); ++l) {
                Polynomial q = beta[l];
                if (!q.divisible_by_t(cdiv))
                    throw std::logic_error("eta_t: differential not divisible as required");
                q = q.divide_by_t(cdiv);
                std::size_t lrow = td1.zgens.size() + l;
                for (auto& [ex, c] : q.terms())
                    for (int a = 0; a + ex[0] < e; ++a)
                        m[(lrow * static_cast<std::size_t>(e)) +
                          static_cast<std::size_t>(a + ex[0])]
                         [j * static_cast<std::size_t>(e) + static_cast<std::size_t>(a)] += c;
            }
        }
        s.d.push_back(std::move(m));
    }

    for (int k = 0; k < nterms; ++k) {
        std::size_t n = s.dims[static_cast<std::size_t>(k)];
        QMat tm = qmat_zero(n, n);
        std::size_t ngen = gens_of(k);
        for (std::size_t j = 0; j < ngen; ++j)
            for (int a = 0; a + 1 < e; ++a)
                tm[j * static_cast<std::size_t>(e) + static_cast<std::size_t>(a + 1)]
                  [j * static_cast<std::size_t>(e) + static_cast<std::size_t>(a)] = Rational(1);
        s.t_act.push_back(std::move(tm));
    }
    return s;
}

}  // namespace prismlab
