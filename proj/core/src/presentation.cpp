#include "prismlab/presentation.hpp"

#include <algorithm>

#include "prismlab/ideal_ops.hpp"

namespace prismlab {

namespace {

void enumerate_rec(const VariableTable& table, std::size_t var, int remaining, Exponents& cur,
                   std::vector<Exponents>& out) {
    if (var == table.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int w = table.var(var).weight;
    for (int k = 0; k * w <= remaining; ++k) {
        cur[var] = k;
        enumerate_rec(table, var + 1, remaining - k * w, cur, out);
    }
    cur[var] = 0;
}

// all exponent vectors (t capped) of the given total degree
void enumerate_by_degree(const VariableTable& table, std::size_t var, int remaining, int t_cap,
                         Exponents& cur, std::vector<Exponents>& out) {
    if (var == table.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int hi = var == 0 ? std::min(remaining, t_cap) : remaining;
    for (int k = 0; k <= hi; ++k) {
        cur[var] = k;
        enumerate_by_degree(table, var + 1, remaining - k, t_cap, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Exponents> weight_monomials(const VarTablePtr& table, int w, int t_cap) {
    std::vector<Exponents> base;
    if (w >= 0) {
        Exponents cur(table->size(), 0);
        enumerate_rec(*table, 1, w, cur, base);
    }
    std::vector<Exponents> out;
    for (auto& m : base)
        for (int a = 0; a <= t_cap; ++a) {
            Exponents e = m;
            e[0] = a;
            out.push_back(std::move(e));
        }
    std::sort(out.begin(), out.end());
    return out;
}

QuotientPresentation::QuotientPresentation(VarTablePtr table, Ideal defining, int e)
    : table_(std::move(table)), e_(e) {
    if (e_ < 1) throw std::invalid_argument("QuotientPresentation: truncation must be >= 1");
    for (auto& g : defining.generators())
        if (!g.homogeneous_weight())
            throw std::invalid_argument(
                "QuotientPresentation: defining ideal must be weighted-homogeneous, got " +
                g.str());
    defining_ = std::make_shared<const Ideal>(table_, defining.generators());
    Polynomial te = Polynomial::variable(table_, std::size_t{0}).pow(e_);
    std::vector<Polynomial> wgens = defining.generators();
    wgens.push_back(std::move(te));
    working_ = std::make_shared<const Ideal>(table_, std::move(wgens));
}

bool QuotientPresentation::t_torsion_free_presented() const {
    Ideal c = colon_ideal(*defining_, Polynomial::variable(table_, std::size_t{0}));
    return ideals_equal(c, *defining_);
}

std::vector<Exponents> QuotientPresentation::enumerate_slice(int w) const {
    const auto& basis = working_->basis();
    std::vector<const Exponents*> lts;
    for (auto& op : basis.ordered)
        if (!op.empty()) lts.push_back(&op.lt().mono);

    std::vector<Exponents> out;
    if (!table_->has_negative_weight()) {
        std::vector<Exponents> body;
        if (w >= 0) {
            Exponents cur(table_->size(), 0);
            enumerate_rec(*table_, 1, w, cur, body);
        }
        for (auto& m : body) {
            // smallest t-power at which some leading term divides t^a * m
            int bad = e_;
            for (auto* lt : lts) {
                bool div_rest = true;
                for (std::size_t i = 1; i < m.size(); ++i)
                    if ((*lt)[i] > m[i]) { div_rest = false; break; }
                if (div_rest) bad = std::min(bad, (*lt)[0]);
            }
            for (int a = 0; a < bad; ++a) {
                Exponents e = m;
                e[0] = a;
                out.push_back(std::move(e));
            }
        }
    } else {
        // Mixed-sign weights (graded localization): enumerate by total degree
        // until the slice stops growing. Guarded, not silently truncated.
        const int hard_cap = 64;
        const int window = std::max(2 * e_, 8);
        int quiet = 0;
        for (int d = 0; d <= hard_cap && quiet < window; ++d) {
            std::vector<Exponents> layer;
            Exponents cur(table_->size(), 0);
            enumerate_by_degree(*table_, 0, d, e_ - 1, cur, layer);
            bool grew = false;
            for (auto& m : layer) {
                int wm = 0;
                for (std::size_t i = 0; i < m.size(); ++i)
                    wm += m[i] * table_->var(i).weight;
                if (wm != w) continue;
                bool std_mono = true;
                for (auto* lt : lts)
                    if (divides(*lt, m)) { std_mono = false; break; }
                if (std_mono) {
                    out.push_back(m);
                    grew = true;
                }
            }
            quiet = grew ? 0 : quiet + 1;
            if (d == hard_cap && quiet < window)
                throw BudgetExceeded("slice enumeration did not stabilize (weight " +
                                     std::to_string(w) + ")");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exponents> QuotientPresentation::pre_slice_basis(int w, int t_cap) const {
    if (table_->has_negative_weight())
        throw std::invalid_argument("pre_slice_basis: negative weights unsupported");
    const auto& basis = defining_->basis();
    std::vector<const Exponents*> lts;
    for (auto& op : basis.ordered)
        if (!op.empty()) lts.push_back(&op.lt().mono);
    std::vector<Exponents> body, out;
    if (w >= 0) {
        Exponents cur(table_->size(), 0);
        enumerate_rec(*table_, 1, w, cur, body);
    }
    for (auto& m : body) {
        int bad = t_cap + 1;
        for (auto* lt : lts) {
            bool div_rest = true;
            for (std::size_t i = 1; i < m.size(); ++i)
                if ((*lt)[i] > m[i]) { div_rest = false; break; }
            if (div_rest) bad = std::min(bad, (*lt)[0]);
        }
        for (int a = 0; a < bad; ++a) {
            Exponents e = m;
            e[0] = a;
            out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Exponents>& QuotientPresentation::slice_basis(int w) const {
    std::lock_guard<std::mutex> lock(mtx_);
    auto it = slice_cache_.find(w);
    if (it == slice_cache_.end()) it = slice_cache_.emplace(w, enumerate_slice(w)).first;
    return it->second;
}

QVec QuotientPresentation::to_slice(const Polynomial& nf_poly, int w) const {
    const auto& basis = slice_basis(w);
    QVec v(basis.size(), Rational(0));
    for (auto& [e, c] : nf_poly.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), e);
        if (it == basis.end() || *it != e)
            throw std::logic_error("to_slice: term outside slice basis (weight " +
                                   std::to_string(w) + "): " + nf_poly.str());
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

Polynomial QuotientPresentation::from_slice(int w, const QVec& v) const {
    const auto& basis = slice_basis(w);
    Polynomial p(table_);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero()) p += Polynomial::monomial(table_, basis[i], v[i]);
    return p;
}

QMat QuotientPresentation::mult_matrix(const Polynomial& f, int w) const {
    auto wf = f.homogeneous_weight();
    if (!wf) throw std::invalid_argument("mult_matrix: inhomogeneous multiplier");
    const auto& src = slice_basis(w);
    const auto& dst = slice_basis(w + *wf);
    QMat m = qmat_zero(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        Polynomial p = nf(f * Polynomial::monomial(table_, src[c], Rational(1)));
        QVec col = to_slice(p, w + *wf);
        for (std::size_t r = 0; r < dst.size(); ++r) m[r][c] = col[r];
    }
    return m;
}

QMat QuotientPresentation::t_matrix(int w) const {
    return mult_matrix(Polynomial::variable(table_, std::size_t{0}), w);
}

}  // namespace prismlab
