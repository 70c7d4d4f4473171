#include "prismlab/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace prismlab {

TPoly tp_add(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

TPoly tp_sub(const TPoly& a, const TPoly& b) {
    TPoly r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

TPoly tp_neg(const TPoly& a) {
    TPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

TPoly tp_mul(const TPoly& a, const TPoly& b) {
    TPoly r = TPoly::zero(a.e());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < b.c.size(); ++j)
            if (!b.c[j].is_zero()) r.c[i + j] += a.c[i] * b.c[j];
    }
    return r;
}

TPoly tp_unit_inverse(const TPoly& a) {
    if (a.val() != 0) throw std::domain_error("tp_unit_inverse: not a unit");
    TPoly r = TPoly::zero(a.e());
    r.c[0] = a.c[0].inverse();
    // Newton-free forward substitution: (a * r)_k = [k == 0]
    for (std::size_t k = 1; k < a.c.size(); ++k) {
        Rational acc(0);
        for (std::size_t j = 0; j < k; ++j) acc += r.c[j] * a.c[k - j];
        r.c[k] = -acc * r.c[0];
    }
    return r;
}

namespace {

void row_op(TMat& m, TMat& u, std::size_t dst, std::size_t src, const TPoly& f) {
    for (std::size_t j = 0; j < m[dst].size(); ++j)
        m[dst][j] = tp_sub(m[dst][j], tp_mul(f, m[src][j]));
    for (std::size_t j = 0; j < u[dst].size(); ++j)
        u[dst][j] = tp_sub(u[dst][j], tp_mul(f, u[src][j]));
}

void col_op(TMat& m, TMat& v, std::size_t dst, std::size_t src, const TPoly& f) {
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i][dst] = tp_sub(m[i][dst], tp_mul(f, m[i][src]));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i][dst] = tp_sub(v[i][dst], tp_mul(f, v[i][src]));
}

TMat t_identity(std::size_t n, int e) {
    TMat m(n, std::vector<TPoly>(n, TPoly::zero(e)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = TPoly::t_power(e, 0);
    return m;
}

}  // namespace

SmithResult smith_normal_form(const TMat& input, int e) {
    TMat m = input;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    SmithResult res;
    res.U = t_identity(rows, e);
    res.V = t_identity(cols, e);

    std::size_t k = 0;
    while (k < rows && k < cols) {
        // pivot: minimal valuation in the trailing block
        int best = e;
        std::size_t pi = k, pj = k;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                int v = m[i][j].val();
                if (v < best) { best = v; pi = i; pj = j; }
            }
        if (best >= e) break;  // trailing block is zero
        std::swap(m[pi], m[k]);
        std::swap(res.U[pi], res.U[k]);
        if (pj != k) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][k]);
            for (std::size_t i = 0; i < cols; ++i) std::swap(res.V[i][pj], res.V[i][k]);
        }
        // normalize pivot to exactly t^best: divide the row by the unit part
        TPoly unit = m[k][k];
        for (int s = 0; s < best; ++s) unit.c.erase(unit.c.begin()), unit.c.push_back(Rational(0));
        TPoly inv = tp_unit_inverse(unit);
        for (std::size_t j = 0; j < cols; ++j) m[k][j] = tp_mul(inv, m[k][j]);
        for (std::size_t j = 0; j < rows; ++j) res.U[k][j] = tp_mul(inv, res.U[k][j]);
        // clear row and column; every entry has valuation >= best
        for (std::size_t i = k + 1; i < rows; ++i) {
            if (m[i][k].is_zero()) continue;
            TPoly q = m[i][k];
            for (int s = 0; s < best; ++s) q.c.erase(q.c.begin()), q.c.push_back(Rational(0));
            row_op(m, res.U, i, k, q);
        }
        for (std::size_t j = k + 1; j < cols; ++j) {
            if (m[k][j].is_zero()) continue;
            TPoly q = m[k][j];
            for (int s = 0; s < best; ++s) q.c.erase(q.c.begin()), q.c.push_back(Rational(0));
            col_op(m, res.V, j, k, q);
        }
        ++k;
    }
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) res.diagonal.push_back(m[i][i].val());
    std::sort(res.diagonal.begin(), res.diagonal.end());
    return res;
}

bool smith_verify(const TMat& m, const SmithResult& r, int e) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    // U * M * V
    TMat um(rows, std::vector<TPoly>(cols, TPoly::zero(e)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t l = 0; l < rows; ++l)
                um[i][j] = tp_add(um[i][j], tp_mul(r.U[i][l], m[l][j]));
    TMat umv(rows, std::vector<TPoly>(cols, TPoly::zero(e)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t l = 0; l < cols; ++l)
                umv[i][j] = tp_add(umv[i][j], tp_mul(um[i][l], r.V[l][j]));
    std::vector<int> diag;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (i == j) {
                int v = umv[i][j].val();
                if (!umv[i][j].is_zero()) {
                    // must be exactly a t-power
                    TPoly tp = TPoly::t_power(e, v);
                    if (!tp_sub(umv[i][j], tp).is_zero()) return false;
                }
                if (i < std::min(rows, cols)) diag.push_back(v);
            } else if (!umv[i][j].is_zero()) {
                return false;
            }
        }
    std::sort(diag.begin(), diag.end());
    return diag == r.diagonal;
}

}  // namespace prismlab
