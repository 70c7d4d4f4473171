#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "prismlab/rational.hpp"

namespace prismlab {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;  // row major

inline QMat qmat_zero(std::size_t rows, std::size_t cols) {
    return QMat(rows, QVec(cols, Rational(0)));
}

inline QMat qmat_identity(std::size_t n) {
    QMat m = qmat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
    return m;
}

inline QVec qmat_apply(const QMat& a, const QVec& v) {
    QVec r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) r[i] += a[i][j] * v[j];
    return r;
}

inline QMat qmat_mul(const QMat& a, const QMat& b) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    QMat r = qmat_zero(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

/// In-place reduced row echelon form; returns pivot column indices.
inline std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rational inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(QMat m) { return rref(m).size(); }

/// Solve A x = b; nullopt if inconsistent. Free coordinates are set to zero,
/// making the solution deterministic.
inline std::optional<QVec> solve(const QMat& a, const QVec& b) {
    if (a.empty()) {
        for (auto& x : b)
            if (!x.is_zero()) return std::nullopt;
        return QVec{};
    }
    const std::size_t rows = a.size(), cols = a[0].size();
    QMat aug = a;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    auto pivots = rref(aug);
    for (std::size_t i = 0; i < rows; ++i) {
        bool zero_row = true;
        for (std::size_t j = 0; j < cols; ++j)
            if (!aug[i][j].is_zero()) { zero_row = false; break; }
        if (zero_row && !aug[i][cols].is_zero()) return std::nullopt;
    }
    QVec x(cols, Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] < cols) x[pivots[k]] = aug[k][cols];
    return x;
}

/// Basis of the kernel of A (columns = domain coordinates).
inline std::vector<QVec> nullspace(const QMat& a) {
    std::vector<QVec> out;
    if (a.empty()) return out;
    const std::size_t cols = a[0].size();
    QMat m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        QVec v(cols, Rational(0));
        v[fc] = Rational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][fc];
        out.push_back(std::move(v));
    }
    return out;
}

/// Row space kept in reduced echelon form; supports incremental spanning.
class RowSpace {
public:
    explicit RowSpace(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const QMat& rows() const { return rows_; }

    QVec reduce(QVec v) const {
        for (auto& row : rows_) {
            std::size_t p = pivot_of(row);
            if (!v[p].is_zero()) {
                Rational f = v[p];
                for (std::size_t j = p; j < ambient_; ++j) v[j] -= f * row[j];
            }
        }
        return v;
    }

    bool contains(const QVec& v) const {
        QVec r = reduce(v);
        for (auto& x : r)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Returns true if v enlarged the space.
    bool add(QVec v) {
        v = reduce(std::move(v));
        std::size_t p = ambient_;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!v[j].is_zero()) { p = j; break; }
        if (p == ambient_) return false;
        Rational inv = v[p].inverse();
        for (std::size_t j = p; j < ambient_; ++j) v[j] *= inv;
        for (auto& row : rows_) {
            if (!row[p].is_zero()) {
                Rational f = row[p];
                for (std::size_t j = p; j < ambient_; ++j) row[j] -= f * v[j];
            }
        }
        rows_.push_back(std::move(v));
        std::sort(rows_.begin(), rows_.end(), [this](const QVec& a, const QVec& b) {
            return pivot_of(a) < pivot_of(b);
        });
        return true;
    }

    void add_all(const std::vector<QVec>& vs) {
        for (auto& v : vs) add(v);
    }

private:
    std::size_t pivot_of(const QVec& row) const {
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!row[j].is_zero()) return j;
        return ambient_;
    }

    std::size_t ambient_;
    QMat rows_;
};

/// Quotient V/S with explicit representatives; provides coordinates of
/// arbitrary vectors in the chosen representative basis.
class QuotientSpace {
public:
    QuotientSpace(RowSpace sub, const std::vector<QVec>& spanning)
        : sub_(std::move(sub)) {
        RowSpace acc = sub_;
        for (auto& v : spanning)
            if (acc.add(v)) reps_.push_back(v);
    }

    std::size_t dim() const { return reps_.size(); }
    const std::vector<QVec>& reps() const { return reps_; }

    /// Coordinates of v in the representative basis (mod the subspace).
    QVec coords(const QVec& v) const {
        std::size_t amb = sub_.ambient_dim();
        QMat cols;  // build the matrix [reps | sub-basis] column-wise
        std::size_t total = reps_.size() + sub_.dim();
        cols.assign(amb, QVec(total, Rational(0)));
        for (std::size_t c = 0; c < reps_.size(); ++c)
            for (std::size_t i = 0; i < amb; ++i) cols[i][c] = reps_[c][i];
        for (std::size_t c = 0; c < sub_.dim(); ++c)
            for (std::size_t i = 0; i < amb; ++i) cols[i][reps_.size() + c] = sub_.rows()[c][i];
        auto x = solve(cols, v);
        if (!x) throw std::logic_error("QuotientSpace::coords: vector outside span");
        return QVec(x->begin(), x->begin() + static_cast<long>(reps_.size()));
    }

private:
    RowSpace sub_;
    std::vector<QVec> reps_;
};

}  // namespace prismlab
