#pragma once

#include <mutex>

#include "prismlab/ideal.hpp"
#include "prismlab/linalg.hpp"

namespace prismlab {

/// Finitely presented graded quotient ring over Q[t]/t^e: the ambient
/// weighted polynomial ring of the table modulo (defining ideal, t^e).
/// Every weight slice is a finite-dimensional Q-space with a nilpotent
/// t-action; slices of t-torsion-free presentations are free over Q[t]/t^e.
class QuotientPresentation {
public:
    QuotientPresentation(VarTablePtr table, Ideal defining, int e);

    /// Trivial presentation Q[t]/t (placeholder for late-filled aggregates).
    QuotientPresentation()
        : QuotientPresentation(VariableTable::geometric({}),
                               Ideal(VariableTable::geometric({}), {}), 1) {}

    QuotientPresentation(const QuotientPresentation& o)
        : table_(o.table_), defining_(o.defining_), working_(o.working_), e_(o.e_) {
        std::lock_guard<std::mutex> lock(o.mtx_);
        slice_cache_ = o.slice_cache_;
    }
    QuotientPresentation& operator=(const QuotientPresentation& o) {
        if (this != &o) {
            std::scoped_lock lock(mtx_, o.mtx_);
            table_ = o.table_;
            defining_ = o.defining_;
            working_ = o.working_;
            e_ = o.e_;
            slice_cache_ = o.slice_cache_;
        }
        return *this;
    }

    const VarTablePtr& table() const { return table_; }
    const Ideal& defining_ideal() const { return *defining_; }
    int truncation() const { return e_; }

    /// Defining ideal together with t^e; the basis everything reduces by.
    const Ideal& working_ideal() const { return *working_; }

    Polynomial nf(const Polynomial& p) const { return working_->normal_form(p); }
    /// Normal form modulo the defining ideal only (no t-truncation).
    Polynomial nf_pre(const Polynomial& p) const { return defining_->normal_form(p); }

    bool is_zero_ring() const { return working_->is_unit_ideal(); }

    /// (defining : t) = defining — the t-torsion-freeness witness.
    bool t_torsion_free_presented() const;

    /// Standard monomials of the given weight (t-exponent < e built in).
    const std::vector<Exponents>& slice_basis(int w) const;
    std::size_t slice_dim(int w) const { return slice_basis(w).size(); }

    /// Standard monomials of the defining ideal alone (no t^e), with
    /// t-exponent <= t_cap; the integral-model window used by eta_t.
    std::vector<Exponents> pre_slice_basis(int w, int t_cap) const;

    /// Expand a normal form supported in weight w over the slice basis.
    QVec to_slice(const Polynomial& nf_poly, int w) const;
    Polynomial from_slice(int w, const QVec& v) const;

    /// Matrix of multiplication by a weighted-homogeneous element, from
    /// slice w to slice w + weight(f).
    QMat mult_matrix(const Polynomial& f, int w) const;
    QMat t_matrix(int w) const;

    QuotientPresentation with_truncation(int e) const {
        return QuotientPresentation(table_, *defining_, e);
    }

private:
    VarTablePtr table_;
    std::shared_ptr<const Ideal> defining_;
    std::shared_ptr<const Ideal> working_;
    int e_;

    mutable std::mutex mtx_;
    mutable std::map<int, std::vector<Exponents>> slice_cache_;

    std::vector<Exponents> enumerate_slice(int w) const;
};

/// All monomials of the table with the given weight and t-exponent <= t_cap
/// (no ideal reduction). Requires positive weights on non-t variables.
std::vector<Exponents> weight_monomials(const VarTablePtr& table, int w, int t_cap);

}  // namespace prismlab
