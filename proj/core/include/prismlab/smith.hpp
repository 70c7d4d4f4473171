#pragma once

#include "prismlab/linalg.hpp"

namespace prismlab {

/// Element of Q[t]/t^e as its coefficient window [c0, ..., c_{e-1}].
struct TPoly {
    QVec c;

    static TPoly zero(int e) { return {QVec(static_cast<std::size_t>(e), Rational(0))}; }
    static TPoly t_power(int e, int a) {
        TPoly p = zero(e);
        if (a < e) p.c[static_cast<std::size_t>(a)] = Rational(1);
        return p;
    }
    int e() const { return static_cast<int>(c.size()); }
    bool is_zero() const {
        for (auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }
    /// t-adic valuation; e for zero.
    int val() const {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) return static_cast<int>(i);
        return e();
    }
};

TPoly tp_add(const TPoly& a, const TPoly& b);
TPoly tp_sub(const TPoly& a, const TPoly& b);
TPoly tp_mul(const TPoly& a, const TPoly& b);
TPoly tp_neg(const TPoly& a);
/// Inverse of a unit (val 0); power series inversion truncated at t^e.
TPoly tp_unit_inverse(const TPoly& a);

using TMat = std::vector<std::vector<TPoly>>;

struct SmithResult {
    /// Exponents a_1 <= a_2 <= ... of the diagonal t^{a_i}; entries with
    /// a_i >= e are zero in Q[t]/t^e and reported as e.
    std::vector<int> diagonal;
    TMat U, V;  // invertible; U * M * V = diag
};

/// Smith normal form over the local ring Q[t]/t^e. Always exists: every
/// element is unit * t^a.
SmithResult smith_normal_form(const TMat& m, int e);

/// U * M * V recomputed and compared against the diagonal; for tests.
bool smith_verify(const TMat& m, const SmithResult& r, int e);

}  // namespace prismlab
