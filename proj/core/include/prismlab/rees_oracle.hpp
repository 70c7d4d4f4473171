#pragma once

#include "prismlab/presentation.hpp"

namespace prismlab {

/// Brute-force monomial/linear-algebra oracle for the graded pieces of an
/// ideal-adic filtration, computed in P/t by direct span enumeration of
/// n-fold generator products. Entirely independent of the Groebner-based
/// envelope path it cross-checks.
class ReesOracle {
public:
    ReesOracle(VarTablePtr table, std::vector<Polynomial> gens);

    /// dim_Q of (I^n)_w inside P/t.
    std::size_t power_dim(int n, int w) const;
    /// dim_Q of (I^n / I^{n+1})_w.
    std::size_t gr_dim(int n, int w) const;
    /// dim_Q of the weight-w slice of (big oplus_n I^n/I^{n+1}); equals the
    /// weight-w slice of D/t for the extended-Rees envelope.
    std::size_t psi_mod_t_dim(int w) const;
    /// Largest n contributing to weight w (gens have positive weight).
    int max_power(int w) const;

    std::size_t envelope_slice_dim(int w, int e) const {
        return static_cast<std::size_t>(e) * psi_mod_t_dim(w);
    }

private:
    VarTablePtr table_;
    std::vector<Polynomial> gens_;  // reduced mod t
    int min_weight_ = 0;
};

}  // namespace prismlab
