#pragma once

#include "prismlab/connection.hpp"
#include "prismlab/rees_oracle.hpp"

namespace prismlab {

/// N^op-descending filtered object. Two computable kinds, matching the two
/// uses the comparison theorems need, plus explicit per-level chains for
/// convolution products:
///   ideal_adic  — Fil^i = I^i on the ambient ring;
///   lifted      — the lifted infinitesimal filtration on the de Rham
///                 complex of a connection over D_inf;
///   levelwise   — explicit chain Fil^0 >= Fil^1 >= ... of ideals.
struct FilteredObject {
    enum class Kind { ideal_adic, lifted, levelwise };
    Kind kind = Kind::ideal_adic;

    LciInput base;                    // ideal_adic: ambient + I generators
    std::optional<InfConnection> conn;  // lifted
    std::vector<std::vector<Polynomial>> levels;  // levelwise: gens per level >= 1
    bool exhaustive = true;

    static FilteredObject ideal_adic(LciInput in) {
        FilteredObject f;
        f.kind = Kind::ideal_adic;
        f.base = std::move(in);
        return f;
    }
    static FilteredObject lifted(InfConnection c) {
        FilteredObject f;
        f.kind = Kind::lifted;
        f.base = c.in;
        f.conn = std::move(c);
        return f;
    }
};

/// Simpson functor on an ideal-adic filtration: the Rees-type algebra
/// generated by f_q/t, presented by adjoining x_q with t*x_q - f_q,
/// saturating t-torsion and truncating. Returns the full envelope data.
Envelope simpson_psi(const FilteredObject& f);

/// Simpson functor on a lifted filtration: the t^{-j}-rescaled subcomplex,
/// i.e. the divided de Rham complex over Psi(M, I^bullet M); per-term twist
/// tags are the cohomological degrees.
FreeComplex simpson_psi_complex(const FilteredObject& f, int W);

struct GrCheckRow {
    int weight = 0;
    std::size_t psi_mod_t = 0;  // dim of the weight slice of Psi/t
    std::vector<std::size_t> gr_dims;  // per filtration level n (twist -n)
};

struct GrCheckReport {
    bool pass = false;
    std::vector<GrCheckRow> rows;
};

/// Remark-level identity Psi tensor K = oplus_n gr^n(-n), slicewise up to W,
/// with the right side from the brute-force monomial oracle.
GrCheckReport psi_gr_check(const FilteredObject& f, int W);

/// Day-convolution product filtration on the tensor product of two
/// ideal-adic filtrations over disjoint variable sets:
/// Fil^n = sum_{i+j=n} I^i J^j, levelwise up to level_cap.
FilteredObject convolution_filtration(const FilteredObject& f, const FilteredObject& g,
                                      int level_cap);

/// dim_Q (Fil^n / Fil^{n+1})_w of a levelwise filtration, mod t.
std::size_t levelwise_gr_dim(const FilteredObject& f, int n, int w);

/// Does the levelwise filtration agree with the K-adic one up to level_cap?
bool levelwise_is_adic(const FilteredObject& f, const Ideal& K);

}  // namespace prismlab
