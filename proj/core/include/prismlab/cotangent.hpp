#pragma once

#include "prismlab/connection.hpp"

namespace prismlab {

/// Naive cotangent complex of R = P/(I, t): free module on eps_q in degree
/// -1 mapping to Omega^1 tensor R by eps_q -> df_q.
struct TwoTermComplex {
    LciInput in;
    FreeComplex complex;  // degrees [-1, 0] over R (truncation 1)
};

TwoTermComplex cotangent_complex(const LciInput& in);

/// Derived i-th wedge via the Sym (x) wedge bicomplex of the two-term flat
/// complex (characteristic zero): degree -j term Sym^j(deg -1) (x)
/// wedge^{i-j}(deg 0), Koszul differential.
FreeComplex wedge_power(const TwoTermComplex& L, int i);

struct CotangentKunnethResult {
    bool pass = false;
    bool block_diagonal = false;  // the product differential splits over the factors
    std::vector<std::string> mismatches;
};

/// Ambient product presentation: disjoint union of the variables, union of
/// the generators; certification re-run.
LciInput product_input(const LciInput& a, const LciInput& b);

/// p1^* L1 (+) p2^* L2 = L of the product: block structure plus slice
/// dimension bookkeeping of H^{-1}, H^0 up to weight W.
CotangentKunnethResult cotangent_kunneth(const LciInput& a, const LciInput& b, int W);

}  // namespace prismlab
