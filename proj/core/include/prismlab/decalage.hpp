#pragma once

#include "prismlab/complexes.hpp"

namespace prismlab {

/// Decalage functor eta_t applied to a complex of t-torsion-free free
/// modules given by its integral (pre-truncation) model:
///   (eta_t C)^i = t^i C^i  intersect  d^{-1}(t^{i+1} C^{i+1}).
/// Internally kept in the t^{-i}-rescaled presentation
///   E^i = { u in C^i : d(u) in t C^{i+1} },  d_eta(u) = d(u)/t,
/// truncated at t^e for slicewise cohomology.
class EtaComplex : public ComplexSlicer {
public:
    /// The input complex must present t-torsion-free modules: its
    /// presentation's defining ideal must satisfy (J : t) = J.
    explicit EtaComplex(const FreeComplex& base);

    SliceComplex slice(int w) const override;
    int min_degree() const override { return base_.min_degree(); }
    int max_degree() const override { return base_.max_degree(); }
    int truncation() const override { return base_.truncation(); }

    /// Does the module element (one polynomial per generator of the term)
    /// lie in E^degree, i.e. is its differential divisible by t?
    bool contains(int degree, const std::vector<Polynomial>& v) const;

    /// Applies the base differential to a module element.
    std::vector<Polynomial> apply_d(int degree, const std::vector<Polynomial>& v) const;

private:
    FreeComplex base_;
    QuotientPresentation pres1_;  // same ring mod (J, t)

    struct TermData {
        // free Q[t]-basis of E: kernel lifts then t * complement lifts
        std::vector<std::vector<Polynomial>> zgens;  // elements of ker(d mod t)
        std::vector<std::vector<Polynomial>> cgens;  // complement, to be scaled by t
    };
    TermData term_data(int degree, int w) const;

    // exact Q[t]-coordinates of a module element in the (z, c) basis
    std::pair<std::vector<Polynomial>, std::vector<Polynomial>> coords(
        int degree, int w, const TermData& td, const std::vector<Polynomial>& v) const;
};

}  // namespace prismlab
