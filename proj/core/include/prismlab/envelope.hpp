#pragma once

#include "prismlab/complexes.hpp"
#include "prismlab/ideal_ops.hpp"

namespace prismlab {

/// Regular-immersion input: ambient P = Q[t][T_i] and weighted-homogeneous
/// ideal generators, with a regularity certificate for (t, f_1, ..., f_c) or
/// the honest "unverified" flag carried to every downstream theorem check.
struct LciInput {
    VarTablePtr table;  // t plus geometric variables only
    std::vector<Polynomial> gens;
    int e = 1;

    enum class Cert { certified, failed, unverified };
    Cert cert = Cert::unverified;
    std::vector<std::size_t> cert_order;  // permutation that certified

    bool certified() const { return cert == Cert::certified; }
};

/// Builds the input and runs the bounded-permutation regularity search.
LciInput make_lci(VarTablePtr table, std::vector<Polynomial> gens, int e,
                  bool run_certification = true, std::size_t max_permutations = 120);

/// Prismatic envelope D = (P[x_q]/(t x_q - f_q) : t^inf) / t^e together with
/// the data needed to differentiate envelope variables.
struct Envelope {
    QuotientPresentation pres;
    LciInput input;
    std::vector<std::string> rees_names;  // x-variable per generator, "_x1", ...

    /// t * d/dT_i as a derivation of the presented ring: T_k -> t*[k==i],
    /// x_q -> df_q/dT_i.
    Derivation rescaled_derivation(std::size_t geo_var) const;
};

Envelope prismatic_envelope(const LciInput& in);

struct IndependenceReport {
    bool pass = false;
    std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> dims;  // w -> (lhs, rhs)
    std::string detail;
};

/// Lemma-level check: adjoining a redundant generator changes nothing —
/// equal slice dims up to W plus mutually inverse maps on generators.
IndependenceReport generator_independence_check(const LciInput& in, const Polynomial& extra,
                                                int W);

/// P/(I^m, t^e); slices of weight w are stable once m*minweight(I) > w.
QuotientPresentation infinitesimal_envelope(const LciInput& in, int m);
/// Smallest m whose weight-w slice equals the limit's.
int infinitesimal_stabilization_index(const LciInput& in, int w);
/// Model of D_inf valid for all slices up to weight W (differential included).
QuotientPresentation infinitesimal_model(const LciInput& in, int W);

/// Self-product envelope D(l): ambient P(l) = P[delta_{j,i}], ideal
/// (I, Delta(l)), every generator Rees-divided. Carries the cosimplicial
/// coordinates: delta variables "_del<j>_<i>", their divided "_d<j>_<i>".
struct SelfProductEnvelope {
    QuotientPresentation pres;
    LciInput input;
    int level = 0;
    std::vector<std::string> rees_names;                  // for I generators
    std::vector<std::vector<std::string>> delta_names;    // [j-1][i] level coords
    std::vector<std::vector<std::string>> divided_names;  // [j-1][i]
};

SelfProductEnvelope self_product_envelope(const LciInput& in, int level);

/// Coface map D(l) -> D(l+1), k in [0, l+1].
RingMap coface_map(const SelfProductEnvelope& from, const SelfProductEnvelope& to, int k);
/// Codegeneracy map D(l+1) -> D(l), k in [0, l].
RingMap codegeneracy_map(const SelfProductEnvelope& from, const SelfProductEnvelope& to, int k);

struct InjectivityReport {
    bool pass = false;
    std::vector<std::pair<int, std::size_t>> kernel_dims;  // weight -> kernel dim
};

/// P/(I^n, t^n) -> D/t^n has zero kernel slicewise up to W.
InjectivityReport envelope_injectivity_check(const LciInput& in, int n, int W);

}  // namespace prismlab
