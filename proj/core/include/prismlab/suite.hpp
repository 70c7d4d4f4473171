#pragma once

#include <optional>

#include "prismlab/cech.hpp"
#include "prismlab/decalage.hpp"
#include "prismlab/filtration.hpp"
#include "prismlab/simplicial.hpp"
#include "prismlab/smith.hpp"

namespace prismlab {

struct TheoremCheckResult {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    enum class Verdict { pass, fail, unverified_hypothesis } verdict = Verdict::fail;
    std::vector<std::string> evidence;  // paired dimension/structure rows

    bool passed() const { return verdict == Verdict::pass; }
    void note(std::string line) { evidence.push_back(std::move(line)); }
    void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
};

/// Slice structures of the divided de Rham complex over the envelope;
/// structure-sheaf coefficients unless a crystal is supplied.
CohomologyReport prismatic_cohomology(const LciInput& in, int W,
                                      const std::optional<LogConnection>& crystal = {});

/// Cohomology of the de Rham complex of the stabilized infinitesimal model.
CohomologyReport infinitesimal_cohomology(const LciInput& in, int W);

/// Psi of the lifted infinitesimal filtration against the prismatic route.
TheoremCheckResult psi_of_infinitesimal_check(const LciInput& in, const InfConnection& coeff,
                                              int W);

struct HodgeTateData {
    TheoremCheckResult result;
    CohomologyReport mod_t;  // H(C/t) with twist tags
    // Bockstein matrices per (degree, weight): beta on H^deg -> H^{deg+1}
    std::vector<std::tuple<int, int, QMat>> bockstein;
};

/// Hodge-Tate comparison: smooth inputs against Omega^i with beta = d
/// entrywise; l.c.i. inputs against wedge powers of the cotangent complex.
HodgeTateData hodge_tate_table(const LciInput& in, int W, int wedge_cap = 2);

/// Cech-Alexander cohomology at the given depth.
CohomologyReport cech_alexander(const LciInput& in, int depth, int W,
                                const std::optional<LogConnection>& crystal = {});

/// Cech vs divided-de-Rham agreement, degree by degree up to depth-1.
TheoremCheckResult cech_agreement_check(const LciInput& in, int depth, int W,
                                        const std::optional<LogConnection>& crystal = {});

/// Infinitesimal comparison through eta_t; smooth inputs get the termwise
/// identity, the non-smooth path documents the mismatch table.
TheoremCheckResult decalage_check(const LciInput& in, int W);

/// Is the presented input smooth (no relations, or a unit maximal Jacobian
/// minor in R)?
bool is_smooth_presentation(const LciInput& in);

/// RGamma tensor^L Q[t]/t via the t-multiplication triangle against the
/// cohomology of the reduced crystal. Needs e >= 2 to read torsion.
TheoremCheckResult reduction_check(const LciInput& in, int W,
                                   const std::optional<LogConnection>& crystal = {});

/// Cotangent Kunneth plus Hodge-Tate graded convolution, gr^i for i <= cap.
TheoremCheckResult kunneth_check(const LciInput& a, const LciInput& b, int W, int gr_cap = 2);

/// Graded Zariski localization at a variable (weight-shift bookkeeping).
TheoremCheckResult localization_check(const LciInput& in, const Polynomial& f, int W,
                                      int gr_cap = 2);

/// Reduced prismatic cohomology against the direct sum of infinitesimal
/// graded pieces, with twist tags.
TheoremCheckResult split_check(const LciInput& in, int W);

/// dim H^q of the weight-w slice of the gr^n piece of the infinitesimal de
/// Rham complex of R over Q (e = 1; twist tag -n).
std::size_t inf_gr_dim(const LciInput& in, int n, int q, int w);

}  // namespace prismlab
