#pragma once

#include <optional>

#include "prismlab/ideal.hpp"

namespace prismlab {

/// (I : f) = { g : g*f in I }, f != 0.
Ideal colon_ideal(const Ideal& I, const Polynomial& f);

/// (J : t^inf), computed with one elimination: adjoin _z, impose t*_z - 1,
/// eliminate _z. Stable under further colon by t.
Ideal saturate_t(const Ideal& J);

/// I intersected with the subring omitting the dropped variables; generators
/// returned over the original table but free of the dropped variables.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop);

Ideal intersect(const Ideal& I, const Ideal& J);

/// Generators of I^m (all m-fold products of the generators).
std::vector<Polynomial> ideal_power_gens(const std::vector<Polynomial>& gens, int m);

struct RegularSequenceResult {
    bool certified = false;
    int failed_index = -1;  // 0-based position of the offending element
};

/// Certified iff for each i, ((f_1..f_{i-1}) : f_i) = (f_1..f_{i-1}) and the
/// full quotient is nonzero. A failure only refutes this ordering.
RegularSequenceResult is_regular_sequence(const VarTablePtr& table,
                                          const std::vector<Polynomial>& seq);

struct RegularityCertificate {
    bool certified = false;
    std::vector<std::size_t> order_used;  // permutation of the non-t generators
};

/// Bounded permutation search for an ordering making (t, f_perm...) regular.
RegularityCertificate certify_regularity(const VarTablePtr& table,
                                         const std::vector<Polynomial>& gens,
                                         std::size_t max_permutations = 720);

/// Solve p = sum a_j * gens_j with weighted-homogeneous a_j of bounded
/// t-degree. Only valid for weighted-homogeneous inputs; returns nullopt if
/// no solution exists within the t-degree cap.
std::optional<std::vector<Polynomial>> express_in_generators(
    const Polynomial& p, const std::vector<Polynomial>& gens, int t_degree_cap = 16);

/// Kernel of the ring map src -> dst/J_dst determined by variable images
/// (t maps to t). Computed by graph-ideal elimination.
Ideal kernel_of_map(const VarTablePtr& src,
                    const std::vector<std::pair<std::string, Polynomial>>& images,
                    const Ideal& target_relations);

}  // namespace prismlab
