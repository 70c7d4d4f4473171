#pragma once

#include <array>

#include "prismlab/cotangent.hpp"

namespace prismlab {

/// Truncated simplicial commutative polynomial algebra over Q[t]/t^e.
/// Levels 0..N are free polynomial rings; faces and degeneracies are
/// substitution maps. Attached cells are indexed by monotone surjections
/// t: [n] ->> [d]; the structure maps on cells follow the convention fixed
/// in attach_cell below and are validated through their consequences
/// (levels below d unchanged, the pi_{d-1} short exact sequence).
class TruncatedSimplicialAlgebra {
public:
    /// Constant simplicial algebra on the given variable table; flags mark
    /// level-0 variables generating the designated ideal of a pair.
    TruncatedSimplicialAlgebra(VarTablePtr level0, int N, int e,
                               std::vector<bool> level0_ideal_flags = {});

    int truncation_level() const { return N_; }
    int base_truncation() const { return e_; }
    const VarTablePtr& level(int n) const { return levels_[static_cast<std::size_t>(n)]; }

    /// d_i: level n -> n-1, 0 <= i <= n.
    const RingMap& face(int n, int i) const;
    /// s_j: level n -> n+1, 0 <= j <= n (n < N).
    const RingMap& degeneracy(int n, int j) const;

    /// Is the variable part of the designated ideal (the Y/V-part of a pair)?
    bool is_ideal_var(int n, std::size_t var) const;

    /// Attach a cell of degree d along a normalized cycle w in level d-1
    /// (all faces of w must vanish). Convention for t: [n] ->> [d] and a
    /// structure map theta with c = t o theta not surjective: the image is
    /// u^*(w) when c omits exactly the value 0 (u = c - 1), and 0 otherwise.
    /// This places the new top cell in the normalized complex with
    /// d_0(cell) = w.
    void attach_cell(int d, const Polynomial& omega, bool ideal_part,
                     const std::string& name_prefix);

    /// Simplicial identities verified on all generators of all levels.
    void verify_identities() const;

    /// u: [m] ->> [d'] monotone surjective; the composite degeneracy map
    /// A_{d'} -> A_m.
    Polynomial degenerate_along(const std::vector<int>& u, const Polynomial& p) const;

    /// Number of variables at a level.
    std::size_t level_size(int n) const { return levels_[static_cast<std::size_t>(n)]->size(); }

private:
    struct CellFamily {
        int degree;
        Polynomial omega;      // over level degree-1
        bool ideal_part;
        std::string prefix;
        int cell_weight = 1;
        // per level n >= degree: surjections [n]->>[degree] in lex order,
        // names aligned
        std::vector<std::vector<std::vector<int>>> surjections;
        std::vector<std::vector<std::string>> names;
    };

    void rebuild_maps();
    Polynomial cell_face_image(const CellFamily& fam, int n, const std::vector<int>& surj,
                               const std::vector<int>& composite) const;

    int N_;
    int e_;
    std::vector<VarTablePtr> levels_;
    std::vector<std::vector<RingMap>> faces_;       // faces_[n][i], n >= 1
    std::vector<std::vector<RingMap>> degens_;      // degens_[n][j], n < N
    std::vector<std::vector<bool>> ideal_flags_;    // per level, per var
    std::vector<CellFamily> cells_;
    VarTablePtr base_;
    std::vector<bool> base_flags_;
};

/// All monotone surjections [n] ->> [d], lexicographically ordered.
std::vector<std::vector<int>> monotone_surjections(int n, int d);

/// Weight-w slice dimensions of the normalized homotopy group pi_n; the
/// ideal_part flag restricts to the designated ideal.
std::size_t homotopy_group_dim(const TruncatedSimplicialAlgebra& A, int n, int w,
                               bool ideal_part = false);

/// pi_0 as a quotient of level 0: the ideal generated by (d_0 - d_1) of the
/// level-1 variables.
Ideal pi0_ideal(const TruncatedSimplicialAlgebra& A);

struct ResolvedPair {
    TruncatedSimplicialAlgebra algebra;
    QuotientPresentation target;        // B
    std::vector<Polynomial> target_ideal_gens;
    bool pi0_exact = false;             // pi_0 == (B, I) by ideal comparison
    std::vector<std::pair<int, bool>> higher_vanishing;  // n -> all slices vanish (w <= W)
    bool verified = true;
};

/// Levelwise finite resolution of the pair (B, I): level-0 generators, exact
/// degree-1 kernel killing, then slicewise cell attachment up to weight W
/// for pi_1..pi_{N-1}.
ResolvedPair resolve_pair(const QuotientPresentation& B, const std::vector<Polynomial>& ideal_gens,
                          int N, int W, std::size_t cell_budget = 4096);

struct LeftKanReport {
    bool pass = false;
    // per weight: (realization dim, comparison dim) for the requested piece
    std::vector<std::array<std::size_t, 2>> gr0;   // pi_0(A) vs R
    std::vector<std::array<std::size_t, 2>> gr1_h0;   // pi_0(Omega^1) vs H^0(L)
    std::vector<std::array<std::size_t, 2>> gr1_hm1;  // pi_1(Omega^1) vs H^{-1}(L)
};

/// Left-Kan graded pieces in degrees <= 1, realized over the resolution and
/// compared with the naive-cotangent route.
LeftKanReport left_kan_ht_pieces(const LciInput& R, int N, int W);

/// Slicewise dims of pi_q of the simplicial Kaehler module Omega^1_{A_n}.
std::size_t omega1_homotopy_dim(const TruncatedSimplicialAlgebra& A, int q, int w);

}  // namespace prismlab
