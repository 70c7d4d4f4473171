#pragma once

#include <functional>
#include <string>

#include "prismlab/presentation.hpp"

namespace prismlab {

/// One weight slice of a cochain complex: finite-dimensional Q-spaces, the
/// differentials, and the (nilpotent) multiplication-by-t endomorphisms.
struct SliceComplex {
    int min_deg = 0;
    std::vector<std::size_t> dims;
    std::vector<QMat> d;      // d[k]: term k -> term k+1
    std::vector<QMat> t_act;  // square, one per term

    std::size_t index_of(int degree) const { return static_cast<std::size_t>(degree - min_deg); }
    bool has_degree(int degree) const {
        return degree >= min_deg && degree < min_deg + static_cast<int>(dims.size());
    }
};

/// Invariant-factor shape of one cohomology slice over Q[t]/t^e:
/// free_rank copies of Q[t]/t^e plus one Q[t]/t^a summand per torsion entry.
struct ModuleStructure {
    std::size_t q_dim = 0;
    std::size_t free_rank = 0;
    std::vector<int> torsion;  // ascending

    bool operator==(const ModuleStructure&) const = default;
    std::string str() const;
};

/// ker/im at the given degree with the induced t-module structure, read off
/// from the Jordan type of the nilpotent induced t-action.
ModuleStructure slice_cohomology(const SliceComplex& s, int degree, int e);

struct CohomologyEntry {
    int degree = 0;
    int weight = 0;
    int twist = 0;
    ModuleStructure structure;
};

struct CohomologyReport {
    std::vector<CohomologyEntry> entries;  // sorted by (degree, weight)

    const ModuleStructure* find(int degree, int weight) const {
        for (auto& e : entries)
            if (e.degree == degree && e.weight == weight) return &e.structure;
        return nullptr;
    }
    std::size_t q_dim(int degree, int weight) const {
        auto* m = find(degree, weight);
        return m ? m->q_dim : 0;
    }
};

/// Abstract weightwise-sliceable cochain complex over Q[t]/t^e.
class ComplexSlicer {
public:
    virtual ~ComplexSlicer() = default;
    virtual SliceComplex slice(int w) const = 0;
    virtual int min_degree() const = 0;
    virtual int max_degree() const = 0;
    virtual int truncation() const = 0;
};

/// Full report over all degrees and weights [0, W]. Slices are independent
/// jobs (parallel-safe) merged in (degree, weight) order.
CohomologyReport cohomology_report(const ComplexSlicer& c, int W);

/// Q[t]-linear derivation of the ambient ring, given on variables.
struct Derivation {
    std::vector<Polynomial> var_images;  // one per table variable; t slot unused

    Polynomial apply(const Polynomial& p) const;
};

/// Matrix entry of a differential: multiplication plus derivation terms,
///   p |-> mult * p + sum_k coeff_k * D_{id_k}(p).
struct RingOp {
    Polynomial mult;
    std::vector<std::pair<std::size_t, Polynomial>> derivs;  // (derivation id, coeff)

    static RingOp of(Polynomial m) { return {std::move(m), {}}; }
    bool trivial() const { return mult.is_zero() && derivs.empty(); }
};

/// Complex of free modules over one presentation: term k is free on weighted
/// generators; differential entries are RingOps over a shared derivation set.
class FreeComplex : public ComplexSlicer {
public:
    struct Generator {
        std::string name;
        int weight = 0;
    };
    using Term = std::vector<Generator>;
    using OpMatrix = std::vector<std::vector<RingOp>>;  // rows = target gens

    FreeComplex(QuotientPresentation pres, int min_deg, std::vector<Term> terms,
                std::vector<OpMatrix> diffs, std::vector<Derivation> derivations = {});

    const QuotientPresentation& presentation() const { return pres_; }
    const Term& term(int degree) const { return terms_[idx(degree)]; }
    const OpMatrix& differential(int degree) const { return diffs_[idx(degree)]; }
    const std::vector<Derivation>& derivations() const { return derivations_; }

    Polynomial apply_entry(const RingOp& op, const Polynomial& p) const;
    /// Differential applied to a module element (one polynomial per
    /// generator), reduced modulo the defining ideal only.
    std::vector<Polynomial> apply_d_pre(int degree, const std::vector<Polynomial>& v) const;

    /// d o d = 0 on every slice up to weight W; throws on failure.
    void verify_d2(int W) const;

    SliceComplex slice(int w) const override;
    int min_degree() const override { return min_deg_; }
    int max_degree() const override { return min_deg_ + static_cast<int>(terms_.size()) - 1; }
    int truncation() const override { return pres_.truncation(); }

    /// Basis description of one slice of one term: (generator, monomial).
    std::vector<std::pair<std::size_t, Exponents>> slice_layout(int degree, int w) const;

    FreeComplex with_truncation(int e) const {
        return FreeComplex(pres_.with_truncation(e), min_deg_, terms_, diffs_, derivations_);
    }

private:
    std::size_t idx(int degree) const { return static_cast<std::size_t>(degree - min_deg_); }

    QuotientPresentation pres_;
    int min_deg_;
    std::vector<Term> terms_;
    std::vector<OpMatrix> diffs_;
    std::vector<Derivation> derivations_;
};

/// Standard Koszul complex on a sequence, homologically indexed: term at
/// cohomological degree -k is the k-th wedge power.
FreeComplex koszul_complex(const QuotientPresentation& ambient,
                           const std::vector<Polynomial>& seq);

}  // namespace prismlab
