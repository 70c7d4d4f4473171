#pragma once

#include "prismlab/connection.hpp"

namespace prismlab {

/// Normalized Cech-Alexander cochain complex of the truncated cosimplicial
/// ring of self-product envelopes, with coefficients in an integral crystal
/// (sections over D(l) are M tensor D(l) along the zeroth projection; the
/// zeroth coface acts through the Taylor transition series).
/// Truncated at cosimplicial depth L: H^i is computed correctly for
/// i <= L-1.
class CechComplex : public ComplexSlicer {
public:
    CechComplex(LogConnection crystal, int depth);

    SliceComplex slice(int w) const override;
    int min_degree() const override { return 0; }
    int max_degree() const override { return depth_; }
    int truncation() const override { return crystal_.env.pres.truncation(); }

    const SelfProductEnvelope& level(int l) const {
        return levels_[static_cast<std::size_t>(l)];
    }

private:
    LogConnection crystal_;
    int depth_;
    std::vector<SelfProductEnvelope> levels_;        // 0..L
    std::vector<std::vector<RingMap>> cofaces_;      // [l][k]: l -> l+1
    std::vector<std::vector<RingMap>> codegens_;     // [l][k]: l+1 -> l
    std::vector<PolyMat> taylor_;                    // transition matrix into level l+1
};

}  // namespace prismlab
