#pragma once

#include "prismlab/complexes.hpp"
#include "prismlab/envelope.hpp"

namespace prismlab {

using PolyMat = std::vector<std::vector<Polynomial>>;

/// Free basis of the i-fold wedges dT_{j1} ^ ... ^ dT_{ji} (strictly
/// increasing geometric indices) with their weights.
std::vector<std::pair<std::vector<std::size_t>, int>> kaehler_basis(const VarTablePtr& table,
                                                                    int i);

/// Log connection on a free module over a prismatic envelope, stored via the
/// rescaled operators: nabla~_i = t*d/dT_i (coefficientwise, envelope
/// variables included) plus the matrix op[i]. Columns index source
/// generators: nabla~_i(m_a) = sum_b op[i][b][a] * m_b.
struct LogConnection {
    Envelope env;
    std::size_t rank = 1;
    std::vector<int> weights;  // generator weights
    std::vector<PolyMat> op;   // one per geometric variable of the input table

    std::vector<std::size_t> geo() const {
        return env.input.table->indices_with_role(VarRole::geometric);
    }
};

LogConnection structure_sheaf_connection(const Envelope& env);

/// nabla~_i applied to a coordinate vector, reduced in the envelope.
std::vector<Polynomial> apply_rescaled_nabla(const LogConnection& c, std::size_t geo_pos,
                                             const std::vector<Polynomial>& v);

/// Every nabla~_i(generator) lies in t*M.
bool check_integrality(const LogConnection& c);
/// The commutators [nabla~_i, nabla~_j] vanish identically mod (J, t^e).
bool check_integrability(const LogConnection& c);

/// Divided de Rham complex (M tensor Omega^bullet in the t-rescaled
/// presentation); throws if the connection data is not weight-graded.
FreeComplex divided_de_rham(const LogConnection& c);

/// Integrable connection over the infinitesimal envelope: honest operators
/// nabla_i = d/dT_i + A_i, no pole, entries over P.
struct InfConnection {
    LciInput in;
    std::size_t rank = 1;
    std::vector<int> weights;
    std::vector<PolyMat> coeff;  // A_i per geometric variable

    static InfConnection structure_sheaf(const LciInput& in);
};

/// Integrability of an InfConnection, verified in the stabilized
/// infinitesimal model for weights up to W.
bool check_inf_integrability(const InfConnection& c, int W);

/// pi^*: extend by the Leibniz rule along D_inf -> D; the result is integral
/// and integrable by construction (asserted).
LogConnection pullback_connection(const InfConnection& c);

/// Honest de Rham complex of an InfConnection over the stabilized
/// infinitesimal model (valid slicewise up to W).
FreeComplex infinitesimal_de_rham(const InfConnection& c, int W);

struct TransitionData {
    SelfProductEnvelope d1;
    PolyMat matrix;  // transition over D(1)
    bool cocycle_ok = false;
    bool linear_term_ok = false;  // matches the defining difference map mod (Delta/t)^2
};

/// Taylor-series transition of an integral connection over D(1), with the
/// cocycle condition verified over D(2). Refuses non-integral input.
TransitionData crystal_transition_series(const LogConnection& c);

}  // namespace prismlab
