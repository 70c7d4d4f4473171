#pragma once

#include <stdexcept>
#include <vector>

#include "prismlab/monomial_order.hpp"

namespace prismlab {

/// Thrown when the Buchberger pair budget is exhausted; signals that the
/// instance is too large for desk scale, never silently truncated.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Polynomial as a term list sorted descending under a fixed order.
struct OrderedPoly {
    struct Term {
        Exponents mono;
        Rational coeff;
    };
    std::vector<Term> terms;

    bool empty() const { return terms.empty(); }
    const Term& lt() const { return terms.front(); }
};

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& ord);
Polynomial from_ordered(const OrderedPoly& p, const VarTablePtr& table);

/// Remainder of the multivariate division of f by the divisors. Unique when
/// the divisors form a reduced basis for the order.
OrderedPoly reduce_full(const OrderedPoly& f, const std::vector<OrderedPoly>& divisors,
                        const MonomialOrder& ord);

/// Divide f by a single divisor; returns {quotient, remainder}.
std::pair<OrderedPoly, OrderedPoly> divide_single(const OrderedPoly& f, const OrderedPoly& g,
                                                  const MonomialOrder& ord);

/// Process-wide default for the Buchberger pair budget (overridable per call
/// and via the CLI environment variable).
void set_default_pair_budget(std::size_t n);
std::size_t default_pair_budget();

struct BuchbergerOptions {
    std::size_t pair_budget = default_pair_budget();
};

/// Reduced, monic, deterministically sorted Groebner basis.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const VarTablePtr& table,
                                   const MonomialOrder& ord, const BuchbergerOptions& opt = {});

}  // namespace prismlab
