#pragma once

#include <map>
#include <optional>
#include <vector>

#include "prismlab/rational.hpp"
#include "prismlab/variables.hpp"

namespace prismlab {

/// Dense exponent vector, one slot per table variable (slot 0 = t).
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

/// Sparse multivariate polynomial with exact rational coefficients over a
/// shared VariableTable. Immutable value semantics; no zero terms stored.
class Polynomial {
public:
    explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}

    static Polynomial zero(VarTablePtr t) { return Polynomial(std::move(t)); }
    static Polynomial constant(VarTablePtr t, Rational c);
    static Polynomial variable(VarTablePtr t, std::size_t index);
    static Polynomial variable(VarTablePtr t, const std::string& name);
    static Polynomial monomial(VarTablePtr t, Exponents e, Rational c);

    const VarTablePtr& table() const { return table_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(int k) const;

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b);  // arbitrary total order

    /// Substitute variables by polynomials over the same table; unmapped
    /// variables pass through.
    Polynomial substitute(const std::map<std::size_t, Polynomial>& assignment) const;

    /// Drop all terms with t-exponent >= e.
    Polynomial truncate_t(int e) const;

    int t_degree() const;          // max t-exponent, -1 for zero
    int t_valuation() const;       // min t-exponent, INT_MAX-ish for zero
    bool divisible_by_t(int k) const { return is_zero() || t_valuation() >= k; }
    Polynomial divide_by_t(int k) const;  // exact; throws if not divisible
    Polynomial mul_by_t(int k) const;

    int weight_of(const Exponents& e) const;
    /// Weight if weighted-homogeneous (zero polynomial reports weight 0).
    std::optional<int> homogeneous_weight() const;
    std::map<int, Polynomial> weight_components() const;

    Polynomial derivative(std::size_t var) const;

    /// Move to a table that contains (at least) all variables used here,
    /// matching by name.
    Polynomial relabel(const VarTablePtr& target) const;

    Rational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    /// Content of the given variable: max exponent, 0 if absent.
    int degree_in(std::size_t var) const;

    /// Canonical rendering: terms in graded-lex order (total degree first,
    /// then variables in table order with t last), coefficients as "p/q".
    std::string str() const;

private:
    void insert(const Exponents& e, const Rational& c);

    VarTablePtr table_;
    std::map<Exponents, Rational> terms_;
};

/// Ring homomorphism determined by variable images, possibly across tables.
class RingMap {
public:
    RingMap(VarTablePtr src, VarTablePtr dst) : src_(std::move(src)), dst_(std::move(dst)) {
        images_.assign(src_->size(), std::optional<Polynomial>());
    }

    void set(std::size_t src_var, Polynomial image);
    void set(const std::string& src_name, Polynomial image) {
        set(src_->index_of(src_name), std::move(image));
    }
    /// Unset variables map to the same-named variable of dst.
    Polynomial operator()(const Polynomial& p) const;

    const VarTablePtr& src() const { return src_; }
    const VarTablePtr& dst() const { return dst_; }
    const std::optional<Polynomial>& image(std::size_t i) const { return images_[i]; }

private:
    VarTablePtr src_, dst_;
    std::vector<std::optional<Polynomial>> images_;
};

}  // namespace prismlab
