#include "prismlab/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace prismlab {

Polynomial Polynomial::constant(VarTablePtr t, Rational c) {
    Polynomial p(t);
    if (!c.is_zero()) p.terms_.emplace(Exponents(t->size(), 0), std::move(c));
    return p;
}

Polynomial Polynomial::variable(VarTablePtr t, std::size_t index) {
    if (index >= t->size()) throw std::out_of_range("Polynomial::variable: bad index");
    Exponents e(t->size(), 0);
    e[index] = 1;
    Polynomial p(t);
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Polynomial Polynomial::variable(VarTablePtr t, const std::string& name) {
    auto i = t->index_of(name);
    return variable(std::move(t), i);
}

Polynomial Polynomial::monomial(VarTablePtr t, Exponents e, Rational c) {
    if (e.size() != t->size()) throw std::invalid_argument("Polynomial::monomial: exponent size");
    Polynomial p(t);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

void Polynomial::insert(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

static void check_tables(const Polynomial& a, const Polynomial& b) {
    if (a.table() != b.table() && !a.table()->same_names(*b.table()))
        throw std::invalid_argument("Polynomial: variable table mismatch");
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_tables(a, b);
    Polynomial r = a;
    for (auto& [e, c] : b.terms_) r.insert(e, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    check_tables(a, b);
    Polynomial r = a;
    for (auto& [e, c] : b.terms_) r.insert(e, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(table_);
    for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(table_);
    if (c.is_zero()) return r;
    for (auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_tables(a, b);
    Polynomial r(a.table());
    const std::size_t n = a.table()->size();
    Exponents e(n);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            r.insert(e, ca * cb);
        }
    return r;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
    Polynomial r = constant(table_, Rational(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    return a.terms_ < b.terms_;
}

Polynomial Polynomial::substitute(const std::map<std::size_t, Polynomial>& assignment) const {
    Polynomial r(table_);
    for (auto& [e, c] : terms_) {
        Polynomial term = constant(table_, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = assignment.find(i);
            if (it == assignment.end()) {
                Exponents m(table_->size(), 0);
                m[i] = e[i];
                term = term * monomial(table_, std::move(m), Rational(1));
            } else {
                term = term * it->second.pow(e[i]);
            }
        }
        r += term;
    }
    return r;
}

Polynomial Polynomial::truncate_t(int e) const {
    if (e < 1) throw std::invalid_argument("truncate_t: e must be >= 1");
    Polynomial r(table_);
    for (auto& [m, c] : terms_)
        if (m[0] < e) r.terms_.emplace(m, c);
    return r;
}

int Polynomial::t_degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m[0]);
    return d;
}

int Polynomial::t_valuation() const {
    int v = std::numeric_limits<int>::max();
    for (auto& [m, c] : terms_) v = std::min(v, m[0]);
    return v;
}

Polynomial Polynomial::divide_by_t(int k) const {
    if (!divisible_by_t(k)) throw std::domain_error("divide_by_t: not divisible");
    Polynomial r(table_);
    for (auto& [m, c] : terms_) {
        Exponents e = m;
        e[0] -= k;
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

Polynomial Polynomial::mul_by_t(int k) const {
    Polynomial r(table_);
    for (auto& [m, c] : terms_) {
        Exponents e = m;
        e[0] += k;
        r.terms_.emplace(std::move(e), c);
    }
    return r;
}

int Polynomial::weight_of(const Exponents& e) const {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * table_->var(i).weight;
    return w;
}

std::optional<int> Polynomial::homogeneous_weight() const {
    if (terms_.empty()) return 0;
    int w = weight_of(terms_.begin()->first);
    for (auto& [e, c] : terms_)
        if (weight_of(e) != w) return std::nullopt;
    return w;
}

std::map<int, Polynomial> Polynomial::weight_components() const {
    std::map<int, Polynomial> out;
    for (auto& [e, c] : terms_) {
        int w = weight_of(e);
        auto it = out.find(w);
        if (it == out.end()) it = out.emplace(w, Polynomial(table_)).first;
        it->second.terms_.emplace(e, c);
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(table_);
    for (auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents m = e;
        m[var] -= 1;
        r.insert(m, c * Rational(e[var]));
    }
    return r;
}

Polynomial Polynomial::relabel(const VarTablePtr& target) const {
    // only variables actually used need to exist in the target
    constexpr std::size_t unused = static_cast<std::size_t>(-1);
    std::vector<std::size_t> remap(table_->size(), unused);
    for (auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && remap[i] == unused)
                remap[i] = target->index_of(table_->var(i).name);
    Polynomial r(target);
    for (auto& [e, c] : terms_) {
        Exponents m(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) m[remap[i]] = e[i];
        r.terms_.emplace(std::move(m), c);
    }
    return r;
}

int Polynomial::degree_in(std::size_t var) const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // graded-lex: total degree descending, then lex with earlier table
    // variables more significant and t least significant.
    std::vector<const std::pair<const Exponents, Rational>*> sorted;
    sorted.reserve(terms_.size());
    for (auto& kv : terms_) sorted.push_back(&kv);
    const std::size_t n = table_->size();
    auto lex_after = [&](const Exponents& a, const Exponents& b) {
        for (std::size_t i = 1; i < n; ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return a[0] > b[0];
    };
    std::sort(sorted.begin(), sorted.end(), [&](auto* x, auto* y) {
        int dx = total_degree(x->first), dy = total_degree(y->first);
        if (dx != dy) return dx > dy;
        return lex_after(x->first, y->first);
    });
    std::string out;
    bool first = true;
    for (auto* kv : sorted) {
        const auto& [e, c] = *kv;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { out += "-"; a = -a; }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 1; i <= n; ++i) {
            std::size_t idx = i % n;  // variables 1..n-1 then t
            if (e[idx] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += table_->var(idx).name;
            if (e[idx] > 1) mono += "^" + std::to_string(e[idx]);
        }
        if (mono.empty()) {
            out += a.str();
        } else if (a.is_one()) {
            out += mono;
        } else {
            out += a.str() + "*" + mono;
        }
    }
    return out;
}

void RingMap::set(std::size_t src_var, Polynomial image) {
    if (src_var >= src_->size()) throw std::out_of_range("RingMap::set");
    images_[src_var] = std::move(image);
}

Polynomial RingMap::operator()(const Polynomial& p) const {
    if (p.table() != src_ && !p.table()->same_names(*src_))
        throw std::invalid_argument("RingMap: polynomial not over source table");
    Polynomial r(dst_);
    for (auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(dst_, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (images_[i]) {
                term = term * images_[i]->pow(e[i]);
            } else {
                term = term * Polynomial::variable(dst_, src_->var(i).name).pow(e[i]);
            }
        }
        r += term;
    }
    return r;
}

}  // namespace prismlab
