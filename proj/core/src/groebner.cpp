#include "prismlab/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <map>

namespace prismlab {

namespace {
std::atomic<std::size_t> g_pair_budget{200000};
}

void set_default_pair_budget(std::size_t n) { g_pair_budget.store(n == 0 ? 1 : n); }
std::size_t default_pair_budget() { return g_pair_budget.load(); }

OrderedPoly to_ordered(const Polynomial& p, const MonomialOrder& ord) {
    OrderedPoly r;
    r.terms.reserve(p.terms().size());
    for (auto& [e, c] : p.terms()) r.terms.push_back({e, c});
    std::sort(r.terms.begin(), r.terms.end(),
              [&](const OrderedPoly::Term& a, const OrderedPoly::Term& b) {
                  return ord.compare(a.mono, b.mono) > 0;
              });
    return r;
}

Polynomial from_ordered(const OrderedPoly& p, const VarTablePtr& table) {
    Polynomial r(table);
    for (auto& t : p.terms) r += Polynomial::monomial(table, t.mono, t.coeff);
    return r;
}

namespace {

// r -= c * x^shift * g
void submul(OrderedPoly& r, const Rational& c, const Exponents& shift, const OrderedPoly& g,
            const MonomialOrder& ord) {
    OrderedPoly out;
    out.terms.reserve(r.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    Exponents gm(shift.size());
    while (i < r.terms.size() || j < g.terms.size()) {
        if (j < g.terms.size()) {
            gm = exp_add(g.terms[j].mono, shift);
        }
        if (i >= r.terms.size()) {
            out.terms.push_back({gm, -(c * g.terms[j].coeff)});
            ++j;
            continue;
        }
        if (j >= g.terms.size()) {
            out.terms.push_back(r.terms[i]);
            ++i;
            continue;
        }
        int cmp = ord.compare(r.terms[i].mono, gm);
        if (cmp > 0) {
            out.terms.push_back(r.terms[i]);
            ++i;
        } else if (cmp < 0) {
            out.terms.push_back({gm, -(c * g.terms[j].coeff)});
            ++j;
        } else {
            Rational nc = r.terms[i].coeff - c * g.terms[j].coeff;
            if (!nc.is_zero()) out.terms.push_back({r.terms[i].mono, nc});
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

void make_monic(OrderedPoly& f) {
    if (f.empty()) return;
    Rational lc = f.lt().coeff;
    if (lc.is_one()) return;
    Rational inv = lc.inverse();
    for (auto& t : f.terms) t.coeff *= inv;
}

}  // namespace

OrderedPoly reduce_full(const OrderedPoly& f, const std::vector<OrderedPoly>& divisors,
                        const MonomialOrder& ord) {
    OrderedPoly h = f;
    OrderedPoly rem;
    while (!h.empty()) {
        bool divided = false;
        for (auto& g : divisors) {
            if (g.empty()) continue;
            if (divides(g.lt().mono, h.lt().mono)) {
                Rational c = h.lt().coeff / g.lt().coeff;
                Exponents shift = exp_sub(h.lt().mono, g.lt().mono);
                submul(h, c, shift, g, ord);
                divided = true;
                break;
            }
        }
        if (!divided) {
            rem.terms.push_back(h.lt());
            h.terms.erase(h.terms.begin());
        }
    }
    return rem;
}

std::pair<OrderedPoly, OrderedPoly> divide_single(const OrderedPoly& f, const OrderedPoly& g,
                                                  const MonomialOrder& ord) {
    OrderedPoly h = f, quot, rem;
    while (!h.empty()) {
        if (divides(g.lt().mono, h.lt().mono)) {
            Rational c = h.lt().coeff / g.lt().coeff;
            Exponents shift = exp_sub(h.lt().mono, g.lt().mono);
            quot.terms.push_back({shift, c});
            submul(h, c, shift, g, ord);
        } else {
            rem.terms.push_back(h.lt());
            h.terms.erase(h.terms.begin());
        }
    }
    return {std::move(quot), std::move(rem)};
}

namespace {

struct Pair {
    std::size_t i, j;
    Exponents lcm;
    int deg;
};

struct GBState {
    std::vector<OrderedPoly> basis;
    std::vector<Pair> pairs;
    const MonomialOrder& ord;
    std::size_t budget;
    std::size_t used = 0;

    explicit GBState(const MonomialOrder& o, std::size_t b) : ord(o), budget(b) {}

    // Gebauer-Moeller style update: add h, prune pairs by the lcm and
    // product criteria.
    void update(OrderedPoly h) {
        const std::size_t t = basis.size();
        const Exponents& lmh = h.lt().mono;

        std::vector<Pair> fresh;
        for (std::size_t k = 0; k < t; ++k) {
            if (basis[k].empty()) continue;
            Exponents l = exp_lcm(basis[k].lt().mono, lmh);
            fresh.push_back({k, t, std::move(l), 0});
            fresh.back().deg = total_degree(fresh.back().lcm);
        }
        // drop old pairs whose lcm is a proper multiple of lm(h)
        std::erase_if(pairs, [&](const Pair& p) {
            if (!divides(lmh, p.lcm)) return false;
            Exponents lih = exp_lcm(basis[p.i].lt().mono, lmh);
            Exponents ljh = exp_lcm(basis[p.j].lt().mono, lmh);
            return lih != p.lcm && ljh != p.lcm;
        });
        // among new pairs keep minimal lcms only
        std::sort(fresh.begin(), fresh.end(), [&](const Pair& a, const Pair& b) {
            if (a.deg != b.deg) return a.deg < b.deg;
            int c = ord.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return a.i < b.i;
        });
        std::vector<Pair> minimal;
        for (auto& p : fresh) {
            bool dominated = false;
            for (auto& q : minimal)
                if (divides(q.lcm, p.lcm)) { dominated = true; break; }
            if (!dominated) minimal.push_back(p);
        }
        // product criterion
        for (auto& p : minimal)
            if (!exp_coprime(basis[p.i].lt().mono, lmh)) pairs.push_back(p);

        basis.push_back(std::move(h));
    }

    Pair pop_pair() {
        auto best = pairs.begin();
        for (auto it = pairs.begin(); it != pairs.end(); ++it) {
            if (it->deg < best->deg ||
                (it->deg == best->deg && ord.compare(it->lcm, best->lcm) < 0) ||
                (it->deg == best->deg && it->lcm == best->lcm &&
                 std::pair(it->i, it->j) < std::pair(best->i, best->j)))
                best = it;
        }
        Pair p = *best;
        pairs.erase(best);
        return p;
    }
};

OrderedPoly s_poly(const OrderedPoly& f, const OrderedPoly& g, const MonomialOrder& ord) {
    Exponents l = exp_lcm(f.lt().mono, g.lt().mono);
    OrderedPoly r = f;
    Exponents shift_f = exp_sub(l, f.lt().mono);
    for (auto& t : r.terms) t.mono = exp_add(t.mono, shift_f);
    Rational cf = f.lt().coeff;
    for (auto& t : r.terms) t.coeff /= cf;
    submul(r, g.lt().coeff.inverse(), exp_sub(l, g.lt().mono), g, ord);
    return r;
}

void interreduce(std::vector<OrderedPoly>& basis, const MonomialOrder& ord) {
    // drop elements whose lt is divisible by another lt
    for (std::size_t i = 0; i < basis.size();) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].empty()) continue;
            if (divides(basis[j].lt().mono, basis[i].lt().mono)) { redundant = true; break; }
        }
        if (redundant)
            basis.erase(basis.begin() + static_cast<long>(i));
        else
            ++i;
    }
    // tail-reduce every element against the others
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<OrderedPoly> others;
        others.reserve(basis.size() - 1);
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(basis[j]);
        basis[i] = reduce_full(basis[i], others, ord);
        make_monic(basis[i]);
    }
    std::sort(basis.begin(), basis.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
        return ord.compare(a.lt().mono, b.lt().mono) < 0;
    });
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const VarTablePtr& table,
                                   const MonomialOrder& ord, const BuchbergerOptions& opt) {
    std::vector<OrderedPoly> input;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        input.push_back(to_ordered(g, ord));
        make_monic(input.back());
    }
    std::sort(input.begin(), input.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
        return ord.compare(a.lt().mono, b.lt().mono) < 0;
    });
    input.erase(std::unique(input.begin(), input.end(),
                            [](const OrderedPoly& a, const OrderedPoly& b) {
                                if (a.terms.size() != b.terms.size()) return false;
                                for (std::size_t k = 0; k < a.terms.size(); ++k)
                                    if (a.terms[k].mono != b.terms[k].mono ||
                                        a.terms[k].coeff != b.terms[k].coeff)
                                        return false;
                                return true;
                            }),
                input.end());

    GBState st(ord, opt.pair_budget);
    for (auto& f : input) {
        OrderedPoly red = reduce_full(f, st.basis, ord);
        if (!red.empty()) {
            make_monic(red);
            st.update(std::move(red));
        }
    }

    while (!st.pairs.empty()) {
        if (++st.used > st.budget)
            throw BudgetExceeded("buchberger: pair budget exceeded (" +
                                 std::to_string(st.budget) + " pairs)");
        Pair p = st.pop_pair();
        OrderedPoly s = s_poly(st.basis[p.i], st.basis[p.j], ord);
        OrderedPoly red = reduce_full(s, st.basis, ord);
        if (!red.empty()) {
            make_monic(red);
            st.update(std::move(red));
        }
    }

    interreduce(st.basis, ord);

    std::vector<Polynomial> out;
    out.reserve(st.basis.size());
    for (auto& b : st.basis) out.push_back(from_ordered(b, table));
    return out;
}

}  // namespace prismlab
