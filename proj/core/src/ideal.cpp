#include "prismlab/ideal.hpp"

namespace prismlab {

const Ideal::Basis& Ideal::basis(const MonomialOrder& ord, const BuchbergerOptions& opt) const {
    const std::string key = ord.key();
    std::lock_guard<std::mutex> lock(mtx_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
    auto b = std::make_shared<Basis>();
    b->order = ord;
    b->polys = buchberger(gens_, table_, ord, opt);
    b->ordered.reserve(b->polys.size());
    for (auto& p : b->polys) b->ordered.push_back(to_ordered(p, ord));
    auto [ins, fresh] = cache_.emplace(key, std::move(b));
    (void)fresh;
    return *ins->second;
}

Polynomial Ideal::normal_form(const Polynomial& p, const MonomialOrder& ord) const {
    const Basis& b = basis(ord);
    return from_ordered(reduce_full(to_ordered(p, ord), b.ordered, ord), table_);
}

bool Ideal::is_unit_ideal() const {
    const Basis& b = basis();
    return b.polys.size() == 1 && b.polys[0].term_count() == 1 &&
           total_degree(b.polys[0].terms().begin()->first) == 0;
}

bool Ideal::is_zero_ideal() const { return basis().polys.empty(); }

bool ideals_equal(const Ideal& a, const Ideal& b) {
    for (auto& g : a.generators())
        if (!b.contains(g.table() == b.table() ? g : g.relabel(b.table()))) return false;
    for (auto& g : b.generators())
        if (!a.contains(g.table() == a.table() ? g : g.relabel(a.table()))) return false;
    return true;
}

}  // namespace prismlab
