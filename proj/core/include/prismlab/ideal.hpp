#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "prismlab/groebner.hpp"

namespace prismlab {

/// Ideal in a polynomial ring over Q given by generators, with lazily
/// computed, cached reduced Groebner bases per monomial order. Cache
/// mutation is guarded; queries against a computed basis are read-only.
class Ideal {
public:
    struct Basis {
        MonomialOrder order;
        std::vector<Polynomial> polys;
        std::vector<OrderedPoly> ordered;  // same polys, division-ready
    };

    Ideal(VarTablePtr table, std::vector<Polynomial> gens)
        : table_(std::move(table)), gens_(std::move(gens)) {
        for (auto& g : gens_)
            if (g.table() != table_ && !g.table()->same_names(*table_))
                throw std::invalid_argument("Ideal: generator over wrong table");
    }

    // copies share the (immutable) cached bases
    Ideal(const Ideal& o) : table_(o.table_), gens_(o.gens_) {
        std::lock_guard<std::mutex> lock(o.mtx_);
        cache_ = o.cache_;
    }
    Ideal& operator=(const Ideal& o) {
        if (this != &o) {
            std::scoped_lock lock(mtx_, o.mtx_);
            table_ = o.table_;
            gens_ = o.gens_;
            cache_ = o.cache_;
        }
        return *this;
    }

    static Ideal zero(VarTablePtr table) { return Ideal(std::move(table), {}); }

    const VarTablePtr& table() const { return table_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const Basis& basis(const MonomialOrder& ord = MonomialOrder::grevlex(),
                       const BuchbergerOptions& opt = {}) const;

    Polynomial normal_form(const Polynomial& p,
                           const MonomialOrder& ord = MonomialOrder::grevlex()) const;
    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
    bool is_unit_ideal() const;
    bool is_zero_ideal() const;

    Ideal with_extra(std::vector<Polynomial> extra) const {
        std::vector<Polynomial> g = gens_;
        for (auto& p : extra) g.push_back(std::move(p));
        return Ideal(table_, std::move(g));
    }

private:
    VarTablePtr table_;
    std::vector<Polynomial> gens_;
    mutable std::mutex mtx_;
    mutable std::unordered_map<std::string, std::shared_ptr<const Basis>> cache_;
};

/// Two-way generator membership.
bool ideals_equal(const Ideal& a, const Ideal& b);

}  // namespace prismlab
