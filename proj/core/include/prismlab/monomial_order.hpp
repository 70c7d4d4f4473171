#pragma once

#include <string>
#include <vector>

#include "prismlab/polynomial.hpp"

namespace prismlab {

/// Total monomial order compatible with multiplication. Two kinds:
/// graded-reverse-lex with t ranked last (the default everywhere), and a
/// block elimination order whose designated block is compared first.
class MonomialOrder {
public:
    enum class Kind { grevlex_t_last, elimination };

    MonomialOrder() : MonomialOrder(Kind::grevlex_t_last, {}) {}

    static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex_t_last, {}); }
    static MonomialOrder elimination_block(std::vector<std::size_t> block) {
        return MonomialOrder(Kind::elimination, std::move(block));
    }

    Kind kind() const { return kind_; }
    const std::vector<std::size_t>& block() const { return block_; }

    /// >0 if a > b, 0 if equal, <0 if a < b.
    int compare(const Exponents& a, const Exponents& b) const {
        if (kind_ == Kind::elimination) {
            int da = 0, db = 0;
            for (auto i : block_) { da += a[i]; db += b[i]; }
            if (da != db) return da > db ? 1 : -1;
            // reverse-lex tie break inside the block (later block entry less
            // significant)
            for (auto it = block_.rbegin(); it != block_.rend(); ++it)
                if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
        }
        return grevlex_cmp(a, b);
    }

    bool less(const Exponents& a, const Exponents& b) const { return compare(a, b) < 0; }

    std::string key() const {
        std::string k = kind_ == Kind::grevlex_t_last ? "grevlex" : "elim";
        for (auto i : block_) k += ":" + std::to_string(i);
        return k;
    }

private:
    MonomialOrder(Kind k, std::vector<std::size_t> b) : kind_(k), block_(std::move(b)) {}

    static int grevlex_cmp(const Exponents& a, const Exponents& b) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db ? 1 : -1;
        // significance x1 > x2 > ... > t; scan least significant first
        if (a[0] != b[0]) return a[0] < b[0] ? 1 : -1;
        for (std::size_t i = a.size(); i-- > 1;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    Kind kind_;
    std::vector<std::size_t> block_;
};

inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
    return r;
}

inline Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool exp_coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace prismlab
