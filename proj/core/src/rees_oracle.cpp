#include "prismlab/rees_oracle.hpp"

#include <map>

#include "prismlab/ideal_ops.hpp"

namespace prismlab {

ReesOracle::ReesOracle(VarTablePtr table, std::vector<Polynomial> gens) : table_(std::move(table)) {
    std::map<std::size_t, Polynomial> kill_t{{0, Polynomial::zero(table_)}};
    for (auto& g : gens) {
        Polynomial red = g.substitute(kill_t);
        if (red.is_zero()) continue;
        auto w = red.homogeneous_weight();
        if (!w || *w <= 0)
            throw std::invalid_argument("ReesOracle: generators must be homogeneous of "
                                        "positive weight mod t");
        if (min_weight_ == 0 || *w < min_weight_) min_weight_ = *w;
        gens_.push_back(std::move(red));
    }
}

std::size_t ReesOracle::power_dim(int n, int w) const {
    auto monos = weight_monomials(table_, w, 0);  // t-free
    if (n == 0) return monos.size();
    if (gens_.empty()) return 0;
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);

    RowSpace span(monos.size());
    for (auto& prod : ideal_power_gens(gens_, n)) {
        int wp = *prod.homogeneous_weight();
        if (wp > w) continue;
        for (auto& mult : weight_monomials(table_, w - wp, 0)) {
            Polynomial v = prod * Polynomial::monomial(table_, mult, Rational(1));
            QVec vec(monos.size(), Rational(0));
            for (auto& [e, c] : v.terms()) vec[index.at(e)] = c;
            span.add(std::move(vec));
        }
    }
    return span.dim();
}

std::size_t ReesOracle::gr_dim(int n, int w) const {
    return power_dim(n, w) - power_dim(n + 1, w);
}

int ReesOracle::max_power(int w) const {
    if (gens_.empty() || min_weight_ == 0) return 0;
    return w / min_weight_;
}

std::size_t ReesOracle::psi_mod_t_dim(int w) const {
    std::size_t total = 0;
    for (int n = 0; n <= max_power(w); ++n) total += gr_dim(n, w);
    return total;
}

}  // namespace prismlab
