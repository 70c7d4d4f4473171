#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace prismlab {

enum class VarRole { deformation, geometric, envelope, diagonal, cell };

struct Variable {
    std::string name;
    VarRole role = VarRole::geometric;
    int weight = 1;
};

/// Ordered table of variables of a polynomial ring over Q. Index 0 is always
/// the deformation variable t (weight 0). Geometric, envelope, diagonal and
/// cell variables carry positive weights; localization inverses may carry a
/// negative weight and are flagged on the table.
class VariableTable {
public:
    explicit VariableTable(std::vector<Variable> vars) : vars_(std::move(vars)) {
        if (vars_.empty() || vars_[0].role != VarRole::deformation)
            throw std::invalid_argument("VariableTable: slot 0 must be the deformation variable");
        if (vars_[0].weight != 0)
            throw std::invalid_argument("VariableTable: deformation variable must have weight 0");
        for (std::size_t i = 1; i < vars_.size(); ++i) {
            if (vars_[i].role == VarRole::deformation)
                throw std::invalid_argument("VariableTable: exactly one deformation variable");
            if (vars_[i].weight == 0)
                throw std::invalid_argument("VariableTable: non-t variable with weight 0: " + vars_[i].name);
            if (vars_[i].weight < 0) has_negative_ = true;
            for (std::size_t j = 0; j < i; ++j)
                if (vars_[j].name == vars_[i].name)
                    throw std::invalid_argument("VariableTable: duplicate name " + vars_[i].name);
        }
    }

    /// t plus the given geometric variables.
    static std::shared_ptr<const VariableTable> geometric(
        const std::vector<std::pair<std::string, int>>& named_weights) {
        std::vector<Variable> vs;
        vs.push_back({"t", VarRole::deformation, 0});
        for (auto& [n, w] : named_weights) vs.push_back({n, VarRole::geometric, w});
        return std::make_shared<const VariableTable>(std::move(vs));
    }

    std::size_t size() const { return vars_.size(); }
    const Variable& var(std::size_t i) const { return vars_[i]; }
    const std::vector<Variable>& vars() const { return vars_; }
    bool has_negative_weight() const { return has_negative_; }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name) return i;
        throw std::out_of_range("VariableTable: unknown variable " + name);
    }
    bool contains(const std::string& name) const {
        for (auto& v : vars_)
            if (v.name == name) return true;
        return false;
    }

    std::vector<std::size_t> indices_with_role(VarRole r) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].role == r) out.push_back(i);
        return out;
    }

    /// New table with extra variables appended (same t).
    std::shared_ptr<const VariableTable> extended(const std::vector<Variable>& extra) const {
        std::vector<Variable> vs = vars_;
        vs.insert(vs.end(), extra.begin(), extra.end());
        return std::make_shared<const VariableTable>(std::move(vs));
    }

    bool same_names(const VariableTable& o) const {
        if (size() != o.size()) return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (vars_[i].name != o.vars_[i].name || vars_[i].weight != o.vars_[i].weight) return false;
        return true;
    }

private:
    std::vector<Variable> vars_;
    bool has_negative_ = false;
};

using VarTablePtr = std::shared_ptr<const VariableTable>;

}  // namespace prismlab
