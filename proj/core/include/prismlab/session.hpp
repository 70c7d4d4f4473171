#pragma once

#include <map>

#include "prismlab/connection.hpp"

namespace prismlab {

/// Parsed and name-resolved session: global parameters, declared objects,
/// ordered task list. The text grammar is line-oriented and block-structured:
///
///   base { trunc = 2, weight_max = 4, cech_depth = 2, simp_level = 3 }
///   ring NAME { vars = [x:1, y:1] }                  # t implicit, weight 0
///   ideal NAME in RING { gens = ["x*y", ...] }
///   crystal NAME over (RING, IDEAL) { rank = 2, nabla_x = [["0","t"],["0","0"]] }
///   task KIND { ring = NAME, ideal = NAME, ... }
///
/// Expressions use +, -, *, ^, rational literals p/q and declared variables.
struct SessionSpec {
    int trunc = 2;
    int weight_max = 4;
    int cech_depth = 2;
    int simp_level = 3;

    struct RingDecl {
        std::string name;
        std::vector<std::pair<std::string, int>> vars;
        VarTablePtr table;
        int line = 0;
    };
    struct IdealDecl {
        std::string name;
        std::string ring;
        std::vector<std::string> gen_text;
        std::vector<Polynomial> gens;
        int line = 0;
    };
    struct CrystalDecl {
        std::string name;
        std::string ring;
        std::string ideal;
        int rank = 1;
        std::vector<int> weights;  // generator weights, default all 0
        // variable name -> rank x rank matrix of expression text / polys
        std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> nabla_text;
        int line = 0;
    };
    struct TaskDecl {
        std::string kind;
        std::map<std::string, std::string> args;
        int line = 0;
    };

    std::vector<RingDecl> rings;
    std::vector<IdealDecl> ideals;
    std::vector<CrystalDecl> crystals;
    std::vector<TaskDecl> tasks;

    const RingDecl* find_ring(const std::string& n) const;
    const IdealDecl* find_ideal(const std::string& n) const;
    const CrystalDecl* find_crystal(const std::string& n) const;
};

SessionSpec parse_spec(const std::string& text);

/// Canonical rendering; parse(render(s)) == s on the declared data.
std::string render_spec(const SessionSpec& s);

bool specs_equal(const SessionSpec& a, const SessionSpec& b);

}  // namespace prismlab
