#include "prismlab/session.hpp"

#include <cctype>

#include "prismlab/poly_parse.hpp"

namespace prismlab {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

    void advance() {
        if (s[pos] == '\n') { ++line; col = 1; } else { ++col; }
        ++pos;
    }
    void skip_ws_and_comments() {
        while (pos < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[pos]))) { advance(); continue; }
            if (s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n') advance();
                continue;
            }
            break;
        }
    }
    bool eat(char c) {
        skip_ws_and_comments();
        if (pos < s.size() && s[pos] == c) { advance(); return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    bool peek(char c) {
        skip_ws_and_comments();
        return pos < s.size() && s[pos] == c;
    }
    bool done() {
        skip_ws_and_comments();
        return pos >= s.size();
    }
    std::string ident() {
        skip_ws_and_comments();
        if (pos >= s.size() ||
            !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            fail("expected identifier");
        std::string out;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            out += s[pos];
            advance();
        }
        return out;
    }
    long long integer() {
        skip_ws_and_comments();
        bool neg = false;
        if (pos < s.size() && s[pos] == '-') { neg = true; advance(); }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000'000LL) fail("integer too large");
            advance();
        }
        return neg ? -v : v;
    }
    std::pair<std::string, std::pair<int, int>> quoted() {
        skip_ws_and_comments();
        if (pos >= s.size() || s[pos] != '"') fail("expected string literal");
        advance();
        int l0 = line, c0 = col;
        std::string out;
        while (pos < s.size() && s[pos] != '"') {
            out += s[pos];
            advance();
        }
        if (pos >= s.size()) fail("unterminated string literal");
        advance();
        return {out, {l0, c0}};
    }
    // bare value for task arguments: identifier, integer or quoted text
    std::string bare_value() {
        skip_ws_and_comments();
        if (pos < s.size() && s[pos] == '"') return quoted().first;
        if (pos < s.size() &&
            (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '-'))
            return std::to_string(integer());
        return ident();
    }
};

}  // namespace

const SessionSpec::RingDecl* SessionSpec::find_ring(const std::string& n) const {
    for (auto& r : rings)
        if (r.name == n) return &r;
    return nullptr;
}
const SessionSpec::IdealDecl* SessionSpec::find_ideal(const std::string& n) const {
    for (auto& i : ideals)
        if (i.name == n) return &i;
    return nullptr;
}
const SessionSpec::CrystalDecl* SessionSpec::find_crystal(const std::string& n) const {
    for (auto& c : crystals)
        if (c.name == n) return &c;
    return nullptr;
}

SessionSpec parse_spec(const std::string& text) {
    SessionSpec spec;
    Lexer lx(text);
    const std::vector<std::string> kinds = {"envelope", "prism_coh", "inf_coh", "hodge_tate",
                                            "cech",     "decalage",  "reduction", "kunneth",
                                            "localize", "split",     "resolve",   "left_kan",
                                            "psi_check"};
    while (!lx.done()) {
        int at_line = lx.line;
        std::string head = lx.ident();
        if (head == "base") {
            lx.expect('{');
            while (!lx.peek('}')) {
                std::string key = lx.ident();
                lx.expect('=');
                long long v = lx.integer();
                if (v < 1) lx.fail("base parameters must be positive");
                if (key == "trunc") spec.trunc = static_cast<int>(v);
                else if (key == "weight_max") spec.weight_max = static_cast<int>(v);
                else if (key == "cech_depth") spec.cech_depth = static_cast<int>(v);
                else if (key == "simp_level") spec.simp_level = static_cast<int>(v);
                else lx.fail("unknown base parameter " + key);
                lx.eat(',');
            }
            lx.expect('}');
        } else if (head == "ring") {
            SessionSpec::RingDecl r;
            r.line = at_line;
            r.name = lx.ident();
            if (spec.find_ring(r.name)) lx.fail("ring " + r.name + " redeclared");
            lx.expect('{');
            std::string key = lx.ident();
            if (key != "vars") lx.fail("expected vars");
            lx.expect('=');
            lx.expect('[');
            while (!lx.peek(']')) {
                std::string v = lx.ident();
                lx.expect(':');
                long long w = lx.integer();
                if (w < 1) lx.fail("variable weight must be >= 1");
                if (v == "t") lx.fail("t is implicit");
                r.vars.emplace_back(v, static_cast<int>(w));
                lx.eat(',');
            }
            lx.expect(']');
            lx.expect('}');
            r.table = VariableTable::geometric(r.vars);
            spec.rings.push_back(std::move(r));
        } else if (head == "ideal") {
            SessionSpec::IdealDecl d;
            d.line = at_line;
            d.name = lx.ident();
            if (spec.find_ideal(d.name)) lx.fail("ideal " + d.name + " redeclared");
            std::string in_kw = lx.ident();
            if (in_kw != "in") lx.fail("expected 'in'");
            d.ring = lx.ident();
            const auto* ring = spec.find_ring(d.ring);
            if (!ring) lx.fail("undeclared ring " + d.ring);
            lx.expect('{');
            std::string key = lx.ident();
            if (key != "gens") lx.fail("expected gens");
            lx.expect('=');
            lx.expect('[');
            while (!lx.peek(']')) {
                auto [expr, at] = lx.quoted();
                d.gen_text.push_back(expr);
                d.gens.push_back(parse_polynomial(ring->table, expr, at.first, at.second));
                lx.eat(',');
            }
            lx.expect(']');
            lx.expect('}');
            spec.ideals.push_back(std::move(d));
        } else if (head == "crystal") {
            SessionSpec::CrystalDecl c;
            c.line = at_line;
            c.name = lx.ident();
            if (spec.find_crystal(c.name)) lx.fail("crystal " + c.name + " redeclared");
            std::string over = lx.ident();
            if (over != "over") lx.fail("expected 'over'");
            lx.expect('(');
            c.ring = lx.ident();
            lx.expect(',');
            c.ideal = lx.ident();
            lx.expect(')');
            const auto* ring = spec.find_ring(c.ring);
            if (!ring) lx.fail("undeclared ring " + c.ring);
            if (!spec.find_ideal(c.ideal)) lx.fail("undeclared ideal " + c.ideal);
            lx.expect('{');
            while (!lx.peek('}')) {
                std::string key = lx.ident();
                lx.expect('=');
                if (key == "rank") {
                    c.rank = static_cast<int>(lx.integer());
                    if (c.rank < 1) lx.fail("rank must be >= 1");
                } else if (key == "weights") {
                    lx.expect('[');
                    while (!lx.peek(']')) {
                        c.weights.push_back(static_cast<int>(lx.integer()));
                        lx.eat(',');
                    }
                    lx.expect(']');
                } else if (key.rfind("nabla_", 0) == 0) {
                    std::string var = key.substr(6);
                    if (!ring->table->contains(var))
                        lx.fail("nabla for unknown variable " + var);
                    std::vector<std::vector<std::string>> rows;
                    lx.expect('[');
                    while (!lx.peek(']')) {
                        lx.expect('[');
                        std::vector<std::string> row;
                        while (!lx.peek(']')) {
                            row.push_back(lx.quoted().first);
                            lx.eat(',');
                        }
                        lx.expect(']');
                        rows.push_back(std::move(row));
                        lx.eat(',');
                    }
                    lx.expect(']');
                    c.nabla_text.emplace_back(var, std::move(rows));
                } else {
                    lx.fail("unknown crystal key " + key);
                }
                lx.eat(',');
            }
            lx.expect('}');
            if (c.weights.empty()) c.weights.assign(static_cast<std::size_t>(c.rank), 0);
            if (static_cast<int>(c.weights.size()) != c.rank)
                lx.fail("crystal weights length must equal rank");
            spec.crystals.push_back(std::move(c));
        } else if (head == "task") {
            SessionSpec::TaskDecl t;
            t.line = at_line;
            t.kind = lx.ident();
            bool known = false;
            for (auto& k : kinds) known = known || k == t.kind;
            if (!known) lx.fail("unknown task kind " + t.kind);
            lx.expect('{');
            while (!lx.peek('}')) {
                std::string key = lx.ident();
                lx.expect('=');
                t.args[key] = lx.bare_value();
                lx.eat(',');
            }
            lx.expect('}');
            // resolution: name-typed arguments must refer to declared objects
            for (auto& [k, v] : t.args) {
                if ((k == "ring" || k == "ring2") && !spec.find_ring(v))
                    lx.fail("task references undeclared ring " + v);
                if ((k == "ideal" || k == "ideal2" || k == "pair") && v != "none" &&
                    !spec.find_ideal(v))
                    lx.fail("task references undeclared ideal " + v);
                if (k == "crystal" && !spec.find_crystal(v))
                    lx.fail("task references undeclared crystal " + v);
            }
            spec.tasks.push_back(std::move(t));
        } else {
            lx.fail("unknown block " + head);
        }
    }
    return spec;
}

std::string render_spec(const SessionSpec& s) {
    std::string out;
    out += "base { trunc = " + std::to_string(s.trunc) +
           ", weight_max = " + std::to_string(s.weight_max) +
           ", cech_depth = " + std::to_string(s.cech_depth) +
           ", simp_level = " + std::to_string(s.simp_level) + " }\n";
    for (auto& r : s.rings) {
        out += "ring " + r.name + " { vars = [";
        for (std::size_t i = 0; i < r.vars.size(); ++i)
            out += (i ? ", " : "") + r.vars[i].first + ":" + std::to_string(r.vars[i].second);
        out += "] }\n";
    }
    for (auto& d : s.ideals) {
        out += "ideal " + d.name + " in " + d.ring + " { gens = [";
        for (std::size_t i = 0; i < d.gen_text.size(); ++i)
            out += (i ? ", " : "") + ("\"" + d.gen_text[i] + "\"");
        out += "] }\n";
    }
    for (auto& c : s.crystals) {
        out += "crystal " + c.name + " over (" + c.ring + ", " + c.ideal + ") { rank = " +
               std::to_string(c.rank);
        out += ", weights = [";
        for (std::size_t i = 0; i < c.weights.size(); ++i)
            out += (i ? ", " : "") + std::to_string(c.weights[i]);
        out += "]";
        for (auto& [var, rows] : c.nabla_text) {
            out += ", nabla_" + var + " = [";
            for (std::size_t r = 0; r < rows.size(); ++r) {
                out += (r ? ", [" : "[");
                for (std::size_t k = 0; k < rows[r].size(); ++k)
                    out += (k ? ", " : "") + ("\"" + rows[r][k] + "\"");
                out += "]";
            }
            out += "]";
        }
        out += " }\n";
    }
    for (auto& t : s.tasks) {
        out += "task " + t.kind + " {";
        bool first = true;
        for (auto& [k, v] : t.args) {
            bool quoted = false;
            for (char ch : v)
                if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-'))
                    quoted = true;
            out += (first ? " " : ", ") + k + " = " + (quoted ? "\"" + v + "\"" : v);
            first = false;
        }
        out += " }\n";
    }
    return out;
}

bool specs_equal(const SessionSpec& a, const SessionSpec& b) {
    return render_spec(a) == render_spec(b);
}

}  // namespace prismlab
