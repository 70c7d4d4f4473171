#include <doctest.h>

#include <random>

#include "prismlab/poly_parse.hpp"
#include "prismlab/polynomial.hpp"

using namespace prismlab;

namespace {

VarTablePtr xy_table() { return VariableTable::geometric({{"x", 1}, {"y", 1}}); }

Polynomial parse(const VarTablePtr& t, const std::string& s) { return parse_polynomial(t, s); }

Polynomial random_poly(const VarTablePtr& table, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3), coef(-6, 6), den(1, 4);
    Polynomial p(table);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Exponents e(table->size(), 0);
        for (auto& x : e) x = expo(rng);
        p += Polynomial::monomial(table, e, Rational(coef(rng), den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    Rational b(-3, -6);
    CHECK(b == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("polynomial arithmetic drops zero terms") {
    auto T = xy_table();
    CHECK(parse(T, "x+y") + parse(T, "x-y") == parse(T, "2*x"));
    CHECK(parse(T, "t*x") * parse(T, "t*x") == parse(T, "t^2*x^2"));
    CHECK(parse(T, "1/2*x") * parse(T, "2/3*y") == parse(T, "1/3*x*y"));
    CHECK((parse(T, "x") - parse(T, "x")).is_zero());
}

TEST_CASE("substitute") {
    auto T = VariableTable::geometric({{"x", 1}, {"d", 1}});
    Polynomial x2 = parse(T, "x^2");
    std::map<std::size_t, Polynomial> shift{{T->index_of("x"), parse(T, "x + t*d")}};
    CHECK(x2.substitute(shift) == parse(T, "x^2 + 2*t*x*d + t^2*d^2"));
    CHECK(x2.substitute({}) == x2);
    auto Txy = xy_table();
    std::map<std::size_t, Polynomial> kill{{Txy->index_of("x"), Polynomial::zero(Txy)}};
    CHECK(parse(Txy, "x*y + y").substitute(kill) == parse(Txy, "y"));
}

TEST_CASE("truncate_t") {
    auto T = xy_table();
    CHECK(parse(T, "t^2*x + t*x + 1").truncate_t(2) == parse(T, "t*x + 1"));
    CHECK(parse(T, "t*x*y + y^2").truncate_t(1) == parse(T, "y^2"));
    Polynomial tfree = parse(T, "x^3 - y");
    CHECK(tfree.truncate_t(1) == tfree);
    // compatibility with products
    std::mt19937_64 rng(7);
    for (int i = 0; i < 32; ++i) {
        Polynomial a = random_poly(T, rng), b = random_poly(T, rng);
        for (int e = 1; e <= 3; ++e)
            CHECK((a * b).truncate_t(e) ==
                  (a.truncate_t(e) * b.truncate_t(e)).truncate_t(e));
    }
}

TEST_CASE("weight components") {
    auto T = xy_table();
    auto comps = parse(T, "x^2 + t*x*y + y").weight_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps.at(2) == parse(T, "x^2 + t*x*y"));
    CHECK(comps.at(1) == parse(T, "y"));
    auto c0 = parse(T, "5/3").weight_components();
    CHECK(c0.size() == 1);
    CHECK(c0.count(0) == 1);
    CHECK(Polynomial::zero(T).weight_components().empty());
    CHECK(parse(T, "x^2+t*x^2").homogeneous_weight() == 2);
    CHECK_FALSE(parse(T, "x^2+y").homogeneous_weight().has_value());

    // component_w(ab) = sum component_u(a) component_v(b)
    std::mt19937_64 rng(11);
    for (int i = 0; i < 24; ++i) {
        Polynomial a = random_poly(T, rng), b = random_poly(T, rng);
        auto ca = a.weight_components(), cb = b.weight_components(),
             cab = (a * b).weight_components();
        for (auto& [w, part] : cab) {
            Polynomial sum(T);
            for (auto& [u, pa] : ca)
                for (auto& [v, pb] : cb)
                    if (u + v == w) sum += pa * pb;
            CHECK(part == sum);
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    auto T = xy_table();
    std::mt19937_64 rng(23);
    for (int i = 0; i < 24; ++i) {
        Polynomial a = random_poly(T, rng), b = random_poly(T, rng), c = random_poly(T, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("canonical rendering") {
    auto T = xy_table();
    CHECK(parse(T, "y + x^2 + 3/2*t*x").str() == "x^2 + 3/2*t*x + y");
    CHECK(parse(T, "y - x").str() == "-x + y");
    CHECK(Polynomial::zero(T).str() == "0");
    CHECK(parse(T, "7/2").str() == "7/2");
    // graded-lex: higher total degree first, t least significant
    CHECK(parse(T, "t^3 + x^2").str() == "t^3 + x^2");
}

TEST_CASE("derivative and t helpers") {
    auto T = xy_table();
    CHECK(parse(T, "x^3*y").derivative(T->index_of("x")) == parse(T, "3*x^2*y"));
    CHECK(parse(T, "t^2*x").t_degree() == 2);
    CHECK(parse(T, "t^2*x + t*y").t_valuation() == 1);
    CHECK(parse(T, "t^2*x").divide_by_t(2) == parse(T, "x"));
    CHECK_THROWS(parse(T, "t*x + y").divide_by_t(1));
}

TEST_CASE("parse errors carry positions") {
    auto T = xy_table();
    CHECK_THROWS_AS(parse(T, "x*y-"), ParseError);
    CHECK_THROWS_AS(parse(T, "x*z"), ParseError);
    try {
        parse(T, "x +\n* y");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 1);
    }
}

TEST_CASE("variable table invariants") {
    CHECK_THROWS(VariableTable({{"x", VarRole::geometric, 1}}));
    CHECK_THROWS(VariableTable(
        {{"t", VarRole::deformation, 0}, {"x", VarRole::geometric, 0}}));
    CHECK_THROWS(VariableTable(
        {{"t", VarRole::deformation, 0}, {"x", VarRole::geometric, 1},
         {"x", VarRole::geometric, 2}}));
}
