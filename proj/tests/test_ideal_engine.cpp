#include <doctest.h>

#include <random>

#include "prismlab/ideal_ops.hpp"
#include "prismlab/poly_parse.hpp"

using namespace prismlab;

namespace {

VarTablePtr xy() { return VariableTable::geometric({{"x", 1}, {"y", 1}}); }

bool basis_contains(const std::vector<Polynomial>& basis, const Polynomial& p) {
    for (auto& b : basis)
        if (b == p) return true;
    return false;
}

}  // namespace

TEST_CASE("buchberger on the classic pair") {
    auto T = xy();
    Ideal I(T, {parse_polynomial(T, "x^2 - y"), parse_polynomial(T, "x*y - 1")});
    const auto& gb = I.basis().polys;
    REQUIRE(gb.size() == 3);
    CHECK(basis_contains(gb, parse_polynomial(T, "x^2 - y")));
    CHECK(basis_contains(gb, parse_polynomial(T, "x*y - 1")));
    CHECK(basis_contains(gb, parse_polynomial(T, "y^2 - x")));
    // determinism
    Ideal J(T, {parse_polynomial(T, "x*y - 1"), parse_polynomial(T, "x^2 - y")});
    CHECK(J.basis().polys == gb);
}

TEST_CASE("principal ideal normalizes, duplicates deduplicate") {
    auto T = xy();
    Ideal I(T, {parse_polynomial(T, "2*x^2 - 2*y")});
    REQUIRE(I.basis().polys.size() == 1);
    CHECK(I.basis().polys[0] == parse_polynomial(T, "x^2 - y"));
    Ideal J(T, {parse_polynomial(T, "x"), parse_polynomial(T, "x")});
    CHECK(J.basis().polys == std::vector<Polynomial>{parse_polynomial(T, "x")});
}

TEST_CASE("normal form and membership") {
    auto T = xy();
    Ideal I(T, {parse_polynomial(T, "x^2 - y"), parse_polynomial(T, "x*y - 1")});
    CHECK(I.normal_form(parse_polynomial(T, "x^2")) == parse_polynomial(T, "y"));
    CHECK(I.contains(Polynomial::zero(T)));
    CHECK(I.contains(parse_polynomial(T, "y^2 - x")));
    // idempotence and agreement on random combinations of generators
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(0, 1), c(-3, 3), e(0, 2);
    for (int i = 0; i < 100; ++i) {
        Polynomial p(T);
        for (auto& g : I.generators()) {
            Exponents m(T->size(), 0);
            m[1] = e(rng);
            m[2] = e(rng);
            p += g * Polynomial::monomial(T, m, Rational(c(rng)));
        }
        CHECK(I.contains(p));
        Polynomial nf = I.normal_form(p);
        CHECK(I.normal_form(nf) == nf);
    }
}

TEST_CASE("colon ideals") {
    auto T = xy();
    Ideal I(T, {parse_polynomial(T, "x*y")});
    Ideal c1 = colon_ideal(I, parse_polynomial(T, "x"));
    CHECK(ideals_equal(c1, Ideal(T, {parse_polynomial(T, "y")})));
    Ideal c2 = colon_ideal(I, parse_polynomial(T, "1"));
    CHECK(ideals_equal(c2, I));
    Ideal sq(T, {parse_polynomial(T, "x^2")});
    CHECK(ideals_equal(colon_ideal(sq, parse_polynomial(T, "x")),
                       Ideal(T, {parse_polynomial(T, "x")})));
}

TEST_CASE("saturation by t") {
    auto T4 = VariableTable::geometric({{"T", 1}, {"S", 1}, {"x", 1}});
    Ideal J(T4, {parse_polynomial(T4, "t*x - S")});
    Ideal sat = saturate_t(J);
    CHECK(ideals_equal(sat, J));  // already saturated: the quotient is a domain
    // idempotence
    CHECK(ideals_equal(saturate_t(sat), sat));

    auto T = xy();
    CHECK(ideals_equal(saturate_t(Ideal(T, {parse_polynomial(T, "t*x")})),
                       Ideal(T, {parse_polynomial(T, "x")})));
    Ideal just_t(T, {parse_polynomial(T, "t")});
    CHECK(saturate_t(just_t).is_unit_ideal());

    // saturate(J) contains J, and t*g in J forces g into the saturation
    std::mt19937_64 rng(13);
    Ideal K(T, {parse_polynomial(T, "t*x - y^2")});
    Ideal satK = saturate_t(K);
    for (auto& g : K.generators()) CHECK(satK.contains(g));
    Ideal quot = colon_ideal(K, Polynomial::variable(T, std::size_t{0}));
    for (auto& g : quot.generators()) CHECK(satK.contains(g));
}

TEST_CASE("regular sequence certification") {
    auto T = xy();
    std::vector<Polynomial> seq = {Polynomial::variable(T, std::size_t{0}),
                                   parse_polynomial(T, "x"), parse_polynomial(T, "y")};
    CHECK(is_regular_sequence(T, seq).certified);
    std::vector<Polynomial> bad = {parse_polynomial(T, "x"), parse_polynomial(T, "x")};
    auto r = is_regular_sequence(T, bad);
    CHECK_FALSE(r.certified);
    CHECK(r.failed_index == 1);
    std::vector<Polynomial> txy = {Polynomial::variable(T, std::size_t{0}),
                                   parse_polynomial(T, "x*y")};
    CHECK(is_regular_sequence(T, txy).certified);

    auto cert = certify_regularity(T, {parse_polynomial(T, "x*y")});
    CHECK(cert.certified);
}

TEST_CASE("elimination") {
    auto T = VariableTable::geometric({{"x", 1}, {"z", 1}});
    Ideal I(T, {parse_polynomial(T, "t*z - 1"), parse_polynomial(T, "x - t*z")});
    Ideal el = eliminate(I, {T->index_of("z")});
    Ideal expect(T, {parse_polynomial(T, "x - 1")});
    CHECK(ideals_equal(el, expect));
    for (auto& g : el.generators()) CHECK(g.degree_in(T->index_of("z")) == 0);

    Ideal gb = eliminate(I, {});
    CHECK(gb.generators() == I.basis().polys);

    Ideal z(T, {parse_polynomial(T, "z")});
    CHECK(eliminate(z, {T->index_of("z")}).is_zero_ideal());
}

TEST_CASE("kernel of a ring map") {
    auto src = VariableTable::geometric({{"X", 1}, {"Y", 1}});
    auto dst = VariableTable::geometric({{"T", 1}});
    Ideal none = Ideal::zero(dst);
    Ideal ker = kernel_of_map(src,
                              {{"X", Polynomial::variable(dst, "T")},
                               {"Y", Polynomial::variable(dst, "T")}},
                              none);
    CHECK(ideals_equal(ker, Ideal(src, {parse_polynomial(src, "X - Y")})));
}

TEST_CASE("express in generators") {
    auto T = VariableTable::geometric({{"T", 1}, {"S", 1}});
    Polynomial S = parse_polynomial(T, "S");
    Polynomial extra = parse_polynomial(T, "T*S");
    auto coeffs = express_in_generators(extra, {S});
    REQUIRE(coeffs.has_value());
    CHECK((*coeffs)[0] * S == extra);
}

TEST_CASE("pair budget signals oversized instances") {
    auto T = xy();
    Ideal I(T, {parse_polynomial(T, "x^2 - y"), parse_polynomial(T, "x*y - 1")});
    BuchbergerOptions tiny;
    tiny.pair_budget = 0;
    CHECK_THROWS_AS(I.basis(MonomialOrder::grevlex(), tiny), BudgetExceeded);
}
