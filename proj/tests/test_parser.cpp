#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sdual/duality.hpp"
#include "sdual/parser.hpp"
#include "sdual/random_gen.hpp"

using namespace sdual;

namespace {

struct Fixture {
    DualityContext ctx = DualityContext::standard();

    uint32_t ev(const std::string& n) const { return *ctx.reg.find_even(n); }
    uint32_t od(const std::string& n) const { return *ctx.reg.find_odd(n); }
    Multivector var(const std::string& n) const { return Multivector::variable(ctx.reg, ev(n)); }
    Multivector gen(const std::string& n) const { return Multivector::generator(ctx.reg, od(n)); }
    Multivector parse(const std::string& t) const { return parse_multivector(t, ctx.reg); }
};

} // namespace

TEST_CASE("parser: literals, names, precedence") {
    Fixture f;
    CHECK(f.parse("0").is_zero());
    CHECK(f.parse("42") == Multivector::scalar(f.ctx.reg, Scalar(42)));
    CHECK(f.parse("-7/2") == Multivector::scalar(f.ctx.reg, Scalar(mpq_class(-7, 2))));
    CHECK(f.parse("i") == Multivector::scalar(f.ctx.reg, Scalar::i()));
    CHECK(f.parse("1+2*i") == Multivector::scalar(f.ctx.reg, Scalar(mpq_class(1), mpq_class(2))));
    CHECK(f.parse("w1") == f.var("w1"));
    CHECK(f.parse("w1~") == f.var("w1~"));
    CHECK(f.parse("eM") == f.gen("eM"));
    CHECK(f.parse("dbw2") == f.gen("dbw2"));

    // Wedge is a product synonym; odd ordering accrues the Koszul sign.
    CHECK(f.parse("w1*Dw1^Dw2") == f.var("w1") * f.gen("Dw1") * f.gen("Dw2"));
    CHECK(f.parse("Dw2^Dw1") == -(f.gen("Dw1") * f.gen("Dw2")));
    CHECK(f.parse("Dw1^Dw1").is_zero());

    // Power binds tighter than product and sum.
    CHECK(f.parse("z^3") == f.var("z") * f.var("z") * f.var("z"));
    CHECK(f.parse("2*z^2 + w1") == f.parse("z*z + z*z + w1"));
    CHECK(f.parse("z^2^Dz") == f.var("z") * f.var("z") * f.gen("Dz"));
    CHECK(f.parse("(w1+w2)^2") == f.parse("w1^2 + 2*w1*w2 + w2^2"));

    // Juxtaposition, whitespace, unary minus.
    CHECK(f.parse("2 w1 Dz") == f.parse("2*w1*Dz"));
    CHECK(f.parse("-w1 - -w2") == f.parse("w2 - w1"));
    CHECK(f.parse(" w1 + w2 ") == f.var("w1") + f.var("w2"));
}

TEST_CASE("parser: fractions") {
    Fixture f;
    // The transverse-kernel coefficient, in a background that declares v.
    Registry reg5 = BackgroundDescriptor::parse("C[u,v] x C[z,w1,w2]").build_registry();
    auto v5 = [&](const std::string& n) { return Polynomial::variable(*reg5.find_even(n)); };
    Multivector direct = Multivector::coefficient(
        reg5, RationalFunction(v5("v~"), v5("v") * v5("v~") + v5("w1") * v5("w1~")));
    CHECK(parse_multivector("v~/(v*v~ + w1*w1~)", reg5) == direct);
    CHECK(f.parse("(w1 + w2)/2") == f.parse("w1/2 + w2/2"));
    CHECK(f.parse("1/w1 * w1") == f.parse("1"));
    CHECK(f.parse("(w1*Dz)/(3*w2)") == f.gen("Dz") * RationalFunction(
                                           Polynomial::variable(f.ev("w1")),
                                           Polynomial::variable(f.ev("w2")) * Scalar(3)));
}

TEST_CASE("parser: position-tagged errors") {
    Fixture f;
    CHECK_THROWS_AS(f.parse("w3"), ParseError);
    CHECK_THROWS_AS(f.parse("(w1"), ParseError);
    CHECK_THROWS_AS(f.parse("w1 )"), ParseError);
    CHECK_THROWS_AS(f.parse("w1/(Dz)"), ParseError);
    CHECK_THROWS_AS(f.parse("w1/0"), ParseError);
    CHECK_THROWS_AS(f.parse(""), ParseError);
    CHECK_THROWS_AS(f.parse("z^999"), ParseError);

    bool caught = false;
    try {
        f.parse("w1 + bogus");
    } catch (const ParseError& e) {
        caught = true;
        CHECK(e.pos == 5);
        CHECK(std::string(e.what()).find("bogus") != std::string::npos);
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }
    CHECK(caught);
}

TEST_CASE("parser: print round-trip on random multivectors") {
    Fixture f;
    std::vector<uint32_t> odds;
    for (const auto& g : f.ctx.reg.odds) odds.push_back(g.id);
    std::vector<uint32_t> vars = {f.ev("z"),   f.ev("z~"),  f.ev("w1"), f.ev("w1~"),
                                  f.ev("w2"),  f.ev("w2~"), f.ev("x1"), f.ev("x3")};
    RandomGen rnd(2024);
    for (int t = 0; t < 500; ++t) {
        Multivector m = rnd.multivector(f.ctx.reg, odds, vars, 5, 6);
        CHECK(f.parse(m.str()) == m);
    }
    // Rational-function coefficients survive the round trip too.
    Multivector q = f.parse("(w1^2 - i*w2)/(w1*w1~ + 3) * Dz^Dw1 + z~/(z*z~) * dbw1");
    CHECK(f.parse(q.str()) == q);
}
