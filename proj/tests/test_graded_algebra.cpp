#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sdual/multivector.hpp"
#include "sdual/random_gen.hpp"

using namespace sdual;

namespace {

struct C5 {
    BackgroundDescriptor bg = BackgroundDescriptor::parse("C[u,v] x C[z] x C[w1,w2]");
    Registry reg = bg.build_registry({"eM", "eps", "e1", "e2"});
    uint32_t ev(const std::string& n) const { return *reg.find_even(n); }
    uint32_t od(const std::string& n) const { return *reg.find_odd(n); }
    Multivector var(const std::string& n) const { return Multivector::variable(reg, ev(n)); }
    Multivector gen(const std::string& n) const { return Multivector::generator(reg, od(n)); }
};

} // namespace

TEST_CASE("scalar field axioms on random triples") {
    RandomGen rnd(7);
    for (int t = 0; t < 200; ++t) {
        Scalar a = rnd.scalar(), b = rnd.scalar(), c = rnd.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
}

TEST_CASE("normalize: Koszul sign discipline") {
    C5 f;
    Multivector m(f.reg);
    m.add_term({f.od("Dv"), f.od("Du")}, RationalFunction(Scalar(1)));
    Multivector expect(f.reg);
    expect.add_term({f.od("Du"), f.od("Dv")}, RationalFunction(Scalar(-1)));
    CHECK(m == expect);

    Multivector sq(f.reg);
    sq.add_term({f.od("Du"), f.od("Du")}, RationalFunction(Scalar(1)));
    CHECK(sq.is_zero());

    Multivector cancel(f.reg);
    cancel.add_term({f.od("e2"), f.od("e1")}, RationalFunction(Scalar(1)));
    cancel.add_term({f.od("e1"), f.od("e2")}, RationalFunction(Scalar(1)));
    CHECK(cancel.is_zero());
}

TEST_CASE("normalize is idempotent") {
    C5 f;
    RandomGen rnd(11);
    std::vector<uint32_t> odds = {f.od("Du"), f.od("Dv"), f.od("dbw1"), f.od("e1")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("w1")};
    for (int t = 0; t < 50; ++t) {
        Multivector m = rnd.multivector(f.reg, odds, vars, 3, 4);
        Multivector again(f.reg);
        for (const auto& [ids, c] : m.terms) again.add_term(ids, c);
        CHECK(m == again);
    }
}

TEST_CASE("multiply: examples") {
    C5 f;
    Multivector a = f.var("u") * f.gen("Du");
    Multivector b = f.var("v") * f.gen("Dv");
    Multivector expect = f.var("u") * f.var("v") * f.gen("Du") * f.gen("Dv");
    CHECK(a * b == expect);
    CHECK((f.gen("Du") * f.gen("Du")).is_zero());
    Multivector bivec = f.gen("Du") * f.gen("Dv");
    CHECK(bivec * f.var("w1") == f.var("w1") * bivec);
}

TEST_CASE("multiply: associativity and graded commutativity") {
    C5 f;
    RandomGen rnd(13);
    std::vector<uint32_t> odds = {f.od("Du"), f.od("Dv"), f.od("Dz"), f.od("dbw1"), f.od("e1")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("w1"), f.ev("w1~")};
    for (int t = 0; t < 60; ++t) {
        Multivector a = rnd.multivector(f.reg, odds, vars, 4, 5);
        Multivector b = rnd.multivector(f.reg, odds, vars, 4, 5);
        Multivector c = rnd.multivector(f.reg, odds, vars, 4, 5);
        CHECK((a * b) * c == a * (b * c));
    }
    for (int t = 0; t < 60; ++t) {
        uint32_t da = uint32_t(rnd.integer(0, 3)), db = uint32_t(rnd.integer(0, 3));
        Multivector a = rnd.homogeneous(f.reg, odds, vars, da, 3, 3);
        Multivector b = rnd.homogeneous(f.reg, odds, vars, db, 3, 3);
        Multivector ab = a * b, ba = b * a;
        if (da * db % 2 == 1) CHECK(ab == -ba);
        else CHECK(ab == ba);
    }
}

TEST_CASE("odd_derivation: examples and square zero") {
    C5 f;
    Multivector uv = f.gen("Du") * f.gen("Dv");
    CHECK(uv.odd_derivation(f.od("Du")) == f.gen("Dv"));
    CHECK(uv.odd_derivation(f.od("Dv")) == -f.gen("Du"));
    CHECK((f.var("w1") * f.gen("Dv")).odd_derivation(f.od("Du")).is_zero());

    RandomGen rnd(17);
    std::vector<uint32_t> odds = {f.od("Du"), f.od("Dv"), f.od("Dz"), f.od("e1"), f.od("dbv")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("z")};
    for (int t = 0; t < 40; ++t) {
        Multivector m = rnd.multivector(f.reg, odds, vars, 3, 4);
        for (uint32_t g : odds) CHECK(m.odd_derivation(g).odd_derivation(g).is_zero());
    }
}

TEST_CASE("odd_derivation is a graded left derivation") {
    C5 f;
    RandomGen rnd(19);
    std::vector<uint32_t> odds = {f.od("Du"), f.od("Dv"), f.od("Dz"), f.od("e1")};
    std::vector<uint32_t> vars = {f.ev("u")};
    for (int t = 0; t < 40; ++t) {
        uint32_t da = uint32_t(rnd.integer(0, 3));
        Multivector a = rnd.homogeneous(f.reg, odds, vars, da, 2, 3);
        Multivector b = rnd.multivector(f.reg, odds, vars, 2, 3);
        for (uint32_t g : odds) {
            Multivector lhs = (a * b).odd_derivation(g);
            Multivector rhs = a.odd_derivation(g) * b;
            Multivector second = a * b.odd_derivation(g);
            if (da % 2 == 1) rhs.add(-second);
            else rhs.add(second);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("even_derivative: Wirtinger and quotient rule") {
    C5 f;
    Multivector w1w2 = f.var("w1") * f.var("w2");
    CHECK(w1w2.even_derivative(f.ev("w1")) == f.var("w2"));
    CHECK(f.var("w2~").even_derivative(f.ev("z")).is_zero());

    // d/dv~ ( v~ / (v v~ + w1 w1~) ) = w1 w1~ / (v v~ + w1 w1~)^2
    Polynomial vb = Polynomial::variable(f.ev("v~"));
    Polynomial denom = Polynomial::variable(f.ev("v")) * vb +
                       Polynomial::variable(f.ev("w1")) * Polynomial::variable(f.ev("w1~"));
    Multivector m = Multivector::coefficient(f.reg, RationalFunction(vb, denom));
    Polynomial wnum = Polynomial::variable(f.ev("w1")) * Polynomial::variable(f.ev("w1~"));
    Multivector expect =
        Multivector::coefficient(f.reg, RationalFunction(wnum, denom * denom));
    CHECK(m.even_derivative(f.ev("v~")) == expect);
}

TEST_CASE("even and odd derivatives commute") {
    C5 f;
    RandomGen rnd(23);
    std::vector<uint32_t> odds = {f.od("Du"), f.od("Dv"), f.od("dbz")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("z"), f.ev("z~")};
    for (int t = 0; t < 40; ++t) {
        Multivector m = rnd.multivector(f.reg, odds, vars, 3, 4);
        for (uint32_t g : odds)
            for (uint32_t v : vars)
                CHECK(m.odd_derivation(g).even_derivative(v) ==
                      m.even_derivative(v).odd_derivation(g));
    }
}
