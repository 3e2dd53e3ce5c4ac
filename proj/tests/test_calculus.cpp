#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sdual/calculus.hpp"
#include "sdual/random_gen.hpp"

using namespace sdual;

namespace {

struct Fixture {
    BackgroundDescriptor bg = BackgroundDescriptor::parse("C[u,v] x C[z,w1,w2]");
    Registry reg = bg.build_registry({"e1", "e2"});
    CalabiYauOrdering cy2{reg, {"u", "v"}};
    CalabiYauOrdering cy3{reg, {"z", "w1", "w2"}};
    CalabiYauOrdering cyw{reg, {"w1", "w2"}};

    uint32_t ev(const std::string& n) const { return *reg.find_even(n); }
    uint32_t od(const std::string& n) const { return *reg.find_odd(n); }
    Multivector var(const std::string& n) const { return Multivector::variable(reg, ev(n)); }
    Multivector gen(const std::string& n) const { return Multivector::generator(reg, od(n)); }
    Multivector one() const { return Multivector::scalar(reg, Scalar(1)); }
    Multivector pi_uv() const { return gen("Du") * gen("Dv"); }
};

} // namespace

TEST_CASE("dolbeault: examples and square zero") {
    Fixture f;
    CHECK(dolbeault(f.var("z") * f.var("z~")) == f.var("z") * f.gen("dbz"));
    CHECK(dolbeault(f.var("w1") * f.gen("Dw1")).is_zero());

    // dbar( v~/(v v~) ) = 0 away from v = 0.
    Polynomial vb = Polynomial::variable(f.ev("v~"));
    Polynomial vvb = Polynomial::variable(f.ev("v")) * vb;
    CHECK(dolbeault(Multivector::coefficient(f.reg, RationalFunction(vb, vvb))).is_zero());

    RandomGen rnd(31);
    std::vector<uint32_t> odds = {f.od("Du"), f.od("Dv"), f.od("dbu"), f.od("dbz")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("u~"), f.ev("z~")};
    for (int t = 0; t < 40; ++t) {
        Multivector m = rnd.multivector(f.reg, odds, vars, 3, 4);
        CHECK(dolbeault(dolbeault(m)).is_zero());
    }
}

TEST_CASE("divergence: examples, square zero, foreign-leg error") {
    Fixture f;
    CHECK(divergence(f.var("u") * f.gen("Du"), f.cy2) == f.one());
    CHECK(divergence(f.pi_uv(), f.cy2).is_zero());
    CHECK(divergence(f.var("w1") * f.gen("Dw1") * f.gen("Dw2"), f.cyw) == f.gen("Dw2"));
    // Top-degree decomposition seed: div(F th1 th2) = F_w1 th2 - F_w2 th1.
    RandomGen rnd(37);
    std::vector<uint32_t> wvars = {f.ev("w1"), f.ev("w2")};
    for (int t = 0; t < 30; ++t) {
        RationalFunction F(rnd.polynomial(wvars, 4, 3));
        Multivector top = Multivector::coefficient(f.reg, F) * f.gen("Dw1") * f.gen("Dw2");
        Multivector expect = Multivector::coefficient(f.reg, F.derivative(f.ev("w1"))) * f.gen("Dw2") -
                             Multivector::coefficient(f.reg, F.derivative(f.ev("w2"))) * f.gen("Dw1");
        CHECK(divergence(top, f.cyw) == expect);
    }
    // div(w1 Dz^Dw1^Dw2) over (z,w1,w2).
    Multivector tri = f.var("w1") * f.gen("Dz") * f.gen("Dw1") * f.gen("Dw2");
    CHECK(divergence(tri, f.cy3) == -(f.gen("Dz") * f.gen("Dw2")));

    std::vector<uint32_t> odds = {f.od("Du"), f.od("Dv"), f.od("dbu")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("v"), f.ev("u~")};
    for (int t = 0; t < 40; ++t) {
        Multivector m = rnd.multivector(f.reg, odds, vars, 4, 4);
        CHECK(divergence(divergence(m, f.cy2), f.cy2).is_zero());
        CHECK(divergence(dolbeault(m), f.cy2) + dolbeault(divergence(m, f.cy2)) ==
              Multivector::zero(f.reg));
    }
    CHECK_THROWS_AS(divergence(f.gen("Dz"), f.cy2), error);
}

TEST_CASE("del_holomorphic squares to zero and anticommutes with dolbeault") {
    Fixture f;
    RandomGen rnd(41);
    std::vector<uint32_t> odds = {f.od("du"), f.od("dv"), f.od("dbu")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("v"), f.ev("v~")};
    for (int t = 0; t < 40; ++t) {
        Multivector m = rnd.multivector(f.reg, odds, vars, 3, 4);
        CHECK(del_holomorphic(del_holomorphic(m, f.cy2), f.cy2).is_zero());
        CHECK(del_holomorphic(dolbeault(m), f.cy2) + dolbeault(del_holomorphic(m, f.cy2)) ==
              Multivector::zero(f.reg));
    }
}

TEST_CASE("sn_bracket: defining-formula examples") {
    Fixture f;
    CHECK(sn_bracket(f.pi_uv(), f.var("u"), f.cy2) == f.gen("Dv"));
    CHECK(sn_bracket(f.gen("Du"), f.gen("Dv"), f.cy2).is_zero());
    // On a pair of functions the defining formula collapses to zero; the
    // quadratic Poisson pairing lives in the duality engine instead.
    CHECK(sn_bracket(f.var("w1"), f.var("w2"), f.cyw).is_zero());
    Multivector mixed = f.var("u") + f.gen("Du");
    CHECK_THROWS_AS(sn_bracket(mixed, f.var("u"), f.cy2), error);
}

TEST_CASE("sn_bracket_lie: shifted antisymmetry, Jacobi, Leibniz") {
    Fixture f;
    RandomGen rnd(43);
    std::vector<uint32_t> odds = {f.od("Du"), f.od("Dv")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("v")};
    auto sgn = [](uint32_t k) { return k % 2 == 0 ? 1 : -1; };
    for (int t = 0; t < 60; ++t) {
        uint32_t da = uint32_t(rnd.integer(0, 2)), db = uint32_t(rnd.integer(0, 2)),
                 dc = uint32_t(rnd.integer(0, 2));
        Multivector a = rnd.homogeneous(f.reg, odds, vars, da, 3, 2);
        Multivector b = rnd.homogeneous(f.reg, odds, vars, db, 3, 2);
        Multivector c = rnd.homogeneous(f.reg, odds, vars, dc, 3, 2);

        // [a,b] = -(-1)^{(|a|-1)(|b|-1)} [b,a]
        Multivector ab = sn_bracket_lie(a, b, f.cy2);
        Multivector ba = sn_bracket_lie(b, a, f.cy2);
        int s = -sgn((da + 1) * (db + 1));
        CHECK(ab == (s == 1 ? ba : -ba));

        // [a,[b,c]] = [[a,b],c] + (-1)^{(|a|-1)(|b|-1)} [b,[a,c]]
        Multivector lhs = sn_bracket_lie(a, sn_bracket_lie(b, c, f.cy2), f.cy2);
        Multivector rhs = sn_bracket_lie(ab, c, f.cy2);
        Multivector third = sn_bracket_lie(b, sn_bracket_lie(a, c, f.cy2), f.cy2);
        rhs.add(sgn((da + 1) * (db + 1)) == 1 ? third : -third);
        CHECK(lhs == rhs);

        // [a, b^c] = [a,b]^c + (-1)^{(|a|-1)|b|} b^[a,c]
        Multivector lhs2 = sn_bracket_lie(a, b * c, f.cy2);
        Multivector rhs2 = ab * c;
        Multivector third2 = b * sn_bracket_lie(a, c, f.cy2);
        rhs2.add(sgn((da + 1) * db) == 1 ? third2 : -third2);
        CHECK(lhs2 == rhs2);

        // The raw divergence-generated bracket differs by -(-1)^{|a|}.
        Multivector raw = sn_bracket(a, b, f.cy2);
        CHECK(ab == (da % 2 == 0 ? -raw : raw));
    }
}

TEST_CASE("sn_bracket_lie as operator: [Du^Dv, -] in terms of partials") {
    Fixture f;
    RandomGen rnd(47);
    std::vector<uint32_t> odds = {f.od("Du"), f.od("Dv")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("v")};
    for (int t = 0; t < 60; ++t) {
        uint32_t db = uint32_t(rnd.integer(0, 2));
        Multivector b = rnd.homogeneous(f.reg, odds, vars, db, 3, 3);
        Multivector lhs = sn_bracket_lie(f.pi_uv(), b, f.cy2);
        // Leibniz in the first slot: [Du^Dv, b] = Du^(d_v b) + (-1)^{|b|-1}(d_u b)^Dv.
        Multivector rhs = f.gen("Du") * b.even_derivative(f.ev("v"));
        Multivector second = b.even_derivative(f.ev("u")) * f.gen("Dv");
        rhs.add(db % 2 == 0 ? -second : second);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("contract_with_cy: examples and round trip") {
    Fixture f;
    Multivector top = f.gen("Dw1") * f.gen("Dw2");
    CHECK(contract_with_cy(top, f.cyw) == -f.one());
    CHECK(contract_with_cy(f.one(), f.cyw) == f.cyw.omega());
    CHECK(contract_with_cy(f.one(), f.cy3) == f.cy3.omega());

    RandomGen rnd(53);
    std::vector<uint32_t> odds3 = {f.od("Dz"), f.od("Dw1"), f.od("Dw2"), f.od("dbz"), f.od("dbw1")};
    std::vector<uint32_t> vars3 = {f.ev("z"), f.ev("w1"), f.ev("w2"), f.ev("z~")};
    for (int t = 0; t < 60; ++t) {
        Multivector m = rnd.multivector(f.reg, odds3, vars3, 3, 4);
        CHECK(contract_with_cy_inverse(contract_with_cy(m, f.cy3), f.cy3) == m);
        // linearity over coefficients
        RationalFunction g(rnd.polynomial(vars3, 2, 2));
        CHECK(contract_with_cy(m * g, f.cy3) == contract_with_cy(m, f.cy3) * g);
    }
    // Reversing the coordinate order flips omega's sign (parity of the swap).
    CalabiYauOrdering cyw_rev(f.reg, {"w2", "w1"});
    CHECK(cyw_rev.omega() == -f.cyw.omega());
    CHECK(contract_with_cy(top, cyw_rev) == f.one());
}

TEST_CASE("iota_pi: examples") {
    Fixture f;
    Multivector duv = f.gen("du") * f.gen("dv");
    CHECK(iota_pi(duv, f.pi_uv()) == -f.one());
    CHECK(iota_pi(f.gen("du"), f.pi_uv()).is_zero());
    RandomGen rnd(59);
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("v"), f.ev("u~")};
    for (int t = 0; t < 20; ++t) {
        RationalFunction g(rnd.polynomial(vars, 3, 3));
        CHECK(iota_pi(duv * g, f.pi_uv()) == Multivector::coefficient(f.reg, -g));
    }
    CHECK_THROWS_AS(iota_pi(duv, f.var("u") * f.pi_uv()), error);
}

TEST_CASE("symplectic identification: round trip and commuting squares") {
    Fixture f;
    RandomGen rnd(61);
    std::vector<uint32_t> odds = {f.od("Du"), f.od("Dv"), f.od("dbu")};
    std::vector<uint32_t> legs = {f.od("du"), f.od("dv"), f.od("dbu")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("v"), f.ev("u~")};
    for (int t = 0; t < 40; ++t) {
        Multivector m = rnd.multivector(f.reg, odds, vars, 3, 4);
        CHECK(symplectic_lower(symplectic_raise(m, f.cy2), f.cy2) == m);
        Multivector w = rnd.multivector(f.reg, legs, vars, 3, 4);
        CHECK(symplectic_raise(symplectic_lower(w, f.cy2), f.cy2) == w);
    }
    // Omega([Pi,f],-) = del f  and  Omega^{(x)2}([Pi, f th], -) = del(Omega(f th, -))
    std::vector<uint32_t> uvvars = {f.ev("u"), f.ev("v")};
    for (int t = 0; t < 40; ++t) {
        Multivector fn = Multivector::coefficient(f.reg, RationalFunction(rnd.polynomial(uvvars, 4, 3)));
        CHECK(symplectic_raise(sn_bracket_lie(f.pi_uv(), fn, f.cy2), f.cy2) ==
              del_holomorphic(fn, f.cy2));
        Multivector vec = rnd.homogeneous(f.reg, {f.od("Du"), f.od("Dv")}, uvvars, 1, 4, 3);
        CHECK(symplectic_raise(sn_bracket_lie(f.pi_uv(), vec, f.cy2), f.cy2) ==
              del_holomorphic(symplectic_raise(vec, f.cy2), f.cy2));
    }
}

TEST_CASE("homotopy identity for the form-side divergence") {
    Fixture f;
    RandomGen rnd(67);
    std::vector<uint32_t> legs = {f.od("du"), f.od("dv"), f.od("dbu"), f.od("dbv")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("v"), f.ev("u~"), f.ev("v~")};
    Multivector pi = f.pi_uv();
    int count = 0;
    for (int t = 0; t < 120; ++t) {
        Multivector w = rnd.multivector(f.reg, legs, vars, 3, 4);
        Multivector lhs = del_pv_omega(w, f.cy2);
        Multivector rhs = del_holomorphic(iota_pi(w, pi), f.cy2) -
                          iota_pi(del_holomorphic(w, f.cy2), pi);
        CHECK(lhs == rhs);
        ++count;
    }
    CHECK(count >= 100);
    // On (2,*)-forms the contraction term of the commutator vanishes, giving
    // the anticommutator shape directly.
    for (int t = 0; t < 110; ++t) {
        RationalFunction g(rnd.polynomial(vars, 3, 3));
        Multivector alpha = f.gen("du") * f.gen("dv") * g;
        if (rnd.integer(0, 1)) alpha = alpha * f.gen("dbu");
        Multivector lhs = del_pv_omega(alpha, f.cy2);
        Multivector rhs = del_holomorphic(iota_pi(alpha, pi), f.cy2) +
                          iota_pi(del_holomorphic(alpha, f.cy2), pi);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("twisted_differential: examples, square zero, bad twist") {
    Fixture f;
    CHECK(twisted_differential(f.var("u"), f.pi_uv(), f.cy2) == f.gen("Dv"));
    CHECK(twisted_differential(f.pi_uv(), f.pi_uv(), f.cy2).is_zero());
    RandomGen rnd(71);
    std::vector<uint32_t> odds = {f.od("Du"), f.od("Dv"), f.od("dbu"), f.od("dbv")};
    std::vector<uint32_t> vars = {f.ev("u"), f.ev("v"), f.ev("u~"), f.ev("v~")};
    for (int t = 0; t < 40; ++t) {
        Multivector m = rnd.multivector(f.reg, odds, vars, 3, 4);
        Multivector once = twisted_differential(m, f.pi_uv(), f.cy2);
        CHECK(twisted_differential(once, f.pi_uv(), f.cy2).is_zero());
    }
    CHECK_THROWS_AS(twisted_differential(f.var("u"), f.var("u") * f.pi_uv(), f.cy2), error);
}

TEST_CASE("divergence_primitive: reconstruction and obstruction") {
    Fixture f;
    RandomGen rnd(73);
    std::vector<uint32_t> odds = {f.od("Dz"), f.od("Dw1"), f.od("Dw2"), f.od("dbz")};
    std::vector<uint32_t> vars = {f.ev("z"), f.ev("w1"), f.ev("w2"), f.ev("z~")};
    for (int t = 0; t < 60; ++t) {
        Multivector g = rnd.multivector(f.reg, odds, vars, 3, 4);
        Multivector mu = divergence(g, f.cy3);
        auto prim = divergence_primitive(mu, f.cy3);
        REQUIRE(prim.has_value());
        CHECK(divergence(*prim, f.cy3) == mu);
    }
    // The constant top polyvector is divergence-closed but not exact.
    Multivector top = f.gen("Dz") * f.gen("Dw1") * f.gen("Dw2");
    CHECK(!divergence_primitive(top, f.cy3).has_value());
    CHECK(!divergence_primitive(f.gen("Dw1") * f.gen("Dw2"), f.cyw).has_value());
}
