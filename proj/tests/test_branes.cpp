#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sdual/branes.hpp"
#include "sdual/calculus.hpp"

using namespace sdual;

namespace {

SignConvention pinned_convention() {
    SignConvention conv;
    conv.entries = {{"c3z4.pv0", -1}, {"c3z4.pv0_const", 1}, {"c3z4.pv1", 1},
                    {"c3z4.pv2", -1}, {"c3z4.pv3", -1}};
    return conv;
}

struct OpFixture {
    SuperOpContext c = brane_operator_context();
    SuperDiffOp z = SuperDiffOp::coordinate(c, "z");
    SuperDiffOp dz = SuperDiffOp::derivation(c, "z");
    SuperDiffOp e1 = SuperDiffOp::odd_coordinate(c, "eps1");
    SuperDiffOp e2 = SuperDiffOp::odd_coordinate(c, "eps2");
    SuperDiffOp de1 = SuperDiffOp::odd_derivation(c, "eps1");
    SuperDiffOp de2 = SuperDiffOp::odd_derivation(c, "eps2");
};

int op_parity_sign(const SuperDiffOp& a, const SuperDiffOp& b) {
    return (a.parity() * b.parity()) % 2 == 0 ? 1 : -1;
}

} // namespace

TEST_CASE("superdifferential operators: composition and commutators") {
    OpFixture f;

    // Normal-ordering identities of the Weyl part.
    CHECK((f.dz * f.z - f.z * f.dz) == SuperDiffOp::unit(f.c));
    CHECK((f.dz * f.z * f.z).str() == "2*z + z^2*dz");
    CHECK((f.de2 * f.de2).is_zero());
    CHECK((f.e1 * f.e1).is_zero());
    CHECK((f.e1 * f.e2) == -(f.e2 * f.e1));

    // Vector fields of the rotated brane: both presentations agree.
    SuperDiffOp euler = f.z * f.dz + f.e2 * f.de2;
    CHECK(super_commutator(f.e2 * f.dz, f.z * f.de2) == euler);
    CHECK(super_commutator(f.de1, f.e1 * f.e2 * f.de2 + f.e1 * f.z * f.dz) == euler);
    CHECK(super_commutator(f.dz, f.de2).is_zero());
    CHECK(super_commutator(f.dz, f.e2 * f.dz) == SuperDiffOp(f.c));

    // Parity bookkeeping.
    CHECK(euler.parity() == 0);
    CHECK((f.e1 * f.dz).parity() == 1);
    CHECK_THROWS_AS((f.e1 + f.z).parity(), error);
}

TEST_CASE("superdifferential operators: associativity, antisymmetry, Jacobi") {
    OpFixture f;
    std::vector<SuperDiffOp> homog = {
        f.z * f.dz, f.e1 * f.de1 - f.e2 * f.de2, f.e1 * f.dz, f.z * f.de2,
        f.de1,      f.e1 * f.e2 * f.de2,         f.z * f.z * f.dz * f.de1 * f.e2};
    for (const auto& a : homog)
        for (const auto& b : homog) {
            CHECK(((a * b) * (a + b)) == (a * (b * (a + b))));
            // Graded antisymmetry.
            SuperDiffOp lhs = super_commutator(a, b);
            SuperDiffOp rhs = super_commutator(b, a);
            CHECK(lhs == (op_parity_sign(a, b) == 1 ? -rhs : rhs));
        }
    // Graded Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]].
    for (size_t i = 0; i < homog.size(); ++i)
        for (size_t j = 0; j < homog.size(); ++j)
            for (size_t k = 0; k < homog.size(); k += 2) {
                const auto &a = homog[i], &b = homog[j], &c = homog[k];
                SuperDiffOp lhs = super_commutator(a, super_commutator(b, c));
                SuperDiffOp rhs = super_commutator(super_commutator(a, b), c);
                SuperDiffOp tail = super_commutator(b, super_commutator(a, c));
                rhs = rhs + (op_parity_sign(a, b) == 1 ? tail : -tail);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("source kernel: closedness and divergence-freeness") {
    BraneBackground bb = BraneBackground::d3();
    Multivector f = bochner_martinelli(bb.brane);

    CHECK(f.terms.size() == 3);
    CHECK(dolbeault(f).is_zero());
    CHECK(divergence(f, bb.cy5).is_zero());

    // The wrapped world-volume polyvector (anti)commutes with its own source.
    Multivector wrap = Multivector::generator(bb.dual.reg, *bb.dual.reg.theta_of(bb.brane.wrapped[0])) *
                       Multivector::generator(bb.dual.reg, bb.dual.theta_z);
    CHECK(sn_bracket_lie(wrap, f, bb.cy5).is_zero());

    // Flipping one relative sign breaks Dolbeault-closedness.
    Multivector term(bb.dual.reg);
    term.add_term(f.terms.begin()->first, f.terms.begin()->second);
    Multivector mutated = f - term - term;
    CHECK_FALSE(dolbeault(mutated).is_zero());

    // Codimension one: the Cauchy kernel conj(v)/(v conj(v)) = 1/v.
    BraneSpec thin{&bb.dual.reg, {*bb.dual.reg.find_even("u")}, {*bb.dual.reg.find_even("v")}};
    Multivector g = bochner_martinelli(thin);
    CHECK(g.terms.size() == 1);
    CHECK(dolbeault(g).is_zero());

    BraneSpec fill{&bb.dual.reg, bb.brane.wrapped, {}};
    CHECK_THROWS_AS(bochner_martinelli(fill), error);
}

TEST_CASE("source kernel: fixed by the duality closed form") {
    BraneBackground bb = BraneBackground::d3();
    SignConvention conv = pinned_convention();
    Multivector f = bochner_martinelli(bb.brane);

    CHECK(sdual_fixes_d3(f, bb, conv));
    CHECK(sdual_fixes_d3(Multivector::zero(bb.dual.reg), bb, conv));

    // A stray degree-0 component transforms into a polyvector and is not fixed.
    Multivector theta_u =
        Multivector::generator(bb.dual.reg, *bb.dual.reg.theta_of(bb.brane.wrapped[0]));
    Multivector mutated = f + theta_u * Multivector::variable(bb.dual.reg, *bb.dual.reg.find_even("w1"));
    CHECK_FALSE(sdual_fixes_d3(mutated, bb, conv));
}

TEST_CASE("closed-open dictionary on the C_z brane") {
    DualityContext ctx = DualityContext::standard();
    SuperOpContext op = brane_operator_context();
    SignConvention conv = pinned_convention();
    OpFixture f; // separate context object with identical variable names
    auto co = [&](const Multivector& m) { return closed_open(m, ctx, op); };
    auto S = [&](const Multivector& m) {
        return sdual_closed_form(m, ctx, SDualMode::c3_z4, conv);
    };
    auto var = [&](const std::string& n) {
        return Multivector::variable(ctx.reg, *ctx.reg.find_even(n));
    };
    auto gen = [&](const std::string& n) {
        return Multivector::generator(ctx.reg, *ctx.reg.find_odd(n));
    };

    // Equality compares normal-ordered terms, so the fixture's identically
    // laid-out context is interchangeable with `op`.
    CHECK(co(var("w1")) == f.de1);
    CHECK(co(var("z") * var("w2")) == f.z * f.de2);
    CHECK(co(gen("Dw1")) == f.e1);
    CHECK(co(var("z") * gen("Dz")) == f.z * f.dz);
    CHECK(co(var("w1") * var("w1")).is_zero());

    // Boundary image of the dual dilaton: the brane rotation generator.
    SuperDiffOp pi = f.e1 * f.de1 * f.dz - f.e2 * f.de2 * f.dz;
    CHECK(co(S(var("w1") * var("w2"))) == pi);
    // Dual of a transverse coordinate: a translation-rotation mix.
    CHECK(co(S(var("w1"))) == -(f.e2 * f.dz));

    CHECK_THROWS_AS(co(var("w1~")), error);
    CHECK_THROWS_AS(co(gen("dbw1")), error);
    CHECK_THROWS_AS(co(gen("eM")), error);
    Multivector frac = Multivector::coefficient(
        ctx.reg, RationalFunction(Polynomial(Scalar(1)),
                                  Polynomial::variable(*ctx.reg.find_even("w1"))));
    CHECK_THROWS_AS(co(frac), error);
}

TEST_CASE("clifford deformation of the odd parameters") {
    auto bs = GrassmannPair::basis;
    GrassmannPair one = bs(0), e1 = bs(1), e2 = bs(2), e12 = bs(3);
    Scalar half(mpq_class(1, 2));

    CHECK(clifford_star(e1, e2) == e12 + one * half);
    CHECK(clifford_star(e2, e1) == one * half - e12);
    CHECK(clifford_star(e1, e12) == e1 * (-half));
    CHECK(clifford_star(e12, e1) == e1 * half);
    CHECK(clifford_star(e2, e12) == e2 * half);
    CHECK(clifford_star(e12, e2) == e2 * (-half));
    CHECK(clifford_star(e12, e12) == one * (half * half));

    CliffordReport rep = clifford_deformation_check();
    CHECK(rep.clifford_relation);
    CHECK(rep.unital);
    CHECK(rep.associative);
    CHECK(rep.center_is_scalars);
    CHECK(rep.rep_is_matrix_iso);
    CHECK(rep.all());
}

TEST_CASE("reduction complexes of the deformed brane") {
    ZMultReport zm = z_multiplication_check(10);
    CHECK(zm.kernel_dim == 0);
    CHECK(zm.cokernel_dim == 1);
    REQUIRE(zm.cokernel_reps.size() == 1);
    CHECK(zm.cokernel_reps[0] == "1");

    D3ReductionReport dr = d3_reduction_homology(10);
    CHECK(dr.kernel_dim == 22);
    CHECK(dr.image_dim == 22);
    CHECK(dr.homology_dim == 2);
    REQUIRE(dr.reps.size() == 2);
    CHECK(dr.reps[0] == "1");
    CHECK(dr.reps[1] == "eps1");
}
