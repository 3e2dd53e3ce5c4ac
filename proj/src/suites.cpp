#include "sdual/suites.hpp"

#include "sdual/branes.hpp"
#include "sdual/random_gen.hpp"
#include "sdual/siso.hpp"

#include <functional>
#include <sstream>

namespace sdual {

bool Report::ok() const {
    for (const auto& c : checks)
        if (c.status == "fail") return false;
    return true;
}

std::string Report::str() const {
    std::ostringstream out;
    out << "suite " << suite << "\n";
    out << "seed " << seed << "\n";
    for (const auto& [k, v] : convention) out << "sign " << k << " " << (v >= 0 ? "+1" : "-1") << "\n";
    size_t pass = 0, fail = 0, skipped = 0;
    for (const auto& c : checks) {
        out << "check " << c.status << " " << c.anchor << "\n";
        if (!c.witness.empty()) out << "witness " << c.witness << "\n";
        if (c.status == "pass") ++pass;
        else if (c.status == "fail") ++fail;
        else ++skipped;
    }
    out << "summary pass " << pass << " fail " << fail << " skipped " << skipped << "\n";
    return out.str();
}

namespace {

struct Collector {
    Report& r;
    void add(const std::string& anchor, bool ok, const std::string& witness = "") {
        r.checks.push_back({anchor, ok ? "pass" : "fail", ok ? "" : witness});
    }
};

// Shared sampling domain for the circle-background duality checks: circle
// components in span{1, z theta_z} times (PV^0 + exact PV^1 + constant top).
Multivector random_circle_field(const DualityContext& ctx, RandomGen& rnd) {
    std::vector<uint32_t> wv = {ctx.cy2.coords[0], ctx.cy2.coords[1]};
    Multivector top = ctx.cy2.omega_inverse();
    auto block = [&]() {
        Multivector b = Multivector::coefficient(ctx.reg, RationalFunction(rnd.polynomial(wv, 6, 3)));
        Multivector pv2 =
            Multivector::coefficient(ctx.reg, RationalFunction(rnd.polynomial(wv, 6, 3))) * top;
        b.add(divergence(pv2, ctx.cy2));
        b.add(Multivector::scalar(ctx.reg, rnd.scalar()) * top);
        return b;
    };
    Multivector m = block();
    m.add(Multivector::variable(ctx.reg, ctx.z) * Multivector::generator(ctx.reg, ctx.theta_z) *
          block());
    return m;
}

// Polynomial in the symplectic pair with every monomial of total degree >= 2,
// keeping the bracket comparison away from the constant anomaly.
Multivector deep_poly(const DualityContext& ctx, RandomGen& rnd) {
    std::vector<uint32_t> wv = {ctx.cy2.coords[0], ctx.cy2.coords[1]};
    Multivector w1 = Multivector::variable(ctx.reg, wv[0]);
    Multivector w2 = Multivector::variable(ctx.reg, wv[1]);
    Multivector m = Multivector::zero(ctx.reg);
    m.add(w1 * w1 * Multivector::coefficient(ctx.reg, RationalFunction(rnd.polynomial(wv, 3, 2))));
    m.add(w1 * w2 * Multivector::coefficient(ctx.reg, RationalFunction(rnd.polynomial(wv, 3, 2))));
    m.add(w2 * w2 * Multivector::coefficient(ctx.reg, RationalFunction(rnd.polynomial(wv, 3, 2))));
    return m;
}

void suite_calculus(Report& r, uint64_t seed) {
    Collector c{r};
    BackgroundDescriptor bg = BackgroundDescriptor::parse("C[u,v] x C[z,w1,w2]");
    Registry reg = bg.build_registry();
    CalabiYauOrdering cy2(reg, {"u", "v"});
    auto od = [&](const std::string& n) { return *reg.find_odd(n); };
    auto ev = [&](const std::string& n) { return *reg.find_even(n); };
    RandomGen rnd(seed);

    std::vector<uint32_t> odds = {od("Du"), od("Dv"), od("dbu"), od("dbz")};
    std::vector<uint32_t> vars = {ev("u"), ev("v"), ev("u~"), ev("z~")};
    bool dbar2 = true, div2 = true, anti = true;
    std::string w_dbar, w_div, w_anti;
    for (int t = 0; t < 100; ++t) {
        Multivector m = rnd.multivector(reg, odds, vars, 3, 4);
        if (!dolbeault(dolbeault(m)).is_zero() && dbar2) { dbar2 = false; w_dbar = m.str(); }
        if (!divergence(divergence(m, cy2), cy2).is_zero() && div2) { div2 = false; w_div = m.str(); }
        Multivector mix = divergence(dolbeault(m), cy2) + dolbeault(divergence(m, cy2));
        if (!mix.is_zero() && anti) { anti = false; w_anti = m.str(); }
    }
    c.add("antiholomorphic differential squares to zero (100 random)", dbar2, w_dbar);
    c.add("divergence squares to zero (100 random)", div2, w_div);
    c.add("divergence anticommutes with the antiholomorphic differential (100 random)", anti,
          w_anti);

    std::vector<uint32_t> thetas = {od("Du"), od("Dv")};
    std::vector<uint32_t> uv = {ev("u"), ev("v")};
    auto sgn = [](uint32_t k) { return k % 2 == 0 ? 1 : -1; };
    bool jac = true, leib = true;
    std::string w_jac, w_leib;
    for (int t = 0; t < 100; ++t) {
        uint32_t da = uint32_t(rnd.integer(0, 2)), db = uint32_t(rnd.integer(0, 2)),
                 dc = uint32_t(rnd.integer(0, 2));
        Multivector a = rnd.homogeneous(reg, thetas, uv, da, 3, 2);
        Multivector b = rnd.homogeneous(reg, thetas, uv, db, 3, 2);
        Multivector cc = rnd.homogeneous(reg, thetas, uv, dc, 3, 2);
        Multivector ab = sn_bracket_lie(a, b, cy2);
        Multivector lhs = sn_bracket_lie(a, sn_bracket_lie(b, cc, cy2), cy2);
        Multivector rhs = sn_bracket_lie(ab, cc, cy2);
        Multivector third = sn_bracket_lie(b, sn_bracket_lie(a, cc, cy2), cy2);
        rhs.add(sgn((da + 1) * (db + 1)) == 1 ? third : -third);
        if (lhs != rhs && jac) { jac = false; w_jac = a.str(); }
        Multivector lhs2 = sn_bracket_lie(a, b * cc, cy2);
        Multivector rhs2 = ab * cc;
        Multivector third2 = b * sn_bracket_lie(a, cc, cy2);
        rhs2.add(sgn((da + 1) * db) == 1 ? third2 : -third2);
        if (lhs2 != rhs2 && leib) { leib = false; w_leib = a.str(); }
    }
    c.add("polyvector bracket graded Jacobi (100 random homogeneous triples)", jac, w_jac);
    c.add("polyvector bracket graded Leibniz (100 random)", leib, w_leib);

    // Homotopy shape of the form-side divergence against the contraction.
    std::vector<uint32_t> legs = {od("du"), od("dv"), od("dbu"), od("dbv")};
    std::vector<uint32_t> cvars = {ev("u"), ev("v"), ev("u~"), ev("v~")};
    Multivector pi = Multivector::generator(reg, od("Du")) * Multivector::generator(reg, od("Dv"));
    bool hom = true;
    std::string w_hom;
    for (int t = 0; t < 100; ++t) {
        Multivector w = rnd.multivector(reg, legs, cvars, 3, 4);
        Multivector lhs = del_pv_omega(w, cy2);
        Multivector rhs =
            del_holomorphic(iota_pi(w, pi), cy2) - iota_pi(del_holomorphic(w, cy2), pi);
        if (lhs != rhs && hom) { hom = false; w_hom = w.str(); }
    }
    c.add("form-side divergence equals the contraction commutator (100 random)", hom, w_hom);
}

void suite_further_twist(Report& r, uint64_t seed) {
    Collector c{r};
    DualityContext ctx = DualityContext::standard();
    RandomGen rnd(seed);
    auto od = [&](const std::string& n) { return *ctx.reg.find_odd(n); };
    auto ev = [&](const std::string& n) { return *ctx.reg.find_even(n); };

    std::vector<uint32_t> odds = {od("eM"), od("dbw1"), od("dbw2")};
    std::vector<uint32_t> vars = {ev("w1"), ev("w2"), ev("w1~"), ev("w2~")};
    bool inter = true;
    std::string w_inter;
    for (int t = 0; t < 100; ++t) {
        Multivector x = rnd.multivector(ctx.reg, odds, vars, 3, 4);
        if (reduce_m(dolbeault(x), ctx) != dolbeault(reduce_m(x, ctx)) && inter) {
            inter = false;
            w_inter = x.str();
        }
    }
    c.add("circle reduction intertwines the antiholomorphic differential (100 random)", inter,
          w_inter);

    bool br = true;
    std::string w_br;
    Multivector em = Multivector::generator(ctx.reg, od("eM"));
    for (int t = 0; t < 100; ++t) {
        Multivector fe = deep_poly(ctx, rnd), ge = deep_poly(ctx, rnd);
        Multivector fm = fe * em, gm = ge * em;
        bool ok = bracket_11d(fm, gm, ctx).is_zero() &&
                  sn_bracket_lie(reduce_m(fm, ctx), reduce_m(gm, ctx), ctx.cy2).is_zero() &&
                  reduce_m(bracket_11d(fm, ge, ctx), ctx) ==
                      sn_bracket_lie(reduce_m(fm, ctx), reduce_m(ge, ctx), ctx.cy2) &&
                  reduce_m(bracket_11d(fe, ge, ctx), ctx) ==
                      sn_bracket_lie(reduce_m(fe, ctx), reduce_m(ge, ctx), ctx.cy2);
        if (!ok && br) { br = false; w_br = fe.str(); }
    }
    c.add("circle reduction intertwines the brackets in all three pairings (100 random)", br,
          w_br);

    std::vector<uint32_t> wv = {ev("w1"), ev("w2")};
    Multivector top = ctx.cy2.omega_inverse();
    bool inv = true;
    std::string w_inv;
    for (int t = 0; t < 100; ++t) {
        Multivector x = Multivector::coefficient(ctx.reg, RationalFunction(rnd.polynomial(wv, 5, 4)));
        Multivector pv2 =
            Multivector::coefficient(ctx.reg, RationalFunction(rnd.polynomial(wv, 5, 4))) * top;
        x.add(divergence(pv2, ctx.cy2));
        x.add(Multivector::scalar(ctx.reg, rnd.scalar()) * top);
        if (reduce_m(reduce_m_inverse(x, ctx), ctx) != x && inv) { inv = false; w_inv = x.str(); }
    }
    c.add("reduction after its right inverse is the identity (100 random)", inv, w_inv);
}

void suite_duality(Report& r, const SignConvention& conv, uint64_t seed) {
    Collector c{r};
    DualityContext ctx = DualityContext::standard();
    RandomGen rnd(seed);
    auto od = [&](const std::string& n) { return *ctx.reg.find_odd(n); };
    auto ev = [&](const std::string& n) { return *ctx.reg.find_even(n); };
    auto var = [&](const std::string& n) { return Multivector::variable(ctx.reg, ev(n)); };
    auto S3 = [&](const Multivector& x) {
        return sdual_closed_form(x, ctx, SDualMode::c3_z4, conv);
    };

    std::string s1 = S3(var("w1")).str();
    c.add("dual of w1 prints -Dz^Dw2", s1 == "-Dz^Dw2", s1);
    std::string s2 = S3(var("z") * var("w2")).str();
    c.add("dual of z*w2 prints z*Dz^Dw1 + w2*Dw1^Dw2", s2 == "z*Dz^Dw1 + w2*Dw1^Dw2", s2);
    std::string s3 = S3(var("w1") * var("w2")).str();
    c.add("dual of w1*w2 prints w1*Dz^Dw1 - w2*Dz^Dw2", s3 == "w1*Dz^Dw1 - w2*Dz^Dw2", s3);

    bool oracle = true, square = true;
    std::string w_oracle, w_square;
    std::vector<uint32_t> thw = {od("Dw1"), od("Dw2")};
    for (int t = 0; t < 200; ++t) {
        Multivector x = random_circle_field(ctx, rnd);
        if (sdual_closed_form(x, ctx, SDualMode::c_times_c2, conv) != sdual_composite(x, ctx) &&
            oracle) {
            oracle = false;
            w_oracle = x.str();
        }
        Multivector s2x = sdual_composite(sdual_composite(x, ctx), ctx);
        Multivector x0 = x.component_theta_count(thw, 0);
        Multivector expect = negate_odd_directions(x - x0, {od("Dz")}) -
                             negate_odd_directions(x0, {od("Dz")});
        if (s2x != expect && square) { square = false; w_square = x.str(); }
    }
    c.add("closed form agrees with the first-principles composite (200 random)", oracle, w_oracle);
    c.add("composite squared negates the circle charges (200 random)", square, w_square);

    Multivector em = Multivector::generator(ctx.reg, od("eM"));
    Multivector eps = Multivector::generator(ctx.reg, od("eps"));
    bool order4 = s_generator(em, ctx) == -eps && s_generator(eps, ctx) == em &&
                  s_generator(s_generator(em, ctx), ctx) == -em &&
                  s_generator(s_generator(s_generator(s_generator(em, ctx), ctx), ctx), ctx) == em;
    c.add("torus generator has order four on the circle pair", order4);
}

void suite_d3(Report& r, const SignConvention& conv) {
    Collector c{r};
    BraneBackground bb = BraneBackground::d3();
    Multivector f = bochner_martinelli(bb.brane);

    c.add("brane source kernel is antiholomorphically closed", dolbeault(f).is_zero(), f.str());
    c.add("brane source kernel is divergence-free", divergence(f, bb.cy5).is_zero(), f.str());
    Multivector wrap =
        Multivector::generator(bb.dual.reg, *bb.dual.reg.theta_of(bb.brane.wrapped[0])) *
        Multivector::generator(bb.dual.reg, bb.dual.theta_z);
    c.add("world-volume bivector brackets to zero with the kernel",
          sn_bracket_lie(wrap, f, bb.cy5).is_zero(), f.str());
    c.add("duality closed form fixes the brane source kernel", sdual_fixes_d3(f, bb, conv),
          f.str());
    Multivector theta_u =
        Multivector::generator(bb.dual.reg, *bb.dual.reg.theta_of(bb.brane.wrapped[0]));
    Multivector mutated =
        f + theta_u * Multivector::variable(bb.dual.reg, *bb.dual.reg.find_even("w1"));
    c.add("perturbed kernel with a transverse component is not fixed",
          !sdual_fixes_d3(mutated, bb, conv), mutated.str());
}

void suite_appendix(Report& r) {
    Collector c{r};
    SpinorModule spin;
    GammaPlus gamma = build_gamma_plus(spin);
    SuperLieAlgebra alg = build_siso(spin, gamma);
    std::vector<Scalar> q = supercharge_q(alg);

    std::vector<Scalar> qq = alg.bracket(q, q);
    bool qzero = true;
    for (const Scalar& s : qq)
        if (!s.is_zero()) qzero = false;
    c.add("supercharge squares to zero", qzero);

    QCohomology coh = q_cohomology(alg, q);
    c.add("cohomology dimensions are 39 even and 16 odd",
          coh.even_dim == 39 && coh.odd_dim == 16,
          std::to_string(coh.even_dim) + "|" + std::to_string(coh.odd_dim));

    const Matrix& d = coh.differential;
    const size_t dim = SuperLieAlgebra::dim;
    Matrix d_odd(dim, SuperLieAlgebra::odd_count);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < SuperLieAlgebra::odd_count; ++j)
            d_odd.at(i, j) = d.at(i, SuperLieAlgebra::odd_begin + j);
    c.add("odd differential has rank 5 into the vector summand", d_odd.rank() == 5,
          std::to_string(d_odd.rank()));
    c.add("odd kernel has dimension 27", SuperLieAlgebra::odd_count - d_odd.rank() == 27);

    Matrix d_even(dim, SuperLieAlgebra::odd_begin);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < SuperLieAlgebra::odd_begin; ++j) d_even.at(i, j) = d.at(i, j);
    c.add("even differential has rank 11 into the spinor summand", d_even.rank() == 11,
          std::to_string(d_even.rank()));

    Matrix d_so(dim, SuperLieAlgebra::so_count);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < SuperLieAlgebra::so_count; ++j) d_so.at(i, j) = d.at(i, j);
    c.add("rotation stabilizer of the supercharge has dimension 34",
          SuperLieAlgebra::so_count - d_so.rank() == 34,
          std::to_string(SuperLieAlgebra::so_count - d_so.rank()));

    // The coordinate realization is not a bracket map: dual odd pairs bracket
    // to delta while their polyvector images commute.
    ResContext rctx = ResContext::standard();
    Multivector th1 = res_map(ResClass::vector_field(1), rctx);
    Multivector z1 = res_map(ResClass::odd_dual(1), rctx);
    Multivector z2 = res_map(ResClass::odd_dual(2), rctx);
    CalabiYauOrdering cy5(rctx.reg, {"z1", "z2", "z3", "z4", "z5"});
    bool mism = sn_bracket_lie(th1, z1, cy5) == Multivector::scalar(rctx.reg, Scalar(1)) &&
                sn_bracket_lie(th1, z2, cy5).is_zero();
    c.add("coordinate realization reproduces the dual-pair pairing, not the bracket", mism);
}

void suite_omega(Report& r) {
    Collector c{r};
    SuperOpContext oc = brane_operator_context();
    SuperDiffOp z = SuperDiffOp::coordinate(oc, "z");
    SuperDiffOp dz = SuperDiffOp::derivation(oc, "z");
    SuperDiffOp e1 = SuperDiffOp::odd_coordinate(oc, "eps1");
    SuperDiffOp e2 = SuperDiffOp::odd_coordinate(oc, "eps2");
    SuperDiffOp de1 = SuperDiffOp::odd_derivation(oc, "eps1");
    SuperDiffOp de2 = SuperDiffOp::odd_derivation(oc, "eps2");
    SuperDiffOp euler = z * dz + e2 * de2;

    SuperDiffOp c1 = super_commutator(e2 * dz, z * de2);
    c.add("rotation commutator of the odd translation pair equals z dz + eps2 deps2",
          c1 == euler, c1.str());
    SuperDiffOp c2 = super_commutator(de1, e1 * e2 * de2 + e1 * z * dz);
    c.add("supercharge commutator with the deformation equals z dz + eps2 deps2", c2 == euler,
          c2.str());
}

void suite_clifford(Report& r) {
    Collector c{r};
    CliffordReport rep = clifford_deformation_check();
    c.add("deformed product satisfies the Clifford relation", rep.clifford_relation);
    c.add("deformed product is unital", rep.unital);
    c.add("deformed product is associative on all basis triples", rep.associative);
    c.add("center of the deformed algebra is the scalars", rep.center_is_scalars);
    c.add("two-by-two matrix realization is an algebra isomorphism", rep.rep_is_matrix_iso);

    ZMultReport zm = z_multiplication_check(10);
    bool contraction = zm.kernel_dim == 0 && zm.cokernel_dim == 1 &&
                       zm.cokernel_reps == std::vector<std::string>{"1"};
    c.add("contraction complex at degree 10: kernel zero, cokernel the constants", contraction);

    D3ReductionReport dr = d3_reduction_homology(10);
    bool survivors = dr.homology_dim == 2 && dr.reps == std::vector<std::string>{"1", "eps1"};
    c.add("reduced brane operators are spanned by 1 and eps1", survivors);
}

} // namespace

std::vector<std::string> suite_names() {
    return {"calculus", "further_twist", "duality", "d3", "appendix", "omega", "clifford", "all"};
}

Report run_suite(const std::string& name, const SignConvention& conv, uint64_t seed) {
    Report r;
    r.suite = name;
    r.seed = seed;
    for (const auto& [k, v] : conv.entries) r.convention.emplace_back(k, v);

    std::vector<std::pair<std::string, std::function<void()>>> table = {
        {"calculus", [&] { suite_calculus(r, seed); }},
        {"further_twist", [&] { suite_further_twist(r, seed); }},
        {"duality", [&] { suite_duality(r, conv, seed); }},
        {"d3", [&] { suite_d3(r, conv); }},
        {"appendix", [&] { suite_appendix(r); }},
        {"omega", [&] { suite_omega(r); }},
        {"clifford", [&] { suite_clifford(r); }},
    };
    if (name == "all") {
        for (const auto& [sub, fn] : table) {
            size_t before = r.checks.size();
            fn();
            for (size_t i = before; i < r.checks.size(); ++i)
                r.checks[i].anchor = sub + ": " + r.checks[i].anchor;
        }
        return r;
    }
    for (const auto& [sub, fn] : table)
        if (sub == name) {
            fn();
            return r;
        }
    throw error("unknown suite: " + name);
}

} // namespace sdual
