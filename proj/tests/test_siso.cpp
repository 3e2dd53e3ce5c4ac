#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sdual/calculus.hpp"
#include "sdual/siso.hpp"

using namespace sdual;

namespace {

const SpinorModule& spin() {
    static SpinorModule s;
    return s;
}

const GammaPlus& gamma_solved() {
    static GammaPlus g = build_gamma_plus(spin());
    return g;
}

const SuperLieAlgebra& algebra() {
    static SuperLieAlgebra a = build_siso(spin(), gamma_solved());
    return a;
}

size_t odd_index(int a, uint32_t mask) {
    return SuperLieAlgebra::odd_begin + size_t((a - 1) * 16 + spin().splus_index[mask]);
}

} // namespace

TEST_CASE("spinor module: Clifford relations and parity") {
    const SpinorModule& s = spin();
    CHECK(s.splus_masks.size() == 16);
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            Matrix anti = SpinorModule::creation(i) * SpinorModule::annihilation(j) +
                          SpinorModule::annihilation(j) * SpinorModule::creation(i);
            Matrix expect = i == j ? Matrix::identity(32) : Matrix(32, 32);
            CHECK(anti == expect);
            // Wedges anticommute, contractions anticommute.
            CHECK((SpinorModule::creation(i) * SpinorModule::creation(j) +
                   SpinorModule::creation(j) * SpinorModule::creation(i))
                      .is_zero());
        }
    // Even generators preserve the parity splitting.
    for (const Matrix& g : s.so10)
        for (uint32_t m1 = 0; m1 < 32; ++m1)
            for (uint32_t m2 = 0; m2 < 32; ++m2)
                if (__builtin_popcount(m1) % 2 != __builtin_popcount(m2) % 2)
                    CHECK(g.at(m1, m2).is_zero());
}

TEST_CASE("gamma pairing: normalization, vanishing values, equivariance") {
    const SpinorModule& s = spin();
    const GammaPlus& g = gamma_solved();
    int idx_one = s.splus_index[0];

    // gamma(1, a1a2a3a4) = a_5* (the frozen normalization).
    std::vector<Scalar> v = g.value(idx_one, s.splus_index[0b01111]);
    for (int c = 0; c < 10; ++c) CHECK(v[size_t(c)] == (c == 9 ? Scalar(1) : Scalar()));

    // gamma(1, 1) = 0 and gamma(1, a_i a_j) = 0.
    for (const Scalar& x : g.value(idx_one, idx_one)) CHECK(x.is_zero());
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            uint32_t m = (1u << (i - 1)) | (1u << (j - 1));
            for (const Scalar& x : g.value(idx_one, s.splus_index[m])) CHECK(x.is_zero());
        }

    // Symmetry and full equivariance residual under all 45 generators.
    for (int p = 0; p < 16; ++p)
        for (int q = 0; q < 16; ++q) CHECK(g.value(p, q) == g.value(q, p));
    for (size_t k = 0; k < s.so10.size(); ++k) {
        Matrix act = s.restrict_splus(s.so10[k]);
        for (int p = 0; p < 16; ++p)
            for (int q = p; q < 16; ++q) {
                std::vector<Scalar> lhs(10);
                for (int r = 0; r < 16; ++r) {
                    if (!act.at(size_t(r), size_t(p)).is_zero()) {
                        std::vector<Scalar> t = g.value(r, q);
                        for (int c = 0; c < 10; ++c)
                            lhs[size_t(c)] = lhs[size_t(c)] + act.at(size_t(r), size_t(p)) * t[size_t(c)];
                    }
                    if (!act.at(size_t(r), size_t(q)).is_zero()) {
                        std::vector<Scalar> t = g.value(p, r);
                        for (int c = 0; c < 10; ++c)
                            lhs[size_t(c)] = lhs[size_t(c)] + act.at(size_t(r), size_t(q)) * t[size_t(c)];
                    }
                }
                std::vector<Scalar> rhs = s.so10_vec[k].apply(g.value(p, q));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("gamma pairing: top-wedge oracle matches up to a per-block scale") {
    const GammaPlus& solved = gamma_solved();
    GammaPlus oracle = gamma_plus_pairing_oracle(spin());
    // Fit one constant on the W block (coords 0..4) and one on the W* block.
    std::optional<Scalar> scale_w, scale_wstar;
    for (int p = 0; p < 16; ++p)
        for (int q = 0; q < 16; ++q)
            for (int c = 0; c < 10; ++c) {
                const Scalar& a = solved.table[size_t(p * 16 + q) * 10 + size_t(c)];
                const Scalar& b = oracle.table[size_t(p * 16 + q) * 10 + size_t(c)];
                CHECK(a.is_zero() == b.is_zero());
                if (b.is_zero()) continue;
                Scalar ratio = a * b.inverse();
                auto& slot = c < 5 ? scale_w : scale_wstar;
                if (!slot) slot = ratio;
                CHECK(*slot == ratio);
            }
    REQUIRE(scale_w.has_value());
    REQUIRE(scale_wstar.has_value());
}

TEST_CASE("super Lie algebra: construction validates, pinned brackets") {
    const SuperLieAlgebra& alg = algebra(); // antisymmetry + Jacobi checked inside
    const size_t dim = SuperLieAlgebra::dim;

    // [1 (x) e1, 1 (x) e2] = 0 (orthogonality of the C^2 pairing).
    CHECK(alg.bracket_table[odd_index(1, 0) * dim + odd_index(2, 0)].empty());
    // [Q, Q] = 0 for Q = 1 (x) e1.
    std::vector<Scalar> q = supercharge_q(alg);
    for (const Scalar& x : alg.bracket(q, q)) CHECK(x.is_zero());
    // Translations bracket trivially with everything in the super-translation part.
    for (size_t c = 0; c < SuperLieAlgebra::vec_count; ++c) {
        for (size_t d = 0; d < SuperLieAlgebra::vec_count; ++d)
            CHECK(alg.bracket_table[(SuperLieAlgebra::vec_begin + c) * dim +
                                    SuperLieAlgebra::vec_begin + d]
                      .empty());
        for (size_t o = 0; o < SuperLieAlgebra::odd_count; ++o)
            CHECK(alg.bracket_table[(SuperLieAlgebra::vec_begin + c) * dim +
                                    SuperLieAlgebra::odd_begin + o]
                      .empty());
    }
    // A nonzero odd-odd bracket: [1 (x) e1, a1a2a3a4 (x) e1] = a_5*.
    std::vector<Scalar> x(dim), y(dim);
    x[odd_index(1, 0)] = Scalar(1);
    y[odd_index(1, 0b01111)] = Scalar(1);
    std::vector<Scalar> b = alg.bracket(x, y);
    for (size_t i = 0; i < dim; ++i)
        CHECK(b[i] == (i == SuperLieAlgebra::vec_begin + 9 ? Scalar(1) : Scalar()));
}

TEST_CASE("Q-cohomology: dimensions and intermediate ranks") {
    const SuperLieAlgebra& alg = algebra();
    QCohomology coh = q_cohomology(alg, supercharge_q(alg));
    CHECK(coh.even_dim == 39);
    CHECK(coh.odd_dim == 16);

    const Matrix& d = coh.differential;
    const size_t dim = SuperLieAlgebra::dim;

    // Image inside C^10 (differential restricted to the odd part): rank 5,
    // supported on the a_k* coordinates only.
    Matrix d_odd(dim, SuperLieAlgebra::odd_count);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < SuperLieAlgebra::odd_count; ++j)
            d_odd.at(i, j) = d.at(i, SuperLieAlgebra::odd_begin + j);
    CHECK(d_odd.rank() == 5);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < SuperLieAlgebra::odd_count; ++j)
            if (!d_odd.at(i, j).is_zero())
                CHECK((i >= SuperLieAlgebra::vec_begin + 5 && i < SuperLieAlgebra::odd_begin));
    CHECK(SuperLieAlgebra::odd_count - d_odd.rank() == 27); // kernel in S+ + S+

    // Differential on the even part: image in S+ + S+ has rank 11; the so(10)
    // stabilizer of Q has dimension 34.
    Matrix d_even(dim, SuperLieAlgebra::odd_begin);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < SuperLieAlgebra::odd_begin; ++j) d_even.at(i, j) = d.at(i, j);
    CHECK(d_even.rank() == 11);
    Matrix d_so(dim, SuperLieAlgebra::so_count);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < SuperLieAlgebra::so_count; ++j) d_so.at(i, j) = d.at(i, j);
    CHECK(SuperLieAlgebra::so_count - d_so.rank() == 34);

    // Q = 0: cohomology is the whole algebra.
    QCohomology full = q_cohomology(alg, std::vector<Scalar>(dim));
    CHECK(full.even_dim == 55);
    CHECK(full.odd_dim == 32);
}

TEST_CASE("stabilizer nilradical: ten annihilation bivectors form an abelian ideal") {
    const SuperLieAlgebra& alg = algebra();
    QCohomology coh = q_cohomology(alg, supercharge_q(alg));
    const size_t dim = SuperLieAlgebra::dim;
    // so(10) generator layout: 20 E, 5 H, 10 B, 10 C; the C block starts at 35.
    const size_t c_begin = 35, c_end = 45;
    // Every a_i* a_j* generator stabilizes Q.
    for (size_t j = c_begin; j < c_end; ++j)
        for (size_t i = 0; i < dim; ++i) CHECK(coh.differential.at(i, j).is_zero());
    // Abelian: [C, C'] = 0.
    for (size_t i = c_begin; i < c_end; ++i)
        for (size_t j = c_begin; j < c_end; ++j)
            CHECK(alg.bracket_table[i * dim + j].empty());
    // Ideal in the stabilizer: [stab, C] stays in the C block.
    Matrix d_so(dim, SuperLieAlgebra::so_count);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < SuperLieAlgebra::so_count; ++j)
            d_so.at(i, j) = coh.differential.at(i, j);
    auto stab = d_so.nullspace();
    REQUIRE(stab.size() == 34);
    for (const auto& s : stab) {
        std::vector<Scalar> x(dim);
        for (size_t j = 0; j < SuperLieAlgebra::so_count; ++j) x[j] = s[j];
        for (size_t c = c_begin; c < c_end; ++c) {
            std::vector<Scalar> y(dim);
            y[c] = Scalar(1);
            std::vector<Scalar> br = alg.bracket(x, y);
            for (size_t i = 0; i < dim; ++i)
                if (i < c_begin || i >= c_end) CHECK(br[i].is_zero());
        }
    }
}

TEST_CASE("res map: table values and the documented bracket failure") {
    ResContext ctx = ResContext::standard();
    auto th = [&](int i) { return Multivector::generator(ctx.reg, ctx.theta[size_t(i - 1)]); };
    auto zv = [&](int i) { return Multivector::variable(ctx.reg, ctx.z[size_t(i - 1)]); };

    CHECK(res_map(ResClass::odd_wedge2(1, 2), ctx) == th(1) * th(2));
    CHECK(res_map(ResClass::odd_dual(3), ctx) == zv(3));
    CHECK(res_map(ResClass::odd_unit(), ctx).is_zero());
    CHECK(res_map(ResClass::wedge3(2, 3, 5), ctx) == th(2) * th(3) * th(5));
    CHECK(res_map(ResClass::vector_field(4), ctx) == th(4));

    Matrix e12(5, 5);
    e12.at(0, 1) = Scalar(1);
    CHECK(res_map(ResClass::sl5(e12), ctx) == zv(1) * th(2));
    Matrix trace(5, 5);
    trace.at(0, 0) = Scalar(1);
    CHECK_THROWS_AS(res_map(ResClass::sl5(trace), ctx), error);
    CHECK_THROWS_AS(res_map(ResClass::odd_wedge2(2, 2), ctx), error);
    CHECK_THROWS_AS(res_map(ResClass::odd_dual(6), ctx), error);

    // The embedding is not a bracket map: translations and odd duals commute
    // in the cohomology, but their images pair to delta_ij.
    CalabiYauOrdering cy5(ctx.reg, {"z1", "z2", "z3", "z4", "z5"});
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
            Multivector br = sn_bracket(res_map(ResClass::vector_field(i), ctx),
                                        res_map(ResClass::odd_dual(j), ctx), cy5);
            if (i == j)
                CHECK(br == Multivector::scalar(ctx.reg, Scalar(1)));
            else
                CHECK(br.is_zero());
        }
}
