#pragma once

#include "sdual/linalg.hpp"
#include "sdual/multivector.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sdual {

// Chiral spinor representation of so(10,C) realized on the exterior algebra
// of a maximal isotropic W = C^5 with basis a_1..a_5.  Exterior monomials are
// indexed by bitmask (bit i-1 <-> a_i); a_i acts by wedge, a_i* by
// contraction, {a_i, a_j*} = delta_ij.  S+ = even-degree part (dim 16).
struct SpinorModule {
    static constexpr int dim_w = 5;
    static constexpr int dim_module = 32; // all of Wedge W
    static constexpr int dim_splus = 16;

    std::vector<uint32_t> splus_masks;  // even-popcount bitmasks, ascending
    std::vector<int> splus_index;       // mask -> S+ index, -1 for odd masks

    std::vector<Matrix> so10;           // 45 generators on Wedge W (32x32)
    std::vector<std::string> so10_names;
    std::vector<Matrix> so10_vec;       // their action on C^10 (10x10)

    SpinorModule();

    static Matrix creation(int i);     // wedge by a_i (1-based)
    static Matrix annihilation(int i); // contraction by a_i (1-based)

    // C^10 basis order: a_1..a_5 then a_1*..a_5*.
    static Matrix vector_op(int coord); // odd operator for a C^10 basis vector

    // 16x16 restriction of an even operator to S+.
    Matrix restrict_splus(const Matrix& op) const;
};

// The unique (up to scale) so(10)-equivariant symmetric pairing
// Sym^2 S+ -> C^10, normalized by gamma(1, a1a2a3a4) = a_5*.
struct GammaPlus {
    // value[(p * 16 + q) * 10 + c], symmetric in (p, q).
    std::vector<Scalar> table;

    std::vector<Scalar> value(int p, int q) const;
};

GammaPlus build_gamma_plus(const SpinorModule& spin);

// Independent cross-check: the top-wedge pairing formula
// gamma_c(psi1, psi2) = beta(v_c psi1, psi2) with beta the main-antiautomorphism
// top-degree pairing; agrees with the solved gamma up to one overall scale per
// chirality block, uniform in the coordinate index.
GammaPlus gamma_plus_pairing_oracle(const SpinorModule& spin);

// siso = so(10,C) semidirect (C^10 + S+ (x) C^2) with [psi1 (x) e_a,
// psi2 (x) e_b] = gamma(psi1, psi2) <e_a, e_b>.
// Basis layout: [0,45) so(10); [45,55) C^10; [55,71) S+ (x) e1; [71,87) S+ (x) e2.
struct SuperLieAlgebra {
    static constexpr size_t so_begin = 0, so_count = 45;
    static constexpr size_t vec_begin = 45, vec_count = 10;
    static constexpr size_t odd_begin = 55, odd_count = 32;
    static constexpr size_t dim = 87;

    const SpinorModule* spin = nullptr;
    std::vector<std::string> names;
    // bracket_table[i * dim + j] = sparse expansion of [x_i, x_j].
    std::vector<std::vector<std::pair<size_t, Scalar>>> bracket_table;

    bool is_odd(size_t i) const { return i >= odd_begin; }
    std::vector<Scalar> bracket_basis(size_t i, size_t j) const;
    std::vector<Scalar> bracket(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
};

// Assembles the structure constants and validates graded antisymmetry on all
// pairs and graded Jacobi on all basis triples.
SuperLieAlgebra build_siso(const SpinorModule& spin, const GammaPlus& gamma);

struct QCohomology {
    Matrix differential;      // dim x dim matrix of [Q, -]
    size_t even_dim = 0, odd_dim = 0;
    std::vector<std::vector<Scalar>> even_reps, odd_reps;
};

// Q-cohomology by exact rank computation; throws if [Q, Q] != 0.
QCohomology q_cohomology(const SuperLieAlgebra& alg, const std::vector<Scalar>& q);

// The supercharge 1 (x) e1 as a coefficient vector.
std::vector<Scalar> supercharge_q(const SuperLieAlgebra& alg);

// Residual-symmetry realization on C^5: coordinates z1..z5.
struct ResContext {
    BackgroundDescriptor bg;
    Registry reg;
    std::array<uint32_t, 5> z{};
    std::array<uint32_t, 5> theta{};

    static ResContext standard();
};

// Tagged basis classes of the residual algebra in the summand decomposition
// sl(5) + Wedge^3 V + V (even) and C + Wedge^2 V + V* (odd).
struct ResClass {
    enum class Summand { sl5, wedge3, vector_field, odd_unit, odd_wedge2, odd_dual };
    Summand summand;
    Matrix A;                  // sl5 only: traceless 5x5
    std::array<int, 3> idx{};  // 1-based coordinate indices where applicable

    static ResClass sl5(const Matrix& a);
    static ResClass wedge3(int i, int j, int k);
    static ResClass vector_field(int i);
    static ResClass odd_unit();
    static ResClass odd_wedge2(int i, int j);
    static ResClass odd_dual(int i);
};

// Basiswise embedding into polyvectors on C^5; the odd unit maps to 0 and the
// map is not a bracket homomorphism (see tests).
Multivector res_map(const ResClass& h, const ResContext& ctx);

} // namespace sdual
