#pragma once

#include "sdual/duality.hpp"
#include "sdual/linalg.hpp"
#include "sdual/superop.hpp"

#include <array>
#include <string>
#include <vector>

namespace sdual {

// Holomorphically embedded flat brane: wrapped coordinates span the
// world-volume, normal coordinates are transverse (codimension = #normal).
struct BraneSpec {
    const Registry* reg = nullptr;
    std::vector<uint32_t> wrapped; // even variable ids along the brane
    std::vector<uint32_t> normal;  // even variable ids transverse to it
    size_t codim() const { return normal.size(); }
};

// Background C[u,v] x C[z,w1,w2] hosting the codimension-3 brane along
// (u, z); the duality closed form acts on the (z, w1, w2) factor.
struct BraneBackground {
    DualityContext dual; // reg/cy3 over the five coordinates; em/eps unused
    CalabiYauOrdering cy5;
    BraneSpec brane;

    static BraneBackground d3();
};

// Delta-function source kernel of the brane: the wrapped polyvector legs
// times the Bochner-Martinelli form of the normal coordinates n_1..n_k,
//   rho^{-k} sum_j (-1)^{j-1} conj(n_j) db(n_1)^..^db(n_j)-hat^..^db(n_k),
// rho = sum_j n_j conj(n_j).  Dolbeault-closed away from the brane and
// divergence-free; throws on codimension zero.
Multivector bochner_martinelli(const BraneSpec& b);

// Whether the closed-form duality map on the (z, w1, w2) factor fixes the
// field: passenger wrapped legs outside that factor are stripped first, and
// both the stripped and unwrapped parts must be fixed pointwise.
bool sdual_fixes_d3(const Multivector& field, const BraneBackground& bb,
                    const SignConvention& conv);

// Operator variable universe of the brane wrapping C_z in the standard
// duality background: even coordinate z, odd parameters eps1, eps2.
SuperOpContext brane_operator_context();

// Closed-string field -> boundary operator dictionary for that brane:
//   z -> z,  theta_z -> d/dz,  theta_{w_i} -> eps_i,  w_i -> d/deps_i,
// composed left to right in the displayed order per term.  Requires
// polynomial holomorphic input; w-exponents above one act as zero.
SuperDiffOp closed_open(const Multivector& m, const DualityContext& ctx,
                        const SuperOpContext& op);

// Exterior algebra on eps1, eps2 with basis (1, eps1, eps2, eps1 eps2).
struct GrassmannPair {
    std::array<Scalar, 4> c{};

    static GrassmannPair basis(int i);
    GrassmannPair operator+(const GrassmannPair& o) const;
    GrassmannPair operator-(const GrassmannPair& o) const;
    GrassmannPair operator*(const Scalar& s) const;
    bool operator==(const GrassmannPair& o) const { return c == o.c; }
    bool operator!=(const GrassmannPair& o) const { return !(*this == o); }
    bool is_zero() const;
    std::string str() const;
};

GrassmannPair wedge(const GrassmannPair& a, const GrassmannPair& b);
// Left derivation by eps_i (i = 1, 2).
GrassmannPair eps_derivation(const GrassmannPair& a, int i);

// Weyl-ordered star product deforming the exterior algebra to the Clifford
// algebra {eps1, eps2} = 1:
//   a * b = ab - (1/2)(-1)^{|a|}[(d1 a)(d2 b) + (d2 a)(d1 b)]
//           + (1/4)(d1 d2 a)(d1 d2 b),
// with the parity sign taken per homogeneous component of a.
GrassmannPair clifford_star(const GrassmannPair& a, const GrassmannPair& b);

struct CliffordReport {
    bool clifford_relation = false; // eps1*eps2 + eps2*eps1 = 1
    bool unital = false;
    bool associative = false;       // all 64 basis triples
    bool center_is_scalars = false;
    bool rep_is_matrix_iso = false; // 2x2 irrep on Lambda[eps1]
    bool all() const {
        return clifford_relation && unital && associative && center_is_scalars &&
               rep_is_matrix_iso;
    }
};

// Exhaustive structural check of the deformed algebra, including the
// identification with the 2x2 matrix algebra via eps1 -> E21, eps2 -> E12,
// eps1 eps2 -> diag(-1/2, 1/2).
CliffordReport clifford_deformation_check();

// The two-term complex C[z] eps2 -> C[z] of the operator z d/deps2 (i.e.
// multiplication by z), truncated at the given degree: injective with
// one-dimensional cokernel spanned by the constants.
struct ZMultReport {
    size_t kernel_dim = 0;
    size_t cokernel_dim = 0;
    std::vector<std::string> cokernel_reps;
};
ZMultReport z_multiplication_check(uint32_t max_degree);

// Homology of the square-zero operator z d/deps2 on C[z] (x)
// Lambda[eps1, eps2] truncated in z-degree; the surviving classes are the
// operators that descend to the reduced brane.
struct D3ReductionReport {
    size_t kernel_dim = 0;
    size_t image_dim = 0;
    size_t homology_dim = 0;
    std::vector<std::string> reps;
};
D3ReductionReport d3_reduction_homology(uint32_t max_degree);

} // namespace sdual
