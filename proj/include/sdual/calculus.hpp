#pragma once

#include "sdual/multivector.hpp"

#include <optional>

namespace sdual {

// Ordered holomorphic coordinates of a B-factor; fixes the volume form
// Omega = dz_(1)^...^dz_(d) and its inverse Omega^{-1} = D_(1)^...^D_(d).
struct CalabiYauOrdering {
    const Registry* reg = nullptr;
    std::vector<uint32_t> coords; // even variable ids, in Omega order

    CalabiYauOrdering() = default;
    CalabiYauOrdering(const Registry& r, const std::vector<std::string>& names);

    size_t dim() const { return coords.size(); }
    std::vector<uint32_t> thetas() const;
    std::vector<uint32_t> form_legs() const;
    Multivector omega() const;         // dz_(1)^...^dz_(d)
    Multivector omega_inverse() const; // D_(1)^...^D_(d)
};

// dbar = sum_i dz~_i ^ d/dz~_i over every conjugate coordinate in the registry.
Multivector dolbeault(const Multivector& m);

// Divergence: sum_i (d/dz_i)(d/dtheta_i), theta-derivation first.
Multivector divergence(const Multivector& m, const CalabiYauOrdering& cy);

// Holomorphic de Rham differential on form legs: sum_i dz_i ^ d/dz_i.
Multivector del_holomorphic(const Multivector& m, const CalabiYauOrdering& cy);

// [mu,nu] := div(mu nu) - (div mu)nu - (-1)^{|mu|} mu(div nu).
Multivector sn_bracket(const Multivector& a, const Multivector& b, const CalabiYauOrdering& cy);

// Sign-corrected bracket -(-1)^{|a|}[a,b]_div: graded antisymmetric shifted
// Lie bracket agreeing with the classical Schouten bracket (see the fitted
// sign convention file).
Multivector sn_bracket_lie(const Multivector& a, const Multivector& b,
                           const CalabiYauOrdering& cy);

// (-) v Omega : PV^{i,j} -> Omega^{d-i,j}; exchanges theta legs for form legs.
Multivector contract_with_cy(const Multivector& m, const CalabiYauOrdering& cy);
// Inverse of contract_with_cy (built from the forward basis table).
Multivector contract_with_cy_inverse(const Multivector& m, const CalabiYauOrdering& cy);

// Contraction of form legs against a constant bivector pi.
Multivector iota_pi(const Multivector& m, const Multivector& pi);

// Symplectic index raising on a 2-dim cy (Omega = dc1^dc2): the map
// mu -> Omega(mu,-)^{tensor k} identifying PV^{k,•} with Omega^{k,•}
// (theta_c1 -> dc2, theta_c2 -> -dc1, applied legwise).
Multivector symplectic_raise(const Multivector& m, const CalabiYauOrdering& cy);
Multivector symplectic_lower(const Multivector& m, const CalabiYauOrdering& cy);

// Divergence conjugated through the symplectic identification, acting on
// forms: Omega^{k,•} -> Omega^{k-1,•}.
Multivector del_pv_omega(const Multivector& m, const CalabiYauOrdering& cy);

// dbar(m) + [pi, m]; pi must be a constant bivector with [pi,pi] = 0.
Multivector twisted_differential(const Multivector& m, const Multivector& pi,
                                 const CalabiYauOrdering& cy);

// Unique polynomial primitive: F in PV^{k+1} (zero constant term in the cy
// coordinates for the top case) with divergence(F) = mu.  Returns nullopt
// when mu is not exact (divergence(mu) != 0 over polynomials).
std::optional<Multivector> divergence_primitive(const Multivector& mu,
                                                const CalabiYauOrdering& cy);

} // namespace sdual
