#pragma once

#include "sdual/calculus.hpp"

#include <map>

namespace sdual {

enum class FieldVariant { full_BCOV, minimal_BCOV, extended_minimal_BCOV, eleven_d };

// A field complex over one B-factor: which polyvector degrees are allowed and
// which divergence condition each degree must satisfy.
struct FieldSpaceSpec {
    const Registry* reg = nullptr;
    CalabiYauOrdering cy; // the B-factor the divergence acts on
    FieldVariant variant = FieldVariant::full_BCOV;

    FieldSpaceSpec() = default;
    FieldSpaceSpec(const Registry& r, const CalabiYauOrdering& c, FieldVariant v)
        : reg(&r), cy(c), variant(v) {}
};

struct MembershipResult {
    bool member = true;
    std::string diagnosis; // names the violating component when member == false
};

MembershipResult is_member(const Multivector& m, const FieldSpaceSpec& spec);

// PV^{d,*} = (im div in PV^{d-1,*}) + (constant-coefficient kernel):
// kernel_part keeps the terms whose coefficients are free of the cy
// coordinates; image_part = divergence(m - kernel_part).
std::pair<Multivector, Multivector> split_top_degree(const Multivector& m,
                                                     const CalabiYauOrdering& cy);

// Components of a polyvector on C^5 = C^2_{u,v} x C^3_{z,w1,w2}, keyed by
// (theta degree on C^2, theta degree on C^3).
std::map<std::pair<uint32_t, uint32_t>, Multivector>
decompose_c5(const Multivector& m, const CalabiYauOrdering& cy_uv, const CalabiYauOrdering& cy3);

} // namespace sdual
