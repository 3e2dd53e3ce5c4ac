#include "sdual/field_spaces.hpp"

#include <algorithm>

namespace sdual {

namespace {

MembershipResult fail(const std::string& why) { return {false, why}; }

} // namespace

MembershipResult is_member(const Multivector& m, const FieldSpaceSpec& spec) {
    const Registry& reg = *spec.reg;
    if (spec.variant == FieldVariant::eleven_d) {
        // de Rham forms on the A-factor times (0,*)-forms: no polyvector legs
        // and no holomorphic B-form legs.
        for (const auto& [ids, c] : m.terms) {
            (void)c;
            for (uint32_t id : ids) {
                const OddGenerator& g = reg.odd(id);
                if (g.kind == OddKind::PolyvectorDir)
                    return fail("polyvector leg " + g.name + " not allowed in the 11d complex");
                if (g.kind == OddKind::FormLeg && g.coord >= 0 &&
                    reg.even(uint32_t(g.coord)).kind == EvenKind::HolCoord)
                    return fail("holomorphic form leg " + g.name +
                                " not allowed in the 11d complex");
            }
        }
        return {true, ""};
    }

    auto ths = spec.cy.thetas();
    uint32_t d = uint32_t(spec.cy.dim());
    for (uint32_t k = 0; k <= m.max_theta_count(ths); ++k) {
        Multivector comp = m.component_theta_count(ths, k);
        if (comp.is_zero()) continue;
        std::string label = "PV^" + std::to_string(k) + " component";
        switch (spec.variant) {
            case FieldVariant::full_BCOV:
                if (!divergence(comp, spec.cy).is_zero())
                    return fail(label + " has nonzero divergence");
                break;
            case FieldVariant::minimal_BCOV:
                if (k >= d) return fail(label + " exceeds polyvector degree " + std::to_string(d - 1));
                if (!divergence(comp, spec.cy).is_zero())
                    return fail(label + " has nonzero divergence");
                break;
            case FieldVariant::extended_minimal_BCOV:
                if (k + 1 == d) {
                    if (!divergence_primitive(comp, spec.cy).has_value())
                        return fail(label + " is not a divergence image");
                } else if (!divergence(comp, spec.cy).is_zero()) {
                    return fail(label + " has nonzero divergence");
                }
                break;
            case FieldVariant::eleven_d:
                break;
        }
    }
    return {true, ""};
}

std::pair<Multivector, Multivector> split_top_degree(const Multivector& m,
                                                     const CalabiYauOrdering& cy) {
    auto ths = cy.thetas();
    uint32_t d = uint32_t(cy.dim());
    if (m.component_theta_count(ths, d) != m)
        throw error("split_top_degree expects a top-polyvector-degree input");
    Multivector kernel_part(*m.reg);
    for (const auto& [ids, c] : m.terms) {
        if (!c.den.free_of_vars(cy.coords))
            throw error("split_top_degree expects polynomial dependence on the cy coordinates");
        Polynomial cn = c.num.part_free_of(cy.coords);
        if (!cn.is_zero()) kernel_part.add_term(ids, RationalFunction(cn, c.den));
    }
    Multivector image_part = divergence(m - kernel_part, cy);
    return {image_part, kernel_part};
}

std::map<std::pair<uint32_t, uint32_t>, Multivector>
decompose_c5(const Multivector& m, const CalabiYauOrdering& cy_uv, const CalabiYauOrdering& cy3) {
    auto th_uv = cy_uv.thetas();
    auto th3 = cy3.thetas();
    std::map<std::pair<uint32_t, uint32_t>, Multivector> out;
    for (const auto& [ids, c] : m.terms) {
        uint32_t a = 0, b = 0;
        for (uint32_t id : ids) {
            if (std::find(th_uv.begin(), th_uv.end(), id) != th_uv.end()) ++a;
            if (std::find(th3.begin(), th3.end(), id) != th3.end()) ++b;
        }
        auto key = std::make_pair(a, b);
        auto it = out.find(key);
        if (it == out.end()) it = out.emplace(key, Multivector(*m.reg)).first;
        it->second.add_term(ids, c);
    }
    return out;
}

} // namespace sdual
