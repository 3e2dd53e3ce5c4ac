#include "sdual/duality.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#ifndef SDUAL_SHARE_DIR
#define SDUAL_SHARE_DIR "share"
#endif

namespace sdual {

int SignConvention::get(const std::string& key) const {
    auto it = entries.find(key);
    if (it == entries.end()) throw error("sign convention entry missing: " + key);
    return it->second;
}

std::string SignConvention::str() const {
    std::ostringstream out;
    for (const auto& [k, v] : entries) out << k << " " << (v >= 0 ? "+1" : "-1") << "\n";
    return out.str();
}

void SignConvention::save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw error("cannot write sign convention file: " + path);
    f << str();
}

SignConvention SignConvention::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("cannot read sign convention file: " + path);
    SignConvention conv;
    std::string key, value;
    while (f >> key >> value) {
        if (value == "+1" || value == "1") conv.entries[key] = 1;
        else if (value == "-1") conv.entries[key] = -1;
        else throw error("bad sign convention value for " + key + ": " + value);
    }
    return conv;
}

std::string sign_convention_path() { return std::string(SDUAL_SHARE_DIR) + "/sign_convention.txt"; }

DualityContext DualityContext::standard() {
    DualityContext ctx;
    ctx.bg = BackgroundDescriptor::parse("R4A x Cx[z] x C[w1,w2]");
    ctx.reg = ctx.bg.build_registry({"eM", "eps"});
    ctx.cy2 = CalabiYauOrdering(ctx.reg, {"w1", "w2"});
    ctx.cy3 = CalabiYauOrdering(ctx.reg, {"z", "w1", "w2"});
    ctx.z = *ctx.reg.find_even("z");
    ctx.theta_z = *ctx.reg.find_odd("Dz");
    ctx.em = *ctx.reg.find_odd("eM");
    ctx.eps = *ctx.reg.find_odd("eps");
    return ctx;
}

namespace {

// (-1)^{odd degree} per term.
Multivector parity_adjust(const Multivector& m) {
    Multivector r(*m.reg);
    for (const auto& [ids, c] : m.terms) r.add_term(ids, ids.size() % 2 == 0 ? c : -c);
    return r;
}

// m = a^g + rest with the factor on the RIGHT: returns (a, rest).
std::pair<Multivector, Multivector> strip_right_factor(const Multivector& m, uint32_t g) {
    Multivector a(*m.reg), rest(*m.reg);
    for (const auto& [ids, c] : m.terms) {
        auto it = std::find(ids.begin(), ids.end(), g);
        if (it == ids.end()) {
            rest.add_term(ids, c);
            continue;
        }
        size_t pos = size_t(it - ids.begin());
        OddMonomial out;
        for (size_t i = 0; i < ids.size(); ++i)
            if (i != pos) out.push_back(ids[i]);
        size_t hops = ids.size() - 1 - pos; // move g past the ids to its right
        a.add_term(out, hops % 2 == 0 ? c : -c);
    }
    return {a, rest};
}

// Right division by the trailing theta block: every term must end with the
// given generators in order.
Multivector strip_trailing(const Multivector& m, const std::vector<uint32_t>& tail) {
    Multivector r(*m.reg);
    for (const auto& [ids, c] : m.terms) {
        if (ids.size() < tail.size() ||
            !std::equal(tail.begin(), tail.end(), ids.end() - long(tail.size())))
            throw error("term lacks the expected trailing polyvector block");
        r.add_term(OddMonomial(ids.begin(), ids.end() - long(tail.size())), c);
    }
    return r;
}

std::pair<Multivector, Multivector> split_coeff_constant(const Multivector& m,
                                                         const std::vector<uint32_t>& vars) {
    Multivector konst(*m.reg), rest(*m.reg);
    for (const auto& [ids, c] : m.terms) {
        if (!c.den.free_of_vars(vars)) throw error("coefficient denominator depends on the split variables");
        Polynomial cnum = c.num.part_free_of(vars);
        if (!cnum.is_zero()) konst.add_term(ids, RationalFunction(cnum, c.den));
        Polynomial rnum = c.num - cnum;
        if (!rnum.is_zero()) rest.add_term(ids, RationalFunction(rnum, c.den));
    }
    return {konst, rest};
}

RationalFunction divide_by_coordinate(const RationalFunction& c, uint32_t var) {
    if (!c.den.free_of_vars({var}))
        throw error("circle coordinate appears in a denominator");
    Polynomial num;
    for (const auto& [mono, coef] : c.num.coeffs) {
        uint32_t deg = 0;
        for (const auto& [v, e] : mono)
            if (v == var) deg = e;
        if (deg != 1)
            throw error("circle component outside the representable span: coefficient is not "
                        "linear in the Laurent coordinate");
        num.add_term(mono_div(mono, {{var, 1}}), coef);
    }
    return RationalFunction(num, c.den);
}

bool has_id(const OddMonomial& ids, uint32_t g) {
    return std::find(ids.begin(), ids.end(), g) != ids.end();
}

void forbid_polyvectors_outside(const Multivector& m, const std::vector<uint32_t>& allowed,
                                const std::string& what) {
    const Registry& reg = *m.reg;
    for (const auto& [ids, c] : m.terms) {
        (void)c;
        for (uint32_t id : ids)
            if (reg.odd(id).kind == OddKind::PolyvectorDir &&
                std::find(allowed.begin(), allowed.end(), id) == allowed.end())
                throw error(what + ": unexpected polyvector leg " + reg.odd_name(id));
    }
}

} // namespace

Multivector t_dual(const Multivector& m, const DualityContext& ctx, TDualDirection dir) {
    Multivector r(ctx.reg);
    for (const auto& [ids, c] : m.terms) {
        if (dir == TDualDirection::BtoA) {
            if (has_id(ids, ctx.eps) || has_id(ids, ctx.em))
                throw error("t_dual BtoA input already carries a circle odd parameter");
            if (has_id(ids, ctx.theta_z)) {
                RationalFunction cc = divide_by_coordinate(c, ctx.z);
                OddMonomial out = ids;
                std::replace(out.begin(), out.end(), ctx.theta_z, ctx.eps);
                r.add_term(out, cc);
            } else {
                if (!c.num.free_of_vars({ctx.z}) || !c.den.free_of_vars({ctx.z}))
                    throw error("circle component outside the representable span: non-constant "
                                "function without z*theta_z");
                r.add_term(ids, c);
            }
        } else {
            if (has_id(ids, ctx.theta_z)) throw error("t_dual AtoB input carries theta_z");
            if (has_id(ids, ctx.em)) throw error("t_dual AtoB input carries eps_M");
            if (!c.num.free_of_vars({ctx.z}) || !c.den.free_of_vars({ctx.z}))
                throw error("t_dual AtoB input depends on the Laurent coordinate");
            if (has_id(ids, ctx.eps)) {
                OddMonomial out = ids;
                std::replace(out.begin(), out.end(), ctx.eps, ctx.theta_z);
                r.add_term(out, c * RationalFunction(Polynomial::variable(ctx.z)));
            } else {
                r.add_term(ids, c);
            }
        }
    }
    return r;
}

Multivector reduce_m(const Multivector& m, const DualityContext& ctx) {
    forbid_polyvectors_outside(m, {}, "reduce_m");
    auto [alpha, beta] = strip_right_factor(m, ctx.em);
    auto [beta_c, beta_rest] = split_coeff_constant(beta, ctx.cy2.coords);
    Multivector th12 = ctx.cy2.omega_inverse();
    Multivector r = alpha;
    r.add(divergence(parity_adjust(beta_rest) * th12, ctx.cy2));
    r.add(beta_c * th12);
    return r;
}

Multivector reduce_m_inverse(const Multivector& m, const DualityContext& ctx) {
    const Registry& reg = ctx.reg;
    auto ths = ctx.cy2.thetas();
    forbid_polyvectors_outside(m, ths, "reduce_m_inverse");
    for (const auto& [ids, c] : m.terms) {
        (void)c;
        if (has_id(ids, ctx.em)) throw error("reduce_m_inverse input already carries eps_M");
    }
    (void)reg;
    Multivector em_gen = Multivector::generator(ctx.reg, ctx.em);
    Multivector out(ctx.reg);

    Multivector k0 = m.component_theta_count(ths, 0);
    out.add(k0 * em_gen);

    Multivector k1 = m.component_theta_count(ths, 1);
    if (!k1.is_zero()) {
        Multivector adjusted = -parity_adjust(k1);
        auto prim = divergence_primitive(adjusted, ctx.cy2);
        if (!prim)
            throw error("reduce_m_inverse: PV^1 part is not divergence-exact "
                        "(nonzero divergence obstruction)");
        out.add(strip_trailing(*prim, ths));
    }

    Multivector k2 = m.component_theta_count(ths, 2);
    if (!k2.is_zero()) {
        for (const auto& [ids, c] : k2.terms) {
            (void)ids;
            if (!c.num.free_of_vars(ctx.cy2.coords) || !c.den.free_of_vars(ctx.cy2.coords))
                throw error("reduce_m_inverse: top component has non-constant coefficient");
        }
        out.add(strip_trailing(k2, ths));
    }
    return out;
}

Multivector s_generator(const Multivector& m, const DualityContext& ctx) {
    Multivector r(ctx.reg);
    for (const auto& [ids, c] : m.terms) {
        OddMonomial out = ids;
        int sign = 1;
        for (auto& id : out) {
            if (id == ctx.em) { id = ctx.eps; sign = -sign; }
            else if (id == ctx.eps) id = ctx.em;
        }
        r.add_term(out, sign == 1 ? c : -c);
    }
    return r;
}

Multivector sdual_composite(const Multivector& m, const DualityContext& ctx) {
    Multivector a = t_dual(m, ctx, TDualDirection::BtoA);
    Multivector b = reduce_m_inverse(a, ctx);
    Multivector c = s_generator(b, ctx);
    Multivector d = reduce_m(c, ctx);
    return t_dual(d, ctx, TDualDirection::AtoB);
}

namespace {

void trace_add(CaseTrace* trace, const std::string& label, const Multivector& comp) {
    if (trace) trace->entries.emplace_back(label, comp.str());
}

Multivector closed_form_cc2(const Multivector& m, const DualityContext& ctx,
                            const SignConvention&, CaseTrace* trace) {
    auto ths = ctx.cy2.thetas();
    Multivector th12 = ctx.cy2.omega_inverse();
    Multivector zdz = Multivector::variable(ctx.reg, ctx.z) *
                      Multivector::generator(ctx.reg, ctx.theta_z);
    Multivector out(ctx.reg);

    Multivector no_z(ctx.reg), with_z(ctx.reg);
    for (const auto& [ids, c] : m.terms)
        (has_id(ids, ctx.theta_z) ? with_z : no_z).add_term(ids, c);

    // 1 (x) PV^0: split constant/non-constant before applying the case map.
    Multivector f = no_z.component_theta_count(ths, 0);
    if (!f.is_zero()) {
        auto [fc, frest] = split_coeff_constant(f, ctx.cy2.coords);
        if (!frest.is_zero()) {
            trace_add(trace, "pv0 nonzero divergence", frest);
            out.add(-(zdz * divergence(frest * th12, ctx.cy2)));
        }
        if (!fc.is_zero()) {
            trace_add(trace, "pv0 constant", fc);
            out.add(-(zdz * (fc * th12)));
        }
    }

    // 1 (x) PV^1: identity.
    Multivector v1 = no_z.component_theta_count(ths, 1);
    if (!v1.is_zero()) {
        trace_add(trace, "identity", v1);
        out.add(v1);
    }

    // 1 (x) PV^2: identity on constant coefficients only.
    Multivector v2 = no_z.component_theta_count(ths, 2);
    if (!v2.is_zero()) {
        for (const auto& [ids, c] : v2.terms) {
            (void)ids;
            if (!c.num.free_of_vars(ctx.cy2.coords) || !c.den.free_of_vars(ctx.cy2.coords))
                throw error("closed form: top bivector component with non-constant coefficient "
                            "is outside the definable domain");
        }
        trace_add(trace, "identity", v2);
        out.add(v2);
    }

    if (!with_z.is_zero()) {
        auto [a, none] = with_z.split_leading(ctx.theta_z);
        (void)none;
        Multivector mu(ctx.reg);
        for (const auto& [ids, c] : a.terms) mu.add_term(ids, divide_by_coordinate(c, ctx.z));

        Multivector mu0 = mu.component_theta_count(ths, 0);
        if (!mu0.is_zero()) {
            trace_add(trace, "identity", Multivector::generator(ctx.reg, ctx.theta_z) *
                                             (mu0 * RationalFunction(Polynomial::variable(ctx.z))));
            out.add(zdz * mu0);
        }

        Multivector mu1 = mu.component_theta_count(ths, 1);
        if (!mu1.is_zero()) {
            trace_add(trace, "zpv1 primitive", mu1);
            auto prim = divergence_primitive(mu1, ctx.cy2);
            if (!prim) throw error("closed form: z*theta_z (x) PV^1 part is not divergence-exact");
            out.add(strip_trailing(*prim, ths));
        }

        Multivector mu2 = mu.component_theta_count(ths, 2);
        if (!mu2.is_zero()) {
            for (const auto& [ids, c] : mu2.terms) {
                (void)ids;
                if (!c.num.free_of_vars(ctx.cy2.coords) || !c.den.free_of_vars(ctx.cy2.coords))
                    throw error("closed form: z*theta_z (x) PV^2 part with non-constant "
                                "coefficient is outside the definable domain");
            }
            trace_add(trace, "zpv2 extraction", mu2);
            out.add(strip_trailing(mu2, ths));
        }
    }
    return out;
}

Multivector closed_form_c3z4(const Multivector& m, const DualityContext& ctx,
                             const SignConvention& conv, CaseTrace* trace) {
    const Registry& reg = ctx.reg;
    auto ths = ctx.cy3.thetas();
    forbid_polyvectors_outside(m, ths, "closed form (C^3)");
    // Antiholomorphic coefficients and (0,*)-form legs ride along untouched;
    // abstract odd directions have no meaning here.
    for (const auto& [ids, c] : m.terms) {
        (void)c;
        for (uint32_t id : ids)
            if (reg.odd(id).kind == OddKind::Abstract)
                throw error("closed form (C^3): abstract odd directions not allowed");
    }
    if (!divergence(m, ctx.cy3).is_zero())
        throw error("closed form (C^3): input is not divergence-closed");

    Multivector omega_inv = ctx.cy3.omega_inverse();
    Multivector out(ctx.reg);

    Multivector mu0 = m.component_theta_count(ths, 0);
    if (!mu0.is_zero()) {
        auto [c0, rest] = split_coeff_constant(mu0, ctx.cy3.coords);
        if (!rest.is_zero()) {
            trace_add(trace, "pv0 nonzero divergence", rest);
            Multivector val = -divergence(rest * omega_inv, ctx.cy3);
            out.add(conv.get("c3z4.pv0") == 1 ? val : -val);
        }
        if (!c0.is_zero()) {
            trace_add(trace, "pv0 constant", c0);
            Multivector val = -(c0 * omega_inv);
            out.add(conv.get("c3z4.pv0_const") == 1 ? val : -val);
        }
    }

    Multivector mu1 = m.component_theta_count(ths, 1);
    if (!mu1.is_zero()) {
        trace_add(trace, "identity", mu1);
        out.add(conv.get("c3z4.pv1") == 1 ? mu1 : -mu1);
    }

    Multivector mu2 = m.component_theta_count(ths, 2);
    if (!mu2.is_zero()) {
        trace_add(trace, "pv2 primitive", mu2);
        auto prim = divergence_primitive(mu2, ctx.cy3);
        if (!prim) throw error("closed form (C^3): PV^2 part is not divergence-exact");
        Multivector F = strip_trailing(*prim, ths);
        out.add(conv.get("c3z4.pv2") == 1 ? F : -F);
    }

    Multivector mu3 = m.component_theta_count(ths, 3);
    if (!mu3.is_zero()) {
        trace_add(trace, "pv3 volume pairing", mu3);
        Multivector val = contract_with_cy(mu3, ctx.cy3);
        out.add(conv.get("c3z4.pv3") == 1 ? val : -val);
    }
    return out;
}

} // namespace

Multivector sdual_closed_form(const Multivector& m, const DualityContext& ctx, SDualMode mode,
                              const SignConvention& conv, CaseTrace* trace) {
    if (mode == SDualMode::c_times_c2) return closed_form_cc2(m, ctx, conv, trace);
    return closed_form_c3z4(m, ctx, conv, trace);
}

Multivector poisson_bracket(const Multivector& a, const Multivector& b,
                            const CalabiYauOrdering& cy) {
    if (cy.dim() != 2) throw error("poisson_bracket needs the holomorphic symplectic C^2 factor");
    uint32_t w1 = cy.coords[0], w2 = cy.coords[1];
    return a.even_derivative(w1) * b.even_derivative(w2) -
           a.even_derivative(w2) * b.even_derivative(w1);
}

Multivector bracket_11d(const Multivector& x, const Multivector& y, const DualityContext& ctx) {
    // Function-coefficient model of the 11d L_infinity bracket.
    auto [x1, x0] = strip_right_factor(x, ctx.em);
    auto [y1, y0] = strip_right_factor(y, ctx.em);
    Multivector em_gen = Multivector::generator(ctx.reg, ctx.em);
    Multivector r = poisson_bracket(x0, y0, ctx.cy2);
    r.add(poisson_bracket(x1, y0, ctx.cy2) * em_gen);
    r.add(poisson_bracket(x0, y1, ctx.cy2) * em_gen);
    return r;
}

Multivector negate_odd_directions(const Multivector& m, const std::vector<uint32_t>& odds) {
    Multivector r(*m.reg);
    for (const auto& [ids, c] : m.terms) {
        size_t n = 0;
        for (uint32_t id : ids)
            if (std::find(odds.begin(), odds.end(), id) != odds.end()) ++n;
        r.add_term(ids, n % 2 == 0 ? c : -c);
    }
    return r;
}

namespace {

int fit_sign(const Multivector& target, const Multivector& raw, const std::string& what) {
    if (target == raw) return 1;
    if (target == -raw) return -1;
    throw error("calibration mismatch beyond a sign for " + what + ": composite " +
                target.str() + " vs closed " + raw.str());
}

// Divides z out of every theta_z term (comparison map between the Laurent
// composite and the C^3 closed form).
Multivector strip_laurent(const Multivector& m, const DualityContext& ctx) {
    Multivector r(ctx.reg);
    for (const auto& [ids, c] : m.terms)
        r.add_term(ids, has_id(ids, ctx.theta_z) ? divide_by_coordinate(c, ctx.z) : c);
    return r;
}

Multivector lift_laurent(const Multivector& m, const DualityContext& ctx) {
    Multivector r(ctx.reg);
    RationalFunction zc{Polynomial::variable(ctx.z)};
    for (const auto& [ids, c] : m.terms)
        r.add_term(ids, has_id(ids, ctx.theta_z) ? c * zc : c);
    return r;
}

} // namespace

SignConvention calibrate_signs() {
    DualityContext ctx = DualityContext::standard();
    SignConvention unit;
    for (const char* k : {"c3z4.pv0", "c3z4.pv0_const", "c3z4.pv1", "c3z4.pv2", "c3z4.pv3"})
        unit.entries[k] = 1;

    auto gen = [&](const char* n) { return Multivector::generator(ctx.reg, *ctx.reg.find_odd(n)); };
    auto var = [&](const char* n) { return Multivector::variable(ctx.reg, *ctx.reg.find_even(n)); };
    Multivector one = Multivector::scalar(ctx.reg, Scalar(1));
    Multivector zdz = var("z") * gen("Dz");

    SignConvention conv;
    auto fit_cc2 = [&](const std::string& key, const Multivector& x) {
        Multivector raw = sdual_closed_form(x, ctx, SDualMode::c_times_c2, unit);
        conv.entries[key] = fit_sign(sdual_composite(x, ctx), raw, key);
    };
    fit_cc2("cc2.pv0", var("w1"));
    fit_cc2("cc2.pv0_const", one);
    fit_cc2("cc2.pv1", gen("Dw2"));
    fit_cc2("cc2.pv2_const", gen("Dw1") * gen("Dw2"));
    fit_cc2("cc2.zpv0", zdz * var("w2"));
    fit_cc2("cc2.zpv1", zdz * gen("Dw2"));
    fit_cc2("cc2.zpv2", zdz * gen("Dw1") * gen("Dw2"));

    auto fit_c3 = [&](const std::string& key, const Multivector& x) {
        Multivector raw = sdual_closed_form(x, ctx, SDualMode::c3_z4, unit);
        Multivector target = strip_laurent(sdual_composite(lift_laurent(x, ctx), ctx), ctx);
        conv.entries[key] = fit_sign(target, raw, key);
    };
    fit_c3("c3z4.pv0", var("w1"));
    fit_c3("c3z4.pv0_const", one);
    fit_c3("c3z4.pv1", gen("Dw2"));
    fit_c3("c3z4.pv2", gen("Dz") * gen("Dw2"));
    fit_c3("c3z4.pv3", gen("Dz") * gen("Dw1") * gen("Dw2"));
    return conv;
}

} // namespace sdual
