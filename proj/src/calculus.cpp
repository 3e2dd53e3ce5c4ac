#include "sdual/calculus.hpp"

#include <algorithm>
#include <map>

namespace sdual {

CalabiYauOrdering::CalabiYauOrdering(const Registry& r, const std::vector<std::string>& names)
    : reg(&r) {
    for (const auto& n : names) {
        auto id = r.find_even(n);
        if (!id) throw error("unknown coordinate in volume-form ordering: " + n);
        if (!r.theta_of(*id)) throw error("coordinate has no polyvector direction: " + n);
        coords.push_back(*id);
    }
}

std::vector<uint32_t> CalabiYauOrdering::thetas() const {
    std::vector<uint32_t> t;
    for (uint32_t c : coords) t.push_back(*reg->theta_of(c));
    return t;
}

std::vector<uint32_t> CalabiYauOrdering::form_legs() const {
    std::vector<uint32_t> t;
    for (uint32_t c : coords) {
        auto f = reg->form_leg_of(c);
        if (!f) throw error("coordinate has no form leg: " + reg->even_name(c));
        t.push_back(*f);
    }
    return t;
}

Multivector CalabiYauOrdering::omega() const {
    Multivector m(*reg);
    m.add_term(form_legs(), RationalFunction(Scalar(1)));
    return m;
}

Multivector CalabiYauOrdering::omega_inverse() const {
    Multivector m(*reg);
    m.add_term(thetas(), RationalFunction(Scalar(1)));
    return m;
}

Multivector dolbeault(const Multivector& m) {
    const Registry& reg = *m.reg;
    Multivector r(reg);
    for (const auto& v : reg.evens) {
        if (v.kind != EvenKind::AntiHolCoord) continue;
        auto db = reg.antiform_of(v.id);
        if (!db) continue;
        r.add(Multivector::generator(reg, *db) * m.even_derivative(v.id));
    }
    return r;
}

Multivector divergence(const Multivector& m, const CalabiYauOrdering& cy) {
    const Registry& reg = *m.reg;
    auto ths = cy.thetas();
    for (const auto& [ids, c] : m.terms)
        for (uint32_t id : ids)
            if (reg.odd(id).kind == OddKind::PolyvectorDir &&
                std::find(ths.begin(), ths.end(), id) == ths.end())
                throw error("polyvector leg outside the volume-form ordering: " +
                            reg.odd_name(id));
    Multivector r(reg);
    for (size_t i = 0; i < cy.coords.size(); ++i)
        r.add(m.odd_derivation(ths[i]).even_derivative(cy.coords[i]));
    return r;
}

Multivector del_holomorphic(const Multivector& m, const CalabiYauOrdering& cy) {
    const Registry& reg = *m.reg;
    auto legs = cy.form_legs();
    Multivector r(reg);
    for (size_t i = 0; i < cy.coords.size(); ++i)
        r.add(Multivector::generator(reg, legs[i]) * m.even_derivative(cy.coords[i]));
    return r;
}

Multivector sn_bracket(const Multivector& a, const Multivector& b, const CalabiYauOrdering& cy) {
    if (!a.is_homogeneous())
        throw error("sn_bracket needs a first argument homogeneous in total odd degree");
    uint32_t da = a.total_degree();
    Multivector r = divergence(a * b, cy);
    r.add(-(divergence(a, cy) * b));
    Multivector last = a * divergence(b, cy);
    if (da % 2 == 0) r.add(-last);
    else r.add(last);
    return r;
}

Multivector sn_bracket_lie(const Multivector& a, const Multivector& b,
                           const CalabiYauOrdering& cy) {
    Multivector p = sn_bracket(a, b, cy);
    // classical Schouten = -(-1)^{|a|} * (divergence-generated bracket)
    if (a.is_zero()) return p;
    return a.total_degree() % 2 == 0 ? -p : p;
}

namespace {

// Splits sorted `ids` into (rest, tail) where tail = ids in `tail_set`, and
// returns the Koszul sign of permuting ids into [rest..., tail...] with both
// relative orders preserved.
int extract_tail(const OddMonomial& ids, const std::vector<uint32_t>& tail_set,
                 OddMonomial& rest, OddMonomial& tail) {
    rest.clear();
    tail.clear();
    int sign = 1;
    size_t swaps = 0;
    size_t rest_after = 0;
    // Walk right to left: each tail element hops over the rest elements to
    // its right.
    for (size_t i = ids.size(); i-- > 0;) {
        bool in_tail = std::find(tail_set.begin(), tail_set.end(), ids[i]) != tail_set.end();
        if (in_tail) swaps += rest_after;
        else ++rest_after;
    }
    if (swaps % 2) sign = -1;
    for (uint32_t id : ids) {
        if (std::find(tail_set.begin(), tail_set.end(), id) != tail_set.end()) tail.push_back(id);
        else rest.push_back(id);
    }
    return sign;
}

// Contraction of the theta tail (ascending ids, rightmost acts first) into
// the Omega form list; returns remaining form legs (cy order) and the sign.
int contract_tail(const CalabiYauOrdering& cy, const OddMonomial& theta_tail,
                  std::vector<uint32_t>& forms_out) {
    auto ths = cy.thetas();
    auto legs = cy.form_legs();
    std::vector<uint32_t> forms = legs;
    int sign = 1;
    for (size_t i = theta_tail.size(); i-- > 0;) {
        uint32_t th = theta_tail[i];
        size_t pos = std::find(ths.begin(), ths.end(), th) - ths.begin();
        if (pos == ths.size()) throw error("theta leg outside volume-form ordering");
        auto it = std::find(forms.begin(), forms.end(), legs[pos]);
        if (it == forms.end()) return 0;
        size_t fpos = size_t(it - forms.begin());
        if (fpos % 2) sign = -sign;
        forms.erase(it);
    }
    forms_out = forms;
    return sign;
}

struct VeeTable {
    // Remaining-form list (cy order) -> (theta tail ascending, sign).
    std::map<std::vector<uint32_t>, std::pair<OddMonomial, int>> by_forms;
};

VeeTable build_vee_table(const CalabiYauOrdering& cy) {
    VeeTable t;
    auto ths = cy.thetas();
    size_t d = ths.size();
    for (uint32_t mask = 0; mask < (1u << d); ++mask) {
        OddMonomial tail;
        for (size_t i = 0; i < d; ++i)
            if (mask & (1u << i)) tail.push_back(ths[i]);
        std::sort(tail.begin(), tail.end());
        std::vector<uint32_t> forms;
        int sign = contract_tail(cy, tail, forms);
        if (sign == 0) throw error("internal: degenerate contraction");
        t.by_forms[forms] = {tail, sign};
    }
    return t;
}

} // namespace

Multivector contract_with_cy(const Multivector& m, const CalabiYauOrdering& cy) {
    auto ths = cy.thetas();
    Multivector r(*m.reg);
    for (const auto& [ids, c] : m.terms) {
        OddMonomial rest, tail;
        int s1 = extract_tail(ids, ths, rest, tail);
        std::vector<uint32_t> forms;
        int s2 = contract_tail(cy, tail, forms);
        OddMonomial out = rest;
        out.insert(out.end(), forms.begin(), forms.end());
        r.add_term(out, (s1 * s2) == 1 ? c : -c);
    }
    return r;
}

Multivector contract_with_cy_inverse(const Multivector& m, const CalabiYauOrdering& cy) {
    auto legs = cy.form_legs();
    VeeTable table = build_vee_table(cy);
    Multivector r(*m.reg);
    for (const auto& [ids, c] : m.terms) {
        OddMonomial rest, tail;
        int s1 = extract_tail(ids, legs, rest, tail);
        // Tail must match cy order of the remaining-form key.
        std::vector<uint32_t> key;
        for (uint32_t leg : legs)
            if (std::find(tail.begin(), tail.end(), leg) != tail.end()) key.push_back(leg);
        // Reordering ascending tail into cy order costs a sign.
        OddMonomial perm = tail;
        int s_perm = 1;
        {
            // Count inversions between ascending order and cy order.
            std::vector<size_t> pos;
            for (uint32_t leg : tail)
                pos.push_back(size_t(std::find(key.begin(), key.end(), leg) - key.begin()));
            for (size_t i = 0; i < pos.size(); ++i)
                for (size_t j = i + 1; j < pos.size(); ++j)
                    if (pos[i] > pos[j]) s_perm = -s_perm;
        }
        (void)perm;
        auto it = table.by_forms.find(key);
        if (it == table.by_forms.end())
            throw error("form legs do not match the volume-form ordering");
        const auto& [theta_tail, s2] = it->second;
        OddMonomial out = rest;
        out.insert(out.end(), theta_tail.begin(), theta_tail.end());
        int s = s1 * s_perm * s2;
        r.add_term(out, s == 1 ? c : -c);
    }
    return r;
}

Multivector iota_pi(const Multivector& m, const Multivector& pi) {
    const Registry& reg = *m.reg;
    Multivector r(reg);
    auto contract_one = [&reg](const Multivector& x, uint32_t theta) {
        uint32_t coord = uint32_t(reg.odd(theta).coord);
        auto leg = reg.form_leg_of(coord);
        if (!leg) throw error("no form leg for contraction");
        Multivector out(*x.reg);
        for (const auto& [ids, c] : x.terms) {
            auto it = std::find(ids.begin(), ids.end(), *leg);
            if (it == ids.end()) continue;
            size_t pos = size_t(it - ids.begin());
            OddMonomial rest;
            for (size_t i = 0; i < ids.size(); ++i)
                if (i != pos) rest.push_back(ids[i]);
            out.add_term(rest, (pos % 2 == 0) ? c : -c);
        }
        return out;
    };
    for (const auto& [ids, c] : pi.terms) {
        if (ids.size() != 2 || !c.is_constant())
            throw error("iota_pi expects a constant bivector");
        if (pi.reg->odd(ids[0]).kind != OddKind::PolyvectorDir ||
            pi.reg->odd(ids[1]).kind != OddKind::PolyvectorDir)
            throw error("iota_pi expects polyvector legs");
        Multivector piece = contract_one(contract_one(m, ids[1]), ids[0]);
        r.add(piece * c.constant_value());
    }
    return r;
}

namespace {

Multivector symplectic_swap(const Multivector& m, const CalabiYauOrdering& cy, bool raise) {
    if (cy.dim() != 2) throw error("symplectic identification needs a 2-dim factor");
    const Registry& reg = *m.reg;
    auto ths = cy.thetas();
    auto legs = cy.form_legs();
    // raise: th1 -> +leg2, th2 -> -leg1;  lower: leg2 -> +th1, leg1 -> -th2.
    Multivector r(reg);
    for (const auto& [ids, c] : m.terms) {
        OddMonomial out = ids;
        int sign = 1;
        for (auto& id : out) {
            if (raise) {
                if (id == ths[0]) id = legs[1];
                else if (id == ths[1]) { id = legs[0]; sign = -sign; }
            } else {
                if (id == legs[1]) id = ths[0];
                else if (id == legs[0]) { id = ths[1]; sign = -sign; }
            }
        }
        r.add_term(out, sign == 1 ? c : -c);
    }
    return r;
}

} // namespace

Multivector symplectic_raise(const Multivector& m, const CalabiYauOrdering& cy) {
    return symplectic_swap(m, cy, true);
}

Multivector symplectic_lower(const Multivector& m, const CalabiYauOrdering& cy) {
    return symplectic_swap(m, cy, false);
}

Multivector del_pv_omega(const Multivector& m, const CalabiYauOrdering& cy) {
    return symplectic_raise(divergence(symplectic_lower(m, cy), cy), cy);
}

Multivector twisted_differential(const Multivector& m, const Multivector& pi,
                                 const CalabiYauOrdering& cy) {
    for (const auto& [ids, c] : pi.terms)
        if (ids.size() != 2 || !c.is_constant())
            throw error("twist bivector must be constant of polyvector degree 2");
    if (!sn_bracket(pi, pi, cy).is_zero()) throw error("twist bivector is not square-zero");
    Multivector r = dolbeault(m);
    r.add(sn_bracket(pi, m, cy));
    return r;
}

namespace {

// Euler-homotopy primitive for the holomorphic de Rham differential in the
// cy coordinates: d(h(omega)) + h(d(omega)) = omega on pieces with positive
// cy-degree (monomial degree + form degree).
Multivector poincare_primitive(const Multivector& w, const CalabiYauOrdering& cy) {
    const Registry& reg = *w.reg;
    auto legs = cy.form_legs();
    Multivector r(reg);
    for (const auto& [ids, c] : w.terms) {
        if (!c.is_polynomial() && !c.den.free_of_vars(cy.coords))
            throw error("primitive solver needs coefficients polynomial in the cy coordinates");
        std::vector<size_t> leg_positions;
        for (size_t i = 0; i < ids.size(); ++i)
            if (std::find(legs.begin(), legs.end(), ids[i]) != legs.end())
                leg_positions.push_back(i);
        uint32_t p = uint32_t(leg_positions.size());
        if (p == 0) continue;
        for (const auto& [mono, coef] : c.num.coeffs) {
            uint32_t degcy = 0;
            for (const auto& [var, exp] : mono)
                if (std::find(cy.coords.begin(), cy.coords.end(), var) != cy.coords.end())
                    degcy += exp;
            Scalar scale = Scalar(1) / Scalar(long(degcy + p));
            for (size_t pos : leg_positions) {
                uint32_t coord = uint32_t(reg.odd(ids[pos]).coord);
                OddMonomial rest;
                for (size_t i = 0; i < ids.size(); ++i)
                    if (i != pos) rest.push_back(ids[i]);
                Polynomial mon;
                mon.coeffs.emplace(mono_mul(mono, {{coord, 1}}), coef * scale);
                int sign = (pos % 2 == 0) ? 1 : -1;
                // The leg count before this one among cy legs does not
                // matter: the left-derivation sign is the full position.
                RationalFunction piece(mon, c.den);
                r.add_term(rest, sign == 1 ? piece : -piece);
            }
        }
    }
    return r;
}

} // namespace

std::optional<Multivector> divergence_primitive(const Multivector& mu,
                                                const CalabiYauOrdering& cy) {
    if (mu.is_zero()) return Multivector::zero(*mu.reg);
    // The divergence matches the Omega-conjugated de Rham differential only
    // up to a degree-dependent sign, so solve per polyvector degree.
    auto ths = cy.thetas();
    Multivector result(*mu.reg);
    for (uint32_t k = 0; k <= mu.max_theta_count(ths); ++k) {
        Multivector comp = mu.component_theta_count(ths, k);
        if (comp.is_zero()) continue;
        Multivector w = contract_with_cy(comp, cy);
        Multivector cand = contract_with_cy_inverse(poincare_primitive(w, cy), cy);
        if (divergence(cand, cy) == comp) {
            result.add(cand);
        } else if (divergence(-cand, cy) == comp) {
            result.add(-cand);
        } else {
            return std::nullopt;
        }
    }
    return result;
}

} // namespace sdual
