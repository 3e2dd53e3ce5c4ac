#include "sdual/poly.hpp"

#include <algorithm>
#include <sstream>

namespace sdual {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else {
            r.emplace_back(a[i].first, std::min(a[i].second, b[j].second));
            ++i;
            ++j;
        }
    }
    return r;
}

bool mono_divides(const Monomial& b, const Monomial& a) {
    size_t i = 0;
    for (const auto& [var, exp] : b) {
        while (i < a.size() && a[i].first < var) ++i;
        if (i == a.size() || a[i].first != var || a[i].second < exp) return false;
    }
    return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    if (!mono_divides(b, a)) throw error("monomial division is not exact");
    Monomial r;
    size_t j = 0;
    for (const auto& [var, exp] : a) {
        uint32_t sub = 0;
        while (j < b.size() && b[j].first < var) ++j;
        if (j < b.size() && b[j].first == var) sub = b[j].second;
        if (exp > sub) r.emplace_back(var, exp - sub);
    }
    return r;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(m);
    if (it == coeffs.end()) {
        coeffs.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : coeffs) r.coeffs.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.coeffs) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.coeffs) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : coeffs)
        for (const auto& [mb, cb] : o.coeffs) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : coeffs) r.coeffs.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::derivative(uint32_t var) const {
    Polynomial r;
    for (const auto& [m, c] : coeffs) {
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i].first != var) continue;
            Monomial d = m;
            Scalar k = c * Scalar(long(m[i].second));
            if (d[i].second == 1) d.erase(d.begin() + i);
            else d[i].second -= 1;
            r.add_term(d, k);
            break;
        }
    }
    return r;
}

Polynomial Polynomial::integral(uint32_t var) const {
    Polynomial r;
    for (const auto& [m, c] : coeffs) {
        Monomial d = m;
        bool found = false;
        for (size_t i = 0; i < d.size(); ++i) {
            if (d[i].first == var) {
                d[i].second += 1;
                r.add_term(d, c * Scalar(mpq_class(1, d[i].second)));
                found = true;
                break;
            }
        }
        if (!found) {
            Monomial e;
            bool inserted = false;
            for (const auto& p : d) {
                if (!inserted && p.first > var) {
                    e.emplace_back(var, 1);
                    inserted = true;
                }
                e.push_back(p);
            }
            if (!inserted) e.emplace_back(var, 1);
            r.add_term(e, c);
        }
    }
    return r;
}

Polynomial Polynomial::at_zero(uint32_t var) const {
    Polynomial r;
    for (const auto& [m, c] : coeffs) {
        bool has = false;
        for (const auto& p : m)
            if (p.first == var) { has = true; break; }
        if (!has) r.coeffs.emplace(m, c);
    }
    return r;
}

bool Polynomial::depends_on(uint32_t var) const {
    for (const auto& [m, c] : coeffs)
        for (const auto& p : m)
            if (p.first == var) return true;
    return false;
}

uint32_t Polynomial::degree_in(uint32_t var) const {
    uint32_t d = 0;
    for (const auto& [m, c] : coeffs)
        for (const auto& p : m)
            if (p.first == var) d = std::max(d, p.second);
    return d;
}

uint32_t Polynomial::degree_in_vars(const std::vector<uint32_t>& vars) const {
    uint32_t d = 0;
    for (const auto& [m, c] : coeffs) {
        uint32_t t = 0;
        for (const auto& p : m)
            if (std::find(vars.begin(), vars.end(), p.first) != vars.end()) t += p.second;
        d = std::max(d, t);
    }
    return d;
}

bool Polynomial::free_of_vars(const std::vector<uint32_t>& vars) const {
    for (const auto& [m, c] : coeffs)
        for (const auto& p : m)
            if (std::find(vars.begin(), vars.end(), p.first) != vars.end()) return false;
    return true;
}

Polynomial Polynomial::part_free_of(const std::vector<uint32_t>& vars) const {
    Polynomial r;
    for (const auto& [m, c] : coeffs) {
        bool has = false;
        for (const auto& p : m)
            if (std::find(vars.begin(), vars.end(), p.first) != vars.end()) { has = true; break; }
        if (!has) r.coeffs.emplace(m, c);
    }
    return r;
}

std::pair<Monomial, Scalar> Polynomial::leading() const {
    if (coeffs.empty()) throw error("leading term of zero polynomial");
    auto it = coeffs.rbegin();
    return {it->first, it->second};
}

Monomial Polynomial::content_monomial() const {
    if (coeffs.empty()) return {};
    Monomial g = coeffs.begin()->first;
    for (const auto& [m, c] : coeffs) {
        g = mono_gcd(g, m);
        if (g.empty()) break;
    }
    return g;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
    Polynomial r;
    for (const auto& [k, c] : coeffs) r.coeffs.emplace(mono_div(k, m), c);
    return r;
}

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) return std::nullopt;
    Polynomial q, r = a;
    auto [lbm, lbc] = b.leading();
    // Bail out if the reduction does not terminate quickly.
    size_t steps = 0, limit = 4 * (a.coeffs.size() + 4) * (b.coeffs.size() + 4);
    while (!r.is_zero()) {
        if (++steps > limit) return std::nullopt;
        auto [lrm, lrc] = r.leading();
        if (!mono_divides(lbm, lrm)) return std::nullopt;
        Monomial qm = mono_div(lrm, lbm);
        Scalar qc = lrc / lbc;
        Polynomial t;
        t.coeffs.emplace(qm, qc);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

std::string Polynomial::str(const std::function<std::string(uint32_t)>& var_name) const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : coeffs) {
        std::string cs = c.str();
        bool neg = !first && cs.size() && cs[0] == '-' && !c.needs_parens();
        if (!first) out << (neg ? " - " : " + ");
        if (neg) cs = cs.substr(1);
        if (c.needs_parens()) cs = "(" + cs + ")";
        if (m.empty()) {
            out << cs;
        } else {
            bool unit = (cs == "1");
            if (cs == "-1") { out << "-"; unit = true; }
            if (!unit) out << cs << "*";
            bool firstv = true;
            for (const auto& [var, exp] : m) {
                if (!firstv) out << "*";
                firstv = false;
                out << var_name(var);
                if (exp > 1) out << "^" << exp;
            }
        }
        first = false;
    }
    return out.str();
}

RationalFunction::RationalFunction(const Polynomial& n, const Polynomial& d) : num(n), den(d) {
    if (den.is_zero()) throw error("zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num.is_zero()) {
        den = Polynomial(Scalar(1));
        return;
    }
    if (!den.is_constant()) {
        Monomial g = mono_gcd(num.content_monomial(), den.content_monomial());
        if (!g.empty()) {
            num = num.divide_monomial(g);
            den = den.divide_monomial(g);
        }
        if (auto q = Polynomial::try_divide(num, den)) {
            num = *q;
            den = Polynomial(Scalar(1));
        }
    }
    Scalar lc = den.leading().second;
    if (!lc.is_one()) {
        Scalar inv = lc.inverse();
        num = num * inv;
        den = den * inv;
    }
}

Scalar RationalFunction::constant_value() const {
    if (!is_constant()) throw error("rational function is not constant");
    if (num.is_zero()) return Scalar();
    return num.constant_coefficient() / den.constant_coefficient();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num = -num;
    r.den = den;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (den == o.den) return RationalFunction(num + o.num, den);
    return RationalFunction(num * o.den + o.num * den, den * o.den);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    if (den == o.den) return RationalFunction(num - o.num, den);
    return RationalFunction(num * o.den - o.num * den, den * o.den);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num * o.num, den * o.den);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw error("division by zero rational function");
    return RationalFunction(num * o.den, den * o.num);
}

RationalFunction RationalFunction::operator*(const Scalar& c) const {
    RationalFunction r;
    r.num = num * c;
    r.den = r.num.is_zero() ? Polynomial(Scalar(1)) : den;
    return r;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num * o.den == o.num * den;
}

RationalFunction RationalFunction::derivative(uint32_t var) const {
    if (is_polynomial()) {
        RationalFunction r;
        r.num = num.derivative(var) * den.constant_coefficient().inverse();
        return r;
    }
    return RationalFunction(num.derivative(var) * den - num * den.derivative(var), den * den);
}

std::string RationalFunction::str(const std::function<std::string(uint32_t)>& var_name) const {
    if (is_polynomial()) {
        Scalar d = den.constant_coefficient();
        Polynomial p = d.is_one() ? num : num * d.inverse();
        return p.str(var_name);
    }
    return "(" + num.str(var_name) + ")/(" + den.str(var_name) + ")";
}

} // namespace sdual
