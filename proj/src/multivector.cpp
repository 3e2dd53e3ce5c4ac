#include "sdual/multivector.hpp"

#include <algorithm>
#include <sstream>

namespace sdual {

int sort_with_sign(OddMonomial& ids) {
    int sign = 1;
    // Insertion sort; counts transpositions exactly.
    for (size_t i = 1; i < ids.size(); ++i) {
        uint32_t v = ids[i];
        size_t j = i;
        while (j > 0 && ids[j - 1] > v) {
            ids[j] = ids[j - 1];
            --j;
            sign = -sign;
        }
        ids[j] = v;
    }
    for (size_t i = 1; i < ids.size(); ++i)
        if (ids[i] == ids[i - 1]) return 0;
    return sign;
}

Multivector Multivector::scalar(const Registry& r, const Scalar& c) {
    Multivector m(r);
    if (!c.is_zero()) m.terms[{}] = RationalFunction(c);
    return m;
}

Multivector Multivector::coefficient(const Registry& r, const RationalFunction& c) {
    Multivector m(r);
    if (!c.is_zero()) m.terms[{}] = c;
    return m;
}

Multivector Multivector::variable(const Registry& r, uint32_t even_id) {
    Multivector m(r);
    m.terms[{}] = RationalFunction(Polynomial::variable(even_id));
    return m;
}

Multivector Multivector::generator(const Registry& r, uint32_t odd_id) {
    Multivector m(r);
    m.terms[{odd_id}] = RationalFunction(Scalar(1));
    return m;
}

void Multivector::add_term(const OddMonomial& raw_ids, const RationalFunction& coeff) {
    if (coeff.is_zero()) return;
    OddMonomial ids = raw_ids;
    int sign = sort_with_sign(ids);
    if (sign == 0) return;
    RationalFunction c = sign == 1 ? coeff : -coeff;
    auto it = terms.find(ids);
    if (it == terms.end()) {
        terms.emplace(std::move(ids), std::move(c));
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void Multivector::add(const Multivector& o) {
    check_same(o);
    for (const auto& [ids, c] : o.terms) add_term(ids, c);
}

void Multivector::check_same(const Multivector& o) const {
    if (reg != o.reg) throw error("multivectors over different registries");
}

bool Multivector::operator==(const Multivector& o) const {
    check_same(o);
    return (*this - o).is_zero();
}

Multivector Multivector::operator+(const Multivector& o) const {
    Multivector r = *this;
    r.add(o);
    return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
    check_same(o);
    Multivector r = *this;
    for (const auto& [ids, c] : o.terms) r.add_term(ids, -c);
    return r;
}

Multivector Multivector::operator-() const {
    Multivector r(*reg);
    for (const auto& [ids, c] : terms) r.terms.emplace(ids, -c);
    return r;
}

Multivector Multivector::operator*(const Multivector& o) const {
    check_same(o);
    Multivector r(*reg);
    for (const auto& [ia, ca] : terms) {
        for (const auto& [ib, cb] : o.terms) {
            OddMonomial ids = ia;
            ids.insert(ids.end(), ib.begin(), ib.end());
            r.add_term(ids, ca * cb);
        }
    }
    return r;
}

Multivector Multivector::operator*(const Scalar& c) const {
    Multivector r(*reg);
    if (c.is_zero()) return r;
    for (const auto& [ids, k] : terms) r.terms.emplace(ids, k * c);
    return r;
}

Multivector Multivector::operator*(const RationalFunction& c) const {
    Multivector r(*reg);
    if (c.is_zero()) return r;
    for (const auto& [ids, k] : terms) {
        RationalFunction p = k * c;
        if (!p.is_zero()) r.terms.emplace(ids, p);
    }
    return r;
}

Multivector Multivector::odd_derivation(uint32_t g) const {
    Multivector r(*reg);
    for (const auto& [ids, c] : terms) {
        auto it = std::find(ids.begin(), ids.end(), g);
        if (it == ids.end()) continue;
        size_t pos = size_t(it - ids.begin());
        OddMonomial rest;
        rest.reserve(ids.size() - 1);
        for (size_t i = 0; i < ids.size(); ++i)
            if (i != pos) rest.push_back(ids[i]);
        r.add_term(rest, (pos % 2 == 0) ? c : -c);
    }
    return r;
}

Multivector Multivector::even_derivative(uint32_t var) const {
    Multivector r(*reg);
    for (const auto& [ids, c] : terms) {
        RationalFunction d = c.derivative(var);
        if (!d.is_zero()) r.terms.emplace(ids, d);
    }
    return r;
}

Bidegree Multivector::term_bidegree(const OddMonomial& ids) const {
    Bidegree b;
    for (uint32_t id : ids) {
        switch (reg->odd(id).kind) {
            case OddKind::PolyvectorDir: ++b.polyvector; break;
            case OddKind::AntiHolForm: ++b.antihol; break;
            case OddKind::FormLeg: ++b.form; break;
            case OddKind::Abstract: ++b.abstract_; break;
        }
    }
    return b;
}

uint32_t Multivector::total_degree() const {
    if (terms.empty()) return 0;
    uint32_t d = uint32_t(terms.begin()->first.size());
    for (const auto& [ids, c] : terms)
        if (ids.size() != d) throw error("multivector is not homogeneous in total odd degree");
    return d;
}

bool Multivector::is_homogeneous() const {
    if (terms.empty()) return true;
    size_t d = terms.begin()->first.size();
    for (const auto& [ids, c] : terms)
        if (ids.size() != d) return false;
    return true;
}

Multivector Multivector::component_of_kind_degree(OddKind kind, uint32_t count) const {
    Multivector r(*reg);
    for (const auto& [ids, c] : terms) {
        uint32_t n = 0;
        for (uint32_t id : ids)
            if (reg->odd(id).kind == kind) ++n;
        if (n == count) r.terms.emplace(ids, c);
    }
    return r;
}

Multivector Multivector::component_theta_count(const std::vector<uint32_t>& thetas,
                                               uint32_t count) const {
    Multivector r(*reg);
    for (const auto& [ids, c] : terms) {
        uint32_t n = 0;
        for (uint32_t id : ids)
            if (std::find(thetas.begin(), thetas.end(), id) != thetas.end()) ++n;
        if (n == count) r.terms.emplace(ids, c);
    }
    return r;
}

uint32_t Multivector::max_theta_count(const std::vector<uint32_t>& thetas) const {
    uint32_t mx = 0;
    for (const auto& [ids, c] : terms) {
        uint32_t n = 0;
        for (uint32_t id : ids)
            if (std::find(thetas.begin(), thetas.end(), id) != thetas.end()) ++n;
        mx = std::max(mx, n);
    }
    return mx;
}

bool Multivector::contains_odd(const OddMonomial& ids, uint32_t g) const {
    return std::find(ids.begin(), ids.end(), g) != ids.end();
}

std::pair<Multivector, Multivector> Multivector::split_leading(uint32_t g) const {
    Multivector with(*reg), without(*reg);
    for (const auto& [ids, c] : terms) {
        auto it = std::find(ids.begin(), ids.end(), g);
        if (it == ids.end()) {
            without.terms.emplace(ids, c);
        } else {
            size_t pos = size_t(it - ids.begin());
            OddMonomial rest;
            for (size_t i = 0; i < ids.size(); ++i)
                if (i != pos) rest.push_back(ids[i]);
            // m = g ^ a: removing g from the front of the sorted list costs
            // (-1)^pos to move it there first.
            with.add_term(rest, (pos % 2 == 0) ? c : -c);
        }
    }
    return {with, without};
}

Multivector Multivector::substitute_odd(uint32_t from, uint32_t to, const Scalar& factor) const {
    Multivector r(*reg);
    for (const auto& [ids, c] : terms) {
        auto it = std::find(ids.begin(), ids.end(), from);
        if (it == ids.end()) {
            r.add_term(ids, c);
        } else {
            OddMonomial sub = ids;
            sub[size_t(it - ids.begin())] = to;
            r.add_term(sub, c * factor);
        }
    }
    return r;
}

std::string Multivector::str() const {
    if (terms.empty()) return "0";
    auto vn = [this](uint32_t id) { return reg->even_name(id); };
    std::ostringstream out;
    bool first = true;
    for (const auto& [ids, c] : terms) {
        std::string cs = c.str(vn);
        bool needs_wrap = !c.is_polynomial() ? false : cs.find(" + ") != std::string::npos ||
                                                           cs.find(" - ") != std::string::npos;
        bool neg = cs.size() && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                   cs.find(" - ") == std::string::npos;
        if (ids.empty()) {
            if (!first) {
                if (neg) out << " - " << cs.substr(1);
                else out << " + " << cs;
            } else {
                out << cs;
            }
            first = false;
            continue;
        }
        std::string legs;
        for (size_t i = 0; i < ids.size(); ++i) {
            if (i) legs += "^";
            legs += reg->odd_name(ids[i]);
        }
        std::string piece;
        if (cs == "1") piece = legs;
        else if (cs == "-1") piece = "-" + legs;
        else if (needs_wrap) piece = "(" + cs + ")*" + legs;
        else piece = cs + "*" + legs;
        if (first) {
            out << piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out << " - " << piece.substr(1);
        } else {
            out << " + " << piece;
        }
        first = false;
    }
    return out.str();
}

} // namespace sdual
