#pragma once

#include "sdual/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sdual {

// Sparse monomial: (variable id, exponent) pairs, sorted by id, exponents > 0.
using Monomial = std::vector<std::pair<uint32_t, uint32_t>>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
// Componentwise min of exponents (shared variables only).
Monomial mono_gcd(const Monomial& a, const Monomial& b);
// a / b; throws if not divisible.
Monomial mono_div(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& b, const Monomial& a);

class Polynomial {
public:
    std::map<Monomial, Scalar> coeffs; // zero coefficients never stored

    Polynomial() = default;
    explicit Polynomial(const Scalar& c) {
        if (!c.is_zero()) coeffs[{}] = c;
    }
    static Polynomial variable(uint32_t var, uint32_t exp = 1) {
        Polynomial p;
        p.coeffs[{{var, exp}}] = Scalar(1);
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }
    bool is_constant() const {
        return coeffs.empty() || (coeffs.size() == 1 && coeffs.begin()->first.empty());
    }
    Scalar constant_coefficient() const {
        auto it = coeffs.find({});
        return it == coeffs.end() ? Scalar() : it->second;
    }

    void add_term(const Monomial& m, const Scalar& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;
    bool operator==(const Polynomial& o) const { return coeffs == o.coeffs; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(uint32_t var) const;
    // Antiderivative in var (exponent+1 with exact rational division).
    Polynomial integral(uint32_t var) const;
    // Set var to zero: drop monomials containing it.
    Polynomial at_zero(uint32_t var) const;

    bool depends_on(uint32_t var) const;
    uint32_t degree_in(uint32_t var) const;
    // Total degree counting only the listed variables.
    uint32_t degree_in_vars(const std::vector<uint32_t>& vars) const;
    // True when no monomial involves any of the listed variables.
    bool free_of_vars(const std::vector<uint32_t>& vars) const;
    // Part of the polynomial whose monomials avoid all listed variables.
    Polynomial part_free_of(const std::vector<uint32_t>& vars) const;

    // Leading term under the map's monomial order (largest key).
    std::pair<Monomial, Scalar> leading() const;
    // Common monomial factor of all terms.
    Monomial content_monomial() const;
    Polynomial divide_monomial(const Monomial& m) const;

    // Exact multivariate division: returns quotient iff remainder is zero.
    static std::optional<Polynomial> try_divide(const Polynomial& a, const Polynomial& b);

    std::string str(const std::function<std::string(uint32_t)>& var_name) const;
};

// Quotient num/den of polynomials, den nonzero.  No full GCD: reduction is
// monomial-content cancellation, exact-division collapse, and a monic
// denominator normalization, which keeps representatives deterministic.
class RationalFunction {
public:
    Polynomial num;
    Polynomial den; // never zero; normalized so leading coefficient is 1

    RationalFunction() : num(), den(Scalar(1)) {}
    explicit RationalFunction(const Scalar& c) : num(c), den(Scalar(1)) {}
    explicit RationalFunction(const Polynomial& p) : num(p), den(Scalar(1)) {}
    RationalFunction(const Polynomial& n, const Polynomial& d);

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.is_constant(); }
    bool is_constant() const { return num.is_constant() && den.is_constant(); }
    Scalar constant_value() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator*(const Scalar& c) const;

    // Exact equality of the represented rational functions (cross-multiplied).
    bool operator==(const RationalFunction& o) const;
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction derivative(uint32_t var) const;
    bool depends_on(uint32_t var) const { return num.depends_on(var) || den.depends_on(var); }

    std::string str(const std::function<std::string(uint32_t)>& var_name) const;

private:
    void normalize();
};

} // namespace sdual
