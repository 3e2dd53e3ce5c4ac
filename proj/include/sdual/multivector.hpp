#pragma once

#include "sdual/poly.hpp"
#include "sdual/registry.hpp"

#include <map>

namespace sdual {

// Sorted list of odd generator ids (strictly increasing).
using OddMonomial = std::vector<uint32_t>;

struct Bidegree {
    uint32_t polyvector = 0; // PolyvectorDir legs (i)
    uint32_t antihol = 0;    // AntiHolForm legs (j)
    uint32_t form = 0;       // FormLeg legs (a)
    uint32_t abstract_ = 0;  // Abstract legs (e)
    uint32_t total() const { return polyvector + antihol + form + abstract_; }
};

class Multivector {
public:
    const Registry* reg = nullptr;
    std::map<OddMonomial, RationalFunction> terms;

    Multivector() = default;
    explicit Multivector(const Registry& r) : reg(&r) {}

    static Multivector zero(const Registry& r) { return Multivector(r); }
    static Multivector scalar(const Registry& r, const Scalar& c);
    static Multivector coefficient(const Registry& r, const RationalFunction& c);
    static Multivector variable(const Registry& r, uint32_t even_id);
    static Multivector generator(const Registry& r, uint32_t odd_id);

    // Sorts ids, accumulating -1 per transposition; a repeated generator
    // annihilates the term.
    void add_term(const OddMonomial& raw_ids, const RationalFunction& coeff);
    void add(const Multivector& o);

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Multivector& o) const;
    bool operator!=(const Multivector& o) const { return !(*this == o); }

    Multivector operator+(const Multivector& o) const;
    Multivector operator-(const Multivector& o) const;
    Multivector operator-() const;
    Multivector operator*(const Multivector& o) const;
    Multivector operator*(const Scalar& c) const;
    Multivector operator*(const RationalFunction& c) const;

    // Left derivation by odd generator g.
    Multivector odd_derivation(uint32_t g) const;
    // Coefficientwise Wirtinger derivative.
    Multivector even_derivative(uint32_t var) const;

    Bidegree term_bidegree(const OddMonomial& ids) const;
    // Throws unless all terms share one total odd degree; zero -> 0.
    uint32_t total_degree() const;
    bool is_homogeneous() const;
    // Component whose terms have the given count of legs of one kind.
    Multivector component_of_kind_degree(OddKind kind, uint32_t count) const;
    // Component with exactly the given polyvector legs among `thetas`.
    Multivector component_theta_count(const std::vector<uint32_t>& thetas, uint32_t count) const;
    uint32_t max_theta_count(const std::vector<uint32_t>& thetas) const;

    bool contains_odd(const OddMonomial& ids, uint32_t g) const;
    // Splits m = g ^ a + b where no term of a or b contains g.
    std::pair<Multivector, Multivector> split_leading(uint32_t g) const;

    // Replaces generator `from` by `to` in place (position preserved, then
    // renormalized), scaling each affected term by `factor`.
    Multivector substitute_odd(uint32_t from, uint32_t to, const Scalar& factor) const;

    std::string str() const;

private:
    void check_same(const Multivector& o) const;
};

// Koszul sign from sorting; returns 0 sign for repeated ids.
int sort_with_sign(OddMonomial& ids);

} // namespace sdual
