#pragma once

#include "sdual/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace sdual {

// Variable universe for superdifferential operators on a brane world-volume:
// a handful of even coordinates plus odd parameters eps_i.
struct SuperOpContext {
    std::vector<std::string> evens;
    std::vector<std::string> odds;

    size_t even_id(const std::string& name) const;
    size_t odd_id(const std::string& name) const;
};

// Normal-ordered operators: every term is
//   c * (even coord monomial) * (odd coords, ascending) *
//       (even derivations) * (odd derivations, ascending).
class SuperDiffOp {
public:
    // (even exponents, odd coord mask, even derivation exponents, odd
    // derivation mask)
    using Key = std::tuple<std::vector<uint32_t>, uint32_t, std::vector<uint32_t>, uint32_t>;

    const SuperOpContext* ctx = nullptr;
    std::map<Key, Scalar> terms;

    SuperDiffOp() = default;
    explicit SuperDiffOp(const SuperOpContext& c) : ctx(&c) {}

    static SuperDiffOp unit(const SuperOpContext& c);
    static SuperDiffOp coordinate(const SuperOpContext& c, const std::string& name);
    static SuperDiffOp odd_coordinate(const SuperOpContext& c, const std::string& name);
    static SuperDiffOp derivation(const SuperOpContext& c, const std::string& name);
    static SuperDiffOp odd_derivation(const SuperOpContext& c, const std::string& name);

    void add_term(const Key& k, const Scalar& c);
    SuperDiffOp operator+(const SuperDiffOp& o) const;
    SuperDiffOp operator-(const SuperDiffOp& o) const;
    SuperDiffOp operator*(const SuperDiffOp& o) const; // composition
    SuperDiffOp operator*(const Scalar& s) const;
    SuperDiffOp operator-() const;
    bool operator==(const SuperDiffOp& o) const;
    bool is_zero() const { return terms.empty(); }

    // 0 or 1; throws on terms of mixed parity.
    int parity() const;

    std::string str() const;
};

// a b - (-1)^{|a||b|} b a, extended bilinearly over parity components.
SuperDiffOp super_commutator(const SuperDiffOp& a, const SuperDiffOp& b);

} // namespace sdual
