#include "sdual/superop.hpp"

#include <algorithm>
#include <sstream>

namespace sdual {

namespace {

int popcount(uint32_t m) { return __builtin_popcount(m); }

// Sign of the left derivation by index d on the sorted odd monomial `mask`.
int left_sign(uint32_t mask, int d) {
    return popcount(mask & ((1u << d) - 1)) % 2 == 0 ? 1 : -1;
}

// Sign of sorting the concatenation of two disjoint sorted odd monomials.
int merge_sign(uint32_t m1, uint32_t m2) {
    int inv = 0;
    for (int i = 0; i < 32; ++i)
        if (m1 & (1u << i)) inv += popcount(m2 & ((1u << i) - 1));
    return inv % 2 == 0 ? 1 : -1;
}

mpq_class binomial(uint32_t n, uint32_t k) {
    mpq_class r(1);
    for (uint32_t i = 0; i < k; ++i) r *= mpq_class(long(n - i), long(i + 1));
    return r;
}

mpq_class falling(uint32_t a, uint32_t k) {
    mpq_class r(1);
    for (uint32_t i = 0; i < k; ++i) r *= mpq_class(long(a - i));
    return r;
}

} // namespace

size_t SuperOpContext::even_id(const std::string& name) const {
    auto it = std::find(evens.begin(), evens.end(), name);
    if (it == evens.end()) throw error("unknown even variable " + name);
    return size_t(it - evens.begin());
}

size_t SuperOpContext::odd_id(const std::string& name) const {
    auto it = std::find(odds.begin(), odds.end(), name);
    if (it == odds.end()) throw error("unknown odd variable " + name);
    return size_t(it - odds.begin());
}

SuperDiffOp SuperDiffOp::unit(const SuperOpContext& c) {
    SuperDiffOp op(c);
    op.add_term({std::vector<uint32_t>(c.evens.size()), 0,
                 std::vector<uint32_t>(c.evens.size()), 0},
                Scalar(1));
    return op;
}

SuperDiffOp SuperDiffOp::coordinate(const SuperOpContext& c, const std::string& name) {
    SuperDiffOp op = unit(c);
    Key k = op.terms.begin()->first;
    op.terms.clear();
    std::get<0>(k)[c.even_id(name)] = 1;
    op.add_term(k, Scalar(1));
    return op;
}

SuperDiffOp SuperDiffOp::odd_coordinate(const SuperOpContext& c, const std::string& name) {
    SuperDiffOp op = unit(c);
    Key k = op.terms.begin()->first;
    op.terms.clear();
    std::get<1>(k) = 1u << c.odd_id(name);
    op.add_term(k, Scalar(1));
    return op;
}

SuperDiffOp SuperDiffOp::derivation(const SuperOpContext& c, const std::string& name) {
    SuperDiffOp op = unit(c);
    Key k = op.terms.begin()->first;
    op.terms.clear();
    std::get<2>(k)[c.even_id(name)] = 1;
    op.add_term(k, Scalar(1));
    return op;
}

SuperDiffOp SuperDiffOp::odd_derivation(const SuperOpContext& c, const std::string& name) {
    SuperDiffOp op = unit(c);
    Key k = op.terms.begin()->first;
    op.terms.clear();
    std::get<3>(k) = 1u << c.odd_id(name);
    op.add_term(k, Scalar(1));
    return op;
}

void SuperDiffOp::add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

SuperDiffOp SuperDiffOp::operator+(const SuperDiffOp& o) const {
    SuperDiffOp r = *this;
    for (const auto& [k, c] : o.terms) r.add_term(k, c);
    return r;
}

SuperDiffOp SuperDiffOp::operator-(const SuperDiffOp& o) const {
    SuperDiffOp r = *this;
    for (const auto& [k, c] : o.terms) r.add_term(k, -c);
    return r;
}

SuperDiffOp SuperDiffOp::operator-() const {
    SuperDiffOp r(*ctx);
    for (const auto& [k, c] : terms) r.add_term(k, -c);
    return r;
}

SuperDiffOp SuperDiffOp::operator*(const Scalar& s) const {
    SuperDiffOp r(*ctx);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms) r.add_term(k, c * s);
    return r;
}

bool SuperDiffOp::operator==(const SuperDiffOp& o) const { return terms == o.terms; }

int SuperDiffOp::parity() const {
    int p = -1;
    for (const auto& [k, c] : terms) {
        (void)c;
        int tp = (popcount(std::get<1>(k)) + popcount(std::get<3>(k))) % 2;
        if (p == -1) p = tp;
        else if (p != tp) throw error("operator has terms of mixed parity");
    }
    return p == -1 ? 0 : p;
}

SuperDiffOp SuperDiffOp::operator*(const SuperDiffOp& o) const {
    if (ctx != o.ctx) throw error("operator context mismatch");
    SuperDiffOp r(*ctx);
    const size_t ne = ctx->evens.size();
    for (const auto& [k1, c1] : terms)
        for (const auto& [k2, c2] : o.terms) {
            const auto& [a1, s1, b1, t1] = k1;
            const auto& [a2, s2, b2, t2] = k2;

            // Even Weyl-algebra reordering, independently per variable.
            std::vector<std::tuple<std::vector<uint32_t>, std::vector<uint32_t>, mpq_class>>
                evens{{a2, b1, mpq_class(1)}};
            for (size_t v = 0; v < ne; ++v) {
                decltype(evens) next;
                for (const auto& [ra, rb, rc] : evens) {
                    uint32_t a = ra[v], b = rb[v];
                    for (uint32_t kk = 0; kk <= std::min(a, b); ++kk) {
                        auto na = ra;
                        auto nb = rb;
                        na[v] = a - kk;
                        nb[v] = b - kk;
                        next.emplace_back(std::move(na), std::move(nb),
                                          rc * binomial(b, kk) * falling(a, kk));
                    }
                }
                evens = std::move(next);
            }

            // Odd reordering: move the derivation block t1 through the odd
            // coordinates s2, rightmost derivation first.
            std::vector<std::tuple<uint32_t, uint32_t, int>> odds{{s2, 0u, 1}}; // (s', t', sign)
            std::vector<int> t1_list;
            for (int i = 0; i < 32; ++i)
                if (t1 & (1u << i)) t1_list.push_back(i);
            for (auto it = t1_list.rbegin(); it != t1_list.rend(); ++it) {
                int d = *it;
                decltype(odds) next;
                for (const auto& [rs, rt, rsgn] : odds) {
                    if (rs & (1u << d)) // contraction branch
                        next.emplace_back(rs & ~(1u << d), rt, rsgn * left_sign(rs, d));
                    // pass-through branch, with the parity of the coordinate block
                    int pass = popcount(rs) % 2 == 0 ? 1 : -1;
                    if (rt & (1u << d)) continue; // (d_eps)^2 = 0
                    next.emplace_back(rs, rt | (1u << d),
                                      rsgn * pass * merge_sign(uint32_t(1u << d), rt));
                }
                odds = std::move(next);
            }

            for (const auto& [ra, rb, rc] : evens)
                for (const auto& [rs, rt, rsgn] : odds) {
                    if (s1 & rs) continue;
                    uint32_t tm = rt | t2;
                    if (popcount(rt) + popcount(t2) != popcount(tm)) continue;
                    int sgn = rsgn * merge_sign(s1, rs) * merge_sign(rt, t2);
                    std::vector<uint32_t> ea(ne), eb(ne);
                    for (size_t v = 0; v < ne; ++v) {
                        ea[v] = a1[v] + ra[v];
                        eb[v] = rb[v] + b2[v];
                    }
                    Scalar coef = c1 * c2 * Scalar(rc);
                    if (sgn < 0) coef = -coef;
                    r.add_term({std::move(ea), s1 | rs, std::move(eb), tm}, coef);
                }
        }
    return r;
}

SuperDiffOp super_commutator(const SuperDiffOp& a, const SuperDiffOp& b) {
    if (a.ctx != b.ctx) throw error("operator context mismatch");
    SuperDiffOp parts[2][2] = {{SuperDiffOp(*a.ctx), SuperDiffOp(*a.ctx)},
                               {SuperDiffOp(*a.ctx), SuperDiffOp(*a.ctx)}};
    for (const auto& [k, c] : a.terms)
        parts[0][(popcount(std::get<1>(k)) + popcount(std::get<3>(k))) % 2].add_term(k, c);
    for (const auto& [k, c] : b.terms)
        parts[1][(popcount(std::get<1>(k)) + popcount(std::get<3>(k))) % 2].add_term(k, c);
    SuperDiffOp r(*a.ctx);
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            SuperDiffOp ab = parts[0][p] * parts[1][q];
            SuperDiffOp ba = parts[1][q] * parts[0][p];
            r = r + (p == 1 && q == 1 ? ab + ba : ab - ba);
        }
    return r;
}

std::string SuperDiffOp::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        const auto& [a, s, b, t] = k;
        std::vector<std::string> factors;
        for (size_t v = 0; v < ctx->evens.size(); ++v)
            if (a[v] > 0)
                factors.push_back(ctx->evens[v] + (a[v] > 1 ? "^" + std::to_string(a[v]) : ""));
        for (size_t v = 0; v < ctx->odds.size(); ++v)
            if (s & (1u << v)) factors.push_back(ctx->odds[v]);
        for (size_t v = 0; v < ctx->evens.size(); ++v)
            if (b[v] > 0)
                factors.push_back("d" + ctx->evens[v] +
                                  (b[v] > 1 ? "^" + std::to_string(b[v]) : ""));
        for (size_t v = 0; v < ctx->odds.size(); ++v)
            if (t & (1u << v)) factors.push_back("d" + ctx->odds[v]);

        std::string coeff = c.str();
        std::string body;
        for (size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
        std::string piece;
        if (factors.empty()) piece = coeff;
        else if (coeff == "1") piece = body;
        else if (coeff == "-1") piece = "-" + body;
        else piece = (c.needs_parens() ? "(" + coeff + ")" : coeff) + "*" + body;

        if (first) out << piece;
        else if (!piece.empty() && piece[0] == '-') out << " - " << piece.substr(1);
        else out << " + " << piece;
        first = false;
    }
    return out.str();
}

} // namespace sdual
