#include "sdual/branes.hpp"

#include <algorithm>
#include <sstream>

namespace sdual {

BraneBackground BraneBackground::d3() {
    BraneBackground bb;
    bb.dual.bg = BackgroundDescriptor::parse("C[u,v] x C[z,w1,w2]");
    bb.dual.reg = bb.dual.bg.build_registry();
    bb.dual.cy2 = CalabiYauOrdering(bb.dual.reg, {"w1", "w2"});
    bb.dual.cy3 = CalabiYauOrdering(bb.dual.reg, {"z", "w1", "w2"});
    bb.dual.z = *bb.dual.reg.find_even("z");
    bb.dual.theta_z = *bb.dual.reg.find_odd("Dz");
    // em/eps stay 0: this background carries no abstract odd directions.
    bb.cy5 = CalabiYauOrdering(bb.dual.reg, {"u", "v", "z", "w1", "w2"});
    bb.brane.reg = &bb.dual.reg;
    bb.brane.wrapped = {*bb.dual.reg.find_even("u"), bb.dual.z};
    bb.brane.normal = {*bb.dual.reg.find_even("v"), *bb.dual.reg.find_even("w1"),
                       *bb.dual.reg.find_even("w2")};
    return bb;
}

Multivector bochner_martinelli(const BraneSpec& b) {
    const Registry& reg = *b.reg;
    size_t k = b.normal.size();
    if (k == 0) throw error("source kernel undefined for codimension zero");

    Polynomial rho;
    std::vector<uint32_t> conj;
    for (uint32_t id : b.normal) {
        int32_t cj = reg.even(id).conjugate_of;
        if (cj < 0) throw error("normal coordinate lacks a conjugate: " + reg.even_name(id));
        conj.push_back(uint32_t(cj));
        rho = rho + Polynomial::variable(id) * Polynomial::variable(uint32_t(cj));
    }
    Polynomial rhok(Scalar(1));
    for (size_t p = 0; p < k; ++p) rhok = rhok * rho;

    OddMonomial wrap;
    for (uint32_t id : b.wrapped) {
        auto th = reg.theta_of(id);
        if (!th) throw error("wrapped coordinate lacks a polyvector leg: " + reg.even_name(id));
        wrap.push_back(*th);
    }

    Multivector out(reg);
    for (size_t j = 0; j < k; ++j) {
        OddMonomial ids = wrap;
        for (size_t l = 0; l < k; ++l) {
            if (l == j) continue;
            auto db = reg.antiform_of(uint32_t(reg.even(b.normal[l]).conjugate_of));
            if (!db) throw error("normal coordinate lacks an antiholomorphic leg");
            ids.push_back(*db);
        }
        Polynomial num = Polynomial::variable(conj[j]) * Scalar(j % 2 == 0 ? 1 : -1);
        out.add_term(ids, RationalFunction(num, rhok));
    }
    return out;
}

bool sdual_fixes_d3(const Multivector& field, const BraneBackground& bb,
                    const SignConvention& conv) {
    // Split off the wrapped polyvector legs outside the duality C^3 factor;
    // they ride along as passengers, so the map fixes the field iff it fixes
    // every stripped component.
    std::vector<Multivector> parts{field};
    for (uint32_t c : bb.brane.wrapped) {
        if (std::find(bb.dual.cy3.coords.begin(), bb.dual.cy3.coords.end(), c) !=
            bb.dual.cy3.coords.end())
            continue;
        uint32_t th = *bb.dual.reg.theta_of(c);
        std::vector<Multivector> next;
        for (const Multivector& p : parts) {
            auto [a, rest] = p.split_leading(th);
            next.push_back(a);
            next.push_back(rest);
        }
        parts = std::move(next);
    }
    for (const Multivector& p : parts) {
        if (p.is_zero()) continue;
        if (sdual_closed_form(p, bb.dual, SDualMode::c3_z4, conv) != p) return false;
    }
    return true;
}

SuperOpContext brane_operator_context() { return SuperOpContext{{"z"}, {"eps1", "eps2"}}; }

SuperDiffOp closed_open(const Multivector& m, const DualityContext& ctx,
                        const SuperOpContext& op) {
    uint32_t w1 = ctx.cy2.coords[0], w2 = ctx.cy2.coords[1];
    uint32_t tw1 = *ctx.reg.theta_of(w1), tw2 = *ctx.reg.theta_of(w2);
    SuperDiffOp out(op);
    for (const auto& [ids, c] : m.terms) {
        if (!c.is_polynomial())
            throw error("closed-open dictionary needs polynomial coefficients");
        SuperDiffOp legs = SuperDiffOp::unit(op);
        for (uint32_t id : ids) {
            if (id == ctx.theta_z) legs = legs * SuperDiffOp::derivation(op, "z");
            else if (id == tw1) legs = legs * SuperDiffOp::odd_coordinate(op, "eps1");
            else if (id == tw2) legs = legs * SuperDiffOp::odd_coordinate(op, "eps2");
            else
                throw error("closed-open dictionary: unsupported odd direction " +
                            ctx.reg.odd_name(id));
        }
        for (const auto& [mono, sc] : c.num.coeffs) {
            uint32_t zexp = 0, e1exp = 0, e2exp = 0;
            for (const auto& [v, e] : mono) {
                if (v == ctx.z) zexp = e;
                else if (v == w1) e1exp = e;
                else if (v == w2) e2exp = e;
                else
                    throw error("closed-open dictionary: unsupported variable " +
                                ctx.reg.even_name(v));
            }
            if (e1exp > 1 || e2exp > 1) continue; // (d/deps)^2 = 0
            SuperDiffOp t = SuperDiffOp::unit(op);
            for (uint32_t p = 0; p < zexp; ++p) t = t * SuperDiffOp::coordinate(op, "z");
            t = t * legs;
            if (e1exp) t = t * SuperDiffOp::odd_derivation(op, "eps1");
            if (e2exp) t = t * SuperDiffOp::odd_derivation(op, "eps2");
            out = out + t * sc;
        }
    }
    return out;
}

namespace {

int pair_parity(int mask) { return (mask == 1 || mask == 2) ? 1 : 0; }

// Koszul sign of e(mask a) ^ e(mask b) for the two-generator algebra.
int pair_merge_sign(int a, int b) {
    // Only one inversion is possible: eps2 in a before eps1 in b.
    return ((a & 2) && (b & 1)) ? -1 : 1;
}

} // namespace

GrassmannPair GrassmannPair::basis(int i) {
    GrassmannPair g;
    g.c[size_t(i)] = Scalar(1);
    return g;
}

GrassmannPair GrassmannPair::operator+(const GrassmannPair& o) const {
    GrassmannPair r;
    for (int i = 0; i < 4; ++i) r.c[size_t(i)] = c[size_t(i)] + o.c[size_t(i)];
    return r;
}

GrassmannPair GrassmannPair::operator-(const GrassmannPair& o) const {
    GrassmannPair r;
    for (int i = 0; i < 4; ++i) r.c[size_t(i)] = c[size_t(i)] - o.c[size_t(i)];
    return r;
}

GrassmannPair GrassmannPair::operator*(const Scalar& s) const {
    GrassmannPair r;
    for (int i = 0; i < 4; ++i) r.c[size_t(i)] = c[size_t(i)] * s;
    return r;
}

bool GrassmannPair::is_zero() const {
    for (const Scalar& s : c)
        if (!s.is_zero()) return false;
    return true;
}

std::string GrassmannPair::str() const {
    static const char* names[4] = {"1", "eps1", "eps2", "eps1*eps2"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (c[size_t(i)].is_zero()) continue;
        std::string coeff = c[size_t(i)].str();
        std::string piece;
        if (i == 0) piece = coeff;
        else if (coeff == "1") piece = names[i];
        else if (coeff == "-1") piece = std::string("-") + names[i];
        else piece = (c[size_t(i)].needs_parens() ? "(" + coeff + ")" : coeff) + "*" + names[i];
        if (out.empty()) out = piece;
        else if (piece[0] == '-') out += " - " + piece.substr(1);
        else out += " + " + piece;
    }
    return out.empty() ? "0" : out;
}

GrassmannPair wedge(const GrassmannPair& a, const GrassmannPair& b) {
    GrassmannPair r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i & j) continue;
            Scalar v = a.c[size_t(i)] * b.c[size_t(j)];
            if (pair_merge_sign(i, j) < 0) v = -v;
            r.c[size_t(i | j)] += v;
        }
    return r;
}

GrassmannPair eps_derivation(const GrassmannPair& a, int i) {
    int bit = 1 << (i - 1);
    GrassmannPair r;
    for (int m = 0; m < 4; ++m) {
        if (!(m & bit)) continue;
        // Left derivation: sign from the generators preceding eps_i.
        int below = m & (bit - 1);
        Scalar v = a.c[size_t(m)];
        if (below) v = -v;
        r.c[size_t(m ^ bit)] += v;
    }
    return r;
}

GrassmannPair clifford_star(const GrassmannPair& a, const GrassmannPair& b) {
    Scalar half(mpq_class(1, 2)), quarter(mpq_class(1, 4));
    GrassmannPair r;
    for (int i = 0; i < 4; ++i) {
        if (a.c[size_t(i)].is_zero()) continue;
        GrassmannPair ai = GrassmannPair::basis(i) * a.c[size_t(i)];
        Scalar sgn = pair_parity(i) ? Scalar(-1) : Scalar(1);
        r = r + wedge(ai, b);
        GrassmannPair cross = wedge(eps_derivation(ai, 1), eps_derivation(b, 2)) +
                              wedge(eps_derivation(ai, 2), eps_derivation(b, 1));
        r = r - cross * (half * sgn);
        r = r + wedge(eps_derivation(eps_derivation(ai, 2), 1),
                      eps_derivation(eps_derivation(b, 2), 1)) *
                    quarter;
    }
    return r;
}

CliffordReport clifford_deformation_check() {
    CliffordReport rep;
    auto bs = [](int i) { return GrassmannPair::basis(i); };
    GrassmannPair one = bs(0), e1 = bs(1), e2 = bs(2);

    rep.clifford_relation = clifford_star(e1, e2) + clifford_star(e2, e1) == one &&
                            clifford_star(e1, e1).is_zero() && clifford_star(e2, e2).is_zero();

    rep.unital = true;
    for (int i = 0; i < 4; ++i)
        if (clifford_star(one, bs(i)) != bs(i) || clifford_star(bs(i), one) != bs(i))
            rep.unital = false;

    rep.associative = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                if (clifford_star(clifford_star(bs(i), bs(j)), bs(k)) !=
                    clifford_star(bs(i), clifford_star(bs(j), bs(k))))
                    rep.associative = false;

    // Center: solve [x, b] = 0 for every basis b; expect only the scalars.
    Matrix sys(12, 4);
    for (int b = 1; b < 4; ++b)
        for (int x = 0; x < 4; ++x) {
            GrassmannPair comm = clifford_star(bs(x), bs(b)) - clifford_star(bs(b), bs(x));
            for (int row = 0; row < 4; ++row)
                sys.at(size_t((b - 1) * 4 + row), size_t(x)) = comm.c[size_t(row)];
        }
    auto null = sys.nullspace();
    rep.center_is_scalars = null.size() == 1 && !null[0][0].is_zero() &&
                            null[0][1].is_zero() && null[0][2].is_zero() && null[0][3].is_zero();

    // 2x2 irreducible representation on Lambda[eps1].
    std::vector<Matrix> rho(4, Matrix(2, 2));
    rho[0] = Matrix::identity(2);
    rho[1].at(1, 0) = Scalar(1);                     // eps1 -> wedge by eps1
    rho[2].at(0, 1) = Scalar(1);                     // eps2 -> contraction
    rho[3].at(0, 0) = Scalar(mpq_class(-1, 2));      // eps1*eps2 -> Weyl-ordered
    rho[3].at(1, 1) = Scalar(mpq_class(1, 2));
    auto rho_of = [&](const GrassmannPair& g) {
        Matrix m(2, 2);
        for (int i = 0; i < 4; ++i) m = m + rho[size_t(i)] * g.c[size_t(i)];
        return m;
    };
    rep.rep_is_matrix_iso = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(rho_of(clifford_star(bs(i), bs(j))) == rho[size_t(i)] * rho[size_t(j)]))
                rep.rep_is_matrix_iso = false;
    Matrix flat(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) flat.at(size_t(i), size_t(k)) = rho[size_t(i)].a[size_t(k)];
    if (flat.rank() != 4) rep.rep_is_matrix_iso = false;
    return rep;
}

ZMultReport z_multiplication_check(uint32_t max_degree) {
    size_t n = max_degree + 1;
    Matrix mul(n + 1, n);
    for (size_t k = 0; k < n; ++k) mul.at(k + 1, k) = Scalar(1);
    ZMultReport rep;
    rep.kernel_dim = mul.nullspace().size();
    rep.cokernel_dim = (n + 1) - mul.rank();
    // Quotient representatives: codomain basis vectors outside the image span.
    std::vector<std::vector<Scalar>> span;
    for (size_t k = 0; k < n; ++k) {
        std::vector<Scalar> col(n + 1);
        for (size_t r = 0; r < n + 1; ++r) col[r] = mul.at(r, k);
        span.push_back(std::move(col));
    }
    for (size_t k = 0; k < n + 1; ++k) {
        std::vector<Scalar> e(n + 1);
        e[k] = Scalar(1);
        if (in_span(span, e)) continue;
        span.push_back(e);
        rep.cokernel_reps.push_back(k == 0 ? "1" : "z^" + std::to_string(k));
    }
    return rep;
}

D3ReductionReport d3_reduction_homology(uint32_t max_degree) {
    // Codomain C[z]_{<= max_degree+1} (x) Lambda[eps1, eps2], index 4*k + mask;
    // the domain is the z-degree <= max_degree part.
    size_t nz = max_degree + 2, dim = 4 * nz, ndom = 4 * (nz - 1);
    auto idx = [](size_t k, int mask) { return 4 * k + size_t(mask); };
    Matrix sq(dim, dim), d(dim, ndom);
    // z d/deps2: eps2 -> z, eps1 eps2 -> -z eps1.
    for (size_t k = 0; k + 1 < nz; ++k) {
        sq.at(idx(k + 1, 0), idx(k, 2)) = Scalar(1);
        sq.at(idx(k + 1, 1), idx(k, 3)) = Scalar(-1);
    }
    if (!(sq * sq).is_zero()) throw error("reduction operator does not square to zero");
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < ndom; ++c) d.at(r, c) = sq.at(r, c);

    D3ReductionReport rep;
    std::vector<std::vector<Scalar>> span;
    for (size_t c = 0; c < ndom; ++c) {
        std::vector<Scalar> col(dim);
        bool nonzero = false;
        for (size_t r = 0; r < dim; ++r) {
            col[r] = d.at(r, c);
            if (!col[r].is_zero()) nonzero = true;
        }
        if (nonzero) span.push_back(std::move(col));
    }
    span = row_space_basis(span);
    rep.image_dim = span.size();

    static const char* names[4] = {"", "eps1", "eps2", "eps1*eps2"};
    auto label = [&](size_t k, int mask) {
        std::string z = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
        std::string o = names[mask];
        if (z.empty() && o.empty()) return std::string("1");
        if (z.empty()) return o;
        if (o.empty()) return z;
        return z + "*" + o;
    };
    for (const auto& kv : d.nullspace()) {
        ++rep.kernel_dim;
        std::vector<Scalar> v(dim); // embed the domain vector into the codomain
        for (size_t c = 0; c < ndom; ++c) v[c] = kv[c];
        if (in_span(span, v)) continue;
        span.push_back(v);
        ++rep.homology_dim;
        // Pretty-print the representative.
        std::string s;
        for (size_t k = 0; k < nz; ++k)
            for (int mask = 0; mask < 4; ++mask) {
                const Scalar& c = v[idx(k, mask)];
                if (c.is_zero()) continue;
                std::string piece = c.is_one() ? label(k, mask) : c.str() + "*" + label(k, mask);
                s += (s.empty() ? "" : " + ") + piece;
            }
        rep.reps.push_back(s);
    }
    return rep;
}

} // namespace sdual
