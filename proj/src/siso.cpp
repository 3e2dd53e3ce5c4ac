#include "sdual/siso.hpp"

#include <algorithm>
#include <map>

namespace sdual {

namespace {

int popcount(uint32_t m) { return __builtin_popcount(m); }

// Sign of wedging a_i (1-based) onto the sorted monomial `mask` from the left.
int left_sign(uint32_t mask, int i) {
    return popcount(mask & ((1u << (i - 1)) - 1)) % 2 == 0 ? 1 : -1;
}

// Sign of sorting the concatenation of two disjoint sorted monomials.
int shuffle_sign(uint32_t m1, uint32_t m2) {
    int inversions = 0;
    for (int i = 1; i <= SpinorModule::dim_w; ++i)
        if (m1 & (1u << (i - 1))) inversions += popcount(m2 & ((1u << (i - 1)) - 1));
    return inversions % 2 == 0 ? 1 : -1;
}

// Main antiautomorphism sign on a degree-d monomial (order reversal).
int reversal_sign(uint32_t mask) {
    int d = popcount(mask);
    return (d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
}

} // namespace

Matrix SpinorModule::creation(int i) {
    Matrix m(dim_module, dim_module);
    for (uint32_t mask = 0; mask < dim_module; ++mask) {
        if (mask & (1u << (i - 1))) continue;
        m.at(mask | (1u << (i - 1)), mask) = Scalar(left_sign(mask, i));
    }
    return m;
}

Matrix SpinorModule::annihilation(int i) {
    Matrix m(dim_module, dim_module);
    for (uint32_t mask = 0; mask < dim_module; ++mask) {
        if (!(mask & (1u << (i - 1)))) continue;
        m.at(mask & ~(1u << (i - 1)), mask) = Scalar(left_sign(mask & ~(1u << (i - 1)), i));
    }
    return m;
}

Matrix SpinorModule::vector_op(int coord) {
    return coord < dim_w ? creation(coord + 1) : annihilation(coord - dim_w + 1);
}

Matrix SpinorModule::restrict_splus(const Matrix& op) const {
    Matrix r(dim_splus, dim_splus);
    for (int p = 0; p < dim_splus; ++p)
        for (int q = 0; q < dim_splus; ++q)
            r.at(p, q) = op.at(splus_masks[p], splus_masks[q]);
    return r;
}

SpinorModule::SpinorModule() {
    splus_index.assign(dim_module, -1);
    for (uint32_t mask = 0; mask < dim_module; ++mask)
        if (popcount(mask) % 2 == 0) {
            splus_index[mask] = int(splus_masks.size());
            splus_masks.push_back(mask);
        }

    Scalar half(mpq_class(1, 2));
    auto add = [&](const Matrix& m, const std::string& name) {
        so10.push_back(m);
        so10_names.push_back(name);
    };
    for (int i = 1; i <= dim_w; ++i)
        for (int j = 1; j <= dim_w; ++j) {
            if (i == j) continue;
            add(creation(i) * annihilation(j),
                "E" + std::to_string(i) + std::to_string(j));
        }
    for (int i = 1; i <= dim_w; ++i)
        add(creation(i) * annihilation(i) - Matrix::identity(dim_module) * half,
            "H" + std::to_string(i));
    for (int i = 1; i <= dim_w; ++i)
        for (int j = i + 1; j <= dim_w; ++j)
            add(creation(i) * creation(j), "B" + std::to_string(i) + std::to_string(j));
    for (int i = 1; i <= dim_w; ++i)
        for (int j = i + 1; j <= dim_w; ++j)
            add(annihilation(i) * annihilation(j), "C" + std::to_string(i) + std::to_string(j));

    // Commute each generator against the ten vector operators and read off the
    // induced action on C^10; the reconstruction check certifies closure.
    for (const Matrix& g : so10) {
        Matrix v(10, 10);
        for (int c = 0; c < 10; ++c) {
            Matrix op = vector_op(c);
            Matrix comm = g * op - op * g;
            for (int d = 0; d < dim_w; ++d) v.at(d, c) = comm.at(1u << d, 0);
            for (int d = 0; d < dim_w; ++d) v.at(dim_w + d, c) = comm.at(0, 1u << d);
            Matrix rebuilt(dim_module, dim_module);
            for (int d = 0; d < 10; ++d)
                if (!v.at(d, c).is_zero()) rebuilt = rebuilt + vector_op(d) * v.at(d, c);
            if (!(rebuilt == comm)) throw error("so(10) does not close on the vector space");
        }
        so10_vec.push_back(std::move(v));
    }
}

std::vector<Scalar> GammaPlus::value(int p, int q) const {
    std::vector<Scalar> v(10);
    for (int c = 0; c < 10; ++c) v[c] = table[size_t(p * 16 + q) * 10 + size_t(c)];
    return v;
}

namespace {

// Cartan weights allow at most one C^10 coordinate per S+ pair: the a_k
// component needs intersection {k} and full union; the a_k* component needs
// empty intersection and union missing exactly k.
std::optional<int> allowed_coord(uint32_t m1, uint32_t m2) {
    uint32_t inter = m1 & m2, uni = m1 | m2;
    if (popcount(inter) == 1 && uni == 31) return __builtin_ctz(inter);
    if (inter == 0 && popcount(uni) == 4) return SpinorModule::dim_w + __builtin_ctz(~uni & 31);
    return std::nullopt;
}

} // namespace

GammaPlus build_gamma_plus(const SpinorModule& spin) {
    const int n = SpinorModule::dim_splus;
    // Enumerate the weight-allowed unknowns (unordered S+ pairs).
    std::map<std::pair<int, int>, std::pair<int, int>> slots; // (p,q) -> (coord, unknown)
    int unknowns = 0;
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q)
            if (auto c = allowed_coord(spin.splus_masks[p], spin.splus_masks[q]))
                slots[{p, q}] = {*c, unknowns++};
    auto slot = [&](int p, int q) -> const std::pair<int, int>* {
        auto it = slots.find({std::min(p, q), std::max(p, q)});
        return it == slots.end() ? nullptr : &it->second;
    };

    // Equivariance equations, one row per (generator, pair, output coordinate).
    std::vector<std::vector<Scalar>> rows;
    for (size_t g = 0; g < spin.so10.size(); ++g) {
        Matrix s = spin.restrict_splus(spin.so10[g]);
        const Matrix& v = spin.so10_vec[g];
        for (int p = 0; p < n; ++p)
            for (int q = p; q < n; ++q) {
                std::vector<std::vector<Scalar>> eq(10, std::vector<Scalar>(size_t(unknowns)));
                bool any = false;
                for (int r = 0; r < n; ++r) {
                    if (!s.at(r, p).is_zero())
                        if (const auto* e = slot(r, q)) {
                            eq[size_t(e->first)][size_t(e->second)] =
                                eq[size_t(e->first)][size_t(e->second)] + s.at(r, p);
                            any = true;
                        }
                    if (!s.at(r, q).is_zero())
                        if (const auto* e = slot(p, r)) {
                            eq[size_t(e->first)][size_t(e->second)] =
                                eq[size_t(e->first)][size_t(e->second)] + s.at(r, q);
                            any = true;
                        }
                }
                if (const auto* e = slot(p, q))
                    for (int c = 0; c < 10; ++c)
                        if (!v.at(c, e->first).is_zero()) {
                            eq[size_t(c)][size_t(e->second)] =
                                eq[size_t(c)][size_t(e->second)] - v.at(c, e->first);
                            any = true;
                        }
                if (!any) continue;
                for (auto& row : eq) {
                    bool nz = false;
                    for (const auto& x : row)
                        if (!x.is_zero()) { nz = true; break; }
                    if (nz) rows.push_back(std::move(row));
                }
            }
    }

    Matrix eqm(rows.size(), size_t(unknowns));
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) eqm.at(i, size_t(j)) = rows[i][size_t(j)];
    auto null_basis = eqm.nullspace();
    if (null_basis.size() != 1)
        throw error("equivariant pairing solution space has dimension " +
                    std::to_string(null_basis.size()));

    // Normalize: gamma(1, a1 a2 a3 a4) = a_5*.
    const auto* norm = slot(spin.splus_index[0], spin.splus_index[0b01111]);
    if (!norm || norm->first != SpinorModule::dim_w + 4)
        throw error("normalization slot missing");
    Scalar scale = null_basis[0][size_t(norm->second)];
    if (scale.is_zero()) throw error("normalization value vanishes");
    Scalar inv = scale.inverse();

    GammaPlus gamma;
    gamma.table.assign(size_t(n * n * 10), Scalar());
    for (const auto& [pq, cu] : slots) {
        Scalar val = null_basis[0][size_t(cu.second)] * inv;
        gamma.table[size_t(pq.first * n + pq.second) * 10 + size_t(cu.first)] = val;
        gamma.table[size_t(pq.second * n + pq.first) * 10 + size_t(cu.first)] = val;
    }
    return gamma;
}

GammaPlus gamma_plus_pairing_oracle(const SpinorModule& spin) {
    const int n = SpinorModule::dim_splus;
    GammaPlus gamma;
    gamma.table.assign(size_t(n * n * 10), Scalar());
    // beta(v . psi1, psi2): Clifford-act, reverse, wedge against psi2, take the
    // top coefficient.  The a_k component pairs through a_k*, and vice versa.
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            uint32_t mp = spin.splus_masks[p], mq = spin.splus_masks[q];
            for (int c = 0; c < 10; ++c) {
                int dual = c < SpinorModule::dim_w ? c + SpinorModule::dim_w
                                                   : c - SpinorModule::dim_w;
                uint32_t acted;
                int sign;
                if (dual < SpinorModule::dim_w) { // wedge a_{dual+1}
                    if (mp & (1u << dual)) continue;
                    acted = mp | (1u << dual);
                    sign = left_sign(mp, dual + 1);
                } else { // contract
                    int i = dual - SpinorModule::dim_w;
                    if (!(mp & (1u << i))) continue;
                    acted = mp & ~(1u << i);
                    sign = left_sign(acted, i + 1);
                }
                if ((acted & mq) != 0 || (acted | mq) != 31) continue;
                sign *= reversal_sign(acted) * shuffle_sign(acted, mq);
                gamma.table[size_t(p * n + q) * 10 + size_t(c)] = Scalar(sign);
            }
        }
    return gamma;
}

namespace {

// Solver for expanding an even operator in span{so10 generators, identity}.
struct SpanSolver {
    std::vector<std::vector<Scalar>> columns; // flattened, 46 of them
    std::vector<size_t> chosen_rows;
    Matrix inverse; // of the chosen-rows square submatrix

    explicit SpanSolver(const SpinorModule& spin) {
        const size_t flat = SpinorModule::dim_module * SpinorModule::dim_module;
        for (const Matrix& g : spin.so10) columns.push_back(g.a);
        columns.push_back(Matrix::identity(SpinorModule::dim_module).a);
        const size_t nc = columns.size();

        // Greedy pivot-row selection via incremental elimination.
        std::vector<std::vector<Scalar>> reduced; // rows in echelon over nc cols
        std::vector<size_t> pivot_col;
        for (size_t r = 0; r < flat && chosen_rows.size() < nc; ++r) {
            std::vector<Scalar> row(nc);
            bool nz = false;
            for (size_t j = 0; j < nc; ++j) {
                row[j] = columns[j][r];
                if (!row[j].is_zero()) nz = true;
            }
            if (!nz) continue;
            for (size_t k = 0; k < reduced.size(); ++k) {
                const Scalar& f = row[pivot_col[k]];
                if (f.is_zero()) continue;
                Scalar ff = f;
                for (size_t j = 0; j < nc; ++j) row[j] = row[j] - ff * reduced[k][j];
            }
            size_t pc = nc;
            for (size_t j = 0; j < nc; ++j)
                if (!row[j].is_zero()) { pc = j; break; }
            if (pc == nc) continue;
            Scalar inv = row[pc].inverse();
            for (size_t j = 0; j < nc; ++j) row[j] = row[j] * inv;
            reduced.push_back(std::move(row));
            pivot_col.push_back(pc);
            chosen_rows.push_back(r);
        }
        if (chosen_rows.size() != nc) throw error("generator span is degenerate");

        // Invert the square submatrix by augmented elimination.
        Matrix aug(nc, 2 * nc);
        for (size_t i = 0; i < nc; ++i) {
            for (size_t j = 0; j < nc; ++j) aug.at(i, j) = columns[j][chosen_rows[i]];
            aug.at(i, nc + i) = Scalar(1);
        }
        auto pivots = aug.rref();
        for (size_t j = 0; j < nc; ++j)
            if (j >= pivots.size() || pivots[j] != j) throw error("span submatrix is singular");
        inverse = Matrix(nc, nc);
        for (size_t i = 0; i < nc; ++i)
            for (size_t j = 0; j < nc; ++j) inverse.at(i, j) = aug.at(i, nc + j);
    }

    // Coefficients over the 45 generators; throws if the identity coefficient
    // is nonzero or the matrix is outside the span.
    std::vector<Scalar> expand(const Matrix& m) const {
        const size_t nc = columns.size();
        std::vector<Scalar> sub(nc);
        for (size_t i = 0; i < nc; ++i) sub[i] = m.a[chosen_rows[i]];
        std::vector<Scalar> x = inverse.apply(sub);
        // Full verification against the flattened columns.
        for (size_t r = 0; r < m.a.size(); ++r) {
            Scalar acc;
            for (size_t j = 0; j < nc; ++j)
                if (!x[j].is_zero()) acc = acc + x[j] * columns[j][r];
            if (!(acc == m.a[r])) throw error("operator not in the so(10) span");
        }
        if (!x[nc - 1].is_zero()) throw error("bracket has an identity component");
        x.pop_back();
        return x;
    }
};

} // namespace

std::vector<Scalar> SuperLieAlgebra::bracket_basis(size_t i, size_t j) const {
    std::vector<Scalar> v(dim);
    for (const auto& [k, c] : bracket_table[i * dim + j]) v[k] = v[k] + c;
    return v;
}

std::vector<Scalar> SuperLieAlgebra::bracket(const std::vector<Scalar>& x,
                                             const std::vector<Scalar>& y) const {
    std::vector<Scalar> v(dim);
    for (size_t i = 0; i < dim; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            for (const auto& [k, c] : bracket_table[i * dim + j]) v[k] = v[k] + x[i] * y[j] * c;
        }
    }
    return v;
}

SuperLieAlgebra build_siso(const SpinorModule& spin, const GammaPlus& gamma) {
    SuperLieAlgebra alg;
    alg.spin = &spin;
    alg.names = spin.so10_names;
    for (int i = 1; i <= SpinorModule::dim_w; ++i) alg.names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= SpinorModule::dim_w; ++i) alg.names.push_back("a" + std::to_string(i) + "*");
    for (int a = 1; a <= 2; ++a)
        for (int p = 0; p < SpinorModule::dim_splus; ++p)
            alg.names.push_back("s" + std::to_string(p) + "e" + std::to_string(a));

    const size_t dim = SuperLieAlgebra::dim;
    alg.bracket_table.assign(dim * dim, {});
    auto set = [&](size_t i, size_t j, std::vector<std::pair<size_t, Scalar>> entries) {
        alg.bracket_table[i * dim + j] = std::move(entries);
    };

    SpanSolver solver(spin);
    std::vector<Matrix> splus_gens;
    for (const Matrix& g : spin.so10) splus_gens.push_back(spin.restrict_splus(g));

    // so(10) x so(10): matrix commutator expanded over the generators.
    for (size_t g = 0; g < SuperLieAlgebra::so_count; ++g)
        for (size_t h = g + 1; h < SuperLieAlgebra::so_count; ++h) {
            Matrix comm = spin.so10[g] * spin.so10[h] - spin.so10[h] * spin.so10[g];
            std::vector<Scalar> x = solver.expand(comm);
            std::vector<std::pair<size_t, Scalar>> ent, neg;
            for (size_t k = 0; k < x.size(); ++k)
                if (!x[k].is_zero()) {
                    ent.emplace_back(k, x[k]);
                    neg.emplace_back(k, -x[k]);
                }
            set(g, h, ent);
            set(h, g, neg);
        }

    // so(10) x C^10 and so(10) x odd via the action tables.
    for (size_t g = 0; g < SuperLieAlgebra::so_count; ++g) {
        const Matrix& v = spin.so10_vec[g];
        for (size_t c = 0; c < SuperLieAlgebra::vec_count; ++c) {
            std::vector<std::pair<size_t, Scalar>> ent, neg;
            for (size_t d = 0; d < 10; ++d)
                if (!v.at(d, c).is_zero()) {
                    ent.emplace_back(SuperLieAlgebra::vec_begin + d, v.at(d, c));
                    neg.emplace_back(SuperLieAlgebra::vec_begin + d, -v.at(d, c));
                }
            set(g, SuperLieAlgebra::vec_begin + c, ent);
            set(SuperLieAlgebra::vec_begin + c, g, neg);
        }
        const Matrix& s = splus_gens[g];
        for (int a = 0; a < 2; ++a)
            for (int p = 0; p < SpinorModule::dim_splus; ++p) {
                size_t col = SuperLieAlgebra::odd_begin + size_t(a * 16 + p);
                std::vector<std::pair<size_t, Scalar>> ent, neg;
                for (int r = 0; r < SpinorModule::dim_splus; ++r)
                    if (!s.at(size_t(r), size_t(p)).is_zero()) {
                        size_t row = SuperLieAlgebra::odd_begin + size_t(a * 16 + r);
                        ent.emplace_back(row, s.at(size_t(r), size_t(p)));
                        neg.emplace_back(row, -s.at(size_t(r), size_t(p)));
                    }
                set(g, col, ent);
                set(col, g, neg);
            }
    }

    // odd x odd: gamma pairing against the orthonormal pairing on C^2;
    // symmetric (both inputs odd).
    for (int a = 0; a < 2; ++a)
        for (int p = 0; p < SpinorModule::dim_splus; ++p)
            for (int q = 0; q < SpinorModule::dim_splus; ++q) {
                size_t ip = SuperLieAlgebra::odd_begin + size_t(a * 16 + p);
                size_t iq = SuperLieAlgebra::odd_begin + size_t(a * 16 + q);
                std::vector<std::pair<size_t, Scalar>> ent;
                for (int c = 0; c < 10; ++c) {
                    const Scalar& g = gamma.table[size_t(p * 16 + q) * 10 + size_t(c)];
                    if (!g.is_zero()) ent.emplace_back(SuperLieAlgebra::vec_begin + size_t(c), g);
                }
                set(ip, iq, ent);
            }

    // Validate graded antisymmetry and graded Jacobi on all basis triples.
    auto parity = [&](size_t i) { return alg.is_odd(i) ? 1 : 0; };
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            std::vector<Scalar> lhs = alg.bracket_basis(i, j);
            std::vector<Scalar> rhs = alg.bracket_basis(j, i);
            int sgn = (parity(i) && parity(j)) ? 1 : -1;
            for (size_t k = 0; k < dim; ++k)
                if (!(lhs[k] == rhs[k] * Scalar(sgn)))
                    throw error("graded antisymmetry fails at " + alg.names[i] + ", " +
                                alg.names[j]);
        }
    std::vector<Scalar> acc(dim);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
            for (size_t k = 0; k < dim; ++k) {
                std::vector<size_t> touched;
                auto add = [&](size_t idx, const Scalar& c) {
                    if (acc[idx].is_zero() && !c.is_zero()) touched.push_back(idx);
                    acc[idx] = acc[idx] + c;
                };
                for (const auto& [m, c] : alg.bracket_table[j * dim + k])
                    for (const auto& [t, d] : alg.bracket_table[i * dim + m]) add(t, c * d);
                for (const auto& [m, c] : alg.bracket_table[i * dim + j])
                    for (const auto& [t, d] : alg.bracket_table[m * dim + k]) add(t, -(c * d));
                Scalar sgn(parity(i) && parity(j) ? -1 : 1);
                for (const auto& [m, c] : alg.bracket_table[i * dim + k])
                    for (const auto& [t, d] : alg.bracket_table[j * dim + m])
                        add(t, -(sgn * (c * d)));
                bool bad = false;
                for (size_t t : touched) {
                    if (!acc[t].is_zero()) bad = true;
                    acc[t] = Scalar();
                }
                if (bad)
                    throw error("graded Jacobi fails at " + alg.names[i] + ", " + alg.names[j] +
                                ", " + alg.names[k]);
            }
    return alg;
}

std::vector<Scalar> supercharge_q(const SuperLieAlgebra& alg) {
    std::vector<Scalar> q(SuperLieAlgebra::dim);
    q[SuperLieAlgebra::odd_begin + size_t(alg.spin->splus_index[0])] = Scalar(1);
    return q;
}

QCohomology q_cohomology(const SuperLieAlgebra& alg, const std::vector<Scalar>& q) {
    const size_t dim = SuperLieAlgebra::dim;
    std::vector<Scalar> qq = alg.bracket(q, q);
    for (const auto& x : qq)
        if (!x.is_zero()) throw error("supercharge does not square to zero");

    QCohomology coh;
    coh.differential = Matrix(dim, dim);
    for (size_t j = 0; j < dim; ++j) {
        std::vector<Scalar> unit(dim);
        unit[j] = Scalar(1);
        std::vector<Scalar> col = alg.bracket(q, unit);
        for (size_t i = 0; i < dim; ++i) coh.differential.at(i, j) = col[i];
    }
    if (!(coh.differential * coh.differential).is_zero())
        throw error("differential does not square to zero");

    const size_t even_n = SuperLieAlgebra::odd_begin;
    auto block = [&](bool domain_even) {
        size_t c0 = domain_even ? 0 : even_n;
        size_t nc = domain_even ? even_n : dim - even_n;
        Matrix m(dim, nc);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < nc; ++j) m.at(i, j) = coh.differential.at(i, c0 + j);
        return m;
    };
    auto reps = [&](bool even_part) -> std::vector<std::vector<Scalar>> {
        Matrix dom = block(even_part);
        Matrix img = block(!even_part);
        size_t c0 = even_part ? 0 : even_n;
        // Image vectors (full-dimension coordinates).
        std::vector<std::vector<Scalar>> span;
        for (size_t j = 0; j < img.cols; ++j) {
            std::vector<Scalar> v(dim);
            bool nz = false;
            for (size_t i = 0; i < dim; ++i) {
                v[i] = img.at(i, j);
                if (!v[i].is_zero()) nz = true;
            }
            if (nz) span.push_back(std::move(v));
        }
        span = row_space_basis(span);
        std::vector<std::vector<Scalar>> out;
        for (const auto& k : dom.nullspace()) {
            std::vector<Scalar> v(dim);
            for (size_t j = 0; j < k.size(); ++j) v[c0 + j] = k[j];
            if (!in_span(span, v)) {
                out.push_back(v);
                span.push_back(v);
                span = row_space_basis(span);
            }
        }
        return out;
    };
    coh.even_reps = reps(true);
    coh.odd_reps = reps(false);
    coh.even_dim = coh.even_reps.size();
    coh.odd_dim = coh.odd_reps.size();
    return coh;
}

ResContext ResContext::standard() {
    ResContext ctx;
    ctx.bg = BackgroundDescriptor::parse("C[z1,z2,z3,z4,z5]");
    ctx.reg = ctx.bg.build_registry({});
    for (int i = 0; i < 5; ++i) {
        ctx.z[size_t(i)] = *ctx.reg.find_even("z" + std::to_string(i + 1));
        ctx.theta[size_t(i)] = *ctx.reg.find_odd("Dz" + std::to_string(i + 1));
    }
    return ctx;
}

ResClass ResClass::sl5(const Matrix& a) { return {Summand::sl5, a, {}}; }
ResClass ResClass::wedge3(int i, int j, int k) { return {Summand::wedge3, Matrix(), {i, j, k}}; }
ResClass ResClass::vector_field(int i) { return {Summand::vector_field, Matrix(), {i, 0, 0}}; }
ResClass ResClass::odd_unit() { return {Summand::odd_unit, Matrix(), {}}; }
ResClass ResClass::odd_wedge2(int i, int j) { return {Summand::odd_wedge2, Matrix(), {i, j, 0}}; }
ResClass ResClass::odd_dual(int i) { return {Summand::odd_dual, Matrix(), {i, 0, 0}}; }

Multivector res_map(const ResClass& h, const ResContext& ctx) {
    auto check_idx = [&](int count) {
        for (int t = 0; t < count; ++t) {
            if (h.idx[size_t(t)] < 1 || h.idx[size_t(t)] > 5)
                throw error("coordinate index out of range");
            for (int u = 0; u < t; ++u)
                if (h.idx[size_t(t)] == h.idx[size_t(u)])
                    throw error("repeated coordinate index");
        }
    };
    auto th = [&](int i) { return Multivector::generator(ctx.reg, ctx.theta[size_t(i - 1)]); };
    auto zv = [&](int i) { return Multivector::variable(ctx.reg, ctx.z[size_t(i - 1)]); };
    switch (h.summand) {
        case ResClass::Summand::sl5: {
            if (h.A.rows != 5 || h.A.cols != 5) throw error("sl(5) class needs a 5x5 matrix");
            Scalar tr;
            for (size_t i = 0; i < 5; ++i) tr = tr + h.A.at(i, i);
            if (!tr.is_zero()) throw error("sl(5) class must be traceless");
            Multivector out = Multivector::zero(ctx.reg);
            for (int i = 1; i <= 5; ++i)
                for (int j = 1; j <= 5; ++j) {
                    const Scalar& c = h.A.at(size_t(i - 1), size_t(j - 1));
                    if (!c.is_zero()) out.add(Multivector::scalar(ctx.reg, c) * zv(i) * th(j));
                }
            return out;
        }
        case ResClass::Summand::wedge3:
            check_idx(3);
            return th(h.idx[0]) * th(h.idx[1]) * th(h.idx[2]);
        case ResClass::Summand::vector_field:
            check_idx(1);
            return th(h.idx[0]);
        case ResClass::Summand::odd_unit:
            return Multivector::zero(ctx.reg);
        case ResClass::Summand::odd_wedge2:
            check_idx(2);
            return th(h.idx[0]) * th(h.idx[1]);
        case ResClass::Summand::odd_dual:
            check_idx(1);
            return zv(h.idx[0]);
    }
    throw error("unknown summand");
}

} // namespace sdual
