#include "sdual/random_gen.hpp"

#include <algorithm>

namespace sdual {

Polynomial RandomGen::polynomial(const std::vector<uint32_t>& vars, uint32_t max_degree,
                                 uint32_t max_terms) {
    Polynomial p;
    uint32_t n = uint32_t(integer(1, max_terms));
    for (uint32_t t = 0; t < n; ++t) {
        Monomial m;
        uint32_t deg = uint32_t(integer(0, max_degree));
        std::vector<uint32_t> exps(vars.size(), 0);
        for (uint32_t d = 0; d < deg && !vars.empty(); ++d)
            exps[size_t(integer(0, long(vars.size()) - 1))] += 1;
        for (size_t i = 0; i < vars.size(); ++i)
            if (exps[i]) m.emplace_back(vars[i], exps[i]);
        std::sort(m.begin(), m.end());
        p.add_term(m, scalar());
    }
    return p;
}

Multivector RandomGen::multivector(const Registry& reg, const std::vector<uint32_t>& odds,
                                   const std::vector<uint32_t>& vars, uint32_t max_degree,
                                   uint32_t max_terms) {
    Multivector m(reg);
    uint32_t n = uint32_t(integer(1, max_terms));
    for (uint32_t t = 0; t < n; ++t) {
        OddMonomial ids;
        for (uint32_t g : odds)
            if (integer(0, 1)) ids.push_back(g);
        Polynomial c = polynomial(vars, max_degree, 2);
        if (c.is_zero()) continue;
        m.add_term(ids, RationalFunction(c));
    }
    return m;
}

Multivector RandomGen::homogeneous(const Registry& reg, const std::vector<uint32_t>& odds,
                                   const std::vector<uint32_t>& vars, uint32_t odd_degree,
                                   uint32_t max_degree, uint32_t max_terms) {
    if (odd_degree > odds.size()) throw error("odd degree exceeds available generators");
    Multivector m(reg);
    uint32_t n = uint32_t(integer(1, max_terms));
    for (uint32_t t = 0; t < n; ++t) {
        std::vector<uint32_t> pool = odds;
        OddMonomial ids;
        for (uint32_t k = 0; k < odd_degree; ++k) {
            size_t pick = size_t(integer(0, long(pool.size()) - 1));
            ids.push_back(pool[pick]);
            pool.erase(pool.begin() + pick);
        }
        Polynomial c = polynomial(vars, max_degree, 2);
        if (c.is_zero()) continue;
        m.add_term(ids, RationalFunction(c));
    }
    if (m.is_zero() && odd_degree <= odds.size()) {
        OddMonomial ids(odds.begin(), odds.begin() + odd_degree);
        m.add_term(ids, RationalFunction(Scalar(1)));
    }
    return m;
}

} // namespace sdual
