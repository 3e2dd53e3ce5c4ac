#pragma once

#include "sdual/multivector.hpp"

#include <random>

namespace sdual {

// Seeded generator for property tests; all draws are deterministic given the
// seed.
class RandomGen {
public:
    explicit RandomGen(uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }
    Scalar scalar(bool allow_imaginary = true) {
        mpq_class re(integer(-3, 3), integer(1, 2));
        re.canonicalize();
        if (!allow_imaginary || integer(0, 2) != 0) return Scalar(re);
        mpq_class im(integer(-3, 3), 1);
        return Scalar(re, im);
    }
    Scalar nonzero_scalar() {
        for (;;) {
            Scalar s = scalar();
            if (!s.is_zero()) return s;
        }
    }

    Polynomial polynomial(const std::vector<uint32_t>& vars, uint32_t max_degree,
                          uint32_t max_terms);

    // Random multivector with odd legs drawn from `odds`, polynomial
    // coefficients in `vars`.
    Multivector multivector(const Registry& reg, const std::vector<uint32_t>& odds,
                            const std::vector<uint32_t>& vars, uint32_t max_degree,
                            uint32_t max_terms);

    // Homogeneous of given odd degree.
    Multivector homogeneous(const Registry& reg, const std::vector<uint32_t>& odds,
                            const std::vector<uint32_t>& vars, uint32_t odd_degree,
                            uint32_t max_degree, uint32_t max_terms);

private:
    std::mt19937_64 rng_;
};

} // namespace sdual
