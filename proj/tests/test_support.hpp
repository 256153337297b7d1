#pragma once

// Shared helpers for the doctest suites. All randomness is seeded per
// test so failures reproduce byte for byte.

#include <random>
#include <vector>

#include "turnover/matrix.hpp"
#include "turnover/scalar.hpp"

namespace turnover::testing {

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline mpq_class random_rational(std::mt19937_64& g, long span = 20) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    mpq_class q(num(g), den(g));
    q.canonicalize();
    return q;
}

inline QuadExt random_quadext(std::mt19937_64& g, int d = 3) {
    return QuadExt(random_rational(g), random_rational(g), d);
}

inline SquareMatrix random_exact_matrix(std::mt19937_64& g, int n, int d = 0) {
    std::vector<QuadExt> e;
    e.reserve(static_cast<size_t>(n) * n);
    for (int k = 0; k < n * n; ++k)
        e.push_back(d == 0 ? QuadExt(random_rational(g)) : random_quadext(g, d));
    return SquareMatrix::from_exact(n, std::move(e));
}

inline SquareMatrix random_float_matrix(std::mt19937_64& g, int n) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<double> e(static_cast<size_t>(n) * n);
    for (auto& x : e) x = dist(g);
    return SquareMatrix::from_float(n, std::move(e));
}

// Product of random integer shear matrices: unimodular by construction.
inline SquareMatrix random_unimodular(std::mt19937_64& g, int n, int shears = 8) {
    std::uniform_int_distribution<int> index(0, n - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    SquareMatrix m = SquareMatrix::identity(n, Backend::exact);
    for (int s = 0; s < shears; ++s) {
        int i = index(g), j = index(g);
        if (i == j) continue;
        SquareMatrix shear = SquareMatrix::identity(n, Backend::exact);
        shear.set(i, j, Scalar(QuadExt(coeff(g))));
        m = m * shear;
    }
    return m;
}

} // namespace turnover::testing
