#pragma once

#include <random>

#include "gmt/algebra.hpp"

namespace gmt::test {

/// Random unit-determinant matrix with entries of modulus <= 2; candidates
/// whose normalized entries exceed that are rejected so that products of a
/// few samples stay far from the absolute-tolerance regime.
inline ProjectiveMatrix random_unit_det(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.4, 1.4);
    for (;;) {
        Mat2 m{Complex{dist(rng), dist(rng)}, Complex{dist(rng), dist(rng)},
               Complex{dist(rng), dist(rng)}, Complex{dist(rng), dist(rng)}};
        if (std::abs(m.det()) < 0.25) continue;
        ProjectiveMatrix normalized = normalize_det(m);
        if (max_abs_entry(normalized.rep()) > 2.0) continue;
        return normalized;
    }
}

inline Mat2 random_mat2(std::mt19937_64& rng, double scale = 2.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    return {Complex{dist(rng), dist(rng)}, Complex{dist(rng), dist(rng)},
            Complex{dist(rng), dist(rng)}, Complex{dist(rng), dist(rng)}};
}

}  // namespace gmt::test
