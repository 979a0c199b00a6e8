#pragma once

/// Reproducible test family: the diagonal homomorphism loops, their conjugates
/// by Pythagorean-rational SU(2) elements, and pointwise products.

#include <random>
#include <vector>

#include "loopgrass/loops.hpp"

namespace loopgrass {

/// Exact SU(2) elements ((a, b), (-conj b, conj a)) from rational points on S^3.
inline ConstantUnitary su2_from_pair(const GaussianRational& a, const GaussianRational& b) {
    return ConstantUnitary(Mat2{a, b, -b.conj(), a.conj()});
}

inline std::vector<ConstantUnitary> pythagorean_unitaries() {
    using G = GaussianRational;
    std::vector<ConstantUnitary> pool;
    pool.push_back(su2_from_pair(G(rat(3, 5), rat(0)), G(rat(4, 5), rat(0))));
    pool.push_back(su2_from_pair(G(rat(3, 5), rat(0)), G(rat(0), rat(4, 5))));
    pool.push_back(su2_from_pair(G(rat(5, 13), rat(0)), G(rat(12, 13), rat(0))));
    pool.push_back(su2_from_pair(G(rat(3, 13), rat(4, 13)), G(rat(12, 13), rat(0))));
    pool.push_back(su2_from_pair(G(rat(8, 17), rat(0)), G(rat(15, 17), rat(0))));
    pool.push_back(su2_from_pair(G(rat(8, 17), rat(15, 17)), G(rat(0), rat(0))));
    pool.push_back(su2_from_pair(G(rat(20, 29), rat(0)), G(rat(0), rat(21, 29))));
    pool.push_back(su2_from_pair(G(rat(0), rat(0)), G(rat(1), rat(0))));  // Weyl element
    return pool;
}

struct Corpus {
    std::vector<UnitaryLoop> loops;             // lambda_r, conjugates, products
    std::vector<ConstantUnitary> group_elements;
};

/// Deterministic by (max_r, seed). Sizes: (max_r + 1) diagonal loops,
/// |pool| * max_r conjugates, `products` pointwise products of earlier entries.
inline Corpus gen_corpus(long max_r, unsigned long seed, std::size_t products = 15) {
    Corpus c;
    c.group_elements = pythagorean_unitaries();
    for (long r = 0; r <= max_r; ++r) c.loops.push_back(lambda_loop(r));
    for (auto& g : c.group_elements)
        for (long r = 1; r <= max_r; ++r) c.loops.push_back(conjugate_action(g, lambda_loop(r)));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, c.loops.size() - 1);
    for (std::size_t k = 0; k < products; ++k) {
        const UnitaryLoop& f = c.loops[pick(rng)];
        const UnitaryLoop& g = c.loops[pick(rng)];
        c.loops.push_back(loop_product(f, g));
    }
    return c;
}

}  // namespace loopgrass
