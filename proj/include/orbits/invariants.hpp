#pragma once

#include <cstdint>
#include <vector>

#include "orbits/sparse_poly.hpp"

namespace orbits {

/*
 * The elementary invariants x_1, ..., x_N of the centraliser g_e.  With
 * (d_1, ..., d_N) the degree sequence of the partition, x_r is the signed sum
 *
 *   x_r = sum over compositions mu (|mu| = r, d_r nonzero entries) and
 *         permutations w of sgn(w) xi_{i_1}^{i_{w1}, s_1} ... xi_{i_d}^{i_{wd}, s_d},
 *   s_k = part(i_{wk}) - part(i_k) + mu_{i_k} - 1,
 *
 * homogeneous of degree d_r.  The involution sigma acts on generators by
 * sigma(xi_i^{j, part(j)-1-s}) = eps_{ijs} xi_{j'}^{i', part(i)-1-s} and
 * multiplies x_r by (-1)^r; restricting to k_e^* (p_e^*) substitutes each
 * generator by its symmetric (antisymmetric) part.
 */

// Compositions mu of the partition with |mu| = r and exactly d_r nonzero
// entries, each 0 <= mu_k <= part(k).
std::vector<std::vector<int>> compositions(const Partition& p, int r);

// Requires 1 <= r <= N.
SparsePoly elementary_invariant(const Partition& p, int r);

// Multiplicative extension of sigma; an involution.
SparsePoly apply_sigma(const Partition& p, const SparsePoly& poly);

enum class Side { k_side, p_side };

// Substitutes each generator g by (g + sigma g)/2 for k_side and by
// (g - sigma g)/2 for p_side, re-expanded in the generator basis.
SparsePoly restrict_poly(const Partition& p, const SparsePoly& poly, Side side);

// Exact check of q(gamma . Ad(g^{-1})) = q(gamma) for sampled rational
// functionals gamma and sampled unipotent generators g = 1 + t xi_i^{j,s}
// with i != j or s > 0.
bool invariance_holds(const Partition& p, const SparsePoly& q, int trials, std::uint64_t seed);

// invariance_holds applied to x_r.
bool check_invariance(const Partition& p, int r, int trials, std::uint64_t seed);

struct InvariantCounts {
    int even_count;  // #{1 <= r <= N : r even}
    int mixed_count; // #{1 <= r <= N : r + d_r even}
};

InvariantCounts invariant_counts(const Partition& p);

} // namespace orbits
