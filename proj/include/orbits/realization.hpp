#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbits/linalg.hpp"
#include "orbits/partition.hpp"

namespace orbits {

/*
 * Exact matrix model of (V, form, e) for a partition lambda: V has basis
 * e^s w_i with 0 <= s < part(i), e shifts s by one, and the Gram matrix is
 * fixed by the normalization (w_i, e^{part(i)-1} w_{i'}) = 1 for i <= i'.
 * In closed form
 *
 *   (e^a w_i, e^b w_j) = 0 unless j = i' and a + b = part(i) - 1,
 *                        in which case it equals (-1)^a * pm(i <= i').
 *
 * The involution sigma(M) = -X^{-1} M^T X fixes k_e and negates p_e.  The
 * maps xi_i^{j,s} send w_i to e^s w_j and extend e-equivariantly; the
 * symmetrized combinations zeta span k_e and the antisymmetrized eta span
 * p_e.  This module realizes all of them as exact matrices and verifies the
 * derived-subalgebra decomposition and index values by brute force.
 */

struct Realization {
    Partition p;
    Involution inv;
    int dimV;
    std::vector<int> offset; // offset[i-1] = column of e^0 w_i
    QMatrix E;
    QMatrix X;
    QMatrix Xinv;

    int index(int i, int s) const { return offset[i - 1] + s; }
};

Realization realize(const Partition& p);

// +1 if i <= j, -1 otherwise.
inline int pm(int i, int j) { return i <= j ? 1 : -1; }

// The sign in sigma(xi_i^{j, part(j)-1-s}) = epsilon_sign * xi_{j'}^{i', part(i)-1-s}.
int epsilon_sign(const Realization& r, int i, int j, int s);

// xi_i^{j,s}: zero matrix whenever (i, j, s) leaves the legal range
// part(j) > s >= part(j) - min(part(i), part(j)) or i, j leave [1, n].
QMatrix xi_matrix(const Realization& r, int i, int j, int s);

// zeta_i^{j,s} = xi_i^{j,pj-1-s} + eps_{ijs} xi_{j'}^{i',pi-1-s}; eta uses -.
QMatrix zeta_matrix(const Realization& r, int i, int j, int s);
QMatrix eta_matrix(const Realization& r, int i, int j, int s);

QMatrix sigma(const Realization& r, const QMatrix& m);

struct BasisElement {
    enum Kind { Xi, Zeta, Eta } kind;
    int i, j, s;
    QMatrix mat;
};

// The full xi basis of g_e: (i, j, part(j)-1-s) over 0 <= s < min(part(i), part(j)).
std::vector<BasisElement> xi_basis(const Realization& r);

// Basis of k_e split into the three families: H preserves every block
// space, N0 swaps paired blocks, N1 moves between unpaired ones.  N1_minus
// is the tightly nested sublist of N1.
struct KBasis {
    std::vector<BasisElement> H;
    std::vector<BasisElement> N0;
    std::vector<BasisElement> N1;
    std::vector<BasisElement> N1_minus;

    std::vector<BasisElement> all() const;
};

KBasis k_basis(const Realization& r);

// A basis of p_e refined from the eta spanning set by exact rank.
std::vector<BasisElement> p_basis(const Realization& r);

struct DerivedSubalgebra {
    RowSpace span;  // inside K^{N^2}
    int dim;
};

DerivedSubalgebra derived_subalgebra(const Realization& r);

// Checks, as exact subspace identities, that the derived subalgebra equals
// N0 + N1plus + H0plus + H1 and that the three intersection claims behind
// that decomposition hold.  failing_component is empty on success.
struct DecompositionReport {
    bool n0_contained;
    bool n1_intersection;
    bool h_intersection;
    bool direct_sum;
    int dim_derived;
    int dim_k_e;
    std::string failing_component;
    bool ok() const { return failing_component.empty(); }
};

DecompositionReport verify_decomposition(const Realization& r);

enum class IndexSpace { g_on_gdual, k_on_kdual, k_on_pdual };

// Minimum stabilizer dimension over `trials` random integer functionals with
// coordinates in [-100, 100]: an upper bound for the generic stabilizer
// dimension that equals it with overwhelming probability.  Deterministic for
// fixed (partition, seed) regardless of evaluation order.
int generic_index(const Realization& r, IndexSpace space, int trials, std::uint64_t seed);

// Counter-based generator used for all sampling in the oracle modules.
std::uint64_t mix64(std::uint64_t x);
int sample_int(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter, int bound);

} // namespace orbits
