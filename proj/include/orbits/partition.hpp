#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbits/errors.hpp"

namespace orbits {

/*
 * Partitions labelling nilpotent orbits of the symplectic (eps = -1) and
 * orthogonal (eps = +1) Lie algebras acting on K^N.  A partition is a weakly
 * decreasing list of positive parts subject to the parity-multiplicity rule:
 * for eps = -1 every odd part occurs with even multiplicity, for eps = +1
 * every even part occurs with even multiplicity.
 *
 * All statistics honour the virtual convention part(i) = 0 for i < 1 or
 * i > length().  Indices are 1-based throughout, matching the combinatorics.
 */
class Partition {
public:
    // Canonicalizes (sorts non-increasing, strips zeros) and validates.
    // Throws negative_part or parity_violation.
    static Partition make(int eps, std::vector<int> raw_parts);

    int eps() const { return eps_; }
    const std::vector<int>& parts() const { return parts_; }
    int total() const { return total_; }                      // N
    int length() const { return static_cast<int>(parts_.size()); } // n

    // 1-based access with virtual zeros outside [1, n].
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    // i = i'  <=>  eps * (-1)^{part(i)} = -1.  Only meaningful for 1 <= i <= n.
    bool fixed(int i) const {
        if (i < 1 || i > length()) return false;
        return (eps_ == -1) == (parts_[i - 1] % 2 == 0);
    }

    std::string to_string() const;

    bool operator==(const Partition& o) const {
        return eps_ == o.eps_ && parts_ == o.parts_;
    }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    Partition(int eps, std::vector<int> parts, int total)
        : eps_(eps), parts_(std::move(parts)), total_(total) {}

    int eps_;
    std::vector<int> parts_;
    int total_;
};

// Non-throwing validity check on raw data (same canonicalization as make).
bool is_valid_partition(int eps, std::vector<int> raw_parts);

// The pairing of Jordan blocks forced by the bilinear form, renumbered so
// that i' lies in {i-1, i, i+1}.  Within each block of equal parts either all
// indices are fixed or they are paired consecutively.  Outside [1, n] the
// involution acts as the identity.
class Involution {
public:
    explicit Involution(std::vector<int> prime) : prime_(std::move(prime)) {}

    int operator()(int i) const {
        if (i < 1 || i > static_cast<int>(prime_.size())) return i;
        return prime_[i - 1];
    }
    bool fixed(int i) const { return (*this)(i) == i; }
    int size() const { return static_cast<int>(prime_.size()); }

private:
    std::vector<int> prime_; // prime_[i-1] = i'
};

Involution involution(const Partition& p);

// 2-step data: delta = indices i with i, i+1 both fixed and
// part(i-1) != part(i) >= part(i+1) != part(i+2); bad = 2-steps with an even
// boundary gap; good_clusters = chains in delta spaced by 2 (length >= 2)
// whose outer boundary gaps are odd (the left one is waived at i_1 = 1).
// Good clusters are automatically maximal.
struct TwoSteps {
    std::vector<int> delta;
    std::vector<int> bad;
    std::vector<std::vector<int>> good_clusters;
};

TwoSteps two_steps(const Partition& p);

struct Stats {
    int s;                  // sum over i of floor((part(i) - part(i+1)) / 2)
    int c;                  // s + |delta|, dimension of the abelianization
    int z;                  // c - (|bad| - |good clusters|), max sheet rank
    int nu;                 // #{i fixed with part(i) > part(i+1)}
    int s_bar;              // s, plus 1 for exceptional partitions
    std::vector<int> kappa; // consecutive differences mod 2, length n
};

Stats stats(const Partition& p);

struct Classification {
    bool rigid;        // all consecutive differences in {0,1}, no equal-part 2-step
    bool non_singular; // no bad 2-step
    bool exceptional;  // eps=+1, a unique 2-step, all other parts even
};

Classification classify(const Partition& p);

// The canonical reduction of p obtained by applying Case 1 at every index
// until each difference reaches 2 (when an adjacent 2-step demands it) or
// {0,1}, then consuming every good 2-step with one Case 2 step.  Conditions
// are evaluated on the current partition, indices processed in ascending
// order.  The returned index sequence is admissible for p and replayable
// through the reduction algorithm.
struct ShellResult {
    Partition shell;
    std::vector<int> sequence;
};

ShellResult shell(const Partition& p);

// Sub-partition cut out by a maximal run [j, k) of fixed indices:
// mu_i = part(i + j - 1) - part(k).  Carries sign +1 when k <= n and the
// ambient sign when k = n + 1.  Empty runs are omitted.
struct Profile {
    int j;
    int k;
    Partition mu;
};

std::vector<Profile> profiles(const Partition& p);

// Centraliser dimensions determined by the partition alone.
//   dim_g_e  = sum over all pairs (i, j) of min(part(i), part(j))
//   dim_k_e  = (dim_g_e - #odd parts) / 2 for eps = +1,
//              (dim_g_e + #odd parts) / 2 for eps = -1
//   dim_k    = N(N+1)/2 for eps = -1, N(N-1)/2 for eps = +1
//   dim_orbit = dim_k - dim_k_e
struct CentraliserDims {
    long long dim_g_e;
    long long dim_k_e;
    long long dim_k;
    long long dim_orbit;
};

CentraliserDims dims(const Partition& p);

// (d_1, ..., d_N): part(1) ones, then part(2) twos, and so on.
std::vector<int> invariant_degrees(const Partition& p);

// Every valid partition of exactly n for the given sign, in lexicographically
// decreasing order of parts.  Empty for eps = -1 and n odd.
std::vector<Partition> all_partitions(int eps, int n);

} // namespace orbits
