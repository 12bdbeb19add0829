#pragma once

#include <optional>
#include <vector>

#include "orbits/partition.hpp"

namespace orbits {

/*
 * The Kempken-Spaltenstein reduction: an index i is admissible for lambda
 * when one of two mutually exclusive cases occurs,
 *
 *   Case 1:  part(i) - part(i+1) >= 2,
 *            lambda^(i) subtracts 2 from parts 1..i;
 *   Case 2:  i lies in delta(lambda) and part(i) = part(i+1),
 *            lambda^(i) subtracts 2 from parts 1..i-1 and 1 from parts i, i+1.
 *
 * Either way lambda^(i) is a valid partition of N - 2i with the same sign.
 * Admissible sequences iterate single steps; a sequence is maximal exactly
 * when its residue is rigid.  Phi collects the maximal sequences up to
 * reordering (reordering never changes the residue), represented by their
 * index multisets sorted non-increasing.
 */

enum class CaseKind { case1, case2 };

// Which case, if any, occurs for p at index i.  Throws index_out_of_range
// unless 1 <= i <= length.
std::optional<CaseKind> case_at(const Partition& p, int i);

// Single reduction step. Throws not_admissible when no case occurs at i.
Partition step(const Partition& p, int i);

struct AdmissibleSequence {
    Partition source;
    std::vector<int> indices;
    std::vector<CaseKind> cases;
    Partition result;
};

// Applies the indices left to right; throws not_admissible_at_step(k) at the
// first prefix failure (k is 1-based).
AdmissibleSequence apply_sequence(const Partition& p, const std::vector<int>& indices);

struct PhiRep {
    std::vector<int> indices; // sorted non-increasing
    Partition residue;        // rigid
};

struct PhiSet {
    std::vector<PhiRep> reps; // lexicographically ordered, no duplicates
    int size() const { return static_cast<int>(reps.size()); }
};

// Exhaustive enumeration of the maximal admissible sequences up to
// reordering, memoized on intermediate partitions.
PhiSet enumerate_maximal(const Partition& p);

// Maximum sequence length, by enumeration.  Serves as the independent oracle
// for the closed formula z(lambda).
int max_sequence_length(const Partition& p);

} // namespace orbits
