#pragma once

#include <optional>
#include <vector>

#include "orbits/partition.hpp"

namespace orbits {

/*
 * Nilpotent orbits are labelled by their partitions, except in type D where
 * a very even partition (eps = +1, all parts even) is shared by two orbits
 * distinguished by a label I / II.  Lusztig-Spaltenstein induction acts on
 * partitions by adding 2 to the leading entries and collapsing once when the
 * parity rule breaks; it is the exact inverse of the reduction step.
 */

enum class Label { I, II };

inline const char* label_name(Label l) { return l == Label::I ? "I" : "II"; }

// eps = +1, N > 0 and all parts even (forces 4 | N).
bool very_even(const Partition& p);

struct NilpotentOrbit {
    Partition partition;
    std::optional<Label> label; // present iff very_even(partition)
};

// Validates the partition and enforces the label rule: mandatory for very
// even type-D partitions, forbidden otherwise.
NilpotentOrbit make_orbit(int eps, std::vector<int> parts, std::optional<Label> label = {});

// Partition of Ind^k_{gl_i x m}(O_mu): entries 1..i of mu gain 2 (extending
// with zeros); if the result breaks the parity rule, entry i loses 1 and
// entry i+1 gains 1.  Throws invalid_collapse if still invalid (unreachable
// on valid inputs).
std::vector<int> induce_parts(int eps, const std::vector<int>& mu, int i);

// Single induction step with label bookkeeping: a very even result inherits
// its label from mu when |mu| > 0 and from the inducing Levi when |mu| = 0
// (levi_label mandatory in that case).
NilpotentOrbit induce_step(const NilpotentOrbit& mu, int i,
                           std::optional<Label> levi_label = {});

// Iterated induction through the terms of a Levi sequence, applied in
// ascending term order (the resulting partition does not depend on the
// order).  The final label is resolved once: from the residue when it is
// nonempty, from levi_label when the residue is empty.
NilpotentOrbit induce_through(const std::vector<int>& levi_terms,
                              const NilpotentOrbit& residue,
                              std::optional<Label> levi_label = {});

// True when some maximal admissible sequence has empty residue, i.e. the
// orbit is induced from a zero orbit.
bool is_richardson(const Partition& p);

} // namespace orbits
