#pragma once

#include <optional>
#include <vector>

#include "orbits/orbit.hpp"
#include "orbits/partition.hpp"

namespace orbits {

/*
 * Sheets containing a nilpotent orbit correspond one-to-one with the maximal
 * admissible sequences up to reordering: the sequence gives the gl-factors of
 * a Levi subalgebra, the residue gives the rigid orbit sitting inside it.
 * The rank of the sheet is the sequence length and its dimension is
 * dim k - dim k_e + rank.
 */

// Conjugacy class of a Levi subalgebra gl_{i_1} x ... x gl_{i_l} x m, stored
// as the multiset of gl sizes sorted non-increasing.  In type D a "very even"
// sequence (R = 0, all terms even, even rank) splits into two classes
// labelled I and II.
struct RestrictedSequence {
    std::vector<int> terms;
    std::optional<Label> label;
};

struct SheetDatum {
    RestrictedSequence levi;
    NilpotentOrbit rigid_residue;
    int rank;
    long long dim_sheet;
};

// One datum per class of maximal admissible sequences, ordered
// lexicographically by terms.  Rigid orbits yield a single datum with empty
// Levi sequence and rank 0.
std::vector<SheetDatum> sheets_containing(const NilpotentOrbit& orbit);

// All conjugacy classes of Levi subalgebras of the algebra of the given rank:
// multisets with sum <= rank, excluding R = 2 in type D, with two labelled
// copies for very even sequences.  type_d distinguishes so_{2r} from
// so_{2r+1} when eps = +1; it must be false for eps = -1.
std::vector<RestrictedSequence> levi_classes(int eps, int rank, bool type_d);

// Predicted shape of the abelian quotient of the finite W-algebra attached to
// the orbit, and of its component-group fixed points.  Everything is read off
// the partition: dim_E = z, polynomiality <=> a unique sheet, dim_E_Gamma =
// s_bar, and the component group is elementary abelian of order 2^nu in type
// C and 2^{nu-1} in types B/D.
struct WReport {
    bool is_rigid;
    bool is_induced;
    bool unique_sheet;
    int dim_E;
    bool E_polynomial;
    int dim_E_Gamma;
    long long gamma_order;
};

WReport w_report(const NilpotentOrbit& orbit);

} // namespace orbits
