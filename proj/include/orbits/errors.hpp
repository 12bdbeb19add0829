#pragma once

#include <stdexcept>
#include <string>

namespace orbits {

// Base class for all domain errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A part value breaks the parity-multiplicity rule for the chosen form sign:
// eps = -1 requires odd parts in even multiplicity, eps = +1 requires even
// parts in even multiplicity.
struct parity_violation : error {
    int part;
    int multiplicity;
    parity_violation(int part_, int mult_, int eps)
        : error("parity violation: part " + std::to_string(part_) + " occurs " +
                std::to_string(mult_) + " time(s), which is not allowed for eps=" +
                (eps < 0 ? std::string("-1") : std::string("+1"))),
          part(part_), multiplicity(mult_) {}
};

struct negative_part : error {
    int part;
    explicit negative_part(int part_)
        : error("negative part " + std::to_string(part_) + " in partition"), part(part_) {}
};

struct index_out_of_range : error {
    int index;
    explicit index_out_of_range(int i)
        : error("index " + std::to_string(i) + " out of range"), index(i) {}
};

// Raised by a single reduction step when neither Case 1 nor Case 2 applies.
struct not_admissible : error {
    int index;
    explicit not_admissible(int i)
        : error("index " + std::to_string(i) + " is not admissible"), index(i) {}
};

// Raised when the k-th entry of a sequence fails to be admissible for the
// partition produced by the preceding prefix (k is 1-based).
struct not_admissible_at_step : error {
    int step;
    explicit not_admissible_at_step(int k)
        : error("sequence is not admissible at step " + std::to_string(k)), step(k) {}
};

struct label_forbidden : error {
    label_forbidden() : error("label is only allowed for very even orbits in type D") {}
};

struct label_required : error {
    label_required() : error("a label I/II is required for a very even orbit in type D") {}
};

// The column-adjusted partition produced by induction is still invalid.  This
// cannot happen for valid inputs and signals a logic error.
struct invalid_collapse : error {
    invalid_collapse() : error("induced partition is invalid even after collapse") {}
};

} // namespace orbits
