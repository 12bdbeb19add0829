#pragma once

#include <compare>
#include <map>
#include <vector>

#include "orbits/linalg.hpp"
#include "orbits/partition.hpp"

namespace orbits {

/*
 * Commutative polynomials in the xi generators of g_e with exact rational
 * coefficients.  A generator is a legal triple (i, j, s); monomials are
 * sorted multisets of generators.  Illegal triples collapse to zero during
 * construction, implementing the zero convention for out-of-range maps.
 */

struct GenLabel {
    int i, j, s;
    auto operator<=>(const GenLabel&) const = default;
};

// part(j) > s >= part(j) - min(part(i), part(j)), with i, j in [1, n].
bool legal_generator(const Partition& p, int i, int j, int s);

using Monomial = std::vector<GenLabel>; // kept sorted

class SparsePoly {
public:
    SparsePoly() = default;

    static SparsePoly zero() { return SparsePoly(); }
    static SparsePoly generator(const Partition& p, int i, int j, int s);

    // Drops the term when the coefficient vanishes.
    void add_term(Monomial m, const rat& coeff);

    const std::map<Monomial, rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const rat& c, const SparsePoly& a);
    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.terms_ == b.terms_;
    }

    // Evaluation against a functional given by its values on the generators.
    rat evaluate(const std::map<GenLabel, rat>& values) const;

private:
    std::map<Monomial, rat> terms_;
};

} // namespace orbits
