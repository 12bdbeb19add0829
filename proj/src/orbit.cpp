#include "orbits/orbit.hpp"

#include <algorithm>

#include "orbits/ks.hpp"

namespace orbits {

bool very_even(const Partition& p) {
    if (p.eps() != 1 || p.total() == 0) return false;
    for (int v : p.parts())
        if (v % 2 == 1) return false;
    return true;
}

NilpotentOrbit make_orbit(int eps, std::vector<int> parts, std::optional<Label> label) {
    Partition p = Partition::make(eps, std::move(parts));
    if (very_even(p)) {
        if (!label) throw label_required();
    } else if (label) {
        throw label_forbidden();
    }
    return NilpotentOrbit{std::move(p), label};
}

std::vector<int> induce_parts(int eps, const std::vector<int>& mu, int i) {
    if (i < 1) throw index_out_of_range(i);
    std::vector<int> lam = mu;
    if (static_cast<int>(lam.size()) < i) lam.resize(i, 0);
    for (int k = 0; k < i; ++k) lam[k] += 2;
    if (is_valid_partition(eps, lam)) return lam;
    lam[i - 1] -= 1;
    if (static_cast<int>(lam.size()) < i + 1) lam.resize(i + 1, 0);
    lam[i] += 1;
    if (!is_valid_partition(eps, lam)) throw invalid_collapse();
    return lam;
}

NilpotentOrbit induce_step(const NilpotentOrbit& mu, int i, std::optional<Label> levi_label) {
    Partition result = Partition::make(mu.partition.eps(),
                                       induce_parts(mu.partition.eps(), mu.partition.parts(), i));
    std::optional<Label> label;
    if (very_even(result)) {
        if (mu.partition.total() > 0) {
            // a very even result with R > 0 forces mu very even, so the label exists
            if (!mu.label) throw error("internal: very even induced orbit from unlabeled residue");
            label = mu.label;
        } else {
            if (!levi_label) throw label_required();
            label = levi_label;
        }
    }
    return NilpotentOrbit{std::move(result), label};
}

NilpotentOrbit induce_through(const std::vector<int>& levi_terms,
                              const NilpotentOrbit& residue,
                              std::optional<Label> levi_label) {
    std::vector<int> terms = levi_terms;
    std::sort(terms.begin(), terms.end());
    std::vector<int> parts = residue.partition.parts();
    for (int t : terms) parts = induce_parts(residue.partition.eps(), parts, t);
    Partition result = Partition::make(residue.partition.eps(), std::move(parts));

    std::optional<Label> label;
    if (very_even(result)) {
        if (residue.partition.total() > 0) {
            if (!residue.label) throw error("internal: very even induced orbit from unlabeled residue");
            label = residue.label;
        } else {
            if (!levi_label) throw label_required();
            label = levi_label;
        }
    }
    return NilpotentOrbit{std::move(result), label};
}

bool is_richardson(const Partition& p) {
    for (const auto& rep : enumerate_maximal(p).reps)
        if (rep.residue.total() == 0) return true;
    return false;
}

} // namespace orbits
