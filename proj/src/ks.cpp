#include "orbits/ks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace orbits {

std::optional<CaseKind> case_at(const Partition& p, int i) {
    if (i < 1 || i > p.length()) throw index_out_of_range(i);
    if (p.part(i) - p.part(i + 1) >= 2) return CaseKind::case1;
    if (p.part(i) == p.part(i + 1)) {
        const TwoSteps ts = two_steps(p);
        if (std::binary_search(ts.delta.begin(), ts.delta.end(), i)) return CaseKind::case2;
    }
    return std::nullopt;
}

Partition step(const Partition& p, int i) {
    const auto kind = case_at(p, i);
    if (!kind) throw not_admissible(i);
    std::vector<int> parts = p.parts();
    if (*kind == CaseKind::case1) {
        for (int k = 0; k < i; ++k) parts[k] -= 2;
    } else {
        for (int k = 0; k + 1 < i; ++k) parts[k] -= 2;
        parts[i - 1] -= 1;
        parts[i] -= 1;
    }
    return Partition::make(p.eps(), std::move(parts));
}

AdmissibleSequence apply_sequence(const Partition& p, const std::vector<int>& indices) {
    AdmissibleSequence out{p, indices, {}, p};
    Partition cur = p;
    for (size_t k = 0; k < indices.size(); ++k) {
        std::optional<CaseKind> kind;
        if (indices[k] >= 1 && indices[k] <= cur.length()) kind = case_at(cur, indices[k]);
        if (!kind) throw not_admissible_at_step(static_cast<int>(k) + 1);
        out.cases.push_back(*kind);
        cur = step(cur, indices[k]);
    }
    out.result = cur;
    return out;
}

namespace {

using Memo = std::map<std::vector<int>, std::vector<std::vector<int>>>;

// memo[parts] = multisets (sorted non-increasing) of indices of the maximal
// sequences for that partition.  The continuation depends only on the current
// partition, so memoizing on it collapses all reorderings.
const std::vector<std::vector<int>>& complete(const Partition& p, Memo& memo) {
    auto hit = memo.find(p.parts());
    if (hit != memo.end()) return hit->second;

    std::set<std::vector<int>> acc;
    bool any = false;
    for (int i = 1; i <= p.length(); ++i) {
        if (!case_at(p, i)) continue;
        any = true;
        const Partition q = step(p, i);
        for (const auto& tail : complete(q, memo)) {
            std::vector<int> m = tail;
            m.push_back(i);
            std::sort(m.begin(), m.end(), std::greater<int>());
            acc.insert(std::move(m));
        }
    }
    if (!any) acc.insert(std::vector<int>{});
    return memo[p.parts()] = std::vector<std::vector<int>>(acc.begin(), acc.end());
}

} // namespace

PhiSet enumerate_maximal(const Partition& p) {
    Memo memo;
    PhiSet out;
    for (const auto& rep : complete(p, memo))
        out.reps.push_back(PhiRep{rep, apply_sequence(p, rep).result});
    return out;
}

int max_sequence_length(const Partition& p) {
    int best = 0;
    for (const auto& rep : enumerate_maximal(p).reps)
        best = std::max(best, static_cast<int>(rep.indices.size()));
    return best;
}

} // namespace orbits
