#include "orbits/sheets.hpp"

#include <algorithm>

#include "orbits/ks.hpp"

namespace orbits {

namespace {

bool all_even(const std::vector<int>& v) {
    for (int t : v)
        if (t % 2 == 1) return false;
    return true;
}

// Very even restricted sequence for the ambient algebra (eps, N): type D,
// R = 0, all terms even (even rank is then automatic).
bool very_even_sequence(int eps, int N, const std::vector<int>& terms) {
    if (eps != 1 || N == 0 || N % 2 == 1) return false;
    int sum = 0;
    for (int t : terms) sum += t;
    return N - 2 * sum == 0 && all_even(terms) && (N / 2) % 2 == 0;
}

} // namespace

std::vector<SheetDatum> sheets_containing(const NilpotentOrbit& orbit) {
    const Partition& p = orbit.partition;
    const CentraliserDims d = dims(p);
    std::vector<SheetDatum> out;
    for (const auto& rep : enumerate_maximal(p).reps) {
        SheetDatum datum{RestrictedSequence{rep.indices, {}},
                         NilpotentOrbit{rep.residue, {}},
                         static_cast<int>(rep.indices.size()),
                         d.dim_k - d.dim_k_e + static_cast<long long>(rep.indices.size())};
        if (very_even_sequence(p.eps(), p.total(), rep.indices))
            datum.levi.label = orbit.label;
        if (very_even(rep.residue)) {
            // for very even p the label travels down the chain unchanged;
            // otherwise both labelled residues give the same conjugate pair
            // and we report the canonical one
            datum.rigid_residue.label = orbit.label ? orbit.label : std::optional<Label>(Label::I);
        }
        out.push_back(std::move(datum));
    }
    std::sort(out.begin(), out.end(), [](const SheetDatum& a, const SheetDatum& b) {
        return a.levi.terms < b.levi.terms;
    });
    return out;
}

namespace {

void gen_sequences(int budget, int max_term, std::vector<int>& acc,
                   std::vector<std::vector<int>>& out) {
    out.push_back(acc);
    for (int t = std::min(budget, max_term); t >= 1; --t) {
        acc.push_back(t);
        gen_sequences(budget - t, t, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<RestrictedSequence> levi_classes(int eps, int rank, bool type_d) {
    if (rank < 1) throw error("rank must be >= 1");
    if (eps != 1 && eps != -1) throw error("eps must be +1 or -1");
    if (type_d && eps != 1) throw error("type D requires eps = +1");
    const int N = (eps == -1) ? 2 * rank : (type_d ? 2 * rank : 2 * rank + 1);

    std::vector<std::vector<int>> seqs;
    std::vector<int> acc;
    gen_sequences(rank, rank, acc, seqs);
    std::sort(seqs.begin(), seqs.end());

    std::vector<RestrictedSequence> out;
    for (auto& terms : seqs) {
        int sum = 0;
        for (int t : terms) sum += t;
        if (type_d && N - 2 * sum == 2) continue;
        if (very_even_sequence(eps, N, terms)) {
            out.push_back(RestrictedSequence{terms, Label::I});
            out.push_back(RestrictedSequence{terms, Label::II});
        } else {
            out.push_back(RestrictedSequence{std::move(terms), {}});
        }
    }
    return out;
}

WReport w_report(const NilpotentOrbit& orbit) {
    const Partition& p = orbit.partition;
    const Classification cls = classify(p);
    const Stats st = stats(p);
    WReport out{};
    out.is_rigid = cls.rigid;
    out.is_induced = !cls.rigid || p.total() == 0;
    out.unique_sheet = cls.non_singular;
    out.dim_E = st.z;
    out.E_polynomial = cls.non_singular;
    out.dim_E_Gamma = st.s_bar;
    const int exponent = (p.eps() == -1) ? st.nu : std::max(st.nu - 1, 0);
    out.gamma_order = 1LL << exponent;
    return out;
}

} // namespace orbits
