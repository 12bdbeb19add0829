#include "orbits/invariants.hpp"

#include <algorithm>
#include <numeric>

#include "orbits/realization.hpp"

namespace orbits {

namespace {

void gen_compositions(const Partition& p, int k, int remaining, int nonzero_left,
                      std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    const int n = p.length();
    if (k > n) {
        if (remaining == 0 && nonzero_left == 0) out.push_back(acc);
        return;
    }
    if (remaining < nonzero_left || n - k + 1 < nonzero_left) return;
    // mu_k = 0
    acc.push_back(0);
    gen_compositions(p, k + 1, remaining, nonzero_left, acc, out);
    acc.pop_back();
    // mu_k > 0
    for (int v = 1; v <= std::min(p.part(k), remaining); ++v) {
        acc.push_back(v);
        gen_compositions(p, k + 1, remaining - v, nonzero_left - 1, acc, out);
        acc.pop_back();
    }
}

int sgn_of(const std::vector<int>& perm) {
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

} // namespace

std::vector<std::vector<int>> compositions(const Partition& p, int r) {
    if (r < 1 || r > p.total()) throw index_out_of_range(r);
    const int d = invariant_degrees(p)[r - 1];
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    gen_compositions(p, 1, r, d, acc, out);
    return out;
}

SparsePoly elementary_invariant(const Partition& p, int r) {
    if (r < 1 || r > p.total()) throw index_out_of_range(r);
    const int d = invariant_degrees(p)[r - 1];
    SparsePoly x;
    for (const auto& mu : compositions(p, r)) {
        std::vector<int> support; // the indices i_1 < ... < i_d
        for (int k = 1; k <= p.length(); ++k)
            if (mu[k - 1] > 0) support.push_back(k);

        std::vector<int> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            Monomial m;
            bool vanished = false;
            for (int k = 0; k < d; ++k) {
                const int i = support[k];
                const int j = support[perm[k]];
                const int s = p.part(j) - p.part(i) + mu[i - 1] - 1;
                if (!legal_generator(p, i, j, s)) { vanished = true; break; }
                m.push_back(GenLabel{i, j, s});
            }
            if (!vanished) x.add_term(std::move(m), sgn_of(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return x;
}

namespace {

// sigma on a single generator: (i, j, s) -> eps * (j', i', part(i)-1-t) with
// t = part(j)-1-s.
std::pair<int, GenLabel> sigma_generator(const Partition& p, const Involution& inv,
                                         const GenLabel& g) {
    const int t = p.part(g.j) - 1 - g.s;
    const int sign = ((p.part(g.j) - t) % 2 == 0 ? 1 : -1) *
                     (g.i <= inv(g.i) ? 1 : -1) * (g.j <= inv(g.j) ? 1 : -1);
    return {sign, GenLabel{inv(g.j), inv(g.i), p.part(g.i) - 1 - t}};
}

} // namespace

SparsePoly apply_sigma(const Partition& p, const SparsePoly& poly) {
    const Involution inv = involution(p);
    SparsePoly out;
    for (const auto& [m, c] : poly.terms()) {
        rat coeff = c;
        Monomial image;
        for (const GenLabel& g : m) {
            auto [sign, img] = sigma_generator(p, inv, g);
            coeff *= sign;
            image.push_back(img);
        }
        out.add_term(std::move(image), coeff);
    }
    return out;
}

SparsePoly restrict_poly(const Partition& p, const SparsePoly& poly, Side side) {
    const Involution inv = involution(p);
    const rat half(1, 2);
    SparsePoly out;
    for (const auto& [m, c] : poly.terms()) {
        // each factor becomes (g +- sigma g)/2; expand the product
        SparsePoly prod;
        prod.add_term({}, c);
        for (const GenLabel& g : m) {
            auto [sign, img] = sigma_generator(p, inv, g);
            SparsePoly factor;
            factor.add_term({g}, half);
            const rat image_coeff = (side == Side::k_side ? half : -half) * sign;
            factor.add_term({img}, image_coeff);
            prod = prod * factor;
        }
        out += prod;
    }
    return out;
}

bool invariance_holds(const Partition& p, const SparsePoly& x, int trials, std::uint64_t seed) {
    const Realization real = realize(p);
    const int n = p.length();

    // legal generator labels, shared between gamma and the conjugators
    std::vector<GenLabel> labels;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int t = 0; t < std::min(p.part(i), p.part(j)); ++t)
                labels.push_back(GenLabel{i, j, p.part(j) - 1 - t});

    std::vector<GenLabel> nilpotent; // i != j or s > 0
    for (const GenLabel& g : labels)
        if (g.i != g.j || g.s > 0) nilpotent.push_back(g);
    if (nilpotent.empty()) return true; // rank-1 torus only, nothing to test

    constexpr int bound = 20;
    for (int trial = 0; trial < trials; ++trial) {
        std::map<GenLabel, rat> gamma;
        for (size_t k = 0; k < labels.size(); ++k)
            gamma[labels[k]] = sample_int(seed, 0x1fb2a7e3, (std::uint64_t)trial << 32 | k, bound);

        const GenLabel pick =
            nilpotent[mix64(seed ^ mix64(0x5851f42dULL + trial)) % nilpotent.size()];
        int t = sample_int(seed, 0x9d5ab1f7, trial, bound);
        if (t == 0) t = 1;

        const QMatrix g = QMatrix::identity(real.dimV) +
                          rat(t) * xi_matrix(real, pick.i, pick.j, pick.s);
        const QMatrix ginv = inverse(g);

        // gamma' = gamma . Ad(g^{-1}): value on a basis generator is gamma of
        // the xi coordinates of g^{-1} xi g
        std::map<GenLabel, rat> gamma_conj;
        for (const GenLabel& lab : labels) {
            const QMatrix conj = ginv * xi_matrix(real, lab.i, lab.j, lab.s) * g;
            rat value = 0;
            for (const GenLabel& coord : labels) {
                const rat& entry = conj(real.index(coord.j, coord.s), real.index(coord.i, 0));
                if (entry != 0) value += entry * gamma[coord];
            }
            gamma_conj[lab] = value;
        }
        if (x.evaluate(gamma_conj) != x.evaluate(gamma)) return false;
    }
    return true;
}

bool check_invariance(const Partition& p, int r, int trials, std::uint64_t seed) {
    if (r < 1 || r > p.total()) throw index_out_of_range(r);
    return invariance_holds(p, elementary_invariant(p, r), trials, seed);
}

InvariantCounts invariant_counts(const Partition& p) {
    const std::vector<int> degrees = invariant_degrees(p);
    InvariantCounts out{0, 0};
    for (int r = 1; r <= p.total(); ++r) {
        if (r % 2 == 0) ++out.even_count;
        if ((r + degrees[r - 1]) % 2 == 0) ++out.mixed_count;
    }
    return out;
}

} // namespace orbits
