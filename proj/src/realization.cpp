#include "orbits/realization.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace orbits {

Realization realize(const Partition& p) {
    if (p.total() < 1) throw error("realize: partition must be nonempty");
    const int n = p.length();
    const int N = p.total();
    std::vector<int> offset(n);
    int pos = 0;
    for (int i = 1; i <= n; ++i) {
        offset[i - 1] = pos;
        pos += p.part(i);
    }

    Realization r{p, involution(p), N, std::move(offset), QMatrix(N, N), QMatrix(N, N), QMatrix()};

    for (int i = 1; i <= n; ++i)
        for (int s = 0; s + 1 < p.part(i); ++s)
            r.E(r.index(i, s + 1), r.index(i, s)) = 1;

    for (int i = 1; i <= n; ++i) {
        const int ip = r.inv(i);
        for (int a = 0; a < p.part(i); ++a) {
            const int b = p.part(i) - 1 - a;
            r.X(r.index(i, a), r.index(ip, b)) = (a % 2 == 0 ? 1 : -1) * pm(i, ip);
        }
    }
    r.Xinv = inverse(r.X);
    return r;
}

int epsilon_sign(const Realization& r, int i, int j, int s) {
    const int ip = r.inv(i), jp = r.inv(j);
    const int sign = (r.p.part(j) - s) % 2 == 0 ? 1 : -1;
    return sign * pm(i, ip) * pm(j, jp);
}

namespace {

bool legal_xi(const Partition& p, int i, int j, int s) {
    if (i < 1 || i > p.length() || j < 1 || j > p.length()) return false;
    const int pj = p.part(j);
    return s < pj && s >= pj - std::min(p.part(i), pj);
}

} // namespace

QMatrix xi_matrix(const Realization& r, int i, int j, int s) {
    QMatrix m(r.dimV, r.dimV);
    if (!legal_xi(r.p, i, j, s)) return m;
    for (int t = 0; t < r.p.part(i); ++t) {
        if (s + t >= r.p.part(j)) break;
        m(r.index(j, s + t), r.index(i, t)) = 1;
    }
    return m;
}

QMatrix zeta_matrix(const Realization& r, int i, int j, int s) {
    const rat e = epsilon_sign(r, i, j, s);
    return xi_matrix(r, i, j, r.p.part(j) - 1 - s) +
           e * xi_matrix(r, r.inv(j), r.inv(i), r.p.part(i) - 1 - s);
}

QMatrix eta_matrix(const Realization& r, int i, int j, int s) {
    const rat e = epsilon_sign(r, i, j, s);
    return xi_matrix(r, i, j, r.p.part(j) - 1 - s) -
           e * xi_matrix(r, r.inv(j), r.inv(i), r.p.part(i) - 1 - s);
}

QMatrix sigma(const Realization& r, const QMatrix& m) {
    const rat minus_one = -1;
    return minus_one * (r.Xinv * m.transposed() * r.X);
}

std::vector<BasisElement> xi_basis(const Realization& r) {
    std::vector<BasisElement> out;
    const int n = r.p.length();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int s = 0; s < std::min(r.p.part(i), r.p.part(j)); ++s) {
                const int sup = r.p.part(j) - 1 - s;
                out.push_back({BasisElement::Xi, i, j, sup, xi_matrix(r, i, j, sup)});
            }
    return out;
}

std::vector<BasisElement> KBasis::all() const {
    std::vector<BasisElement> out;
    out.reserve(H.size() + N0.size() + N1.size());
    out.insert(out.end(), H.begin(), H.end());
    out.insert(out.end(), N0.begin(), N0.end());
    out.insert(out.end(), N1.begin(), N1.end());
    return out;
}

KBasis k_basis(const Realization& r) {
    KBasis out;
    const Partition& p = r.p;
    const int n = p.length();
    for (int i = 1; i <= n; ++i) {
        const int ip = r.inv(i);
        if (i < ip) {
            for (int s = 0; s < p.part(i); ++s)
                out.H.push_back({BasisElement::Zeta, i, i, s, zeta_matrix(r, i, i, s)});
        } else if (i == ip) {
            for (int s = 0; s < p.part(i); ++s)
                if ((p.part(i) - s) % 2 == 0)
                    out.H.push_back({BasisElement::Zeta, i, i, s, zeta_matrix(r, i, i, s)});
        }
        if (i != ip)
            for (int s = 0; s < p.part(i); ++s)
                if ((p.part(i) - s) % 2 == 1)
                    out.N0.push_back({BasisElement::Zeta, i, ip, s, zeta_matrix(r, i, ip, s)});
    }
    // lower/upper bounds of the blocks of equal parts
    auto lower = [&](int k) {
        int j = k;
        while (j > 1 && p.part(j - 1) == p.part(k)) --j;
        return j;
    };
    auto upper = [&](int k) {
        int j = k;
        while (j < n && p.part(j + 1) == p.part(k)) ++j;
        return j;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (j == r.inv(i)) continue;
            for (int s = 0; s < p.part(j); ++s) {
                BasisElement el{BasisElement::Zeta, i, j, s, zeta_matrix(r, i, j, s)};
                const bool tight = j == i + 1 && s == p.part(j) - 1 && r.inv(i) == i &&
                                   r.inv(j) == j && lower(i) == i && upper(j) == j;
                if (tight) out.N1_minus.push_back(el);
                out.N1.push_back(std::move(el));
            }
        }
    return out;
}

std::vector<BasisElement> p_basis(const Realization& r) {
    std::vector<BasisElement> out;
    RowSpace seen(r.dimV * r.dimV);
    const int n = r.p.length();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int s = 0; s < std::min(r.p.part(i), r.p.part(j)); ++s) {
                BasisElement el{BasisElement::Eta, i, j, s, eta_matrix(r, i, j, s)};
                if (el.mat.is_zero()) continue;
                if (seen.insert(flatten(el.mat))) out.push_back(std::move(el));
            }
    return out;
}

DerivedSubalgebra derived_subalgebra(const Realization& r) {
    const std::vector<BasisElement> basis = k_basis(r).all();
    RowSpace span(r.dimV * r.dimV);
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b)
            span.insert(flatten(commutator(basis[a].mat, basis[b].mat)));
    const int d = span.dim();
    return DerivedSubalgebra{std::move(span), d};
}

namespace {

// H0plus: for each m, the augmentation hyperplanes of the interior ladder
// blocks plus the full last block.  Generators are expressed through class
// representatives [i] = min(i, i').
std::vector<QMatrix> h0_plus_generators(const Realization& r) {
    const Partition& p = r.p;
    const int n = p.length();
    std::vector<int> reps; // class representatives, ascending
    for (int i = 1; i <= n; ++i)
        if (std::min(i, r.inv(i)) == i) reps.push_back(i);

    std::vector<QMatrix> gens;
    for (int m = 1; 2 * m <= p.part(1); ++m) {
        std::vector<int> thresholds{1};
        for (int a = 2; a <= n + 1; ++a)
            if (p.part(a - 1) - p.part(a) >= 2 * m) thresholds.push_back(a);
        for (size_t j = 0; j < thresholds.size(); ++j) {
            const int lo = thresholds[j];
            const int hi = j + 1 < thresholds.size() ? thresholds[j + 1] : n + 1;
            std::vector<int> block;
            for (int i : reps)
                if (i >= lo && i < hi && p.part(i) >= 2 * m) block.push_back(i);
            if (j + 1 < thresholds.size()) {
                // interior block: differences of consecutive classes
                for (size_t t = 0; t + 1 < block.size(); ++t)
                    gens.push_back(zeta_matrix(r, block[t], block[t], p.part(block[t]) - 2 * m) -
                                   zeta_matrix(r, block[t + 1], block[t + 1], p.part(block[t + 1]) - 2 * m));
            } else {
                for (int i : block)
                    gens.push_back(zeta_matrix(r, i, i, p.part(i) - 2 * m));
            }
        }
    }
    return gens;
}

} // namespace

DecompositionReport verify_decomposition(const Realization& r) {
    const int amb = r.dimV * r.dimV;
    const KBasis kb = k_basis(r);
    const DerivedSubalgebra der = derived_subalgebra(r);

    DecompositionReport rep{};
    rep.dim_derived = der.dim;
    rep.dim_k_e = static_cast<int>(kb.all().size());

    // N0 inside the derived subalgebra
    rep.n0_contained = true;
    for (const auto& el : kb.N0)
        if (!der.span.contains(flatten(el.mat))) { rep.n0_contained = false; break; }
    if (!rep.n0_contained) {
        rep.failing_component = "N0";
        return rep;
    }

    // N1 meets the derived subalgebra exactly in N1plus
    RowSpace n1(amb), n1_plus(amb);
    for (const auto& el : kb.N1) n1.insert(flatten(el.mat));
    for (const auto& el : kb.N1) {
        bool tight = false;
        for (const auto& t : kb.N1_minus)
            if (t.i == el.i && t.j == el.j && t.s == el.s) { tight = true; break; }
        if (!tight) n1_plus.insert(flatten(el.mat));
    }
    rep.n1_intersection = same_space(intersect(n1, der.span), n1_plus);
    if (!rep.n1_intersection) {
        rep.failing_component = "N1";
        return rep;
    }

    // H meets the derived subalgebra exactly in H1 + H0plus
    RowSpace h(amb), h1_h0p(amb);
    for (const auto& el : kb.H) h.insert(flatten(el.mat));
    for (int i = 1; i <= r.p.length(); ++i) {
        if (i >= r.inv(i)) continue; // H1 representatives: i < i', odd part(i) - s
        for (int s = 0; s < r.p.part(i); ++s)
            if ((r.p.part(i) - s) % 2 == 1) h1_h0p.insert(flatten(zeta_matrix(r, i, i, s)));
    }
    std::vector<QMatrix> h0p = h0_plus_generators(r);
    int h0p_dim = 0;
    {
        RowSpace h0p_space(amb);
        for (const auto& g : h0p) h0p_space.insert(flatten(g));
        h0p_dim = h0p_space.dim();
    }
    const int h1_dim = h1_h0p.dim();
    for (const auto& g : h0p) h1_h0p.insert(flatten(g));
    rep.h_intersection = same_space(intersect(h, der.span), h1_h0p) &&
                         h1_h0p.dim() == h1_dim + h0p_dim; // H1 and H0plus independent
    if (!rep.h_intersection) {
        rep.failing_component = "H";
        return rep;
    }

    // the four pieces exhaust the derived subalgebra and the sum is direct
    RowSpace total(amb);
    for (const auto& el : kb.N0) total.insert(flatten(el.mat));
    for (const auto& row : n1_plus.basis()) total.insert(row);
    for (const auto& row : h1_h0p.basis()) total.insert(row);
    const int expected = static_cast<int>(kb.N0.size()) + n1_plus.dim() + h1_h0p.dim();
    rep.direct_sum = same_space(total, der.span) && total.dim() == expected;
    if (!rep.direct_sum) rep.failing_component = "sum";
    return rep;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

int sample_int(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter, int bound) {
    const std::uint64_t h = mix64(mix64(seed ^ 0x853c49e6748fea9bULL * stream) ^ counter);
    return static_cast<int>(h % (2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
}

namespace {

constexpr int kSampleBound = 100;

// xi coordinates of M in g_e: the coefficient of xi_i^{j,s} is the entry of
// M at (index(j,s), index(i,0)).
struct XiCoords {
    std::vector<std::array<int, 3>> labels;
    std::vector<std::pair<int, int>> cells;
};

XiCoords xi_coordinate_cells(const Realization& r) {
    XiCoords out;
    const int n = r.p.length();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int t = 0; t < std::min(r.p.part(i), r.p.part(j)); ++t) {
                const int s = r.p.part(j) - 1 - t;
                out.labels.push_back({i, j, s});
                out.cells.emplace_back(r.index(j, s), r.index(i, 0));
            }
    return out;
}

} // namespace

int generic_index(const Realization& r, IndexSpace space, int trials, std::uint64_t seed) {
    if (trials < 1) throw error("generic_index: trials must be >= 1");

    std::vector<QMatrix> acting, module;
    switch (space) {
        case IndexSpace::g_on_gdual:
            for (const auto& el : xi_basis(r)) acting.push_back(el.mat);
            module = acting;
            break;
        case IndexSpace::k_on_kdual:
            for (const auto& el : k_basis(r).all()) acting.push_back(el.mat);
            module = acting;
            break;
        case IndexSpace::k_on_pdual:
            for (const auto& el : k_basis(r).all()) acting.push_back(el.mat);
            for (const auto& el : p_basis(r)) module.push_back(el.mat);
            break;
    }

    // The brackets [a_c, w_row] do not depend on the sampled functional;
    // cache their xi coordinates once as integer sparse vectors.
    const XiCoords coords = xi_coordinate_cells(r);
    const size_t na = acting.size(), nm = module.size();
    std::vector<std::vector<std::pair<std::uint32_t, long long>>> bracket_coords(na * nm);
    for (size_t c = 0; c < na; ++c)
        for (size_t row = 0; row < nm; ++row) {
            const QMatrix bracket = commutator(acting[c], module[row]);
            auto& sparse = bracket_coords[c * nm + row];
            for (size_t k = 0; k < coords.cells.size(); ++k) {
                const auto& [rr, cc] = coords.cells[k];
                const rat& v = bracket(rr, cc);
                if (v != 0) sparse.emplace_back(static_cast<std::uint32_t>(k), v.get_num().get_si());
            }
        }

    int best = static_cast<int>(na);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<long long> gamma(coords.labels.size());
        for (size_t k = 0; k < gamma.size(); ++k)
            gamma[k] = sample_int(seed, 0x67e6c9a1, (std::uint64_t)trial << 32 | k, kSampleBound);

        // stabilizer of gamma = kernel of the (module x acting) pairing matrix
        std::vector<QVec> rows(nm, QVec(na));
        for (size_t c = 0; c < na; ++c)
            for (size_t row = 0; row < nm; ++row) {
                long long value = 0;
                for (const auto& [k, v] : bracket_coords[c * nm + row]) value += gamma[k] * v;
                rows[row][c] = static_cast<long>(value);
            }
        best = std::min(best, static_cast<int>(na) - rank_of(rows, static_cast<int>(na)));
    }
    return best;
}

} // namespace orbits
