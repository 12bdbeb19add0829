#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <vector>

#include "orbits/invariants.hpp"
#include "orbits/realization.hpp"

using namespace orbits;

namespace {

std::vector<Partition> sweep(int max_n) {
    std::vector<Partition> out;
    for (int eps : {-1, 1})
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& p : all_partitions(eps, n)) out.push_back(p);
    return out;
}

rat det(QMatrix a) {
    const int n = a.rows();
    rat d = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            d = -d;
        }
        d *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            const rat f = a(r, col) / a(col, col);
            for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return d;
}

// Independent oracle for e = 0: the r-th coefficient of det(t Id - A) up to
// sign is the sum of the principal r x r minors of A.
rat principal_minor_sum(const QMatrix& a, int r) {
    const int n = a.rows();
    rat total = 0;
    std::vector<int> pick(r);
    std::vector<bool> mask(n, false);
    std::fill(mask.end() - r, mask.end(), true);
    do {
        int k = 0;
        for (int i = 0; i < n; ++i)
            if (mask[i]) pick[k++] = i;
        QMatrix minor(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) minor(i, j) = a(pick[i], pick[j]);
        total += det(minor);
    } while (std::next_permutation(mask.begin(), mask.end()));
    return total;
}

// Functional on g_e for e = 0 induced by the matrix A: gamma(xi_i^{j,0}) = A_{ij}.
std::map<GenLabel, rat> matrix_functional(const QMatrix& a) {
    std::map<GenLabel, rat> values;
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.rows(); ++j) values[GenLabel{i, j, 0}] = a(i - 1, j - 1);
    return values;
}

} // namespace

TEST_CASE("compositions") {
    const Partition p22 = Partition::make(-1, {2, 2});
    const auto c1 = compositions(p22, 1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0] == std::vector<int>{0, 1});
    CHECK(c1[1] == std::vector<int>{1, 0});
    const auto c3 = compositions(p22, 3);
    REQUIRE(c3.size() == 2);
    CHECK(c3[0] == std::vector<int>{1, 2});
    CHECK(c3[1] == std::vector<int>{2, 1});

    const Partition single = Partition::make(-1, {6});
    for (int r = 1; r <= 6; ++r) {
        const auto cr = compositions(single, r);
        REQUIRE(cr.size() == 1);
        CHECK(cr[0] == std::vector<int>{r});
    }
}

TEST_CASE("elementary invariants in closed form") {
    // e regular: x_r = xi_1^{1, r-1}
    const Partition reg = Partition::make(-1, {4});
    for (int r = 1; r <= 4; ++r) {
        SparsePoly expect;
        expect.add_term({GenLabel{1, 1, r - 1}}, 1);
        CHECK(elementary_invariant(reg, r) == expect);
    }

    // e = 0 in rank 2: x_2 is the determinant-like sum
    const Partition zero2 = Partition::make(1, {1, 1});
    SparsePoly expect;
    expect.add_term({GenLabel{1, 1, 0}, GenLabel{2, 2, 0}}, 1);
    expect.add_term({GenLabel{1, 2, 0}, GenLabel{2, 1, 0}}, -1);
    CHECK(elementary_invariant(zero2, 2) == expect);

    // homogeneity of degree d_r
    for (const Partition& p : sweep(6)) {
        const auto degrees = invariant_degrees(p);
        for (int r = 1; r <= p.total(); ++r) {
            const SparsePoly x = elementary_invariant(p, r);
            CHECK_FALSE(x.is_zero());
            for (const auto& [m, c] : x.terms()) CHECK((int)m.size() == degrees[r - 1]);
        }
    }
}

TEST_CASE("sigma multiplies x_r by (-1)^r") {
    const Partition p22 = Partition::make(-1, {2, 2});
    CHECK(apply_sigma(p22, elementary_invariant(p22, 1)) ==
          rat(-1) * elementary_invariant(p22, 1));
    CHECK(apply_sigma(p22, elementary_invariant(p22, 2)) == elementary_invariant(p22, 2));

    for (const Partition& p : sweep(6))
        for (int r = 1; r <= p.total(); ++r) {
            const SparsePoly x = elementary_invariant(p, r);
            const SparsePoly sx = apply_sigma(p, x);
            CHECK(sx == (r % 2 == 0 ? rat(1) : rat(-1)) * x);
            CHECK(apply_sigma(p, sx) == x);
        }
}

TEST_CASE("restrictions vanish by parity and stay distinct otherwise") {
    const Partition p22 = Partition::make(-1, {2, 2});
    CHECK(restrict_poly(p22, elementary_invariant(p22, 1), Side::k_side).is_zero());
    const SparsePoly r2 = restrict_poly(p22, elementary_invariant(p22, 2), Side::k_side);
    const SparsePoly r4 = restrict_poly(p22, elementary_invariant(p22, 4), Side::k_side);
    CHECK_FALSE(r2.is_zero());
    CHECK_FALSE(r4.is_zero());
    CHECK_FALSE(r2 == r4);

    const Partition p31 = Partition::make(1, {3, 1});
    CHECK(restrict_poly(p31, elementary_invariant(p31, 2), Side::p_side).is_zero());

    for (const Partition& p : sweep(6)) {
        const auto degrees = invariant_degrees(p);
        std::vector<SparsePoly> k_survivors, p_survivors;
        for (int r = 1; r <= p.total(); ++r) {
            const SparsePoly x = elementary_invariant(p, r);
            const SparsePoly xk = restrict_poly(p, x, Side::k_side);
            const SparsePoly xp = restrict_poly(p, x, Side::p_side);
            if (r % 2 == 1) CHECK(xk.is_zero());
            if ((r + degrees[r - 1]) % 2 == 1) CHECK(xp.is_zero());
            if (p.eps() == -1 && r % 2 == 0) k_survivors.push_back(xk);
            if (p.eps() == 1 && (r + degrees[r - 1]) % 2 == 0) p_survivors.push_back(xp);
        }
        const auto& survivors = p.eps() == -1 ? k_survivors : p_survivors;
        for (size_t a = 0; a < survivors.size(); ++a) {
            CHECK_FALSE(survivors[a].is_zero());
            for (size_t b = a + 1; b < survivors.size(); ++b)
                CHECK_FALSE(survivors[a] == survivors[b]);
        }
    }
}

TEST_CASE("e = 0 evaluation matches characteristic coefficients") {
    for (int n : {2, 3, 4}) {
        const Partition p = Partition::make(1, std::vector<int>(n, 1));
        // calibrate the per-r sign on diag(1, 2, ..., n)
        QMatrix diag(n, n);
        for (int i = 0; i < n; ++i) diag(i, i) = i + 1;
        std::vector<rat> sign(n + 1, 1);
        for (int r = 1; r <= n; ++r) {
            const rat value = elementary_invariant(p, r).evaluate(matrix_functional(diag));
            const rat expect = principal_minor_sum(diag, r);
            REQUIRE(expect != 0);
            sign[r] = value / expect;
            CHECK((sign[r] == 1 || sign[r] == -1));
        }
        for (int trial = 0; trial < 10; ++trial) {
            QMatrix a(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    a(i, j) = sample_int(99, trial, i * n + j, 9);
            for (int r = 1; r <= n; ++r)
                CHECK(elementary_invariant(p, r).evaluate(matrix_functional(a)) ==
                      sign[r] * principal_minor_sum(a, r));
        }
    }
}

TEST_CASE("invariance under sampled centraliser elements") {
    // trace-like x_1 for e = 0
    CHECK(check_invariance(Partition::make(1, {1, 1}), 1, 20, 7));

    const Partition p22 = Partition::make(-1, {2, 2});
    for (int r = 1; r <= 4; ++r) CHECK(check_invariance(p22, r, 20, 7));

    // negative control: a perturbed invariant must fail
    SparsePoly perturbed = elementary_invariant(p22, 2);
    perturbed += SparsePoly::generator(p22, 1, 2, 0);
    CHECK_FALSE(invariance_holds(p22, perturbed, 20, 7));
}

TEST_CASE("invariant counts") {
    const InvariantCounts c22 = invariant_counts(Partition::make(-1, {2, 2}));
    CHECK(c22.even_count == 2);

    const InvariantCounts c31 = invariant_counts(Partition::make(1, {3, 1}));
    CHECK(c31.mixed_count == 3);

    const InvariantCounts big = invariant_counts(Partition::make(1, {5, 5, 3, 3, 1, 1}));
    CHECK(big.mixed_count == 12);

    for (const Partition& p : sweep(8)) {
        const InvariantCounts counts = invariant_counts(p);
        int odd = 0;
        for (int v : p.parts()) odd += v % 2;
        if (p.eps() == -1) CHECK(counts.even_count == p.total() / 2);
        if (p.eps() == 1) CHECK(counts.mixed_count == (p.total() + odd) / 2);
    }
}
