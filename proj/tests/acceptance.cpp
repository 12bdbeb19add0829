// Acceptance suite: runs every criterion end to end and prints one pass/fail
// line per criterion.  Exits nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbits/invariants.hpp"
#include "orbits/ks.hpp"
#include "orbits/orbit.hpp"
#include "orbits/realization.hpp"
#include "orbits/sheets.hpp"

using namespace orbits;

namespace {

constexpr std::uint64_t kSeed = 12345;

struct Suite {
    int failures = 0;

    void run(const std::string& name, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << ms << " ms)";
        if (!ok && !detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

std::vector<Partition> sweep(int max_n, int min_n = 0) {
    std::vector<Partition> out;
    for (int eps : {-1, 1})
        for (int n = min_n; n <= max_n; ++n)
            for (const Partition& p : all_partitions(eps, n)) out.push_back(p);
    return out;
}

bool fail(std::string& detail, const Partition& p, const std::string& what) {
    detail = p.to_string() + ": " + what;
    return false;
}

int run_cli(const std::string& args, std::string* out = nullptr) {
    const std::string cmd = std::string(ORBIT_SHEETS_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::string text;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) text.append(buf.data(), got);
    if (out) *out = text;
    return WEXITSTATUS(pclose(pipe));
}

} // namespace

int main() {
    Suite suite;

    suite.run("criterion 1: z equals the enumerated maximal sequence length, N <= 18",
              [](std::string& detail) {
                  for (const Partition& p : sweep(18))
                      if (stats(p).z != max_sequence_length(p))
                          return fail(detail, p, "formula and enumeration disagree");
                  return true;
              });

    suite.run("criterion 2: non-singularity trichotomy, N <= 18", [](std::string& detail) {
        for (const Partition& p : sweep(18)) {
            const Stats st = stats(p);
            const bool no_bad = two_steps(p).bad.empty();
            if (st.c < st.z) return fail(detail, p, "c < z");
            if ((st.c == st.z) != no_bad) return fail(detail, p, "c = z vs bad 2-steps");
            if ((enumerate_maximal(p).size() == 1) != no_bad)
                return fail(detail, p, "|Phi| = 1 vs bad 2-steps");
        }
        return true;
    });

    suite.run("criterion 3: rigidity characterizations, N <= 18", [](std::string& detail) {
        for (const Partition& p : sweep(18)) {
            const bool rigid = classify(p).rigid;
            if ((stats(p).c == 0) != rigid) return fail(detail, p, "c = 0 vs rigid");
            const PhiSet phi = enumerate_maximal(p);
            const bool singleton_empty = phi.size() == 1 && phi.reps[0].indices.empty();
            if (singleton_empty != rigid) return fail(detail, p, "Phi singleton vs rigid");
            for (const PhiRep& rep : phi.reps)
                if (!classify(rep.residue).rigid) return fail(detail, p, "non-rigid residue");
        }
        return true;
    });

    suite.run("criterion 4: induction inverts the reduction, N <= 18", [](std::string& detail) {
        for (const Partition& p : sweep(18)) {
            for (int i = 1; i <= p.length(); ++i) {
                if (!case_at(p, i)) continue;
                if (induce_parts(p.eps(), step(p, i).parts(), i) != p.parts())
                    return fail(detail, p, "induce(step) != id at " + std::to_string(i));
            }
            for (int i = 1; p.total() + 2 * i <= 18; ++i) {
                const Partition up =
                    Partition::make(p.eps(), induce_parts(p.eps(), p.parts(), i));
                if (!case_at(up, i) || step(up, i) != p)
                    return fail(detail, p, "step(induce) != id at " + std::to_string(i));
            }
        }
        return true;
    });

    suite.run("criterion 5: matrix oracle (ranks, abelianization, decomposition), N <= 10",
              [](std::string& detail) {
                  for (const Partition& p : sweep(10, 1)) {
                      const Realization r = realize(p);
                      const CentraliserDims dm = dims(p);
                      std::vector<QVec> flat;
                      for (const auto& el : xi_basis(r)) flat.push_back(flatten(el.mat));
                      if (rank_of(flat, r.dimV * r.dimV) != dm.dim_g_e)
                          return fail(detail, p, "xi rank");
                      flat.clear();
                      for (const auto& el : k_basis(r).all()) flat.push_back(flatten(el.mat));
                      if (rank_of(flat, r.dimV * r.dimV) != dm.dim_k_e)
                          return fail(detail, p, "zeta rank");
                      const DecompositionReport rep = verify_decomposition(r);
                      if (!rep.ok()) return fail(detail, p, "decomposition " + rep.failing_component);
                      if (rep.dim_k_e - rep.dim_derived != stats(p).c)
                          return fail(detail, p, "abelianization dimension");
                  }
                  return true;
              });

    suite.run("criterion 6: worked sheet examples", [](std::string& detail) {
        const auto sp4 = sheets_containing(make_orbit(-1, {2, 2}));
        if (sp4.size() != 2) { detail = "sheet count of (2,2)"; return false; }
        const bool first = sp4[0].levi.terms == std::vector<int>{1} &&
                           sp4[0].rigid_residue.partition == Partition::make(-1, {1, 1}) &&
                           sp4[0].rank == 1 && sp4[0].dim_sheet == 7;
        const bool second = sp4[1].levi.terms == std::vector<int>{2} &&
                            sp4[1].rigid_residue.partition == Partition::make(-1, {}) &&
                            sp4[1].rank == 1 && sp4[1].dim_sheet == 7;
        if (!first || !second) { detail = "sheet data of (2,2)"; return false; }
        const auto one = sheets_containing(make_orbit(-1, {4, 4, 3, 3}));
        if (one.size() != 1 || one[0].rank != 2) { detail = "sheets of (4,4,3,3)"; return false; }
        return true;
    });

    suite.run("criterion 7: profile of (7,7,6,4,4,2,1,1)", [](std::string& detail) {
        const auto pr = profiles(Partition::make(-1, {7, 7, 6, 4, 4, 2, 1, 1}));
        if (pr.size() != 1 || pr[0].j != 3 || pr[0].k != 7 ||
            !(pr[0].mu == Partition::make(1, {5, 3, 3, 1}))) {
            detail = "profile mismatch";
            return false;
        }
        return true;
    });

    suite.run("criterion 8: invariants (parity, restrictions, invariance, counts), N <= 6",
              [](std::string& detail) {
                  for (const Partition& p : sweep(6, 1)) {
                      const auto degrees = invariant_degrees(p);
                      std::vector<SparsePoly> survivors;
                      for (int r = 1; r <= p.total(); ++r) {
                          const SparsePoly x = elementary_invariant(p, r);
                          if (!(apply_sigma(p, x) == (r % 2 == 0 ? rat(1) : rat(-1)) * x))
                              return fail(detail, p, "sigma parity at r=" + std::to_string(r));
                          const SparsePoly xk = restrict_poly(p, x, Side::k_side);
                          const SparsePoly xp = restrict_poly(p, x, Side::p_side);
                          if (r % 2 == 1 && !xk.is_zero())
                              return fail(detail, p, "k restriction at r=" + std::to_string(r));
                          if ((r + degrees[r - 1]) % 2 == 1 && !xp.is_zero())
                              return fail(detail, p, "p restriction at r=" + std::to_string(r));
                          if (p.eps() == -1 && r % 2 == 0) survivors.push_back(xk);
                          if (p.eps() == 1 && (r + degrees[r - 1]) % 2 == 0) survivors.push_back(xp);
                          if (!check_invariance(p, r, 20, kSeed))
                              return fail(detail, p, "invariance at r=" + std::to_string(r));
                      }
                      for (size_t a = 0; a < survivors.size(); ++a) {
                          if (survivors[a].is_zero()) return fail(detail, p, "zero survivor");
                          for (size_t b = a + 1; b < survivors.size(); ++b)
                              if (survivors[a] == survivors[b])
                                  return fail(detail, p, "coinciding survivors");
                      }
                      int odd = 0;
                      for (int v : p.parts()) odd += v % 2;
                      const InvariantCounts counts = invariant_counts(p);
                      if (p.eps() == -1 && counts.even_count != p.total() / 2)
                          return fail(detail, p, "even count");
                      if (p.eps() == 1 && counts.mixed_count != (p.total() + odd) / 2)
                          return fail(detail, p, "mixed count");
                  }
                  return true;
              });

    suite.run("criterion 9: generic index values, N <= 10", [](std::string& detail) {
        for (const Partition& p : sweep(10, 1)) {
            const Realization r = realize(p);
            if (generic_index(r, IndexSpace::g_on_gdual, 8, kSeed) != p.total())
                return fail(detail, p, "index on g_e*");
            if (p.eps() == -1 &&
                generic_index(r, IndexSpace::k_on_kdual, 8, kSeed) != p.total() / 2)
                return fail(detail, p, "index on k_e*");
            if (p.eps() == 1) {
                int odd = 0;
                for (int v : p.parts()) odd += v % 2;
                if (generic_index(r, IndexSpace::k_on_pdual, 8, kSeed) != (p.total() - odd) / 2)
                    return fail(detail, p, "index on p_e*");
            }
        }
        return true;
    });

    suite.run("criterion 10: W-report spot checks", [](std::string& detail) {
        const WReport sp4 = w_report(make_orbit(-1, {2, 2}));
        if (sp4.dim_E != 1 || sp4.E_polynomial || sp4.dim_E_Gamma != 1) {
            detail = "(2,2) in sp_4";
            return false;
        }
        const WReport so10 = w_report(make_orbit(1, {3, 3, 2, 2}));
        if (so10.dim_E != 2 || !so10.E_polynomial || so10.dim_E_Gamma != 2) {
            detail = "(3,3,2,2) in so_10";
            return false;
        }
        for (const Partition& p : sweep(10))
            if (classify(p).rigid) {
                const WReport wr = w_report(NilpotentOrbit{p, {}});
                if (wr.dim_E != 0 || !wr.unique_sheet) return fail(detail, p, "rigid W-report");
            }
        return true;
    });

    suite.run("criterion 11: CLI contract (exit codes, byte stability, default sweep)",
              [](std::string& detail) {
                  if (run_cli("analyze --eps -1 --parts 2,2") != 0) {
                      detail = "valid analyze should exit 0";
                      return false;
                  }
                  if (run_cli("analyze --eps -1 --parts 3,1") != 1) {
                      detail = "invalid partition should exit 1";
                      return false;
                  }
                  if (run_cli("verify --eps both --max-n 4 --checks z-max --inject-failure") != 2) {
                      detail = "verification failure should exit 2";
                      return false;
                  }
                  std::string first, second;
                  run_cli("analyze --eps -1 --parts 7,7,6,4,4,2,1,1 --json", &first);
                  run_cli("analyze --eps -1 --parts 7,7,6,4,4,2,1,1 --json", &second);
                  if (first.empty() || first != second) {
                      detail = "analyze output is not byte-stable";
                      return false;
                  }
                  if (run_cli("verify --jobs 2") != 0) {
                      detail = "default verify sweep should exit 0";
                      return false;
                  }
                  return true;
              });

    std::cout << (suite.failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES present")
              << "\n";
    return suite.failures == 0 ? 0 : 1;
}
