// Command-line front end: per-partition analysis reports, induction, sheet
// and Levi-class listings, and theorem-verification sweeps.
//
// Exit codes: 0 success, 1 invalid input or flags, 2 verification failure.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "orbits/invariants.hpp"
#include "orbits/ks.hpp"
#include "orbits/orbit.hpp"
#include "orbits/realization.hpp"
#include "orbits/sheets.hpp"

using json = nlohmann::json;
using namespace orbits;

namespace {

std::vector<int> parse_csv(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        const int value = std::stoi(item, &used);
        if (used != item.size()) throw error("cannot parse integer list entry '" + item + "'");
        out.push_back(value);
    }
    return out;
}

std::optional<Label> parse_label(const std::string& text) {
    if (text.empty()) return std::nullopt;
    if (text == "I") return Label::I;
    if (text == "II") return Label::II;
    throw error("label must be I or II");
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string seq_text(const std::vector<int>& terms, const std::optional<Label>& label) {
    std::string out = "(" + join(terms) + ")";
    if (label) out += std::string("[") + label_name(*label) + "]";
    return out;
}

json orbit_json(const NilpotentOrbit& o) {
    json j;
    j["parts"] = o.partition.parts();
    j["label"] = o.label ? json(label_name(*o.label)) : json(nullptr);
    return j;
}

json analysis_json(const NilpotentOrbit& orbit) {
    const Partition& p = orbit.partition;
    const Stats st = stats(p);
    const Classification cls = classify(p);
    const TwoSteps ts = two_steps(p);
    const CentraliserDims dm = dims(p);
    const auto sheet_data = sheets_containing(orbit);
    const WReport wr = w_report(orbit);

    json j;
    j["schema"] = 1;
    j["input"]["eps"] = p.eps();
    j["input"]["parts"] = p.parts();
    j["input"]["label"] = orbit.label ? json(label_name(*orbit.label)) : json(nullptr);
    j["valid"] = true;
    j["stats"] = {{"s", st.s},         {"c", st.c},     {"z", st.z},
                  {"nu", st.nu},       {"s_bar", st.s_bar}, {"kappa", st.kappa}};
    j["flags"] = {{"rigid", cls.rigid},
                  {"non_singular", cls.non_singular},
                  {"exceptional", cls.exceptional},
                  {"richardson", is_richardson(p)}};
    j["two_steps"] = {{"delta", ts.delta}, {"bad", ts.bad}, {"clusters", ts.good_clusters}};
    j["dims"] = {{"dim_g_e", dm.dim_g_e},
                 {"dim_k_e", dm.dim_k_e},
                 {"dim_k", dm.dim_k},
                 {"dim_orbit", dm.dim_orbit}};
    j["profiles"] = json::array();
    for (const Profile& pr : profiles(p))
        j["profiles"].push_back({{"j", pr.j}, {"k", pr.k}, {"mu", pr.mu.parts()}});
    j["sheet_count"] = sheet_data.size();
    j["sheets"] = json::array();
    for (const SheetDatum& sd : sheet_data)
        j["sheets"].push_back(
            {{"levi", sd.levi.terms},
             {"levi_label", sd.levi.label ? json(label_name(*sd.levi.label)) : json(nullptr)},
             {"residue", sd.rigid_residue.partition.parts()},
             {"residue_label", sd.rigid_residue.label
                                   ? json(label_name(*sd.rigid_residue.label))
                                   : json(nullptr)},
             {"rank", sd.rank},
             {"dim", sd.dim_sheet}});
    j["w_report"] = {{"is_rigid", wr.is_rigid},
                     {"is_induced", wr.is_induced},
                     {"unique_sheet", wr.unique_sheet},
                     {"dim_E", wr.dim_E},
                     {"E_polynomial", wr.E_polynomial},
                     {"dim_E_Gamma", wr.dim_E_Gamma},
                     {"gamma_order", wr.gamma_order}};
    return j;
}

void print_analysis_text(const NilpotentOrbit& orbit) {
    const Partition& p = orbit.partition;
    const Stats st = stats(p);
    const Classification cls = classify(p);
    const TwoSteps ts = two_steps(p);
    const CentraliserDims dm = dims(p);
    const WReport wr = w_report(orbit);
    auto yn = [](bool b) { return b ? "yes" : "no"; };

    std::cout << "partition: [" << join(p.parts()) << "]  eps: " << p.eps()
              << "  N: " << p.total();
    if (orbit.label) std::cout << "  label: " << label_name(*orbit.label);
    std::cout << "\n";
    std::cout << "stats: s=" << st.s << " c=" << st.c << " z=" << st.z << " nu=" << st.nu
              << " s_bar=" << st.s_bar << " kappa=[" << join(st.kappa) << "]\n";
    std::cout << "flags: rigid=" << yn(cls.rigid) << " non_singular=" << yn(cls.non_singular)
              << " exceptional=" << yn(cls.exceptional)
              << " richardson=" << yn(is_richardson(p)) << "\n";
    std::cout << "two_steps: delta=[" << join(ts.delta) << "] bad=[" << join(ts.bad)
              << "] clusters=[";
    for (size_t i = 0; i < ts.good_clusters.size(); ++i) {
        if (i) std::cout << " ";
        std::cout << "(" << join(ts.good_clusters[i]) << ")";
    }
    std::cout << "]\n";
    std::cout << "dims: g_e=" << dm.dim_g_e << " k_e=" << dm.dim_k_e << " k=" << dm.dim_k
              << " orbit=" << dm.dim_orbit << "\n";
    for (const Profile& pr : profiles(p))
        std::cout << "profile: (" << pr.j << "," << pr.k << ") -> [" << join(pr.mu.parts())
                  << "]\n";
    std::cout << "sheets:\n";
    for (const SheetDatum& sd : sheets_containing(orbit))
        std::cout << "  levi=" << seq_text(sd.levi.terms, sd.levi.label) << " residue=["
                  << join(sd.rigid_residue.partition.parts())
                  << (sd.rigid_residue.label
                          ? std::string("]") + label_name(*sd.rigid_residue.label)
                          : std::string("]"))
                  << " rank=" << sd.rank << " dim=" << sd.dim_sheet << "\n";
    std::cout << "w_report: rigid=" << yn(wr.is_rigid) << " induced=" << yn(wr.is_induced)
              << " unique_sheet=" << yn(wr.unique_sheet) << " dim_E=" << wr.dim_E
              << " E_polynomial=" << yn(wr.E_polynomial) << " dim_E_Gamma=" << wr.dim_E_Gamma
              << " gamma_order=" << wr.gamma_order << "\n";
}

// ---------------------------------------------------------------------------
// verification sweeps

struct Failure {
    std::string check;
    int eps;
    std::vector<int> parts;
    std::string message;
};

using CheckFn = std::optional<std::string> (*)(const Partition&, int, std::uint64_t);

std::optional<std::string> check_z_max(const Partition& p, int, std::uint64_t) {
    const int by_formula = stats(p).z;
    const int by_enumeration = max_sequence_length(p);
    if (by_formula != by_enumeration)
        return "z formula " + std::to_string(by_formula) + " != enumerated max " +
               std::to_string(by_enumeration);
    return std::nullopt;
}

std::optional<std::string> check_c_vs_z(const Partition& p, int, std::uint64_t) {
    const Stats st = stats(p);
    const bool ns = classify(p).non_singular;
    if (st.c < st.z) return "c < z";
    if ((st.c == st.z) != ns) return "c = z does not match non-singularity";
    if (two_steps(p).bad.empty() != ns) return "bad 2-step test does not match";
    return std::nullopt;
}

std::optional<std::string> check_phi_unique(const Partition& p, int, std::uint64_t) {
    const PhiSet phi = enumerate_maximal(p);
    if ((phi.size() == 1) != classify(p).non_singular)
        return "|Phi| = " + std::to_string(phi.size()) + " does not match non-singularity";
    for (const PhiRep& rep : phi.reps)
        if (!classify(rep.residue).rigid) return "non-rigid residue";
    if (classify(p).rigid && !(phi.size() == 1 && phi.reps[0].indices.empty()))
        return "rigid partition with nonempty sequence";
    if ((stats(p).c == 0) != classify(p).rigid) return "c = 0 does not match rigidity";
    return std::nullopt;
}

std::optional<std::string> check_induce_inverse(const Partition& p, int cap, std::uint64_t) {
    for (int i = 1; i <= p.length(); ++i) {
        if (!case_at(p, i)) continue;
        const Partition down = step(p, i);
        if (induce_parts(p.eps(), down.parts(), i) != p.parts())
            return "induction does not invert the step at " + std::to_string(i);
    }
    for (int i = 1; p.total() + 2 * i <= cap; ++i) {
        const Partition up = Partition::make(p.eps(), induce_parts(p.eps(), p.parts(), i));
        if (!case_at(up, i)) return "no admissible case after inducing at " + std::to_string(i);
        if (step(up, i) != p) return "step does not invert induction at " + std::to_string(i);
    }
    return std::nullopt;
}

std::optional<std::string> check_matrix(const Partition& p, int, std::uint64_t) {
    if (p.total() < 1 || p.total() > 10) return std::nullopt;
    const Realization r = realize(p);
    const rat eps = p.eps();
    if (!(r.X.transposed() == eps * r.X)) return "Gram symmetry fails";
    if (!(r.E.transposed() * r.X + r.X * r.E).is_zero()) return "e is not skew-adjoint";

    const CentraliserDims dm = dims(p);
    std::vector<QVec> flat;
    for (const auto& el : xi_basis(r)) flat.push_back(flatten(el.mat));
    if (rank_of(flat, r.dimV * r.dimV) != dm.dim_g_e) return "xi span rank mismatch";

    flat.clear();
    for (const auto& el : k_basis(r).all()) flat.push_back(flatten(el.mat));
    if (rank_of(flat, r.dimV * r.dimV) != dm.dim_k_e) return "zeta span rank mismatch";

    const DecompositionReport rep = verify_decomposition(r);
    if (!rep.ok()) return "decomposition fails at " + rep.failing_component;
    if (rep.dim_k_e - rep.dim_derived != stats(p).c) return "abelianization dimension mismatch";
    return std::nullopt;
}

std::optional<std::string> check_invariants(const Partition& p, int, std::uint64_t seed) {
    if (p.total() < 1 || p.total() > 6) return std::nullopt;
    const auto degrees = invariant_degrees(p);
    std::vector<SparsePoly> survivors;
    for (int r = 1; r <= p.total(); ++r) {
        const SparsePoly x = elementary_invariant(p, r);
        for (const auto& [m, c] : x.terms())
            if ((int)m.size() != degrees[r - 1]) return "x_" + std::to_string(r) + " inhomogeneous";
        if (!(apply_sigma(p, x) == (r % 2 == 0 ? rat(1) : rat(-1)) * x))
            return "sigma parity fails for r = " + std::to_string(r);
        const SparsePoly xk = restrict_poly(p, x, Side::k_side);
        const SparsePoly xp = restrict_poly(p, x, Side::p_side);
        if (r % 2 == 1 && !xk.is_zero()) return "k-restriction does not vanish";
        if ((r + degrees[r - 1]) % 2 == 1 && !xp.is_zero()) return "p-restriction does not vanish";
        if (p.eps() == -1 && r % 2 == 0) survivors.push_back(xk);
        if (p.eps() == 1 && (r + degrees[r - 1]) % 2 == 0) survivors.push_back(xp);
        if (!check_invariance(p, r, 20, seed)) return "invariance fails for r = " + std::to_string(r);
    }
    for (size_t a = 0; a < survivors.size(); ++a) {
        if (survivors[a].is_zero()) return "surviving restriction vanishes";
        for (size_t b = a + 1; b < survivors.size(); ++b)
            if (survivors[a] == survivors[b]) return "coinciding restrictions";
    }
    int odd = 0;
    for (int v : p.parts()) odd += v % 2;
    const InvariantCounts counts = invariant_counts(p);
    if (p.eps() == -1 && counts.even_count != p.total() / 2) return "even count mismatch";
    if (p.eps() == 1 && counts.mixed_count != (p.total() + odd) / 2) return "mixed count mismatch";
    return std::nullopt;
}

std::optional<std::string> check_index(const Partition& p, int, std::uint64_t seed) {
    if (p.total() < 1 || p.total() > 10) return std::nullopt;
    const Realization r = realize(p);
    const int n_trials = 8;
    if (generic_index(r, IndexSpace::g_on_gdual, n_trials, seed) != p.total())
        return "index on g_e* is not N";
    if (p.eps() == -1 &&
        generic_index(r, IndexSpace::k_on_kdual, n_trials, seed) != p.total() / 2)
        return "index on k_e* is not N/2";
    if (p.eps() == 1) {
        int odd = 0;
        for (int v : p.parts()) odd += v % 2;
        if (generic_index(r, IndexSpace::k_on_pdual, n_trials, seed) != (p.total() - odd) / 2)
            return "index on p_e* is not (N - #odd)/2";
    }
    return std::nullopt;
}

struct CheckSpec {
    std::string name;
    CheckFn fn;
};

const std::vector<CheckSpec> kAllChecks = {
    {"z-max", check_z_max},           {"c-vs-z", check_c_vs_z},
    {"phi-unique", check_phi_unique}, {"induce-inverse", check_induce_inverse},
    {"matrix", check_matrix},         {"invariants", check_invariants},
    {"index", check_index},
};

int run_verify(const std::string& eps_flag, int max_n, const std::string& checks_flag,
               std::uint64_t seed, int jobs, bool as_json, bool inject_failure) {
    std::vector<int> eps_list;
    if (eps_flag == "both")
        eps_list = {-1, 1};
    else if (eps_flag == "-1" || eps_flag == "-")
        eps_list = {-1};
    else if (eps_flag == "+1" || eps_flag == "1" || eps_flag == "+")
        eps_list = {1};
    else
        throw error("--eps must be -1, +1 or both");
    if (max_n < 1) throw error("--max-n must be >= 1");

    std::vector<CheckSpec> selected;
    if (checks_flag == "all") {
        selected = kAllChecks;
    } else {
        std::stringstream ss(checks_flag);
        std::string name;
        while (std::getline(ss, name, ',')) {
            bool found = false;
            for (const CheckSpec& spec : kAllChecks)
                if (spec.name == name) {
                    selected.push_back(spec);
                    found = true;
                }
            if (!found) throw error("unknown check '" + name + "'");
        }
        if (selected.empty()) throw error("no checks selected");
    }

    const auto start = std::chrono::steady_clock::now();

    std::vector<Partition> partitions;
    json counts = json::array();
    for (int eps : eps_list)
        for (int n = 0; n <= max_n; ++n) {
            const auto batch = all_partitions(eps, n);
            if (!batch.empty())
                counts.push_back({{"eps", eps}, {"n", n}, {"partitions", batch.size()}});
            partitions.insert(partitions.end(), batch.begin(), batch.end());
        }

    std::vector<Failure> failures;
    std::mutex failures_mutex;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t k = next.fetch_add(1);
            if (k >= partitions.size()) return;
            const Partition& p = partitions[k];
            for (const CheckSpec& spec : selected) {
                const auto bad = spec.fn(p, max_n, seed);
                if (bad) {
                    std::lock_guard<std::mutex> lock(failures_mutex);
                    failures.push_back(Failure{spec.name, p.eps(), p.parts(), *bad});
                }
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (inject_failure)
        failures.push_back(Failure{"self-test", eps_list.front(), {}, "injected failure"});
    std::sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
        return std::tie(a.check, a.eps, a.parts, a.message) <
               std::tie(b.check, b.eps, b.parts, b.message);
    });

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    if (as_json) {
        json j;
        j["schema"] = 1;
        j["checks"] = json::array();
        for (const CheckSpec& spec : selected) j["checks"].push_back(spec.name);
        j["counts"] = counts;
        j["failures"] = json::array();
        for (const Failure& f : failures)
            j["failures"].push_back({{"check", f.check},
                                     {"eps", f.eps},
                                     {"parts", f.parts},
                                     {"message", f.message}});
        j["elapsed_ms"] = elapsed;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "verified " << partitions.size() << " partitions up to N = " << max_n
                  << " with " << selected.size() << " check(s) in " << elapsed << " ms\n";
        for (const Failure& f : failures)
            std::cout << "FAIL " << f.check << " eps=" << f.eps << " parts=[" << join(f.parts)
                      << "]: " << f.message << "\n";
        std::cout << (failures.empty() ? "all checks passed" : "checks FAILED") << "\n";
    }
    return failures.empty() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilpotent-orbit and sheet combinatorics of classical Lie algebras"};
    app.require_subcommand(1);
    int exit_code = 0;

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full combinatorial report for one partition");
    std::string an_eps, an_parts, an_label;
    bool an_json = false;
    analyze->add_option("--eps", an_eps, "form sign: +1 orthogonal, -1 symplectic")->required();
    analyze->add_option("--parts", an_parts, "comma separated parts, any order")->required();
    analyze->add_option("--label", an_label, "I or II for very even type-D partitions");
    analyze->add_flag("--json", an_json, "emit JSON");
    analyze->callback([&] {
        const int eps = parse_csv(an_eps).at(0);
        const NilpotentOrbit orbit = make_orbit(eps, parse_csv(an_parts), parse_label(an_label));
        if (an_json)
            std::cout << analysis_json(orbit).dump(2) << "\n";
        else
            print_analysis_text(orbit);
    });

    // induce
    auto* induce = app.add_subcommand("induce", "induce a partition through a Levi sequence");
    std::string in_eps, in_mu, in_seq, in_levi_label, in_mu_label;
    bool in_json = false;
    induce->add_option("--eps", in_eps)->required();
    induce->add_option("--mu", in_mu, "residue partition (may be empty)");
    induce->add_option("--seq", in_seq, "gl sizes of the Levi sequence")->required();
    induce->add_option("--levi-label", in_levi_label, "label of a very even Levi sequence");
    induce->add_option("--mu-label", in_mu_label, "label of a very even residue");
    induce->add_flag("--json", in_json);
    induce->callback([&] {
        const int eps = parse_csv(in_eps).at(0);
        const NilpotentOrbit residue = make_orbit(eps, parse_csv(in_mu), parse_label(in_mu_label));
        const NilpotentOrbit out =
            induce_through(parse_csv(in_seq), residue, parse_label(in_levi_label));
        if (in_json) {
            json j = orbit_json(out);
            j["schema"] = 1;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << join(out.partition.parts());
            if (out.label) std::cout << " " << label_name(*out.label);
            std::cout << "\n";
        }
    });

    // sheets
    auto* sheets = app.add_subcommand("sheets", "sheets containing the orbit");
    std::string sh_eps, sh_parts, sh_label;
    bool sh_json = false;
    sheets->add_option("--eps", sh_eps)->required();
    sheets->add_option("--parts", sh_parts)->required();
    sheets->add_option("--label", sh_label);
    sheets->add_flag("--json", sh_json);
    sheets->callback([&] {
        const int eps = parse_csv(sh_eps).at(0);
        const NilpotentOrbit orbit = make_orbit(eps, parse_csv(sh_parts), parse_label(sh_label));
        const auto data = sheets_containing(orbit);
        if (sh_json) {
            json j;
            j["schema"] = 1;
            j["sheets"] = json::array();
            for (const SheetDatum& sd : data)
                j["sheets"].push_back(
                    {{"levi", sd.levi.terms},
                     {"levi_label",
                      sd.levi.label ? json(label_name(*sd.levi.label)) : json(nullptr)},
                     {"residue", sd.rigid_residue.partition.parts()},
                     {"residue_label", sd.rigid_residue.label
                                           ? json(label_name(*sd.rigid_residue.label))
                                           : json(nullptr)},
                     {"rank", sd.rank},
                     {"dim", sd.dim_sheet}});
            std::cout << j.dump(2) << "\n";
        } else {
            for (const SheetDatum& sd : data)
                std::cout << "levi=" << seq_text(sd.levi.terms, sd.levi.label)
                          << " residue=" << seq_text(sd.rigid_residue.partition.parts(),
                                                     sd.rigid_residue.label)
                          << " rank=" << sd.rank << " dim=" << sd.dim_sheet << "\n";
        }
    });

    // levis
    auto* levis = app.add_subcommand("levis", "conjugacy classes of Levi subalgebras");
    std::string lv_eps;
    int lv_rank = 0;
    bool lv_type_d = false, lv_json = false;
    levis->add_option("--eps", lv_eps)->required();
    levis->add_option("--rank", lv_rank)->required();
    levis->add_flag("--type-d", lv_type_d, "so_{2r} rather than so_{2r+1} when eps = +1");
    levis->add_flag("--json", lv_json);
    levis->callback([&] {
        const int eps = parse_csv(lv_eps).at(0);
        const auto classes = levi_classes(eps, lv_rank, lv_type_d);
        if (lv_json) {
            json j;
            j["schema"] = 1;
            j["classes"] = json::array();
            for (const RestrictedSequence& cls : classes)
                j["classes"].push_back(
                    {{"terms", cls.terms},
                     {"label", cls.label ? json(label_name(*cls.label)) : json(nullptr)}});
            std::cout << j.dump(2) << "\n";
        } else {
            for (const RestrictedSequence& cls : classes)
                std::cout << seq_text(cls.terms, cls.label) << "\n";
        }
    });

    // verify
    auto* verify = app.add_subcommand("verify", "sweep the theorem suite over all partitions");
    std::string vf_eps = "both", vf_checks = "all";
    int vf_max_n = 12;
    std::uint64_t vf_seed = 12345;
    int vf_jobs = 0;
    bool vf_json = false, vf_inject = false;
    verify->add_option("--eps", vf_eps, "-1, +1 or both");
    verify->add_option("--max-n", vf_max_n, "sweep bound (matrix/index cap at 10, invariants at 6)");
    verify->add_option("--checks", vf_checks,
                       "comma list of z-max,c-vs-z,phi-unique,induce-inverse,matrix,invariants,"
                       "index or 'all'");
    verify->add_option("--seed", vf_seed, "seed for the sampled oracles");
    verify->add_option("--jobs", vf_jobs, "worker threads (0 = env ORBIT_SHEETS_JOBS or 1)");
    verify->add_flag("--json", vf_json);
    verify->add_flag("--inject-failure", vf_inject)->group(""); // exit-code self test
    verify->callback([&] {
        int jobs = vf_jobs;
        if (jobs <= 0) {
            if (const char* env = std::getenv("ORBIT_SHEETS_JOBS")) jobs = std::atoi(env);
            if (jobs <= 0) jobs = 1;
        }
        exit_code = run_verify(vf_eps, vf_max_n, vf_checks, vf_seed, jobs, vf_json, vf_inject);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
