#include "orbits/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace orbits {

namespace {

void canonicalize(std::vector<int>& parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

// Returns the largest (part, multiplicity) breaking the parity rule, if any.
std::optional<std::pair<int, int>> parity_offender(int eps, const std::vector<int>& parts) {
    std::map<int, int> mult;
    for (int v : parts) ++mult[v];
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        const bool constrained = (eps == -1) ? (it->first % 2 == 1) : (it->first % 2 == 0);
        if (constrained && it->second % 2 == 1) return std::make_pair(it->first, it->second);
    }
    return std::nullopt;
}

} // namespace

Partition Partition::make(int eps, std::vector<int> raw_parts) {
    if (eps != 1 && eps != -1) throw error("eps must be +1 or -1");
    for (int v : raw_parts)
        if (v < 0) throw negative_part(v);
    canonicalize(raw_parts);
    if (auto bad = parity_offender(eps, raw_parts))
        throw parity_violation(bad->first, bad->second, eps);
    int total = 0;
    for (int v : raw_parts) total += v;
    return Partition(eps, std::move(raw_parts), total);
}

bool is_valid_partition(int eps, std::vector<int> raw_parts) {
    if (eps != 1 && eps != -1) return false;
    for (int v : raw_parts)
        if (v < 0) return false;
    canonicalize(raw_parts);
    return !parity_offender(eps, raw_parts).has_value();
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << (eps_ < 0 ? "-" : "+") << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

Involution involution(const Partition& p) {
    const int n = p.length();
    std::vector<int> prime(n);
    int i = 1;
    while (i <= n) {
        int j = i;
        while (j < n && p.part(j + 1) == p.part(i)) ++j; // block [i, j] of equal parts
        if (p.fixed(i)) {
            for (int k = i; k <= j; ++k) prime[k - 1] = k;
        } else {
            // even multiplicity guaranteed by validity; pair consecutively
            for (int k = i; k <= j; k += 2) {
                prime[k - 1] = k + 1;
                prime[k] = k;
            }
        }
        i = j + 1;
    }
    return Involution(std::move(prime));
}

TwoSteps two_steps(const Partition& p) {
    TwoSteps out;
    const int n = p.length();
    for (int i = 1; i + 1 <= n; ++i) {
        if (!p.fixed(i) || !p.fixed(i + 1)) continue;
        if (p.part(i - 1) == p.part(i)) continue;
        if (p.part(i + 1) == p.part(i + 2)) continue;
        out.delta.push_back(i);
        const bool left_bad = i > 1 && (p.part(i - 1) - p.part(i)) % 2 == 0;
        const bool right_bad = (p.part(i + 1) - p.part(i + 2)) % 2 == 0;
        if (left_bad || right_bad) out.bad.push_back(i);
    }
    // Maximal chains inside delta with spacing 2 (delta may also contain the
    // intermediate indices).  Interior cut points always produce an even
    // boundary gap, so only maximal chains can be good.
    const std::set<int> in_delta(out.delta.begin(), out.delta.end());
    for (int first : out.delta) {
        if (in_delta.count(first - 2)) continue; // not a chain start
        std::vector<int> chain{first};
        while (in_delta.count(chain.back() + 2)) chain.push_back(chain.back() + 2);
        if (chain.size() < 2) continue;
        const int last = chain.back();
        const bool left_ok = first == 1 || (p.part(first - 1) - p.part(first)) % 2 == 1;
        const bool right_ok = (p.part(last + 1) - p.part(last + 2)) % 2 == 1;
        if (left_ok && right_ok) out.good_clusters.push_back(std::move(chain));
    }
    return out;
}

Classification classify(const Partition& p) {
    Classification out{};
    const TwoSteps ts = two_steps(p);
    out.non_singular = ts.bad.empty();

    bool small_steps = true;
    for (int i = 1; i <= p.length(); ++i) {
        const int d = p.part(i) - p.part(i + 1);
        if (d != 0 && d != 1) { small_steps = false; break; }
    }
    bool equal_two_step = false;
    for (int i : ts.delta)
        if (p.part(i) == p.part(i + 1)) { equal_two_step = true; break; }
    out.rigid = small_steps && !equal_two_step;

    out.exceptional = false;
    if (p.eps() == 1 && ts.delta.size() == 1) {
        const int i = ts.delta.front();
        bool others_even = true;
        for (int j = 1; j <= p.length(); ++j) {
            if (j == i || j == i + 1) continue;
            if (p.part(j) % 2 == 1) { others_even = false; break; }
        }
        out.exceptional = others_even;
    }
    return out;
}

Stats stats(const Partition& p) {
    Stats out{};
    const int n = p.length();
    for (int i = 1; i <= n; ++i) out.s += (p.part(i) - p.part(i + 1)) / 2;
    const TwoSteps ts = two_steps(p);
    out.c = out.s + static_cast<int>(ts.delta.size());
    out.z = out.c - (static_cast<int>(ts.bad.size()) - static_cast<int>(ts.good_clusters.size()));
    for (int i = 1; i <= n; ++i)
        if (p.fixed(i) && p.part(i) > p.part(i + 1)) ++out.nu;
    out.s_bar = out.s + (classify(p).exceptional ? 1 : 0);
    out.kappa.resize(n);
    for (int i = 1; i <= n; ++i) out.kappa[i - 1] = (p.part(i) - p.part(i + 1)) % 2;
    return out;
}

namespace {

// delta(cur) recomputed on a working copy that may carry trailing zeros.
bool in_delta(int eps, const std::vector<int>& cur, int i) {
    auto at = [&](int k) { return (k >= 1 && k <= (int)cur.size()) ? cur[k - 1] : 0; };
    auto fix = [&](int k) {
        return at(k) > 0 && ((eps == -1) == (at(k) % 2 == 0));
    };
    return fix(i) && fix(i + 1) && at(i - 1) != at(i) && at(i + 1) != at(i + 2);
}

} // namespace

ShellResult shell(const Partition& p) {
    std::vector<int> cur = p.parts();
    const int n = p.length();
    std::vector<int> seq;

    auto case1 = [&](int i, int times) {
        for (int t = 0; t < times; ++t) {
            for (int k = 0; k < i; ++k) cur[k] -= 2;
            seq.push_back(i);
        }
    };

    for (int i = 1; i <= n; ++i) {
        const int gap = (i <= (int)cur.size() ? cur[i - 1] : 0) -
                        (i < (int)cur.size() ? cur[i] : 0);
        if (gap >= 2 && gap % 2 == 0 &&
            (in_delta(p.eps(), cur, i - 1) || in_delta(p.eps(), cur, i + 1))) {
            case1(i, (gap - 2) / 2);
        } else {
            case1(i, gap / 2);
        }
    }

    // Consume every good 2-step of the reduced partition with one Case 2 step.
    // Good 2-steps are isolated (a chain of 2-steps makes its members bad), so
    // ascending application keeps each remaining step good.
    Partition mid = Partition::make(p.eps(), cur);
    const TwoSteps ts = two_steps(mid);
    cur = mid.parts();
    cur.resize(mid.length() + 2, 0);
    std::vector<int> good_steps;
    for (int i : ts.delta)
        if (!std::binary_search(ts.bad.begin(), ts.bad.end(), i))
            good_steps.push_back(i);
    for (int i : good_steps) {
        for (int k = 0; k + 1 < i; ++k) cur[k] -= 2;
        cur[i - 1] -= 1;
        cur[i] -= 1;
        seq.push_back(i);
    }

    return ShellResult{Partition::make(p.eps(), cur), std::move(seq)};
}

std::vector<Profile> profiles(const Partition& p) {
    std::vector<Profile> out;
    const int n = p.length();
    int i = 1;
    while (i <= n) {
        if (!p.fixed(i)) { ++i; continue; }
        int j = i;
        int k = i;
        while (k <= n && p.fixed(k)) ++k; // run is [j, k)
        std::vector<int> mu(k - j);
        for (int t = 0; t < k - j; ++t) mu[t] = p.part(t + j) - p.part(k);
        const int sign = (k == n + 1) ? p.eps() : 1;
        out.push_back(Profile{j, k, Partition::make(sign, std::move(mu))});
        i = k + 1;
    }
    return out;
}

CentraliserDims dims(const Partition& p) {
    CentraliserDims out{};
    const long long n = p.length();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            out.dim_g_e += std::min(p.part(i), p.part(j));
    long long odd = 0;
    for (int v : p.parts())
        if (v % 2 == 1) ++odd;
    out.dim_k_e = (p.eps() == 1) ? (out.dim_g_e - odd) / 2 : (out.dim_g_e + odd) / 2;
    const long long N = p.total();
    out.dim_k = (p.eps() == -1) ? N * (N + 1) / 2 : N * (N - 1) / 2;
    out.dim_orbit = out.dim_k - out.dim_k_e;
    return out;
}

std::vector<int> invariant_degrees(const Partition& p) {
    std::vector<int> out;
    out.reserve(p.total());
    for (int i = 1; i <= p.length(); ++i)
        for (int c = 0; c < p.part(i); ++c) out.push_back(i);
    return out;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    int eps, std::vector<Partition>& out) {
    if (remaining == 0) {
        if (is_valid_partition(eps, acc)) out.push_back(Partition::make(eps, acc));
        return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
        acc.push_back(v);
        gen_partitions(remaining - v, v, acc, eps, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> all_partitions(int eps, int n) {
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition::make(eps, {}));
        return out;
    }
    std::vector<int> acc;
    gen_partitions(n, n, acc, eps, out);
    return out;
}

} // namespace orbits
