#include "orbits/sparse_poly.hpp"

#include <algorithm>

namespace orbits {

bool legal_generator(const Partition& p, int i, int j, int s) {
    if (i < 1 || i > p.length() || j < 1 || j > p.length()) return false;
    const int pj = p.part(j);
    return s < pj && s >= pj - std::min(p.part(i), pj);
}

SparsePoly SparsePoly::generator(const Partition& p, int i, int j, int s) {
    SparsePoly out;
    if (legal_generator(p, i, j, s)) out.add_term({GenLabel{i, j, s}}, 1);
    return out;
}

void SparsePoly::add_term(Monomial m, const rat& coeff) {
    if (coeff == 0) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(std::move(m), ca * cb);
        }
    return out;
}

SparsePoly operator*(const rat& c, const SparsePoly& a) {
    SparsePoly out;
    for (const auto& [m, coeff] : a.terms_) out.add_term(m, c * coeff);
    return out;
}

rat SparsePoly::evaluate(const std::map<GenLabel, rat>& values) const {
    rat total = 0;
    for (const auto& [m, c] : terms_) {
        rat prod = c;
        for (const GenLabel& g : m) {
            auto it = values.find(g);
            if (it == values.end()) { prod = 0; break; }
            prod *= it->second;
        }
        total += prod;
    }
    return total;
}

} // namespace orbits
