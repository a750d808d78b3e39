#include "gvm/cells.hpp"

#include "gvm/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gvm {

Partition rs_shape(const std::vector<Rational>& seq) {
    std::set<Rational> seen;
    for (const auto& x : seq)
        if (!seen.insert(x).second) fail(ErrorKind::DuplicateEntries, "sequence has repeated entry " + to_string(x));
    std::vector<std::vector<Rational>> rows;
    for (const auto& x : seq) {
        Rational cur = x;
        std::size_t r = 0;
        while (true) {
            if (r == rows.size()) {
                rows.push_back({cur});
                break;
            }
            auto& row = rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), cur);
            if (it == row.end()) {
                row.push_back(cur);
                break;
            }
            std::swap(*it, cur);
            ++r;
        }
    }
    std::vector<int> shape;
    for (auto& row : rows) shape.push_back(static_cast<int>(row.size()));
    return Partition(shape);
}

Partition bv_shape(const std::vector<Rational>& seq) { return rs_shape(seq).dual(); }

std::string Symbol::to_string() const {
    auto row = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    };
    return "(" + row(top) + " ; " + row(bottom) + ")";
}

bool same_symbol(Family family, const Symbol& a, const Symbol& b) {
    if (a.top == b.top && a.bottom == b.bottom) return true;
    return family == Family::D && a.top == b.bottom && a.bottom == b.top;
}

Symbol symbol_from_partition(Family family, const Partition& p) {
    if (!is_classical(family)) fail(ErrorKind::UnsupportedFamily, "symbols are defined for B, C, D");
    std::vector<int> parts(p.parts().rbegin(), p.parts().rend());  // increasing
    const bool odd_total = p.size() % 2 == 1;
    if (family == Family::D && odd_total) fail(ErrorKind::InvalidPartition, "type D needs a partition of 2n");
    // B/C want an odd number of parts, D an even number
    const bool want_odd = family != Family::D;
    if ((parts.size() % 2 == 1) != want_odd) parts.insert(parts.begin(), 0);
    Symbol s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int v = parts[i] + static_cast<int>(i);
        // partitions of 2n put the even shifted parts on top, of 2n+1 the odd ones
        bool top = odd_total ? v % 2 == 1 : v % 2 == 0;
        (top ? s.top : s.bottom).push_back(v / 2);
    }
    if (family == Family::D && s.top > s.bottom) std::swap(s.top, s.bottom);
    return s;
}

bool same_family(const Symbol& a, const Symbol& b) {
    std::vector<int> x = a.top, y = b.top;
    x.insert(x.end(), a.bottom.begin(), a.bottom.end());
    y.insert(y.end(), b.bottom.begin(), b.bottom.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

bool family_is_singleton(Family family, const Symbol& s) {
    std::map<int, int> mult;
    for (int v : s.top) ++mult[v];
    for (int v : s.bottom) ++mult[v];
    std::vector<int> singles;
    std::size_t doubles = 0;
    for (auto [v, m] : mult) {
        if (m > 2) fail(ErrorKind::InvalidArgument, "not a symbol: entry repeated more than twice");
        if (m == 2) ++doubles;
        else singles.push_back(v);
    }
    // each doubled entry sits in both rows; the singles split to fill the top row
    if (s.top.size() < doubles) fail(ErrorKind::InvalidArgument, "not a symbol");
    const std::size_t need_top = s.top.size() - doubles;
    // number of ways to choose need_top singles for the top row
    auto choose = [](std::size_t n, std::size_t k) {
        if (k > n) return 0.0;
        double r = 1;
        for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
        return r;
    };
    double splits = choose(singles.size(), need_top);
    if (family == Family::D && s.top.size() == s.bottom.size()) {
        // unordered rows; the symmetric split (possible only with no singles) counts once
        splits = singles.empty() ? 1 : splits / 2;
    }
    return splits <= 1.0;
}

bool has_witness_weights(Family family, int n, int k) {
    switch (family) {
        case Family::B: return k % 2 == 0 && 3 * k > 2 * n + 1 && k < n;
        case Family::C: return k % 2 == 1 && k > 1 && 3 * k <= 2 * n;
        case Family::D: return k % 2 == 1 && 3 * k >= 2 * n + 1 && k <= n - 2;
        default: return false;
    }
}

WitnessWeights witness_weights(const ParabolicDatum& pd) {
    const RootSystem& rs = *pd.rs;
    const int n = rs.rank(), k = pd.k;
    if (!has_witness_weights(rs.family(), n, k))
        fail(ErrorKind::UnsupportedCase, "no witness weights for " + rs.label() + " k=" + std::to_string(k));
    ECoordinates ec(rs);
    const Rational half(1, 2);
    std::vector<Rational> l2(static_cast<std::size_t>(n)), l3(static_cast<std::size_t>(n));
    auto at = [](std::vector<Rational>& v, int i) -> Rational& { return v[static_cast<std::size_t>(i - 1)]; };
    if (rs.family() == Family::B) {
        const int s = k / 2;
        at(l2, 1) = Rational(s) + half;
        for (int i = 2; i <= 2 * s; ++i) at(l2, i) = Rational(s - i) + half;
        for (int j = 2 * s + 1; j <= n; ++j) at(l2, j) = Rational(n - j) + half;
        for (int i = 1; i <= 2 * s - 1; ++i) at(l3, i) = Rational(s - i) + half;
        at(l3, 2 * s) = -half - Rational(s);
        for (int j = 2 * s + 1; j <= n; ++j) at(l3, j) = Rational(n - j) + half;
    } else {
        const int s = (k - 1) / 2;
        const int tail = rs.family() == Family::C ? 1 : 0;
        at(l2, 1) = s + 1;
        for (int i = 2; i <= 2 * s + 1; ++i) at(l2, i) = s + 1 - i;
        for (int j = 2 * s + 2; j <= n; ++j) at(l2, j) = n + tail - j;
        for (int i = 1; i <= 2 * s; ++i) at(l3, i) = s + 1 - i;
        at(l3, 2 * s + 1) = -1 - s;
        for (int j = 2 * s + 2; j <= n; ++j) at(l3, j) = n + tail - j;
    }
    WitnessWeights w;
    w.lambda1 = pd.rho_theta() + pd.omega;
    w.lambda2 = ec.from_e(l2);
    w.lambda3 = ec.from_e(l3);
    w.lambda4 = pd.rho_theta() - pd.omega;
    return w;
}

std::vector<Rational> doubled_sequence(const ParabolicDatum& pd, const Weight& w) {
    ECoordinates ec(*pd.rs);
    auto a = ec.to_e(w);
    std::vector<Rational> seq = a;
    for (auto it = a.rbegin(); it != a.rend(); ++it) seq.push_back(-*it);
    return seq;
}

namespace {

// Type D doubles a zero last coordinate into a repeated entry; (delta/2) e_n separates it.
Weight with_d_tiebreak(const ParabolicDatum& pd, Weight w, const Rational& delta) {
    const RootSystem& rs = *pd.rs;
    if (rs.family() != Family::D) return w;
    ECoordinates ec(rs);
    std::vector<Rational> en(static_cast<std::size_t>(rs.rank()), Rational(0));
    en.back() = delta / 2;
    return w + ec.from_e(en);
}

}  // namespace

std::vector<Rational> bv_sequence(const ParabolicDatum& pd, const Weight& lambda2, const Rational& delta) {
    const RootSystem& rs = *pd.rs;
    if (!is_classical(rs.family())) fail(ErrorKind::UnsupportedFamily, "sequences are defined for B, C, D");
    return doubled_sequence(pd, with_d_tiebreak(pd, lambda2 - delta * pd.omega, delta));
}

CellReport cell_report(const ParabolicDatum& pd, const Rational& delta) {
    const Family f = pd.rs->family();
    CellReport r;
    WitnessWeights w = witness_weights(pd);
    r.sequence = bv_sequence(pd, w.lambda2, delta);
    r.shape = bv_shape(r.sequence);
    r.symbol = symbol_from_partition(f, r.shape);
    r.parabolic_sequence = doubled_sequence(pd, with_d_tiebreak(pd, pd.rho_theta() - pd.rho_upper(), delta));
    r.parabolic_shape = bv_shape(r.parabolic_sequence);
    r.parabolic_symbol = symbol_from_partition(f, r.parabolic_shape);
    r.same_family = same_family(r.symbol, r.parabolic_symbol);
    return r;
}

}  // namespace gvm
