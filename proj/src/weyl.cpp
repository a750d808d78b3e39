#include "gvm/weyl.hpp"

#include "gvm/errors.hpp"

#include <algorithm>

namespace gvm {

namespace {

std::vector<bool> membership(const RootSystem& rs, const NodeSet& s) {
    std::vector<bool> in(static_cast<std::size_t>(rs.rank()), false);
    for (int l : s) {
        if (l < 1 || l > rs.rank()) fail(ErrorKind::InvalidArgument, "node label out of range");
        in[static_cast<std::size_t>(l - 1)] = true;
    }
    return in;
}

// lambda <- lambda - lambda_i alpha_i
void simple_reflect_in_place(const RootSystem& rs, std::vector<Rational>& v, std::size_t i) {
    if (v[i] == 0) return;
    Rational f = v[i];
    for (std::size_t j = 0; j < v.size(); ++j) {
        long a = rs.cartan()(j, i);
        if (a) v[j] -= f * a;
    }
}

}  // namespace

Weight WeylElement::apply(const Weight& w) const { return Weight(matrix.apply(w.c)); }

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement out{matrix * o.matrix, std::nullopt};
    if (word && o.word) {
        std::vector<int> w = *word;
        w.insert(w.end(), o.word->begin(), o.word->end());
        out.word = std::move(w);
    }
    return out;
}

bool WeylElement::is_identity() const { return matrix == IntMatrix::identity(matrix.rows()); }

WeylElement identity_element(const RootSystem& rs) {
    return {IntMatrix::identity(static_cast<std::size_t>(rs.rank())), std::vector<int>{}};
}

WeylElement simple_reflection(const RootSystem& rs, int label) {
    const auto n = static_cast<std::size_t>(rs.rank());
    const auto i = static_cast<std::size_t>(label - 1);
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) m(j, i) -= rs.cartan()(j, i);
    return {m, std::vector<int>{label}};
}

WeylElement reflection(const RootSystem& rs, const Root& beta) {
    const auto n = static_cast<std::size_t>(rs.rank());
    auto cv = rs.coroot(beta);
    Weight bw = rs.root_weight(beta);
    IntMatrix m = IntMatrix::identity(n);
    // s(v) = v - (sum_k cv_k v_k) bw
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) m(j, k) -= bw[j].get_num().get_si() * cv[k];
    return {m, std::nullopt};
}

Weight reflect(const RootSystem& rs, const Weight& lambda, const Root& beta) {
    Rational p = pair(rs, lambda, beta);
    return lambda - p * rs.root_weight(beta);
}

WeylElement longest_element(const RootSystem& rs, const NodeSet& s) {
    auto in = membership(rs, s);
    const auto n = static_cast<std::size_t>(rs.rank());
    std::vector<Rational> probe(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        if (in[i]) probe[i] = 1;
    std::vector<int> applied;
    while (true) {
        std::size_t pick = n;
        for (std::size_t i = 0; i < n; ++i)
            if (in[i] && probe[i] > 0) {
                pick = i;
                break;
            }
        if (pick == n) break;
        simple_reflect_in_place(rs, probe, pick);
        applied.push_back(static_cast<int>(pick) + 1);
    }
    // applied[0] acts first, so the product word is the reversal.
    WeylElement w = identity_element(rs);
    for (int l : applied) w = simple_reflection(rs, l) * w;
    std::reverse(applied.begin(), applied.end());
    w.word = applied;
    return w;
}

WeylElement longest_element_of(const RootSystem& rs, const std::vector<Root>& simple_system) {
    Weight probe = rs.rho();  // regular dominant for every positive subsystem
    WeylElement w = identity_element(rs);
    std::vector<WeylElement> refl;
    for (const Root& g : simple_system) refl.push_back(reflection(rs, g));
    while (true) {
        std::size_t pick = simple_system.size();
        for (std::size_t i = 0; i < simple_system.size(); ++i)
            if (pair(rs, probe, simple_system[i]) > 0) {
                pick = i;
                break;
            }
        if (pick == simple_system.size()) break;
        probe = refl[pick].apply(probe);
        w = refl[pick] * w;
    }
    w.word = std::nullopt;
    return w;
}

bool commutes_with_w0(const RootSystem& rs, const NodeSet& theta) {
    WeylElement wt = longest_element(rs, theta);
    WeylElement w0 = longest_element(rs, all_nodes(rs));
    return (wt * w0).matrix == (w0 * wt).matrix;
}

DescentResult descend_to_dominant(const RootSystem& rs, const NodeSet& s, const Weight& mu, TieBreak tie) {
    auto in = membership(rs, s);
    const auto n = static_cast<std::size_t>(rs.rank());
    DescentResult out;
    out.representative = mu;
    std::vector<Rational>& v = out.representative.c;
    while (true) {
        std::size_t pick = n;
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t i = tie == TieBreak::Smallest ? step : n - 1 - step;
            if (!in[i]) continue;
            if (v[i] == 0) {
                out.singular = true;
                return out;
            }
            if (v[i] < 0 && pick == n) pick = i;
        }
        if (pick == n) break;
        simple_reflect_in_place(rs, v, pick);
        out.sign = -out.sign;
        out.word.push_back(static_cast<int>(pick) + 1);
    }
    return out;
}

bool in_span(const Root& r, const NodeSet& s) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0 && std::find(s.begin(), s.end(), static_cast<int>(i) + 1) == s.end()) return false;
    return true;
}

std::vector<Root> positive_roots_of(const RootSystem& rs, const NodeSet& s) {
    std::vector<Root> out;
    for (const Root& r : rs.positive_roots())
        if (in_span(r, s)) out.push_back(r);
    return out;
}

NodeSet complement(const RootSystem& rs, const NodeSet& s) {
    NodeSet out;
    for (int l = 1; l <= rs.rank(); ++l)
        if (std::find(s.begin(), s.end(), l) == s.end()) out.push_back(l);
    return out;
}

NodeSet all_nodes(const RootSystem& rs) {
    NodeSet out;
    for (int l = 1; l <= rs.rank(); ++l) out.push_back(l);
    return out;
}

}  // namespace gvm
