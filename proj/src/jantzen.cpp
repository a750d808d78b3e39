#include "gvm/jantzen.hpp"

#include "gvm/errors.hpp"

namespace gvm {

void FormalSum::add(const Weight& w, long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

long FormalSum::coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<SignedWeight> upsilon(const RootSystem& rs, const NodeSet& theta, const Weight& mu) {
    for (int l : theta)
        if (!is_integer(mu[static_cast<std::size_t>(l - 1)]))
            fail(ErrorKind::NonIntegralOnTheta, "weight " + mu.to_string() + " is not integral on Theta");
    DescentResult d = descend_to_dominant(rs, theta, mu);
    if (d.singular) return std::nullopt;
    return SignedWeight{d.sign, std::move(d.representative)};
}

std::optional<SignedWeight> upsilon(const ParabolicDatum& pd, const Weight& mu) { return upsilon(*pd.rs, pd.theta, mu); }

FormalSum jantzen_sum(const RootSystem& rs, const NodeSet& theta, const Weight& lambda) {
    for (int l : theta) {
        const Rational& x = lambda[static_cast<std::size_t>(l - 1)];
        if (!is_integer(x) || x <= 0)
            fail(ErrorKind::NotDominantOnTheta, "weight " + lambda.to_string() + " is not in P_Theta^{++}");
    }
    FormalSum sum;
    const auto n = lambda.size();
    for (std::size_t idx = 0; idx < rs.num_positive(); ++idx) {
        const Root& beta = rs.positive_roots()[idx];
        if (in_span(beta, theta)) continue;
        const auto& cv = rs.positive_coroot(idx);
        Rational p = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (cv[i]) p += lambda[i] * Rational(cv[i]);
        if (!is_integer(p) || p <= 0) continue;
        const auto& bw = rs.positive_root_weight(idx);
        Weight mu = lambda;
        for (std::size_t i = 0; i < n; ++i)
            if (bw[i]) mu[i] -= p * Rational(bw[i]);
        if (auto u = upsilon(rs, theta, mu)) sum.add(u->weight, u->sign);
    }
    return sum;
}

FormalSum jantzen_sum(const ParabolicDatum& pd, const Weight& lambda) { return jantzen_sum(*pd.rs, pd.theta, lambda); }

bool is_irreducible(const ParabolicDatum& pd, const Weight& lambda) { return jantzen_sum(pd, lambda).empty(); }

}  // namespace gvm
