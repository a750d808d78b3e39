#pragma once

#include "gvm/parabolic.hpp"

#include <map>
#include <optional>

namespace gvm {

struct SignedWeight {
    int sign;
    Weight weight;
};

// Formal integer combination of Theta-dominant weights; zero coefficients are dropped.
class FormalSum {
public:
    void add(const Weight& w, long coeff);
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Weight, long>& terms() const { return terms_; }
    long coefficient(const Weight& w) const;
    friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

private:
    std::map<Weight, long> terms_;
};

// Zero if mu is singular for Delta_Theta, otherwise the Theta-dominant
// conjugate with sign (-1)^length. Throws NonIntegralOnTheta.
std::optional<SignedWeight> upsilon(const RootSystem& rs, const NodeSet& theta, const Weight& mu);
std::optional<SignedWeight> upsilon(const ParabolicDatum& pd, const Weight& mu);

// Sum over positive roots beta outside Delta_Theta with <lambda, beta^vee> a
// positive integer of upsilon(s_beta lambda). Throws NotDominantOnTheta.
FormalSum jantzen_sum(const RootSystem& rs, const NodeSet& theta, const Weight& lambda);
FormalSum jantzen_sum(const ParabolicDatum& pd, const Weight& lambda);

bool is_irreducible(const ParabolicDatum& pd, const Weight& lambda);

}  // namespace gvm
