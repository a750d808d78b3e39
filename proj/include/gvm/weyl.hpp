#pragma once

#include "gvm/rootsys.hpp"

#include <optional>
#include <vector>

namespace gvm {

// Acts on weight coordinates. Entries are integers since simple reflections
// map the weight lattice to itself.
struct WeylElement {
    IntMatrix matrix;
    // Simple reflections in product order: w = s_{word[0]} s_{word[1]} ...
    std::optional<std::vector<int>> word;

    Weight apply(const Weight& w) const;
    WeylElement operator*(const WeylElement& o) const;
    bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
    bool is_identity() const;
};

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int label);
// s_beta as a matrix; no word attached.
WeylElement reflection(const RootSystem& rs, const Root& beta);
// s_beta(lambda) = lambda - <lambda, beta^vee> beta.
Weight reflect(const RootSystem& rs, const Weight& lambda, const Root& beta);

// Longest element of W_S. The probe sum of omega_i over S is walked down to
// the S-antidominant chamber, always reflecting in the smallest label with a
// positive pairing.
WeylElement longest_element(const RootSystem& rs, const NodeSet& s);
// Longest element of the reflection subgroup generated by a simple system of
// a subsystem (roots in simple-root coordinates). No word.
WeylElement longest_element_of(const RootSystem& rs, const std::vector<Root>& simple_system);

bool commutes_with_w0(const RootSystem& rs, const NodeSet& theta);

enum class TieBreak { Smallest, Largest };

struct DescentResult {
    Weight representative;
    int sign = 1;           // (-1)^(number of reflections applied)
    bool singular = false;  // some root of S pairs to zero; representative is then meaningless
    std::vector<int> word;  // reflections in the order they were applied
};

// Walks mu into the closed S-dominant chamber by simple reflections in S.
DescentResult descend_to_dominant(const RootSystem& rs, const NodeSet& s, const Weight& mu,
                                  TieBreak tie = TieBreak::Smallest);

// Roots of the sub-root-system spanned by S, positive ones only.
std::vector<Root> positive_roots_of(const RootSystem& rs, const NodeSet& s);
NodeSet complement(const RootSystem& rs, const NodeSet& s);
NodeSet all_nodes(const RootSystem& rs);
bool in_span(const Root& r, const NodeSet& s);

}  // namespace gvm
