#pragma once

#include "gvm/orbits.hpp"
#include "gvm/parabolic.hpp"

#include <string>
#include <vector>

namespace gvm {

// Row-insertion shape of a sequence of distinct rationals. Throws DuplicateEntries.
Partition rs_shape(const std::vector<Rational>& seq);
// Transpose of rs_shape: a decreasing sequence (a dominant weight) gives one row.
// This is the normalization the cell pipeline reports.
Partition bv_shape(const std::vector<Rational>& seq);

// Two strictly increasing rows. For B/C the top row is one longer; for D the
// rows have equal length and their order is irrelevant.
struct Symbol {
    std::vector<int> top, bottom;
    std::string to_string() const;
};

bool same_symbol(Family family, const Symbol& a, const Symbol& b);

// Partitions of 2n use the symplectic normalization (also for the B
// Weyl group); partitions of 2n+1 use the orthogonal odd one.
Symbol symbol_from_partition(Family family, const Partition& p);
bool same_family(const Symbol& a, const Symbol& b);
// No other symbol with the same rows lengths shares the entry multiset.
bool family_is_singleton(Family family, const Symbol& s);

// The four Theta-dominant conjugates of rho_Theta + omega_k used in the
// reducibility argument of the B (k even, 3k > 2n+1, k < n), C (k odd > 1,
// 3k <= 2n) and D (k odd, 3k >= 2n+1, k <= n-2) cases. Throws UnsupportedCase.
struct WitnessWeights {
    Weight lambda1, lambda2, lambda3, lambda4;
};
WitnessWeights witness_weights(const ParabolicDatum& pd);
bool has_witness_weights(Family family, int n, int k);

// Signed doubled e-coordinate sequence of lambda_2 - delta omega_k, with an
// extra (delta/2) e_n in type D. Length 2n.
std::vector<Rational> bv_sequence(const ParabolicDatum& pd, const Weight& lambda2, const Rational& delta);
// Same doubling applied to an arbitrary regular weight.
std::vector<Rational> doubled_sequence(const ParabolicDatum& pd, const Weight& w);

struct CellReport {
    std::vector<Rational> sequence;
    Partition shape;
    Symbol symbol;
    std::vector<Rational> parabolic_sequence;  // from w_Theta w_0 rho
    Partition parabolic_shape;
    Symbol parabolic_symbol;
    bool same_family = false;
};

CellReport cell_report(const ParabolicDatum& pd, const Rational& delta);

}  // namespace gvm
