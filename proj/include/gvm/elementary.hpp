#pragma once

#include "gvm/classify.hpp"
#include "gvm/parabolic.hpp"

#include <vector>

namespace gvm {

// Data attached to a Theta-reduced root alpha: Delta(alpha) is the set of
// roots whose restriction to a_Theta is proportional to that of alpha, and
// Pi(alpha) = Theta u {alpha} is its basis.
struct ReducedRootDatum {
    Root alpha;
    std::vector<Root> pi_alpha;        // Theta first, alpha last
    std::vector<Root> delta_alpha;     // positive roots of Delta(alpha)
    WeylElement w_alpha;               // longest element of W(Delta(alpha))
    WeylElement sigma;                 // w_alpha w_Theta
    Weight omega_alpha;                // vanishes on Theta, <omega_alpha, alpha^vee> = 1
    CartanComponent subtype;           // simple factor of Delta(alpha) containing alpha
    int sub_k = 0;                     // label of alpha in that factor
    bool acceptable = false;           // w_alpha commutes with w_Theta
};

std::vector<ReducedRootDatum> reduced_roots(const RootSystem& rs, const NodeSet& theta);
std::vector<ReducedRootDatum> reduced_acceptable_roots(const RootSystem& rs, const NodeSet& theta);

Weight sigma_action(const ReducedRootDatum& rrd, const Weight& nu);

// nu is in a_Theta^* and orthogonal to omega_alpha.
bool in_v_alpha(const RootSystem& rs, const NodeSet& theta, const ReducedRootDatum& rrd, const Weight& nu);

// Parameter set of the maximal parabolic (subtype, sub_k) inside g(alpha).
// Odd-rank type A at the middle node is the Hermitian symmetric case with
// parameter set N; other type A factors throw UnsupportedSubtype.
TSet subsystem_tset(const ReducedRootDatum& rrd, std::vector<std::string>* trace = nullptr);

struct ElementaryVerdict {
    bool exists = false;
    Weight source;  // rho_Theta + nu - m c omega_alpha
    Weight target;  // rho_Theta + nu + m c omega_alpha
    TSet sub_tset = TSet::Zero;
    std::vector<std::string> trace;
};

// M(source) in M(target) when M[-nc] in M[nc] holds in g(alpha) for every n.
// Throws NotOrthogonal, UnsupportedSubtype.
ElementaryVerdict elementary_hom(const RootSystem& rs, const NodeSet& theta, const ReducedRootDatum& rrd,
                                 const Weight& nu, const Rational& c, const Rational& m);

// ------------------------------------------------------------------ type C compositions

// Removed nodes k*_1 < ... < k*_s of Theta^kappa in C_n.
std::vector<int> partial_sums(const std::vector<int>& kappa);
NodeSet composition_theta(int n, const std::vector<int>& kappa);
// e-coordinates of a_i = sum of the e_j in block i.
std::vector<Rational> block_vector(int n, const std::vector<int>& kappa, int i);
// rho_{Theta^kappa} + sum t_i a_i
Weight composition_weight(const RootSystem& rs, const std::vector<int>& kappa, const std::vector<Rational>& t);

struct CompositionInclusion {
    // 1: swap t_p, t_q of equal blocks (e_{k*_p} - e_{k*_{q-1}+1})
    // 2: t_p -> -t_p above the threshold 3k_p > 2(k_p + n - k*_s)
    // 3: t_p -> -t_p at or below it
    // 4: (t_p, t_q) -> (-t_q, -t_p) for equal blocks (e_{k*_p} + e_{k*_q})
    int clause = 0;
    int p = 0, q = 0;
    std::vector<Rational> t_source, t_target;
    Root alpha;
    ElementaryVerdict verdict;
};

// Candidate inclusions M(.. t_source ..) in M(.. t_target ..) between scalar modules of
// Theta^kappa in C_n obtained from single reduced roots. Trivial (identity) candidates are skipped.
std::vector<CompositionInclusion> composition_inclusions(int n, const std::vector<int>& kappa,
                                                         const std::vector<Rational>& t);

}  // namespace gvm
