#pragma once

#include "gvm/rootsys.hpp"
#include "gvm/weyl.hpp"

#include <memory>

namespace gvm {

// Half sums attached to an arbitrary Theta.
struct ThetaHalves {
    WeylElement w_theta;
    Weight rho_theta;  // (rho - w_theta rho) / 2
    Weight rho_upper;  // (rho + w_theta rho) / 2
};

ThetaHalves theta_halves(const RootSystem& rs, const NodeSet& theta);

struct ParabolicDatum {
    std::shared_ptr<const RootSystem> rs;
    int k = 0;        // removed node
    NodeSet theta;    // all other nodes
    ThetaHalves halves;
    Weight omega;     // omega_k
    Rational c;       // smallest positive with 2 c omega in the root lattice
    Rational d;       // rho^Theta = d omega

    const Weight& rho_theta() const { return halves.rho_theta; }
    const Weight& rho_upper() const { return halves.rho_upper; }
};

ParabolicDatum maximal_parabolic(std::shared_ptr<const RootSystem> rs, int k);
ParabolicDatum maximal_parabolic(Family family, int rank, int k);

// rho_Theta + t omega
Weight lambda_of_t(const ParabolicDatum& pd, const Rational& t);

enum class Integrality { Integral, HalfIntegral, Other };
const char* integrality_name(Integrality i);

bool is_integral(const Weight& w);
Integrality integrality_class(const ParabolicDatum& pd, const Rational& t);

struct IntegralSystem {
    std::vector<Root> roots;          // positive integral roots
    std::vector<Root> simple_system;  // indecomposable ones
    CartanType ctype;
};

IntegralSystem integral_system(const RootSystem& rs, const Weight& lambda);

int dim_nilradical(const RootSystem& rs, const NodeSet& theta);
int dim_nilradical(const ParabolicDatum& pd);

// lambda is integral on Theta with positive pairings on every simple root of Theta.
bool in_theta_dominant_regular(const ParabolicDatum& pd, const Weight& lambda);

}  // namespace gvm
