#include "gvm/parabolic.hpp"

#include "gvm/errors.hpp"

#include <set>

namespace gvm {

ThetaHalves theta_halves(const RootSystem& rs, const NodeSet& theta) {
    ThetaHalves h;
    h.w_theta = longest_element(rs, theta);
    Weight rho = rs.rho();
    Weight wr = h.w_theta.apply(rho);
    const Rational half(1, 2);
    h.rho_theta = half * (rho - wr);
    h.rho_upper = half * (rho + wr);
    return h;
}

ParabolicDatum maximal_parabolic(std::shared_ptr<const RootSystem> rs, int k) {
    if (k < 1 || k > rs->rank())
        fail(ErrorKind::InvalidArgument, "k=" + std::to_string(k) + " outside 1.." + std::to_string(rs->rank()));
    ParabolicDatum pd;
    pd.rs = rs;
    pd.k = k;
    for (int l = 1; l <= rs->rank(); ++l)
        if (l != k) pd.theta.push_back(l);
    pd.halves = theta_halves(*rs, pd.theta);
    pd.omega = rs->fundamental(k);
    pd.d = pd.halves.rho_upper[static_cast<std::size_t>(k - 1)];
    pd.c = Rational(lcm_of_denominators(rs->simple_coordinates(pd.omega)), 2);
    pd.c.canonicalize();
    return pd;
}

ParabolicDatum maximal_parabolic(Family family, int rank, int k) {
    return maximal_parabolic(shared_system(family, rank), k);
}

Weight lambda_of_t(const ParabolicDatum& pd, const Rational& t) { return pd.rho_theta() + t * pd.omega; }

const char* integrality_name(Integrality i) {
    switch (i) {
        case Integrality::Integral: return "integral";
        case Integrality::HalfIntegral: return "half_integral";
        case Integrality::Other: return "other";
    }
    return "other";
}

bool is_integral(const Weight& w) {
    for (const auto& x : w.c)
        if (!is_integer(x)) return false;
    return true;
}

Integrality integrality_class(const ParabolicDatum& pd, const Rational& t) {
    if (is_integral(lambda_of_t(pd, t))) return Integrality::Integral;
    if (is_integer(Rational(2 * t))) return Integrality::HalfIntegral;
    return Integrality::Other;
}

IntegralSystem integral_system(const RootSystem& rs, const Weight& lambda) {
    IntegralSystem out;
    for (std::size_t idx = 0; idx < rs.num_positive(); ++idx) {
        const auto& cv = rs.positive_coroot(idx);
        Rational s = 0;
        for (std::size_t i = 0; i < cv.size(); ++i)
            if (cv[i]) s += lambda[i] * Rational(cv[i]);
        if (is_integer(s)) out.roots.push_back(rs.positive_roots()[idx]);
    }
    std::set<Root> members(out.roots.begin(), out.roots.end());
    for (const Root& b : out.roots) {
        bool decomposable = false;
        for (const Root& g : out.roots) {
            Root rest = b;
            bool nonneg = true;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                rest[i] -= g[i];
                if (rest[i] < 0) nonneg = false;
            }
            if (nonneg && members.count(rest)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) out.simple_system.push_back(b);
    }
    out.ctype = recognize_type(rs, out.simple_system);
    return out;
}

int dim_nilradical(const RootSystem& rs, const NodeSet& theta) {
    return static_cast<int>(rs.num_positive() - positive_roots_of(rs, theta).size());
}

int dim_nilradical(const ParabolicDatum& pd) { return dim_nilradical(*pd.rs, pd.theta); }

bool in_theta_dominant_regular(const ParabolicDatum& pd, const Weight& lambda) {
    for (int l : pd.theta) {
        const Rational& x = lambda[static_cast<std::size_t>(l - 1)];
        if (!is_integer(x) || x <= 0) return false;
    }
    return true;
}

}  // namespace gvm
