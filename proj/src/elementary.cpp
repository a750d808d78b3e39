#include "gvm/elementary.hpp"

#include "gvm/errors.hpp"
#include "gvm/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gvm {

namespace {

bool contains(const NodeSet& s, int label) { return std::find(s.begin(), s.end(), label) != s.end(); }

// beta and alpha restrict to proportional functionals on a_Theta: their
// coordinates off Theta are proportional.
bool proportional_off_theta(const Root& beta, const Root& alpha, const NodeSet& theta) {
    std::size_t pivot = alpha.size();
    for (std::size_t j = 0; j < alpha.size(); ++j)
        if (!contains(theta, static_cast<int>(j) + 1) && alpha[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot == alpha.size()) return false;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (contains(theta, static_cast<int>(j) + 1)) continue;
        if (static_cast<long>(beta[j]) * alpha[pivot] != static_cast<long>(alpha[j]) * beta[pivot]) return false;
    }
    return true;
}

// Projection of the root onto a_Theta^*, scaled so that it pairs to 1 with alpha^vee.
Weight omega_for(const RootSystem& rs, const NodeSet& theta, const Root& alpha) {
    Weight aw = rs.root_weight(alpha);
    const std::size_t t = theta.size();
    Weight p = aw;
    if (t > 0) {
        Matrix<Rational> a(t, t);
        std::vector<Rational> rhs(t);
        for (std::size_t i = 0; i < t; ++i) {
            rhs[i] = aw[static_cast<std::size_t>(theta[i] - 1)];
            for (std::size_t j = 0; j < t; ++j)
                a(i, j) = Rational(rs.cartan()(static_cast<std::size_t>(theta[i] - 1),
                                               static_cast<std::size_t>(theta[j] - 1)));
        }
        auto x = solve(a, rhs);
        if (!x) throw std::logic_error("Theta block of the Cartan matrix is singular");
        for (std::size_t j = 0; j < t; ++j) p -= (*x)[j] * rs.root_weight(rs.simple_root(theta[j]));
    }
    Rational s = pair(rs, p, alpha);
    return (1 / s) * p;
}

}  // namespace

std::vector<ReducedRootDatum> reduced_roots(const RootSystem& rs, const NodeSet& theta) {
    const ThetaHalves halves = theta_halves(rs, theta);
    std::vector<ReducedRootDatum> out;
    for (const Root& alpha : rs.positive_roots()) {
        if (in_span(alpha, theta)) continue;
        std::vector<Root> delta;
        for (const Root& beta : rs.positive_roots())
            if (in_span(beta, theta) || proportional_off_theta(beta, alpha, theta)) delta.push_back(beta);
        std::set<Root> members(delta.begin(), delta.end());
        std::vector<Root> simple;
        for (const Root& beta : delta) {
            bool decomposable = false;
            for (const Root& g : delta) {
                if (g == beta) continue;
                Root rest(beta.size());
                for (std::size_t i = 0; i < beta.size(); ++i) rest[i] = beta[i] - g[i];
                if (members.count(rest)) {
                    decomposable = true;
                    break;
                }
            }
            if (!decomposable) simple.push_back(beta);
        }
        std::vector<Root> outside;
        for (const Root& r : simple)
            if (!in_span(r, theta)) outside.push_back(r);
        if (outside.size() != 1 || simple.size() != theta.size() + 1)
            throw std::logic_error("Delta(alpha) basis is not Theta plus one root");
        if (outside.front() != alpha) continue;

        ReducedRootDatum d;
        d.alpha = alpha;
        for (int j : theta) d.pi_alpha.push_back(rs.simple_root(j));
        d.pi_alpha.push_back(alpha);
        d.delta_alpha = delta;
        d.w_alpha = longest_element_of(rs, d.pi_alpha);
        d.acceptable = d.w_alpha * halves.w_theta == halves.w_theta * d.w_alpha;
        d.sigma = d.w_alpha * halves.w_theta;
        d.omega_alpha = omega_for(rs, theta, alpha);

        TypeRecognition rec = recognize(rs, d.pi_alpha);
        const std::size_t last = d.pi_alpha.size() - 1;
        for (const auto& comp : rec.components)
            for (std::size_t i = 0; i < comp.members.size(); ++i)
                if (comp.members[i] == last) {
                    d.subtype = comp.type;
                    d.sub_k = comp.standard_label[i];
                }
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<ReducedRootDatum> reduced_acceptable_roots(const RootSystem& rs, const NodeSet& theta) {
    if (static_cast<int>(theta.size()) >= rs.rank())
        fail(ErrorKind::InvalidArgument, "Theta must be a proper subset of the simple roots");
    std::vector<ReducedRootDatum> out;
    for (auto& d : reduced_roots(rs, theta))
        if (d.acceptable) out.push_back(std::move(d));
    return out;
}

Weight sigma_action(const ReducedRootDatum& rrd, const Weight& nu) { return rrd.sigma.apply(nu); }

bool in_v_alpha(const RootSystem& rs, const NodeSet& theta, const ReducedRootDatum& rrd, const Weight& nu) {
    for (int j : theta)
        if (nu[static_cast<std::size_t>(j - 1)] != 0) return false;
    return inner(rs, nu, rrd.omega_alpha) == 0;
}

TSet subsystem_tset(const ReducedRootDatum& rrd, std::vector<std::string>* trace) {
    const CartanComponent& st = rrd.subtype;
    const std::string name = std::string(1, family_letter(st.family)) + std::to_string(st.rank);
    if (trace) trace->push_back("factor of g(alpha) containing alpha: " + name + ", alpha at node " +
                                std::to_string(rrd.sub_k));
    if (st.family == Family::A) {
        if (st.rank % 2 == 1 && 2 * rrd.sub_k == st.rank + 1) {
            if (trace) trace->push_back(name + " k=" + std::to_string(rrd.sub_k) + ": Hermitian symmetric middle node: t in N");
            return TSet::Naturals;
        }
        fail(ErrorKind::UnsupportedSubtype,
             "type A factor " + name + " at node " + std::to_string(rrd.sub_k) + " unsupported (Boe 1985)");
    }
    return hom_tset(st.family, st.rank, rrd.sub_k, trace);
}

ElementaryVerdict elementary_hom(const RootSystem& rs, const NodeSet& theta, const ReducedRootDatum& rrd,
                                 const Weight& nu, const Rational& c, const Rational& m) {
    if (c != 1 && c != Rational(1, 2)) fail(ErrorKind::InvalidArgument, "c must be 1 or 1/2");
    if (!is_natural(m)) fail(ErrorKind::InvalidArgument, "m must be a non-negative integer");
    if (!in_v_alpha(rs, theta, rrd, nu))
        fail(ErrorKind::NotOrthogonal, "nu must vanish on Theta and be orthogonal to omega_alpha");

    ElementaryVerdict v;
    const Weight rho_theta = theta_halves(rs, theta).rho_theta;
    const Weight shift = (m * c) * rrd.omega_alpha;
    v.source = rho_theta + nu - shift;
    v.target = rho_theta + nu + shift;
    v.trace.push_back("reduction: only the simple factor of g(alpha) containing alpha enters");
    v.sub_tset = subsystem_tset(rrd, &v.trace);
    if (m == 0) {
        v.exists = true;
        v.trace.push_back("m = 0: identity");
        return v;
    }
    // every n c with n in N must lie in the subsystem set
    v.exists = c == 1 ? v.sub_tset != TSet::Zero : v.sub_tset == TSet::HalfNaturals;
    v.trace.push_back(std::string("c = ") + to_string(c) + (v.exists ? ": c N inside " : ": c N not inside ") +
                      tset_name(v.sub_tset) + (v.exists ? ", elementary inclusion holds" : ", no elementary inclusion"));
    return v;
}

std::vector<int> partial_sums(const std::vector<int>& kappa) {
    std::vector<int> out;
    int acc = 0;
    for (int k : kappa) out.push_back(acc += k);
    return out;
}

namespace {

void check_composition(int n, const std::vector<int>& kappa) {
    int acc = 0;
    for (int k : kappa) {
        if (k <= 0) fail(ErrorKind::InvalidArgument, "composition parts must be positive");
        acc += k;
    }
    if (acc > n) fail(ErrorKind::InvalidArgument, "composition sums to " + std::to_string(acc) + " > n=" + std::to_string(n));
}

}  // namespace

NodeSet composition_theta(int n, const std::vector<int>& kappa) {
    check_composition(n, kappa);
    auto ks = partial_sums(kappa);
    NodeSet theta;
    for (int j = 1; j <= n; ++j)
        if (std::find(ks.begin(), ks.end(), j) == ks.end()) theta.push_back(j);
    return theta;
}

std::vector<Rational> block_vector(int n, const std::vector<int>& kappa, int i) {
    check_composition(n, kappa);
    if (i < 1 || i > static_cast<int>(kappa.size())) fail(ErrorKind::InvalidArgument, "block index out of range");
    auto ks = partial_sums(kappa);
    std::vector<Rational> a(static_cast<std::size_t>(n), Rational(0));
    const int lo = i == 1 ? 0 : ks[static_cast<std::size_t>(i - 2)];
    for (int j = lo + 1; j <= ks[static_cast<std::size_t>(i - 1)]; ++j) a[static_cast<std::size_t>(j - 1)] = 1;
    return a;
}

Weight composition_weight(const RootSystem& rs, const std::vector<int>& kappa, const std::vector<Rational>& t) {
    if (rs.family() != Family::C) fail(ErrorKind::UnsupportedFamily, "compositions are set up for type C");
    if (t.size() != kappa.size()) fail(ErrorKind::InvalidArgument, "need one parameter per block");
    const int n = rs.rank();
    ECoordinates ec(rs);
    std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t i = 0; i < kappa.size(); ++i) {
        auto a = block_vector(n, kappa, static_cast<int>(i) + 1);
        for (std::size_t j = 0; j < a.size(); ++j) e[j] += t[i] * a[j];
    }
    return theta_halves(rs, composition_theta(n, kappa)).rho_theta + ec.from_e(e);
}

std::vector<CompositionInclusion> composition_inclusions(int n, const std::vector<int>& kappa,
                                                         const std::vector<Rational>& t) {
    check_composition(n, kappa);
    if (t.size() != kappa.size()) fail(ErrorKind::InvalidArgument, "need one parameter per block");
    if (kappa.empty()) return {};
    auto rs = shared_system(Family::C, n);
    ECoordinates ec(*rs);
    const NodeSet theta = composition_theta(n, kappa);
    const auto ks = partial_sums(kappa);
    const int s = static_cast<int>(kappa.size());
    // block containing e-index j (1-based), 0 for the sp tail
    auto block_of = [&](int j) {
        for (int i = 0; i < s; ++i)
            if (j <= ks[static_cast<std::size_t>(i)]) return i + 1;
        return 0;
    };
    std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
    for (int i = 1; i <= s; ++i) {
        auto a = block_vector(n, kappa, i);
        for (std::size_t j = 0; j < a.size(); ++j) e[j] += t[static_cast<std::size_t>(i - 1)] * a[j];
    }
    const Weight param = ec.from_e(e);

    std::vector<CompositionInclusion> out;
    for (const auto& rrd : reduced_acceptable_roots(*rs, theta)) {
        CompositionInclusion ci;
        ci.alpha = rrd.alpha;
        auto ae = ec.root_to_e(rrd.alpha);
        std::vector<int> plus;
        int minus = 0;
        for (int j = 1; j <= n; ++j) {
            const Rational& x = ae[static_cast<std::size_t>(j - 1)];
            if (x > 0) plus.push_back(j);
            if (x < 0) minus = j;
        }
        ci.p = block_of(plus.front());
        ci.t_source = t;
        auto at = [&](int i) -> Rational& { return ci.t_source[static_cast<std::size_t>(i - 1)]; };
        if (minus != 0 && block_of(minus) != 0) {
            ci.clause = 1;
            ci.q = block_of(minus);
            std::swap(at(ci.p), at(ci.q));
        } else if (plus.size() == 2 && block_of(plus.back()) != 0) {
            ci.clause = 4;
            ci.q = block_of(plus.back());
            Rational tp = at(ci.p);
            at(ci.p) = -at(ci.q);
            at(ci.q) = -tp;
        } else {
            const int kp = kappa[static_cast<std::size_t>(ci.p - 1)];
            ci.clause = 3 * kp > 2 * (kp + n - ks.back()) ? 2 : 3;
            ci.q = ci.p;
            at(ci.p) = -at(ci.p);
        }
        ci.t_target = t;
        const Rational x = pair(*rs, param, rrd.alpha);
        if (x == 0) continue;
        const Weight nu = param - x * rrd.omega_alpha;
        Rational c(1), m = x;
        if (!is_natural(x) && is_half_natural(x)) {
            c = Rational(1, 2);
            m = 2 * x;
        }
        if (is_half_natural(x)) {
            ci.verdict = elementary_hom(*rs, theta, rrd, nu, c, m);
        } else {
            ElementaryVerdict v;
            const Weight rho_theta = theta_halves(*rs, theta).rho_theta;
            v.source = rho_theta + nu - x * rrd.omega_alpha;
            v.target = rho_theta + param;
            v.sub_tset = subsystem_tset(rrd, &v.trace);
            v.trace.push_back("<lambda, alpha^vee> = " + to_string(x) + " is not in 1/2N: no elementary inclusion");
            ci.verdict = std::move(v);
        }
        out.push_back(std::move(ci));
    }
    return out;
}

}  // namespace gvm
