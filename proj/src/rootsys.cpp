#include "gvm/rootsys.hpp"

#include "gvm/errors.hpp"
#include "gvm/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gvm {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

bool is_classical(Family f) { return f == Family::B || f == Family::C || f == Family::D; }

Family parse_family(const std::string& text, int* implied_rank) {
    if (text.empty()) fail(ErrorKind::InvalidArgument, "empty family");
    char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (ch < 'A' || ch > 'G') fail(ErrorKind::UnsupportedFamily, "unknown family '" + text + "'");
    Family f = static_cast<Family>(ch - 'A');
    if (text.size() > 1) {
        const std::string digits = text.substr(1);
        if (!std::all_of(digits.begin(), digits.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }))
            fail(ErrorKind::UnsupportedFamily, "unknown family '" + text + "'");
        if (implied_rank) *implied_rank = std::stoi(digits);
    } else if (implied_rank) {
        *implied_rank = 0;
    }
    return f;
}

// ---------------------------------------------------------------- Weight

Weight& Weight::operator+=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
}

Weight operator*(const Rational& s, Weight a) {
    for (auto& x : a.c) x *= s;
    return a;
}

std::string Weight::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += gvm::to_string(c[i]);
    }
    return out + ")";
}

std::vector<Rational> add_e(std::vector<Rational> a, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

// ---------------------------------------------------------------- CartanType

void CartanType::normalize() {
    std::sort(components.begin(), components.end(), [](const CartanComponent& a, const CartanComponent& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.rank < b.rank;
    });
}

std::string CartanType::to_string() const {
    if (components.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) out += "x";
        out += family_letter(components[i].family);
        out += std::to_string(components[i].rank);
    }
    return out;
}

CartanType CartanType::parse(const std::string& text) {
    CartanType t;
    if (text == "0" || text.empty()) return t;
    std::string s;
    // accept "x", "X", "*" and the multiplication sign as separators
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char ch = static_cast<unsigned char>(text[i]);
        if (ch == 0xC3 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x97) {
            s += ' ';
            ++i;
        } else if (ch == 'x' || ch == 'X' || ch == '*') {
            s += ' ';
        } else {
            s += static_cast<char>(ch);
        }
    }
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        int r = 0;
        Family f = parse_family(tok, &r);
        if (r <= 0) fail(ErrorKind::InvalidArgument, "factor without rank: '" + tok + "'");
        t.components.push_back({f, r});
    }
    t.normalize();
    return t;
}

// ---------------------------------------------------------------- construction

namespace {

void check_rank(Family f, int rank) {
    bool ok = false;
    switch (f) {
        case Family::A: ok = rank >= 1; break;
        case Family::B:
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 4; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    if (!ok || rank > 64)
        fail(ErrorKind::IllegalRank,
             std::string("illegal rank ") + std::to_string(rank) + " for family " + family_letter(f));
}

Rational euclid(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<Rational> unit(int dim, int i, const Rational& scale = 1) {
    std::vector<Rational> v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(i)] = scale;
    return v;
}

std::vector<Rational> diff(int dim, int i, int j) {
    auto v = unit(dim, i);
    v[static_cast<std::size_t>(j)] -= 1;
    return v;
}

IntMatrix chain_cartan(int n) {
    IntMatrix a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        a(i, i) = 2;
        if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1;
    }
    return a;
}

}  // namespace

std::optional<std::vector<std::vector<Rational>>> euclidean_simple_roots(Family family, int n) {
    std::vector<std::vector<Rational>> s;
    const Rational half(1, 2);
    switch (family) {
        case Family::B:
        case Family::C:
        case Family::D:
            for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
            if (family == Family::B) s.push_back(unit(n, n - 1));
            if (family == Family::C) s.push_back(unit(n, n - 1, 2));
            if (family == Family::D) {
                auto v = unit(n, n - 2);
                v[static_cast<std::size_t>(n - 1)] = 1;
                s.push_back(v);
            }
            return s;
        case Family::F:
            s.push_back({half, -half, -half, -half});
            s.push_back(unit(4, 3));
            s.push_back(diff(4, 2, 3));
            s.push_back(diff(4, 1, 2));
            return s;
        case Family::E:
            if (n == 7) {
                for (int i = 1; i <= 5; ++i) s.push_back(diff(8, i + 1, i + 2));
                auto v = unit(8, 6);
                v[7] = 1;
                s.push_back(v);
                std::vector<Rational> w(8, -half);
                w[0] = w[1] = half;
                s.push_back(w);
                return s;
            }
            if (n == 8) {
                for (int i = 1; i <= 6; ++i) s.push_back(diff(8, i, i + 1));
                auto v = unit(8, 6);
                v[7] = 1;
                s.push_back(v);
                std::vector<Rational> w(8, -half);
                w[0] = half;
                s.push_back(w);
                return s;
            }
            return std::nullopt;
        default: return std::nullopt;
    }
}

RootSystem build_from_cartan(Family family, int rank, const IntMatrix& cartan) {
    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;
    rs.cartan_ = cartan;
    rs.finish();
    return rs;
}

RootSystem build(Family family, int rank) {
    check_rank(family, rank);
    const auto n = static_cast<std::size_t>(rank);
    if (auto e = euclidean_simple_roots(family, rank)) {
        IntMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational v = 2 * euclid((*e)[j], (*e)[i]) / euclid((*e)[i], (*e)[i]);
                a(i, j) = v.get_num().get_si();
            }
        return build_from_cartan(family, rank, a);
    }
    if (family == Family::A) return build_from_cartan(family, rank, chain_cartan(rank));
    if (family == Family::E && rank == 6) {
        IntMatrix a = chain_cartan(5);
        IntMatrix b(6, 6);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) b(i, j) = a(i, j);
        b(5, 5) = 2;
        b(2, 5) = b(5, 2) = -1;
        return build_from_cartan(family, rank, b);
    }
    // G2, alpha_1 long
    IntMatrix g(2, 2);
    g(0, 0) = g(1, 1) = 2;
    g(0, 1) = -1;
    g(1, 0) = -3;
    return build_from_cartan(family, rank, g);
}

RootSystem build(const std::string& label, int rank) {
    int implied = 0;
    Family f = parse_family(label, &implied);
    if (implied && rank && implied != rank)
        fail(ErrorKind::IllegalRank, "rank " + std::to_string(rank) + " conflicts with label " + label);
    return build(f, implied ? implied : rank);
}

std::shared_ptr<const RootSystem> shared_system(Family family, int rank) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(family), rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto rs = std::make_shared<const RootSystem>(build(family, rank));
    cache.emplace(key, rs);
    return rs;
}

void RootSystem::finish() {
    const auto n = static_cast<std::size_t>(rank_);

    // symmetrizer: sym_i a_ij = sym_j a_ji, propagated along the diagram
    std::vector<Rational> sym(n, Rational(0));
    for (std::size_t start = 0; start < n; ++start) {
        if (sym[start] != 0) continue;
        sym[start] = 1;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && cartan_(i, j) != 0 && sym[j] == 0) {
                    sym[j] = sym[i] * Rational(cartan_(i, j)) / Rational(cartan_(j, i));
                    stack.push_back(j);
                }
        }
    }
    // the short roots of each component get 1
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && cartan_(i, j) != 0 && comp[j] < 0) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    sym_.assign(n, 1);
    for (int c = 0; c < ncomp; ++c) {
        Rational mn;
        bool first = true;
        for (std::size_t i = 0; i < n; ++i)
            if (comp[i] == c && (first || sym[i] < mn)) {
                mn = sym[i];
                first = false;
            }
        for (std::size_t i = 0; i < n; ++i)
            if (comp[i] == c) {
                Rational v = sym[i] / mn;
                sym_[i] = static_cast<int>(v.get_num().get_si());
            }
    }

    Matrix<Rational> ar(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ar(i, j) = Rational(cartan_(i, j));
    cartan_inv_ = *inverse(ar);

    // positive roots by root strings, in order of height
    positive_.clear();
    index_.clear();
    std::vector<std::vector<Root>> by_height(1);
    for (std::size_t i = 0; i < n; ++i) {
        Root r(n, 0);
        r[i] = 1;
        by_height[0].push_back(r);
        index_[r] = 0;
    }
    for (std::size_t h = 0; h < by_height.size(); ++h) {
        std::vector<Root> next;
        for (const Root& beta : by_height[h]) {
            for (std::size_t i = 0; i < n; ++i) {
                Root probe = beta;
                int p = 0;
                while (true) {
                    probe[i] -= 1;
                    if (!index_.count(probe)) break;
                    ++p;
                }
                long pairing = 0;
                for (std::size_t j = 0; j < n; ++j) pairing += cartan_(i, j) * beta[j];
                long q = p - pairing;
                if (q > 0) {
                    Root up = beta;
                    up[i] += 1;
                    if (!index_.count(up)) {
                        index_[up] = 0;
                        next.push_back(up);
                    }
                }
            }
        }
        if (!next.empty()) {
            std::sort(next.begin(), next.end());
            by_height.push_back(std::move(next));
        }
    }
    for (auto& level : by_height) {
        std::sort(level.begin(), level.end(), std::greater<Root>());
        for (auto& r : level) positive_.push_back(r);
    }
    index_.clear();
    for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = k;

    pos_weight_.clear();
    pos_coroot_.clear();
    pos_norm_.clear();
    for (const Root& r : positive_) {
        std::vector<long> w(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) w[i] += cartan_(i, j) * r[j];
        pos_weight_.push_back(w);
        long norm2 = 0;  // (r, r)
        for (std::size_t i = 0; i < n; ++i) norm2 += static_cast<long>(r[i]) * sym_[i] * w[i];
        int hn = static_cast<int>(norm2 / 2);
        pos_norm_.push_back(hn);
        std::vector<long> cv(n, 0);
        for (std::size_t i = 0; i < n; ++i) cv[i] = static_cast<long>(r[i]) * sym_[i] / hn;
        pos_coroot_.push_back(cv);
    }
}

std::string RootSystem::label() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

std::optional<std::size_t> RootSystem::positive_index(const Root& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool RootSystem::is_root(const Root& r) const {
    if (positive_index(r)) return true;
    Root neg = r;
    for (auto& x : neg) x = -x;
    return positive_index(neg).has_value();
}

Root RootSystem::simple_root(int label) const {
    if (label < 1 || label > rank_) fail(ErrorKind::InvalidArgument, "simple root label out of range");
    Root r(static_cast<std::size_t>(rank_), 0);
    r[static_cast<std::size_t>(label - 1)] = 1;
    return r;
}

Weight RootSystem::root_weight(const Root& r) const {
    const auto n = static_cast<std::size_t>(rank_);
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i) {
        long s = 0;
        for (std::size_t j = 0; j < n; ++j) s += cartan_(i, j) * r[j];
        w[i] = Rational(s);
    }
    return w;
}

std::vector<long> RootSystem::coroot(const Root& beta) const {
    if (beta.size() != static_cast<std::size_t>(rank_) || !is_root(beta))
        fail(ErrorKind::NotARoot, "not a root of " + label());
    int hn = half_norm(beta);
    std::vector<long> cv(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) cv[i] = static_cast<long>(beta[i]) * sym_[i] / hn;
    return cv;
}

int RootSystem::half_norm(const Root& beta) const {
    Root b = beta;
    if (b.empty()) return 0;
    bool neg = std::all_of(b.begin(), b.end(), [](int x) { return x <= 0; });
    if (neg)
        for (auto& x : b) x = -x;
    if (auto idx = positive_index(b)) return pos_norm_[*idx];
    fail(ErrorKind::NotARoot, "not a root of " + label());
}

Weight RootSystem::rho() const {
    Weight w(static_cast<std::size_t>(rank_));
    for (auto& x : w.c) x = 1;
    return w;
}

Weight RootSystem::fundamental(int label) const {
    if (label < 1 || label > rank_) fail(ErrorKind::InvalidArgument, "fundamental weight label out of range");
    Weight w(static_cast<std::size_t>(rank_));
    w[static_cast<std::size_t>(label - 1)] = 1;
    return w;
}

std::vector<Rational> RootSystem::simple_coordinates(const Weight& w) const { return cartan_inv_.apply(w.c); }

NodeSet RootSystem::support(const Root& r) const {
    NodeSet s;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return s;
}

int RootSystem::height(const Root& r) const { return std::accumulate(r.begin(), r.end(), 0); }

Rational pair(const RootSystem& rs, const Weight& lambda, const Root& beta) {
    auto cv = rs.coroot(beta);
    Rational s = 0;
    for (std::size_t i = 0; i < cv.size(); ++i)
        if (cv[i]) s += lambda[i] * Rational(cv[i]);
    return s;
}

Rational inner(const RootSystem& rs, const Weight& a, const Weight& b) {
    auto m = rs.simple_coordinates(b);
    Rational s = 0;
    for (std::size_t j = 0; j < m.size(); ++j) s += m[j] * a[j] * Rational(rs.half_norm(static_cast<int>(j)));
    return s;
}

Rational inner_roots(const RootSystem& rs, const Root& a, const Root& b) {
    long s = 0;
    const auto n = static_cast<std::size_t>(rs.rank());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s += static_cast<long>(a[i]) * b[j] * rs.half_norm(static_cast<int>(i)) * rs.cartan()(i, j);
    return Rational(s);
}

// ---------------------------------------------------------------- e-coordinates

ECoordinates::ECoordinates(const RootSystem& rs) : rs_(&rs) {
    if (rs.family() == Family::A || rs.family() == Family::G || (rs.family() == Family::E && rs.rank() == 6))
        fail(ErrorKind::UnsupportedFamily, "no e-coordinate model for " + rs.label());
    simple_ = *euclidean_simple_roots(rs.family(), rs.rank());
    dim_ = static_cast<int>(simple_[0].size());
    const auto n = static_cast<std::size_t>(rs.rank());
    fundamental_.assign(n, std::vector<Rational>(static_cast<std::size_t>(dim_), Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& f = rs.cartan_inverse()(j, i);
            if (f == 0) continue;
            for (std::size_t m = 0; m < static_cast<std::size_t>(dim_); ++m) fundamental_[i][m] += f * simple_[j][m];
        }
}

std::vector<Rational> ECoordinates::to_e(const Weight& w) const {
    std::vector<Rational> v(static_cast<std::size_t>(dim_), Rational(0));
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        for (std::size_t m = 0; m < v.size(); ++m) v[m] += w[i] * fundamental_[i][m];
    }
    return v;
}

Weight ECoordinates::from_e(const std::vector<Rational>& v) const {
    if (v.size() != static_cast<std::size_t>(dim_))
        fail(ErrorKind::InvalidArgument, "expected " + std::to_string(dim_) + " e-coordinates");
    Weight w(simple_.size());
    for (std::size_t i = 0; i < simple_.size(); ++i) w[i] = 2 * euclid(v, simple_[i]) / euclid(simple_[i], simple_[i]);
    if (to_e(w) != v) fail(ErrorKind::NotInSubspace, "vector is not in the span of the roots");
    return w;
}

std::vector<Rational> ECoordinates::root_to_e(const Root& r) const {
    std::vector<Rational> v(static_cast<std::size_t>(dim_), Rational(0));
    for (std::size_t j = 0; j < r.size(); ++j)
        for (std::size_t m = 0; m < v.size(); ++m) v[m] += Rational(r[j]) * simple_[j][m];
    return v;
}

Root ECoordinates::root_from_e(const std::vector<Rational>& v) const {
    Weight w = from_e(v);
    auto m = rs_->simple_coordinates(w);
    Root r;
    for (auto& x : m) {
        if (!is_integer(x)) fail(ErrorKind::NotARoot, "not a root");
        r.push_back(static_cast<int>(x.get_num().get_si()));
    }
    if (!rs_->is_root(r)) fail(ErrorKind::NotARoot, "not a root");
    return r;
}

// ---------------------------------------------------------------- type recognition

namespace {

bool find_isomorphism(const IntMatrix& sub, const IntMatrix& std_cartan, std::vector<int>& perm) {
    const std::size_t r = sub.rows();
    perm.assign(r, -1);
    std::vector<bool> used(r, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t a) -> bool {
        if (a == r) return true;
        for (std::size_t lab = 0; lab < r; ++lab) {
            if (used[lab]) continue;
            bool ok = true;
            for (std::size_t b = 0; b < a && ok; ++b) {
                auto lb = static_cast<std::size_t>(perm[b]);
                ok = sub(a, b) == std_cartan(lab, lb) && sub(b, a) == std_cartan(lb, lab);
            }
            if (!ok) continue;
            used[lab] = true;
            perm[a] = static_cast<int>(lab);
            if (rec(a + 1)) return true;
            used[lab] = false;
        }
        perm[a] = -1;
        return false;
    };
    return rec(0);
}

CartanComponent classify_component(const IntMatrix& c, const std::vector<int>& norms) {
    const std::size_t r = c.rows();
    auto bad = [] { fail(ErrorKind::NotASimpleSystem, "not a finite-type simple system"); };
    if (r == 1) return {Family::A, 1};
    std::vector<int> deg(r, 0);
    int edges = 0, doubles = 0, triples = 0;
    std::size_t du = 0, dv = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            long m = c(i, j) * c(j, i);
            if (m == 0) continue;
            ++deg[i];
            ++deg[j];
            ++edges;
            if (m == 2) {
                ++doubles;
                du = i;
                dv = j;
            }
            if (m == 3) ++triples;
            if (m > 3) bad();
        }
    if (edges != static_cast<int>(r) - 1) bad();
    if (triples) {
        if (r != 2) bad();
        return {Family::G, 2};
    }
    int maxdeg = *std::max_element(deg.begin(), deg.end());
    if (doubles) {
        if (doubles > 1 || maxdeg > 2) bad();
        if (r == 2) return {Family::B, 2};
        if (deg[du] == 2 && deg[dv] == 2) {
            if (r != 4) bad();
            return {Family::F, 4};
        }
        std::size_t end = deg[du] == 1 ? du : dv;
        std::size_t other = end == du ? dv : du;
        return norms[end] < norms[other] ? CartanComponent{Family::B, static_cast<int>(r)}
                                         : CartanComponent{Family::C, static_cast<int>(r)};
    }
    if (maxdeg <= 2) return {Family::A, static_cast<int>(r)};
    int branch = -1;
    for (std::size_t i = 0; i < r; ++i) {
        if (deg[i] > 3) bad();
        if (deg[i] == 3) {
            if (branch >= 0) bad();
            branch = static_cast<int>(i);
        }
    }
    std::vector<int> arms;
    for (std::size_t j = 0; j < r; ++j) {
        if (j == static_cast<std::size_t>(branch) || c(static_cast<std::size_t>(branch), j) == 0) continue;
        int len = 1;
        std::size_t prev = static_cast<std::size_t>(branch), cur = j;
        while (true) {
            std::size_t nxt = r;
            for (std::size_t x = 0; x < r; ++x)
                if (x != cur && x != prev && c(cur, x) != 0) nxt = x;
            if (nxt == r) break;
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {Family::D, static_cast<int>(r)};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return {Family::E, static_cast<int>(r)};
    fail(ErrorKind::NotASimpleSystem, "not a finite-type simple system");
}

}  // namespace

TypeRecognition recognize(const RootSystem& rs, const std::vector<Root>& roots) {
    const std::size_t m = roots.size();
    TypeRecognition out;
    if (m == 0) return out;
    std::vector<std::vector<long>> cor;
    std::vector<Weight> wts;
    std::vector<int> norms;
    for (const Root& g : roots) {
        if (g.size() != static_cast<std::size_t>(rs.rank()) || !rs.is_root(g))
            fail(ErrorKind::NotASimpleSystem, "entry is not a root");
        cor.push_back(rs.coroot(g));
        wts.push_back(rs.root_weight(g));
        norms.push_back(rs.half_norm(g));
    }
    IntMatrix c(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < cor[i].size(); ++k) s += Rational(cor[i][k]) * wts[j][k];
            c(i, j) = s.get_num().get_si();
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && (c(i, j) > 0 || c(i, j) * c(j, i) >= 4))
                fail(ErrorKind::NotASimpleSystem, "roots are not pairwise obtuse and independent");
    Matrix<Rational> coords(m, static_cast<std::size_t>(rs.rank()));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < roots[i].size(); ++k) coords(i, k) = Rational(roots[i][k]);
    if (matrix_rank(coords) != m) fail(ErrorKind::NotASimpleSystem, "roots are linearly dependent");

    std::vector<int> comp(m, -1);
    for (std::size_t s = 0; s < m; ++s) {
        if (comp[s] >= 0) continue;
        ComponentInfo info;
        std::vector<std::size_t> stack{s};
        comp[s] = static_cast<int>(out.components.size());
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            info.members.push_back(i);
            for (std::size_t j = 0; j < m; ++j)
                if (j != i && c(i, j) != 0 && comp[j] < 0) {
                    comp[j] = comp[s];
                    stack.push_back(j);
                }
        }
        std::sort(info.members.begin(), info.members.end());
        const std::size_t r = info.members.size();
        IntMatrix sub(r, r);
        std::vector<int> subnorm(r);
        for (std::size_t a = 0; a < r; ++a) {
            subnorm[a] = norms[info.members[a]];
            for (std::size_t b = 0; b < r; ++b) sub(a, b) = c(info.members[a], info.members[b]);
        }
        info.type = classify_component(sub, subnorm);
        RootSystem standard = build(info.type.family, info.type.rank);
        std::vector<int> perm;
        if (!find_isomorphism(sub, standard.cartan(), perm))
            fail(ErrorKind::NotASimpleSystem, "diagram does not match its classified type");
        for (int p : perm) info.standard_label.push_back(p + 1);
        out.type.components.push_back(info.type);
        out.components.push_back(std::move(info));
    }
    out.type.normalize();
    return out;
}

CartanType recognize_type(const RootSystem& rs, const std::vector<Root>& roots) { return recognize(rs, roots).type; }

}  // namespace gvm
