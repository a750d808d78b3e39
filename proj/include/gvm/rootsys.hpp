#pragma once

#include "gvm/matrix.hpp"
#include "gvm/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gvm {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);
// "B", "E6", "e7", "g2"... A bare exceptional letter needs the rank separately.
Family parse_family(const std::string& text, int* implied_rank = nullptr);
bool is_classical(Family f);

// Simple labels are 1-based throughout the public interface, matching the
// usual Dynkin numbering.
using NodeSet = std::vector<int>;

// Coordinates on the simple roots.
using Root = std::vector<int>;

// Coordinates on the fundamental weights: component i is <lambda, alpha_i^vee>.
struct Weight {
    std::vector<Rational> c;

    Weight() = default;
    explicit Weight(std::size_t n) : c(n, Rational(0)) {}
    explicit Weight(std::vector<Rational> v) : c(std::move(v)) {}

    std::size_t size() const { return c.size(); }
    Rational& operator[](std::size_t i) { return c[i]; }
    const Rational& operator[](std::size_t i) const { return c[i]; }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(const Rational& s, Weight a);
    friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }

    std::string to_string() const;
};

struct CartanComponent {
    Family family;
    int rank;
    friend bool operator==(const CartanComponent&, const CartanComponent&) = default;
};

// Multiset of simple factors, kept in sorted order (A before B ..., low rank first).
struct CartanType {
    std::vector<CartanComponent> components;

    void normalize();
    std::string to_string() const;  // "A1xD6"; the empty type prints as "0"
    static CartanType parse(const std::string& text);
    friend bool operator==(const CartanType& a, const CartanType& b) { return a.components == b.components; }
};

class RootSystem {
public:
    Family family() const { return family_; }
    int rank() const { return rank_; }
    std::string label() const;

    // cartan()(i, j) = <alpha_j, alpha_i^vee>, 0-based.
    const IntMatrix& cartan() const { return cartan_; }
    // (alpha_i, alpha_i) / 2, short roots have squared length 2.
    int half_norm(int i) const { return sym_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& symmetrizer() const { return sym_; }

    // Sorted by height, then lexicographically.
    const std::vector<Root>& positive_roots() const { return positive_; }
    std::size_t num_positive() const { return positive_.size(); }
    std::optional<std::size_t> positive_index(const Root& r) const;
    bool is_root(const Root& r) const;
    bool is_positive_root(const Root& r) const { return positive_index(r).has_value(); }

    Root simple_root(int label) const;  // 1-based
    // Weight coordinates of a root; also used for arbitrary integer vectors in the root lattice.
    Weight root_weight(const Root& r) const;
    const std::vector<long>& positive_root_weight(std::size_t idx) const { return pos_weight_[idx]; }
    const std::vector<long>& positive_coroot(std::size_t idx) const { return pos_coroot_[idx]; }
    int positive_half_norm(std::size_t idx) const { return pos_norm_[idx]; }

    // Coordinates of beta^vee on the simple coroots. Throws NotARoot.
    std::vector<long> coroot(const Root& beta) const;
    // (beta, beta) / 2.
    int half_norm(const Root& beta) const;

    Weight rho() const;
    Weight fundamental(int label) const;
    Weight zero() const { return Weight(static_cast<std::size_t>(rank_)); }

    // Express a weight on the simple roots.
    std::vector<Rational> simple_coordinates(const Weight& w) const;
    const Matrix<Rational>& cartan_inverse() const { return cartan_inv_; }

    // Labels of the simple roots a root is supported on.
    NodeSet support(const Root& r) const;
    int height(const Root& r) const;

private:
    friend RootSystem build(Family, int);
    friend RootSystem build_from_cartan(Family, int, const IntMatrix&);
    void finish();

    Family family_ = Family::A;
    int rank_ = 0;
    IntMatrix cartan_;
    std::vector<int> sym_;
    Matrix<Rational> cartan_inv_;
    std::vector<Root> positive_;
    std::map<Root, std::size_t> index_;
    std::vector<std::vector<long>> pos_weight_;
    std::vector<std::vector<long>> pos_coroot_;
    std::vector<int> pos_norm_;
};

// build(family, rank). Throws IllegalRank.
RootSystem build(Family family, int rank);
// Rank is implied for E6, E7, E8, F4, G2 labels.
RootSystem build(const std::string& label, int rank = 0);
// Thread-safe cache of immutable systems.
std::shared_ptr<const RootSystem> shared_system(Family family, int rank);

// <lambda, beta^vee>. Throws NotARoot.
Rational pair(const RootSystem& rs, const Weight& lambda, const Root& beta);
// Invariant form, normalized so short roots have squared length 2.
Rational inner(const RootSystem& rs, const Weight& a, const Weight& b);
Rational inner_roots(const RootSystem& rs, const Root& a, const Root& b);

// Euclidean model for B, C, D, F4, E7, E8. A, G2 and E6 throw UnsupportedFamily.
class ECoordinates {
public:
    explicit ECoordinates(const RootSystem& rs);
    int dim() const { return dim_; }
    std::vector<Rational> to_e(const Weight& w) const;
    // Throws NotInSubspace if v is outside the span of the roots.
    Weight from_e(const std::vector<Rational>& v) const;
    std::vector<Rational> root_to_e(const Root& r) const;
    const std::vector<Rational>& simple_e(int label) const { return simple_[static_cast<std::size_t>(label - 1)]; }
    // Simple-root coordinates of the root with given e-coordinates. Throws NotARoot.
    Root root_from_e(const std::vector<Rational>& v) const;

private:
    const RootSystem* rs_;
    int dim_ = 0;
    std::vector<std::vector<Rational>> simple_;
    std::vector<std::vector<Rational>> fundamental_;
};

// Euclidean simple roots used to build the system, if the family has a model.
std::optional<std::vector<std::vector<Rational>>> euclidean_simple_roots(Family family, int rank);

struct ComponentInfo {
    CartanComponent type;
    std::vector<std::size_t> members;   // indices into the input list
    std::vector<int> standard_label;    // 1-based position in the standard diagram, per member
};

struct TypeRecognition {
    CartanType type;
    std::vector<ComponentInfo> components;
};

// Classifies the Cartan matrix of a simple system given in simple-root coordinates.
// Throws NotASimpleSystem.
TypeRecognition recognize(const RootSystem& rs, const std::vector<Root>& roots);
CartanType recognize_type(const RootSystem& rs, const std::vector<Root>& roots);

std::vector<Rational> add_e(std::vector<Rational> a, const std::vector<Rational>& b);

}  // namespace gvm
