#pragma once

#include "gvm/rootsys.hpp"

#include <map>
#include <string>
#include <vector>

namespace gvm {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // sorted descending, zeros dropped
    // {{3, 2}, {1, 4}} is 3^2 1^4.
    static Partition from_exponents(const std::vector<std::pair<int, int>>& powers);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    std::size_t length() const { return parts_.size(); }
    int multiplicity(int part) const;
    Partition dual() const;
    std::string to_string() const;  // "3^2 2^2"
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
};

struct OrbitDatum {
    Partition partition;
    bool birational = false;
    bool very_even = false;  // type D with only even parts: two orbits share the partition
};

// Richardson orbit of the maximal parabolic Theta^k in the classical algebra
// of rank n (so(2n+1), sp(2n), so(2n)). D with k = n-1 throws UnsupportedCase.
OrbitDatum richardson(Family family, int n, int k);

// Parity rule of the nilpotent orbits of the family.
bool satisfies_parity(Family family, const Partition& p);

// Nilpotent orbit dimension from the centralizer formula. Throws InvalidPartition.
long orbit_dimension(Family family, int n, const Partition& p);

// Exceptional families only. G2 throws UnsupportedCase; classical families throw UnsupportedFamily.
bool is_even_parabolic(Family family, int rank, int k);

}  // namespace gvm
