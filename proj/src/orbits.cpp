#include "gvm/orbits.hpp"

#include "gvm/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace gvm {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0) fail(ErrorKind::InvalidPartition, "negative part");
    parts_.erase(std::remove(parts_.begin(), parts_.end(), 0), parts_.end());
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition Partition::from_exponents(const std::vector<std::pair<int, int>>& powers) {
    std::vector<int> parts;
    for (auto [part, mult] : powers) {
        if (mult < 0) fail(ErrorKind::InvalidPartition, "negative multiplicity");
        parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::dual() const {
    std::vector<int> d;
    if (parts_.empty()) return Partition();
    for (int i = 1; i <= parts_.front(); ++i)
        d.push_back(static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [i](int p) { return p >= i; })));
    return Partition(std::move(d));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!out.empty()) out += ' ';
        out += std::to_string(parts_[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out.empty() ? "0" : out;
}

OrbitDatum richardson(Family family, int n, int k) {
    if (!is_classical(family)) fail(ErrorKind::UnsupportedFamily, "Richardson partitions are tabulated for B, C, D only");
    if ((family == Family::D && n < 4) || n < 2) fail(ErrorKind::IllegalRank, "illegal rank");
    if (k < 1 || k > n) fail(ErrorKind::InvalidArgument, "k out of range");
    OrbitDatum out;
    auto P = [](std::vector<std::pair<int, int>> pw) { return Partition::from_exponents(pw); };
    switch (family) {
        case Family::B:
            if (3 * k < 2 * n + 1) {
                out.partition = P({{3, k}, {1, 2 * n + 1 - 3 * k}});
                out.birational = true;
            } else if (k % 2 == 1) {
                out.partition = P({{3, 2 * n + 1 - 2 * k}, {2, 3 * k - 2 * n - 1}});
                out.birational = true;
            } else {
                out.partition = P({{3, 2 * n + 1 - 2 * k}, {2, 3 * k - 2 * n - 2}, {1, 2}});
            }
            break;
        case Family::C:
            if (3 * k <= 2 * n) {
                if (k % 2 == 0) {
                    out.partition = P({{3, k}, {1, 2 * n - 3 * k}});
                    out.birational = true;
                } else {
                    if (2 * n - 3 * k - 1 < 0) fail(ErrorKind::UnsupportedCase, "no Richardson partition for this (n, k)");
                    out.partition = P({{3, k - 1}, {2, 2}, {1, 2 * n - 3 * k - 1}});
                }
            } else {
                out.partition = P({{3, 2 * n - 2 * k}, {2, 3 * k - 2 * n}});
                out.birational = true;
            }
            break;
        case Family::D:
            if (k == n - 1) fail(ErrorKind::UnsupportedCase, "D with k = n-1 is conjugate to k = n; use k = n");
            if (3 * k <= 2 * n) {
                out.partition = P({{3, k}, {1, 2 * n - 3 * k}});
                out.birational = true;
            } else if (k % 2 == 1) {
                out.partition = P({{3, 2 * n - 2 * k}, {2, 3 * k - 2 * n - 1}, {1, 2}});
            } else {
                out.partition = P({{3, 2 * n - 2 * k}, {2, 3 * k - 2 * n}});
                out.birational = true;
            }
            out.very_even = std::all_of(out.partition.parts().begin(), out.partition.parts().end(),
                                        [](int p) { return p % 2 == 0; });
            break;
        default: break;
    }
    return out;
}

bool satisfies_parity(Family family, const Partition& p) {
    // B, D: even parts occur with even multiplicity. C: odd parts do.
    int bad_parity = family == Family::C ? 1 : 0;
    for (int part : p.parts())
        if (part % 2 == bad_parity && p.multiplicity(part) % 2 != 0) return false;
    return true;
}

long orbit_dimension(Family family, int n, const Partition& p) {
    if (!is_classical(family)) fail(ErrorKind::UnsupportedFamily, "orbit dimensions are classical only");
    const int ambient = family == Family::B ? 2 * n + 1 : 2 * n;
    if (p.size() != ambient) fail(ErrorKind::InvalidPartition, "partition of " + std::to_string(p.size()) + " for ambient " + std::to_string(ambient));
    if (!satisfies_parity(family, p)) fail(ErrorKind::InvalidPartition, "parity condition fails for " + p.to_string());
    long sq = 0;
    const Partition dual = p.dual();
    for (int q : dual.parts()) sq += static_cast<long>(q) * q;
    long odd = std::count_if(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 != 0; });
    long dim_g = family == Family::D ? 2L * n * n - n : 2L * n * n + n;
    // dim of centralizer: (sum q_i^2 - #odd)/2 for orthogonal, (sum q_i^2 + #odd)/2 for symplectic
    long cent = family == Family::C ? (sq + odd) / 2 : (sq - odd) / 2;
    return dim_g - cent;
}

bool is_even_parabolic(Family family, int rank, int k) {
    if (is_classical(family) || family == Family::A)
        fail(ErrorKind::UnsupportedFamily, "evenness table covers exceptional families only");
    if (family == Family::G) fail(ErrorKind::UnsupportedCase, "no evenness data tabulated for G2");
    if (k < 1 || k > rank) fail(ErrorKind::InvalidArgument, "k out of range");
    std::vector<int> even;
    if (family == Family::F) even = {1, 3, 4};
    if (family == Family::E && rank == 6) even = {3, 6};
    if (family == Family::E && rank == 7) even = {1, 2, 3, 4, 5, 6, 7};
    if (family == Family::E && rank == 8) even = {1, 2, 3, 4, 6, 8};
    return std::find(even.begin(), even.end(), k) != even.end();
}

}  // namespace gvm
