#pragma once

#include "gvm/rootsys.hpp"

#include <string>
#include <vector>

namespace gvm {

// Parameter sets of the classification: {0}, N, (1/2)N.
enum class TSet { Zero, Naturals, HalfNaturals };

const char* tset_name(TSet s);  // "{0}", "N", "1/2N"
TSet parse_tset(const std::string& s);
bool tset_contains(TSet s, const Rational& t);

struct HomVerdict {
    bool exists = false;
    TSet tset = TSet::Zero;
    std::vector<std::string> trace;
    friend bool operator==(const HomVerdict&, const HomVerdict&) = default;
};

// Parameter set of M[-t] -> M[t] for the maximal parabolic Theta^k, with
// the case that decides it. Type A throws UnsupportedFamily.
TSet hom_tset(Family family, int n, int k, std::vector<std::string>* trace = nullptr);

// Is M[-t] contained in M[t]? t >= 0.
HomVerdict exists_hom(Family family, int n, int k, const Rational& t);
// Is M[s] contained in M[t]?
HomVerdict exists_hom_pair(Family family, int n, int k, const Rational& s, const Rational& t);

struct SystemSpec {
    Family family;
    int rank;
};

struct Violation {
    Family family;
    int rank;
    int k;
    Rational t;
    std::string reason;
};

struct VerifyReport {
    std::size_t cases_checked = 0;   // (system, k, t) triples with a positive verdict tested against Jantzen
    std::size_t cases_skipped = 0;   // negative verdicts, nothing to test
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Default sweep: B, C up to max_rank, D from 4 up to max_rank, then the listed exceptionals.
std::vector<SystemSpec> default_systems(int max_rank, bool include_e8);

// For every positive verdict at t > 0, the module M[t] must be reducible.
// Work is split over `jobs` threads; the report does not depend on it.
VerifyReport verify_consistency(const std::vector<SystemSpec>& systems, const std::vector<Rational>& grid,
                                unsigned jobs = 1);

}  // namespace gvm
