#include "gvm/classify.hpp"

#include "gvm/errors.hpp"
#include "gvm/jantzen.hpp"
#include "gvm/parabolic.hpp"

#include <atomic>
#include <thread>

namespace gvm {

const char* tset_name(TSet s) {
    switch (s) {
        case TSet::Zero: return "{0}";
        case TSet::Naturals: return "N";
        case TSet::HalfNaturals: return "1/2N";
    }
    return "{0}";
}

TSet parse_tset(const std::string& s) {
    if (s == "{0}") return TSet::Zero;
    if (s == "N") return TSet::Naturals;
    if (s == "1/2N") return TSet::HalfNaturals;
    fail(ErrorKind::InvalidArgument, "unknown parameter set '" + s + "'");
}

bool tset_contains(TSet s, const Rational& t) {
    switch (s) {
        case TSet::Zero: return t == 0;
        case TSet::Naturals: return is_natural(t);
        case TSet::HalfNaturals: return is_half_natural(t);
    }
    return false;
}

namespace {

std::string head(Family f, int n, int k) {
    return std::string(1, family_letter(f)) + std::to_string(n) + " k=" + std::to_string(k) + ": ";
}

void note(std::vector<std::string>* trace, std::string s) {
    if (trace) trace->push_back(std::move(s));
}

TSet exceptional_tset(Family f, int n, int k, std::vector<std::string>* trace) {
    const std::string h = head(f, n, k);
    auto pick = [&](TSet s, const std::string& why) {
        note(trace, h + why);
        return s;
    };
    if (f == Family::G) return pick(TSet::Naturals, "G2, either maximal parabolic: t in N");
    if (f == Family::F) {
        if (k == 1) return pick(TSet::HalfNaturals, "F4, k = 1: t in 1/2N");
        // k = 4: M[1/2] and M[3/2] are irreducible; integral system C4 at half-integral t
        return pick(TSet::Naturals, "F4, k in {2,3,4}: M[1/2] irreducible, t in N");
    }
    if (n == 6) {
        if (k == 3 || k == 6) return pick(TSet::Naturals, "E6, node fixed by the diagram symmetry: t in N");
        if (k == 4 || k == 5) note(trace, h + "E6 k=" + std::to_string(k) + " is the mirror of k=" + std::to_string(6 - k));
        return pick(TSet::Zero, "E6, node moved by the diagram symmetry: t = 0 only");
    }
    if (n == 7) {
        if (k == 2 || k == 4) return pick(TSet::HalfNaturals, "E7, k in {2,4}: t in 1/2N");
        return pick(TSet::Naturals, "E7, k in {1,3,5,6,7}: t in N");
    }
    if (k == 3 || k == 5 || k == 7) return pick(TSet::HalfNaturals, "E8, k in {3,5,7}: t in 1/2N");
    return pick(TSet::Naturals, "E8, k in {1,2,4,6,8}: t in N");
}

}  // namespace

TSet hom_tset(Family f, int n, int k, std::vector<std::string>* trace) {
    if (f == Family::A) fail(ErrorKind::UnsupportedFamily, "type A unsupported (Boe 1985)");
    // validates the rank
    (void)shared_system(f, n);
    if (k < 1 || k > n) fail(ErrorKind::InvalidArgument, "k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
    if (!is_classical(f)) return exceptional_tset(f, n, k, trace);

    const std::string h = head(f, n, k);
    auto pick = [&](TSet s, const std::string& why) {
        note(trace, h + why);
        return s;
    };
    if (f == Family::B) {
        if (3 * k < 2 * n + 1) return pick(TSet::Naturals, "3k < 2n+1: t in N");
        if (k % 2 == 1 && k != n) return pick(TSet::HalfNaturals, "3k >= 2n+1, k odd, k < n: t in 1/2N");
        if (k == n && n % 2 == 1) return pick(TSet::Naturals, "3k >= 2n+1, k = n odd: t in N");
        return pick(TSet::Zero, "3k >= 2n+1, k even: t = 0 only");
    }
    if (f == Family::C) {
        if (3 * k <= 2 * n) {
            if (k % 2 == 1) return pick(TSet::Zero, "3k <= 2n, k odd: t = 0 only");
            return pick(TSet::HalfNaturals, "3k <= 2n, k even: t in 1/2N");
        }
        return pick(TSet::Naturals, "3k > 2n: t in N");
    }
    if (k == n - 1) {
        note(trace, h + "k = n-1 is the diagram-symmetric image of k = n");
        k = n;
    }
    const std::string hd = head(f, n, k);
    auto pickd = [&](TSet s, const std::string& why) {
        note(trace, hd + why);
        return s;
    };
    if (3 * k < 2 * n) return pickd(TSet::Naturals, "3k < 2n: t in N");
    if (k % 2 == 1) return pickd(TSet::Zero, "3k >= 2n, k odd: t = 0 only");
    if (k != n) return pickd(TSet::HalfNaturals, "3k >= 2n, k even, k < n: t in 1/2N");
    return pickd(TSet::Naturals, "k = n even: t in N");
}

HomVerdict exists_hom(Family family, int n, int k, const Rational& t) {
    if (t < 0) fail(ErrorKind::InvalidArgument, "t must be non-negative; use exists_hom_pair for signed parameters");
    HomVerdict v;
    v.tset = hom_tset(family, n, k, &v.trace);
    if (t == 0) {
        v.exists = true;
        v.trace.push_back("t = 0: identity");
        return v;
    }
    v.exists = tset_contains(v.tset, t);
    return v;
}

HomVerdict exists_hom_pair(Family family, int n, int k, const Rational& s, const Rational& t) {
    HomVerdict v;
    v.tset = hom_tset(family, n, k, &v.trace);
    if (s == t) {
        v.exists = true;
        v.trace.push_back("s = t: identity");
    } else if (s == -t && t > 0) {
        v.exists = tset_contains(v.tset, t);
    } else {
        v.exists = false;
        v.trace.push_back("distinct parameters must satisfy s = -t with t > 0");
    }
    return v;
}

std::vector<SystemSpec> default_systems(int max_rank, bool include_e8) {
    std::vector<SystemSpec> out;
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
    out.push_back({Family::G, 2});
    out.push_back({Family::F, 4});
    out.push_back({Family::E, 6});
    out.push_back({Family::E, 7});
    if (include_e8) out.push_back({Family::E, 8});
    return out;
}

VerifyReport verify_consistency(const std::vector<SystemSpec>& systems, const std::vector<Rational>& grid,
                                unsigned jobs) {
    struct Task {
        SystemSpec sys;
        int k;
        Rational t;
    };
    struct Outcome {
        bool checked = false;
        bool violated = false;
        std::string reason;
    };
    std::vector<Task> tasks;
    for (const auto& sys : systems) {
        auto rs = shared_system(sys.family, sys.rank);
        for (int k = 1; k <= rs->rank(); ++k)
            for (const auto& t : grid) tasks.push_back({sys, k, t});
    }
    std::vector<Outcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& task = tasks[i];
            Outcome& o = outcomes[i];
            if (task.t <= 0) continue;
            HomVerdict v = exists_hom(task.sys.family, task.sys.rank, task.k, task.t);
            if (!v.exists) continue;
            auto pd = maximal_parabolic(task.sys.family, task.sys.rank, task.k);
            Weight lam = lambda_of_t(pd, task.t);
            if (!in_theta_dominant_regular(pd, lam)) continue;
            o.checked = true;
            if (is_irreducible(pd, lam)) {
                o.violated = true;
                o.reason = "inclusion claimed (" + std::string(tset_name(v.tset)) + ") but the Jantzen sum vanishes";
            }
        }
    };
    unsigned n = jobs == 0 ? 1 : jobs;
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < n; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    VerifyReport report;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (outcomes[i].checked) ++report.cases_checked;
        else ++report.cases_skipped;
        if (outcomes[i].violated)
            report.violations.push_back(
                {tasks[i].sys.family, tasks[i].sys.rank, tasks[i].k, tasks[i].t, outcomes[i].reason});
    }
    return report;
}

}  // namespace gvm
