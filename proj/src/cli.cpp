#include "gvm/cli.hpp"

#include "gvm/errors.hpp"
#include "gvm/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace gvm {

namespace {

struct UsageError {
    std::string flag;
    std::string message;
};

Rational rational_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const Error& e) {
        throw UsageError{flag, e.what()};
    }
}

std::vector<Rational> rational_list_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_rational_list(text);
    } catch (const Error& e) {
        throw UsageError{flag, e.what()};
    }
}

std::vector<int> int_list_flag(const std::string& flag, const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError{flag, "cannot parse '" + tok + "' as an integer"};
        }
    }
    return out;
}

struct SystemArgs {
    std::string family;
    int rank = 0;
};

void add_system_flags(CLI::App* sub, SystemArgs& a) {
    sub->add_option("--family", a.family, "B, C, D, E, F, G (or E6, F4, ...)")->required();
    sub->add_option("--rank", a.rank, "rank; implied for E6, E7, E8, F4, G2");
}

std::pair<Family, int> resolve(const SystemArgs& a) {
    int implied = 0;
    Family f;
    try {
        f = parse_family(a.family, &implied);
    } catch (const Error& e) {
        throw UsageError{"--family", e.what()};
    }
    if (implied != 0 && a.rank != 0 && implied != a.rank)
        throw UsageError{"--rank", "conflicts with the rank in --family " + a.family};
    int rank = implied != 0 ? implied : a.rank;
    if (rank == 0) {
        if (f == Family::F) rank = 4;
        else if (f == Family::G) rank = 2;
        else throw UsageError{"--rank", "required for family " + a.family};
    }
    return {f, rank};
}

Json system_json(Family f, int n) { return Json{{"family", to_json(f)}, {"rank", n}}; }

Json cartan_json(const RootSystem& rs) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < rs.cartan().rows(); ++i) {
        std::vector<long> r;
        for (std::size_t j = 0; j < rs.cartan().cols(); ++j) r.push_back(rs.cartan()(i, j));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Scalar generalized Verma module inclusions for maximal parabolics", "gvm"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", out_path, "write the report to this file");

    SystemArgs sys;
    int k = 0;
    std::string t_text, s_text, lambda_text, delta_text = "1/4", kappa_text, grid_text = "1/2,1,3/2,2", families_text;
    int parabolic = 0, max_rank = 6;
    unsigned jobs = 1;
    bool commutation = false, with_e8 = false;

    auto* classify = app.add_subcommand("classify", "is M[-t] contained in M[t]?");
    add_system_flags(classify, sys);
    classify->add_option("--k", k, "removed node")->required();
    classify->add_option("--t", t_text, "parameter, p/q")->required();
    classify->add_option("--s", s_text, "source parameter; asks M[s] in M[t]");

    auto* jantzen = app.add_subcommand("jantzen", "Jantzen sum of M[t] or of M(lambda)");
    add_system_flags(jantzen, sys);
    jantzen->add_option("--k", k, "removed node")->required();
    auto* t_opt = jantzen->add_option("--t", t_text, "lambda = rho_Theta + t omega_k");
    auto* l_opt = jantzen->add_option("--lambda", lambda_text, "lambda in e-coordinates, comma separated");
    t_opt->excludes(l_opt);

    auto* rootdata = app.add_subcommand("rootdata", "root data, parabolic constants, commutation table");
    add_system_flags(rootdata, sys);
    rootdata->add_option("--parabolic", parabolic, "removed node k");
    rootdata->add_flag("--commutation", commutation, "whether w_Theta commutes with w_0");

    auto* orbits = app.add_subcommand("orbits", "Richardson orbits of the maximal parabolics");
    add_system_flags(orbits, sys);
    orbits->add_option("--k", k, "only this node");

    auto* cells = app.add_subcommand("cells", "RS shapes and symbols of the witness weights");
    add_system_flags(cells, sys);
    cells->add_option("--k", k, "removed node")->required();
    cells->add_option("--delta", delta_text, "small perturbation, p/q");

    auto* elementary = app.add_subcommand("elementary", "elementary inclusions for a composition in type C");
    add_system_flags(elementary, sys);
    elementary->add_option("--kappa", kappa_text, "block sizes, comma separated")->required();
    elementary->add_option("--t", t_text, "one parameter per block, comma separated")->required();

    auto* verify = app.add_subcommand("verify", "check every positive verdict against the Jantzen criterion");
    verify->add_option("--max-rank", max_rank, "largest classical rank");
    verify->add_option("--grid", grid_text, "parameters t, comma separated");
    verify->add_option("--families", families_text, "e.g. B,C,D,G2,F4,E6,E7,E8 (default: all but E8)");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_flag("--e8", with_e8, "include E8 in the default sweep");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run 'gvm --help' for usage\n";
        return kExitUsage;
    }

    Json result;
    int code = kExitOk;
    try {
        if (*classify) {
            auto [f, n] = resolve(sys);
            const Rational t = rational_flag("--t", t_text);
            HomVerdict v;
            result = system_json(f, n);
            result["k"] = k;
            result["t"] = to_json(t);
            if (!s_text.empty()) {
                const Rational s = rational_flag("--s", s_text);
                v = exists_hom_pair(f, n, k, s, t);
                result["s"] = to_json(s);
            } else {
                if (t < 0) throw UsageError{"--t", "must be non-negative (use --s for signed pairs)"};
                v = exists_hom(f, n, k, t);
            }
            result.update(to_json(v));
        } else if (*jantzen) {
            auto [f, n] = resolve(sys);
            auto pd = maximal_parabolic(f, n, k);
            Weight lambda;
            result = system_json(f, n);
            result["k"] = k;
            if (!t_text.empty()) {
                const Rational t = rational_flag("--t", t_text);
                lambda = lambda_of_t(pd, t);
                result["t"] = to_json(t);
                result["integrality"] = integrality_name(integrality_class(pd, t));
            } else if (!lambda_text.empty()) {
                auto e = rational_list_flag("--lambda", lambda_text);
                if (static_cast<int>(e.size()) != n)
                    throw UsageError{"--lambda", "needs " + std::to_string(n) + " coordinates"};
                lambda = ECoordinates(*pd.rs).from_e(e);
            } else {
                throw UsageError{"--t", "one of --t or --lambda is required"};
            }
            FormalSum sum = jantzen_sum(pd, lambda);
            result["lambda"] = to_json(lambda);
            result["sum"] = to_json(sum);
            result["irreducible"] = sum.empty();
        } else if (*rootdata) {
            auto [f, n] = resolve(sys);
            auto rs = shared_system(f, n);
            result = system_json(f, n);
            result["label"] = rs->label();
            result["cartan"] = cartan_json(*rs);
            result["num_positive"] = rs->num_positive();
            result["rho"] = to_json(rs->rho());
            if (parabolic != 0) {
                auto pd = maximal_parabolic(rs, parabolic);
                Json pj = rootdata_json(pd);
                if (commutation) pj["commutes_with_w0"] = commutes_with_w0(*rs, pd.theta);
                result["parabolic"] = pj;
            } else if (commutation) {
                Json table = Json::array();
                for (int j = 1; j <= n; ++j) {
                    NodeSet theta;
                    for (int i = 1; i <= n; ++i)
                        if (i != j) theta.push_back(i);
                    table.push_back(Json{{"k", j}, {"commutes", commutes_with_w0(*rs, theta)}});
                }
                result["commutation"] = table;
            }
        } else if (*orbits) {
            auto [f, n] = resolve(sys);
            auto rs = shared_system(f, n);
            result = system_json(f, n);
            Json rows = Json::array();
            for (int j = 1; j <= n; ++j) {
                if (k != 0 && j != k) continue;
                Json row{{"k", j}, {"dim_nilradical", dim_nilradical(maximal_parabolic(rs, j))}};
                try {
                    if (is_classical(f)) {
                        OrbitDatum o = richardson(f, n, j);
                        row.update(to_json(o));
                        row["orbit_dimension"] = orbit_dimension(f, n, o.partition);
                    } else {
                        row["even_parabolic"] = is_even_parabolic(f, n, j);
                    }
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::UnsupportedCase) throw;
                    row["unsupported"] = e.what();
                }
                rows.push_back(row);
            }
            if (k != 0 && rows.empty()) throw UsageError{"--k", "outside 1.." + std::to_string(n)};
            result["orbits"] = rows;
        } else if (*cells) {
            auto [f, n] = resolve(sys);
            auto pd = maximal_parabolic(f, n, k);
            const Rational delta = rational_flag("--delta", delta_text);
            WitnessWeights w = witness_weights(pd);
            CellReport r = cell_report(pd, delta);
            result = system_json(f, n);
            result["k"] = k;
            result["delta"] = to_json(delta);
            result["witness_weights"] = Json{{"lambda1", to_json(w.lambda1)},
                                             {"lambda2", to_json(w.lambda2)},
                                             {"lambda3", to_json(w.lambda3)},
                                             {"lambda4", to_json(w.lambda4)}};
            result["report"] = to_json(r);
            result["singleton_family"] = family_is_singleton(f, r.symbol);
        } else if (*elementary) {
            auto [f, n] = resolve(sys);
            if (f != Family::C) fail(ErrorKind::UnsupportedFamily, "compositions are set up for type C only");
            auto kappa = int_list_flag("--kappa", kappa_text);
            auto t = rational_list_flag("--t", t_text);
            if (t.size() != kappa.size()) throw UsageError{"--t", "needs one entry per block of --kappa"};
            auto list = composition_inclusions(n, kappa, t);
            result = system_json(f, n);
            result["kappa"] = kappa;
            result["t"] = Json::array();
            for (const auto& x : t) result["t"].push_back(to_json(x));
            result["theta"] = to_json(composition_theta(n, kappa));
            Json items = Json::array();
            for (const auto& c : list) items.push_back(to_json(c));
            result["inclusions"] = items;
        } else if (*verify) {
            if (max_rank < 2) throw UsageError{"--max-rank", "must be at least 2"};
            auto grid = rational_list_flag("--grid", grid_text);
            std::vector<SystemSpec> systems;
            if (families_text.empty()) {
                systems = default_systems(max_rank, with_e8);
            } else {
                std::stringstream ss(families_text);
                std::string tok;
                while (std::getline(ss, tok, ',')) {
                    int implied = 0;
                    Family f;
                    try {
                        f = parse_family(tok, &implied);
                    } catch (const Error& e) {
                        throw UsageError{"--families", e.what()};
                    }
                    if (f == Family::A) throw UsageError{"--families", "type A unsupported (Boe 1985)"};
                    if (implied != 0) {
                        systems.push_back({f, implied});
                    } else if (f == Family::F || f == Family::G) {
                        systems.push_back({f, f == Family::F ? 4 : 2});
                    } else if (f == Family::E) {
                        for (int r : {6, 7}) systems.push_back({f, r});
                        if (with_e8) systems.push_back({f, 8});
                    } else {
                        for (int r = f == Family::D ? 4 : 2; r <= max_rank; ++r) systems.push_back({f, r});
                    }
                }
            }
            VerifyReport report = verify_consistency(systems, grid, jobs);
            result = to_json(report);
            Json labels = Json::array();
            for (const auto& s : systems) labels.push_back(std::string(1, family_letter(s.family)) + std::to_string(s.rank));
            result["systems"] = labels;
            result["grid"] = Json::array();
            for (const auto& x : grid) result["grid"].push_back(to_json(x));
            if (!report.ok()) code = kExitViolations;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.flag << ": " << e.message << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string text = format == "text" ? render_text(result) : dump(result);
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "error: --out: cannot open '" << out_path << "'\n";
            return kExitUsage;
        }
        f << text;
    } else {
        out << text;
    }
    return code;
}

}  // namespace gvm
