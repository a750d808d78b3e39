#include "gvm/errors.hpp"
#include "gvm/serialize.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gvm;
using oracle::q;

namespace {

// parse(print(x)) re-serializes to the same bytes
template <class T, class From>
void round_trip(const T& x, From from) {
    Json j = to_json(x);
    std::string text = dump(j);
    Json back = to_json(from(Json::parse(text)));
    CHECK(dump(back) == text);
}

// every leaf value of the text form occurs in the JSON, and nothing else is printed
void check_projection(const Json& j) {
    auto leaves = flatten(j);
    std::string text = render_text(j);
    std::size_t lines = 0;
    for (char ch : text) lines += ch == '\n';
    CHECK(lines == leaves.size());
    for (const auto& [path, value] : leaves) CHECK(text.find(path + ": " + value + "\n") != std::string::npos);
}

}  // namespace

TEST_CASE("rationals and weights") {
    CHECK(to_json(q(6, 4)) == Json("3/2"));
    CHECK(to_json(Rational(-2)) == Json("-2"));
    CHECK(rational_from_json(Json("-4/6")) == q(-2, 3));
    CHECK(rational_from_json(Json(3)) == 3);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), Error);
    Weight w(std::vector<Rational>{q(1, 2), Rational(0), q(-7, 3)});
    CHECK(weight_from_json(to_json(w)) == w);
    CHECK(family_from_json(to_json(Family::E)) == Family::E);
}

TEST_CASE("round trips of the result types") {
    for (auto [f, n, k] : std::vector<std::tuple<Family, int, int>>{{Family::B, 4, 1}, {Family::C, 3, 2}, {Family::D, 5, 5}, {Family::F, 4, 4}})
        for (Rational t : {Rational(0), q(1, 2), Rational(2)}) round_trip(exists_hom(f, n, k, t), hom_verdict_from_json);

    auto pd = maximal_parabolic(Family::C, 5, 3);
    auto w = witness_weights(pd);
    round_trip(jantzen_sum(pd, w.lambda3), formal_sum_from_json);
    round_trip(jantzen_sum(maximal_parabolic(Family::B, 4, 2), lambda_of_t(maximal_parabolic(Family::B, 4, 2), 1)), formal_sum_from_json);
    round_trip(FormalSum{}, formal_sum_from_json);

    round_trip(richardson(Family::D, 4, 4), orbit_datum_from_json);
    round_trip(richardson(Family::C, 5, 3).partition, partition_from_json);
    auto cr = cell_report(pd, q(1, 4));
    round_trip(cr, cell_report_from_json);
    round_trip(cr.symbol, symbol_from_json);

    for (const auto& ci : composition_inclusions(6, {2, 2}, {q(3, 2), Rational(1)})) {
        round_trip(ci, composition_inclusion_from_json);
        round_trip(ci.verdict, elementary_verdict_from_json);
    }

    VerifyReport r;
    r.cases_checked = 12;
    r.cases_skipped = 3;
    r.violations.push_back({Family::G, 2, 1, q(1, 2), "irreducible"});
    round_trip(r, verify_report_from_json);
    round_trip(VerifyReport{}, verify_report_from_json);
}

TEST_CASE("round trips on random verdicts") {
    std::mt19937 gen(7);
    for (int i = 0; i < 200; ++i) {
        int n = 2 + static_cast<int>(gen() % 7);
        Family f = std::array<Family, 3>{Family::B, Family::C, Family::D}[gen() % 3];
        if (f == Family::D && n < 4) n = 4;
        int k = 1 + static_cast<int>(gen() % static_cast<unsigned>(n));
        Rational t = q(static_cast<long>(gen() % 12), 1 + static_cast<long>(gen() % 3));
        auto v = exists_hom(f, n, k, t);
        round_trip(v, hom_verdict_from_json);
        CHECK(hom_verdict_from_json(to_json(v)) == v);
    }
}

TEST_CASE("dumps are key-sorted and stable") {
    auto v = exists_hom(Family::B, 4, 2, 1);
    std::string a = dump(to_json(v)), b = dump(to_json(v));
    CHECK(a == b);
    CHECK(a.find("\"exists\"") < a.find("\"trace\""));
    CHECK(a.find("\"trace\"") < a.find("\"tset\""));
    CHECK(dump(rootdata_json(maximal_parabolic(Family::E, 6, 2))) == dump(rootdata_json(maximal_parabolic(Family::E, 6, 2))));
}

TEST_CASE("flatten and text projection") {
    Json j = {{"b", {{"x", "1/2"}, {"y", Json::array({1, 2, 3})}}}, {"a", true}, {"c", Json::array({Json{{"z", "s"}}})}};
    auto leaves = flatten(j);
    REQUIRE(leaves.size() == 4);
    CHECK(leaves[0] == std::pair<std::string, std::string>{"a", "true"});
    CHECK(leaves[1] == std::pair<std::string, std::string>{"b.x", "1/2"});
    CHECK(leaves[2] == std::pair<std::string, std::string>{"b.y", "[1 2 3]"});
    CHECK(leaves[3] == std::pair<std::string, std::string>{"c[0].z", "s"});
    check_projection(j);
    check_projection(to_json(exists_hom(Family::C, 3, 2, q(1, 2))));
    check_projection(to_json(cell_report(maximal_parabolic(Family::B, 5, 4), q(1, 4))));
    check_projection(rootdata_json(maximal_parabolic(Family::F, 4, 2)));
}
