#include <doctest.h>

#include "uval/algebra.hpp"
#include "uval/duality.hpp"
#include "uval/emit.hpp"
#include "uval/scan.hpp"
#include "uval/suite.hpp"

using uval::ExactMatrix;
using uval::GradedPoly;
using uval::Rational;

TEST_CASE("suite passes up to n = 4, serial and parallel reports agree") {
    const auto parallel = uval::run_suite({4, true});
    const auto serial = uval::run_suite({4, false});
    REQUIRE(parallel.all_passed());
    REQUIRE(parallel.entries.size() == serial.entries.size());
    for (std::size_t i = 0; i < parallel.entries.size(); ++i) {
        const auto& a = parallel.entries[i];
        const auto& b = serial.entries[i];
        REQUIRE(a.name == b.name);
        REQUIRE(a.cases == b.cases);
        REQUIRE(a.passed == b.passed);
        REQUIRE(a.cases > 0);
        REQUIRE(!a.anchor.empty());
    }
    REQUIRE(uval::to_plain(parallel) == uval::to_plain(serial));
}

TEST_CASE("corrupted reduction table yields counterexamples") {
    uval::clear_algebra_cache();
    const auto bad = uval::unitary_algebra(2)->with_reduction_override({1, 2}, GradedPoly::parse("1/2*t^4"));
    uval::install_unitary_algebra(bad);
    const auto report = uval::run_suite({4, true});
    uval::clear_algebra_cache();

    REQUIRE_FALSE(report.all_passed());
    for (const auto& e : report.entries) {
        if (e.passed) continue;
        REQUIRE(!e.counterexample.empty());
    }
    bool names_n2 = false;
    for (const auto& e : report.entries)
        if (!e.passed && e.counterexample.find("n=2") != std::string::npos) names_n2 = true;
    REQUIRE(names_n2);
    REQUIRE(uval::run_suite({4, true}).all_passed());
}

TEST_CASE("JSON emitters") {
    REQUIRE(uval::to_json(Rational(-1, 2)) == "-1/2");
    const ExactMatrix q = uval::q_matrix(2, 1);
    REQUIRE(uval::to_json(q).dump() == R"([["3","-6"],["-6","18"]])");
    REQUIRE(uval::matrix_from_json(uval::to_json(q)) == q);
    const ExactMatrix p = uval::pairing_matrix(3, 1).matrix;
    REQUIRE(uval::matrix_from_json(nlohmann::json::parse(uval::to_json(p).dump())) == p);
    REQUIRE(uval::to_json(uval::companion(3, 1)).dump() == R"({"a":["1/2","-2"],"k":1,"n":3})");
    CHECK_THROWS(uval::matrix_from_json(nlohmann::json::parse(R"([["1"],["1","2"]])")));

    const auto k = uval::kinematic_unit(2);
    const auto j = uval::to_json(k);
    REQUIRE(j["left"]["n"] == 2);
    bool found = false;
    for (const auto& block : j["blocks"])
        if (block["bidegree"] == nlohmann::json::array({2, 2})) {
            REQUIRE(uval::matrix_from_json(block["matrix"]) == q);
            REQUIRE(block["row_basis"] == nlohmann::json::array({"t^2", "s"}));
            found = true;
        }
    REQUIRE(found);

    const auto poly = GradedPoly::parse(uval::format_poly(GradedPoly::parse("s - 1/2*t^2"), uval::Format::kPlain));
    REQUIRE(poly == GradedPoly::parse("s - 1/2*t^2"));
    REQUIRE(GradedPoly::parse(nlohmann::json::parse(uval::format_poly(poly, uval::Format::kJson)).get<std::string>()) ==
            poly);
}

TEST_CASE("LaTeX and CSV emitters") {
    const std::string tex = uval::format_matrix(uval::pairing_matrix(3, 1).matrix, uval::Format::kLatex);
    REQUIRE(tex.find("\\begin{bmatrix}") != std::string::npos);
    REQUIRE(tex.find("1 & \\frac{3}{10}") != std::string::npos);
    REQUIRE(tex.find("\\frac{3}{10} & \\frac{1}{10}") != std::string::npos);
    REQUIRE(uval::to_latex(uval::kinematic_unit(1)).find("\\otimes") != std::string::npos);

    REQUIRE(uval::to_csv(uval::positivity_scan(1)) == "n,k,dim,positive_definite\n1,0,1,true\n");
    REQUIRE(uval::format_basis(uval::unitary_algebra(3)->basis(4), uval::Format::kPlain) == "t^4, s*t^2");
    REQUIRE(uval::format_basis(uval::unitary_algebra(4)->basis(2), uval::Format::kPlain) == "t^2, s");
    REQUIRE(uval::format_basis(uval::unitary_algebra(2)->basis(5), uval::Format::kPlain).empty());
    CHECK_THROWS_AS(uval::parse_format("xml"), std::invalid_argument);
}
