// Command-line front end for the unitary valuation algebra engine.
//
//   uval basis --n 3 --degree 4
//   uval reduce --n 2 "s^2"
//   uval matrix --n 2 --k 1 --which Q --format json
//   uval kinematic --n 2 --phi 1
//   uval check --n-max 12
//   uval positivity --n-max 20 --format csv
//
// Exit status: 0 success, 1 usage or parse error, 2 identity-suite failure.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uval/algebra.hpp"
#include "uval/duality.hpp"
#include "uval/emit.hpp"
#include "uval/error.hpp"
#include "uval/scan.hpp"
#include "uval/suite.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kSuiteFailure = 2;

void print(const std::string& text) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the unitary and orthogonal valuation algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "plain";
    app.add_option("--format", format_name, "Output format: plain, json, latex (csv for positivity)")
        ->check(CLI::IsMember({"plain", "json", "latex", "csv"}));

    int n = 0;
    int k = 0;
    int degree = 0;
    int n_max = 12;
    int so_n = 0;
    std::optional<int> so_k;
    std::string poly_text;
    std::string poly_b;
    std::string which = "Q";
    std::string phi_text = "1";
    bool serial = false;
    bool corrupt = false;

    auto* basis_cmd = app.add_subcommand("basis", "Monomial basis of Val^U(n) in one degree");
    basis_cmd->add_option("--n", n, "Complex dimension")->required()->check(CLI::PositiveNumber);
    basis_cmd->add_option("--degree,-d", degree, "Degree")->required()->check(CLI::NonNegativeNumber);

    auto* reduce_cmd = app.add_subcommand("reduce", "Normal form of a polynomial in Val^U(n)");
    reduce_cmd->add_option("--n", n, "Complex dimension")->required()->check(CLI::PositiveNumber);
    reduce_cmd->add_option("poly,--poly", poly_text, "Polynomial in s, t, e.g. \"s^2 - 1/2*t^4\"")->required();

    auto* mul_cmd = app.add_subcommand("mul", "Product of two elements of Val^U(n)");
    mul_cmd->add_option("--n", n, "Complex dimension")->required()->check(CLI::PositiveNumber);
    mul_cmd->add_option("a", poly_text, "First factor")->required();
    mul_cmd->add_option("b", poly_b, "Second factor")->required();

    auto* matrix_cmd = app.add_subcommand("matrix", "Pairing, kinematic and induction matrices");
    matrix_cmd->add_option("--n", n, "Complex dimension")->required()->check(CLI::PositiveNumber);
    matrix_cmd->add_option("--k", k, "Block index")->required()->check(CLI::NonNegativeNumber);
    matrix_cmd->add_option("--which", which, "P, Q, A, R, Qtilde or companion")
        ->check(CLI::IsMember({"P", "Q", "A", "R", "Qtilde", "companion"}));

    auto* kin_cmd = app.add_subcommand("kinematic", "Kinematic tensor k(phi)");
    kin_cmd->add_option("--n", n, "Complex dimension of Val^U(n)")->check(CLI::PositiveNumber);
    kin_cmd->add_option("--so", so_n, "Use Val^SO(m) instead")->check(CLI::PositiveNumber);
    kin_cmd->add_option("--phi", phi_text, "Element phi (default 1)");

    auto* check_cmd = app.add_subcommand("check", "Run the identity suite");
    check_cmd->add_option("--n-max", n_max, "Largest n")->check(CLI::PositiveNumber);
    check_cmd->add_flag("--serial", serial, "Run single-threaded");
    // Test hook: run against a Val^U(2) with one wrong reduction entry.
    check_cmd->add_flag("--corrupt-table", corrupt)->group("");

    auto* pos_cmd = app.add_subcommand("positivity", "Positive definiteness of every Q^n_k");
    pos_cmd->add_option("--n-max", n_max, "Largest n")->check(CLI::PositiveNumber);
    pos_cmd->add_flag("--serial", serial, "Run single-threaded");

    auto* son_cmd = app.add_subcommand("son", "Kinematic formulas of Val^SO(n)");
    son_cmd->add_option("--n", so_n, "Real dimension")->required()->check(CLI::PositiveNumber);
    son_cmd->add_option("--k", so_k, "Degree of t^k (all k when omitted)")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        const uval::Format format = uval::parse_format(format_name);
        if (*basis_cmd) {
            print(uval::format_basis(uval::unitary_algebra(n)->basis(degree), format));
        } else if (*reduce_cmd) {
            const auto p = uval::GradedPoly::parse(poly_text);
            print(uval::format_poly(uval::unitary_algebra(n)->normal_form(p), format));
        } else if (*mul_cmd) {
            const auto alg = uval::unitary_algebra(n);
            const auto product = uval::multiply(alg->element(uval::GradedPoly::parse(poly_text)),
                                                alg->element(uval::GradedPoly::parse(poly_b)));
            print(uval::format_poly(product.poly(), format));
        } else if (*matrix_cmd) {
            if (which == "companion") {
                const auto data = uval::companion(n, k);
                if (format == uval::Format::kJson)
                    print(uval::to_json(data).dump());
                else
                    print(uval::format_matrix(data.companion, format));
            } else {
                uval::ExactMatrix m;
                if (which == "P") m = uval::pairing_matrix(n, k).matrix;
                else if (which == "Q") m = uval::q_matrix(n, k);
                else if (which == "A") m = uval::a_matrix(n, k);
                else if (which == "R") m = uval::r_matrix(n, k);
                else m = uval::qtilde_check(n, k);
                print(uval::format_matrix(m, format));
            }
        } else if (*kin_cmd) {
            if ((so_n > 0) == (n > 0)) {
                std::cerr << "kinematic: give exactly one of --n or --so\n";
                return kUsageError;
            }
            if (so_n > 0) {
                const auto alg = uval::so_algebra(so_n);
                const auto phi = alg->element(uval::GradedPoly::parse(phi_text));
                print(uval::format_tensor(uval::multiply_left(uval::kinematic_unit_from_duality(alg), phi.poly()), format));
            } else {
                const auto phi = uval::unitary_algebra(n)->element(uval::GradedPoly::parse(phi_text));
                print(uval::format_tensor(uval::kinematic_of(n, phi), format));
            }
        } else if (*check_cmd) {
            if (corrupt)
                uval::install_unitary_algebra(uval::unitary_algebra(2)->with_reduction_override(
                    {1, 2}, uval::GradedPoly::parse("1/2*t^4")));
            const auto start = std::chrono::steady_clock::now();
            const auto report = uval::run_suite({n_max, !serial});
            const auto seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            print(format == uval::Format::kJson ? uval::to_json(report).dump(2) : uval::to_plain(report));
            std::cerr << "suite finished in " << seconds << " s\n";
            return report.all_passed() ? 0 : kSuiteFailure;
        } else if (*pos_cmd) {
            const auto rows = serial ? uval::positivity_scan_serial(n_max) : uval::positivity_scan(n_max);
            if (format == uval::Format::kJson) print(uval::to_json(rows).dump(2));
            else if (format == uval::Format::kCsv) print(uval::to_csv(rows));
            else print(uval::to_plain(rows));
        } else if (*son_cmd) {
            int lo = so_k.value_or(0);
            int hi = so_k.value_or(so_n);
            for (int kk = lo; kk <= hi; ++kk) {
                if (!so_k && format == uval::Format::kPlain) std::cout << "k = " << kk << '\n';
                print(uval::format_tensor(uval::so_kinematic(so_n, kk), format));
            }
        }
    } catch (const uval::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const uval::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return 0;
}
