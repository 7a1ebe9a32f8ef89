#include "uval/suite.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "uval/algebra.hpp"
#include "uval/duality.hpp"
#include "uval/parallel.hpp"
#include "uval/unipoly.hpp"

namespace uval {

std::size_t SuiteReport::passed() const {
    std::size_t p = 0;
    for (const auto& e : entries) p += e.passed ? 1 : 0;
    return p;
}

std::size_t SuiteReport::failed() const { return entries.size() - passed(); }

namespace {

using Outcome = std::optional<std::string>;  // nullopt: case passed
using CaseFn = std::function<Outcome(int, int)>;

struct Family {
    std::string name;
    std::string anchor;
    std::string range;
    std::vector<std::pair<int, int>> params;
    CaseFn run;
};

std::string label(int n, int k) { return "n=" + std::to_string(n) + ", k=" + std::to_string(k); }
std::string label_n(int n) { return "n=" + std::to_string(n); }

Outcome fail_if(bool ok, std::string detail) { return ok ? std::nullopt : Outcome(std::move(detail)); }

std::vector<std::pair<int, int>> range_k(int from, int to) {
    std::vector<std::pair<int, int>> out;
    for (int k = from; k <= to; ++k) out.emplace_back(0, k);
    return out;
}

std::vector<std::pair<int, int>> range_n(int from, int to) {
    std::vector<std::pair<int, int>> out;
    for (int n = from; n <= to; ++n) out.emplace_back(n, 0);
    return out;
}

std::vector<std::pair<int, int>> nk_where(int n_max, const std::function<bool(int, int)>& keep) {
    std::vector<std::pair<int, int>> out;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 0; k <= 2 * n; ++k)
            if (keep(n, k)) out.emplace_back(n, k);
    return out;
}

std::string matrix_text(const ExactMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r ? ", [" : "[";
        for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + m(r, c).to_string();
        out += "]";
    }
    return out + "]";
}

std::vector<Family> families(int n_max) {
    std::vector<Family> fs;

    fs.push_back({"f-closed-form", "f_k = [x^k] log(1+s+t) = (-1)^{k+1} sum_i (-1)^i C(k-i,i)/(k-i) s^i t^{k-2i}",
                  "1 <= k <= 30", range_k(1, 30), [](int, int k) -> Outcome {
                      const GradedPoly series = log_series_f(30)[static_cast<std::size_t>(k - 1)];
                      const GradedPoly first = f_closed_form(k, ClosedFormVariant::kOverKMinusI);
                      const GradedPoly second = f_closed_form(k, ClosedFormVariant::kOverKMinus2I);
                      if (first != series) return "k=" + std::to_string(k) + ": closed form " + first.to_string() +
                                                  " vs series " + series.to_string();
                      return fail_if(second == series, "k=" + std::to_string(k) + ": second closed form " +
                                                           second.to_string() + " vs series " + series.to_string());
                  }});

    fs.push_back({"f-low-degree", "f_1 = t, f_2 = s - t^2/2, f_3 = -st + t^3/3, f_4 = -s^2/2 + st^2 - t^4/4",
                  "1 <= k <= 4", range_k(1, 4), [](int, int k) -> Outcome {
                      static const char* expected[] = {"t", "s - 1/2*t^2", "-s*t + 1/3*t^3",
                                                       "-1/2*s^2 + s*t^2 - 1/4*t^4"};
                      const GradedPoly got = log_series_f(4)[static_cast<std::size_t>(k - 1)];
                      return fail_if(got == GradedPoly::parse(expected[k - 1]),
                                     "k=" + std::to_string(k) + ": " + got.to_string());
                  }});

    fs.push_back({"f-recursion", "k s f_k + (k+1) t f_{k+1} + (k+2) f_{k+2} = 0", "1 <= k <= 28", range_k(1, 28),
                  [](int, int k) { return fail_if(check_f_recursion(k), "k=" + std::to_string(k)); }});

    fs.push_back({"difference-operator", "Delta^{k+1}(z(z-1)...(z-k+1)) = 0", "1 <= k <= 15", range_k(1, 15),
                  [](int, int k) { return fail_if(difference_identity_check(k), "k=" + std::to_string(k)); }});

    fs.push_back({"difference-reduction",
                  "sum_i (-1)^i C(k+1,i) (2n-2i-1)...(2n-2k-1) / ((2n-2k-2i-1)...(2n-4k-1)) = 0",
                  "2k <= n-1, n <= n_max", nk_where(n_max, [](int n, int k) { return 2 * k <= n - 1; }),
                  [](int n, int k) { return fail_if(reduction_identity_check(n, k), label(n, k)); }});

    fs.push_back({"poincare-series", "dim Val_d = [x^d] (1-x^{n+1})(1-x^{n+2}) / ((1-x)(1-x^2))",
                  "1 <= n <= n_max, 0 <= d <= 2n", range_n(1, n_max), [](int n, int) -> Outcome {
                      const auto alg = unitary_algebra(n);
                      for (int d = 0; d <= 2 * n; ++d) {
                          const auto size = static_cast<long>(alg->basis(d).size());
                          if (size != poincare_coefficient(n, d))
                              return label_n(n) + ", d=" + std::to_string(d) + ": basis size " + std::to_string(size) +
                                     ", series " + std::to_string(poincare_coefficient(n, d));
                      }
                      return std::nullopt;
                  }});

    fs.push_back({"quotient-soundness", "f_{n+1} = f_{n+2} = 0 in Val^U(n) and in Val^U(n-1)",
                  "1 <= n <= n_max", range_n(1, n_max), [](int n, int) -> Outcome {
                      const GradedPoly f1 = f_closed_form(n + 1);
                      const GradedPoly f2 = f_closed_form(n + 2);
                      const GradedPoly mix = (GradedPoly::s() + GradedPoly::t()) * f1 +
                                             (GradedPoly::s() - Rational(2) * GradedPoly(Monomial{0, 3})) * f2;
                      const auto alg = unitary_algebra(n);
                      for (const auto* p : {&f1, &f2, &mix}) {
                          const auto nf = alg->element(*p);
                          if (!nf.is_zero()) return label_n(n) + ": normal form " + nf.to_string();
                      }
                      if (n >= 2) {
                          const auto lower = unitary_algebra(n - 1);
                          for (const auto* p : {&f1, &f2}) {
                              const auto nf = lower->element(*p);
                              if (!nf.is_zero()) return label_n(n) + ": in U(n-1) " + nf.to_string();
                          }
                      }
                      return std::nullopt;
                  }});

    fs.push_back({"oracle-matrices",
                  "P^2_1 = [[1,1/3],[1/3,1/6]], Q^2_1 = [[3,-6],[-6,18]], P^3_1 = [[1,3/10],[3/10,1/10]], "
                  "Q^3_1 = [[10,-30],[-30,100]]",
                  "(n,k) in {(2,1),(3,1)}", {{2, 1}, {3, 1}}, [](int n, int k) -> Outcome {
                      const ExactMatrix p = pairing_matrix(n, k).matrix;
                      const ExactMatrix q = q_matrix(n, k);
                      const ExactMatrix want_p = n == 2 ? ExactMatrix{{1, Rational(1, 3)}, {Rational(1, 3), Rational(1, 6)}}
                                                        : ExactMatrix{{1, Rational(3, 10)}, {Rational(3, 10), Rational(1, 10)}};
                      const ExactMatrix want_q = n == 2 ? ExactMatrix{{3, -6}, {-6, 18}} : ExactMatrix{{10, -30}, {-30, 100}};
                      if (p != want_p) return label(n, k) + ": P = " + matrix_text(p);
                      return fail_if(q == want_q, label(n, k) + ": Q = " + matrix_text(q));
                  }});

    fs.push_back({"pairing", "P^n_k symmetric, nonsingular, PD(a, t^{2n-4k} b) = PD(ta, t^{2n-4k-1} b), Q P = I",
                  "0 <= 2k <= n <= n_max", nk_where(n_max, [](int n, int k) { return 2 * k <= n; }),
                  [](int n, int k) -> Outcome {
                      const ExactMatrix p = pairing_matrix(n, k).matrix;
                      const ExactMatrix q = q_matrix(n, k);
                      return fail_if(q * p == ExactMatrix::identity(p.rows()) && q.is_symmetric(),
                                     label(n, k) + ": Q P = " + matrix_text(q * p));
                  }});

    fs.push_back({"qtilde-block", "Q^n_k = A^T diag(1, Q~) A with Q~ symmetric nonsingular",
                  "1 <= k, 2k+1 <= n <= n_max", nk_where(n_max, [](int n, int k) { return k >= 1 && 2 * k + 1 <= n; }),
                  [](int n, int k) -> Outcome {
                      const ExactMatrix tilde = qtilde_check(n, k);
                      const ExactMatrix a = a_matrix(n, k);
                      const ExactMatrix rebuilt = a.transpose() * block_diagonal(ExactMatrix::identity(1), tilde) * a;
                      return fail_if(rebuilt == q_matrix(n, k), label(n, k) + ": Q~ = " + matrix_text(tilde));
                  }});

    fs.push_back({"companion-general-term",
                  "n/(2(2n-1)) Q^n_k P^{n-1}_k is a companion matrix with a_i = (-2)^{i-k-1} C(k+1,i) "
                  "(n-i)...(n-k) / ((2n-2k-2i-1)...(2n-4k-1)); a^{n,0}_0 = -n/(2(2n-1))",
                  "2k <= n-1, n <= n_max", nk_where(n_max, [](int n, int k) { return 2 * k <= n - 1; }),
                  [](int n, int k) -> Outcome {
                      const CompanionData c = companion(n, k);
                      for (int i = 0; i <= k; ++i) {
                          const Rational closed = a_closed_form(n, k, i);
                          if (c.a[static_cast<std::size_t>(i)] != closed)
                              return label(n, k) + ", i=" + std::to_string(i) + ": companion " +
                                     c.a[static_cast<std::size_t>(i)].to_string() + " vs closed form " + closed.to_string();
                      }
                      if (k == 0 && c.a[0] != Rational(-n, 2 * (2 * n - 1)))
                          return label(n, k) + ": a_0 = " + c.a[0].to_string();
                      return std::nullopt;
                  }});

    fs.push_back({"phi-vanishing", "phi^{n,k} = 0 (k <= n/2 - 1) and t phi^{n,(n-1)/2} = 0 (n odd) in Val^U(n)",
                  "2k <= n-1, n <= n_max", nk_where(n_max, [](int n, int k) { return 2 * k <= n - 1; }),
                  [](int n, int k) { return fail_if(phi_vanishing_check(n, k), label(n, k)); }});

    fs.push_back({"phi-equals-f",
                  "phi^{n,n/2-1} = (-1)^{n/2} f_{n+1} (n even), t phi^{n,(n-1)/2} = (-1)^{(n-1)/2} (n+1)/2 f_{n+1} (n odd)",
                  "2 <= n <= n_max", range_n(2, n_max),
                  [](int n, int) { return fail_if(phi_equals_f_check(n), label_n(n)); }});

    fs.push_back({"r-identity",
                  "R^n_k Q^n_k = diag(1, Q^{n-1}_{k-1}); (n-i) C(2n-2i-1,n-i) = 2(2n-2i-1) C(2n-2i-3,n-i-1)",
                  "1 <= k, 2k+1 <= n <= n_max", nk_where(n_max, [](int n, int k) { return k >= 1 && 2 * k + 1 <= n; }),
                  [](int n, int k) -> Outcome {
                      return fail_if(r_identity_check(n, k),
                                     label(n, k) + ": R Q = " + matrix_text(r_matrix(n, k) * q_matrix(n, k)));
                  }});

    fs.push_back({"a-recurrences",
                  "sum_i C(2n-2i-1,n-i) a^{n,k}_i = 0; a^{n-2,k-1}_{i-1} + a^{n-1,k-1}_i (a^{n,k}_k - a^{n-2,k-1}_{k-1}) = "
                  "a^{n,k}_i; a^{n,k}_k - a^{n-2,k-1}_{k-1} = -n/(2(2n-4k-1))",
                  "1 <= k, 2k <= n-1, n <= n_max",
                  nk_where(n_max, [](int n, int k) { return k >= 1 && 2 * k <= n - 1 && 2 * (k - 1) <= n - 3; }),
                  [](int n, int k) { return fail_if(a_recurrence_check(n, k), label(n, k)); }});

    fs.push_back({"step-up", "(n+1) (id ⊗ r) k_{n+1}(1) = 2(2n+1) (s ⊗ 1) k_n(1)", "1 <= n <= n_max",
                  range_n(1, n_max), [](int n, int) { return fail_if(step_up_check(n), label_n(n)); }});

    fs.push_back({"kinematic-unit", "k_n(1) = PD^{-1}, symmetric under swapping factors", "1 <= n <= n_max",
                  range_n(1, n_max), [](int n, int) -> Outcome {
                      const TensorElement unit = kinematic_unit(n);
                      if (unit != kinematic_unit_from_duality(unitary_algebra(n)))
                          return label_n(n) + ": block assembly differs from the inverse pairing";
                      return fail_if(unit.swapped() == unit, label_n(n) + ": not symmetric");
                  }});

    fs.push_back({"sesqui", "k(phi) = (phi ⊗ 1) k(1) = (1 ⊗ phi) k(1)", "1 <= n <= n_max, phi basis monomials",
                  range_n(1, n_max), [](int n, int) -> Outcome {
                      const auto alg = unitary_algebra(n);
                      for (int d = 0; d <= 2 * n; ++d)
                          for (const auto& m : alg->basis(d)) {
                              const auto phi = alg->element(GradedPoly(m));
                              if (kinematic_of(n, phi, Placement::kLeft) != kinematic_of(n, phi, Placement::kRight))
                                  return label_n(n) + ", phi=" + m.to_string();
                          }
                      return std::nullopt;
                  }});

    fs.push_back({"annihilator-basis",
                  "(n-i) s^i t^{j-2i} - (4n-4i-2) s^{i+1} t^{j-2i-2} is killed by t^{2n-j}; with t^j a basis; "
                  "t A_j in A_{j+1}",
                  "1 <= n <= n_max, 2 <= j <= 2n-2", range_n(1, n_max), [](int n, int) -> Outcome {
                      const auto alg = unitary_algebra(n);
                      for (int j = 2; j <= 2 * n - 2; ++j) {
                          const auto elems = annihilator_basis(*alg, j);
                          const auto tag = label_n(n) + ", j=" + std::to_string(j);
                          if (elems.size() + 1 != alg->basis(j).size()) return tag + ": wrong count";
                          std::vector<Vector> rows{alg->coordinates(GradedPoly(Monomial{0, j}), j)};
                          for (const auto& e : elems) {
                              const auto killed = multiply(alg->element(GradedPoly(Monomial{0, 2 * n - j})), e);
                              if (!killed.is_zero()) return tag + ": t^{2n-j} * (" + e.to_string() + ") = " + killed.to_string();
                              rows.push_back(alg->coordinates(e.poly(), j));
                          }
                          if (rank(ExactMatrix::from_rows(rows)) != rows.size()) return tag + ": not independent";
                          if (j + 1 <= 2 * n - 2) {
                              std::vector<Vector> next;
                              for (const auto& e : annihilator_basis(*alg, j + 1)) next.push_back(alg->coordinates(e.poly(), j + 1));
                              for (const auto& e : elems) {
                                  const auto te = multiply(alg->element(GradedPoly::t()), e);
                                  if (!solve_in_span(next, alg->coordinates(te.poly(), j + 1)))
                                      return tag + ": t * (" + e.to_string() + ") = " + te.to_string() + " leaves A_{j+1}";
                              }
                          }
                      }
                      return std::nullopt;
                  }});

    fs.push_back({"annihilator-congruence", "k_n(t^k) = sum_{i+j=2n+k} t^i ⊗ t^j mod A ⊗ A",
                  "0 <= k <= 2n, n <= n_max", nk_where(n_max, [](int, int) { return true; }),
                  [](int n, int k) { return fail_if(annihilator_congruence_check(n, k), label(n, k)); }});

    fs.push_back({"so-kinematic", "k_SO(n)(t^k) = sum_{i+j=n+k} t^i ⊗ t^j, all coefficients 1",
                  "0 <= k <= n <= n_max", nk_where(n_max, [](int n, int k) { return k <= n; }),
                  [](int n, int k) -> Outcome {
                      const auto alg = so_algebra(n);
                      const TensorElement direct = so_kinematic(n, k);
                      for (const auto& term : direct.terms())
                          if (term.coefficient != Rational(1)) return label(n, k) + ": coefficient " + term.coefficient.to_string();
                      const TensorElement via_duality =
                          multiply_left(kinematic_unit_from_duality(alg), GradedPoly(Monomial{0, k}));
                      return fail_if(direct == via_duality, label(n, k) + ": differs from (t^k ⊗ 1) PD^{-1}");
                  }});

    fs.push_back({"positivity", "Q^n_k positive definite (leading principal minors > 0)", "0 <= 2k <= n <= n_max",
                  nk_where(n_max, [](int n, int k) { return 2 * k <= n; }), [](int n, int k) -> Outcome {
                      const ExactMatrix q = q_matrix(n, k);
                      if (is_positive_definite(q)) return std::nullopt;
                      std::string minors;
                      for (const auto& m : leading_minors(q)) minors += (minors.empty() ? "" : ", ") + m.to_string();
                      return label(n, k) + ": leading minors " + minors;
                  }});

    return fs;
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
    if (options.n_max < 1) throw std::domain_error("suite bound must be >= 1");
    const auto fs = families(options.n_max);

    struct Task {
        std::size_t family;
        int n;
        int k;
    };
    std::vector<Task> tasks;
    for (std::size_t f = 0; f < fs.size(); ++f)
        for (const auto& [n, k] : fs[f].params) tasks.push_back({f, n, k});

    auto run_case = [&](std::size_t i) -> Outcome {
        const Task& t = tasks[i];
        try {
            return fs[t.family].run(t.n, t.k);
        } catch (const std::exception& e) {
            return label(t.n, t.k) + ": " + e.what();
        }
    };

    std::vector<Outcome> outcomes;
    if (options.parallel) {
        for (int n = 1; n <= options.n_max + 1; ++n) unitary_algebra(n);
        outcomes = parallel_map<Outcome>(tasks.size(), run_case);
    } else {
        outcomes = serial_map<Outcome>(tasks.size(), run_case);
    }

    SuiteReport report;
    report.n_max = options.n_max;
    for (const auto& f : fs) report.entries.push_back({f.name, f.anchor, f.range, f.params.size(), true, {}});
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        auto& entry = report.entries[tasks[i].family];
        if (outcomes[i] && entry.passed) {
            entry.passed = false;
            entry.counterexample = *outcomes[i];
        }
    }
    return report;
}

}  // namespace uval
