#include "uval/duality.hpp"

#include <string>

#include "uval/error.hpp"

namespace uval {

namespace {

std::string nk(int n, int k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

Rational sign_power(int e) { return Rational(e % 2 == 0 ? 1 : -1); }

GradedPoly t_power(int e) { return GradedPoly(Monomial{0, e}); }

}  // namespace

Rational top_coefficient(const AlgebraElement& a) { return a.poly().coefficient(a.algebra().top_monomial()); }

PairingMatrix pairing_matrix(int n, int k) {
    if (n < 1 || k < 0 || 2 * k > n)
        throw IndexOutOfRange("pairing matrix needs 0 <= 2k <= n, got " + nk(n, k));
    const auto alg = unitary_algebra(n);
    const auto size = static_cast<std::size_t>(k + 1);
    const auto b = [k](std::size_t i) { return GradedPoly(Monomial{static_cast<int>(i), 2 * k - 2 * static_cast<int>(i)}); };

    PairingMatrix out{n, k, ExactMatrix(size, size)};
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            out.matrix(i, j) = top_coefficient(multiply(alg->element(b(i)), alg->element(t_power(2 * n - 4 * k) * b(j))));

    if (2 * k < n) {
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) {
                const Rational other = top_coefficient(
                    multiply(alg->element(t_power(1) * b(i)), alg->element(t_power(2 * n - 4 * k - 1) * b(j))));
                if (other != out.matrix(i, j))
                    throw StructureViolation("the two pairings differ at entry (" + std::to_string(i) + ", " +
                                             std::to_string(j) + ") for " + nk(n, k) + ": " +
                                             out.matrix(i, j).to_string() + " vs " + other.to_string());
            }
    }
    if (!out.matrix.is_symmetric()) throw StructureViolation("pairing matrix is not symmetric for " + nk(n, k));
    if (determinant(out.matrix).is_zero()) throw StructureViolation("pairing matrix is singular for " + nk(n, k));
    return out;
}

ExactMatrix q_matrix(int n, int k) { return mat_inverse(pairing_matrix(n, k).matrix); }

ExactMatrix a_matrix(int n, int k) {
    if (k < 0 || 2 * k + 1 > n) throw IndexOutOfRange("A matrix needs 0 <= k, 2k+1 <= n, got " + nk(n, k));
    const auto size = static_cast<std::size_t>(k + 1);
    ExactMatrix a(size, size);
    a(0, 0) = 1;
    for (int r = 1; r <= k; ++r) {
        a(static_cast<std::size_t>(r), static_cast<std::size_t>(r - 1)) = n - r + 1;
        a(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) = -2 * (2 * n - 2 * r + 1);
    }
    return a;
}

ExactMatrix qtilde_check(int n, int k) {
    if (k < 1 || 2 * k + 1 > n) throw IndexOutOfRange("Q~ needs k >= 1, 2k+1 <= n, got " + nk(n, k));
    const ExactMatrix a_inv = mat_inverse(a_matrix(n, k));
    const ExactMatrix m = a_inv.transpose() * q_matrix(n, k) * a_inv;
    if (m(0, 0) != Rational(1))
        throw StructureViolation("conjugated Q has corner " + m(0, 0).to_string() + " for " + nk(n, k));
    for (std::size_t i = 1; i < m.rows(); ++i)
        if (!m(0, i).is_zero() || !m(i, 0).is_zero())
            throw StructureViolation("conjugated Q has nonzero border entry " + std::to_string(i) + " for " + nk(n, k));
    ExactMatrix tilde = m.block(1, 1, m.rows() - 1, m.cols() - 1);
    if (!tilde.is_symmetric()) throw StructureViolation("Q~ is not symmetric for " + nk(n, k));
    if (determinant(tilde).is_zero()) throw StructureViolation("Q~ is singular for " + nk(n, k));
    return tilde;
}

TensorElement kinematic_unit(int n) {
    const auto alg = unitary_algebra(n);
    TensorElement out(alg, alg);
    std::vector<ExactMatrix> q;
    for (int k = 0; 2 * k <= n; ++k) q.push_back(q_matrix(n, k));
    for (int i = 0; i <= 2 * n; ++i) {
        const int k = std::min(i / 2, (2 * n - i) / 2);
        out.set_block(i, 2 * n - i, q[static_cast<std::size_t>(k)]);
    }
    return out;
}

TensorElement kinematic_unit_from_duality(const std::shared_ptr<const QuotientAlgebra>& algebra) {
    TensorElement out(algebra, algebra);
    const int top = algebra->top_degree();
    const Monomial top_mono = algebra->top_monomial();
    for (int i = 0; i <= top; ++i) {
        const auto& left = algebra->basis(i);
        const auto& right = algebra->basis(top - i);
        ExactMatrix gram(left.size(), right.size());
        for (std::size_t a = 0; a < left.size(); ++a)
            for (std::size_t b = 0; b < right.size(); ++b)
                gram(a, b) = algebra->normal_form(GradedPoly(left[a] * right[b])).coefficient(top_mono);
        // The copairing sum_a b_a ⊗ b_a^dual has coefficient matrix (gram^T)^{-1}.
        out.set_block(i, top - i, mat_inverse(gram.transpose()));
    }
    return out;
}

TensorElement kinematic_of(int n, const AlgebraElement& phi, Placement placement) {
    if (!(phi.algebra().id() == AlgebraId{Family::kUnitary, n}))
        throw AlgebraMismatch("kinematic_of(" + std::to_string(n) + ") given an element of " +
                              phi.algebra().id().to_string());
    const TensorElement unit = kinematic_unit(n);
    return placement == Placement::kLeft ? multiply_left(unit, phi.poly()) : multiply_right(unit, phi.poly());
}

bool annihilator_congruence_check(int n, int k) {
    if (k < 0 || k > 2 * n)
        throw DegreeOutOfRange("congruence degree must lie in 0.." + std::to_string(2 * n) + ", got " +
                               std::to_string(k));
    const auto alg = unitary_algebra(n);
    TensorElement diff = kinematic_of(n, alg->element(t_power(k)));
    TensorElement classical(alg, alg);
    for (int i = k; i <= 2 * n; ++i) classical.add_basis_term({0, i}, {0, 2 * n + k - i}, Rational(1));
    diff -= classical;

    for (const auto& [deg, block] : diff.blocks()) {
        const auto left = annihilator_span(*alg, deg.first);
        const auto right = annihilator_span(*alg, deg.second);
        std::vector<Vector> generators;
        for (const auto& l : left) {
            const Vector lc = alg->coordinates(l.poly(), deg.first);
            for (const auto& r : right) {
                const Vector rc = alg->coordinates(r.poly(), deg.second);
                Vector g;
                g.reserve(lc.size() * rc.size());
                for (const auto& x : lc)
                    for (const auto& y : rc) g.push_back(x * y);
                generators.push_back(std::move(g));
            }
        }
        const Vector target(block.entries().begin(), block.entries().end());
        if (generators.empty()) {
            if (!block.is_zero()) return false;
            continue;
        }
        if (!solve_in_span(generators, target)) return false;
    }
    return true;
}

CompanionData companion(int n, int k) {
    if (k < 0 || 2 * k > n - 1) throw IndexOutOfRange("companion needs 0 <= 2k <= n-1, got " + nk(n, k));
    // Val^U(0) is the ground field, so P^0_0 = (1).
    const ExactMatrix lower = n == 1 ? ExactMatrix::identity(1) : pairing_matrix(n - 1, k).matrix;
    CompanionData out{n, k, Rational(n, 2 * (2 * n - 1)) * (q_matrix(n, k) * lower), {}};
    const auto size = static_cast<std::size_t>(k + 1);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c + 1 < size; ++c) {
            const Rational expected(r == c + 1 ? 1 : 0);
            if (out.companion(r, c) != expected)
                throw StructureViolation("companion shape fails at (" + std::to_string(r) + ", " + std::to_string(c) +
                                         ") for " + nk(n, k) + ": " + out.companion(r, c).to_string());
        }
    for (std::size_t r = 0; r < size; ++r) out.a.push_back(-out.companion(r, size - 1));
    return out;
}

Rational a_closed_form(int n, int k, int i) {
    if (k < 0 || 2 * k > n - 1 || i < 0 || i > k + 1)
        throw IndexOutOfRange("a_closed_form needs 2k <= n-1 and 0 <= i <= k+1, got " + nk(n, k) +
                              ", i=" + std::to_string(i));
    if (i == k + 1) return Rational(1);
    Rational value = power(Rational(-2), i - k - 1) * binomial(k + 1, i);
    for (int f = n - i; f >= n - k; --f) value *= Rational(f);
    for (int f = 2 * n - 2 * k - 2 * i - 1; f >= 2 * n - 4 * k - 1; f -= 2) value /= Rational(f);
    return value;
}

std::vector<Rational> a_closed_form_vector(int n, int k) {
    std::vector<Rational> a;
    for (int i = 0; i <= k + 1; ++i) a.push_back(a_closed_form(n, k, i));
    return a;
}

GradedPoly t_phi(int n, int k, const std::vector<Rational>& a) {
    GradedPoly out;
    for (int i = 0; i <= k + 1; ++i) {
        const Rational c = i == k + 1 ? Rational(1) : a.at(static_cast<std::size_t>(i));
        out.add_term({i, 2 * n - 2 * k - 2 * i}, c);
    }
    return out;
}

std::optional<GradedPoly> phi(int n, int k, const std::vector<Rational>& a) {
    if (2 * n - 4 * k - 3 < 0) return std::nullopt;
    GradedPoly out;
    for (int i = 0; i <= k + 1; ++i) {
        const Rational c = i == k + 1 ? Rational(1) : a.at(static_cast<std::size_t>(i));
        out.add_term({i, 2 * n - 2 * k - 2 * i - 1}, c);
    }
    return out;
}

bool phi_vanishing_check(int n, int k) {
    const CompanionData data = companion(n, k);
    const auto alg = unitary_algebra(n);
    if (!alg->element(t_phi(n, k, data.a)).is_zero()) return false;
    if (2 * k + 2 <= n) {
        const auto p = phi(n, k, data.a);
        if (!p || !alg->element(*p).is_zero()) return false;
    }
    return true;
}

bool phi_equals_f_check(int n) {
    if (n < 2) throw IndexOutOfRange("phi_equals_f_check needs n >= 2, got n=" + std::to_string(n));
    const GradedPoly f = f_closed_form(n + 1);
    if (n % 2 == 0) {
        const int k = n / 2 - 1;
        const auto p = phi(n, k, a_closed_form_vector(n, k));
        return p && *p == sign_power(n / 2) * f;
    }
    const int k = (n - 1) / 2;
    return t_phi(n, k, a_closed_form_vector(n, k)) == sign_power((n - 1) / 2) * Rational(n + 1, 2) * f;
}

ExactMatrix r_matrix(int n, int k) {
    if (k < 1 || 2 * k + 1 > n) throw IndexOutOfRange("R matrix needs k >= 1, 2k+1 <= n, got " + nk(n, k));
    const auto size = static_cast<std::size_t>(k + 1);
    ExactMatrix r(size, size);
    r(0, 0) = Rational(2 * (2 * n - 1), n);
    const Rational central = binomial(2 * n - 2, n - 1);
    for (int j = 1; j <= k; ++j) r(0, static_cast<std::size_t>(j)) = Rational(2) * binomial(2 * n - 2 * j - 1, n - j) / central;
    const auto a = a_closed_form_vector(n - 1, k - 1);
    for (std::size_t row = 1; row < size; ++row) {
        r(row, row - 1) = 1;
        r(row, size - 1) -= a[row - 1];
    }
    return Rational(n, 2 * (2 * n - 1)) * r;
}

bool binomial_identity_check(int n, int i) {
    if (i < 0 || i > n - 2) throw IndexOutOfRange("binomial identity needs 0 <= i <= n-2");
    return Rational(n - i) * binomial(2 * n - 2 * i - 1, n - i) ==
           Rational(2 * (2 * n - 2 * i - 1)) * binomial(2 * n - 2 * i - 3, n - i - 1);
}

bool r_identity_check(int n, int k) {
    const ExactMatrix r = r_matrix(n, k);
    const Rational lead = binomial(2 * n - 1, n);
    for (int j = 0; j <= k; ++j)
        if (r(0, static_cast<std::size_t>(j)) != binomial(2 * n - 2 * j - 1, n - j) / lead) return false;
    for (int i = 0; i <= n - 2; ++i)
        if (!binomial_identity_check(n, i)) return false;
    const ExactMatrix expected = block_diagonal(ExactMatrix::identity(1), q_matrix(n - 1, k - 1));
    return r * q_matrix(n, k) == expected;
}

bool a_recurrence_check(int n, int k) {
    if (k < 1 || 2 * k > n - 1 || 2 * (k - 1) > n - 3)
        throw IndexOutOfRange("a recurrences need k >= 1, 2k <= n-1, 2(k-1) <= n-3, got " + nk(n, k));
    const auto a = a_closed_form_vector(n, k);
    const auto a1 = a_closed_form_vector(n - 1, k - 1);
    const auto a2 = a_closed_form_vector(n - 2, k - 1);
    const auto ku = static_cast<std::size_t>(k);

    Rational sum(0);
    for (int i = 0; i <= k + 1; ++i) sum += binomial(2 * n - 2 * i - 1, n - i) * a[static_cast<std::size_t>(i)];
    if (!sum.is_zero()) return false;

    const Rational gap = a[ku] - a2[ku - 1];
    if (gap != Rational(-n, 2 * (2 * n - 4 * k - 1))) return false;

    for (std::size_t i = 0; i < ku; ++i) {
        const Rational shifted = i == 0 ? Rational(0) : a2[i - 1];
        if (shifted + a1[i] * gap != a[i]) return false;
    }
    return true;
}

bool step_up_check(int n) {
    if (n < 1) throw IndexOutOfRange("step_up_check needs n >= 1");
    const auto lower = unitary_algebra(n);
    const auto upper = unitary_algebra(n + 1);
    const TensorElement lhs = Rational(n + 1) * kinematic_unit(n + 1).map_right(
                                                    [](const Monomial& m) { return GradedPoly(m); }, lower);
    const TensorElement rhs = Rational(2 * (2 * n + 1)) * kinematic_unit(n).map_left(
                                                              [](const Monomial& m) { return GradedPoly::s() * GradedPoly(m); },
                                                              upper);
    return lhs == rhs;
}

}  // namespace uval
