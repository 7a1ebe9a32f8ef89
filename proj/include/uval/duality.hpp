#pragma once

#include <optional>
#include <vector>

#include "uval/algebra.hpp"
#include "uval/matrix.hpp"
#include "uval/tensor.hpp"

namespace uval {

/// Coefficient of the top class t^top in the normal form (0 if absent).
Rational top_coefficient(const AlgebraElement& a);

/// Pairing on Val^{U(n)}_{2k}, <a,b> = PD(a, t^{2n-4k} b), over the ordered
/// basis t^{2k}, s t^{2k-2}, ..., s^k.
struct PairingMatrix {
    int n = 0;
    int k = 0;
    ExactMatrix matrix;
};

/// Requires 0 <= 2k <= n. When 2k < n, also checks that PD(t a, t^{2n-4k-1} b)
/// gives the same matrix, each factor reduced before multiplying. Throws
/// IndexOutOfRange or StructureViolation.
PairingMatrix pairing_matrix(int n, int k);

/// Inverse of the pairing matrix: the kinematic coefficients. Requires 0 <= 2k <= n.
ExactMatrix q_matrix(int n, int k);

/// Bidiagonal change of basis from monomials to (t^j, annihilator elements).
/// Requires 2k + 1 <= n.
ExactMatrix a_matrix(int n, int k);

/// Conjugates Q^n_k by A^n_k; the result must be diag(1, Q~) with Q~ symmetric
/// and nonsingular. Returns Q~. Requires 2k + 1 <= n, k >= 1.
ExactMatrix qtilde_check(int n, int k);

/// k_n(1) assembled from the Q^n_k blocks.
TensorElement kinematic_unit(int n);
/// The inverse Poincaré-duality copairing of any quotient algebra, computed
/// directly from the pairing blocks PD(basis_i, basis_{top-i}).
TensorElement kinematic_unit_from_duality(const std::shared_ptr<const QuotientAlgebra>& algebra);

enum class Placement { kLeft, kRight };

/// k_n(φ) = (φ ⊗ 1) k_n(1), or (1 ⊗ φ) k_n(1) with Placement::kRight.
TensorElement kinematic_of(int n, const AlgebraElement& phi, Placement placement = Placement::kLeft);

/// k_n(t^k) - sum_{i+j=2n+k} t^i ⊗ t^j lies in span(A) ⊗ span(A), checked by
/// a linear solve against the annihilator bases. Requires 0 <= k <= 2n.
bool annihilator_congruence_check(int n, int k);

struct CompanionData {
    int n = 0;
    int k = 0;
    ExactMatrix companion;
    /// a_0 .. a_k; a_{k+1} = 1 is implied.
    std::vector<Rational> a;
};

/// n/(2(2n-1)) Q^n_k P^{n-1}_k, with its coefficients read off the last
/// column. Requires 2k <= n-1. Throws StructureViolation if the product is
/// not a companion matrix.
CompanionData companion(int n, int k);

/// Closed form of a_i^{n,k}; 1 for i = k+1. Requires 2k <= n-1, 0 <= i <= k+1.
Rational a_closed_form(int n, int k, int i);
/// a_0 .. a_{k+1} from the closed form.
std::vector<Rational> a_closed_form_vector(int n, int k);

/// t φ^{n,k} = sum_{i=0}^{k+1} a_i s^i t^{2n-2k-2i}; always a polynomial.
GradedPoly t_phi(int n, int k, const std::vector<Rational>& a);
/// φ^{n,k} itself, or nullopt when it would need t^{-1}.
std::optional<GradedPoly> phi(int n, int k, const std::vector<Rational>& a);

/// t φ^{n,k} = 0 in Val^{U(n)} (and φ^{n,k} = 0 when 2k+2 <= n), with the
/// coefficients taken from companion(n, k).
bool phi_vanishing_check(int n, int k);

/// φ^{n,n/2-1} = (-1)^{n/2} f_{n+1} for even n, t φ^{n,(n-1)/2} =
/// (-1)^{(n-1)/2} (n+1)/2 f_{n+1} for odd n, as polynomials. Requires n >= 2.
bool phi_equals_f_check(int n);

/// R^n_k, first row 2 C(2n-2j-1, n-j)/C(2n-2, n-1) (j >= 1) after 2(2n-1)/n,
/// then [I_k | -a^{n-1,k-1}], all scaled by n/(2(2n-1)). Requires 2k+1 <= n, k >= 1.
ExactMatrix r_matrix(int n, int k);
/// R^n_k Q^n_k = diag(1, Q^{n-1}_{k-1}); also checks the binomial form of R's
/// first row and the binomial identity for every admissible i.
bool r_identity_check(int n, int k);
/// (n-i) C(2n-2i-1, n-i) - 2(2n-2i-1) C(2n-2i-3, n-i-1) == 0. Requires 0 <= i <= n-2.
bool binomial_identity_check(int n, int i);

/// The two linear relations that pin down a^{n,k} from a^{n-1,k-1} and
/// a^{n-2,k-1}, plus a^{n,k}_k - a^{n-2,k-1}_{k-1} = -n/(2(2n-4k-1)).
/// Requires 1 <= k, 2k <= n-1, 2(k-1) <= n-3.
bool a_recurrence_check(int n, int k);

/// (n+1) (id ⊗ r) k_{n+1}(1) == 2(2n+1) (s· ⊗ id) k_n(1) in Val^{U(n+1)} ⊗ Val^{U(n)}.
bool step_up_check(int n);

}  // namespace uval
