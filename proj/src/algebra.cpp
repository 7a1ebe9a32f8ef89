#include "uval/algebra.hpp"

#include <mutex>
#include <unordered_map>

#include "uval/error.hpp"
#include "uval/matrix.hpp"

namespace uval {

std::string AlgebraId::to_string() const {
    return (family == Family::kUnitary ? "U(" : "SO(") + std::to_string(n) + ")";
}

std::optional<std::size_t> QuotientAlgebra::basis_index(const Monomial& m) const {
    const auto& b = basis(m.degree());
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] == m) return i;
    return std::nullopt;
}

std::size_t QuotientAlgebra::dimension() const {
    std::size_t dim = 0;
    for (int d = 0; d <= top_degree(); ++d) dim += basis(d).size();
    return dim;
}

AlgebraElement QuotientAlgebra::element(const GradedPoly& p) const {
    return AlgebraElement(shared_from_this(), normal_form(p));
}

std::vector<Rational> QuotientAlgebra::coordinates(const GradedPoly& normal, int degree) const {
    const auto& b = basis(degree);
    std::vector<Rational> out(b.size());
    for (const auto& [m, c] : normal.terms()) {
        std::size_t i = 0;
        while (i < b.size() && b[i] != m) ++i;
        if (i == b.size())
            throw AlgebraMismatch(m.to_string() + " is not a degree-" + std::to_string(degree) + " basis monomial of " +
                                  id().to_string());
        out[i] = c;
    }
    return out;
}

namespace {

const std::vector<Monomial>& empty_basis() {
    static const std::vector<Monomial> empty;
    return empty;
}

// Basis rule: s^p t^{d-2p} with 0 <= p <= floor(min(d, 2n-d)/2).
int max_basis_p(int n, int d) { return std::min(d, 2 * n - d) / 2; }

}  // namespace

std::shared_ptr<const UnitaryAlgebra> UnitaryAlgebra::build(int n) {
    if (n < 1) throw DegreeOutOfRange("Val^U(n) needs n >= 1, got " + std::to_string(n));
    std::shared_ptr<UnitaryAlgebra> alg(new UnitaryAlgebra(n));
    const int top = 2 * n;
    alg->basis_.resize(static_cast<std::size_t>(top + 1));
    alg->reduction_.resize(static_cast<std::size_t>(top + 3));
    const GradedPoly f_lo = f_closed_form(n + 1);
    const GradedPoly f_hi = f_closed_form(n + 2);

    for (int d = 0; d <= top + 2; ++d) {
        const auto all = monomials_of_degree(d);
        std::vector<Monomial> basis;
        std::vector<Monomial> non_basis;
        if (d <= top)
            for (const auto& m : all) (m.s_exp <= max_basis_p(n, d) ? basis : non_basis).push_back(m);
        else
            non_basis = all;
        if (d <= top) alg->basis_[static_cast<std::size_t>(d)] = basis;
        if (non_basis.empty()) continue;

        // Column order: non-basis monomials by descending power of s, then the basis.
        std::vector<Monomial> columns(non_basis.rbegin(), non_basis.rend());
        columns.insert(columns.end(), basis.begin(), basis.end());
        std::map<Monomial, std::size_t> column_of;
        for (std::size_t c = 0; c < columns.size(); ++c) column_of[columns[c]] = c;

        std::vector<Vector> rows;
        for (const auto* gen : {&f_lo, &f_hi}) {
            const int shift = d - gen->max_degree();
            if (shift < 0) continue;
            for (const auto& m : monomials_of_degree(shift)) {
                Vector row(columns.size());
                const GradedPoly shifted = GradedPoly(m) * *gen;
                for (const auto& [gm, gc] : shifted.terms()) row[column_of.at(gm)] = gc;
                rows.push_back(std::move(row));
            }
        }
        if (rows.empty())
            throw InternalInconsistency("no ideal generators in degree " + std::to_string(d) + " for n = " +
                                        std::to_string(n));
        ExactMatrix slice = ExactMatrix::from_rows(rows);
        const auto pivots = row_reduce(slice, columns.size());
        if (pivots.size() != non_basis.size() || (!pivots.empty() && pivots.back() >= non_basis.size()))
            throw InternalInconsistency("ideal slice of degree " + std::to_string(d) + " has rank " +
                                        std::to_string(pivots.size()) + ", expected " +
                                        std::to_string(non_basis.size()) + " for n = " + std::to_string(n));
        if (d > top) continue;  // everything above the top degree is zero

        auto& table = alg->reduction_[static_cast<std::size_t>(d)];
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            GradedPoly nf;
            for (std::size_t b = 0; b < basis.size(); ++b)
                nf.add_term(basis[b], -slice(r, non_basis.size() + b));
            table.emplace(columns[pivots[r]], std::move(nf));
        }
    }
    return alg;
}

const std::vector<Monomial>& UnitaryAlgebra::basis(int degree) const {
    if (degree < 0 || degree > 2 * n_) return empty_basis();
    return basis_[static_cast<std::size_t>(degree)];
}

const std::map<Monomial, GradedPoly>& UnitaryAlgebra::reductions(int degree) const {
    static const std::map<Monomial, GradedPoly> none;
    if (degree < 0 || degree > 2 * n_) return none;
    return reduction_[static_cast<std::size_t>(degree)];
}

bool UnitaryAlgebra::is_basis_monomial(const Monomial& m) const {
    const int d = m.degree();
    return d <= 2 * n_ && m.s_exp <= max_basis_p(n_, d);
}

GradedPoly UnitaryAlgebra::normal_form(const GradedPoly& p) const {
    GradedPoly out;
    for (const auto& [m, c] : p.terms()) {
        const int d = m.degree();
        if (d > 2 * n_) continue;
        if (is_basis_monomial(m)) {
            out.add_term(m, c);
        } else {
            out += reduction_[static_cast<std::size_t>(d)].at(m) * c;
        }
    }
    return out;
}

std::shared_ptr<const UnitaryAlgebra> UnitaryAlgebra::with_reduction_override(const Monomial& m,
                                                                              const GradedPoly& replacement) const {
    if (is_basis_monomial(m) || m.degree() > 2 * n_)
        throw DegreeOutOfRange(m.to_string() + " has no reduction entry in " + id().to_string());
    std::shared_ptr<UnitaryAlgebra> copy(new UnitaryAlgebra(*this));
    copy->reduction_[static_cast<std::size_t>(m.degree())][m] = replacement;
    return copy;
}

SOAlgebra::SOAlgebra(int n) : n_(n) {
    for (int d = 0; d <= n; ++d) basis_.push_back({Monomial{0, d}});
}

std::shared_ptr<const SOAlgebra> SOAlgebra::build(int n) {
    if (n < 1) throw DegreeOutOfRange("Val^SO(n) needs n >= 1, got " + std::to_string(n));
    return std::shared_ptr<const SOAlgebra>(new SOAlgebra(n));
}

const std::vector<Monomial>& SOAlgebra::basis(int degree) const {
    if (degree < 0 || degree > n_) return empty_basis();
    return basis_[static_cast<std::size_t>(degree)];
}

GradedPoly SOAlgebra::normal_form(const GradedPoly& p) const {
    GradedPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (m.s_exp != 0) throw AlgebraMismatch("s is not an element of " + id().to_string());
        if (m.t_exp <= n_) out.add_term(m, c);
    }
    return out;
}

namespace {

struct Cache {
    std::mutex mutex;
    std::unordered_map<int, std::shared_ptr<const UnitaryAlgebra>> unitary;
    std::unordered_map<int, std::shared_ptr<const SOAlgebra>> orthogonal;
};

Cache& cache() {
    static Cache c;
    return c;
}

}  // namespace

std::shared_ptr<const UnitaryAlgebra> unitary_algebra(int n) {
    auto& c = cache();
    {
        std::lock_guard lock(c.mutex);
        if (auto it = c.unitary.find(n); it != c.unitary.end()) return it->second;
    }
    auto built = UnitaryAlgebra::build(n);
    std::lock_guard lock(c.mutex);
    return c.unitary.try_emplace(n, std::move(built)).first->second;
}

std::shared_ptr<const SOAlgebra> so_algebra(int n) {
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    auto it = c.orthogonal.find(n);
    if (it == c.orthogonal.end()) it = c.orthogonal.emplace(n, SOAlgebra::build(n)).first;
    return it->second;
}

void install_unitary_algebra(std::shared_ptr<const UnitaryAlgebra> algebra) {
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    c.unitary[algebra->n()] = std::move(algebra);
}

void clear_algebra_cache() {
    auto& c = cache();
    std::lock_guard lock(c.mutex);
    c.unitary.clear();
    c.orthogonal.clear();
}

AlgebraElement normal_form(const QuotientAlgebra& algebra, const GradedPoly& p) { return algebra.element(p); }

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    if (!(a.algebra().id() == b.algebra().id()))
        throw AlgebraMismatch("cannot multiply " + a.algebra().id().to_string() + " by " +
                              b.algebra().id().to_string());
    return a.algebra().element(a.poly() * b.poly());
}

namespace {

int unitary_n(const AlgebraElement& a, const char* op) {
    const AlgebraId id = a.algebra().id();
    if (id.family != Family::kUnitary) throw AlgebraMismatch(std::string(op) + " needs a unitary algebra element");
    return id.n;
}

}  // namespace

AlgebraElement restrict(const AlgebraElement& a, int m) {
    const int n = unitary_n(a, "restrict");
    if (m < 1 || m > n)
        throw DegreeOutOfRange("restriction from U(" + std::to_string(n) + ") needs 1 <= m <= " + std::to_string(n));
    return unitary_algebra(m)->element(a.poly());
}

AlgebraElement step_up_s(const AlgebraElement& a) {
    const int n = unitary_n(a, "step_up_s");
    return unitary_algebra(n + 1)->element(GradedPoly::s() * a.poly());
}

std::vector<AlgebraElement> annihilator_span(const UnitaryAlgebra& algebra, int j) {
    const int n = algebra.n();
    std::vector<AlgebraElement> out;
    if (j < 2 || j > 2 * n - 2) return out;
    for (int i = 0; i <= std::min(j, 2 * n - j) / 2 - 1; ++i) {
        GradedPoly p(Monomial{i, j - 2 * i}, Rational(n - i));
        p.add_term(Monomial{i + 1, j - 2 * i - 2}, Rational(-(4 * n - 4 * i - 2)));
        out.push_back(algebra.element(p));
    }
    return out;
}

std::vector<AlgebraElement> annihilator_basis(const UnitaryAlgebra& algebra, int j) {
    const int n = algebra.n();
    if (n == 1) return {};
    if (j < 2 || j > 2 * n - 2)
        throw DegreeOutOfRange("annihilator basis of U(" + std::to_string(n) + ") needs 2 <= j <= " +
                               std::to_string(2 * n - 2) + ", got " + std::to_string(j));
    return annihilator_span(algebra, j);
}

long poincare_coefficient(int n, int degree) {
    auto series = [](int d) -> long { return d < 0 ? 0 : d / 2 + 1; };
    return series(degree) - series(degree - n - 1) - series(degree - n - 2) + series(degree - 2 * n - 3);
}

}  // namespace uval
