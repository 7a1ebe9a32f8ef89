#include "uval/tensor.hpp"

#include "uval/error.hpp"

namespace uval {

TensorElement::TensorElement(std::shared_ptr<const QuotientAlgebra> left,
                             std::shared_ptr<const QuotientAlgebra> right)
    : left_(std::move(left)), right_(std::move(right)) {}

ExactMatrix TensorElement::block(int left_degree, int right_degree) const {
    if (auto it = blocks_.find({left_degree, right_degree}); it != blocks_.end()) return it->second;
    return ExactMatrix(left_->basis(left_degree).size(), right_->basis(right_degree).size());
}

void TensorElement::set_block(int left_degree, int right_degree, ExactMatrix m) {
    if (m.rows() != left_->basis(left_degree).size() || m.cols() != right_->basis(right_degree).size())
        throw DimensionMismatch("block shape does not match the bases of bidegree (" + std::to_string(left_degree) +
                                ", " + std::to_string(right_degree) + ")");
    if (m.is_zero())
        blocks_.erase({left_degree, right_degree});
    else
        blocks_[{left_degree, right_degree}] = std::move(m);
}

void TensorElement::add_basis_term(const Monomial& l, const Monomial& r, const Rational& c) {
    if (c.is_zero()) return;
    const auto li = left_->basis_index(l);
    const auto ri = right_->basis_index(r);
    if (!li || !ri)
        throw AlgebraMismatch(l.to_string() + " ⊗ " + r.to_string() + " is not a basis tensor of " +
                              left_->id().to_string() + " ⊗ " + right_->id().to_string());
    const Bidegree key{l.degree(), r.degree()};
    auto it = blocks_.find(key);
    if (it == blocks_.end())
        it = blocks_.emplace(key, ExactMatrix(left_->basis(key.first).size(), right_->basis(key.second).size())).first;
    it->second(*li, *ri) += c;
    if (it->second.is_zero()) blocks_.erase(it);
}

void TensorElement::add(const GradedPoly& a, const GradedPoly& b, const Rational& c) {
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) add_basis_term(ma, mb, c * ca * cb);
}

Rational TensorElement::coefficient(const Monomial& l, const Monomial& r) const {
    auto it = blocks_.find({l.degree(), r.degree()});
    if (it == blocks_.end()) return Rational(0);
    const auto li = left_->basis_index(l);
    const auto ri = right_->basis_index(r);
    if (!li || !ri) return Rational(0);
    return it->second(*li, *ri);
}

std::vector<TensorElement::Term> TensorElement::terms() const {
    std::vector<Term> out;
    for (const auto& [deg, m] : blocks_) {
        const auto& lb = left_->basis(deg.first);
        const auto& rb = right_->basis(deg.second);
        for (std::size_t a = 0; a < m.rows(); ++a)
            for (std::size_t b = 0; b < m.cols(); ++b)
                if (!m(a, b).is_zero()) out.push_back({lb[a], rb[b], m(a, b)});
    }
    return out;
}

TensorElement TensorElement::map_left(const std::function<GradedPoly(const Monomial&)>& f,
                                      std::shared_ptr<const QuotientAlgebra> target) const {
    TensorElement out(target, right_);
    std::map<Monomial, GradedPoly> image;
    for (const auto& term : terms()) {
        auto it = image.find(term.left);
        if (it == image.end()) it = image.emplace(term.left, target->normal_form(f(term.left))).first;
        out.add(it->second, GradedPoly(term.right), term.coefficient);
    }
    return out;
}

TensorElement TensorElement::map_right(const std::function<GradedPoly(const Monomial&)>& f,
                                       std::shared_ptr<const QuotientAlgebra> target) const {
    TensorElement out(left_, target);
    std::map<Monomial, GradedPoly> image;
    for (const auto& term : terms()) {
        auto it = image.find(term.right);
        if (it == image.end()) it = image.emplace(term.right, target->normal_form(f(term.right))).first;
        out.add(GradedPoly(term.left), it->second, term.coefficient);
    }
    return out;
}

TensorElement TensorElement::swapped() const {
    TensorElement out(right_, left_);
    for (const auto& [deg, m] : blocks_) out.blocks_.emplace(Bidegree{deg.second, deg.first}, m.transpose());
    return out;
}

void TensorElement::check_compatible(const TensorElement& other) const {
    if (!(left_->id() == other.left_->id()) || !(right_->id() == other.right_->id()))
        throw AlgebraMismatch("tensors live in " + left_->id().to_string() + " ⊗ " + right_->id().to_string() +
                              " and " + other.left_->id().to_string() + " ⊗ " + other.right_->id().to_string());
}

void TensorElement::prune() {
    for (auto it = blocks_.begin(); it != blocks_.end();) it = it->second.is_zero() ? blocks_.erase(it) : std::next(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& other) {
    check_compatible(other);
    for (const auto& [deg, m] : other.blocks_) {
        auto [it, inserted] = blocks_.try_emplace(deg, m);
        if (!inserted) it->second += m;
    }
    prune();
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other) {
    check_compatible(other);
    for (const auto& [deg, m] : other.blocks_) {
        auto [it, inserted] = blocks_.try_emplace(deg, m * Rational(-1));
        if (!inserted) it->second -= m;
    }
    prune();
    return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
    for (auto& [deg, m] : blocks_) m *= c;
    prune();
    return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.left_->id() == b.left_->id() && a.right_->id() == b.right_->id() && a.blocks_ == b.blocks_;
}

TensorElement multiply_left(const TensorElement& tensor, const GradedPoly& phi) {
    return tensor.map_left([&](const Monomial& m) { return phi * GradedPoly(m); }, tensor.left_ptr());
}

TensorElement multiply_right(const TensorElement& tensor, const GradedPoly& phi) {
    return tensor.map_right([&](const Monomial& m) { return phi * GradedPoly(m); }, tensor.right_ptr());
}

TensorElement so_kinematic(int n_real, int k) {
    if (k < 0 || k > n_real)
        throw DegreeOutOfRange("SO(" + std::to_string(n_real) + ") kinematic degree must lie in 0.." +
                               std::to_string(n_real) + ", got " + std::to_string(k));
    auto alg = so_algebra(n_real);
    TensorElement out(alg, alg);
    for (int i = k; i <= n_real; ++i) out.add_basis_term({0, i}, {0, n_real + k - i}, Rational(1));
    return out;
}

}  // namespace uval
