#include "newthyper/poly.hpp"

#include <stdexcept>

namespace newthyper {

namespace {

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

MonomialPoly::MonomialPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

MonomialPoly MonomialPoly::constant(Rational c) { return MonomialPoly({std::move(c)}); }

MonomialPoly MonomialPoly::x() { return MonomialPoly({Rational(0), Rational(1)}); }

Rational MonomialPoly::coeff(long k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational MonomialPoly::eval(const Rational& x0) const {
    Rational v(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x0 + *it;
    return v;
}

MonomialPoly MonomialPoly::operator+(const MonomialPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return MonomialPoly(std::move(c));
}

MonomialPoly MonomialPoly::operator-(const MonomialPoly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return MonomialPoly(std::move(c));
}

MonomialPoly MonomialPoly::operator*(const MonomialPoly& o) const {
    if (is_zero() || o.is_zero()) return MonomialPoly();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return MonomialPoly(std::move(c));
}

MonomialPoly MonomialPoly::operator*(const Rational& s) const {
    std::vector<Rational> c = coeffs_;
    for (auto& v : c) v *= s;
    return MonomialPoly(std::move(c));
}

NewtonPoly::NewtonPoly(std::vector<Rational> grid, std::vector<Rational> coeffs)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
    trim(coeffs_);
    if (!coeffs_.empty() &&
        static_cast<long>(grid_.size()) < static_cast<long>(coeffs_.size()) - 1)
        throw std::invalid_argument("NewtonPoly: grid too short for degree");
}

Rational NewtonPoly::coeff(long k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational NewtonPoly::eval(const Rational& x0) const {
    if (coeffs_.empty()) return Rational(0);
    Rational v = coeffs_.back();
    for (long k = degree() - 1; k >= 0; --k)
        v = coeffs_[static_cast<std::size_t>(k)] +
            (x0 - grid_[static_cast<std::size_t>(k)]) * v;
    return v;
}

MonomialPoly phi(const std::vector<Rational>& grid, long n) {
    if (n < 0) throw std::out_of_range("phi: n must be nonnegative");
    if (n > static_cast<long>(grid.size()))
        throw std::out_of_range("phi: grid has only " + std::to_string(grid.size()) +
                                " nodes, need " + std::to_string(n));
    MonomialPoly p = MonomialPoly::constant(Rational(1));
    for (long k = 0; k < n; ++k)
        p = p * (MonomialPoly::x() - MonomialPoly::constant(grid[static_cast<std::size_t>(k)]));
    return p;
}

MonomialPoly to_monomial(const NewtonPoly& p) {
    if (p.is_zero()) return MonomialPoly();
    MonomialPoly acc = MonomialPoly::constant(p.coeffs().back());
    for (long k = p.degree() - 1; k >= 0; --k) {
        const Rational& node = p.grid()[static_cast<std::size_t>(k)];
        acc = acc * (MonomialPoly::x() - MonomialPoly::constant(node)) +
              MonomialPoly::constant(p.coeff(k));
    }
    return acc;
}

NewtonPoly from_monomial(const MonomialPoly& p, const std::vector<Rational>& grid) {
    if (p.is_zero()) return NewtonPoly(grid, {});
    const long d = p.degree();
    if (static_cast<long>(grid.size()) < d + 1)
        throw std::invalid_argument("from_monomial: need " + std::to_string(d + 1) +
                                    " grid nodes, have " + std::to_string(grid.size()));
    std::vector<Rational> work = p.coeffs();
    std::vector<Rational> newton;
    newton.reserve(static_cast<std::size_t>(d) + 1);
    for (long j = 0; j <= d; ++j) {
        const Rational& node = grid[static_cast<std::size_t>(j)];
        // synthetic division of `work` by (x - node); remainder is c_j
        Rational carry(0);
        for (long k = static_cast<long>(work.size()) - 1; k >= 0; --k) {
            Rational b = work[static_cast<std::size_t>(k)] + node * carry;
            work[static_cast<std::size_t>(k)] = carry;
            carry = std::move(b);
        }
        newton.push_back(carry);
        work.pop_back();  // quotient has one coefficient fewer
        if (work.empty()) break;
    }
    return NewtonPoly(grid, std::move(newton));
}

}  // namespace newthyper
