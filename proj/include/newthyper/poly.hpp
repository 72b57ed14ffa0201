#ifndef NEWTHYPER_POLY_HPP
#define NEWTHYPER_POLY_HPP

#include "newthyper/rational.hpp"

#include <vector>

namespace newthyper {

// Dense polynomial over the monomial basis 1, x, x^2, ...
// Trailing zero coefficients are trimmed; the zero polynomial is empty.
class MonomialPoly {
public:
    MonomialPoly() = default;
    explicit MonomialPoly(std::vector<Rational> coeffs);
    static MonomialPoly constant(Rational c);
    static MonomialPoly x();

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(long k) const;

    Rational eval(const Rational& x0) const;

    MonomialPoly operator+(const MonomialPoly& o) const;
    MonomialPoly operator-(const MonomialPoly& o) const;
    MonomialPoly operator*(const MonomialPoly& o) const;
    MonomialPoly operator*(const Rational& s) const;
    bool operator==(const MonomialPoly& o) const = default;

private:
    std::vector<Rational> coeffs_;
};

// Polynomial expressed over the Newtonian basis phi_k of a node grid:
// p = sum_k c_k phi_k,  phi_k(x) = (x-a_0)...(x-a_{k-1}).
// The grid prefix a_0..a_{d-1} used by the coefficients is stored with
// the polynomial, so mixing grids is detectable.
class NewtonPoly {
public:
    NewtonPoly() = default;
    NewtonPoly(std::vector<Rational> grid, std::vector<Rational> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const std::vector<Rational>& grid() const { return grid_; }
    Rational coeff(long k) const;

    // Horner-style nested evaluation in the Newton form.
    Rational eval(const Rational& x0) const;

private:
    std::vector<Rational> grid_;
    std::vector<Rational> coeffs_;
};

// phi_n for the given nodes, as a monomial-basis polynomial.
MonomialPoly phi(const std::vector<Rational>& grid, long n);

MonomialPoly to_monomial(const NewtonPoly& p);

// Repeated synthetic division by (x - a_k); needs deg(p)+1 grid nodes.
NewtonPoly from_monomial(const MonomialPoly& p, const std::vector<Rational>& grid);

}  // namespace newthyper

#endif
