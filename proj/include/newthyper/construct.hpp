#ifndef NEWTHYPER_CONSTRUCT_HPP
#define NEWTHYPER_CONSTRUCT_HPP

#include "newthyper/poly.hpp"
#include "newthyper/seq.hpp"

#include <vector>

namespace newthyper {

enum class Normalization { Monic, HypLike };

// Triangular table of expansion coefficients W_{n,s} of P_n over phi_s,
// 0 <= s <= n <= N. Rows are built with the two-term ratio
// W_{n,s+1}/W_{n,s} = (lambda_n - lambda_s)/tau_{s+1}.
struct ExpansionMatrix {
    Normalization norm;
    std::vector<std::vector<Rational>> W;  // W[n][s]

    const Rational& at(long n, long s) const {
        return W[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
    }
};

ExpansionMatrix expansion_matrix(const HyperData& data, Normalization norm, long N);

// Monic eigenpolynomial P_n in the Newton basis of data's node grid.
NewtonPoly build_P(const HyperData& data, long n);

// Same polynomial under the hypergeometric-like normalization W_{n0} = 1.
NewtonPoly build_P_hyplike(const HyperData& data, long n);

// Two-diagonal action L phi_n = lambda_n phi_n + tau_n phi_{n-1},
// extended linearly.
NewtonPoly apply_L(const HyperData& data, const NewtonPoly& p);

struct RecurrenceData {
    std::vector<Rational> b;  // b_0 .. b_{N-1}
    std::vector<Rational> u;  // u[0] unused; u_1 .. u_N
    std::vector<Rational> h;  // h_0 = 1, h_n = u_1 ... u_n

    const Rational& b_at(long n) const { return b[static_cast<std::size_t>(n)]; }
    const Rational& u_at(long n) const { return u[static_cast<std::size_t>(n)]; }
    const Rational& h_at(long n) const { return h[static_cast<std::size_t>(n)]; }
};

// b_n and u_n from the explicit formulas; products carrying tau_0 are zero.
RecurrenceData recurrence_coeffs(const HyperData& data);

// Residual P_{n+1} + b_n P_n + u_{n+1} P_{n-1} - x P_n in monomial form
// (the u term is absent at n = 0).
MonomialPoly three_term_residual(const HyperData& data, const RecurrenceData& rc, long n);

struct DualSystem {
    std::vector<Rational> dual_grid;        // lambda_0 .. lambda_{N-1} as nodes
    std::vector<MonomialPoly> dual_polys;   // P*_0 .. P*_N
};

// Dual polynomials over the basis phi~_s(x) = (x-lambda_0)...(x-lambda_{s-1}).
// Requires pairwise distinct nodes a_0..a_N.
DualSystem dual_system(const HyperData& data);

}  // namespace newthyper

#endif
