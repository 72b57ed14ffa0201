#ifndef NEWTHYPER_MOMENTS_HPP
#define NEWTHYPER_MOMENTS_HPP

#include "newthyper/construct.hpp"
#include "newthyper/seq.hpp"

#include <string>
#include <vector>

namespace newthyper {

// psi_n^{(0)} = (-1)^n tau_1...tau_n / (lambda_1...lambda_n)
Rational psi_zero(const HyperData& data, long n);

// Generalized and reduced moments over the square 0 <= n,k <= N, filled by
// the column recursion psi_n^{(k+1)} = psi_{n+1}^{(k)} + (a_n-a_k) psi_n^{(k)}
// starting from the psi_n^{(0)} closed form. Needs sequence indices up to 2N.
struct MomentTable {
    long N = 0;
    std::vector<std::vector<Rational>> psi;  // psi[n][k]
    std::vector<std::vector<Rational>> Q;    // Q[n][k]; empty when !q_defined
    bool q_defined = true;                   // false if some psi_n^{(0)} or psi_0^{(k)} is 0
    std::vector<Rational> zeta;              // zeta_0 .. (as far as indices allow)
    std::vector<Rational> y;

    const Rational& psi_at(long n, long k) const {
        return psi[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    const Rational& q_at(long n, long k) const {
        return Q[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
};

MomentTable moment_table(const HyperData& data);

struct ConditionViolation {
    long n, k;
    Rational residual;
};

// The symmetry conditions (lambda_n-lambda_k) psi_n^{(k)}
// + tau_n psi_{n-1}^{(k)} - tau_k psi_n^{(k-1)} = 0, 1 <= k <= n <= N,
// plus the specialized k=1 and k=2 forms in the y variables.
struct ConditionReport {
    std::vector<ConditionViolation> violations;
    std::vector<Rational> k1_residuals;  // n = 1..N
    std::vector<Rational> k2_residuals;  // n = 1..N-1
    bool pass() const;
};

ConditionReport check_conditions(const HyperData& data);

struct QRecurrenceViolation {
    int which;  // 1 or 2
    long n, k;
    Rational residual;
};

struct QRecurrenceReport {
    std::vector<QRecurrenceViolation> violations;
    bool checked = true;  // false when Q is undefined on this data
    bool pass() const { return checked && violations.empty(); }
};

// Residuals of the two three-term recurrences in n satisfied by Q_n^{(k)}.
QRecurrenceReport q_recurrences_check(const MomentTable& table, const HyperData& data);

struct MomentFunctional {
    std::vector<Rational> c;       // monomial moments c_0 .. c_{2N}
    std::vector<Rational> H;       // generalized-moment determinants H_0 .. H_{N+1}
    std::vector<Rational> hankel;  // classical Hankel determinants Delta_0 .. Delta_N
    bool nondegenerate = true;     // all H_n != 0 over the computed range
};

MomentFunctional monomial_moments(const HyperData& data);

struct GramReport {
    std::vector<std::vector<Rational>> gram;  // <sigma, P_n P_m>, n,m <= N
    bool diagonal = true;                     // all off-diagonal entries are 0
    bool diag_matches_h = true;               // gram[n][n] == h_n
    bool pass() const { return diagonal && diag_matches_h; }
};

// Independent orthogonality oracle through the monomial moments.
GramReport gram_check(const HyperData& data);

struct FiniteWeights {
    std::vector<Rational> nodes;  // a_0 .. a_N
    std::vector<Rational> w;
};

// Discrete weights of the truncated case tau_{N+1} = 0:
// w_s = u_1...u_N / (P'_{N+1}(a_s) P_N(a_s)) with P_{N+1} = phi_{N+1}.
FiniteWeights finite_weights(const HyperData& data);

// Exact determinant of a square rational matrix (Gaussian elimination).
Rational rational_det(std::vector<std::vector<Rational>> m);

}  // namespace newthyper

#endif
