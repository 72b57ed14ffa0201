#ifndef NEWTHYPER_TEST_FIXTURES_HPP
#define NEWTHYPER_TEST_FIXTURES_HPP

#include "newthyper/grids.hpp"
#include "newthyper/poly.hpp"
#include "newthyper/seq.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace newthyper::testing {

using Rng = std::mt19937_64;

inline Rational rand_rational(Rng& rng, long max_num = 6, long max_den = 3) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational rand_nonzero(Rng& rng, long max_num = 6, long max_den = 3) {
    for (;;) {
        Rational r = rand_rational(rng, max_num, max_den);
        if (r != 0) return r;
    }
}

inline Rational rand_q(Rng& rng) {
    for (;;) {
        std::uniform_int_distribution<long> num(-4, 4);
        std::uniform_int_distribution<long> den(1, 4);
        Rational q(num(rng), den(rng));
        if (q != 0 && q != 1 && q != -1) return q;
    }
}

inline GridParams rand_params(Family family, Rng& rng) {
    GridParams p;
    p.family = family;
    p.tau1 = rand_nonzero(rng);
    p.a1 = rand_rational(rng);
    p.gamma = rand_rational(rng);
    p.alpha = rand_rational(rng, 4, 2);
    p.beta = rand_rational(rng, 4, 2);
    p.nu = rand_rational(rng, 4, 2);
    if (family == Family::AskeyWilson) p.q = rand_q(rng);
    return p;
}

// Draws parameters until the family constructor accepts them.
inline HyperData draw_admissible(Family family, long N, Rng& rng,
                                 GridParams* out_params = nullptr) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        GridParams p = rand_params(family, rng);
        try {
            HyperData data = build_family(p, N);
            if (out_params) *out_params = p;
            return data;
        } catch (const AdmissibilityError&) {
        }
    }
    throw std::runtime_error("draw_admissible: no admissible draw in 1000 attempts");
}

// Generic non-orthogonal data: lambda_n = n, random nonzero tau, random grid.
// Generically violates the orthogonality conditions.
inline HyperData adversarial_data(long N, Rng& rng) {
    const long len = 2 * N + 3;
    std::vector<Rational> lambda, tau, a;
    for (long n = 0; n < len; ++n) {
        lambda.push_back(Rational(n));
        tau.push_back(n == 0 ? Rational(0) : rand_nonzero(rng));
        a.push_back(n == 0 ? Rational(0) : rand_rational(rng));
    }
    return HyperData(SeqSpec::explicit_values(lambda), SeqSpec::explicit_values(tau),
                     SeqSpec::explicit_values(a), N);
}

// Solves the square system A x = rhs exactly; throws if A is singular.
inline std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A,
                                          std::vector<Rational> rhs) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && A[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::runtime_error("solve_linear: singular matrix");
        std::swap(A[pivot], A[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col] == 0) continue;
            Rational f = A[row][col] / A[col][col];
            for (std::size_t j = col; j < n; ++j) A[row][j] -= f * A[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / A[i][i];
    return x;
}

// Independent oracle: the monic degree-n eigenpolynomial of the differential
// operator -gamma x D^2 + (x - tau1) D, found by linear algebra over the
// monomial basis. The operator maps x^k to k x^k - k(tau1 + gamma(k-1)) x^{k-1},
// so the eigenvalue for degree n is n.
inline MonomialPoly laguerre_eigenpoly(const Rational& gamma, const Rational& tau1,
                                       long n) {
    if (n == 0) return MonomialPoly::constant(Rational(1));
    const std::size_t m = static_cast<std::size_t>(n);
    // (M - n I) p = 0 with p_n = 1: solve the leading n x n block against
    // the column contributed by the fixed top coefficient.
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> rhs(m, Rational(0));
    for (std::size_t row = 0; row < m; ++row) {
        long k = static_cast<long>(row);
        A[row][row] = Rational(k) - Rational(n);
        if (row + 1 < m) {
            long j = k + 1;
            A[row][row + 1] = -Rational(j) * (tau1 + gamma * (j - 1));
        } else {
            rhs[row] = Rational(n) * (tau1 + gamma * (n - 1));
        }
    }
    std::vector<Rational> coeffs = solve_linear(std::move(A), std::move(rhs));
    coeffs.push_back(Rational(1));
    return MonomialPoly(std::move(coeffs));
}

}  // namespace newthyper::testing

#endif
