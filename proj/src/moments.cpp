#include "newthyper/moments.hpp"

#include "newthyper/poly.hpp"

#include <stdexcept>

namespace newthyper {

Rational psi_zero(const HyperData& data, long n) {
    Rational v(1);
    for (long i = 1; i <= n; ++i) {
        if (data.lambda(i) == 0)
            throw std::domain_error("psi_zero: lambda_" + std::to_string(i) + " = 0");
        v *= -data.tau(i) / data.lambda(i);
    }
    return v;
}

namespace {

void require_depth(const HyperData& data) {
    if (data.max_index() < 2 * data.N())
        throw std::invalid_argument(
            "moment computations at order N = " + std::to_string(data.N()) +
            " need sequence indices up to 2N = " + std::to_string(2 * data.N()));
}

// Trapezoidal psi table: col[k][n] = psi_n^{(k)} for n = 0 .. 2N-k.
std::vector<std::vector<Rational>> psi_trapezoid(const HyperData& data) {
    const long N = data.N();
    std::vector<std::vector<Rational>> col(static_cast<std::size_t>(N) + 1);
    col[0].reserve(static_cast<std::size_t>(2 * N) + 1);
    for (long n = 0; n <= 2 * N; ++n) col[0].push_back(psi_zero(data, n));
    for (long k = 0; k < N; ++k) {
        const auto& prev = col[static_cast<std::size_t>(k)];
        auto& next = col[static_cast<std::size_t>(k) + 1];
        for (long n = 0; n <= 2 * N - k - 1; ++n)
            next.push_back(prev[static_cast<std::size_t>(n) + 1] +
                           (data.a(n) - data.a(k)) * prev[static_cast<std::size_t>(n)]);
    }
    return col;
}

std::vector<std::vector<Rational>> psi_square(const HyperData& data) {
    require_depth(data);
    const long N = data.N();
    auto col = psi_trapezoid(data);
    std::vector<std::vector<Rational>> psi(
        static_cast<std::size_t>(N) + 1,
        std::vector<Rational>(static_cast<std::size_t>(N) + 1));
    for (long n = 0; n <= N; ++n)
        for (long k = 0; k <= N; ++k)
            psi[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                col[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
    return psi;
}

}  // namespace

MomentTable moment_table(const HyperData& data) {
    const long N = data.N();
    MomentTable t;
    t.N = N;
    t.psi = psi_square(data);

    for (long n = 0; n <= N && n + 1 <= data.max_index(); ++n) {
        if (data.lambda(n + 1) == 0) break;
        t.zeta.push_back(data.zeta(n));
        t.y.push_back(data.y(n));
    }

    for (long n = 0; n <= N && t.q_defined; ++n)
        if (t.psi_at(n, 0) == 0 || t.psi_at(0, n) == 0) t.q_defined = false;
    if (t.q_defined) {
        t.Q.assign(static_cast<std::size_t>(N) + 1,
                   std::vector<Rational>(static_cast<std::size_t>(N) + 1));
        for (long n = 0; n <= N; ++n)
            for (long k = 0; k <= N; ++k)
                t.Q[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
                    t.psi_at(n, k) / (t.psi_at(n, 0) * t.psi_at(0, k));
    }
    return t;
}

bool ConditionReport::pass() const { return violations.empty(); }

ConditionReport check_conditions(const HyperData& data) {
    const long N = data.N();
    auto psi = psi_square(data);
    auto at = [&](long n, long k) -> const Rational& {
        return psi[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    };

    ConditionReport report;
    for (long n = 1; n <= N; ++n)
        for (long k = 1; k <= n; ++k) {
            Rational r = (data.lambda(n) - data.lambda(k)) * at(n, k) +
                         data.tau(n) * at(n - 1, k) - data.tau(k) * at(n, k - 1);
            if (r != 0) report.violations.push_back({n, k, std::move(r)});
        }

    // k=1 specialization: lambda_n y_{n-1} + (lambda_1-lambda_n) y_n + tau_1
    for (long n = 1; n <= N && n + 1 <= data.max_index(); ++n)
        report.k1_residuals.push_back(data.lambda(n) * data.y(n - 1) +
                                      (data.lambda(1) - data.lambda(n)) * data.y(n) +
                                      data.tau(1));

    // k=2 specialization in the y variables
    for (long n = 1; n <= N - 1 && n + 2 <= data.max_index(); ++n) {
        Rational lhs = (data.y(n + 1) - data.y(n)) * (data.lambda(n) - data.lambda(2)) * data.a(n) -
                       data.lambda(n) * (data.y(n) - data.y(n - 1)) * data.a(n - 1);
        Rational rhs = data.lambda(n) * data.y(n) * (data.y(n + 1) - data.y(n - 1)) +
                       data.a(1) * data.lambda(n) * (data.y(n - 1) - data.y(n)) -
                       data.lambda(2) * data.y(n) * (data.y(n + 1) - data.y(1));
        report.k2_residuals.push_back(lhs - rhs);
    }
    return report;
}

QRecurrenceReport q_recurrences_check(const MomentTable& t, const HyperData& data) {
    QRecurrenceReport report;
    if (!t.q_defined) {
        report.checked = false;
        return report;
    }
    const long N = t.N;
    for (long n = 1; n <= N - 1; ++n) {
        Rational zn = data.tau(n + 1) / data.lambda(n + 1);
        for (long k = 1; k <= N; ++k) {
            Rational r = zn * (data.lambda(k) - data.lambda(n + 1)) * t.q_at(n + 1, k) +
                         (data.tau(n + 1) - data.tau(k) +
                          (data.lambda(n) - data.lambda(k)) * (data.a(n) - data.a(k - 1))) *
                             t.q_at(n, k) +
                         data.lambda(n) * (data.a(k - 1) - data.a(n)) * t.q_at(n - 1, k);
            if (r != 0) report.violations.push_back({1, n, k, std::move(r)});
        }
        for (long k = 0; k <= N - 1; ++k) {
            Rational r = zn * (data.lambda(n) - data.lambda(k + 1)) * t.q_at(n + 1, k) +
                         (data.tau(k + 1) - data.tau(n) +
                          (data.lambda(n) - data.lambda(k + 1)) * (data.a(k) - data.a(n))) *
                             t.q_at(n, k) +
                         data.lambda(n) * (data.a(n - 1) - data.a(k)) * t.q_at(n - 1, k);
            if (r != 0) report.violations.push_back({2, n, k, std::move(r)});
        }
    }
    return report;
}

Rational rational_det(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
        }
    }
    return det;
}

MomentFunctional monomial_moments(const HyperData& data) {
    require_depth(data);
    const long N = data.N();

    std::vector<Rational> grid;
    for (long k = 0; k <= 2 * N; ++k) grid.push_back(data.a(k));

    std::vector<Rational> psi0;
    for (long n = 0; n <= 2 * N; ++n) psi0.push_back(psi_zero(data, n));

    MomentFunctional f;
    for (long j = 0; j <= 2 * N; ++j) {
        // x^j = sum_s B_{js} phi_s; c_j = sum_s B_{js} psi_s^{(0)}
        std::vector<Rational> mono(static_cast<std::size_t>(j) + 1, Rational(0));
        mono.back() = 1;
        NewtonPoly xj = from_monomial(MonomialPoly(std::move(mono)), grid);
        Rational c(0);
        for (long s = 0; s <= xj.degree(); ++s)
            c += xj.coeff(s) * psi0[static_cast<std::size_t>(s)];
        f.c.push_back(std::move(c));
    }

    auto psi = psi_square(data);
    for (long n = 0; n <= N + 1; ++n) {
        std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                             std::vector<Rational>(static_cast<std::size_t>(n)));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    psi[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        Rational d = rational_det(std::move(m));
        if (d == 0) f.nondegenerate = false;
        f.H.push_back(std::move(d));
    }

    for (long n = 0; n <= N; ++n) {
        std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n) + 1,
                                             std::vector<Rational>(static_cast<std::size_t>(n) + 1));
        for (long i = 0; i <= n; ++i)
            for (long k = 0; k <= n; ++k)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    f.c[static_cast<std::size_t>(i + k)];
        f.hankel.push_back(rational_det(std::move(m)));
    }
    return f;
}

GramReport gram_check(const HyperData& data) {
    const long N = data.N();
    MomentFunctional f = monomial_moments(data);
    RecurrenceData rc = recurrence_coeffs(data);

    std::vector<MonomialPoly> P;
    for (long n = 0; n <= N; ++n) P.push_back(to_monomial(build_P(data, n)));

    GramReport report;
    report.gram.assign(static_cast<std::size_t>(N) + 1,
                       std::vector<Rational>(static_cast<std::size_t>(N) + 1));
    for (long n = 0; n <= N; ++n)
        for (long m = n; m <= N; ++m) {
            MonomialPoly prod = P[static_cast<std::size_t>(n)] * P[static_cast<std::size_t>(m)];
            Rational v(0);
            for (long j = 0; j <= prod.degree(); ++j)
                v += prod.coeff(j) * f.c[static_cast<std::size_t>(j)];
            if (n != m && v != 0) report.diagonal = false;
            if (n == m && v != rc.h_at(n)) report.diag_matches_h = false;
            report.gram[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] = v;
            report.gram[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = std::move(v);
        }
    return report;
}

FiniteWeights finite_weights(const HyperData& data) {
    const long N = data.N();
    if (data.max_index() < N + 1 || data.tau(N + 1) != 0)
        throw std::domain_error("finite_weights: requires tau_{N+1} = 0");
    for (long n = 1; n <= N; ++n)
        if (data.tau(n) == 0)
            throw std::domain_error("finite_weights: tau_" + std::to_string(n) +
                                    " = 0 before N+1");
    for (long i = 0; i <= N; ++i)
        for (long k = i + 1; k <= N; ++k)
            if (data.a(i) == data.a(k))
                throw std::domain_error("finite_weights: repeated nodes a_" +
                                        std::to_string(i) + " = a_" + std::to_string(k));

    RecurrenceData rc = recurrence_coeffs(data);
    NewtonPoly PN = build_P(data, N);

    FiniteWeights fw;
    for (long s = 0; s <= N; ++s) fw.nodes.push_back(data.a(s));
    for (long s = 0; s <= N; ++s) {
        // P'_{N+1}(a_s) for the monic product phi_{N+1}
        Rational dP(1);
        for (long j = 0; j <= N; ++j)
            if (j != s) dP *= fw.nodes[static_cast<std::size_t>(s)] -
                              fw.nodes[static_cast<std::size_t>(j)];
        fw.w.push_back(rc.h_at(N) / (dP * PN.eval(fw.nodes[static_cast<std::size_t>(s)])));
    }
    return fw;
}

}  // namespace newthyper
