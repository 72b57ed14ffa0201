#include "newthyper/construct.hpp"

#include <stdexcept>

namespace newthyper {

namespace {

std::vector<Rational> node_prefix(const HyperData& data, long n) {
    std::vector<Rational> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) grid.push_back(data.a(k));
    return grid;
}

// Row n of W under the requested normalization, via the two-term recurrence.
std::vector<Rational> w_row(const HyperData& data, Normalization norm, long n) {
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
    if (norm == Normalization::HypLike) {
        row[0] = 1;
        for (long s = 0; s < n; ++s)
            row[static_cast<std::size_t>(s) + 1] =
                row[static_cast<std::size_t>(s)] *
                (data.lambda(n) - data.lambda(s)) / data.tau(s + 1);
    } else {
        row[static_cast<std::size_t>(n)] = 1;
        for (long s = n - 1; s >= 0; --s)
            row[static_cast<std::size_t>(s)] =
                row[static_cast<std::size_t>(s) + 1] * data.tau(s + 1) /
                (data.lambda(n) - data.lambda(s));
    }
    return row;
}

}  // namespace

ExpansionMatrix expansion_matrix(const HyperData& data, Normalization norm, long N) {
    ExpansionMatrix m{norm, {}};
    m.W.reserve(static_cast<std::size_t>(N) + 1);
    for (long n = 0; n <= N; ++n) m.W.push_back(w_row(data, norm, n));
    return m;
}

NewtonPoly build_P(const HyperData& data, long n) {
    return NewtonPoly(node_prefix(data, n), w_row(data, Normalization::Monic, n));
}

NewtonPoly build_P_hyplike(const HyperData& data, long n) {
    return NewtonPoly(node_prefix(data, n), w_row(data, Normalization::HypLike, n));
}

NewtonPoly apply_L(const HyperData& data, const NewtonPoly& p) {
    const long d = p.degree();
    for (long k = 0; k < d; ++k)
        if (p.grid()[static_cast<std::size_t>(k)] != data.a(k))
            throw std::invalid_argument("apply_L: polynomial grid does not match data at node " +
                                        std::to_string(k));
    if (p.is_zero()) return NewtonPoly(p.grid(), {});
    std::vector<Rational> out(static_cast<std::size_t>(d) + 1, Rational(0));
    for (long k = 0; k <= d; ++k) {
        out[static_cast<std::size_t>(k)] = data.lambda(k) * p.coeff(k);
        if (k + 1 <= d)
            out[static_cast<std::size_t>(k)] += data.tau(k + 1) * p.coeff(k + 1);
    }
    return NewtonPoly(p.grid(), std::move(out));
}

RecurrenceData recurrence_coeffs(const HyperData& data) {
    const long N = data.N();
    const long top = data.max_index() - 1;  // b_n, u_n need index n+1

    RecurrenceData rc;
    const long b_hi = std::min(N, top);
    for (long n = 0; n <= b_hi; ++n) {
        Rational b = data.a(n) - data.tau(n + 1) / (data.lambda(n + 1) - data.lambda(n));
        if (n >= 1) b += data.tau(n) / (data.lambda(n) - data.lambda(n - 1));
        rc.b.push_back(std::move(b));
    }

    rc.u.push_back(Rational(0));  // placeholder, u_0 does not exist
    rc.h.push_back(Rational(1));
    const long u_hi = std::min(N, top);
    for (long n = 1; n <= u_hi; ++n) {
        Rational dl = data.lambda(n) - data.lambda(n - 1);
        Rational u = data.tau(n) * (data.a(n - 1) - rc.b_at(n)) / dl;
        if (n >= 2)
            u += data.tau(n) * data.tau(n - 1) /
                 (dl * (data.lambda(n) - data.lambda(n - 2)));
        u -= data.tau(n) * data.tau(n + 1) /
             ((data.lambda(n + 1) - data.lambda(n)) *
              (data.lambda(n + 1) - data.lambda(n - 1)));
        rc.h.push_back(rc.h.back() * u);
        rc.u.push_back(std::move(u));
    }
    return rc;
}

MonomialPoly three_term_residual(const HyperData& data, const RecurrenceData& rc, long n) {
    MonomialPoly Pn = to_monomial(build_P(data, n));
    MonomialPoly res = to_monomial(build_P(data, n + 1)) + Pn * rc.b_at(n) -
                       MonomialPoly::x() * Pn;
    if (n >= 1) res = res + to_monomial(build_P(data, n - 1)) * rc.u_at(n);
    return res;
}

DualSystem dual_system(const HyperData& data) {
    const long N = data.N();
    for (long i = 0; i <= N; ++i)
        for (long k = i + 1; k <= N; ++k)
            if (data.a(i) == data.a(k))
                throw std::domain_error("dual_system: repeated nodes a_" + std::to_string(i) +
                                        " = a_" + std::to_string(k));

    DualSystem ds;
    for (long k = 0; k < N; ++k) ds.dual_grid.push_back(data.lambda(k));

    for (long n = 0; n <= N; ++n) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
        Rational c(1);  // (a_n-a_0)...(a_n-a_{s-1}) / (tau_1...tau_s)
        coeffs[0] = c;
        for (long s = 1; s <= n; ++s) {
            c *= (data.a(n) - data.a(s - 1)) / data.tau(s);
            coeffs[static_cast<std::size_t>(s)] = c;
        }
        ds.dual_polys.push_back(to_monomial(NewtonPoly(ds.dual_grid, std::move(coeffs))));
    }
    return ds;
}

}  // namespace newthyper
