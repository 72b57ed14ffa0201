#include "newthyper/grids.hpp"

#include <string>

namespace newthyper {

std::string family_name(Family f) {
    switch (f) {
        case Family::Linear: return "linear";
        case Family::Quadratic: return "quadratic";
        case Family::AskeyWilson: return "askey_wilson";
        case Family::BannaiIto: return "bannai_ito";
    }
    throw std::logic_error("unreachable");
}

Family family_from_name(const std::string& name) {
    if (name == "linear") return Family::Linear;
    if (name == "quadratic") return Family::Quadratic;
    if (name == "askey_wilson") return Family::AskeyWilson;
    if (name == "bannai_ito") return Family::BannaiIto;
    throw std::invalid_argument("unknown family '" + name + "'");
}

Rational grid_lambda(const GridParams& p, long n) {
    switch (p.family) {
        case Family::Linear:
            return Rational(n);
        case Family::Quadratic:
            return Rational(n) * (Rational(n) + p.alpha);
        case Family::AskeyWilson:
            return (1 - rational_pow(p.q, n)) * (p.alpha - rational_pow(p.q, -n));
        case Family::BannaiIto: {
            Rational s = Rational(n) + p.alpha;
            return (n % 2 == 0 ? s : -s) - p.alpha;
        }
    }
    throw std::logic_error("unreachable");
}

Rational grid_y(const GridParams& p, long n) {
    switch (p.family) {
        case Family::Linear:
            return p.gamma * n - p.tau1;
        case Family::Quadratic: {
            Rational den = Rational(n) + p.alpha + 1;
            if (den == 0)
                throw AdmissibilityError("quadratic family: alpha = " +
                                         rational_str(p.alpha) + " makes y_" +
                                         std::to_string(n) + " undefined");
            return (p.gamma * n - p.tau1) / den;
        }
        case Family::AskeyWilson: {
            Rational qmn = rational_pow(p.q, -n);
            Rational den = p.alpha - qmn / p.q;
            if (den == 0)
                throw AdmissibilityError("askey_wilson family: alpha - q^{-" +
                                         std::to_string(n + 1) + "} = 0");
            return (p.tau1 / (p.q - 1) * qmn + p.gamma * (qmn - 1)) / den;
        }
        case Family::BannaiIto: {
            if (n % 2 == 1) return p.gamma;
            Rational den = Rational(n) + 2 * p.alpha + 1;
            if (den == 0)
                throw AdmissibilityError("bannai_ito family: 2n+2alpha+1 = 0 at n = " +
                                         std::to_string(n / 2));
            return (p.gamma * n + p.tau1) / den;
        }
    }
    throw std::logic_error("unreachable");
}

Rational grid_node(const GridParams& p, long n) {
    switch (p.family) {
        case Family::Linear:
            return p.a1 * n + p.alpha * n * (n - 1);
        case Family::Quadratic:
            return p.a1 * n + p.beta * n * (n - 1);
        case Family::AskeyWilson:
            return (1 - rational_pow(p.q, -n)) *
                   (p.a1 * p.q / (p.q - 1) + p.nu * (rational_pow(p.q, n - 1) - 1));
        case Family::BannaiIto:
            return n % 2 == 0 ? Rational(p.nu * n) : Rational(p.a1 - p.nu * (n - 1));
    }
    throw std::logic_error("unreachable");
}

Rational grid_tau(const GridParams& p, long n) {
    if (n == 0) return Rational(0);
    switch (p.family) {
        case Family::Linear:
            return Rational(n) *
                   (p.tau1 + (p.a1 - p.gamma) * (n - 1) + p.alpha * (n - 1) * (n - 2));
        case Family::Quadratic:
            return grid_lambda(p, n) * grid_node(p, n - 1) +
                   Rational(n) * (p.tau1 - p.gamma * (n - 1));
        case Family::AskeyWilson:
        case Family::BannaiIto:
            // tau_n = lambda_n (a_{n-1} - y_{n-1}) = lambda_n zeta_{n-1}
            return grid_lambda(p, n) * (grid_node(p, n - 1) - grid_y(p, n - 1));
    }
    throw std::logic_error("unreachable");
}

namespace {

HyperData build_checked(const GridParams& p, long N, const char* what) {
    if (N < 0) throw AdmissibilityError("N must be nonnegative");
    const long hi = 2 * N + 2;

    // All divisions downstream reduce to lambda_n != 0 for used indices.
    for (long n = 1; n <= hi; ++n)
        if (grid_lambda(p, n) == 0)
            throw AdmissibilityError(std::string(what) + ": lambda_" +
                                     std::to_string(n) + " = 0");
    for (long n = 0; n <= N; ++n)
        for (long m = n + 1; m <= N + 1; ++m)
            if (grid_lambda(p, n) == grid_lambda(p, m))
                throw AdmissibilityError(std::string(what) + ": lambda_" +
                                         std::to_string(n) + " = lambda_" +
                                         std::to_string(m));
    for (long n = 1; n <= N; ++n)
        if (grid_tau(p, n) == 0)
            throw AdmissibilityError(std::string(what) + ": tau_" + std::to_string(n) +
                                     " = 0 at n <= N");

    return HyperData(SeqSpec::closed_form(p, SeqRole::Lambda),
                     SeqSpec::closed_form(p, SeqRole::Tau),
                     SeqSpec::closed_form(p, SeqRole::Node), N);
}

}  // namespace

HyperData build_linear(const GridParams& p, long N) {
    GridParams q = p;
    q.family = Family::Linear;
    return build_checked(q, N, "linear");
}

HyperData build_quadratic(const GridParams& p, long N) {
    GridParams q = p;
    q.family = Family::Quadratic;
    Rational kappa = (q.alpha + 2) * (q.tau1 + q.gamma * (q.alpha + 1));
    if (kappa == 0)
        throw AdmissibilityError("quadratic: kappa = (alpha+2)(tau1+gamma(alpha+1)) = 0");
    return build_checked(q, N, "quadratic");
}

HyperData build_askey_wilson(const GridParams& p, long N) {
    GridParams q = p;
    q.family = Family::AskeyWilson;
    if (q.q == 0 || q.q == 1 || q.q == -1)
        throw AdmissibilityError("askey_wilson: q must avoid {0, 1, -1}");
    return build_checked(q, N, "askey_wilson");
}

HyperData build_bannai_ito(const GridParams& p, long N) {
    GridParams q = p;
    q.family = Family::BannaiIto;
    Rational kappa = q.gamma * (2 * q.alpha + 1) - q.tau1;
    if (kappa == 0)
        throw AdmissibilityError("bannai_ito: kappa = gamma(2alpha+1) - tau1 = 0");
    return build_checked(q, N, "bannai_ito");
}

HyperData build_family(const GridParams& p, long N) {
    switch (p.family) {
        case Family::Linear: return build_linear(p, N);
        case Family::Quadratic: return build_quadratic(p, N);
        case Family::AskeyWilson: return build_askey_wilson(p, N);
        case Family::BannaiIto: return build_bannai_ito(p, N);
    }
    throw std::logic_error("unreachable");
}

}  // namespace newthyper
