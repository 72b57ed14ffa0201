#include "newthyper/classify.hpp"

#include <optional>
#include <stdexcept>

namespace newthyper {

std::string spectrum_name(SpectrumType t) {
    switch (t) {
        case SpectrumType::Linear: return "linear";
        case SpectrumType::Quadratic: return "quadratic";
        case SpectrumType::QGrid: return "q_grid";
        case SpectrumType::BannaiIto: return "bannai_ito";
        case SpectrumType::Unclassified: return "unclassified";
    }
    throw std::logic_error("unreachable");
}

std::string grid_name(GridType t) {
    switch (t) {
        case GridType::Degenerate: return "degenerate";
        case GridType::Intermediate: return "intermediate";
        case GridType::Generic: return "generic";
        case GridType::Unclassified: return "unclassified";
    }
    throw std::logic_error("unreachable");
}

namespace {

const Rational& at(const std::vector<Rational>& v, long n) {
    return v[static_cast<std::size_t>(n)];
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    using boost::multiprecision::sqrt;
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    Integer sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

std::optional<SpectrumFit> fit_affine(const std::vector<Rational>& l) {
    const Rational& slope = at(l, 1);
    for (long n = 0; n < static_cast<long>(l.size()); ++n)
        if (at(l, n) != slope * n) return std::nullopt;
    SpectrumFit fit;
    fit.type = SpectrumType::Linear;
    fit.params["slope"] = slope;
    return fit;
}

std::optional<SpectrumFit> fit_quadratic(const std::vector<Rational>& l) {
    Rational c1 = (at(l, 2) - 2 * at(l, 1)) / 2;
    Rational c2 = at(l, 1) - c1;
    if (c1 == 0) return std::nullopt;
    for (long n = 0; n < static_cast<long>(l.size()); ++n)
        if (at(l, n) != c1 * n * n + c2 * n) return std::nullopt;
    SpectrumFit fit;
    fit.type = SpectrumType::Quadratic;
    fit.params["C1"] = c1;
    fit.params["C2"] = c2;
    fit.params["alpha"] = c2 / c1;  // after scaling to lambda_n = n(n+alpha)
    return fit;
}

std::optional<SpectrumFit> fit_bannai_ito(const std::vector<Rational>& l) {
    // lambda_n = (-1)^n (C1 n + C2) + C0 with C0 = -C2 forced by lambda_0 = 0
    Rational c1 = at(l, 2) / 2;
    if (c1 == 0) return std::nullopt;
    Rational c2 = (-at(l, 1) - c1) / 2;
    for (long n = 0; n < static_cast<long>(l.size()); ++n) {
        Rational v = c1 * n + c2;
        if (n % 2 == 1) v = -v;
        if (at(l, n) != v - c2) return std::nullopt;
    }
    SpectrumFit fit;
    fit.type = SpectrumType::BannaiIto;
    fit.params["C1"] = c1;
    fit.params["C2"] = c2;
    fit.params["C0"] = -c2;
    fit.params["alpha"] = c2 / c1;
    return fit;
}

std::optional<SpectrumFit> fit_q_grid(const std::vector<Rational>& l) {
    // second differences of C1 q^n + C2 q^{-n} + C0 satisfy
    // g_{n+1} + g_{n-1} = (q + 1/q) g_n
    const long m = static_cast<long>(l.size());
    std::vector<Rational> g;
    for (long n = 0; n + 2 < m; ++n)
        g.push_back(at(l, n + 2) - 2 * at(l, n + 1) + at(l, n));

    std::optional<Rational> s;
    for (long n = 1; n + 1 < static_cast<long>(g.size()); ++n)
        if (at(g, n) != 0) {
            s = (at(g, n + 1) + at(g, n - 1)) / at(g, n);
            break;
        }
    if (!s) return std::nullopt;

    auto disc = rational_sqrt(*s * *s - 4);
    if (!disc) return std::nullopt;
    Rational q = (*s + *disc) / 2;
    if (q == 0 || q == 1 || q == -1) return std::nullopt;

    // solve A + B = g_0, A q + B/q = g_1 for g_n = A q^n + B q^{-n}
    Rational A = (at(g, 1) - at(g, 0) / q) / (q - 1 / q);
    Rational B = at(g, 0) - A;
    Rational qm1sq = (q - 1) * (q - 1);
    Rational c1 = A / qm1sq;
    Rational c2 = B * q * q / qm1sq;
    Rational c0 = -(c1 + c2);
    for (long n = 0; n < m; ++n)
        if (at(l, n) != c1 * rational_pow(q, n) + c2 * rational_pow(q, -n) + c0)
            return std::nullopt;

    SpectrumFit fit;
    fit.type = SpectrumType::QGrid;
    fit.params["C1"] = c1;
    fit.params["C2"] = c2;
    fit.params["C0"] = c0;
    fit.params["q"] = q;
    fit.q_candidates = {q, 1 / q};
    if (c1 == 0 || c2 == 0) fit.flags.push_back("q_hahn_alpha_zero");
    return fit;
}

}  // namespace

SpectrumFit detect_spectrum(const std::vector<Rational>& l) {
    if (l.size() < 6)
        throw std::invalid_argument("detect_spectrum: need at least 6 values");
    if (at(l, 0) != 0)
        throw std::invalid_argument("detect_spectrum: lambda_0 must be 0");
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t k = i + 1; k < l.size(); ++k)
            if (l[i] == l[k])
                throw std::invalid_argument("detect_spectrum: values must be distinct");

    if (auto fit = fit_affine(l)) return *fit;
    if (auto fit = fit_quadratic(l)) return *fit;
    if (auto fit = fit_bannai_ito(l)) return *fit;
    if (auto fit = fit_q_grid(l)) return *fit;
    return SpectrumFit{};
}

namespace {

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// a_n = a1 n + curv n(n-1); used for both the quadratic-spectrum grids and
// the linear-spectrum sublabels.
std::optional<GridFit> fit_poly_grid(const std::vector<Rational>& a) {
    Rational a1 = at(a, 1);
    Rational curv = (at(a, 2) - 2 * a1) / 2;
    for (long n = 0; n < static_cast<long>(a.size()); ++n)
        if (at(a, n) != a1 * n + curv * n * (n - 1)) return std::nullopt;
    GridFit fit;
    fit.type = curv == 0 ? GridType::Intermediate : GridType::Generic;
    fit.params["a1"] = a1;
    fit.params["curvature"] = curv;
    return fit;
}

std::optional<GridFit> fit_q_grid_nodes(const std::vector<Rational>& a, const Rational& q) {
    // a_n = (1 - q^{-n})(B + nu (q^{n-1} - 1)), B = a_1 q / (q-1)
    Rational B = at(a, 1) * q / (q - 1);
    Rational denom = (1 - rational_pow(q, -2)) * (q - 1);
    if (denom == 0) return std::nullopt;
    Rational nu = (at(a, 2) - (1 - rational_pow(q, -2)) * B) / denom;
    for (long n = 0; n < static_cast<long>(a.size()); ++n)
        if (at(a, n) !=
            (1 - rational_pow(q, -n)) * (B + nu * (rational_pow(q, n - 1) - 1)))
            return std::nullopt;
    GridFit fit;
    fit.type = nu == 0 ? GridType::Intermediate : GridType::Generic;
    fit.params["a1"] = at(a, 1);
    fit.params["nu"] = nu;
    return fit;
}

std::optional<GridFit> fit_bannai_ito_nodes(const std::vector<Rational>& a) {
    // a_{2n} = 2 nu n, a_{2n+1} = a_1 - 2 nu n
    Rational nu = at(a, 2) / 2;
    Rational a1 = at(a, 1);
    for (long n = 0; n < static_cast<long>(a.size()); ++n) {
        Rational expected = n % 2 == 0 ? Rational(nu * n) : Rational(a1 - nu * (n - 1));
        if (at(a, n) != expected) return std::nullopt;
    }
    GridFit fit;
    fit.type = nu == 0 ? GridType::Intermediate : GridType::Generic;
    fit.params["a1"] = a1;
    fit.params["nu"] = nu;
    return fit;
}

}  // namespace

GridFit detect_grid(const std::vector<Rational>& a, const SpectrumFit& spectrum) {
    if (a.size() < 6)
        throw std::invalid_argument("detect_grid: need at least 6 values");
    if (at(a, 0) != 0)
        throw std::invalid_argument("detect_grid: a_0 must be 0");

    if (all_zero(a)) {
        GridFit fit;
        fit.type = GridType::Degenerate;
        return fit;
    }

    switch (spectrum.type) {
        case SpectrumType::Linear:
        case SpectrumType::Quadratic:
            if (auto fit = fit_poly_grid(a)) return *fit;
            return GridFit{};
        case SpectrumType::QGrid: {
            // The exponential grid in q is also a generic grid in 1/q with a
            // shifted nu, so try both candidates and keep the most degenerate fit.
            std::optional<GridFit> best;
            for (const auto& q : spectrum.q_candidates)
                if (auto fit = fit_q_grid_nodes(a, q))
                    if (!best || fit->type == GridType::Intermediate) best = fit;
            if (best) return *best;
            return GridFit{};
        }
        case SpectrumType::BannaiIto:
            if (auto fit = fit_bannai_ito_nodes(a)) return *fit;
            return GridFit{};
        case SpectrumType::Unclassified:
            return GridFit{};
    }
    throw std::logic_error("unreachable");
}

namespace {

std::string label_for(SpectrumType s, GridType g) {
    switch (s) {
        case SpectrumType::Linear:
            switch (g) {
                case GridType::Degenerate: return "Laguerre-type";
                case GridType::Intermediate: return "uniform-grid class";
                case GridType::Generic: return "dual Hahn-type";
                default: return "unclassified";
            }
        case SpectrumType::Quadratic:
            switch (g) {
                case GridType::Degenerate: return "Jacobi";
                case GridType::Intermediate: return "Hahn";
                case GridType::Generic: return "Racah-Wilson";
                default: return "unclassified";
            }
        case SpectrumType::QGrid:
            switch (g) {
                case GridType::Degenerate: return "little q-Jacobi";
                case GridType::Intermediate: return "big q-Jacobi";
                case GridType::Generic: return "Askey-Wilson";
                default: return "unclassified";
            }
        case SpectrumType::BannaiIto:
            switch (g) {
                case GridType::Degenerate: return "little -1 Jacobi";
                case GridType::Intermediate: return "big -1 Jacobi";
                case GridType::Generic: return "Bannai-Ito";
                default: return "unclassified";
            }
        default:
            return "unclassified";
    }
}

}  // namespace

FamilyClass classify_values(const std::vector<Rational>& lambda_values,
                            const std::vector<Rational>& a_values) {
    FamilyClass out;
    SpectrumFit spectrum = detect_spectrum(lambda_values);
    out.spectrum_type = spectrum.type;
    out.flags = spectrum.flags;
    if (spectrum.type == SpectrumType::Unclassified) {
        out.label = "unclassified";
        return out;
    }
    GridFit grid = detect_grid(a_values, spectrum);
    out.grid_type = grid.type;
    out.label = label_for(spectrum.type, grid.type);
    for (const auto& [k, v] : spectrum.params) out.fit_params["spectrum." + k] = v;
    for (const auto& [k, v] : grid.params) out.fit_params["grid." + k] = v;
    for (const auto& q : spectrum.q_candidates)
        out.ambiguities.push_back("q = " + rational_str(q));
    return out;
}

FamilyClass classify(const HyperData& data) {
    const long m = data.max_index();
    if (m < 5) throw std::invalid_argument("classify: need at least 6 indices");
    std::vector<Rational> lambda, a;
    for (long n = 0; n <= m; ++n) {
        lambda.push_back(data.lambda(n));
        a.push_back(data.a(n));
    }
    return classify_values(lambda, a);
}

}  // namespace newthyper
