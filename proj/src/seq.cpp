#include "newthyper/seq.hpp"

#include "newthyper/grids.hpp"

#include <algorithm>
#include <stdexcept>

namespace newthyper {

SeqSpec SeqSpec::explicit_values(std::vector<Rational> values) {
    SeqSpec s;
    s.kind_ = Kind::Explicit;
    s.values_ = std::move(values);
    return s;
}

SeqSpec SeqSpec::closed_form(GridParams params, SeqRole role) {
    SeqSpec s;
    s.kind_ = Kind::ClosedForm;
    s.params_ = std::move(params);
    s.role_ = role;
    return s;
}

std::optional<long> SeqSpec::max_index() const {
    if (kind_ == Kind::Explicit)
        return static_cast<long>(values_.size()) - 1;
    return std::nullopt;
}

Rational SeqSpec::eval(long n) const {
    if (n < 0) throw std::out_of_range("sequence index must be nonnegative");
    if (kind_ == Kind::Explicit) {
        if (n >= static_cast<long>(values_.size()))
            throw std::out_of_range("explicit sequence has no index " + std::to_string(n));
        return values_[static_cast<std::size_t>(n)];
    }
    switch (role_) {
        case SeqRole::Lambda: return grid_lambda(params_, n);
        case SeqRole::Tau: return grid_tau(params_, n);
        case SeqRole::Node: return grid_node(params_, n);
    }
    throw std::logic_error("unreachable");
}

Rational seq_eval(const SeqSpec& spec, long n) { return spec.eval(n); }

namespace {

std::vector<Rational> fill(const SeqSpec& spec, long target) {
    long hi = target;
    if (auto m = spec.max_index()) hi = std::min(hi, *m);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(hi + 1));
    for (long n = 0; n <= hi; ++n) out.push_back(spec.eval(n));
    return out;
}

}  // namespace

HyperData::HyperData(SeqSpec lambda, SeqSpec tau, SeqSpec a, long N)
    : lambda_spec_(std::move(lambda)),
      tau_spec_(std::move(tau)),
      a_spec_(std::move(a)),
      N_(N) {
    if (N < 0) throw std::invalid_argument("order cap N must be nonnegative");
    const long target = 2 * N + 2;
    lambda_ = fill(lambda_spec_, target);
    tau_ = fill(tau_spec_, target);
    a_ = fill(a_spec_, target);
    max_index_ = std::min({static_cast<long>(lambda_.size()),
                           static_cast<long>(tau_.size()),
                           static_cast<long>(a_.size())}) -
                 1;
    if (max_index_ < N_)
        throw std::invalid_argument("sequences provide indices 0.." +
                                    std::to_string(max_index_) +
                                    " but N = " + std::to_string(N_));
}

const Rational& HyperData::at(const std::vector<Rational>& v, long n,
                              const char* what) const {
    if (n < 0 || n >= static_cast<long>(v.size()))
        throw std::out_of_range(std::string(what) + "_" + std::to_string(n) +
                                " is not available (have indices 0.." +
                                std::to_string(v.size() - 1) + ")");
    return v[static_cast<std::size_t>(n)];
}

const Rational& HyperData::lambda(long n) const { return at(lambda_, n, "lambda"); }
const Rational& HyperData::tau(long n) const { return at(tau_, n, "tau"); }
const Rational& HyperData::a(long n) const { return at(a_, n, "a"); }

Rational HyperData::zeta(long n) const {
    const Rational& l = lambda(n + 1);
    if (l == 0)
        throw std::domain_error("zeta_" + std::to_string(n) +
                                " undefined: lambda_" + std::to_string(n + 1) + " = 0");
    return tau(n + 1) / l;
}

Rational HyperData::y(long n) const { return a(n) - zeta(n); }

ValidationReport validate(const HyperData& data) {
    ValidationReport report;
    auto flag = [&](std::string msg) { report.violations.push_back({std::move(msg)}); };

    const long N = data.N();
    if (data.lambda(0) != 0) flag("lambda_0 = " + rational_str(data.lambda(0)) + ", expected 0");
    if (data.tau(0) != 0) flag("tau_0 = " + rational_str(data.tau(0)) + ", expected 0");
    if (data.a(0) != 0) flag("a_0 = " + rational_str(data.a(0)) + ", expected 0");

    for (long n = 0; n < N; ++n)
        for (long m = n + 1; m <= N; ++m)
            if (data.lambda(n) == data.lambda(m))
                flag("lambda_" + std::to_string(n) + " = lambda_" + std::to_string(m));

    for (long n = 1; n <= N; ++n)
        if (data.tau(n) == 0)
            flag("tau_" + std::to_string(n) + " = 0 before N+1");

    if (data.max_index() >= N + 1 && data.tau(N + 1) == 0)
        report.finite = true;

    return report;
}

}  // namespace newthyper
