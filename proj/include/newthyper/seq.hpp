#ifndef NEWTHYPER_SEQ_HPP
#define NEWTHYPER_SEQ_HPP

#include "newthyper/family.hpp"
#include "newthyper/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace newthyper {

enum class SeqRole { Lambda, Tau, Node };

// One of the three defining sequences: either a finite explicit list or a
// closed-form family formula evaluable at any index.
class SeqSpec {
public:
    enum class Kind { Explicit, ClosedForm };

    static SeqSpec explicit_values(std::vector<Rational> values);
    static SeqSpec closed_form(GridParams params, SeqRole role);

    Kind kind() const { return kind_; }
    SeqRole role() const { return role_; }
    const GridParams& params() const { return params_; }
    const std::vector<Rational>& values() const { return values_; }

    // Largest index this spec can produce, or nullopt if unbounded.
    std::optional<long> max_index() const;

    Rational eval(long n) const;

private:
    Kind kind_ = Kind::Explicit;
    std::vector<Rational> values_;
    GridParams params_;
    SeqRole role_ = SeqRole::Lambda;
};

Rational seq_eval(const SeqSpec& spec, long n);

struct Violation {
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool finite = false;  // tau_{N+1} == 0 with tau_1..tau_N nonzero

    bool valid() const { return violations.empty(); }
};

// The abstract-operator data (lambda_n, tau_n, a_n) truncated at order N.
// Values are cached eagerly up to the largest index any downstream table
// needs (2N+2 for closed forms); instances are immutable afterwards.
class HyperData {
public:
    HyperData(SeqSpec lambda, SeqSpec tau, SeqSpec a, long N);

    long N() const { return N_; }
    long max_index() const { return max_index_; }

    const Rational& lambda(long n) const;
    const Rational& tau(long n) const;
    const Rational& a(long n) const;

    // zeta_n = tau_{n+1} / lambda_{n+1},  y_n = a_n - zeta_n
    Rational zeta(long n) const;
    Rational y(long n) const;

    const SeqSpec& lambda_spec() const { return lambda_spec_; }
    const SeqSpec& tau_spec() const { return tau_spec_; }
    const SeqSpec& a_spec() const { return a_spec_; }

private:
    const Rational& at(const std::vector<Rational>& v, long n, const char* what) const;

    SeqSpec lambda_spec_, tau_spec_, a_spec_;
    long N_;
    long max_index_;
    std::vector<Rational> lambda_, tau_, a_;
};

// Checks lambda_0 = tau_0 = a_0 = 0, distinctness of lambda_0..lambda_N and
// the tau nonvanishing rule (tau_{N+1} = 0 marks the finite regime).
ValidationReport validate(const HyperData& data);

}  // namespace newthyper

#endif
