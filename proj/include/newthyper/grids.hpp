#ifndef NEWTHYPER_GRIDS_HPP
#define NEWTHYPER_GRIDS_HPP

#include "newthyper/family.hpp"
#include "newthyper/seq.hpp"

#include <stdexcept>

namespace newthyper {

struct AdmissibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed-form values of the solved families. These back SeqSpec::ClosedForm
// and are the single source for the builders below.
Rational grid_lambda(const GridParams& p, long n);
Rational grid_tau(const GridParams& p, long n);
Rational grid_node(const GridParams& p, long n);

// Auxiliary y_n of the solved families (tau is recovered from it for the
// Askey-Wilson and Bannai-Ito grids via tau_{n+1} = lambda_{n+1}(a_n - y_n)).
Rational grid_y(const GridParams& p, long n);

// Family constructors. Each checks parameter admissibility up to the
// requested order N and throws AdmissibilityError naming the offending
// index otherwise. A vanishing tau_{N+1} is accepted (finite regime);
// a vanishing tau_n with n <= N is not.
HyperData build_linear(const GridParams& p, long N);
HyperData build_quadratic(const GridParams& p, long N);
HyperData build_askey_wilson(const GridParams& p, long N);
HyperData build_bannai_ito(const GridParams& p, long N);

HyperData build_family(const GridParams& p, long N);

}  // namespace newthyper

#endif
