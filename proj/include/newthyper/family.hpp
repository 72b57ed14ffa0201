#ifndef NEWTHYPER_FAMILY_HPP
#define NEWTHYPER_FAMILY_HPP

#include "newthyper/rational.hpp"

#include <string>

namespace newthyper {

enum class Family { Linear, Quadratic, AskeyWilson, BannaiIto };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Free parameters of the closed-form solutions. Not every field is
// meaningful for every family:
//   Linear:      tau1, a1, gamma, alpha (grid curvature)
//   Quadratic:   tau1, a1, gamma, alpha (spectral), beta (grid curvature)
//   AskeyWilson: tau1, a1, gamma, nu, alpha (spectral), q
//   BannaiIto:   tau1, a1, gamma, nu, alpha (spectral)
struct GridParams {
    Family family = Family::Linear;
    Rational tau1;
    Rational a1;
    Rational gamma;
    Rational alpha;
    Rational beta;
    Rational nu;
    Rational q;
};

}  // namespace newthyper

#endif
