#ifndef NEWTHYPER_CLASSIFY_HPP
#define NEWTHYPER_CLASSIFY_HPP

#include "newthyper/seq.hpp"

#include <map>
#include <string>
#include <vector>

namespace newthyper {

enum class SpectrumType { Linear, Quadratic, QGrid, BannaiIto, Unclassified };
enum class GridType { Degenerate, Intermediate, Generic, Unclassified };

std::string spectrum_name(SpectrumType t);
std::string grid_name(GridType t);

struct SpectrumFit {
    SpectrumType type = SpectrumType::Unclassified;
    std::map<std::string, Rational> params;
    std::vector<Rational> q_candidates;  // {q, 1/q} for QGrid (reciprocal ambiguity)
    std::vector<std::string> flags;      // e.g. "q_hahn_alpha_zero"
};

// Exact fit of the eigenvalue sequence, tried in the order
// affine -> quadratic -> Bannai-Ito -> q-grid. Requires >= 6 values
// with lambda_0 = 0, pairwise distinct.
SpectrumFit detect_spectrum(const std::vector<Rational>& lambda_values);

struct GridFit {
    GridType type = GridType::Unclassified;
    std::map<std::string, Rational> params;
};

// Class-specific grid fit; the intermediate shape depends on the spectrum
// (linear grid under a quadratic spectrum, exponential under a q-grid,
// two-point alternating under Bannai-Ito).
GridFit detect_grid(const std::vector<Rational>& a_values, const SpectrumFit& spectrum);

struct FamilyClass {
    SpectrumType spectrum_type = SpectrumType::Unclassified;
    GridType grid_type = GridType::Unclassified;
    std::string label;  // "unclassified" when no exact fit exists
    std::map<std::string, Rational> fit_params;
    std::vector<std::string> ambiguities;
    std::vector<std::string> flags;

    bool classified() const { return label != "unclassified"; }
};

// The 9-class taxonomy (3 spectra x 3 grid degenerations) plus the three
// linear-spectrum sublabels. Only lambda_n and a_n are inspected.
FamilyClass classify(const HyperData& data);
FamilyClass classify_values(const std::vector<Rational>& lambda_values,
                            const std::vector<Rational>& a_values);

}  // namespace newthyper

#endif
