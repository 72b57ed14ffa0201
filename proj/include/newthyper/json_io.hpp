#ifndef NEWTHYPER_JSON_IO_HPP
#define NEWTHYPER_JSON_IO_HPP

#include "newthyper/classify.hpp"
#include "newthyper/construct.hpp"
#include "newthyper/grids.hpp"
#include "newthyper/moments.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace newthyper {

using json = nlohmann::json;

// Instance description accepted by the CLI and the python bindings:
//   {"source": "family", "family": "...", "params": {...}, "N": 8}
//   {"source": "explicit", "lambda": [...], "tau": [...], "a": [...], "N": 8}
// Rationals are strings "p/q" or "p" throughout.
struct InstanceSpec {
    enum class Source { FamilyParams, ExplicitSequences };
    Source source = Source::FamilyParams;
    GridParams params;
    std::vector<Rational> lambda, tau, a;
    std::optional<long> N;
};

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GridParams parse_grid_params(const json& j);
InstanceSpec parse_instance_spec(const json& j);

// Builds HyperData from a spec; family sources run their admissibility
// checks, explicit sources are validated with validate() (throws SpecError
// listing the violations).
HyperData make_data(const InstanceSpec& spec, long N);

json rational_json(const Rational& r);
json rationals_json(const std::vector<Rational>& v);
json matrix_json(const std::vector<std::vector<Rational>>& m);
json poly_json(const MonomialPoly& p);
json poly_json(const NewtonPoly& p);

json validation_json(const ValidationReport& r);
json classify_json(const FamilyClass& c);

// Pipelines behind the CLI subcommands.
json construct_report(const HyperData& data);
json moments_report(const HyperData& data);
// all_pass is set to false when any residual is nonzero.
json verify_report(const HyperData& data, bool& all_pass);

std::string bu_csv(const RecurrenceData& rc);

}  // namespace newthyper

#endif
