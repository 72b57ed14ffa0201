#include "newthyper/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;

namespace {

using newthyper::json;

newthyper::HyperData data_from(const std::string& spec_json, std::optional<long> n) {
    json j = json::parse(spec_json);
    newthyper::InstanceSpec spec = newthyper::parse_instance_spec(j);
    long N = n.value_or(spec.N.value_or(12));
    return newthyper::make_data(spec, N);
}

std::string construct(const std::string& spec, std::optional<long> n) {
    return newthyper::construct_report(data_from(spec, n)).dump();
}

std::string verify(const std::string& spec, std::optional<long> n) {
    bool pass = true;
    return newthyper::verify_report(data_from(spec, n), pass).dump();
}

std::string classify(const std::string& spec, std::optional<long> n) {
    return newthyper::classify_json(newthyper::classify(data_from(spec, n))).dump();
}

std::string moments(const std::string& spec, std::optional<long> n) {
    return newthyper::moments_report(data_from(spec, n)).dump();
}

std::string validate(const std::string& spec_json, std::optional<long> n) {
    json j = json::parse(spec_json);
    newthyper::InstanceSpec spec = newthyper::parse_instance_spec(j);
    long N = n.value_or(spec.N.value_or(12));
    if (spec.source == newthyper::InstanceSpec::Source::FamilyParams)
        return newthyper::validation_json(
                   newthyper::validate(newthyper::make_data(spec, N)))
            .dump();
    newthyper::HyperData data(newthyper::SeqSpec::explicit_values(spec.lambda),
                              newthyper::SeqSpec::explicit_values(spec.tau),
                              newthyper::SeqSpec::explicit_values(spec.a), N);
    return newthyper::validation_json(newthyper::validate(data)).dump();
}

}  // namespace

PYBIND11_MODULE(_newthyper, m) {
    m.doc() = "Hypergeometric orthogonal polynomials over Newtonian bases "
              "(exact rational arithmetic). All entry points take an instance "
              "spec as a JSON string and return a JSON report string.";

    auto translate = [](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const newthyper::SpecError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const newthyper::AdmissibilityError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    };
    py::register_exception_translator(translate);

    m.def("construct", &construct, py::arg("spec"), py::arg("n") = std::nullopt,
          "Monic eigenpolynomials, expansion matrix and recurrence tables");
    m.def("verify", &verify, py::arg("spec"), py::arg("n") = std::nullopt,
          "Orthogonality conditions, Q recurrences, Gram oracle, duality");
    m.def("classify", &classify, py::arg("spec"), py::arg("n") = std::nullopt,
          "Askey-tableau class label from lambda_n and a_n");
    m.def("moments", &moments, py::arg("spec"), py::arg("n") = std::nullopt,
          "Generalized/reduced moment tables and Hankel determinants");
    m.def("validate", &validate, py::arg("spec"), py::arg("n") = std::nullopt,
          "Structural validity report for an instance");
}
