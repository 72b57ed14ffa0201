#include "newthyper/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using newthyper::json;

constexpr long kDefaultN = 12;
constexpr long kDefaultMaxN = 64;

struct Options {
    std::string family;
    std::string params_json;
    std::string explicit_path;
    std::string batch_path;
    std::string out_path;
    std::string format = "json";
    long n = -1;
};

struct CliError : std::runtime_error {
    int code;
    CliError(int code, const std::string& msg) : std::runtime_error(msg), code(code) {}
};

long max_n_cap() {
    if (const char* env = std::getenv("NEWTON_HYPER_MAX_N")) {
        try {
            long cap = std::stol(env);
            if (cap >= 0) return cap;
        } catch (const std::exception&) {
        }
        throw CliError(2, "NEWTON_HYPER_MAX_N must be a nonnegative integer");
    }
    return kDefaultMaxN;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError(2, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw CliError(2, "bad JSON in '" + path + "': " + e.what());
    }
}

std::vector<newthyper::InstanceSpec> gather_specs(const Options& opt) {
    std::vector<json> raw;
    if (!opt.batch_path.empty()) {
        json batch = load_json_file(opt.batch_path);
        if (!batch.is_array()) throw CliError(2, "batch file must hold a JSON array");
        raw.assign(batch.begin(), batch.end());
    } else if (!opt.explicit_path.empty()) {
        raw.push_back(load_json_file(opt.explicit_path));
    } else if (!opt.family.empty()) {
        json params;
        if (!opt.params_json.empty()) {
            try {
                params = json::parse(opt.params_json);
            } catch (const json::parse_error& e) {
                throw CliError(2, std::string("bad --params JSON: ") + e.what());
            }
        } else {
            params = json::object();
        }
        params["family"] = opt.family;
        raw.push_back(json{{"source", "family"}, {"params", params}});
    } else {
        throw CliError(2, "give one of --family, --explicit or --batch");
    }

    std::vector<newthyper::InstanceSpec> specs;
    for (const auto& j : raw) {
        try {
            specs.push_back(newthyper::parse_instance_spec(j));
        } catch (const newthyper::SpecError& e) {
            throw CliError(2, e.what());
        }
    }
    return specs;
}

long resolve_n(const Options& opt, const newthyper::InstanceSpec& spec) {
    long n = opt.n >= 0 ? opt.n : spec.N.value_or(kDefaultN);
    long cap = max_n_cap();
    if (n > cap)
        throw CliError(2, "N = " + std::to_string(n) + " exceeds the cap " +
                              std::to_string(cap) +
                              " (override with NEWTON_HYPER_MAX_N)");
    return n;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw CliError(2, "cannot write '" + opt.out_path + "'");
        out << text << '\n';
    }
}

newthyper::HyperData instantiate(const Options& opt, const newthyper::InstanceSpec& spec) {
    try {
        return newthyper::make_data(spec, resolve_n(opt, spec));
    } catch (const newthyper::SpecError& e) {
        throw CliError(2, e.what());
    }
}

int run_construct(const Options& opt) {
    auto specs = gather_specs(opt);
    json results = json::array();
    std::ostringstream csv;
    for (const auto& spec : specs) {
        newthyper::HyperData data = instantiate(opt, spec);
        if (opt.format == "csv")
            csv << newthyper::bu_csv(newthyper::recurrence_coeffs(data));
        else
            results.push_back(newthyper::construct_report(data));
    }
    if (opt.format == "csv")
        emit(opt, csv.str());
    else
        emit(opt, (specs.size() == 1 ? results[0] : results).dump(2));
    return 0;
}

int run_verify(const Options& opt) {
    auto specs = gather_specs(opt);
    json results = json::array();
    bool all_pass = true;
    for (const auto& spec : specs) {
        newthyper::HyperData data = instantiate(opt, spec);
        bool pass = true;
        results.push_back(newthyper::verify_report(data, pass));
        all_pass = all_pass && pass;
    }
    emit(opt, (specs.size() == 1 ? results[0] : results).dump(2));
    return all_pass ? 0 : 1;
}

int run_classify(const Options& opt) {
    auto specs = gather_specs(opt);
    json results = json::array();
    bool all_classified = true;
    for (const auto& spec : specs) {
        newthyper::HyperData data = instantiate(opt, spec);
        newthyper::FamilyClass c = [&] {
            try {
                return newthyper::classify(data);
            } catch (const std::invalid_argument& e) {
                throw CliError(2, e.what());
            }
        }();
        all_classified = all_classified && c.classified();
        results.push_back(newthyper::classify_json(c));
    }
    emit(opt, (specs.size() == 1 ? results[0] : results).dump(2));
    return all_classified ? 0 : 3;
}

int run_moments(const Options& opt) {
    auto specs = gather_specs(opt);
    json results = json::array();
    for (const auto& spec : specs) {
        newthyper::HyperData data = instantiate(opt, spec);
        try {
            results.push_back(newthyper::moments_report(data));
        } catch (const std::invalid_argument& e) {
            throw CliError(2, e.what());
        }
    }
    emit(opt, (specs.size() == 1 ? results[0] : results).dump(2));
    return 0;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--family", opt.family, "closed-form family name");
    cmd->add_option("--params", opt.params_json, "family parameters as inline JSON");
    cmd->add_option("--explicit", opt.explicit_path, "instance spec JSON file");
    cmd->add_option("--batch", opt.batch_path, "JSON array of instance specs");
    cmd->add_option("--n", opt.n, "order cap N (default 12)");
    cmd->add_option("--out", opt.out_path, "output file (default stdout)");
    cmd->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypergeometric orthogonal polynomials over Newtonian bases"};
    app.require_subcommand(1);

    Options opt;
    CLI::App* construct = app.add_subcommand("construct", "build P_n, W and b/u/h tables");
    CLI::App* verify = app.add_subcommand("verify", "run all orthogonality checks");
    CLI::App* classify = app.add_subcommand("classify", "label the Askey-tableau class");
    CLI::App* moments = app.add_subcommand("moments", "emit psi/Q/zeta/y/c/H tables");
    for (CLI::App* cmd : {construct, verify, classify, moments}) add_common(cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(opt);
        if (verify->parsed()) return run_verify(opt);
        if (classify->parsed()) return run_classify(opt);
        return run_moments(opt);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
