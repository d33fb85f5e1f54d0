// Copyright 2026 The Randomizer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand turns its flags into a flat
// config document and runs the matching task; `verify` reads the document
// from a file first and lets flags override it.
//
// Exit codes: 0 all verdicts pass, 1 a verdict failed, 2 usage/config error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "randomizer/tasks.hpp"

namespace {

using randomizer::ConfigDocument;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Flag name -> config key. Flags not given on the command line are absent
// from the map so config-file values survive.
struct FlagSet {
    std::map<std::string, std::string> values;

    void bind(CLI::App *app, const std::string &flag, const std::string &key, const std::string &help) {
        app->add_option_function<std::string>(
            "--" + flag, [this, key](const std::string &v) { values[key] = v; }, help);
    }
};

void add_common(CLI::App *app, FlagSet &flags) {
    flags.bind(app, "seed", "seed", "RNG seed (default: $RANDOMIZER_SEED, else 0)");
    flags.bind(app, "stream", "stream", "RNG stream index");
    flags.bind(app, "threads", "threads", "worker threads (output does not depend on it)");
    flags.bind(app, "out", "out", "write the report here instead of stdout");
    flags.bind(app, "format", "format", "json or csv (csv: sweep tables only; formulas also: table)");
}

void add_experiment(CLI::App *app, FlagSet &flags) {
    flags.bind(app, "d", "d", "Hilbert-space dimension");
    flags.bind(app, "m", "m", "number of unitaries");
    flags.bind(app, "p", "p", "Schatten exponent (>= 1 or inf)");
    flags.bind(app, "r", "r", "companion exponent (default p + 1)");
    flags.bind(app, "epsilon", "epsilon", "randomization tolerance");
    flags.bind(app, "eta", "eta", "net covering radius (trace norm)");
    flags.bind(app, "trials", "trials", "independent trials");
    flags.bind(app, "states", "states", "states per trial / sample plan size");
    flags.bind(app, "mode", "mode", "net or sample");
    flags.bind(app, "source", "source", "haar or pauli (d = 2 fixture)");
}

int write_output(const ConfigDocument &doc, const std::string &text) {
    if (auto path = doc.get_string("out")) {
        std::ofstream out(*path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << *path << "'\n";
            return kExitUsage;
        }
        out << text;
        return kExitPass;
    }
    std::cout << text;
    return kExitPass;
}

std::string formulas_table(const randomizer::Json &r) {
    auto row = [](const std::string &name, const std::string &value) {
        std::string line = name;
        line.resize(std::max<size_t>(line.size() + 1, 14), ' ');
        return line + value + "\n";
    };
    auto num = [](const randomizer::Json &v) {
        return v.is_number_float() ? randomizer::format_double(v.get<double>()) : v.dump();
    };
    std::string out;
    out += row("d", num(r["d"]));
    out += row("epsilon", num(r["epsilon"]));
    out += row("p", r["p"].is_string() ? r["p"].get<std::string>() : num(r["p"]));
    out += row("c_p", num(r["c_p"]));
    out += row("log_argument", r["theorem1_log_argument_text"].get<std::string>() + " = " +
                                   num(r["theorem1_log_argument"]));
    out += row("theorem1_m", num(r["theorem1_m"]));
    out += row("hlsw_m", num(r["hlsw_m"]));
    out += row("dn_m", num(r["dn_m"]));
    out += row("aubrun_m", num(r["aubrun_m"]));
    return out;
}

int run(const std::string &command, ConfigDocument doc, const FlagSet &flags, const std::string &task) {
    for (const auto &[key, value] : flags.values) {
        doc.set(key, value);
    }
    if (!task.empty()) {
        doc.set("task", task);
    }
    if (!doc.has("seed")) {
        if (const char *env = std::getenv("RANDOMIZER_SEED")) {
            doc.set("seed", env);
        }
    }
    std::string format = doc.get_string("format", "json");
    if (format != "json" && format != "csv" && !(format == "table" && task == "formulas")) {
        throw randomizer::ConfigError("--format must be json or csv", "format", 0);
    }

    std::string started = randomizer::utc_timestamp();
    randomizer::TaskResult result = randomizer::run_task(doc);
    std::string finished = randomizer::utc_timestamp();

    std::string text;
    if (format == "table") {
        text = formulas_table(result.report);
    } else if (format == "csv") {
        if (!result.csv) {
            throw randomizer::ConfigError("--format csv is only available for sweeps", "format", 0);
        }
        text = *result.csv;
    } else {
        text = randomizer::dump_json(randomizer::make_document(command, doc, result, started, finished));
    }
    int status = write_output(doc, text);
    if (status != kExitPass) {
        return status;
    }
    return result.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Random-unitary randomizing channels in Schatten p-norms"};
    app.require_subcommand(1);

    FlagSet sample_flags, norms_flags, randomize_flags, net_flags, sweep_flags, verify_flags, formulas_flags;

    auto *sample = app.add_subcommand("sample", "sample a Haar ensemble and report unitarity and isotropy");
    add_common(sample, sample_flags);
    sample_flags.bind(sample, "d", "d", "dimension");
    sample_flags.bind(sample, "m", "m", "number of unitaries");
    sample_flags.bind(sample, "isotropy-samples", "isotropy_samples", "draws for the isotropy check");

    auto *norms = app.add_subcommand("norms", "run the norm-inequality oracles on random matrices");
    add_common(norms, norms_flags);
    norms_flags.bind(norms, "matrices", "matrices", "number of random matrices");

    auto *randomize = app.add_subcommand("randomize", "certify (net) or evidence (sample) epsilon-randomization");
    add_common(randomize, randomize_flags);
    add_experiment(randomize, randomize_flags);
    randomize_flags.bind(randomize, "budget", "budget", "greedy net rejection budget");
    randomize_flags.bind(randomize, "net-file", "net_file", "reuse a net written by `net`");

    auto *net = app.add_subcommand("net", "build a greedy eta-net and verify its covering");
    add_common(net, net_flags);
    net_flags.bind(net, "d", "d", "dimension (<= 3)");
    net_flags.bind(net, "eta", "eta", "covering radius");
    net_flags.bind(net, "budget", "budget", "consecutive rejections before stopping");
    net_flags.bind(net, "probes", "probes", "random probes for the covering check");

    auto *sweep = app.add_subcommand("sweep", "search the smallest m meeting the randomization threshold");
    add_common(sweep, sweep_flags);
    add_experiment(sweep, sweep_flags);
    sweep_flags.bind(sweep, "m-min", "m_min", "smallest m on the grid (default d)");
    sweep_flags.bind(sweep, "m-max", "m_max", "largest m on the grid (default d^2)");
    sweep_flags.bind(sweep, "grid-ratio", "grid_ratio", "geometric grid ratio");
    sweep_flags.bind(sweep, "success-fraction", "success_fraction", "required trial pass fraction");
    sweep_flags.bind(sweep, "budget", "budget", "greedy net rejection budget (net mode)");

    std::string config_path;
    auto *verify = app.add_subcommand("verify", "run the task described by a config file");
    verify->add_option("config", config_path, "flat key = value config file")->required();
    add_common(verify, verify_flags);
    add_experiment(verify, verify_flags);
    verify_flags.bind(verify, "task", "task", "override the config's task");

    auto *formulas = app.add_subcommand("formulas", "print the cardinality formulas");
    add_common(formulas, formulas_flags);
    formulas_flags.bind(formulas, "d", "d", "dimension");
    formulas_flags.bind(formulas, "epsilon", "epsilon", "tolerance");
    formulas_flags.bind(formulas, "p", "p", "Schatten exponent");
    formulas_flags.bind(formulas, "c-p", "c_p", "constant in the general formula");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (sample->parsed()) {
            return run("sample", {}, sample_flags, "sample");
        }
        if (norms->parsed()) {
            return run("norms", {}, norms_flags, "inequalities");
        }
        if (randomize->parsed()) {
            return run("randomize", {}, randomize_flags, "certify");
        }
        if (net->parsed()) {
            return run("net", {}, net_flags, "net");
        }
        if (sweep->parsed()) {
            return run("sweep", {}, sweep_flags, "sweep");
        }
        if (verify->parsed()) {
            return run("verify", ConfigDocument::load(config_path), verify_flags, "");
        }
        if (formulas->parsed()) {
            if (!formulas_flags.values.count("format")) {
                formulas_flags.values["format"] = "table";
            }
            return run("formulas", {}, formulas_flags, "formulas");
        }
    } catch (const randomizer::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
