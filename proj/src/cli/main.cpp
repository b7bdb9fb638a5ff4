#include "gradmine/gradmine.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

struct CsvFlags {
    std::string delimiter = ",";
    bool no_header = false;
    std::string time_column;
};

struct DatasetHandle {
    gm_dataset* ptr = nullptr;
    ~DatasetHandle() { gm_dataset_free(ptr); }
};

struct ResultHandle {
    gm_result* ptr = nullptr;
    ~ResultHandle() { gm_result_free(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { gm_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

int fail(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 1;
}

int fail_last() { return fail(gm_last_error()); }

bool load_dataset(const std::string& path, const CsvFlags& flags, DatasetHandle& handle) {
    gm_csv_options opts{};
    opts.delimiter = flags.delimiter.empty() ? ',' : flags.delimiter[0];
    opts.no_header = flags.no_header ? 1 : 0;
    opts.time_column = flags.time_column.empty() ? nullptr : flags.time_column.c_str();
    if (path == "-") {
        std::string text(std::istreambuf_iterator<char>(std::cin), {});
        return gm_dataset_load_csv_text(text.c_str(), &opts, &handle.ptr) == GM_OK;
    }
    return gm_dataset_load_csv_file(path.c_str(), &opts, &handle.ptr) == GM_OK;
}

// JSON reports carry the parsed configuration alongside the result; CSV is
// the bare table.
int emit(const gm_result* result, const std::string& format, const std::string& out_path,
         const json& config) {
    std::string text;
    if (format == "json") {
        OwnedString raw;
        if (gm_result_to_json(result, &raw.ptr) != GM_OK) return fail_last();
        json doc = json::parse(raw.str());
        doc["config"] = config;
        text = doc.dump(2);
        text.push_back('\n');
    } else {
        OwnedString raw;
        if (gm_result_to_csv(result, &raw.ptr) != GM_OK) return fail_last();
        text = raw.str();
    }

    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) return fail("cannot open '" + out_path + "' for writing");
    out << text;
    return out.good() ? 0 : fail("short write to '" + out_path + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gradual pattern mining over numeric and timestamped CSV data"};
    app.require_subcommand(1);

    CsvFlags csv;
    std::vector<std::string> inputs;
    double min_sup = 0.5;
    double min_rep = 0.5;
    double min_growth = 1.0;
    long base_step = 1;
    double evaporation = 0.5;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string algorithm = "graank";
    std::string engine = "exhaustive";
    std::string method = "border";
    std::string ref_attr;
    std::string format = "json";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd, bool many_inputs) {
        auto* input = cmd->add_option("--input,-i", inputs, "CSV path, or - for stdin")
                          ->required();
        if (!many_inputs) input->expected(1);
        cmd->add_option("--delimiter", csv.delimiter, "field delimiter")->default_val(",");
        cmd->add_flag("--no-header", csv.no_header, "first row is data");
        cmd->add_option("--time-column", csv.time_column, "timestamp column name or index");
        cmd->add_option("--format", format, "report format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->default_val("json");
        cmd->add_option("--out,-o", out_path, "output path (default stdout)");
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed")->envname("GRADMINE_SEED");
    };

    CLI::App* gp = app.add_subcommand("gp", "Mine gradual patterns");
    add_common(gp, false);
    add_seed(gp);
    gp->add_option("--algorithm,-a", algorithm, "graank, paraminer, aco-graank, aco-paraminer")
        ->check(CLI::IsMember({"graank", "paraminer", "aco-graank", "aco-paraminer"}));
    gp->add_option("--min-sup", min_sup, "minimum support in (0,1]");
    gp->add_option("--evaporation", evaporation, "pheromone evaporation rate in (0,1)");
    gp->add_option("--threads", threads, "worker cap (0 = all cores)");

    CLI::App* tgp = app.add_subcommand("tgp", "Mine temporal gradual patterns");
    add_common(tgp, false);
    add_seed(tgp);
    tgp->add_option("--ref,-r", ref_attr, "reference attribute name")->required();
    tgp->add_option("--engine,-e", engine, "exhaustive or aco")
        ->check(CLI::IsMember({"exhaustive", "aco"}));
    tgp->add_option("--min-sup", min_sup, "minimum support in (0,1]");
    tgp->add_option("--min-rep", min_rep, "minimum representativity in (0,1]");
    tgp->add_option("--threads", threads, "worker cap (0 = all cores)");

    CLI::App* tgep = app.add_subcommand("tgep", "Mine temporal gradual emerging patterns");
    add_common(tgep, false);
    add_seed(tgep);
    tgep->add_option("--ref,-r", ref_attr, "reference attribute name")->required();
    tgep->add_option("--method,-m", method, "border or trenc")
        ->check(CLI::IsMember({"border", "trenc"}));
    tgep->add_option("--min-sup", min_sup, "minimum support in (0,1]");
    tgep->add_option("--min-rep", min_rep, "minimum representativity in (0,1]");
    tgep->add_option("--min-growth", min_growth, "minimum growth rate, > 0");
    tgep->add_option("--base-step", base_step, "transform step the growth rates compare against");
    tgep->add_option("--threads", threads, "worker cap (0 = all cores)");

    CLI::App* cross_cmd = app.add_subcommand("cross", "Cross timestamped datasets");
    add_common(cross_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    json config = {{"format", format}};
    if (inputs.size() == 1)
        config["input"] = inputs.front();
    else
        config["inputs"] = inputs;

    if (app.got_subcommand(cross_cmd)) {
        if (inputs.size() < 2) {
            std::cerr << "cross needs at least two --input datasets\n";
            return 2;
        }
        config["command"] = "cross";
        std::vector<std::unique_ptr<DatasetHandle>> handles;
        std::vector<const gm_dataset*> sources;
        for (const std::string& path : inputs) {
            auto handle = std::make_unique<DatasetHandle>();
            if (!load_dataset(path, csv, *handle)) return fail_last();
            sources.push_back(handle->ptr);
            handles.push_back(std::move(handle));
        }
        ResultHandle result;
        if (gm_cross(sources.data(), sources.size(), &result.ptr) != GM_OK) return fail_last();
        return emit(result.ptr, format, out_path, config);
    }

    DatasetHandle dataset;
    if (!load_dataset(inputs.front(), csv, dataset)) return fail_last();

    ResultHandle result;
    if (app.got_subcommand(gp)) {
        config["command"] = "gp";
        config["algorithm"] = algorithm;
        config["min_sup"] = min_sup;
        config["seed"] = seed;
        config["threads"] = threads;
        if (algorithm == "aco-paraminer") config["evaporation"] = evaporation;
        gm_gp_params params{min_sup, evaporation, seed, threads};
        if (gm_mine_gp(dataset.ptr, algorithm.c_str(), &params, &result.ptr) != GM_OK)
            return fail_last();
    } else if (app.got_subcommand(tgp)) {
        config["command"] = "tgp";
        config["engine"] = engine;
        config["ref"] = ref_attr;
        config["min_sup"] = min_sup;
        config["min_rep"] = min_rep;
        config["seed"] = seed;
        config["threads"] = threads;
        gm_tgp_params params{min_sup, min_rep, seed, threads};
        if (gm_mine_tgp(dataset.ptr, ref_attr.c_str(), engine.c_str(), &params, &result.ptr) !=
            GM_OK)
            return fail_last();
    } else {
        config["command"] = "tgep";
        config["method"] = method;
        config["ref"] = ref_attr;
        config["min_sup"] = min_sup;
        config["min_rep"] = min_rep;
        config["seed"] = seed;
        config["threads"] = threads;
        if (method == "trenc") {
            config["min_growth"] = min_growth;
            config["base_step"] = base_step;
        }
        gm_tgep_params params{min_sup, min_rep, min_growth, base_step, seed, threads};
        if (gm_mine_tgep(dataset.ptr, ref_attr.c_str(), method.c_str(), &params, &result.ptr) !=
            GM_OK)
            return fail_last();
    }
    return emit(result.ptr, format, out_path, config);
}
