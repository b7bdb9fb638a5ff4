#include "gradmine/gradmine.h"

#include "gradmine/aco.hpp"
#include "gradmine/dataset.hpp"
#include "gradmine/emerging.hpp"
#include "gradmine/fuzztx.hpp"
#include "gradmine/gradcore.hpp"
#include "gradmine/graank.hpp"
#include "gradmine/paraminer.hpp"
#include "gradmine/report.hpp"
#include "gradmine/temporal.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

using namespace gradmine;

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

// Maps the library's exceptions onto the C error codes, leaving the message
// in the thread-local slot.
template <typename F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const IoError& e) {
        g_last_error = e.what();
        return GM_ERR_IO;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return GM_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return GM_ERR_INVALID_ARGUMENT;
    } catch (const std::logic_error& e) {
        g_last_error = e.what();
        return GM_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return GM_ERR_INTERNAL;
    }
}

int fail_invalid(const char* message) {
    g_last_error = message;
    return GM_ERR_INVALID_ARGUMENT;
}

IngestOptions ingest_options(const gm_csv_options* opts) {
    IngestOptions out;
    if (!opts) return out;
    if (opts->delimiter) out.delimiter = opts->delimiter;
    out.has_header = !opts->no_header;
    if (opts->time_column) out.time_column_hint = opts->time_column;
    return out;
}

struct RunStats {
    std::string algorithm;
    std::uint64_t seed = 0;
    bool seeded = false;
    double wall_ms = 0.0;
    std::optional<AcoMiningStats> aco;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        auto delta = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(delta).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace

struct gm_dataset {
    NumericDataset data;
};

struct gm_result {
    // Attribute names for serializing the pattern kinds; unused for crossed.
    NumericDataset source;
    std::variant<std::vector<GradualPattern>, std::vector<TemporalGradualPattern>,
                 std::vector<TemporalGradualEmergingPattern>, CrossedDataset>
        payload;
    RunStats stats;
};

extern "C" {

const char* gm_version(void) { return "0.1.0"; }

const char* gm_last_error(void) { return g_last_error.c_str(); }

int gm_dataset_load_csv_file(const char* path, const gm_csv_options* opts, gm_dataset** out) {
    if (!path) return fail_invalid("path is null");
    if (!out) return fail_invalid("out is null");
    return guarded([&] {
        *out = new gm_dataset{load_csv_file(path, ingest_options(opts))};
        return GM_OK;
    });
}

int gm_dataset_load_csv_text(const char* text, const gm_csv_options* opts, gm_dataset** out) {
    if (!text) return fail_invalid("text is null");
    if (!out) return fail_invalid("out is null");
    return guarded([&] {
        *out = new gm_dataset{load_csv_text(text, ingest_options(opts))};
        return GM_OK;
    });
}

void gm_dataset_free(gm_dataset* ds) { delete ds; }

size_t gm_dataset_tuple_count(const gm_dataset* ds) { return ds ? ds->data.tuple_count : 0; }

size_t gm_dataset_attribute_count(const gm_dataset* ds) {
    return ds ? ds->data.attributes.size() : 0;
}

const char* gm_dataset_attribute_name(const gm_dataset* ds, size_t index) {
    if (!ds || index >= ds->data.attributes.size()) return nullptr;
    return ds->data.attributes[index].name.c_str();
}

int gm_dataset_has_time(const gm_dataset* ds) { return ds && ds->data.has_time() ? 1 : 0; }

int gm_dataset_to_csv(const gm_dataset* ds, char** out) {
    if (!ds) return fail_invalid("dataset is null");
    if (!out) return fail_invalid("out is null");
    return guarded([&] {
        *out = copy_string(to_csv(ds->data));
        return GM_OK;
    });
}

void gm_string_free(char* text) { delete[] text; }

int gm_mine_gp(const gm_dataset* ds, const char* algorithm, const gm_gp_params* params,
               gm_result** out) {
    if (!ds) return fail_invalid("dataset is null");
    if (!algorithm) return fail_invalid("algorithm is null");
    if (!out) return fail_invalid("out is null");
    return guarded([&] {
        double min_sup = params && params->min_sup != 0.0 ? params->min_sup : 0.5;
        double evaporation = params && params->evaporation != 0.0 ? params->evaporation : 0.5;
        std::uint64_t seed = params ? params->seed : 0;
        std::string name = algorithm;

        RunStats stats;
        stats.algorithm = name;
        Stopwatch watch;
        std::vector<GradualPattern> patterns;
        // The concordance-count miners treat a pattern and its complement as
        // one; the report shows both orientations.
        bool expand_complements = false;
        if (name == "graank") {
            patterns = mine_graank(ds->data, {min_sup});
            expand_complements = true;
        } else if (name == "paraminer") {
            patterns = mine_paraminer(ds->data, {min_sup});
        } else if (name == "aco-graank") {
            AcoMiningStats aco;
            patterns = mine_aco_graank(ds->data, {min_sup, seed, 0}, &aco);
            stats.aco = aco;
            stats.seed = seed;
            stats.seeded = true;
            expand_complements = true;
        } else if (name == "aco-paraminer") {
            AcoMiningStats aco;
            patterns = mine_aco_paraminer(ds->data, {min_sup, evaporation, seed, 0}, &aco);
            stats.aco = aco;
            stats.seed = seed;
            stats.seeded = true;
        } else {
            g_last_error = "unknown algorithm '" + name + "'";
            return GM_ERR_INVALID_ARGUMENT;
        }
        if (expand_complements) {
            std::size_t mined = patterns.size();
            patterns.reserve(mined * 2);
            for (std::size_t i = 0; i < mined; ++i) patterns.push_back(complement(patterns[i]));
            std::sort(patterns.begin(), patterns.end());
        }
        stats.wall_ms = watch.elapsed_ms();
        *out = new gm_result{ds->data, std::move(patterns), std::move(stats)};
        return GM_OK;
    });
}

int gm_mine_tgp(const gm_dataset* ds, const char* ref_attribute, const char* engine,
                const gm_tgp_params* params, gm_result** out) {
    if (!ds) return fail_invalid("dataset is null");
    if (!ref_attribute) return fail_invalid("ref_attribute is null");
    if (!engine) return fail_invalid("engine is null");
    if (!out) return fail_invalid("out is null");
    return guarded([&] {
        auto ref = ds->data.attribute_index(ref_attribute);
        if (!ref) {
            g_last_error = "unknown attribute '" + std::string(ref_attribute) + "'";
            return GM_ERR_INVALID_ARGUMENT;
        }
        std::string engine_name = engine;
        TGraankOptions opts;
        if (engine_name == "exhaustive") {
            opts.engine = TemporalEngine::Exhaustive;
        } else if (engine_name == "aco") {
            opts.engine = TemporalEngine::Aco;
        } else {
            g_last_error = "unknown engine '" + engine_name + "'";
            return GM_ERR_INVALID_ARGUMENT;
        }
        if (params) {
            if (params->min_sup != 0.0) opts.min_sup = params->min_sup;
            if (params->min_rep != 0.0) opts.min_rep = params->min_rep;
            opts.seed = params->seed;
            if (params->threads > 0) opts.threads = static_cast<std::size_t>(params->threads);
        }

        RunStats stats;
        stats.algorithm = "tgraank-" + engine_name;
        if (opts.engine == TemporalEngine::Aco) {
            stats.seed = opts.seed;
            stats.seeded = true;
        }
        Stopwatch watch;
        auto patterns = mine_tgraank(ds->data, *ref, opts);
        stats.wall_ms = watch.elapsed_ms();
        *out = new gm_result{ds->data, std::move(patterns), std::move(stats)};
        return GM_OK;
    });
}

int gm_mine_tgep(const gm_dataset* ds, const char* ref_attribute, const char* method,
                 const gm_tgep_params* params, gm_result** out) {
    if (!ds) return fail_invalid("dataset is null");
    if (!ref_attribute) return fail_invalid("ref_attribute is null");
    if (!method) return fail_invalid("method is null");
    if (!out) return fail_invalid("out is null");
    return guarded([&] {
        auto ref = ds->data.attribute_index(ref_attribute);
        if (!ref) {
            g_last_error = "unknown attribute '" + std::string(ref_attribute) + "'";
            return GM_ERR_INVALID_ARGUMENT;
        }
        if (params && params->base_step < 0) {
            g_last_error = "base_step must be positive";
            return GM_ERR_INVALID_ARGUMENT;
        }

        std::string method_name = method;
        RunStats stats;
        stats.algorithm = method_name;
        Stopwatch watch;
        std::vector<TemporalGradualEmergingPattern> patterns;
        if (method_name == "border") {
            BtGraankOptions opts;
            if (params) {
                if (params->min_sup != 0.0) opts.min_sup = params->min_sup;
                if (params->min_rep != 0.0) opts.min_rep = params->min_rep;
                if (params->threads > 0) opts.threads = static_cast<std::size_t>(params->threads);
            }
            patterns = mine_bt_graank(ds->data, *ref, opts);
        } else if (method_name == "trenc") {
            TrencOptions opts;
            if (params) {
                if (params->min_sup != 0.0) opts.min_sup = params->min_sup;
                if (params->min_rep != 0.0) opts.min_rep = params->min_rep;
                if (params->min_growth != 0.0) opts.min_growth = params->min_growth;
                if (params->base_step != 0) opts.base_step = static_cast<std::size_t>(params->base_step);
                opts.seed = params->seed;
                if (params->threads > 0) opts.threads = static_cast<std::size_t>(params->threads);
            }
            stats.seed = opts.seed;
            stats.seeded = true;
            patterns = mine_trenc(ds->data, *ref, opts);
        } else {
            g_last_error = "unknown method '" + method_name + "'";
            return GM_ERR_INVALID_ARGUMENT;
        }
        stats.wall_ms = watch.elapsed_ms();
        *out = new gm_result{ds->data, std::move(patterns), std::move(stats)};
        return GM_OK;
    });
}

int gm_cross(const gm_dataset* const* sources, size_t count, gm_result** out) {
    if (!sources) return fail_invalid("sources is null");
    if (!out) return fail_invalid("out is null");
    return guarded([&] {
        std::vector<NumericDataset> inputs;
        inputs.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!sources[i]) {
                g_last_error = "source " + std::to_string(i) + " is null";
                return GM_ERR_INVALID_ARGUMENT;
            }
            inputs.push_back(sources[i]->data);
        }

        RunStats stats;
        stats.algorithm = "cross";
        Stopwatch watch;
        CrossedDataset crossed = cross(inputs);
        stats.wall_ms = watch.elapsed_ms();
        *out = new gm_result{NumericDataset{}, std::move(crossed), std::move(stats)};
        return GM_OK;
    });
}

size_t gm_result_pattern_count(const gm_result* result) {
    if (!result) return 0;
    return std::visit(
        [](const auto& payload) -> size_t {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, CrossedDataset>)
                return payload.data.tuple_count;
            else
                return payload.size();
        },
        result->payload);
}

int gm_result_to_json(const gm_result* result, char** out) {
    if (!result) return fail_invalid("result is null");
    if (!out) return fail_invalid("out is null");
    return guarded([&] {
        nlohmann::json doc;
        nlohmann::json stats = {{"algorithm", result->stats.algorithm},
                                {"wall_ms", result->stats.wall_ms},
                                {"count", gm_result_pattern_count(result)}};
        if (result->stats.seeded) stats["seed"] = result->stats.seed;
        if (result->stats.aco) {
            stats["iterations"] = result->stats.aco->iterations;
            stats["winner_updates"] = result->stats.aco->winner_updates;
        }

        std::visit(
            [&](const auto& payload) {
                using T = std::decay_t<decltype(payload)>;
                if constexpr (std::is_same_v<T, CrossedDataset>) {
                    doc["crossed"] = crossed_to_json(payload);
                } else {
                    nlohmann::json arr = nlohmann::json::array();
                    for (const auto& p : payload) {
                        if constexpr (std::is_same_v<T, std::vector<GradualPattern>>)
                            arr.push_back(pattern_to_json(result->source, p));
                        else if constexpr (std::is_same_v<T, std::vector<TemporalGradualPattern>>)
                            arr.push_back(tgp_to_json(result->source, p));
                        else
                            arr.push_back(tgep_to_json(result->source, p));
                    }
                    doc["patterns"] = std::move(arr);
                }
            },
            result->payload);

        doc["stats"] = std::move(stats);
        *out = copy_string(doc.dump(2));
        return GM_OK;
    });
}

int gm_result_to_csv(const gm_result* result, char** out) {
    if (!result) return fail_invalid("result is null");
    if (!out) return fail_invalid("out is null");
    return guarded([&] {
        std::string text = std::visit(
            [&](const auto& payload) -> std::string {
                using T = std::decay_t<decltype(payload)>;
                if constexpr (std::is_same_v<T, CrossedDataset>)
                    return to_csv(payload.data);
                else if constexpr (std::is_same_v<T, std::vector<GradualPattern>>)
                    return patterns_to_csv(result->source, payload);
                else if constexpr (std::is_same_v<T, std::vector<TemporalGradualPattern>>)
                    return tgps_to_csv(result->source, payload);
                else
                    return tgeps_to_csv(result->source, payload);
            },
            result->payload);
        *out = copy_string(text);
        return GM_OK;
    });
}

void gm_result_free(gm_result* result) { delete result; }

} // extern "C"
