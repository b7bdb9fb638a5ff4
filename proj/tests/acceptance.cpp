// Release gate: every check answers one question about the library's public
// behavior, prints a PASS/FAIL line, and the binary exits nonzero when any
// check fails.
#include "gradmine/aco.hpp"
#include "gradmine/dataset.hpp"
#include "gradmine/emerging.hpp"
#include "gradmine/fuzztx.hpp"
#include "gradmine/gradcore.hpp"
#include "gradmine/graank.hpp"
#include "gradmine/paraminer.hpp"
#include "gradmine/temporal.hpp"
#include "testing.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace gradmine;

namespace {

namespace fs = std::filesystem;

std::string g_note;

bool expect(bool condition, const char* detail) {
    if (!condition) std::fprintf(stderr, "    failed: %s\n", detail);
    return condition;
}

#define EXPECT(...) ok &= expect((__VA_ARGS__), #__VA_ARGS__)

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Support kendall_of(const NumericDataset& ds, const GradualPattern& p) {
    return kendall_support(build_pattern_matrix(ds, p));
}

bool concordance_supports() {
    bool ok = true;
    auto start = std::chrono::steady_clock::now();
    NumericDataset ds = testutil::weather4();

    EXPECT(kendall_support(build_item_matrix(ds, {0, Variation::Down})) == Support{5, 6});
    EXPECT(kendall_support(build_item_matrix(ds, {1, Variation::Up})) == Support{6, 6});
    EXPECT(kendall_support(build_item_matrix(ds, {2, Variation::Up})) == Support{5, 6});
    EXPECT(kendall_of(ds, testutil::pat({testutil::down(0), testutil::up(1)})) == Support{5, 6});
    EXPECT(kendall_of(ds, testutil::pat({testutil::up(1), testutil::up(2)})) == Support{5, 6});

    std::vector<GradualPattern> mined = mine_graank(ds, {0.8});
    auto mined_sup = [&](const GradualPattern& p) { return testutil::find_support(mined, p); };
    EXPECT(mined_sup(testutil::pat({testutil::up(0), testutil::down(1)})) == Support{5, 6});
    EXPECT(mined_sup(testutil::pat({testutil::up(1), testutil::up(2)})) == Support{5, 6});
    EXPECT(seconds_since(start) < 1.0);
    return ok;
}

bool chain_supports() {
    bool ok = true;
    NumericDataset ds = testutil::weather4();
    EXPECT(grite_support(ds, testutil::pat({testutil::down(0)})) == Support{3, 4});
    EXPECT(grite_support(ds, testutil::pat({testutil::down(0), testutil::up(1)})) ==
           Support{3, 4});
    EXPECT(grite_support(ds, testutil::pat({testutil::up(1)})) == Support{4, 4});
    g_note = "hum+ chain support asserted as 4/4: four readings cannot form a five-tuple chain";
    return ok;
}

bool transactional_encoding() {
    bool ok = true;
    using testutil::down;
    using testutil::up;
    EncodedTransactions enc = encode_transactions(testutil::abcd4());
    EXPECT(enc.pairs.size() == 6);
    EXPECT(enc.pair_label(0) == "t12");
    EXPECT(enc.pair_label(5) == "t34");

    const std::vector<std::vector<GradualItem>> expected = {
        {down(0), up(1), down(2), down(3)}, // rows 1,2
        {down(0), up(1), down(2), up(3)},   // rows 1,3
        {down(0), up(1), up(2), down(3)},   // rows 1,4
        {down(0), up(1), up(2), up(3)},     // rows 2,3
        {down(0), up(1), up(2), down(3)},   // rows 2,4
        {down(0), up(1), up(2), down(3)},   // rows 3,4
    };
    EXPECT(enc.transactions.size() == expected.size());
    for (std::size_t pair = 0; pair < expected.size() && ok; ++pair) {
        bool found = false;
        for (const Transaction& t : enc.transactions)
            if (t.tids == std::vector<std::size_t>{pair}) found = t.items == expected[pair];
        EXPECT(found);
    }

    EncodedTransactions reduced = reduce_dataset(enc);
    EXPECT(reduced.transactions.size() == 4);
    bool weighted = false;
    for (const Transaction& t : reduced.transactions)
        if (t.items == std::vector<GradualItem>{down(0), up(1), up(2), down(3)})
            weighted = t.weight == 3 && t.tids == std::vector<std::size_t>{2, 4, 5};
    EXPECT(weighted);

    ItemTidMap filtered = sort_filter_items(enc, 3);
    std::vector<GradualItem> kept;
    for (const ItemTids& entry : filtered) kept.push_back(entry.item);
    std::sort(kept.begin(), kept.end());
    EXPECT(kept == std::vector<GradualItem>({down(0), up(1), up(2), down(3)}));
    return ok;
}

bool pair_cost_matrix() {
    bool ok = true;
    NodeStructures nodes = build_node_structures(testutil::abcd4());
    EXPECT(nodes.cost.at(0, 1) == 1.0 / 4.0);
    EXPECT(nodes.cost.at(0, 2) == 1.0 / 3.0);
    EXPECT(nodes.cost.at(0, 3) == 1.0 / 5.0);
    return ok;
}

bool temporal_transform_and_lag() {
    bool ok = true;
    auto start = std::chrono::steady_clock::now();
    NumericDataset ds = load_csv_text(testutil::exercise_csv());

    TransformedDataset view = transform_dataset(ds, 1, 1);
    EXPECT(view.data.attributes[0].values == std::vector<double>({1, 2, 3, 1}));
    EXPECT(view.data.attributes[1].values == std::vector<double>({2, 3, 2, 3}));
    EXPECT(view.time_diffs == std::vector<double>({259200, 86400, 432000, 172800}));
    EXPECT(view.representativity == Support{4, 5});

    TGraankOptions opts;
    opts.min_sup = 0.5;
    opts.min_rep = 0.8;
    std::vector<TemporalGradualPattern> tgps = mine_tgraank(ds, 1, opts);
    const TemporalGradualPattern* wanted = nullptr;
    for (const TemporalGradualPattern& p : tgps)
        if (p.pattern.items ==
            std::vector<GradualItem>{testutil::up(1), testutil::down(2)})
            wanted = &p;
    EXPECT(wanted != nullptr);
    if (wanted) {
        EXPECT(wanted->pattern.support == Support{2, 4});
        EXPECT(wanted->lag.valid);
        EXPECT(wanted->lag.sign() == '+');
        EXPECT(std::abs(wanted->lag.seconds / 86400.0 - 1.5) <= 0.05);
        EXPECT(wanted->lag.sup == Support{1, 2});
    }
    EXPECT(seconds_since(start) < 1.0);
    return ok;
}

AttributePheromones survey_trails(double up0, double down1, double other2, bool other_down) {
    AttributePheromones trails(3);
    for (std::size_t a = 0; a < 3; ++a) {
        trails.up_ref(a) = 0.0;
        trails.down_ref(a) = 0.0;
        trails.skip_ref(a) = 0.0;
    }
    trails.up_ref(0) = up0;
    trails.down_ref(1) = down1;
    (other_down ? trails.down_ref(2) : trails.skip_ref(2)) = other2;
    return trails;
}

bool growth_goldens() {
    bool ok = true;
    EXPECT(growth_rate(0.4, 0.8) == 2.0);
    EXPECT(growth_rate(0.6, 0.9) == 1.5);
    EXPECT(std::isinf(growth_rate(0.0, 0.85)));

    GrowthRateMatrix rates =
        growth_matrix(survey_trails(0.4, 0.6, 0.75, true), survey_trails(0.8, 0.9, 0.85, false));
    EXPECT(rates.up[0] == 2.0);
    EXPECT(rates.down[1] == 1.5);
    EXPECT(std::isinf(rates.skip[2]));

    SupportMatrices from;
    from.pheromones = survey_trails(0.04, 0.04, 0.04, false);
    from.lags = TimeLagMatrix(3);
    from.lags.add(0, 0, 360);
    from.lags.add(1, 1, 360);
    SupportMatrices to;
    to.pheromones = survey_trails(0.8, 0.8, 0.8, false);
    to.lags = TimeLagMatrix(3);
    to.lags.add(0, 0, 120);
    to.lags.add(1, 1, 120);

    std::vector<TemporalGradualEmergingPattern> built =
        construct_tgeps(growth_matrix(from.pheromones, to.pheromones), from, to, 1.0, 1, 2);
    EXPECT(built.size() == 1);
    if (built.size() == 1) {
        EXPECT(built[0].items ==
               std::vector<GradualItem>({testutil::up(0), testutil::down(1)}));
        EXPECT(built[0].growth == 20.0);
        EXPECT(built[0].lag_mean_seconds.has_value());
        EXPECT(built[0].lag_mean_seconds.value_or(0.0) == 240.0);
    }
    return ok;
}

bool fuzzy_crossing() {
    bool ok = true;
    NumericDataset humidity = load_csv_text(testutil::humidity_csv());
    NumericDataset flies = load_csv_text(testutil::flies_csv());
    humidity.name = "humidity";
    flies.name = "flies";

    CrossedDataset crossed = cross({humidity, flies});
    EXPECT(crossed.data.tuple_count == 4);
    EXPECT(to_csv(crossed.data) ==
           "time,humidity,flies\n"
           "43200,30,50\n"
           "43320,35,160\n"
           "43440,40,243\n"
           "43560,50,259\n");
    return ok;
}

bool property_suites() {
    bool ok = true;
    auto start = std::chrono::steady_clock::now();
    std::string command = std::string(GRADMINE_PROPERTY_TESTS_PATH) + " > /dev/null 2>&1";
    int status = std::system(command.c_str());
    EXPECT(WIFEXITED(status) && WEXITSTATUS(status) == 0);
    EXPECT(seconds_since(start) < 300.0);
    return ok;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Report text with every wall-time line removed; the rest must be stable.
std::string without_wall_time(const std::string& report) {
    std::istringstream in(report);
    std::string out;
    std::string line;
    while (std::getline(in, line))
        if (line.find("wall_ms") == std::string::npos) out += line + "\n";
    return out;
}

bool seeded_reruns() {
    bool ok = true;
    fs::path dir = fs::temp_directory_path() / ("gradmine_gate_" + std::to_string(::getpid()));
    fs::create_directories(dir);

    fs::path weather = dir / "weather.csv";
    std::ofstream(weather) << "temp,hum,mos\n30,0.2,100\n28,0.4,300\n26,0.5,200\n26,0.8,500\n";
    fs::path exercise = dir / "exercise.csv";
    std::ofstream(exercise) << testutil::exercise_csv();

    auto capture = [&](const std::string& args) {
        fs::path out = dir / "out.txt";
        std::string command =
            std::string(GRADMINE_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
        if (std::system(command.c_str()) != 0) return std::string();
        return slurp(out);
    };

    const std::string runs[] = {
        "gp --input " + weather.string() + " --algorithm aco-graank --seed 3",
        "gp --input " + weather.string() + " --algorithm aco-paraminer --seed 11",
        "gp --input " + weather.string() + " --algorithm aco-paraminer --seed 11 --format csv",
        "tgp --input " + exercise.string() + " --ref exercise --engine aco --seed 2",
        "tgep --input " + exercise.string() + " --ref exercise --method trenc --seed 5",
    };
    for (const std::string& run : runs) {
        std::string first = capture(run);
        std::string second = capture(run);
        EXPECT(!first.empty());
        EXPECT(without_wall_time(first) == without_wall_time(second));
    }

    std::error_code ec;
    fs::remove_all(dir, ec);
    return ok;
}

} // namespace

int main() {
    struct Check {
        const char* name;
        bool (*fn)();
    };
    const Check checks[] = {
        {"pairwise concordance supports on the weather readings", concordance_supports},
        {"longest-chain supports on the weather readings", chain_supports},
        {"transactional encoding, reduction and item filter", transactional_encoding},
        {"tuple-pair cost matrix", pair_cost_matrix},
        {"step-1 transform, pattern support and time lag", temporal_transform_and_lag},
        {"growth rates and the surveyed emerging pattern", growth_goldens},
        {"fuzzy crossing of the humidity and insect series", fuzzy_crossing},
        {"randomized property suites", property_suites},
        {"seeded reruns produce identical reports", seeded_reruns},
    };

    int failures = 0;
    int index = 0;
    for (const Check& check : checks) {
        ++index;
        bool ok = false;
        try {
            ok = check.fn();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "    threw: %s\n", e.what());
        }
        std::printf("[%s] %d %s\n", ok ? "PASS" : "FAIL", index, check.name);
        if (!g_note.empty()) {
            std::printf("       %s\n", g_note.c_str());
            g_note.clear();
        }
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
