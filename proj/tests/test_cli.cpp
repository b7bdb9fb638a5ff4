#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Fixture files live in a per-process temp directory so parallel ctest runs
// cannot trample each other.
struct Workspace {
    fs::path dir;

    Workspace() {
        dir = fs::temp_directory_path() / ("gradmine_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Workspace() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }

    std::string file(const std::string& name, const std::string& content) const {
        fs::path path = dir / name;
        std::ofstream(path, std::ios::binary) << content;
        return path.string();
    }

    CliRun run(const std::string& args, const std::string& stdin_file = "",
               const std::string& env = "") const {
        static int counter = 0;
        fs::path out = dir / ("stdout_" + std::to_string(++counter));
        fs::path err = dir / ("stderr_" + std::to_string(counter));
        std::string command;
        if (!env.empty()) command += env + " ";
        command += GRADMINE_CLI_PATH;
        command += " " + args;
        if (!stdin_file.empty()) command += " < " + stdin_file;
        command += " > " + out.string() + " 2> " + err.string();
        int status = std::system(command.c_str());
        CliRun run;
        run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        run.out = slurp(out);
        run.err = slurp(err);
        return run;
    }
};

const char* weather_csv() {
    return "temp,hum,mos\n30,0.2,100\n28,0.4,300\n26,0.5,200\n26,0.8,500\n";
}

const char* exercise_csv() {
    return "date,exercise,stress\n01/06,1,4\n04/06,2,2\n05/06,3,3\n10/06,1,2\n12/06,3,3\n";
}

const char* weather_patterns_csv() {
    return "items,support_fraction,support\n"
           "\"temp+,hum-\",5/6,0.8333333333333334\n"
           "\"temp-,hum+\",5/6,0.8333333333333334\n"
           "\"hum+,mos+\",5/6,0.8333333333333334\n"
           "\"hum-,mos-\",5/6,0.8333333333333334\n";
}

std::string strip_wall_ms(const std::string& report) {
    nlohmann::json doc = nlohmann::json::parse(report);
    doc["stats"].erase("wall_ms");
    return doc.dump(2);
}

} // namespace

TEST_CASE("mining emits a json report that echoes the configuration") {
    Workspace ws;
    std::string input = ws.file("weather.csv", weather_csv());
    CliRun run = ws.run("gp --input " + input + " --min-sup 0.8");
    CAPTURE(run.err);
    REQUIRE(run.exit_code == 0);
    REQUIRE(run.err.empty());

    nlohmann::json doc = nlohmann::json::parse(run.out);
    CHECK(doc["config"]["command"] == "gp");
    CHECK(doc["config"]["algorithm"] == "graank");
    CHECK(doc["config"]["input"] == input);
    CHECK(doc["config"]["min_sup"] == 0.8);
    CHECK(doc["stats"]["algorithm"] == "graank");
    CHECK(doc["stats"]["count"] == 4);
    CHECK(doc["patterns"].size() == 4);
    CHECK(run.out.back() == '\n');
}

TEST_CASE("the csv format prints the bare pattern table") {
    Workspace ws;
    std::string input = ws.file("weather.csv", weather_csv());
    CliRun run = ws.run("gp --input " + input + " --min-sup 0.8 --format csv");
    CAPTURE(run.err);
    REQUIRE(run.exit_code == 0);
    CHECK(run.out == weather_patterns_csv());
}

TEST_CASE("temporal mining reports lags per transform step") {
    Workspace ws;
    std::string input = ws.file("exercise.csv", exercise_csv());
    CliRun run = ws.run("tgp --input " + input +
                        " --ref exercise --min-rep 0.8 --format csv");
    CAPTURE(run.err);
    REQUIRE(run.exit_code == 0);
    CHECK(run.out ==
          "items,support,time_lag_sign,time_lag_seconds,time_lag_sup,representativity,step\n"
          "\"exercise+,stress+\",0.5,+,216000,0.5,0.8,1\n"
          "\"exercise+,stress-\",0.5,+,129600,0.5,0.8,1\n");
}

TEST_CASE("crossing accepts several inputs and keeps their time order") {
    Workspace ws;
    std::string humidity = ws.file(
        "humidity.csv", "time,humidity\n12:00,30\n12:02,35\n12:04,40\n12:06,50\n12:08,52\n");
    std::string flies = ws.file(
        "flies.csv", "time,flies\n12:01,50\n12:02,160\n12:03,230\n12:04,243\n12:05,259\n");
    CliRun run = ws.run("cross --input " + humidity + " --input " + flies + " --format csv");
    CAPTURE(run.err);
    REQUIRE(run.exit_code == 0);
    CHECK(run.out ==
          "time,humidity,flies\n43200,30,50\n43320,35,160\n43440,40,243\n43560,50,259\n");

    CliRun json_run = ws.run("cross --input " + humidity + " --input " + flies);
    REQUIRE(json_run.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(json_run.out);
    CHECK(doc["config"]["command"] == "cross");
    CHECK(doc["config"]["inputs"].size() == 2);
    CHECK(doc["crossed"]["rows"].size() == 4);
}

TEST_CASE("--out writes the report to a file instead of stdout") {
    Workspace ws;
    std::string input = ws.file("weather.csv", weather_csv());
    std::string target = (ws.dir / "report.csv").string();
    CliRun run = ws.run("gp --input " + input + " --min-sup 0.8 --format csv --out " + target);
    CAPTURE(run.err);
    REQUIRE(run.exit_code == 0);
    CHECK(run.out.empty());
    CHECK(slurp(target) == weather_patterns_csv());
}

TEST_CASE("a dash input reads the dataset from stdin") {
    Workspace ws;
    std::string input = ws.file("weather.csv", weather_csv());
    CliRun run = ws.run("gp --input - --min-sup 0.8 --format csv", input);
    CAPTURE(run.err);
    REQUIRE(run.exit_code == 0);
    CHECK(run.out == weather_patterns_csv());
}

TEST_CASE("delimiter and header flags reach the loader") {
    Workspace ws;
    std::string input = ws.file("bare.csv", "1;4\n2;2\n3;3\n");
    CliRun run = ws.run("gp --input " + input +
                        " --no-header --delimiter ';' --min-sup 0.5 --format csv");
    CAPTURE(run.err);
    REQUIRE(run.exit_code == 0);
    CHECK(run.out.find("c1+") != std::string::npos);
    CHECK(run.out.find("c2-") != std::string::npos);
}

TEST_CASE("seeded runs repeat byte for byte") {
    Workspace ws;
    std::string input = ws.file("weather.csv", weather_csv());
    std::string args = "gp --input " + input + " --algorithm aco-graank --seed 5";
    CliRun first = ws.run(args + " --format csv");
    CliRun second = ws.run(args + " --format csv");
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());

    CliRun json_a = ws.run(args);
    CliRun json_b = ws.run(args);
    REQUIRE(json_a.exit_code == 0);
    CHECK(strip_wall_ms(json_a.out) == strip_wall_ms(json_b.out));
}

TEST_CASE("the seed can come from the environment") {
    Workspace ws;
    std::string input = ws.file("weather.csv", weather_csv());
    CliRun run = ws.run("gp --input " + input + " --algorithm aco-graank", "",
                        "GRADMINE_SEED=9");
    CAPTURE(run.err);
    REQUIRE(run.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(run.out);
    CHECK(doc["config"]["seed"] == 9);
    CHECK(doc["stats"]["seed"] == 9);
}

TEST_CASE("usage mistakes exit with 2") {
    Workspace ws;
    std::string input = ws.file("weather.csv", weather_csv());
    CHECK(ws.run("").exit_code == 2);
    CHECK(ws.run("excavate --input " + input).exit_code == 2);
    CHECK(ws.run("gp").exit_code == 2);
    CHECK(ws.run("gp --input " + input + " --algorithm apriori").exit_code == 2);
    CHECK(ws.run("tgp --input " + input).exit_code == 2);
    CHECK(ws.run("cross --input " + input).exit_code == 2);
    CHECK(ws.run("gp --input " + input + " --format yaml").exit_code == 2);
}

TEST_CASE("runtime failures exit with 1 and explain themselves") {
    Workspace ws;
    std::string input = ws.file("exercise.csv", exercise_csv());

    CliRun missing = ws.run("gp --input " + (ws.dir / "absent.csv").string());
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("cannot open file") != std::string::npos);

    CliRun bad_ref = ws.run("tgp --input " + input + " --ref nope");
    CHECK(bad_ref.exit_code == 1);
    CHECK(bad_ref.err.find("unknown attribute 'nope'") != std::string::npos);

    std::string untimed = ws.file("weather.csv", weather_csv());
    CliRun no_time = ws.run("tgp --input " + untimed + " --ref temp");
    CHECK(no_time.exit_code == 1);
    CHECK_FALSE(no_time.err.empty());
}

TEST_CASE("help is a successful exit") {
    Workspace ws;
    CliRun run = ws.run("--help");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("Usage") != std::string::npos);
    CHECK(run.out.find("gp") != std::string::npos);
}
