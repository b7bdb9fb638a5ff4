#include "doctest.h"

#include "gradmine/fuzztx.hpp"

#include "testing.hpp"

#include <set>
#include <stdexcept>
#include <vector>

using namespace gradmine;

TEST_CASE("triangular membership ramps between the feet") {
    TriangularMF mf{0, 2, 4};
    CHECK(membership(mf, 2) == 1.0);
    CHECK(membership(mf, 1) == doctest::Approx(0.5));
    CHECK(membership(mf, 3) == doctest::Approx(0.5));
    CHECK(membership(mf, 0) == 0.0);
    CHECK(membership(mf, 4) == 0.0);
    CHECK(membership(mf, -1) == 0.0);
    CHECK(membership(mf, 5) == 0.0);

    CHECK(membership({2, 2, 4}, 2) == 1.0);
    CHECK(membership({2, 2, 4}, 3) == doctest::Approx(0.5));
    CHECK(membership({2, 2, 4}, 1) == 0.0);
    CHECK(membership({0, 2, 2}, 1) == doctest::Approx(0.5));
    CHECK(membership({0, 2, 2}, 3) == 0.0);
    CHECK(membership({2, 2, 2}, 2) == 1.0);
    CHECK(membership({2, 2, 2}, 1.999) == 0.0);
}

TEST_CASE("crossing the fly counts with the humidity readings") {
    NumericDataset humidity = load_csv_text(testutil::humidity_csv());
    humidity.name = "hum_readings";
    NumericDataset flies = load_csv_text(testutil::flies_csv());
    flies.name = "fly_counts";

    CrossedDataset crossed = cross({humidity, flies});
    REQUIRE(crossed.data.attributes.size() == 3);
    CHECK(crossed.data.attributes[0].name == "time");
    CHECK(crossed.data.attributes[1].name == "humidity");
    CHECK(crossed.data.attributes[2].name == "flies");
    CHECK(crossed.data.time_column == 0);

    REQUIRE(crossed.data.tuple_count == 4);
    CHECK(crossed.data.attributes[0].values == std::vector<double>{43200, 43320, 43440, 43560});
    CHECK(crossed.data.attributes[1].values == std::vector<double>{30, 35, 40, 50});
    CHECK(crossed.data.attributes[2].values == std::vector<double>{50, 160, 243, 259});

    REQUIRE(crossed.provenance.size() == 4);
    CHECK(crossed.provenance[0] == std::vector<std::size_t>{0, 0});
    CHECK(crossed.provenance[1] == std::vector<std::size_t>{1, 1});
    CHECK(crossed.provenance[2] == std::vector<std::size_t>{2, 3});
    CHECK(crossed.provenance[3] == std::vector<std::size_t>{3, 4});

    CHECK(to_csv(crossed.data) ==
          "time,humidity,flies\n"
          "43200,30,50\n"
          "43320,35,160\n"
          "43440,40,243\n"
          "43560,50,259\n");
}

TEST_CASE("the earliest series owns the leftmost columns either way") {
    NumericDataset humidity = load_csv_text(testutil::humidity_csv());
    NumericDataset flies = load_csv_text(testutil::flies_csv());

    CrossedDataset crossed = cross({flies, humidity});
    REQUIRE(crossed.data.attributes.size() == 3);
    CHECK(crossed.data.attributes[1].name == "humidity");
    CHECK(crossed.data.attributes[2].name == "flies");
    CHECK(crossed.data.tuple_count == 4);
    REQUIRE(crossed.provenance.size() == 4);
    CHECK(crossed.provenance[2] == std::vector<std::size_t>{3, 2});
}

TEST_CASE("every tuple is consumed at most once") {
    NumericDataset humidity = load_csv_text(testutil::humidity_csv());
    NumericDataset flies = load_csv_text(testutil::flies_csv());
    CrossedDataset crossed = cross({humidity, flies});

    for (std::size_t source = 0; source < 2; ++source) {
        std::set<std::size_t> used;
        for (const std::vector<std::size_t>& row : crossed.provenance) {
            REQUIRE(row.size() == 2);
            CHECK(used.insert(row[source]).second);
        }
    }
}

TEST_CASE("unsorted timestamps are swept in time order") {
    NumericDataset left = testutil::make_dataset({{"t", {200, 0, 100}}, {"v", {3, 1, 2}}}, 0);
    left.name = "left";
    NumericDataset right = testutil::make_dataset({{"t", {0, 100, 200}}, {"w", {10, 20, 30}}}, 0);
    right.name = "right";

    CrossedDataset crossed = cross({left, right});
    CHECK(crossed.data.attributes[1].name == "v");
    CHECK(crossed.data.attributes[2].name == "w");
    REQUIRE(crossed.data.tuple_count == 3);
    CHECK(crossed.data.attributes[0].values == std::vector<double>{0, 100, 200});
    CHECK(crossed.data.attributes[1].values == std::vector<double>{1, 2, 3});
    CHECK(crossed.data.attributes[2].values == std::vector<double>{10, 20, 30});
    CHECK(crossed.provenance ==
          std::vector<std::vector<std::size_t>>{{1, 0}, {2, 1}, {0, 2}});
}

TEST_CASE("colliding attribute names are prefixed with their source") {
    NumericDataset a = testutil::make_dataset({{"t", {0, 100}}, {"v", {1, 2}}}, 0);
    a.name = "north";
    NumericDataset b = testutil::make_dataset({{"t", {0, 100}}, {"v", {3, 4}}}, 0);
    b.name = "south";

    CrossedDataset crossed = cross({a, b});
    CHECK(crossed.data.attributes[1].name == "north.v");
    CHECK(crossed.data.attributes[2].name == "south.v");
    CHECK(crossed.data.tuple_count == 2);
}

TEST_CASE("a single reading joins the stop it belongs to") {
    NumericDataset lone = testutil::make_dataset({{"t", {100}}, {"v", {7}}}, 0);
    lone.name = "lone";
    NumericDataset steady = testutil::make_dataset({{"t", {0, 100, 200}}, {"w", {1, 2, 3}}}, 0);
    steady.name = "steady";

    CrossedDataset crossed = cross({lone, steady});
    REQUIRE(crossed.data.tuple_count == 1);
    CHECK(crossed.data.attributes[0].values == std::vector<double>{100});
    CHECK(crossed.data.attributes[1].name == "w");
    CHECK(crossed.data.attributes[1].values == std::vector<double>{2});
    CHECK(crossed.data.attributes[2].values == std::vector<double>{7});
    CHECK(crossed.provenance == std::vector<std::vector<std::size_t>>{{0, 1}});
}

TEST_CASE("series without any positive gap cross to nothing") {
    NumericDataset a = testutil::make_dataset({{"t", {50, 50, 50}}, {"v", {1, 2, 3}}}, 0);
    a.name = "flat_a";
    NumericDataset b = testutil::make_dataset({{"t", {60, 60}}, {"w", {4, 5}}}, 0);
    b.name = "flat_b";

    CrossedDataset crossed = cross({a, b});
    CHECK(crossed.data.tuple_count == 0);
    CHECK(crossed.data.attributes.size() == 3);
    CHECK(crossed.provenance.empty());
}

TEST_CASE("crossing validates its sources") {
    NumericDataset timed = testutil::make_dataset({{"t", {0, 100}}, {"v", {1, 2}}}, 0);
    timed.name = "timed";
    CHECK_THROWS_AS(cross({timed}), std::invalid_argument);

    NumericDataset untimed = testutil::make_dataset({{"v", {1, 2}}});
    untimed.name = "untimed";
    CHECK_THROWS_WITH_AS(cross({timed, untimed}), "source 'untimed' has no time column",
                         std::invalid_argument);

    NumericDataset empty = testutil::make_dataset({{"t", {}}, {"v", {}}}, 0);
    empty.name = "bare";
    CHECK_THROWS_WITH_AS(cross({timed, empty}), "source 'bare' is empty", std::invalid_argument);
}
