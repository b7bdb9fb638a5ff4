#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradmine/dataset.hpp"

#include "testing.hpp"

#include <cstdio>
#include <fstream>
#include <string>

using namespace gradmine;

TEST_CASE("csv with header loads names and values") {
    NumericDataset ds = load_csv_text("a,b\n1,2\n3,4\n5,6\n");
    REQUIRE(ds.attributes.size() == 2);
    CHECK(ds.attributes[0].name == "a");
    CHECK(ds.attributes[1].name == "b");
    REQUIRE(ds.tuple_count == 3);
    CHECK(ds.attributes[0].values == std::vector<double>{1, 3, 5});
    CHECK(ds.attributes[1].values == std::vector<double>{2, 4, 6});
    CHECK(!ds.has_time());
}

TEST_CASE("headerless csv names columns c1..cN") {
    IngestOptions opts;
    opts.has_header = false;
    NumericDataset ds = load_csv_text("1,2,3\n4,5,6\n", opts);
    CHECK(ds.attributes[0].name == "c1");
    CHECK(ds.attributes[2].name == "c3");
    CHECK(ds.tuple_count == 2);
}

TEST_CASE("alternative delimiter and padding") {
    IngestOptions opts;
    opts.delimiter = ';';
    NumericDataset ds = load_csv_text("x; y\n 1 ; 2\n3;4\n", opts);
    CHECK(ds.attributes[1].name == "y");
    CHECK(ds.attributes[0].values == std::vector<double>{1, 3});
}

TEST_CASE("blank lines and CRLF endings are tolerated") {
    NumericDataset ds = load_csv_text("a,b\r\n\r\n1,2\r\n\n3,4\n");
    CHECK(ds.tuple_count == 2);
    CHECK(ds.attributes[1].values == std::vector<double>{2, 4});
}

TEST_CASE("day/month dates auto-detect as the time column") {
    NumericDataset ds = load_csv_text(testutil::exercise_csv());
    REQUIRE(ds.has_time());
    CHECK(*ds.time_column == 0);
    CHECK(ds.time_values() ==
          std::vector<double>{152 * 86400.0, 155 * 86400.0, 156 * 86400.0, 161 * 86400.0,
                              163 * 86400.0});
    CHECK(ds.numeric_columns() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("clock times auto-detect as seconds since midnight") {
    NumericDataset ds = load_csv_text(testutil::flies_csv());
    REQUIRE(ds.has_time());
    CHECK(ds.time_values()[0] == 12 * 3600.0 + 60.0);
    CHECK(ds.time_values()[4] == 12 * 3600.0 + 5 * 60.0);
}

TEST_CASE("parse_timestamp handles every documented format") {
    auto formats = IngestOptions::default_timestamp_formats();
    CHECK(parse_timestamp("1970-01-02", formats) == 86400.0);
    CHECK(parse_timestamp("1970-01-01 01:00:00", formats) == 3600.0);
    CHECK(parse_timestamp("1970-01-01T00:01:00", formats) == 60.0);
    CHECK(parse_timestamp("01/02/1970", formats) == 31 * 86400.0);
    CHECK(parse_timestamp("01/06", formats) == 152 * 86400.0);
    CHECK(parse_timestamp("00:00:30", formats) == 30.0);
    CHECK(parse_timestamp("23:59", formats) == 23 * 3600.0 + 59 * 60.0);
    CHECK_THROWS_AS(parse_timestamp("not-a-time", formats), ParseError);
    CHECK_THROWS_AS(parse_timestamp("32/01", formats), ParseError);
}

TEST_CASE("time column hint by name and by index") {
    IngestOptions by_name;
    by_name.time_column_hint = "when";
    NumericDataset named = load_csv_text("when,v\n12:00,1\n12:05,2\n", by_name);
    CHECK(named.is_time_column(0));

    IngestOptions by_index;
    by_index.time_column_hint = "1";
    NumericDataset indexed = load_csv_text("v,stamp\n1,100\n2,200\n", by_index);
    REQUIRE(indexed.has_time());
    CHECK(*indexed.time_column == 1);
    CHECK(indexed.time_values() == std::vector<double>{100, 200});

    IngestOptions missing;
    missing.time_column_hint = "nope";
    CHECK_THROWS_AS(load_csv_text("a,b\n1,2\n", missing), std::invalid_argument);
}

TEST_CASE("hinted column that matches no format is rejected") {
    IngestOptions opts;
    opts.time_column_hint = "a";
    CHECK_THROWS_AS(load_csv_text("a,b\nx1,2\nx2,3\n", opts), ParseError);
}

TEST_CASE("malformed inputs raise ParseError") {
    CHECK_THROWS_AS(load_csv_text(""), ParseError);
    CHECK_THROWS_AS(load_csv_text("a,b\n"), ParseError);
    CHECK_THROWS_AS(load_csv_text("a,b\n1,2\n3\n"), ParseError);
    CHECK_THROWS_AS(load_csv_text("a,b\n1,oops\n"), ParseError);
    CHECK_THROWS_AS(load_csv_text("a,b\n1,\n"), ParseError);
}

TEST_CASE("file loading sets the dataset name and flags missing files") {
    CHECK_THROWS_AS(load_csv_file("/nonexistent/gone.csv"), IoError);

    std::string path = "dataset_roundtrip_tmp.csv";
    {
        std::ofstream out(path);
        out << "p,q\n1,2\n3,4\n";
    }
    NumericDataset ds = load_csv_file(path);
    CHECK(ds.name == "dataset_roundtrip_tmp");
    CHECK(ds.tuple_count == 2);
    std::remove(path.c_str());
}

TEST_CASE("to_csv writes header plus rows") {
    NumericDataset ds = testutil::make_dataset({{"a", {1, 2.5}}, {"b", {3, 4}}});
    CHECK(to_csv(ds) == "a,b\n1,3\n2.5,4\n");
    CHECK(to_csv(ds, ';') == "a;b\n1;3\n2.5;4\n");
}

TEST_CASE("validate rejects inconsistent shapes") {
    NumericDataset empty;
    CHECK_THROWS_AS(empty.validate(), std::invalid_argument);

    NumericDataset ragged = testutil::make_dataset({{"a", {1, 2}}, {"b", {3}}});
    CHECK_THROWS_AS(ragged.validate(), std::invalid_argument);

    NumericDataset bad_time = testutil::make_dataset({{"a", {1, 2}}}, 5);
    CHECK_THROWS_AS(bad_time.validate(), std::invalid_argument);

    CHECK_THROWS_AS(testutil::weather4().time_values(), std::logic_error);
}

TEST_CASE("attribute_index finds columns by name") {
    NumericDataset ds = testutil::weather4();
    CHECK(ds.attribute_index("hum") == std::size_t{1});
    CHECK(!ds.attribute_index("missing").has_value());
}
