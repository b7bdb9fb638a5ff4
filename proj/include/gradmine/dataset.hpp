#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gradmine {

struct Attribute {
    std::string name;
    std::vector<double> values;
};

// Dense numeric table with an optional timestamp column (seconds).
// Immutable after construction; all mining code shares const references.
struct NumericDataset {
    std::string name;
    std::vector<Attribute> attributes;
    std::size_t tuple_count = 0;
    std::optional<std::size_t> time_column;

    bool has_time() const { return time_column.has_value(); }
    const std::vector<double>& time_values() const;
    bool is_time_column(std::size_t idx) const {
        return time_column && *time_column == idx;
    }
    std::vector<std::size_t> numeric_columns() const;
    std::optional<std::size_t> attribute_index(const std::string& attr_name) const;
    void validate() const;
};

struct IngestOptions {
    char delimiter = ',';
    bool has_header = true;
    // Name or 0-based index of the timestamp column; empty means auto-detect.
    std::string time_column_hint;
    // Ordered list of format names; first match wins per column.
    // Known formats: "%Y-%m-%d %H:%M:%S", "%Y-%m-%dT%H:%M:%S", "%Y-%m-%d",
    // "%d/%m/%Y", "%d/%m", "%H:%M:%S", "%H:%M".
    std::vector<std::string> timestamp_formats = default_timestamp_formats();

    static std::vector<std::string> default_timestamp_formats();
};

class ParseError : public std::exception {
public:
    explicit ParseError(std::string msg) : msg_(std::move(msg)) {}
    const char* what() const noexcept override { return msg_.c_str(); }

private:
    std::string msg_;
};

class IoError : public std::exception {
public:
    explicit IoError(std::string msg) : msg_(std::move(msg)) {}
    const char* what() const noexcept override { return msg_.c_str(); }

private:
    std::string msg_;
};

// Seconds for a timestamp string under the first matching format.
// Date-bearing formats anchor to 1970-01-01; time-of-day formats to midnight;
// day/month without a year maps to day-of-year * 86400.
double parse_timestamp(const std::string& text, const std::vector<std::string>& formats);

NumericDataset load_csv(std::istream& source, const IngestOptions& opts = {});
NumericDataset load_csv_text(const std::string& text, const IngestOptions& opts = {});
NumericDataset load_csv_file(const std::string& path, const IngestOptions& opts = {});

// Header + rows; the time column is written as raw seconds, so a re-load
// needs the column hint to recover it as time.
std::string to_csv(const NumericDataset& ds, char delimiter = ',');

} // namespace gradmine
