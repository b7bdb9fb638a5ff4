#include "gradmine/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace gradmine {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    std::size_t last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool parse_number(const std::string& text, double& out) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (begin != end && *begin == '+') ++begin;
    auto result = std::from_chars(begin, end, out);
    return result.ec == std::errc() && result.ptr == end;
}

std::string format_number(double v) {
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

// Days since 1970-01-01 for a civil date; valid across the Gregorian range.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

// Day of year in a year without a leap day, 1-based.
int day_of_year(unsigned m, unsigned d) {
    static const int before[12] = {0, 31, 59, 90, 120, 151, 181, 212, 243, 273, 304, 334};
    return before[m - 1] + static_cast<int>(d);
}

struct Cursor {
    const char* p;
    const char* end;

    bool read_int(int width_min, int width_max, long& out) {
        const char* start = p;
        long value = 0;
        while (p != end && *p >= '0' && *p <= '9' && (p - start) < width_max) {
            value = value * 10 + (*p - '0');
            ++p;
        }
        if (p - start < width_min) return false;
        out = value;
        return true;
    }

    bool read_char(char c) {
        if (p == end || *p != c) return false;
        ++p;
        return true;
    }

    bool done() const { return p == end; }
};

bool valid_month_day(long month, long day) {
    static const int days_in[12] = {31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return month >= 1 && month <= 12 && day >= 1 && day <= days_in[month - 1];
}

bool try_parse_format(const std::string& text, const std::string& format, double& out) {
    Cursor c{text.data(), text.data() + text.size()};
    long year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
    if (format == "%Y-%m-%d %H:%M:%S" || format == "%Y-%m-%dT%H:%M:%S") {
        char sep = format[8] == ' ' ? ' ' : 'T';
        if (!(c.read_int(4, 4, year) && c.read_char('-') && c.read_int(1, 2, month) &&
              c.read_char('-') && c.read_int(1, 2, day) && c.read_char(sep) &&
              c.read_int(1, 2, hour) && c.read_char(':') && c.read_int(1, 2, minute) &&
              c.read_char(':') && c.read_int(1, 2, second) && c.done()))
            return false;
        if (!valid_month_day(month, day) || hour > 23 || minute > 59 || second > 60) return false;
        out = static_cast<double>(days_from_civil(year, static_cast<unsigned>(month),
                                                  static_cast<unsigned>(day))) *
                  86400.0 +
              hour * 3600.0 + minute * 60.0 + second;
        return true;
    }
    if (format == "%Y-%m-%d") {
        if (!(c.read_int(4, 4, year) && c.read_char('-') && c.read_int(1, 2, month) &&
              c.read_char('-') && c.read_int(1, 2, day) && c.done()))
            return false;
        if (!valid_month_day(month, day)) return false;
        out = static_cast<double>(days_from_civil(year, static_cast<unsigned>(month),
                                                  static_cast<unsigned>(day))) *
              86400.0;
        return true;
    }
    if (format == "%d/%m/%Y") {
        if (!(c.read_int(1, 2, day) && c.read_char('/') && c.read_int(1, 2, month) &&
              c.read_char('/') && c.read_int(4, 4, year) && c.done()))
            return false;
        if (!valid_month_day(month, day)) return false;
        out = static_cast<double>(days_from_civil(year, static_cast<unsigned>(month),
                                                  static_cast<unsigned>(day))) *
              86400.0;
        return true;
    }
    if (format == "%d/%m") {
        if (!(c.read_int(1, 2, day) && c.read_char('/') && c.read_int(1, 2, month) && c.done()))
            return false;
        if (!valid_month_day(month, day)) return false;
        out = day_of_year(static_cast<unsigned>(month), static_cast<unsigned>(day)) * 86400.0;
        return true;
    }
    if (format == "%H:%M:%S") {
        if (!(c.read_int(1, 2, hour) && c.read_char(':') && c.read_int(1, 2, minute) &&
              c.read_char(':') && c.read_int(1, 2, second) && c.done()))
            return false;
        if (hour > 23 || minute > 59 || second > 60) return false;
        out = hour * 3600.0 + minute * 60.0 + second;
        return true;
    }
    if (format == "%H:%M") {
        if (!(c.read_int(1, 2, hour) && c.read_char(':') && c.read_int(1, 2, minute) && c.done()))
            return false;
        if (hour > 23 || minute > 59) return false;
        out = hour * 3600.0 + minute * 60.0;
        return true;
    }
    throw std::invalid_argument("unknown timestamp format: " + format);
}

std::vector<std::string> split_line(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == delimiter) {
            fields.push_back(trimmed(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(trimmed(current));
    return fields;
}

} // namespace

std::vector<std::string> IngestOptions::default_timestamp_formats() {
    return {"%Y-%m-%d %H:%M:%S", "%Y-%m-%dT%H:%M:%S", "%Y-%m-%d",
            "%d/%m/%Y",          "%d/%m",              "%H:%M:%S",
            "%H:%M"};
}

double parse_timestamp(const std::string& text, const std::vector<std::string>& formats) {
    std::string t = trimmed(text);
    for (const auto& format : formats) {
        double value = 0.0;
        if (try_parse_format(t, format, value)) return value;
    }
    throw ParseError("not a timestamp: '" + text + "'");
}

const std::vector<double>& NumericDataset::time_values() const {
    if (!time_column) throw std::logic_error("dataset has no time column");
    return attributes[*time_column].values;
}

std::vector<std::size_t> NumericDataset::numeric_columns() const {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < attributes.size(); ++i)
        if (!is_time_column(i)) cols.push_back(i);
    return cols;
}

std::optional<std::size_t> NumericDataset::attribute_index(const std::string& attr_name) const {
    for (std::size_t i = 0; i < attributes.size(); ++i)
        if (attributes[i].name == attr_name) return i;
    return std::nullopt;
}

void NumericDataset::validate() const {
    if (attributes.empty()) throw std::invalid_argument("dataset has no attributes");
    for (const auto& attr : attributes)
        if (attr.values.size() != tuple_count)
            throw std::invalid_argument("attribute '" + attr.name + "' has " +
                                        std::to_string(attr.values.size()) + " values, expected " +
                                        std::to_string(tuple_count));
    if (time_column && *time_column >= attributes.size())
        throw std::invalid_argument("time column index out of range");
}

NumericDataset load_csv(std::istream& source, const IngestOptions& opts) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(source, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trimmed(line).empty()) continue;
        rows.push_back(split_line(line, opts.delimiter));
    }
    if (rows.empty()) throw ParseError("input has no rows");

    std::size_t column_count = rows[0].size();
    for (std::size_t r = 1; r < rows.size(); ++r)
        if (rows[r].size() != column_count)
            throw ParseError("row " + std::to_string(r + 1) + " has " +
                             std::to_string(rows[r].size()) + " fields, expected " +
                             std::to_string(column_count));

    std::vector<std::string> names;
    std::size_t first_data_row = 0;
    if (opts.has_header) {
        names = rows[0];
        first_data_row = 1;
        if (rows.size() == 1) throw ParseError("input has a header but no data rows");
    } else {
        for (std::size_t i = 0; i < column_count; ++i) names.push_back("c" + std::to_string(i + 1));
    }
    std::size_t data_rows = rows.size() - first_data_row;

    std::optional<std::size_t> hinted;
    if (!opts.time_column_hint.empty()) {
        auto by_name = std::find(names.begin(), names.end(), opts.time_column_hint);
        if (by_name != names.end()) {
            hinted = static_cast<std::size_t>(by_name - names.begin());
        } else {
            double numeric = 0.0;
            if (parse_number(opts.time_column_hint, numeric) && numeric >= 0 &&
                numeric < static_cast<double>(column_count) &&
                numeric == static_cast<double>(static_cast<std::size_t>(numeric))) {
                hinted = static_cast<std::size_t>(numeric);
            } else {
                throw std::invalid_argument("time column '" + opts.time_column_hint +
                                            "' not found");
            }
        }
    }

    NumericDataset ds;
    ds.tuple_count = data_rows;
    ds.attributes.resize(column_count);
    for (std::size_t c = 0; c < column_count; ++c) ds.attributes[c].name = names[c];

    // A column qualifies as the time column when one format parses every cell;
    // plain numeric columns qualify only when hinted.
    auto column_time_format = [&](std::size_t c) -> std::optional<std::string> {
        for (const auto& format : opts.timestamp_formats) {
            bool all = true;
            for (std::size_t r = first_data_row; r < rows.size() && all; ++r) {
                double value = 0.0;
                if (!try_parse_format(rows[r][c], format, value)) all = false;
            }
            if (all && data_rows > 0) return format;
        }
        return std::nullopt;
    };
    auto column_all_numeric = [&](std::size_t c) {
        for (std::size_t r = first_data_row; r < rows.size(); ++r) {
            double value = 0.0;
            if (!parse_number(rows[r][c], value)) return false;
        }
        return true;
    };

    std::optional<std::size_t> time_col = hinted;
    std::optional<std::string> time_format;
    if (hinted) {
        if (!column_all_numeric(*hinted)) {
            time_format = column_time_format(*hinted);
            if (!time_format)
                throw ParseError("time column '" + names[*hinted] +
                                 "' matches no timestamp format");
        }
    } else {
        for (std::size_t c = 0; c < column_count && !time_col; ++c) {
            if (column_all_numeric(c)) continue;
            if (auto format = column_time_format(c)) {
                time_col = c;
                time_format = format;
            }
        }
    }

    for (std::size_t c = 0; c < column_count; ++c) {
        auto& values = ds.attributes[c].values;
        values.reserve(data_rows);
        bool as_time = time_col && *time_col == c && time_format.has_value();
        for (std::size_t r = first_data_row; r < rows.size(); ++r) {
            const std::string& cell = rows[r][c];
            if (cell.empty())
                throw ParseError("missing value at row " + std::to_string(r + 1) + ", column '" +
                                 names[c] + "'");
            double value = 0.0;
            if (as_time) {
                if (!try_parse_format(cell, *time_format, value))
                    throw ParseError("bad timestamp '" + cell + "' at row " + std::to_string(r + 1));
            } else if (!parse_number(cell, value)) {
                if (time_col && *time_col == c) {
                    value = parse_timestamp(cell, opts.timestamp_formats);
                } else {
                    throw ParseError("bad number '" + cell + "' at row " + std::to_string(r + 1) +
                                     ", column '" + names[c] + "'");
                }
            }
            values.push_back(value);
        }
    }
    ds.time_column = time_col;
    ds.validate();
    return ds;
}

NumericDataset load_csv_text(const std::string& text, const IngestOptions& opts) {
    std::istringstream stream(text);
    return load_csv(stream, opts);
}

NumericDataset load_csv_file(const std::string& path, const IngestOptions& opts) {
    std::ifstream stream(path);
    if (!stream) throw IoError("cannot open file: " + path);
    NumericDataset ds = load_csv(stream, opts);
    ds.name = std::filesystem::path(path).stem().string();
    return ds;
}

std::string to_csv(const NumericDataset& ds, char delimiter) {
    std::string out;
    for (std::size_t c = 0; c < ds.attributes.size(); ++c) {
        if (c) out.push_back(delimiter);
        out += ds.attributes[c].name;
    }
    out.push_back('\n');
    for (std::size_t r = 0; r < ds.tuple_count; ++r) {
        for (std::size_t c = 0; c < ds.attributes.size(); ++c) {
            if (c) out.push_back(delimiter);
            out += format_number(ds.attributes[c].values[r]);
        }
        out.push_back('\n');
    }
    return out;
}

} // namespace gradmine
