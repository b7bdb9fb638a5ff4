#include "gradmine/report.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>

namespace gradmine {

namespace {

std::string format_number(double v) {
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

std::string csv_field(const std::string& text, char delimiter) {
    bool needs_quotes = text.find(delimiter) != std::string::npos ||
                        text.find('"') != std::string::npos ||
                        text.find('\n') != std::string::npos;
    if (!needs_quotes) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

nlohmann::json items_to_json(const NumericDataset& ds, const std::vector<GradualItem>& items) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& item : items) arr.push_back(item_text(ds, item));
    return arr;
}

nlohmann::json growth_to_json(double growth) {
    if (std::isinf(growth)) return "inf";
    return growth;
}

std::string items_text(const NumericDataset& ds, const std::vector<GradualItem>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out.push_back(',');
        out += item_text(ds, items[i]);
    }
    return out;
}

} // namespace

nlohmann::json support_to_json(const Support& s) {
    return {{"fraction", s.text()}, {"decimal", s.value()}};
}

nlohmann::json lag_to_json(const TimeLag& lag) {
    if (!lag.valid) return nullptr;
    return {{"sign", std::string(1, lag.sign())},
            {"seconds", std::abs(lag.seconds)},
            {"sup", support_to_json(lag.sup)}};
}

nlohmann::json pattern_to_json(const NumericDataset& ds, const GradualPattern& p) {
    return {{"items", items_to_json(ds, p.items)}, {"support", support_to_json(p.support)}};
}

nlohmann::json tgp_to_json(const NumericDataset& ds, const TemporalGradualPattern& p) {
    return {{"items", items_to_json(ds, p.pattern.items)},
            {"support", support_to_json(p.pattern.support)},
            {"time_lag", lag_to_json(p.lag)},
            {"representativity", support_to_json(p.representativity)},
            {"step", p.step}};
}

nlohmann::json tgep_to_json(const NumericDataset& ds, const TemporalGradualEmergingPattern& p) {
    nlohmann::json out = {{"items", items_to_json(ds, p.items)},
                          {"growth_rate", growth_to_json(p.growth)},
                          {"supports", {p.support_from, p.support_to}},
                          {"steps", {p.step_from, p.step_to}}};
    out["lag_from"] = p.lag_from_seconds ? nlohmann::json(*p.lag_from_seconds) : nullptr;
    out["lag_to"] = p.lag_to_seconds ? nlohmann::json(*p.lag_to_seconds) : nullptr;
    out["lag_mean"] = p.lag_mean_seconds ? nlohmann::json(*p.lag_mean_seconds) : nullptr;
    return out;
}

nlohmann::json crossed_to_json(const CrossedDataset& crossed) {
    nlohmann::json columns = nlohmann::json::array();
    for (const auto& attr : crossed.data.attributes) columns.push_back(attr.name);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < crossed.data.tuple_count; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& attr : crossed.data.attributes) row.push_back(attr.values[r]);
        rows.push_back(std::move(row));
    }
    return {{"columns", columns}, {"rows", rows}};
}

std::string patterns_to_csv(const NumericDataset& ds, const std::vector<GradualPattern>& patterns) {
    std::string out = "items,support_fraction,support\n";
    for (const auto& p : patterns) {
        out += csv_field(items_text(ds, p.items), ',');
        out.push_back(',');
        out += p.support.text();
        out.push_back(',');
        out += format_number(p.support.value());
        out.push_back('\n');
    }
    return out;
}

std::string tgps_to_csv(const NumericDataset& ds, const std::vector<TemporalGradualPattern>& patterns) {
    std::string out =
        "items,support,time_lag_sign,time_lag_seconds,time_lag_sup,representativity,step\n";
    for (const auto& p : patterns) {
        out += csv_field(items_text(ds, p.pattern.items), ',');
        out.push_back(',');
        out += format_number(p.pattern.support.value());
        out.push_back(',');
        out.push_back(p.lag.valid ? p.lag.sign() : '?');
        out.push_back(',');
        out += p.lag.valid ? format_number(std::abs(p.lag.seconds)) : "";
        out.push_back(',');
        out += p.lag.valid ? format_number(p.lag.sup.value()) : "";
        out.push_back(',');
        out += format_number(p.representativity.value());
        out.push_back(',');
        out += std::to_string(p.step);
        out.push_back('\n');
    }
    return out;
}

std::string tgeps_to_csv(const NumericDataset& ds,
                         const std::vector<TemporalGradualEmergingPattern>& patterns) {
    std::string out =
        "items,growth_rate,lag_from,lag_to,lag_mean,support_from,support_to,step_from,step_to\n";
    for (const auto& p : patterns) {
        out += csv_field(items_text(ds, p.items), ',');
        out.push_back(',');
        out += format_number(p.growth);
        out.push_back(',');
        out += p.lag_from_seconds ? format_number(*p.lag_from_seconds) : "";
        out.push_back(',');
        out += p.lag_to_seconds ? format_number(*p.lag_to_seconds) : "";
        out.push_back(',');
        out += p.lag_mean_seconds ? format_number(*p.lag_mean_seconds) : "";
        out.push_back(',');
        out += format_number(p.support_from);
        out.push_back(',');
        out += format_number(p.support_to);
        out.push_back(',');
        out += std::to_string(p.step_from);
        out.push_back(',');
        out += std::to_string(p.step_to);
        out.push_back('\n');
    }
    return out;
}

} // namespace gradmine
