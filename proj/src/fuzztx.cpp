#include "gradmine/fuzztx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gradmine {

double membership(const TriangularMF& mf, double t) {
    if (t == mf.b) return 1.0;
    if (t < mf.b) return mf.b > mf.a && t > mf.a ? (t - mf.a) / (mf.b - mf.a) : 0.0;
    return mf.c > mf.b && t < mf.c ? (mf.c - t) / (mf.c - mf.b) : 0.0;
}

namespace {

struct SourceView {
    const NumericDataset* ds = nullptr;
    std::vector<std::size_t> order; // tuple indices sorted by time
    std::vector<bool> consumed;
    double t_min = 0.0;
    double min_gap = std::numeric_limits<double>::infinity();
};

} // namespace

CrossedDataset cross(const std::vector<NumericDataset>& sources) {
    if (sources.size() < 2) throw std::invalid_argument("crossing needs at least 2 sources");

    std::vector<SourceView> views(sources.size());
    for (std::size_t k = 0; k < sources.size(); ++k) {
        const NumericDataset& ds = sources[k];
        ds.validate();
        if (!ds.has_time())
            throw std::invalid_argument("source '" + ds.name + "' has no time column");
        if (ds.tuple_count == 0)
            throw std::invalid_argument("source '" + ds.name + "' is empty");

        SourceView& view = views[k];
        view.ds = &ds;
        const std::vector<double>& times = ds.time_values();
        view.order.resize(ds.tuple_count);
        std::iota(view.order.begin(), view.order.end(), 0);
        std::stable_sort(view.order.begin(), view.order.end(),
                         [&](std::size_t x, std::size_t y) { return times[x] < times[y]; });
        view.consumed.assign(ds.tuple_count, false);
        view.t_min = times[view.order.front()];
        for (std::size_t i = 1; i < view.order.size(); ++i) {
            double gap = times[view.order[i]] - times[view.order[i - 1]];
            if (gap > 0.0) view.min_gap = std::min(view.min_gap, gap);
        }
    }

    // The humblest-sampled source dictates the sweep step; sources sweep in
    // the order their series start.
    std::vector<std::size_t> source_order(sources.size());
    std::iota(source_order.begin(), source_order.end(), 0);
    std::stable_sort(source_order.begin(), source_order.end(), [&](std::size_t x, std::size_t y) {
        return views[x].t_min < views[y].t_min;
    });

    double boundary = 0.0;
    double t_min = std::numeric_limits<double>::infinity();
    double t_max = -std::numeric_limits<double>::infinity();
    for (const SourceView& view : views) {
        if (std::isfinite(view.min_gap)) boundary = std::max(boundary, view.min_gap);
        const std::vector<double>& times = view.ds->time_values();
        t_min = std::min(t_min, times[view.order.front()]);
        t_max = std::max(t_max, times[view.order.back()]);
    }

    CrossedDataset out;
    out.data.name = "crossed";
    Attribute time_col;
    time_col.name = "time";
    out.data.attributes.push_back(std::move(time_col));
    out.data.time_column = 0;

    std::map<std::string, int> name_uses;
    for (const NumericDataset& ds : sources)
        for (std::size_t a = 0; a < ds.attributes.size(); ++a)
            if (!ds.is_time_column(a)) ++name_uses[ds.attributes[a].name];

    std::vector<std::size_t> column_of_source(sources.size());
    for (std::size_t k : source_order) {
        const NumericDataset& ds = *views[k].ds;
        column_of_source[k] = out.data.attributes.size();
        for (std::size_t a = 0; a < ds.attributes.size(); ++a) {
            if (ds.is_time_column(a)) continue;
            Attribute col;
            col.name = name_uses[ds.attributes[a].name] > 1 ? ds.name + "." + ds.attributes[a].name
                                                            : ds.attributes[a].name;
            out.data.attributes.push_back(std::move(col));
        }
    }

    if (!(boundary > 0.0)) return out;

    for (std::size_t sweep = 0;; ++sweep) {
        double center = t_min + static_cast<double>(sweep) * boundary;
        if (center > t_max + 1e-9) break;
        TriangularMF mf{center - boundary, center, center + boundary};

        std::vector<std::size_t> picks(sources.size());
        bool complete = true;
        for (std::size_t k = 0; k < sources.size() && complete; ++k) {
            SourceView& view = views[k];
            const std::vector<double>& times = view.ds->time_values();
            double best = 0.0;
            std::size_t best_index = view.ds->tuple_count;
            for (std::size_t idx : view.order) {
                if (view.consumed[idx]) continue;
                double degree = membership(mf, times[idx]);
                if (degree > best) {
                    best = degree;
                    best_index = idx;
                }
            }
            if (best_index == view.ds->tuple_count)
                complete = false;
            else
                picks[k] = best_index;
        }
        if (!complete) continue;

        out.data.attributes[0].values.push_back(center);
        for (std::size_t k = 0; k < sources.size(); ++k) {
            SourceView& view = views[k];
            view.consumed[picks[k]] = true;
            std::size_t column = column_of_source[k];
            for (std::size_t a = 0; a < view.ds->attributes.size(); ++a) {
                if (view.ds->is_time_column(a)) continue;
                out.data.attributes[column++].values.push_back(
                    view.ds->attributes[a].values[picks[k]]);
            }
        }
        out.provenance.push_back(picks);
        ++out.data.tuple_count;
    }
    return out;
}

} // namespace gradmine
