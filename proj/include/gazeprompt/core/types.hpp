#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gazeprompt/error.hpp"

namespace gp::core {

enum class Unit { DegreesVisualAngle, Pixels, Normalized };

std::string unit_name(Unit u);        // "dva" | "px" | "norm"
Unit unit_from_name(const std::string& name);

struct CoordinateSpace {
    Unit unit = Unit::Pixels;
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;

    double x_span() const { return x_max - x_min; }
    double y_span() const { return y_max - y_min; }
    void validate() const;
};

struct GazeSample {
    double t = 0.0;  // seconds from trace start
    double x = 0.0;
    double y = 0.0;
    bool valid = true;  // false for blinks / dropouts / unparseable rows
};

struct GazeTrace {
    std::vector<GazeSample> samples;  // strictly increasing t
    double rate_hz = 0.0;
    CoordinateSpace space;
    std::string participant;
    std::string activity;
    std::string dataset;
    int segment = 0;

    /// Nominal duration: each sample covers one sampling period, so a
    /// 1800-sample trace at 30 Hz is exactly 60 s. This is what windowing
    /// tiles against.
    double duration_s() const {
        if (samples.empty() || rate_hz <= 0.0) return 0.0;
        return (samples.back().t - samples.front().t) + 1.0 / rate_hz;
    }
    std::size_t valid_count() const;
    std::string id() const;  // dataset/participant/activity/segment
};

struct WindowInstance {
    GazeTrace slice;          // sample times rebased to 0 at window start
    double window_s = 0.0;
    std::string origin_trace; // id of the source trace
    double start_offset_s = 0.0;
};

enum class AdapterKind { GazeBaseLike, SedentaryLike, DesktopLike, GenericCsv };

std::string adapter_name(AdapterKind k);
AdapterKind adapter_from_name(const std::string& name);

enum class TimeSource { Seconds, Milliseconds, RowIndex };

/// Column layout for the generic CSV adapter. Indices are 0-based;
/// -1 means "not present".
struct ColumnMap {
    int t = -1;        // falls back to RowIndex timing when absent
    int x = 0;
    int y = 1;
    int label = -1;        // activity label column; traces split on change
    int participant = -1;
    TimeSource time_source = TimeSource::RowIndex;
    bool has_header = false;
    char delimiter = ',';
};

struct DatasetSpec {
    std::string name;
    AdapterKind adapter = AdapterKind::GenericCsv;
    std::vector<std::string> class_labels;
    std::vector<std::string> participants;  // empty = discovered at ingest
    CoordinateSpace space;
    double rate_hz = 0.0;
    double dispersion_threshold = 0.0;  // in space units, for I-DT
    int downsample_raw_text = 1;

    ColumnMap columns;  // generic adapter only
    std::map<std::string, std::string> task_map;  // filename code -> label
    double min_confidence = 0.6;   // desktop-like confidence cutoff
    double unit_tolerance = 0.05;  // off-range allowance, fraction of span
    bool strict_units = false;     // throw UnitViolation instead of invalidating

    void validate() const;
};

DatasetSpec load_dataset_spec(const std::string& path);

}  // namespace gp::core
