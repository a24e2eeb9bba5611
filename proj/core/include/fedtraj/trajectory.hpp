#ifndef FEDTRAJ_TRAJECTORY_HPP
#define FEDTRAJ_TRAJECTORY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fedtraj/geo.hpp"

namespace fedtraj {

inline constexpr std::size_t kSegmentLen = 100;

/// Ordered GPS point sequence for one user, optionally labeled with a
/// travel mode. Timestamps must be non-decreasing.
struct Trajectory {
    std::vector<GpsPoint> points;
    std::string user_id;
    std::optional<TravelMode> mode;

    Trajectory() = default;
    Trajectory(std::vector<GpsPoint> pts, std::string user, std::optional<TravelMode> m = std::nullopt);

    std::size_t size() const { return points.size(); }
};

/// Fixed-length training sample: 100 unit-square coordinate rows, a
/// 0/1 validity mask (prefix of ones), and the trajectory's mode as a
/// one-hot vector. Padded rows are exactly zero.
struct Segment {
    std::array<std::array<double, 2>, kSegmentLen> coords{};
    std::array<double, kSegmentLen> mask{};
    std::array<double, kModeCount> mode_onehot{};
    std::string user_id;

    std::size_t valid_len() const;
    TravelMode mode() const;

    static Segment empty(const std::string& user, TravelMode mode);
};

struct SegmentationResult {
    std::vector<Segment> segments;
    std::size_t clamped_points = 0; // points outside the box, clamped to its edge
};

/// Cut a labeled trajectory into ceil(m/100) segments, normalizing
/// coordinates into the unit square. The last segment is zero-padded and
/// its mask records the valid prefix. Points outside the box are clamped
/// and counted in the result.
SegmentationResult segment_trajectory(const Trajectory& traj, const NormalizationSpec& spec);

/// Drop segments with fewer than min_valid valid points. Dataset
/// preparation applies this with min_valid = 5 by default; the
/// segmentation itself keeps everything.
std::vector<Segment> filter_short_segments(std::vector<Segment> segments, std::size_t min_valid = 5);

/// Map a segment's valid prefix back to GPS points. Timestamps are
/// synthesized on a fixed 30 s cadence starting at t0.
std::vector<GpsPoint> denormalize_segment(const Segment& seg, const NormalizationSpec& spec,
                                          std::int64_t t0 = 0, std::int64_t cadence_s = 30);

/// Trip length in km: sum of consecutive haversine distances over the
/// valid prefix.
double trip_length_km(const Segment& seg, const NormalizationSpec& spec);

} // namespace fedtraj

#endif // FEDTRAJ_TRAJECTORY_HPP
