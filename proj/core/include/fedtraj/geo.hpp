#ifndef FEDTRAJ_GEO_HPP
#define FEDTRAJ_GEO_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "fedtraj/errors.hpp"

namespace fedtraj {

inline constexpr double kEarthRadiusKm = 6371.0;

/// One GPS fix: latitude/longitude in degrees, time in seconds since epoch.
struct GpsPoint {
    double lat = 0.0;
    double lon = 0.0;
    std::int64_t t = 0;

    GpsPoint() = default;
    GpsPoint(double lat_deg, double lon_deg, std::int64_t t_sec);
};

/// Great-circle distance in kilometers (haversine, R = 6371 km).
double haversine_km(const GpsPoint& a, const GpsPoint& b);

enum class TravelMode : std::uint8_t { bus = 0, car, walking, biking, subway };

inline constexpr std::array<TravelMode, 5> kAllModes = {
    TravelMode::bus, TravelMode::car, TravelMode::walking,
    TravelMode::biking, TravelMode::subway};
inline constexpr std::size_t kModeCount = 5;

const char* to_string(TravelMode m);
std::optional<TravelMode> mode_from_string(const std::string& s);

/// Min-max bounding box used to map coordinates into the unit square.
/// The box is carried through checkpoints and reports so a dataset's
/// normalized values always have a defined geographic scale.
struct NormalizationSpec {
    double lat_min = 0.0;
    double lat_max = 1.0;
    double lon_min = 0.0;
    double lon_max = 1.0;

    NormalizationSpec() = default;
    NormalizationSpec(double lat_lo, double lat_hi, double lon_lo, double lon_hi);

    /// Degrees -> unit square. Out-of-box inputs land outside [0,1].
    std::array<double, 2> normalize(double lat, double lon) const;
    /// Unit square -> degrees.
    std::array<double, 2> denormalize(double x, double y) const;

    /// Box edge lengths in kilometers (lon span measured at mid latitude).
    double width_km() const;
    double height_km() const;

    /// Default study area: a ~1.44 degree square over Beijing (~160 km per
    /// side), sized so a unit-square MSE of 0.000625 corresponds to a mean
    /// geographic error below 4 km.
    static NormalizationSpec beijing_default();
};

} // namespace fedtraj

#endif // FEDTRAJ_GEO_HPP
