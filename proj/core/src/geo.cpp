#include "fedtraj/geo.hpp"

#include <cmath>
#include <numbers>

namespace fedtraj {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

GpsPoint::GpsPoint(double lat_deg, double lon_deg, std::int64_t t_sec)
    : lat(lat_deg), lon(lon_deg), t(t_sec) {
    if (!std::isfinite(lat) || !std::isfinite(lon))
        throw OutOfRangeCoordinate("non-finite coordinate");
    if (lat < -90.0 || lat > 90.0)
        throw OutOfRangeCoordinate("latitude " + std::to_string(lat) + " outside [-90, 90]");
    if (lon < -180.0 || lon > 180.0)
        throw OutOfRangeCoordinate("longitude " + std::to_string(lon) + " outside [-180, 180]");
    if (t < 0)
        throw OutOfRangeCoordinate("timestamp " + std::to_string(t) + " is negative");
}

double haversine_km(const GpsPoint& a, const GpsPoint& b) {
    const double lat1 = a.lat * kDegToRad;
    const double lat2 = b.lat * kDegToRad;
    const double dlat = (b.lat - a.lat) * kDegToRad;
    const double dlon = (b.lon - a.lon) * kDegToRad;
    const double sl = std::sin(dlat / 2.0);
    const double so = std::sin(dlon / 2.0);
    const double h = sl * sl + std::cos(lat1) * std::cos(lat2) * so * so;
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

const char* to_string(TravelMode m) {
    switch (m) {
        case TravelMode::bus: return "bus";
        case TravelMode::car: return "car";
        case TravelMode::walking: return "walking";
        case TravelMode::biking: return "biking";
        case TravelMode::subway: return "subway";
    }
    return "unknown";
}

std::optional<TravelMode> mode_from_string(const std::string& s) {
    for (TravelMode m : kAllModes)
        if (s == to_string(m)) return m;
    return std::nullopt;
}

NormalizationSpec::NormalizationSpec(double lat_lo, double lat_hi, double lon_lo, double lon_hi)
    : lat_min(lat_lo), lat_max(lat_hi), lon_min(lon_lo), lon_max(lon_hi) {
    if (!(lat_min < lat_max) || !(lon_min < lon_max))
        throw Error("NormalizationSpec: degenerate bounding box");
}

std::array<double, 2> NormalizationSpec::normalize(double lat, double lon) const {
    return {(lat - lat_min) / (lat_max - lat_min),
            (lon - lon_min) / (lon_max - lon_min)};
}

std::array<double, 2> NormalizationSpec::denormalize(double x, double y) const {
    return {lat_min + x * (lat_max - lat_min),
            lon_min + y * (lon_max - lon_min)};
}

double NormalizationSpec::height_km() const {
    return kEarthRadiusKm * (lat_max - lat_min) * kDegToRad;
}

double NormalizationSpec::width_km() const {
    const double mid_lat = 0.5 * (lat_min + lat_max);
    return kEarthRadiusKm * (lon_max - lon_min) * kDegToRad * std::cos(mid_lat * kDegToRad);
}

NormalizationSpec NormalizationSpec::beijing_default() {
    // 1.44 deg of latitude is ~160.1 km; the lon span is stretched so the
    // box is roughly square on the ground at this latitude.
    return NormalizationSpec(39.20, 40.64, 115.50, 117.38);
}

} // namespace fedtraj
