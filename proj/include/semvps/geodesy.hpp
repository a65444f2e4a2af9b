/*
 * Copyright 2026 The SemVPS Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEMVPS_GEODESY_HPP_
#define SEMVPS_GEODESY_HPP_

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace semvps {

inline constexpr double kDegToRad = M_PI / 180.0;
inline constexpr double kRadToDeg = 180.0 / M_PI;

// Geographic position, WGS84-style angular coordinates.
struct GeoCoord {
  double lat = 0.0;  // degrees, [-90, 90]
  double lon = 0.0;  // degrees, (-180, 180]
  double alt = 0.0;  // meters above the reference surface

  bool valid() const {
    return lat >= -90.0 && lat <= 90.0 && lon > -180.0 && lon <= 180.0 &&
           std::isfinite(alt);
  }
};

// Local planar position in meters on the projected grid.
struct GridCoord {
  double easting = 0.0;
  double northing = 0.0;
  double alt = 0.0;

  bool valid() const {
    return std::isfinite(easting) && std::isfinite(northing) &&
           std::isfinite(alt);
  }
};

// Transverse Mercator datum/projection parameters. The engine is generic; the
// hk1980 preset carries the published Hong Kong 1980 Grid constants
// (International 1924 ellipsoid, origin 22°18'43.68"N 114°10'42.80"E).
struct DatumSpec {
  double origin_lat_deg = 0.0;
  double origin_lon_deg = 0.0;
  double false_easting = 0.0;
  double false_northing = 0.0;
  double scale_factor = 1.0;
  double semi_major_axis = 6378137.0;
  double flattening = 1.0 / 298.257223563;

  bool valid() const {
    return scale_factor > 0.0 && semi_major_axis > 0.0 && flattening > 0.0 &&
           flattening < 1.0;
  }

  static DatumSpec hk1980() {
    DatumSpec d;
    d.origin_lat_deg = 22.0 + 18.0 / 60.0 + 43.68 / 3600.0;
    d.origin_lon_deg = 114.0 + 10.0 / 60.0 + 42.80 / 3600.0;
    d.false_easting = 836694.05;
    d.false_northing = 819069.80;
    d.scale_factor = 1.0;
    d.semi_major_axis = 6378388.0;  // International 1924
    d.flattening = 1.0 / 297.0;
    return d;
  }

  // Band where the series conversion is guaranteed below 1 mm.
  static constexpr double kBandDeg = 4.0;
};

namespace detail {

// Krüger series coefficients, sixth order in the third flattening n.
struct TmCoefficients {
  double a_rect;  // rectifying radius k0-free: a/(1+n)*(1+n^2/4+...)
  std::array<double, 6> alpha;
  std::array<double, 6> beta;
  double e;   // first eccentricity
  double e2;  // e^2
  double xi_origin;

  explicit TmCoefficients(const DatumSpec& d) {
    const double f = d.flattening;
    const double n = f / (2.0 - f);
    const double n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n,
                 n6 = n5 * n;
    a_rect = d.semi_major_axis / (1.0 + n) *
             (1.0 + n2 / 4.0 + n4 / 64.0 + n6 / 256.0);
    alpha = {
        n / 2.0 - 2.0 / 3.0 * n2 + 5.0 / 16.0 * n3 + 41.0 / 180.0 * n4 -
            127.0 / 288.0 * n5 + 7891.0 / 37800.0 * n6,
        13.0 / 48.0 * n2 - 3.0 / 5.0 * n3 + 557.0 / 1440.0 * n4 +
            281.0 / 630.0 * n5 - 1983433.0 / 1935360.0 * n6,
        61.0 / 240.0 * n3 - 103.0 / 140.0 * n4 + 15061.0 / 26880.0 * n5 +
            167603.0 / 181440.0 * n6,
        49561.0 / 161280.0 * n4 - 179.0 / 168.0 * n5 +
            6601661.0 / 7257600.0 * n6,
        34729.0 / 80640.0 * n5 - 3418889.0 / 1995840.0 * n6,
        212378941.0 / 319334400.0 * n6,
    };
    beta = {
        n / 2.0 - 2.0 / 3.0 * n2 + 37.0 / 96.0 * n3 - 1.0 / 360.0 * n4 -
            81.0 / 512.0 * n5 + 96199.0 / 604800.0 * n6,
        n2 / 48.0 + n3 / 15.0 - 437.0 / 1440.0 * n4 + 46.0 / 105.0 * n5 -
            1118711.0 / 3870720.0 * n6,
        17.0 / 480.0 * n3 - 37.0 / 840.0 * n4 - 209.0 / 4480.0 * n5 +
            5569.0 / 90720.0 * n6,
        4397.0 / 161280.0 * n4 - 11.0 / 504.0 * n5 -
            830251.0 / 7257600.0 * n6,
        4583.0 / 161280.0 * n5 - 108847.0 / 3991680.0 * n6,
        20648693.0 / 638668800.0 * n6,
    };
    e2 = f * (2.0 - f);
    e = std::sqrt(e2);
    xi_origin = xi_on_meridian(d.origin_lat_deg * kDegToRad);
  }

  // tau' (tangent of the conformal latitude) from tau = tan(phi).
  double tau_prime(double tau) const {
    const double hyp_tau = std::sqrt(1.0 + tau * tau);
    const double sigma = std::sinh(e * std::atanh(e * tau / hyp_tau));
    return tau * std::sqrt(1.0 + sigma * sigma) - sigma * hyp_tau;
  }

  // Newton inversion of tau_prime.
  double tau_from_tau_prime(double taup) const {
    const double e2m = 1.0 - e2;
    double tau = taup / e2m;
    const double tol =
        std::sqrt(std::numeric_limits<double>::epsilon()) / 10.0 *
        std::max(1.0, std::abs(taup));
    for (int i = 0; i < 8; ++i) {
      const double taupa = tau_prime(tau);
      const double dtau = (taup - taupa) * (1.0 + e2m * tau * tau) /
                          (e2m * std::sqrt(1.0 + tau * tau) *
                           std::sqrt(1.0 + taupa * taupa));
      tau += dtau;
      if (std::abs(dtau) < tol) break;
    }
    return tau;
  }

  double xi_on_meridian(double phi) const {
    const double taup = tau_prime(std::tan(phi));
    const double xip = std::atan(taup);
    double xi = xip;
    for (int l = 1; l <= 6; ++l) {
      xi += alpha[l - 1] * std::sin(2.0 * l * xip);
    }
    return xi;
  }
};

}  // namespace detail

// Forward transverse Mercator projection. Altitude passes through unchanged.
// Throws std::out_of_range outside the ±4° validity band of the origin.
inline GridCoord geo_to_grid(const GeoCoord& g, const DatumSpec& d) {
  if (!d.valid()) throw std::invalid_argument("geo_to_grid: invalid datum");
  if (!g.valid()) throw std::invalid_argument("geo_to_grid: invalid GeoCoord");
  const double dlat = g.lat - d.origin_lat_deg;
  const double dlon = g.lon - d.origin_lon_deg;
  if (std::abs(dlat) > DatumSpec::kBandDeg ||
      std::abs(dlon) > DatumSpec::kBandDeg) {
    throw std::out_of_range(
        "geo_to_grid: point outside the ±4° transverse Mercator band of the "
        "datum origin");
  }

  const detail::TmCoefficients tm(d);
  const double phi = g.lat * kDegToRad;
  const double dlam = dlon * kDegToRad;

  const double taup = tm.tau_prime(std::tan(phi));
  const double cos_dlam = std::cos(dlam);
  const double xip = std::atan2(taup, cos_dlam);
  const double etap = std::asinh(std::sin(dlam) /
                                 std::sqrt(taup * taup + cos_dlam * cos_dlam));

  double xi = xip, eta = etap;
  for (int l = 1; l <= 6; ++l) {
    xi += tm.alpha[l - 1] * std::sin(2.0 * l * xip) * std::cosh(2.0 * l * etap);
    eta +=
        tm.alpha[l - 1] * std::cos(2.0 * l * xip) * std::sinh(2.0 * l * etap);
  }

  GridCoord out;
  out.easting = d.false_easting + d.scale_factor * tm.a_rect * eta;
  out.northing =
      d.false_northing + d.scale_factor * tm.a_rect * (xi - tm.xi_origin);
  out.alt = g.alt;
  return out;
}

// Inverse projection; the result is validated against the same band.
inline GeoCoord grid_to_geo(const GridCoord& c, const DatumSpec& d) {
  if (!d.valid()) throw std::invalid_argument("grid_to_geo: invalid datum");
  if (!c.valid()) throw std::invalid_argument("grid_to_geo: invalid GridCoord");

  const detail::TmCoefficients tm(d);
  const double k0a = d.scale_factor * tm.a_rect;
  const double xi = (c.northing - d.false_northing) / k0a + tm.xi_origin;
  const double eta = (c.easting - d.false_easting) / k0a;

  double xip = xi, etap = eta;
  for (int l = 1; l <= 6; ++l) {
    xip -= tm.beta[l - 1] * std::sin(2.0 * l * xi) * std::cosh(2.0 * l * eta);
    etap -= tm.beta[l - 1] * std::cos(2.0 * l * xi) * std::sinh(2.0 * l * eta);
  }

  const double sinh_etap = std::sinh(etap);
  const double cos_xip = std::cos(xip);
  const double taup =
      std::sin(xip) / std::sqrt(sinh_etap * sinh_etap + cos_xip * cos_xip);
  const double tau = tm.tau_from_tau_prime(taup);

  GeoCoord out;
  out.lat = std::atan(tau) * kRadToDeg;
  out.lon = d.origin_lon_deg + std::atan2(sinh_etap, cos_xip) * kRadToDeg;
  out.alt = c.alt;
  if (std::abs(out.lat - d.origin_lat_deg) > DatumSpec::kBandDeg ||
      std::abs(out.lon - d.origin_lon_deg) > DatumSpec::kBandDeg) {
    throw std::out_of_range("grid_to_geo: point outside the projection band");
  }
  return out;
}

}  // namespace semvps

#endif  // SEMVPS_GEODESY_HPP_
