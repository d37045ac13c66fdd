#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "apollonius/errors.hpp"
#include "apollonius/site.hpp"

namespace apo {

// One site after radius reduction by the pole's radius, expressed relative to
// the pole: the barred coordinates (xb, yb, zb, rb) are degree-1 inputs, pb is
// the degree-2 inversion denominator, and u/v/w/rho are the exact inverted
// coordinates. Predicates take the division-free barred route; u/v/w/rho are
// kept for value-level work.
struct InvertedSite {
  Quantity xb, yb, zb, rb;
  Quantity pb;
  Rational u, v, w, rho;
  std::size_t source = 0;  // index of the site in the caller's tuple
  std::size_t pole = 0;
};

// Reduces every site's radius by the pole's and inverts about the pole
// center. Throws PoleDegeneracy when a site passes through the pole after
// reduction (pb == 0) and ContainedSites when pb < 0.
std::vector<InvertedSite> reduce_and_invert(const std::vector<Site>& sites,
                                            std::size_t pole_index);

InvertedSite invert_about(const Site& s, const Site& pole, std::size_t source = 0,
                          std::size_t pole_index = 0);

// Barred-coordinate axis for E determinants.
enum class Axis { X, Y, Z, R, P };

Quantity axis_value(const InvertedSite& s, Axis a);

// E^{abc}: 3x3 determinant of barred coordinates over three inverted sites.
Quantity e3(const InvertedSite& s0, const InvertedSite& s1, const InvertedSite& s2,
            Axis a, Axis b, Axis c);

// E^{abcd}: 4x4 determinant over four inverted sites.
Quantity e4(const InvertedSite& s0, const InvertedSite& s1, const InvertedSite& s2,
            const InvertedSite& s3, Axis a, Axis b, Axis c, Axis d);

// Determinant queries over raw site coordinates (x, y, z, r). "Ones" variants
// carry a trailing all-ones column.
enum class RawAxis { X, Y, Z, R };

Quantity d3_ones(const Site& a, const Site& b, const Site& c, RawAxis p, RawAxis q);
Quantity d3_plain(const Site& a, const Site& b, const Site& c);
Quantity d4_ones(const Site& a, const Site& b, const Site& c, const Site& d,
                 RawAxis p, RawAxis q, RawAxis r);
Quantity d4_plain(const Site& a, const Site& b, const Site& c, const Site& d);

// Generic determinant query covering the D- and E-family shapes; the
// selector string names the columns ("xy", "xyz", "xyr", "xyzp", ...),
// evaluated on raw sites (D forms) or barred inverted sites (E forms).
struct DetQuery {
  enum class Kind {
    D2Ones,   // 3x3, two raw columns plus ones
    D3Plain,  // 3x3, three raw columns
    D3Ones,   // 4x4, three raw columns plus ones
    D4Plain,  // 4x4, four raw columns
    E3,       // 3x3 barred columns
    E4,       // 4x4 barred columns
  };
  Kind kind;
  std::string_view axes;
};

Quantity det(const DetQuery& query, const std::vector<Site>& raw_rows,
             const std::vector<InvertedSite>& barred_rows);

// sign det [B-A; C-A; P-A]. Positive when P lies on the side of plane (A,B,C)
// given by the right-hand rule over (B-A, C-A).
Sign orient3d(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c,
              DegreeLog* log = nullptr, const char* tag = "orient3d");

}  // namespace apo
