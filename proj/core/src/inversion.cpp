#include "apollonius/inversion.hpp"

#include <stdexcept>

namespace apo {

Quantity det3(const std::array<std::array<Quantity, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Quantity det4(const std::array<std::array<Quantity, 4>, 4>& m) {
  Quantity total = Quantity::constant(0);
  for (int j = 0; j < 4; ++j) {
    std::array<std::array<Quantity, 3>, 3> minor;
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    Quantity term = m[0][j] * det3(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

Sign tet_orientation(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  auto q = [](const Rational& v) { return Quantity::input(v); };
  Vec3 u = b - a, v = c - a, w = d - a;
  std::array<std::array<Quantity, 3>, 3> m = {{{q(u.x), q(u.y), q(u.z)},
                                               {q(v.x), q(v.y), q(v.z)},
                                               {q(w.x), q(w.y), q(w.z)}}};
  return sign_of(det3(m).value);
}

InvertedSite invert_about(const Site& s, const Site& pole, std::size_t source,
                          std::size_t pole_index) {
  InvertedSite out;
  out.xb = Quantity::input(s.center.x - pole.center.x);
  out.yb = Quantity::input(s.center.y - pole.center.y);
  out.zb = Quantity::input(s.center.z - pole.center.z);
  out.rb = Quantity::input(s.radius - pole.radius);
  out.pb = out.xb * out.xb + out.yb * out.yb + out.zb * out.zb - out.rb * out.rb;
  out.source = source;
  out.pole = pole_index;
  if (out.pb.value != 0) {
    out.u = out.xb.value / out.pb.value;
    out.v = out.yb.value / out.pb.value;
    out.w = out.zb.value / out.pb.value;
    out.rho = out.rb.value / out.pb.value;
  }
  return out;
}

std::vector<InvertedSite> reduce_and_invert(const std::vector<Site>& sites,
                                            std::size_t pole_index) {
  if (pole_index >= sites.size()) throw ShapeMismatch("pole index out of range");
  const Site& pole = sites[pole_index];
  std::vector<InvertedSite> out;
  out.reserve(sites.size() - 1);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i == pole_index) continue;
    InvertedSite inv = invert_about(sites[i], pole, i, pole_index);
    if (inv.pb.value == 0) throw PoleDegeneracy();
    if (sgn(inv.pb.value) < 0) throw ContainedSites();
    out.push_back(std::move(inv));
  }
  return out;
}

Quantity axis_value(const InvertedSite& s, Axis a) {
  switch (a) {
    case Axis::X: return s.xb;
    case Axis::Y: return s.yb;
    case Axis::Z: return s.zb;
    case Axis::R: return s.rb;
    case Axis::P: return s.pb;
  }
  throw std::logic_error("bad axis");
}

Quantity e3(const InvertedSite& s0, const InvertedSite& s1, const InvertedSite& s2,
            Axis a, Axis b, Axis c) {
  std::array<std::array<Quantity, 3>, 3> m;
  const InvertedSite* rows[3] = {&s0, &s1, &s2};
  for (int r = 0; r < 3; ++r)
    m[r] = {axis_value(*rows[r], a), axis_value(*rows[r], b), axis_value(*rows[r], c)};
  return det3(m);
}

Quantity e4(const InvertedSite& s0, const InvertedSite& s1, const InvertedSite& s2,
            const InvertedSite& s3, Axis a, Axis b, Axis c, Axis d) {
  std::array<std::array<Quantity, 4>, 4> m;
  const InvertedSite* rows[4] = {&s0, &s1, &s2, &s3};
  for (int r = 0; r < 4; ++r)
    m[r] = {axis_value(*rows[r], a), axis_value(*rows[r], b), axis_value(*rows[r], c),
            axis_value(*rows[r], d)};
  return det4(m);
}

namespace {

Quantity raw_value(const Site& s, RawAxis a) {
  switch (a) {
    case RawAxis::X: return Quantity::input(s.center.x);
    case RawAxis::Y: return Quantity::input(s.center.y);
    case RawAxis::Z: return Quantity::input(s.center.z);
    case RawAxis::R: return Quantity::input(s.radius);
  }
  throw std::logic_error("bad raw axis");
}

RawAxis raw_axis_from(char c) {
  switch (c) {
    case 'x': return RawAxis::X;
    case 'y': return RawAxis::Y;
    case 'z': return RawAxis::Z;
    case 'r': return RawAxis::R;
    default: throw ShapeMismatch(std::string("bad raw axis selector: ") + c);
  }
}

Axis barred_axis_from(char c) {
  switch (c) {
    case 'x': return Axis::X;
    case 'y': return Axis::Y;
    case 'z': return Axis::Z;
    case 'r': return Axis::R;
    case 'p': return Axis::P;
    default: throw ShapeMismatch(std::string("bad barred axis selector: ") + c);
  }
}

}  // namespace

Quantity d3_ones(const Site& a, const Site& b, const Site& c, RawAxis p, RawAxis q) {
  std::array<std::array<Quantity, 3>, 3> m;
  const Site* rows[3] = {&a, &b, &c};
  for (int r = 0; r < 3; ++r)
    m[r] = {raw_value(*rows[r], p), raw_value(*rows[r], q), Quantity::constant(1)};
  return det3(m);
}

Quantity d3_plain(const Site& a, const Site& b, const Site& c) {
  std::array<std::array<Quantity, 3>, 3> m;
  const Site* rows[3] = {&a, &b, &c};
  for (int r = 0; r < 3; ++r)
    m[r] = {raw_value(*rows[r], RawAxis::X), raw_value(*rows[r], RawAxis::Y),
            raw_value(*rows[r], RawAxis::Z)};
  return det3(m);
}

Quantity d4_ones(const Site& a, const Site& b, const Site& c, const Site& d,
                 RawAxis p, RawAxis q, RawAxis r) {
  std::array<std::array<Quantity, 4>, 4> m;
  const Site* rows[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    m[i] = {raw_value(*rows[i], p), raw_value(*rows[i], q), raw_value(*rows[i], r),
            Quantity::constant(1)};
  return det4(m);
}

Quantity d4_plain(const Site& a, const Site& b, const Site& c, const Site& d) {
  std::array<std::array<Quantity, 4>, 4> m;
  const Site* rows[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i)
    m[i] = {raw_value(*rows[i], RawAxis::X), raw_value(*rows[i], RawAxis::Y),
            raw_value(*rows[i], RawAxis::Z), raw_value(*rows[i], RawAxis::R)};
  return det4(m);
}

Quantity det(const DetQuery& query, const std::vector<Site>& raw,
             const std::vector<InvertedSite>& barred) {
  using Kind = DetQuery::Kind;
  auto need = [&](std::size_t rows, std::size_t axes, bool raw_rows) {
    if (query.axes.size() != axes)
      throw ShapeMismatch("selector count does not match determinant shape");
    std::size_t have = raw_rows ? raw.size() : barred.size();
    if (have != rows) throw ShapeMismatch("row count does not match determinant shape");
  };
  switch (query.kind) {
    case Kind::D2Ones:
      need(3, 2, true);
      return d3_ones(raw[0], raw[1], raw[2], raw_axis_from(query.axes[0]),
                     raw_axis_from(query.axes[1]));
    case Kind::D3Plain: {
      need(3, 3, true);
      std::array<std::array<Quantity, 3>, 3> m;
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m[r][c] = raw_value(raw[r], raw_axis_from(query.axes[c]));
      return det3(m);
    }
    case Kind::D3Ones: {
      need(4, 3, true);
      return d4_ones(raw[0], raw[1], raw[2], raw[3], raw_axis_from(query.axes[0]),
                     raw_axis_from(query.axes[1]), raw_axis_from(query.axes[2]));
    }
    case Kind::D4Plain: {
      need(4, 4, true);
      std::array<std::array<Quantity, 4>, 4> m;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m[r][c] = raw_value(raw[r], raw_axis_from(query.axes[c]));
      return det4(m);
    }
    case Kind::E3:
      need(3, 3, false);
      return e3(barred[0], barred[1], barred[2], barred_axis_from(query.axes[0]),
                barred_axis_from(query.axes[1]), barred_axis_from(query.axes[2]));
    case Kind::E4:
      need(4, 4, false);
      return e4(barred[0], barred[1], barred[2], barred[3], barred_axis_from(query.axes[0]),
                barred_axis_from(query.axes[1]), barred_axis_from(query.axes[2]),
                barred_axis_from(query.axes[3]));
  }
  throw std::logic_error("bad query kind");
}

Sign orient3d(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c,
              DegreeLog* log, const char* tag) {
  auto q = [](const Rational& v) { return Quantity::input(v); };
  Vec3 u = b - a, v = c - a, w = p - a;
  std::array<std::array<Quantity, 3>, 3> m = {{{q(u.x), q(u.y), q(u.z)},
                                               {q(v.x), q(v.y), q(v.z)},
                                               {q(w.x), q(w.y), q(w.z)}}};
  return sign_of(det3(m), log, tag);
}

}  // namespace apo
