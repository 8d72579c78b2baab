#pragma once

#include "ietlab/exact/affine.hpp"
#include "ietlab/word.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ietlab::atlas {

using exact::AffineForm;
using exact::Rational;

/// Refinement did not settle every comparison within the depth budget.
class AtlasError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlanePoint {
  Rational epsilon;
  Rational ell;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
  friend auto operator<=>(const PlanePoint& a, const PlanePoint& b) {
    if (auto c = a.epsilon <=> b.epsilon; c != 0) return c;
    return a.ell <=> b.ell;
  }
};

/// Convex polygon in the (eps, ell) plane, vertices counter-clockwise.
using Polygon = std::vector<PlanePoint>;

/// Line a*eps + b*ell = c with coprime integer coefficients and the first
/// non-zero of (a, b) positive.
struct BoundaryLine {
  Rational a;
  Rational b;
  Rational c;

  static BoundaryLine through(const PlanePoint& p, const PlanePoint& q) {
    // (q - p) x (r - p) = 0  =>  a = (q.ell - p.ell), b = -(q.eps - p.eps)
    Rational a = q.ell - p.ell;
    Rational b = p.epsilon - q.epsilon;
    Rational c = a * p.epsilon + b * p.ell;
    return normalized(std::move(a), std::move(b), std::move(c));
  }

  static BoundaryLine normalized(Rational a, Rational b, Rational c) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("degenerate line");
    exact::Integer lcm = 1;
    for (const Rational* r : {&a, &b, &c}) lcm = boost::multiprecision::lcm(lcm, r->denominator());
    exact::Integer g = 0;
    for (const Rational* r : {&a, &b, &c}) g = boost::multiprecision::gcd(g, (*r * Rational(lcm)).numerator());
    if (g < 0) g = -g;
    Rational scale(lcm, g);
    if ((a.is_zero() ? b : a).sign() < 0) scale = -scale;
    return {a * scale, b * scale, c * scale};
  }

  std::string str() const {
    std::string out;
    auto term = [&](const Rational& k, const char* name) {
      if (k.is_zero()) return;
      if (!out.empty()) out += k.sign() < 0 ? " - " : " + ";
      else if (k.sign() < 0) out += "-";
      if (k.abs() != Rational(1)) out += k.abs().str() + "*";
      out += name;
    };
    term(a, "eps");
    term(b, "ell");
    return out + " = " + c.str();
  }

  friend bool operator==(const BoundaryLine&, const BoundaryLine&) = default;
  friend auto operator<=>(const BoundaryLine& x, const BoundaryLine& y) {
    if (auto k = x.a <=> y.a; k != 0) return k;
    if (auto k = x.b <=> y.b; k != 0) return k;
    return x.c <=> y.c;
  }
};

/// Maximal open region of the parameter triangle with a constant list of
/// length-N factors.
struct ParamRegion {
  Polygon polygon;
  /// Division points T^{-j}(d1), T^{-j}(d2) as affine forms in (eps, ell),
  /// sorted by their position in [0, ell).
  std::vector<AffineForm> division_points;
  std::vector<TernaryWord> factors;
  /// Convex cells produced by refinement before merging equal lists.
  std::size_t cell_count = 1;
};

struct SubdivideOptions {
  std::size_t max_depth = 512;
};

inline Rational evaluate(const AffineForm& f, const PlanePoint& p) {
  return f.evaluate(exact::Point{p.epsilon, p.ell, Rational(0)});
}

inline Rational signed_area2(const Polygon& poly) {
  Rational twice;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    twice += p.epsilon * q.ell - q.epsilon * p.ell;
  }
  return twice;
}

inline PlanePoint centroid(const Polygon& poly) {
  // vertex average; strictly interior for a non-degenerate convex polygon
  Rational e, l;
  for (const auto& p : poly) {
    e += p.epsilon;
    l += p.ell;
  }
  const Rational n(static_cast<std::int64_t>(poly.size()));
  return {e / n, l / n};
}

/// Open parameter triangle 0 < eps < 1, max(eps, 1 - eps) < ell < 1.
inline Polygon parameter_triangle() {
  return {{Rational(1, 2), Rational(1, 2)}, {Rational(1), Rational(1)}, {Rational(0), Rational(1)}};
}

/// Part of a convex polygon where side * f >= 0 (closure of the open part).
inline Polygon clip(const Polygon& poly, const AffineForm& f, int side) {
  Polygon out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    const Rational fp = evaluate(f, p) * Rational(side);
    const Rational fq = evaluate(f, q) * Rational(side);
    if (fp.sign() >= 0) out.push_back(p);
    if ((fp.sign() > 0 && fq.sign() < 0) || (fp.sign() < 0 && fq.sign() > 0)) {
      const Rational t = fp / (fp - fq);
      out.push_back({p.epsilon + (q.epsilon - p.epsilon) * t, p.ell + (q.ell - p.ell) * t});
    }
  }
  // drop repeated and collinear vertices
  Polygon clean;
  for (const auto& v : out)
    if (clean.empty() || !(clean.back() == v)) clean.push_back(v);
  while (clean.size() > 1 && clean.front() == clean.back()) clean.pop_back();
  bool changed = true;
  while (changed && clean.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < clean.size(); ++i) {
      const auto& a = clean[(i + clean.size() - 1) % clean.size()];
      const auto& b = clean[i];
      const auto& c = clean[(i + 1) % clean.size()];
      const Rational cross = (b.epsilon - a.epsilon) * (c.ell - a.ell) - (b.ell - a.ell) * (c.epsilon - a.epsilon);
      if (cross.is_zero()) {
        clean.erase(clean.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return clean;
}

/// Rotates a CCW polygon so it starts at its smallest vertex.
inline Polygon canonical(Polygon poly) {
  if (poly.empty()) return poly;
  const auto first = std::min_element(poly.begin(), poly.end());
  std::rotate(poly.begin(), first, poly.end());
  return poly;
}

/// Convex hull (Andrew's monotone chain), CCW, collinear points dropped.
inline Polygon convex_hull(std::vector<PlanePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const PlanePoint& o, const PlanePoint& a, const PlanePoint& b) {
    return (a.epsilon - o.epsilon) * (b.ell - o.ell) - (a.ell - o.ell) * (b.epsilon - o.epsilon);
  };
  Polygon hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return canonical(hull);
}

namespace detail {

/// Sign of f over the open polygon, or nullopt if it changes sign there.
inline std::optional<int> sign_on(const Polygon& poly, const AffineForm& f) {
  bool pos = false, neg = false;
  for (const auto& v : poly) {
    const int s = evaluate(f, v).sign();
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  if (pos && neg) return std::nullopt;
  return pos ? 1 : (neg ? -1 : 0);
}

struct Cell {
  Polygon polygon;
  std::vector<AffineForm> division_points;
  std::vector<TernaryWord> factors;
};

// Either a fully resolved cell or the form whose sign must be split on.
using Resolution = std::variant<Cell, AffineForm>;

inline Resolution resolve(const Polygon& poly, std::size_t length) {
  const AffineForm eps = AffineForm::epsilon();
  const AffineForm ell = AffineForm::ell();
  const AffineForm one = AffineForm::constant(1);
  const AffineForm left_cut = ell - one + eps;  // d2
  std::optional<AffineForm> pending;
  auto sign = [&](const AffineForm& f) -> int {
    if (pending) return 0;
    auto s = sign_on(poly, f);
    if (!s) {
      pending = f;
      return 0;
    }
    return *s;
  };

  // Backward orbits of d1 = eps and d2 = ell - 1 + eps. The inverse branch
  // is read off from T(I_A) = [1-eps, ell), T(I_B) = [ell-eps, 1-eps),
  // T(I_C) = [0, ell-eps).
  std::vector<AffineForm> points;
  for (const AffineForm& d : {eps, left_cut}) {
    AffineForm y = d;
    points.push_back(y);
    for (std::size_t j = 1; j < length; ++j) {
      if (sign(y - (one - eps)) >= 0) y = y - one + eps;
      else if (sign(y - (ell - eps)) >= 0) y = y - one + eps + eps;
      else y = y + eps;
      if (pending) return *pending;
      points.push_back(y);
    }
  }

  // Total order of 0 and all division points.
  std::vector<AffineForm> cuts{AffineForm::constant(0)};
  cuts.insert(cuts.end(), points.begin(), points.end());
  const std::size_t n = cuts.size();
  std::vector<std::vector<int>> order(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      order[i][k] = sign(cuts[i] - cuts[k]);
      order[k][i] = -order[i][k];
      if (pending) return *pending;
    }
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t k) { return order[i][k] < 0; });
  std::vector<AffineForm> sorted;  // distinct cut points, then ell
  std::vector<std::size_t> kept;
  for (std::size_t i : idx) {
    if (!kept.empty() && order[kept.back()][i] == 0) continue;
    kept.push_back(i);
    sorted.push_back(cuts[i]);
  }
  sorted.push_back(ell);

  // Forward coding of each subinterval midpoint.
  std::vector<TernaryWord> factors;
  for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
    AffineForm m = (sorted[k] + sorted[k + 1]) * Rational(1, 2);
    std::string letters;
    for (std::size_t j = 0; j < length; ++j) {
      if (sign(m - left_cut) < 0) {
        letters.push_back('A');
        m = m + one - eps;
      } else if (sign(m - eps) < 0) {
        letters.push_back('B');
        m = m + one - eps - eps;
      } else {
        letters.push_back('C');
        m = m - eps;
      }
      if (pending) return *pending;
    }
    factors.push_back(TernaryWord::unchecked(std::move(letters)));
  }
  std::sort(factors.begin(), factors.end());
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());

  std::vector<AffineForm> division;
  for (std::size_t i : kept)
    if (i != 0) division.push_back(cuts[i]);
  return Cell{poly, std::move(division), std::move(factors)};
}

}  // namespace detail

/// Convex cells of the refinement, each with a constant factor list.
inline std::vector<detail::Cell> refine(std::size_t length, const SubdivideOptions& options = {}) {
  if (length < 1) throw std::invalid_argument("subdivide needs N >= 1");
  std::vector<detail::Cell> cells;
  std::vector<std::pair<Polygon, std::size_t>> work{{parameter_triangle(), 0}};
  while (!work.empty()) {
    auto [poly, depth] = std::move(work.back());
    work.pop_back();
    auto res = detail::resolve(poly, length);
    if (auto* cell = std::get_if<detail::Cell>(&res)) {
      cells.push_back(std::move(*cell));
      continue;
    }
    if (depth >= options.max_depth)
      throw AtlasError("unresolved comparison after " + std::to_string(depth) + " refinements");
    const AffineForm& f = std::get<AffineForm>(res);
    for (int side : {1, -1}) {
      Polygon part = clip(poly, f, side);
      if (part.size() >= 3 && signed_area2(part).sign() > 0) work.emplace_back(std::move(part), depth + 1);
    }
  }
  return cells;
}

/// Regions with disjoint interiors covering the parameter triangle up to
/// boundary lines, each carrying its constant list of length-N factors.
/// Cells with equal lists are merged when their union is convex; the output
/// is sorted by region centroid.
inline std::vector<ParamRegion> subdivide(std::size_t length, const SubdivideOptions& options = {}) {
  auto cells = refine(length, options);
  std::map<std::vector<TernaryWord>, std::vector<detail::Cell>> groups;
  for (auto& c : cells) groups[c.factors].push_back(std::move(c));

  std::vector<ParamRegion> regions;
  for (auto& [factors, group] : groups) {
    std::sort(group.begin(), group.end(), [](const detail::Cell& a, const detail::Cell& b) {
      return centroid(a.polygon) < centroid(b.polygon);
    });
    Rational area;
    std::vector<PlanePoint> pts;
    for (const auto& c : group) {
      area += signed_area2(c.polygon);
      pts.insert(pts.end(), c.polygon.begin(), c.polygon.end());
    }
    Polygon hull = convex_hull(pts);
    if (group.size() == 1 || signed_area2(hull) == area) {
      regions.push_back({std::move(hull), group.front().division_points, factors, group.size()});
    } else {
      // a non-convex union stays split into its convex cells
      for (auto& c : group) regions.push_back({canonical(std::move(c.polygon)), std::move(c.division_points), factors, 1});
    }
  }
  std::sort(regions.begin(), regions.end(), [](const ParamRegion& a, const ParamRegion& b) {
    return centroid(a.polygon) < centroid(b.polygon);
  });
  return regions;
}

inline std::vector<TernaryWord> union_factors(const std::vector<ParamRegion>& regions) {
  std::set<TernaryWord> all;
  for (const auto& r : regions) all.insert(r.factors.begin(), r.factors.end());
  return {all.begin(), all.end()};
}

/// Sides of the parameter triangle: ell = 1, ell = eps, ell = 1 - eps.
inline std::vector<BoundaryLine> triangle_sides() {
  return {BoundaryLine::normalized(0, 1, 1), BoundaryLine::normalized(1, -1, 0), BoundaryLine::normalized(1, 1, 1)};
}

/// Lines supporting region edges that are not sides of the triangle, sorted.
inline std::vector<BoundaryLine> interior_lines(const std::vector<ParamRegion>& regions) {
  const auto sides = triangle_sides();
  std::set<BoundaryLine> lines;
  for (const auto& r : regions) {
    for (std::size_t i = 0; i < r.polygon.size(); ++i) {
      auto line = BoundaryLine::through(r.polygon[i], r.polygon[(i + 1) % r.polygon.size()]);
      if (std::find(sides.begin(), sides.end(), line) == sides.end()) lines.insert(std::move(line));
    }
  }
  return {lines.begin(), lines.end()};
}

/// Image of the atlas under eps -> 1 - eps with A and C interchanged
/// (polygons and factor lists only; division points are left empty).
inline std::vector<ParamRegion> mirrored(const std::vector<ParamRegion>& regions) {
  std::vector<ParamRegion> out;
  for (const auto& r : regions) {
    ParamRegion m;
    for (auto it = r.polygon.rbegin(); it != r.polygon.rend(); ++it)
      m.polygon.push_back({Rational(1) - it->epsilon, it->ell});
    m.polygon = canonical(std::move(m.polygon));
    for (const auto& w : r.factors) m.factors.push_back(mirror(w));
    std::sort(m.factors.begin(), m.factors.end());
    m.cell_count = r.cell_count;
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const ParamRegion& a, const ParamRegion& b) {
    return centroid(a.polygon) < centroid(b.polygon);
  });
  return out;
}

}  // namespace ietlab::atlas
