#pragma once

#include "ietlab/amicable.hpp"
#include "ietlab/analysis.hpp"
#include "ietlab/atlas.hpp"
#include "ietlab/sturmian.hpp"
#include "ietlab/triet.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace ietlab::render {

using nlohmann::json;

template <typename W>
json words_json(const std::vector<W>& words) {
  json out = json::array();
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

/// {"length": N, "count": C, "words": [...]}
inline json enumeration_json(std::size_t length, const std::vector<TernaryWord>& words) {
  return {{"length", length}, {"count", words.size()}, {"words", words_json(words)}};
}

inline json by_b_json(const std::map<std::size_t, std::uint64_t>& by_b) {
  json out = json::object();
  for (const auto& [b, n] : by_b) out[std::to_string(b)] = n;
  return out;
}

inline json sturmian_json(std::int64_t length, const std::vector<BinaryWord>& factors,
                          const std::vector<sturmian::SturmianClass>& classes) {
  json cls = json::array();
  for (const auto& c : classes)
    cls.push_back({{"left", c.left.str()}, {"right", c.right.str()}, {"factors", words_json(c.factors)}});
  return {{"length", length},
          {"count", factors.size()},
          {"lipatov", sturmian::lipatov(static_cast<std::uint64_t>(length))},
          {"factors", words_json(factors)},
          {"classes", std::move(cls)}};
}

inline json amicable_json(std::int64_t length, std::size_t b, std::uint64_t pairs,
                          const std::vector<amicable::ClassPairRow>& rows) {
  json table = json::array();
  std::uint64_t z = 0;
  for (const auto& r : rows) {
    z += r.pairs > 0 ? 1 : 0;
    table.push_back({{"left", r.left.str()},
                     {"right", r.right.str()},
                     {"pairs", r.pairs},
                     {"bound", r.bound},
                     {"corollary_bound", r.corollary}});
  }
  return {{"length", length},
          {"b", b},
          {"pairs", pairs},
          {"z_count", z},
          {"z_asymptotic", analysis::significant(analysis::z_asymptotic(length, static_cast<std::int64_t>(b)), 6)},
          {"classes", std::move(table)}};
}

/// {"length": N, "regions": [{"vertices": [["p/q","r/s"], ...], "factors": [...]}]}
inline json atlas_json(std::size_t length, const std::vector<atlas::ParamRegion>& regions) {
  json out = {{"length", length}, {"regions", json::array()}};
  for (const auto& r : regions) {
    json vertices = json::array();
    for (const auto& v : r.polygon) vertices.push_back({v.epsilon.str(), v.ell.str()});
    out["regions"].push_back({{"vertices", std::move(vertices)}, {"factors", words_json(r.factors)}});
  }
  return out;
}

inline json bounds_json(const std::vector<analysis::BoundsRow>& rows,
                        const std::vector<analysis::PropLowerReport>& reports) {
  json table = json::array();
  for (const auto& r : rows) {
    table.push_back({{"N", r.length},
                     {"count", r.count},
                     {"ratio", analysis::significant(r.ratio, 20)},
                     {"ratio_3sf", analysis::significant(r.ratio, 3)},
                     {"lower_const", analysis::BoundsRow::lower_const},
                     {"upper_const", analysis::BoundsRow::upper_const}});
  }
  json lower = json::array();
  for (const auto& p : reports)
    lower.push_back({{"N", p.length}, {"lhs", p.lhs}, {"rhs", p.rhs}, {"holds", p.holds}});
  return {{"bounds", std::move(table)}, {"prop_lower", std::move(lower)}};
}

inline std::string bounds_csv(const std::vector<analysis::BoundsRow>& rows) {
  std::ostringstream os;
  os << "N,count,ratio,lower_const,upper_const\n";
  for (const auto& r : rows)
    os << r.length << ',' << r.count << ',' << analysis::significant(r.ratio, 20) << ','
       << analysis::BoundsRow::lower_const << ',' << analysis::BoundsRow::upper_const << '\n';
  return os.str();
}

struct SvgOptions {
  bool labels = true;
  bool legend = true;
  bool lines = true;
  int pixels = 800;
};

namespace detail {

// Exact rounding of a rational to six decimals.
inline std::string fixed6(const exact::Rational& r) {
  const exact::Integer scaled = (r * exact::Rational(1'000'000) + exact::Rational(1, 2)).floor();
  const bool negative = scaled < 0;
  const exact::Integer mag = negative ? exact::Integer(-scaled) : scaled;
  std::string digits = mag.str();
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  std::string out = (negative ? "-" : "") + digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
  return out;
}

// Drawing coordinates: x = eps, y = 1 - ell, so the triangle fills the top half.
inline std::string xy(const atlas::PlanePoint& p) {
  return fixed6(p.epsilon) + "," + fixed6(exact::Rational(1) - p.ell);
}

inline std::string points_attr(const atlas::Polygon& poly) {
  std::string out;
  for (const auto& v : poly) out += (out.empty() ? "" : " ") + xy(v);
  return out;
}

// Chord of the triangle cut by a line, if it crosses the interior.
inline std::optional<std::pair<atlas::PlanePoint, atlas::PlanePoint>> chord(const atlas::BoundaryLine& line) {
  const auto tri = atlas::parameter_triangle();
  std::vector<atlas::PlanePoint> hits;
  for (std::size_t i = 0; i < tri.size(); ++i) {
    const auto& p = tri[i];
    const auto& q = tri[(i + 1) % tri.size()];
    const exact::Rational fp = line.a * p.epsilon + line.b * p.ell - line.c;
    const exact::Rational fq = line.a * q.epsilon + line.b * q.ell - line.c;
    if (fp.sign() == 0) hits.push_back(p);
    if (fp.sign() * fq.sign() < 0) {
      const exact::Rational t = fp / (fp - fq);
      hits.push_back({p.epsilon + (q.epsilon - p.epsilon) * t, p.ell + (q.ell - p.ell) * t});
    }
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  if (hits.size() < 2) return std::nullopt;
  return std::make_pair(hits.front(), hits.back());
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '<') out += "&lt;";
    else if (ch == '>') out += "&gt;";
    else if (ch == '&') out += "&amp;";
    else out.push_back(ch);
  }
  return out;
}

}  // namespace detail

/// SVG 1.1 atlas drawing. Region i (in the given order) is labelled
/// "Omega_{i+1}"; the legend lists each region's factors.
inline std::string atlas_svg(std::size_t length, const std::vector<atlas::ParamRegion>& regions,
                             const SvgOptions& options = {}) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1 1\" width=\"" << options.pixels
     << "\" height=\"" << options.pixels << "\">\n"
     << "<desc>Parameter regions for factors of length " << length
     << "; x = eps, y = 1 - ell</desc>\n"
     << "<rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" fill=\"white\"/>\n";

  os << "<g id=\"regions\" stroke=\"black\" stroke-width=\"0.001\">\n";
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const unsigned hue = static_cast<unsigned>((i * 137) % 360);
    os << "<polygon id=\"omega" << i + 1 << "\" points=\"" << detail::points_attr(regions[i].polygon)
       << "\" fill=\"hsl(" << hue << ",60%,80%)\"><title>";
    for (std::size_t k = 0; k < regions[i].factors.size(); ++k)
      os << (k ? "," : "") << regions[i].factors[k];
    os << "</title></polygon>\n";
  }
  os << "</g>\n";

  if (options.lines) {
    os << "<g id=\"lines\" stroke=\"#444\" stroke-width=\"0.002\" stroke-dasharray=\"0.01,0.005\">\n";
    for (const auto& line : atlas::interior_lines(regions)) {
      auto seg = detail::chord(line);
      if (!seg) continue;
      os << "<line x1=\"" << detail::fixed6(seg->first.epsilon) << "\" y1=\""
         << detail::fixed6(exact::Rational(1) - seg->first.ell) << "\" x2=\"" << detail::fixed6(seg->second.epsilon)
         << "\" y2=\"" << detail::fixed6(exact::Rational(1) - seg->second.ell) << "\"><title>"
         << detail::xml_escape(line.str()) << "</title></line>\n";
    }
    os << "</g>\n";
  }

  os << "<polygon id=\"triangle\" points=\"" << detail::points_attr(atlas::parameter_triangle())
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.003\"/>\n";

  const double label_size = regions.size() > 40 ? 0.008 : 0.016;
  if (options.labels && !regions.empty()) {
    os << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"" << label_size
       << "\" text-anchor=\"middle\">\n";
    for (std::size_t i = 0; i < regions.size(); ++i) {
      const auto c = atlas::centroid(regions[i].polygon);
      os << "<text x=\"" << detail::fixed6(c.epsilon) << "\" y=\"" << detail::fixed6(exact::Rational(1) - c.ell)
         << "\">&#937;" << i + 1 << "</text>\n";
    }
    os << "</g>\n";
  }

  if (options.legend && !regions.empty()) {
    // legend fills the lower half in as many columns as needed
    const std::size_t rows_per_column = 25;
    const std::size_t columns = (regions.size() + rows_per_column - 1) / rows_per_column;
    const double column_width = 1.0 / static_cast<double>(columns);
    const double font = std::min(0.016, column_width / (static_cast<double>(2 * length + 1) * (length + 1) * 0.7 + 4));
    os << "<g id=\"legend\" font-family=\"monospace\" font-size=\"" << font << "\">\n";
    for (std::size_t i = 0; i < regions.size(); ++i) {
      const std::size_t col = i / rows_per_column;
      const std::size_t row = i % rows_per_column;
      os << "<text x=\"" << detail::fixed6(exact::Rational(static_cast<std::int64_t>(col)) /
                                           exact::Rational(static_cast<std::int64_t>(columns)) +
                                           exact::Rational(1, 100))
         << "\" y=\"" << detail::fixed6(exact::Rational(52, 100) + exact::Rational(static_cast<std::int64_t>(row), 54))
         << "\">&#937;" << i + 1 << ": ";
      for (std::size_t k = 0; k < regions[i].factors.size(); ++k)
        os << (k ? "," : "") << regions[i].factors[k];
      os << "</text>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ietlab::render
