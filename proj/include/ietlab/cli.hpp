#pragma once

#include "ietlab/amicable.hpp"
#include "ietlab/analysis.hpp"
#include "ietlab/atlas.hpp"
#include "ietlab/cache.hpp"
#include "ietlab/render.hpp"
#include "ietlab/sturmian.hpp"
#include "ietlab/triet.hpp"
#include "ietlab/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ietlab::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, resource_limit = 3 };

inline constexpr const char* cache_env = "IETLAB_CACHE_DIR";

/// Raised inside commands for invalid input discovered after parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Settings {
  std::size_t length = 0;
  std::size_t b = 0;
  bool by_b = false;
  bool json = false;
  bool csv = false;
  std::string svg;
  std::string epsilon, ell, x0;
  std::size_t n = 0;
  std::size_t max_n = 10;
  std::string suite = "all";
  std::string cache_dir;
  unsigned workers = 1;
  std::uint64_t max_nodes = triet::EnumerateOptions{}.max_nodes;
};

namespace detail {

inline std::string one_line(std::string text) {
  for (char& ch : text)
    if (ch == '\n' || ch == '\r') ch = ' ';
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

/// "ietlab: error: <kind>: <reason>" on a single line.
inline void report(std::ostream& err, const std::string& kind, const std::string& reason) {
  err << "ietlab: error: " << kind << ": " << one_line(reason) << '\n';
}

inline std::optional<cache::Cache> open_cache(const Settings& s) {
  if (!s.cache_dir.empty()) return cache::Cache(s.cache_dir);
  if (const char* env = std::getenv(cache_env); env && *env) return cache::Cache(env);
  return std::nullopt;
}

inline triet::EnumerateOptions enumerate_options(const Settings& s) {
  triet::EnumerateOptions eo;
  eo.workers = s.workers;
  eo.max_nodes = s.max_nodes;
  return eo;
}

// Sorted 3iet(N), read from the cache when one is configured.
inline std::vector<TernaryWord> factors(const Settings& s, std::ostream& err) {
  const auto store = open_cache(s);
  const cache::CacheKey key{"enumerate", static_cast<std::int64_t>(s.length), -1};
  if (store) {
    if (auto payload = store->load(key)) {
      std::vector<TernaryWord> words;
      for (const auto& w : payload->at("words")) words.emplace_back(w.get<std::string>());
      err << "ietlab: cache hit " << key.filename() << '\n';
      return words;
    }
  }
  auto words = triet::enumerate(s.length, enumerate_options(s));
  if (store) {
    store->store(key, render::enumeration_json(s.length, words));
    err << "ietlab: cache store " << key.filename() << '\n';
  }
  return words;
}

inline int count(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto words = factors(s, err);
  const auto by_b = triet::count_by_b(words);
  if (s.json) {
    nlohmann::json doc{{"length", s.length}, {"count", words.size()}};
    if (s.by_b) doc["by_b"] = render::by_b_json(by_b);
    out << doc.dump(2) << '\n';
  } else if (s.csv) {
    if (s.by_b) {
      out << "b,count\n";
      for (const auto& [b, n] : by_b) out << b << ',' << n << '\n';
    } else {
      out << "length,count\n" << s.length << ',' << words.size() << '\n';
    }
  } else if (s.by_b) {
    for (const auto& [b, n] : by_b) out << b << ' ' << n << '\n';
  } else {
    out << words.size() << '\n';
  }
  return ok;
}

inline int enumerate(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto words = factors(s, err);
  if (s.json) {
    out << render::enumeration_json(s.length, words).dump(2) << '\n';
  } else if (s.csv) {
    out << "word,b\n";
    for (const auto& w : words) out << w << ',' << w.count('B') << '\n';
  } else {
    for (const auto& w : words) out << w << '\n';
  }
  return ok;
}

inline int sturmian(const Settings& s, std::ostream& out, std::ostream&) {
  if (s.length < 1) throw UsageError("sturmian needs --length >= 1");
  const auto m = static_cast<std::int64_t>(s.length);
  const auto words = sturmian::all_factors(m);
  const auto classes = sturmian::classes(m);
  if (s.json) {
    out << render::sturmian_json(m, words, classes).dump(2) << '\n';
  } else if (s.csv) {
    out << "left,right,factors\n";
    for (const auto& c : classes) out << c.left.str() << ',' << c.right.str() << ',' << verify::detail::join(c.factors) << '\n';
  } else {
    out << "length " << m << ": " << words.size() << " factors (formula " << sturmian::lipatov(s.length) << "), "
        << classes.size() << " classes\n";
    for (const auto& c : classes)
      out << '(' << c.left.str() << ", " << c.right.str() << "): " << verify::detail::join(c.factors) << '\n';
  }
  return ok;
}

inline int amicable(const Settings& s, std::ostream& out, std::ostream&) {
  if (s.length < 1) throw UsageError("amicable needs --length >= 1");
  if (s.b > s.length) throw UsageError("amicable needs --b <= --length");
  const auto m = static_cast<std::int64_t>(s.length);
  const auto pairs = amicable::count_pairs(m, s.b);
  const auto rows = amicable::class_table(m, s.b);
  const auto doc = render::amicable_json(m, s.b, pairs, rows);
  if (s.json) {
    out << doc.dump(2) << '\n';
  } else if (s.csv) {
    out << "left,right,pairs,bound,corollary_bound\n";
    for (const auto& r : rows)
      out << r.left.str() << ',' << r.right.str() << ',' << r.pairs << ',' << r.bound << ',' << r.corollary << '\n';
  } else {
    out << "length " << m << ", b = " << s.b << ": " << pairs << " ordered pairs, " << doc["z_count"].get<std::uint64_t>()
        << " classes with a pair (asymptotic estimate " << doc["z_asymptotic"].get<std::string>() << ")\n";
    for (const auto& r : rows) {
      if (r.pairs == 0) continue;
      out << '(' << r.left.str() << ", " << r.right.str() << "): " << r.pairs << " pairs, bound " << r.bound
          << ", corollary bound " << r.corollary << '\n';
    }
  }
  return ok;
}

inline int atlas(const Settings& s, std::ostream& out, std::ostream& err) {
  if (s.length < 1) throw UsageError("atlas needs --length >= 1");
  const auto regions = atlas::subdivide(s.length);
  if (!s.svg.empty()) {
    const std::string doc = render::atlas_svg(s.length, regions);
    std::ofstream file(s.svg, std::ios::binary | std::ios::trunc);
    if (!file || !(file << doc) || !file.flush()) throw std::runtime_error("cannot write " + s.svg);
    err << "ietlab: wrote " << s.svg << '\n';
  }
  if (s.json) {
    out << render::atlas_json(s.length, regions).dump(2) << '\n';
  } else if (s.csv) {
    out << "region,vertices,factors\n";
    for (std::size_t i = 0; i < regions.size(); ++i) {
      out << i + 1 << ",\"";
      for (std::size_t k = 0; k < regions[i].polygon.size(); ++k)
        out << (k ? " " : "") << '(' << regions[i].polygon[k].epsilon << ' ' << regions[i].polygon[k].ell << ')';
      out << "\",\"" << verify::detail::join(regions[i].factors) << "\"\n";
    }
  } else {
    out << regions.size() << " regions, " << atlas::union_factors(regions).size() << " factors\n";
    for (std::size_t i = 0; i < regions.size(); ++i) {
      out << "Omega" << i + 1 << ": " << verify::detail::join(regions[i].factors) << "  [";
      for (std::size_t k = 0; k < regions[i].polygon.size(); ++k)
        out << (k ? " " : "") << '(' << regions[i].polygon[k].epsilon << ',' << regions[i].polygon[k].ell << ')';
      out << "]\n";
    }
    out << "interior lines:\n";
    for (const auto& line : atlas::interior_lines(regions)) out << "  " << line.str() << '\n';
  }
  return ok;
}

inline int orbit(const Settings& s, std::ostream& out, std::ostream&) {
  if (s.epsilon.empty() || s.ell.empty()) throw UsageError("orbit needs --epsilon and --ell");
  const triet::IetParams params(exact::QuadraticReal::parse(s.epsilon), exact::QuadraticReal::parse(s.ell),
                                exact::QuadraticReal::parse(s.x0.empty() ? "0" : s.x0));
  const auto word = triet::code_orbit(params, s.n);
  if (s.json) {
    out << nlohmann::json{{"epsilon", params.epsilon().str()},
                          {"ell", params.ell().str()},
                          {"x0", params.x0().str()},
                          {"n", s.n},
                          {"word", word.str()}}
               .dump(2)
        << '\n';
  } else {
    out << word << '\n';
  }
  return ok;
}

inline int bounds(const Settings& s, std::ostream& out, std::ostream&) {
  if (s.max_n < 1) throw UsageError("bounds needs --max-n >= 1");
  const auto counts = analysis::factor_counts(s.max_n, enumerate_options(s));
  const auto rows = analysis::bounds_table(counts);
  std::vector<analysis::PropLowerReport> reports;
  for (std::size_t n = 1; n <= s.max_n; ++n) reports.push_back(analysis::prop_lower_report(n, counts[n]));
  if (s.json) {
    out << render::bounds_json(rows, reports).dump(2) << '\n';
  } else if (s.csv) {
    out << render::bounds_csv(rows);
  } else {
    out << "N  count  pi^2*count/N^4  (constants " << analysis::BoundsRow::lower_const << ", "
        << analysis::BoundsRow::upper_const << ")\n";
    for (const auto& r : rows) out << r.length << "  " << r.count << "  " << analysis::significant(r.ratio, 6) << '\n';
    out << "lower bound check: N  lhs  rhs  holds\n";
    for (const auto& p : reports) out << p.length << "  " << p.lhs << "  " << p.rhs << "  " << (p.holds ? "yes" : "no") << '\n';
  }
  return ok;
}

inline int verify(const Settings& s, std::ostream& out, std::ostream& err) {
  if (s.max_n < 1 || s.max_n > 10) throw UsageError("verify needs 1 <= --max-n <= 10");
  verify::Options options;
  options.max_n = s.max_n;
  options.workers = s.workers;
  verify::Session session(options);
  bool all = true;
  for (int id : verify::suite(s.suite)) {
    const auto result = verify::criteria().at(id)(session);
    all = all && result.passed;
    out << verify::format(result, false) << '\n';
    err << "ietlab: criterion " << id << " took " << result.seconds << " s\n";
  }
  if (!all) {
    report(err, "verification", "suite '" + s.suite + "' has failing criteria");
    return mismatch;
  }
  return ok;
}

}  // namespace detail

/// Parses the command line and runs one subcommand. Results go to `out`;
/// diagnostics and the one-line error reason go to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on two- and three-interval exchange words", "ietlab"};
  app.require_subcommand(1);
  Settings s;

  auto add_output = [&](CLI::App* sub) {
    auto* json = sub->add_flag("--json", s.json, "JSON output");
    auto* csv = sub->add_flag("--csv", s.csv, "CSV output");
    json->excludes(csv);
  };
  auto add_length = [&](CLI::App* sub, const char* what) {
    sub->add_option("--length", s.length, what)->required();
  };
  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--workers", s.workers, "parallel enumeration workers")->check(CLI::Range(1u, 256u));
    sub->add_option("--max-nodes", s.max_nodes, "abort after this many feasibility tests");
  };

  auto* count = app.add_subcommand("count", "number of factors of length N");
  add_length(count, "factor length N");
  count->add_flag("--by-b", s.by_b, "split the count by number of letters B");
  count->add_option("--cache", s.cache_dir, std::string("cache directory (default $") + cache_env + ")");
  add_output(count);
  add_engine(count);

  auto* enumerate = app.add_subcommand("enumerate", "sorted factors of length N");
  add_length(enumerate, "factor length N");
  enumerate->add_option("--cache", s.cache_dir, std::string("cache directory (default $") + cache_env + ")");
  add_output(enumerate);
  add_engine(enumerate);

  auto* sturmian = app.add_subcommand("sturmian", "Sturmian factors and classes of length M");
  add_length(sturmian, "factor length M");
  add_output(sturmian);

  auto* amicable = app.add_subcommand("amicable", "b-amicable pairs of length M");
  add_length(amicable, "factor length M");
  amicable->add_option("--b", s.b, "number of letters B")->required();
  add_output(amicable);

  auto* atlas = app.add_subcommand("atlas", "parameter regions with constant factor lists");
  add_length(atlas, "factor length N");
  atlas->add_option("--svg", s.svg, "write an SVG drawing to this path");
  add_output(atlas);

  auto* orbit = app.add_subcommand("orbit", "coding of an orbit");
  orbit->add_option("--epsilon", s.epsilon, "epsilon, e.g. (-1+sqrt(5))/2")->required();
  orbit->add_option("--ell", s.ell, "ell, e.g. 9/10")->required();
  orbit->add_option("--x0", s.x0, "starting point (default 0)");
  orbit->add_option("--n", s.n, "number of letters")->required();
  orbit->add_flag("--json", s.json, "JSON output");

  auto* bounds = app.add_subcommand("bounds", "count ratios and lower-bound report");
  bounds->add_option("--max-n", s.max_n, "largest N (default 10)");
  add_output(bounds);
  add_engine(bounds);

  auto* verify = app.add_subcommand("verify", "run an acceptance suite");
  verify->add_option("--suite", s.suite, "suite name (default all)")
      ->check(CLI::IsMember(verify::suite_names()));
  verify->add_option("--max-n", s.max_n, "largest N for table checks (default 10)");
  verify->add_option("--workers", s.workers, "parallel enumeration workers")->check(CLI::Range(1u, 256u));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    detail::report(err, "usage", e.what());
    return usage;
  }

  try {
    if (count->parsed()) return detail::count(s, out, err);
    if (enumerate->parsed()) return detail::enumerate(s, out, err);
    if (sturmian->parsed()) return detail::sturmian(s, out, err);
    if (amicable->parsed()) return detail::amicable(s, out, err);
    if (atlas->parsed()) return detail::atlas(s, out, err);
    if (orbit->parsed()) return detail::orbit(s, out, err);
    if (bounds->parsed()) return detail::bounds(s, out, err);
    if (verify->parsed()) return detail::verify(s, out, err);
  } catch (const triet::ResourceLimitError& e) {
    detail::report(err, "resource-limit", e.what());
    return resource_limit;
  } catch (const atlas::AtlasError& e) {
    detail::report(err, "resource-limit", e.what());
    return resource_limit;
  } catch (const exact::ParseError& e) {
    detail::report(err, "parse", e.what());
    return usage;
  } catch (const std::invalid_argument& e) {
    detail::report(err, "usage", e.what());
    return usage;
  } catch (const std::exception& e) {
    detail::report(err, "io", e.what());
    return usage;
  }
  detail::report(err, "usage", "no subcommand");
  return usage;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), out, err);
}

}  // namespace ietlab::cli
