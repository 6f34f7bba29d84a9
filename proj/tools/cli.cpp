#include "cli.hpp"

#include "crossnum/bounds_search.hpp"
#include "crossnum/constructions.hpp"
#include "crossnum/drawing_io.hpp"
#include "crossnum/formulas.hpp"
#include "crossnum/spherical.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace crossnum::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kCsv, kJson };

const std::map<std::string, Format> kFormats = {{"text", Format::kText}, {"csv", Format::kCsv}, {"json", Format::kJson}};

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> to_sizes(const std::vector<std::int64_t>& profile) {
  std::vector<int> sizes;
  for (auto v : profile) {
    if (v < 1 || v > 100000) throw UsageError("part sizes must be in [1, 100000]");
    sizes.push_back(static_cast<int>(v));
  }
  return sizes;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CROSSNUM_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("CROSSNUM_SEED is not an unsigned integer");
  }
  return 1;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

// formulas -------------------------------------------------------------------

void print_bound_table(const formulas::BoundTable& t, Format format, std::ostream& out) {
  switch (format) {
    case Format::kText: {
      std::size_t width = 7;
      for (const auto& [k, v] : t.entries) width = std::max(width, k.size());
      out << std::left << std::setw(static_cast<int>(width) + 2) << "profile" << join(t.profile, ",") << "\n";
      for (const auto& [k, v] : t.entries) {
        out << std::setw(static_cast<int>(width) + 2) << k << v.to_string();
        if (!v.is_integer()) out << "  (" << v.to_decimal(12) << ")";
        out << "\n";
      }
      out << std::right;
      break;
    }
    case Format::kCsv:
      out << "schema,profile,quantity,value,decimal\n";
      for (const auto& [k, v] : t.entries) {
        out << "1,\"" << join(t.profile, ",") << "\"," << k << "," << v.to_string() << "," << v.to_decimal(12) << "\n";
      }
      break;
    case Format::kJson: {
      json entries = json::object();
      for (const auto& [k, v] : t.entries) entries[k] = v.to_string();
      out << json{{"schema", 1}, {"profile", t.profile}, {"entries", entries}}.dump(2) << "\n";
      break;
    }
  }
}

// bound ----------------------------------------------------------------------

void print_named_values(const std::string& kind, const std::vector<std::pair<std::string, Rational>>& values,
                        Format format, std::ostream& out) {
  switch (format) {
    case Format::kText: {
      std::size_t width = 4;
      for (const auto& [k, v] : values) width = std::max(width, k.size());
      out << std::left << std::setw(static_cast<int>(width) + 2) << "kind" << kind << "\n";
      for (const auto& [k, v] : values) {
        out << std::setw(static_cast<int>(width) + 2) << k << v.to_string();
        if (!v.is_integer()) out << "  (" << v.to_decimal(12) << ")";
        out << "\n";
      }
      out << std::right;
      break;
    }
    case Format::kCsv:
      out << "schema,kind,quantity,value,decimal\n";
      for (const auto& [k, v] : values) out << "1," << kind << "," << k << "," << v.to_string() << "," << v.to_decimal(12) << "\n";
      break;
    case Format::kJson: {
      json entries = json::object();
      for (const auto& [k, v] : values) entries[k] = v.to_string();
      out << json{{"schema", 1}, {"kind", kind}, {"entries", entries}}.dump(2) << "\n";
      break;
    }
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crossing numbers of complete multipartite graphs", "crossnum"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto format_option = [](CLI::App* sub, std::string& target) {
    sub->add_option("--format", target, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  };

  // formulas
  std::vector<std::int64_t> f_profile;
  std::string f_format = "text";
  auto* formulas_cmd = app.add_subcommand("formulas", "Closed-form bounds for a part-size profile");
  formulas_cmd->add_option("--profile", f_profile, "Part sizes, e.g. 5,5,5")->required()->delimiter(',');
  format_option(formulas_cmd, f_format);

  // draw
  std::string d_kind;
  std::vector<std::int64_t> d_profile;
  std::string d_out, d_svg;
  bool d_no_markers = false;
  auto* draw_cmd = app.add_subcommand("draw", "Generate a drawing");
  draw_cmd->add_option("--kind", d_kind, "alt3 | twoline | convex")
      ->required()
      ->check(CLI::IsMember({"alt3", "twoline", "convex"}));
  draw_cmd->add_option("--profile", d_profile, "Part sizes (convex: all equal)")->required()->delimiter(',');
  draw_cmd->add_option("--out", d_out, "Drawing JSON path (stdout if omitted)");
  draw_cmd->add_option("--svg", d_svg, "Also write an SVG rendering");
  draw_cmd->add_flag("--no-markers", d_no_markers, "Omit crossing markers from the SVG");

  // count
  std::string c_in;
  bool c_list = false;
  unsigned c_workers = 1;
  auto* count_cmd = app.add_subcommand("count", "Count crossings of a drawing file");
  count_cmd->add_option("--in", c_in, "Drawing JSON")->required();
  count_cmd->add_flag("--list", c_list, "Include the crossing edge pairs");
  count_cmd->add_option("--workers", c_workers, "Threads for the pair scan")->check(CLI::Range(1u, 256u));

  // sphere
  std::int64_t s_r = 0, s_n = 0, s_trials = 100000;
  std::optional<std::uint64_t> s_seed;
  unsigned s_workers = 1;
  auto* sphere_cmd = app.add_subcommand("sphere", "Monte Carlo crossings of random geodesic drawings");
  sphere_cmd->add_option("--r", s_r, "Number of parts")->required()->check(CLI::Range(2, 1000));
  sphere_cmd->add_option("--n", s_n, "Part size")->required()->check(CLI::Range(1, 1000));
  sphere_cmd->add_option("--trials", s_trials, "Random drawings")->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  sphere_cmd->add_option("--seed", s_seed, "Seed (default: $CROSSNUM_SEED or 1)");
  sphere_cmd->add_option("--workers", s_workers, "Threads")->check(CLI::Range(1u, 256u));

  // search
  std::vector<std::int64_t> x_profile;
  std::int64_t x_iters = 50000;
  int x_restarts = 8;
  std::optional<std::uint64_t> x_seed;
  unsigned x_workers = 1;
  std::string x_out;
  auto* search_cmd = app.add_subcommand("search", "Local search for drawings with few crossings");
  search_cmd->add_option("--profile", x_profile, "Part sizes (sum <= 12)")->required()->delimiter(',');
  search_cmd->add_option("--iters", x_iters, "Moves per restart")->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  search_cmd->add_option("--restarts", x_restarts, "Restarts")->check(CLI::Range(1, 100000));
  search_cmd->add_option("--seed", x_seed, "Seed (default: $CROSSNUM_SEED or 1)");
  search_cmd->add_option("--workers", x_workers, "Threads")->check(CLI::Range(1u, 256u));
  search_cmd->add_option("--out", x_out, "Write the best drawing here");

  // bound
  std::string b_format = "text";
  auto* bound_cmd = app.add_subcommand("bound", "Lower-bound arithmetic");
  bound_cmd->require_subcommand(1);
  std::int64_t b_n = 0;
  auto* counting_cmd = bound_cmd->add_subcommand("counting", "K_{2,3,n} double-counting bound for K_{n,n,n}");
  counting_cmd->add_option("--n", b_n, "Part size (>= 3)")->required()->check(CLI::Range(std::int64_t{3}, std::int64_t{1} << 40));
  format_option(counting_cmd, b_format);
  std::string b_c;
  auto* flag_cmd = bound_cmd->add_subcommand("flag", "Extrapolate an average K_{3,2,2} crossing count");
  flag_cmd->add_option("--c", b_c, "Average count as decimal or p/q")->required();
  format_option(flag_cmd, b_format);
  std::int64_t b_min_c = 0;
  auto* naive_cmd = bound_cmd->add_subcommand("naive", "Extrapolate the minimum K_{3,2,2} crossing count");
  naive_cmd->add_option("--min-c", b_min_c, "Minimum count")->required()->check(CLI::Range(0, 35));
  format_option(naive_cmd, b_format);

  // verify
  bool v_quick = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity checks");
  verify_cmd->add_flag("--quick", v_quick, "Reduced ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "crossnum: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*formulas_cmd) {
      print_bound_table(formulas::bound_table(f_profile), kFormats.at(f_format), out);
      return kExitOk;
    }

    if (*draw_cmd) {
      const auto sizes = to_sizes(d_profile);
      std::optional<geom::RectilinearDrawing> d;
      if (d_kind == "alt3") {
        if (sizes.size() != 3) throw UsageError("alt3 needs three part sizes");
        d = constructions::alternating_3line(sizes[0], sizes[1], sizes[2]);
      } else if (d_kind == "twoline") {
        if (sizes.size() != 2) throw UsageError("twoline needs two part sizes");
        d = constructions::two_line(sizes[0], sizes[1]);
      } else {
        if (sizes.size() < 2 || !std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == sizes[0]; })) {
          throw UsageError("convex needs at least two equal part sizes");
        }
        if (sizes.size() * static_cast<std::size_t>(sizes[0]) < 3) throw UsageError("convex needs at least 3 vertices");
        d = constructions::convex_max(static_cast<int>(sizes.size()), sizes[0]);
      }
      emit(io::drawing_to_json(*d).dump(2) + "\n", d_out, out);
      if (!d_svg.empty()) {
        constructions::SvgOptions opts;
        opts.crossing_markers = !d_no_markers;
        io::write_text(d_svg, constructions::export_svg(*d, opts));
      }
      return kExitOk;
    }

    if (*count_cmd) {
      geom::RectilinearDrawing d;
      try {
        d = io::read_drawing(c_in);
      } catch (const io::FormatError& e) {
        throw UsageError(e.what());
      }
      geom::CountOptions opts;
      opts.record_pairs = c_list;
      opts.workers = c_workers;
      out << io::report_to_json(geom::count_crossings(d, opts)).dump(2) << "\n";
      return kExitOk;
    }

    if (*sphere_cmd) {
      const std::uint64_t seed = resolve_seed(s_seed);
      const auto est = sphere::monte_carlo_s(s_r, s_n, s_trials, seed, s_workers);
      const Rational exact = sphere::exact_expected_crossings(s_r, s_n);
      std::string ratio;
      try {
        ratio = sphere::ratio_to_max(s_r, s_n).to_decimal(12);
      } catch (const DivisionByZero&) {
        ratio = "";  // CRmax = 0
      }
      std::ostringstream row;
      row << std::setprecision(12);
      row << s_r << "," << s_n << "," << s_trials << "," << est.mean << "," << est.std_error << "," << exact.to_string()
          << "," << ratio << "," << formulas::zeta(s_r).to_string() << "," << seed << "\n";
      out << "r,n,trials,mean,std_error,exact,ratio,zeta,seed\n" << row.str();
      if (est.resamples > 0) err << "crossnum: resampled " << est.resamples << " degenerate drawings\n";
      return kExitOk;
    }

    if (*search_cmd) {
      const auto sizes = to_sizes(x_profile);
      search::SearchOptions opts;
      opts.iterations = x_iters;
      opts.restarts = x_restarts;
      opts.seed = resolve_seed(x_seed);
      opts.workers = x_workers;
      search::SearchResult res;
      try {
        res = search::minimize_crossings(sizes, opts);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      json history = json::array();
      for (const auto& [it, c] : res.history) history.push_back({it, c});
      json summary = {{"schema", 1},
                      {"profile", x_profile},
                      {"seed", res.seed},
                      {"iterations", res.iterations},
                      {"restarts", x_restarts},
                      {"best_count", res.best_count},
                      {"degenerate_retries", res.degenerate_retries},
                      {"history", history}};
      if (sizes.size() == 3) summary["A"] = formulas::bound_A(sizes[0], sizes[1], sizes[2]).get_str();
      if (!x_out.empty()) io::write_drawing(x_out, res.best_drawing);
      else summary["best_drawing"] = io::drawing_to_json(res.best_drawing);
      out << summary.dump(2) << "\n";
      return kExitOk;
    }

    if (*bound_cmd) {
      const Format format = kFormats.at(b_format);
      if (*counting_cmd) {
        const auto b = search::counting_bound(b_n);
        print_named_values("counting",
                           {{"n", Rational(b_n)},
                            {"copies", b.copies},
                            {"total_weight", b.total_weight},
                            {"mult_22", b.mult_22},
                            {"mult_211", b.mult_211},
                            {"bound", b.bound},
                            {"A", Rational(formulas::bound_A(b_n, b_n, b_n))},
                            {"ratio_to_A", b.ratio_to_A}},
                           format, out);
      } else if (*flag_cmd) {
        Rational c;
        try {
          c = Rational::parse(b_c);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        print_named_values("flag", {{"c", c}, {"coefficient", search::flag_extrapolation(c)}}, format, out);
      } else {
        print_named_values("naive", {{"min_c", Rational(b_min_c)}, {"coefficient", search::naive_density_bound(b_min_c)}},
                           format, out);
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      const auto results = run_verification(v_quick);
      std::size_t width = 5;
      for (const auto& r : results) width = std::max(width, r.name.size());
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed;
        out << std::left << std::setw(static_cast<int>(width) + 2) << r.name << (r.passed ? "PASS  " : "FAIL  ")
            << r.detail << "\n";
      }
      out << std::right << (all ? "all checks passed" : "verification FAILED") << " (" << results.size()
          << " checks" << (v_quick ? ", quick" : "") << ")\n";
      return all ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "crossnum: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "crossnum: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "crossnum: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace crossnum::cli
