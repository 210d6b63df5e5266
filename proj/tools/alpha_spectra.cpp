// alpha-spectra: A_alpha spectra of mixed graphs at desk scale.
//
// Subcommands: radius, aalpha, kelmans, enumerate, poset, maximal, bounds,
// verify, star-root. Graphs travel as JSON ({"n":..,"arcs":[[t,h],..],
// "undirected":[[u,v],..]}), posets as DOT, verification reports as CSV.
// Exit codes: 0 ok, 1 validation error, 2 numerical error, 3 cap exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aspec/bounds.hpp"
#include "aspec/enumeration.hpp"
#include "aspec/format.hpp"
#include "aspec/graph_json.hpp"
#include "aspec/kelmans.hpp"
#include "aspec/spectral.hpp"

namespace {

using namespace aspec;

std::vector<double> parse_alpha_grid(const std::string& text) {
  std::vector<double> grid;
  auto parse_one = [](const std::string& s) {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw Error(errc::parameter_out_of_range, "bad alpha value: " + s);
    return v;
  };
  if (text.find(':') != std::string::npos) {
    // start:step:end
    std::istringstream is(text);
    std::string part;
    std::vector<double> parts;
    while (std::getline(is, part, ':')) parts.push_back(parse_one(part));
    if (parts.size() != 3 || parts[1] <= 0)
      fail(errc::parameter_out_of_range, "alpha grid must be start:step:end with step > 0");
    for (long i = 0;; ++i) {
      double v = parts[0] + static_cast<double>(i) * parts[1];
      if (v > parts[2] + 1e-12) break;
      grid.push_back(std::min(v, parts[2]));
    }
  } else {
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) grid.push_back(parse_one(part));
  }
  for (double a : grid)
    if (!(a >= 0.0 && a <= 1.0)) fail(errc::alpha_out_of_range, "alpha must lie in [0,1]");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty()) fail(errc::parameter_out_of_range, "alpha grid is empty");
  return grid;
}

// "N" or "LO:HI"
std::pair<int, int> parse_order_range(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw Error(errc::parameter_out_of_range, "bad order range: " + text);
  }
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) fail(errc::parameter_out_of_range, "cannot open output file " + out_path);
  os << text;
}

std::string matrix_plain(const Matrix& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ' ';
      s += format_fixed12(m(i, j));
    }
    s += '\n';
  }
  return s;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"A_alpha spectra of mixed graphs"};
  app.require_subcommand(1);

  std::string graph_path, out_path, format = "plain", alpha_grid_text, order_text;
  double alpha = 0.0, tol = 0.0;
  int order = 0, size = 0, a_vertex = 0, b_vertex = 0, extra_out = 0;

  auto* radius = app.add_subcommand("radius", "A_alpha spectral radius of a graph");
  radius->add_option("graph", graph_path, "graph JSON file")->required();
  radius->add_option("--alpha", alpha, "alpha in [0,1]")->required();
  radius->add_option("--tol", tol, "spectral tolerance (default 1e-10)");
  radius->add_option("--format", format, "plain | json");
  radius->add_option("--out", out_path, "output file (default stdout)");

  auto* aalpha = app.add_subcommand("aalpha", "A_alpha matrix of a graph");
  aalpha->add_option("graph", graph_path, "graph JSON file")->required();
  aalpha->add_option("--alpha", alpha, "alpha in [0,1]")->required();
  aalpha->add_option("--format", format, "plain | json");
  aalpha->add_option("--out", out_path, "output file (default stdout)");

  auto* kelmans = app.add_subcommand("kelmans", "Kelmans transformation from b to a");
  kelmans->add_option("graph", graph_path, "graph JSON file")->required();
  kelmans->add_option("--a", a_vertex, "receiving vertex")->required();
  kelmans->add_option("--b", b_vertex, "donating vertex")->required();
  kelmans->add_option("--out", out_path, "output file (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "mixed tree classes of order n, size m");
  enumerate->add_option("--order", order, "order n")->required();
  enumerate->add_option("--size", size, "size m")->required();
  enumerate->add_option("--out", out_path, "output file (default stdout)");

  auto* poset = app.add_subcommand("poset", "DOT export of the mixed-tree poset");
  poset->add_option("--order", order, "order n")->required();
  poset->add_option("--size", size, "size m")->required();
  poset->add_option("--out", out_path, "output file (default stdout)");

  auto* maximal = app.add_subcommand("maximal", "maximality of a mixed tree class");
  maximal->add_option("graph", graph_path, "graph JSON file")->required();
  maximal->add_option("--format", format, "plain | json");
  maximal->add_option("--out", out_path, "output file (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "lower/upper radius bounds for (n, m, alpha)");
  bounds->add_option("--order", order, "order n")->required();
  bounds->add_option("--size", size, "size m")->required();
  bounds->add_option("--alpha", alpha, "alpha in [0,1]")->required();
  bounds->add_option("--format", format, "plain | json");
  bounds->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "exhaustive bounds verification (CSV)");
  verify->add_option("--order", order_text, "order n or range lo:hi")->required();
  verify->add_option("--size", size, "fix the size m (default: all valid m)");
  verify->add_option("--alpha-grid", alpha_grid_text, "a,b,c or start:step:end")->required();
  verify->add_option("--tol", tol, "slack/attainment tolerance (default 1e-8)");
  verify->add_option("--out", out_path, "output file (default stdout)");

  auto* star_root = app.add_subcommand("star-root", "mixed-star radius via its quadratic");
  star_root->add_option("--order", order, "order n")->required();
  star_root->add_option("--size", size, "size m")->required();
  star_root->add_option("--extra-out", extra_out, "center->leaf arcs beyond undirected edges")
      ->required();
  star_root->add_option("--alpha", alpha, "alpha in [0,1]")->required();
  star_root->add_option("--format", format, "plain | json");
  star_root->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (format != "plain" && format != "json")
      fail(errc::parameter_out_of_range, "format must be plain or json");
    if ((radius->count("--tol") || verify->count("--tol")) && !(tol > 0.0))
      fail(errc::parameter_out_of_range, "tol must be positive");
    std::string out;

    if (*radius) {
      MixedGraph g = load_graph_file(graph_path);
      double rho = spectral_radius(a_alpha(g, alpha), tol > 0.0 ? tol : kDefaultSpectralTol);
      out = format == "json" ? "{\"rho\":" + format_fixed12(rho) + "}\n"
                             : format_fixed12(rho) + "\n";
    } else if (*aalpha) {
      MixedGraph g = load_graph_file(graph_path);
      Matrix m = a_alpha(g, alpha);
      if (format == "json") {
        out = "{\"n\":" + std::to_string(g.order()) + ",\"alpha\":" + format_fixed12(alpha) +
              ",\"matrix\":[";
        for (int i = 0; i < m.rows(); ++i) {
          out += i ? ",[" : "[";
          for (int j = 0; j < m.cols(); ++j)
            out += (j ? "," : "") + format_fixed12(m(i, j));
          out += "]";
        }
        out += "]}\n";
      } else {
        out = matrix_plain(m);
      }
    } else if (*kelmans) {
      MixedGraph g = load_graph_file(graph_path);
      out = graph_json_string(graph_kelmans(g, a_vertex, b_vertex)) + "\n";
    } else if (*enumerate) {
      for (const auto& c : enumerate_mixed_trees(order, size))
        out += graph_json_string(c.graph) + "\n";
    } else if (*poset) {
      out = poset_to_dot(build_poset(order, size));
    } else if (*maximal) {
      MixedGraph g = load_graph_file(graph_path);
      bool exhaustive = is_maximal(g);
      bool classified = classify_maximal(g);
      if (format == "json")
        out = std::string("{\"maximal\":") + (exhaustive ? "true" : "false") +
              ",\"classifier\":" + (classified ? "true" : "false") + "}\n";
      else
        out = std::string("maximal: ") + (exhaustive ? "true" : "false") +
              "\nclassifier: " + (classified ? "true" : "false") + "\n";
    } else if (*bounds) {
      double lo = lower_bound(order, size, alpha);
      double up = upper_bound(order, size, alpha);
      if (format == "json")
        out = "{\"lower\":" + format_fixed12(lo) + ",\"upper\":" + format_fixed12(up) + "}\n";
      else
        out = "lower " + format_fixed12(lo) + "\nupper " + format_fixed12(up) + "\n";
    } else if (*verify) {
      auto [n_lo, n_hi] = parse_order_range(order_text);
      std::optional<int> m_fixed;
      if (verify->count("--size")) m_fixed = size;
      BoundsReport report = verify_bounds(n_lo, n_hi, m_fixed, parse_alpha_grid(alpha_grid_text),
                                          tol > 0.0 ? tol : 1e-8);
      std::ostringstream os;
      write_bounds_csv(report, os);
      out = os.str();
    } else if (*star_root) {
      double root = star_quadratic_root(order, size, extra_out, alpha);
      out = format == "json" ? "{\"root\":" + format_fixed12(root) + "}\n"
                             : format_fixed12(root) + "\n";
    }

    emit(out_path, out);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (is_numerical(e.code())) return 2;
    if (is_cap(e.code())) return 3;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
