// Command-line front end: graphs, Tutte and Jones polynomials, zeros and
// family portraits.
//
// Exit codes: 0 ok, 1 other failure, 2 parse or build error, 3 catalog
// error, 4 --verify mismatch, 5 root finder did not converge.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "linkpoly/families.hpp"
#include "linkpoly/jones.hpp"
#include "linkpoly/tait.hpp"
#include "linkpoly/tutte.hpp"
#include "linkpoly/zeros.hpp"

using namespace linkpoly;

namespace {

struct VerifyMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long parse_long(const std::string &s, const std::string &what) {
  long v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size())
    throw std::invalid_argument("bad integer '" + s + "' in " + what);
  return v;
}

// "p=2,q=3"
ParamBinding parse_params(const std::string &text) {
  ParamBinding b;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("expected name=value in --params, got '" + item + "'");
    std::string name = item.substr(0, eq);
    if (!b.emplace(name, parse_long(item.substr(eq + 1), "--params")).second)
      throw std::invalid_argument("parameter '" + name + "' given twice");
  }
  return b;
}

// "p=2..20" or "r=-10..-2"
ParamRange parse_range(const std::string &text) {
  auto eq = text.find('=');
  auto dots = text.find("..", eq == std::string::npos ? 0 : eq);
  if (eq == std::string::npos || eq == 0 || dots == std::string::npos)
    throw std::invalid_argument("expected name=lo..hi in --range, got '" + text + "'");
  return {text.substr(0, eq), parse_long(text.substr(eq + 1, dots - eq - 1), "--range"),
          parse_long(text.substr(dots + 2), "--range")};
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s.find_first_of(".en") == std::string::npos)
    s += ".0";
  return s;
}

const Catalog *catalog = &Catalog::builtin();

// Where a polynomial comes from: a catalog family, a graph file or a
// Conway symbol.
struct Source {
  std::string family;
  std::string params;
  std::string graph_file;
  std::string conway;
  bool verify = false;

  void attach(CLI::App *cmd, bool with_verify) {
    auto *fam = cmd->add_option("--family", family, "catalog family id, e.g. \"p q\"");
    cmd->add_option("--params", params, "parameter values, e.g. p=2,q=3")->needs(fam);
    auto *graph = cmd->add_option("--graph", graph_file, "graph text file");
    auto *sym = cmd->add_option("--conway", conway, "concrete Conway symbol");
    fam->excludes(graph)->excludes(sym);
    graph->excludes(sym);
    if (with_verify)
      cmd->add_flag("--verify", verify, "also run deletion-contraction on the family graph and compare")->needs(fam);
  }

  LaurentPoly2 tutte_polynomial() const {
    if (!family.empty()) {
      const FamilyEntry &entry = catalog->entry(family);
      ParamBinding b = parse_params(params);
      LaurentPoly2 t = catalog->eval(family, b);
      if (verify) {
        LaurentPoly2 e = engine_tutte(entry, b);
        if (!(e == t))
          throw VerifyMismatch("verify: catalog " + t.to_string() + "\n        engine  " + e.to_string());
      }
      return t;
    }
    if (!graph_file.empty())
      return tutte(parse_graph_text(read_file(graph_file)));
    if (!conway.empty())
      return tutte(build_graph(parse_conway(conway)));
    throw CLI::ValidationError("one of --family, --graph or --conway is required");
  }
};

int run(int argc, char **argv) {
  CLI::App app{"Tutte and Jones polynomials of knot and link families"};
  app.require_subcommand(1);
  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "catalog file to use instead of the built-in one");

  auto *graph_cmd = app.add_subcommand("graph", "print the Tait graph of a Conway symbol");
  std::string graph_symbol;
  graph_cmd->add_option("--conway", graph_symbol, "concrete Conway symbol")->required();

  auto *tutte_cmd = app.add_subcommand("tutte", "Tutte polynomial");
  Source tutte_src;
  tutte_src.attach(tutte_cmd, true);

  auto *jones_cmd = app.add_subcommand("jones", "normalized Jones polynomial, up to a unit factor");
  Source jones_src;
  jones_src.attach(jones_cmd, false);

  auto *zeros_cmd = app.add_subcommand("zeros", "zeros of the Jones polynomial: re im residual");
  Source zeros_src;
  zeros_src.attach(zeros_cmd, false);

  auto *zerosum_cmd = app.add_subcommand("zerosum", "sum of the absolute values of the Jones zeros");
  Source zerosum_src;
  zerosum_src.attach(zerosum_cmd, false);

  auto *portrait_cmd = app.add_subcommand("portrait", "zeros over a parameter sweep of one family");
  std::string portrait_family;
  std::vector<std::string> range_text;
  long step = 1;
  int threads = 0;
  double extent = 3.0;
  std::string csv_path;
  std::string svg_path;
  portrait_cmd->add_option("--family", portrait_family, "catalog family id")->required();
  portrait_cmd->add_option("--range", range_text, "name=lo..hi, one per parameter")->required();
  portrait_cmd->add_option("--step", step, "parameter step");
  portrait_cmd->add_option("--threads", threads, "worker threads, 0 for all cores");
  portrait_cmd->add_option("--out", csv_path, "CSV output file (default standard output)");
  portrait_cmd->add_option("--svg", svg_path, "SVG scatter plot");
  portrait_cmd->add_option("--extent", extent, "SVG half-width of the plotted square");

  auto *list_cmd = app.add_subcommand("list", "list catalog families: ordinal, arity, id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Catalog loaded;
  if (!catalog_path.empty()) {
    loaded = Catalog::parse(read_file(catalog_path));
    catalog = &loaded;
  }

  if (*graph_cmd) {
    std::cout << to_text(build_graph(parse_conway(graph_symbol)));
  } else if (*tutte_cmd) {
    std::cout << tutte_src.tutte_polynomial().to_string() << '\n';
  } else if (*jones_cmd) {
    NormalizedJones n = normalize(jones_from_tutte(jones_src.tutte_polynomial()));
    std::cout << n.poly.to_string() << '\n' << "shift " << n.shift << '\n' << "sign " << n.sign << '\n';
  } else if (*zeros_cmd) {
    ZeroSet z = roots(jones_from_tutte(zeros_src.tutte_polynomial()));
    for (std::size_t i = 0; i < z.roots.size(); ++i) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%.15g %.15g %.3g\n", z.roots[i].real(), z.roots[i].imag(), z.residuals[i]);
      std::cout << buf;
    }
  } else if (*zerosum_cmd) {
    std::cout << format_real(zero_sum(roots(jones_from_tutte(zerosum_src.tutte_polynomial())))) << '\n';
  } else if (*portrait_cmd) {
    std::vector<ParamRange> ranges;
    for (const std::string &r : range_text)
      ranges.push_back(parse_range(r));
    Portrait p = portrait(portrait_family, ranges, step, threads, *catalog);
    if (csv_path.empty()) {
      write_csv(std::cout, p);
    } else {
      std::ofstream out(csv_path);
      write_csv(out, p);
      if (!out)
        throw IoError("cannot write " + csv_path);
    }
    if (!svg_path.empty()) {
      std::ofstream out(svg_path);
      write_svg(out, p, extent);
      if (!out)
        throw IoError("cannot write " + svg_path);
    }
    for (const PortraitSkip &s : p.skipped) {
      std::cerr << "skipped";
      for (long v : s.params)
        std::cerr << ' ' << v;
      std::cerr << ": " << s.reason << '\n';
    }
    std::cerr << p.members.size() << " members, " << p.point_count() << " zeros, " << p.skipped.size()
              << " skipped\n";
  } else if (*list_cmd) {
    for (const FamilyInfo &f : catalog->list())
      std::cout << f.ordinal << '\t' << f.arity << '\t' << f.id << '\n';
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ValidationError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const VerifyMismatch &e) {
    std::cerr << e.what() << '\n';
    return 4;
  } catch (const CatalogError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const NumericalError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
