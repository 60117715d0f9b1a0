#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "elliptikit/elliptikit.hpp"
#include "elliptikit/parse.hpp"
#include "elliptikit/svg.hpp"
#include "elliptikit/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using ek::ErrorKind;

constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitUndefined = 3;

struct TriangleSpec {
  std::string sides;
  std::vector<std::string> vertices;
  int index = 0;
};

void add_triangle_options(CLI::App* app, TriangleSpec& t) {
  app->add_option("--sides", t.sides, "side lengths a,b,c (accepts pi, e.g. pi/2,pi/2,pi/2)");
  app->add_option("--vertices", t.vertices, "three vertex triples 'x0,x1,x2' (or one string joined by ';')");
  app->add_option("--index", t.index, "triangle index 0..3")->check(CLI::Range(0, 3));
}

template <class T>
ek::Frame<T> make_frame(const TriangleSpec& t) {
  bool s = !t.sides.empty(), v = !t.vertices.empty();
  if (s == v) ek::fail(ErrorKind::ParseError, "give exactly one of --sides or --vertices");
  if (s) {
    auto abc = ek::parse::triple<T>(t.sides);
    return ek::frame_from_sides(abc[0], abc[1], abc[2], t.index);
  }
  auto vs = ek::parse::vertices<T>(t.vertices);
  for (auto& x : vs)
    if (ek::is_zero(x)) ek::fail(ErrorKind::ParseError, "vertex with all coordinates zero");
  return ek::build_frame(ek::Point<T>{vs[0]}, ek::Point<T>{vs[1]}, ek::Point<T>{vs[2]}, t.index);
}

// Largest-magnitude coordinate scaled to 1, overall sign lexicographically positive.
template <class T>
ek::Vec3<T> max_normalized(const ek::Vec3<T>& v) {
  using ek::operator/, ek::operator-;
  T m = ek::max_abs(v);
  ek::Vec3<T> u = v / m;
  return ek::lex_positive(u) ? u : -u;
}

template <class T>
json arr(const ek::Vec3<T>& v) {
  return json::array({double(v[0]), double(v[1]), double(v[2])});
}

// A named point of the frame: catalog center or vertex-indexed point.
template <class T>
std::optional<ek::Vec3<T>> named_point(const std::string& name, const ek::Frame<T>& f) {
  if (auto id = ek::center_by_name(name)) return ek::center(*id, f);
  static const char* tri[3] = {"T_A", "T_B", "T_C"};
  for (int k = 0; k < 3; ++k)
    if (name == tri[k]) return ek::vertex_center(ek::VertexCenterId::Triplex, k, f);
  return std::nullopt;
}

std::vector<std::string> expand_names(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (auto& n : in) {
    if (n == "all") {
      for (auto& c : ek::center_table) out.emplace_back(c.name);
      for (auto id : ek::all_lines) out.emplace_back(ek::line_name(id));
    } else {
      out.push_back(n);
    }
  }
  return out;
}

template <class T>
json triangle_json(const ek::Frame<T>& f) {
  json j;
  j["index"] = f.index;
  j["sides"] = json::array({double(f.a), double(f.b), double(f.c)});
  j["angles"] = json::array({double(f.alpha), double(f.beta), double(f.gamma)});
  j["excess"] = double(f.excess);
  j["staudtian"] = double(f.staudtian);
  j["vertices"] = json::array({arr(f.A), arr(f.B), arr(f.C)});
  return j;
}

template <class T>
int compute(const TriangleSpec& spec, const std::vector<std::string>& raw_names, const std::vector<std::string>& radii,
            bool distances) {
  ek::Frame<T> f = make_frame<T>(spec);
  auto names = expand_names(raw_names);
  json out;
  out["triangle"] = triangle_json(f);

  json centers = json::object(), lines = json::object();
  std::vector<std::pair<std::string, ek::Vec3<T>>> pts;
  for (auto& n : names) {
    if (auto p = named_point<T>(n, f)) {
      json c;
      if (auto id = ek::center_by_name(n)) {
        c["symbol"] = std::string(ek::info(*id).symbol);
        if (ek::info(*id).kimberling) c["euclidean_limit"] = "X" + std::to_string(ek::info(*id).kimberling);
      }
      c["bary"] = arr(max_normalized(*p));
      c["bary_unit"] = arr(ek::canonical(*p));
      c["ambient"] = arr(ek::canonical(ek::ambient(f, *p)));
      centers[n] = c;
      pts.emplace_back(n, *p);
    } else if (auto lid = ek::line_by_name(n)) {
      ek::Vec3<T> l = ek::central_line(*lid, f);
      json c;
      c["bary"] = arr(max_normalized(l));
      c["ambient"] = arr(ek::canonical(ek::to_ambient_line(f, ek::BLine<T>{l}).v));
      lines[n] = c;
    } else {
      ek::fail(ErrorKind::ParseError, "unknown center or line '" + n + "'");
    }
  }
  if (!centers.empty()) out["centers"] = centers;
  if (!lines.empty()) out["lines"] = lines;

  if (!radii.empty()) {
    json r = json::object();
    for (auto& k : radii) {
      if (k == "circum") r["circum"] = double(ek::circumradius(f));
      else if (k == "in") r["in"] = double(ek::inradius(f));
      else if (k == "dual") r["dual"] = double(ek::dual_circumradius(f));
      else ek::fail(ErrorKind::ParseError, "unknown radius '" + k + "' (circum, in, dual)");
    }
    out["radii"] = r;
  }
  if (distances) {
    json d = json::array();
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        d.push_back({{"from", pts[i].first}, {"to", pts[j].first},
                     {"distance", double(ek::bary_distance(f, pts[i].second, pts[j].second))}});
    out["distances"] = d;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct VerifyArgs {
  std::uint64_t seed = 42;
  int frames = 1000;
  double floor = ek::default_staudtian_floor;
  std::vector<std::string> only;
  std::vector<std::string> tol;
  std::string out;
  unsigned threads = 0;
  std::string precision = "long";
};

double parse_positive(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v > 0)) ek::fail(ErrorKind::ParseError, what + " must be a positive number, got '" + text + "'");
  return v;
}

int verify(const VerifyArgs& a) {
  ek::verify::Options o;
  o.seed = a.seed;
  o.frames = a.frames;
  o.staudtian_floor = a.floor;
  o.threads = a.threads;
  for (auto& s : a.only)
    for (auto& p : ek::parse::split(s, ','))
      if (!p.empty()) o.only.push_back(p);
  for (auto& s : a.tol) {
    auto eq = s.find('=');
    if (eq == std::string::npos) ek::fail(ErrorKind::ParseError, "--tol expects name=value, got '" + s + "'");
    o.tolerances.emplace_back(ek::parse::trim(s.substr(0, eq)), parse_positive(ek::parse::trim(s.substr(eq + 1)), "tolerance"));
  }
  if (const char* env = std::getenv("ELLIPTIKIT_TOL_SCALE"); env && *env)
    o.tol_scale = parse_positive(env, "ELLIPTIKIT_TOL_SCALE");

  ek::verify::Report r;
  if (a.precision == "long") r = ek::verify::run<long double>(o);
  else if (a.precision == "double") r = ek::verify::run<double>(o);
  else ek::fail(ErrorKind::ParseError, "precision must be 'long' or 'double'");

  std::string text = r.to_json();
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream fo(a.out, std::ios::binary);
    if (!fo) throw std::runtime_error("cannot write " + a.out);
    fo << text;
  }
  int failed = 0;
  for (auto& c : r.checks) {
    bool bad = !c.pass && !c.informational;
    failed += bad;
    if (bad || !a.out.empty())
      std::fprintf(stderr, "%-4s %-48s max %.3e tol %.1e tested %d skipped %d%s\n", c.pass ? "ok" : (c.informational ? "info" : "FAIL"),
                   c.name.c_str(), c.max_residual, c.tolerance, c.frames_tested, c.frames_skipped,
                   c.error.empty() ? "" : (" error: " + c.error).c_str());
  }
  std::fprintf(stderr, "%zu checks, %d failed, report hash %016llx\n", r.checks.size(), failed,
               static_cast<unsigned long long>(r.hash()));
  return r.all_pass ? 0 : kExitFail;
}

int limit(const std::string& name, const std::string& sides, const std::string& lambdas) {
  auto id = ek::center_by_name(name);
  if (!id) ek::fail(ErrorKind::ParseError, "unknown center '" + name + "'");
  auto abc = ek::parse::triple<long double>(sides);
  std::vector<double> ls;
  for (auto& p : ek::parse::split(lambdas, ',')) ls.push_back(double(ek::parse::real_expr<long double>(p)));
  if (ls.empty()) ek::fail(ErrorKind::ParseError, "no shrink factors given");
  auto rep = ek::limit_sweep<long double>(*id, abc[0], abc[1], abc[2], ls);
  json out;
  out["center"] = name;
  out["reference"] = "X" + std::to_string(ek::info(*id).kimberling);
  out["sides"] = json::array({double(abc[0]), double(abc[1]), double(abc[2])});
  json rows = json::array();
  for (auto& r : rep.rows) rows.push_back({{"lambda", r.lambda}, {"discrepancy", r.discrepancy}});
  out["rows"] = rows;
  out["orders"] = rep.orders;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int render(const TriangleSpec& spec, const std::vector<std::string>& elements, const std::string& out_path,
           double half_width) {
  using T = long double;
  ek::Frame<T> f = make_frame<T>(spec);
  ek::svg::Figure fig(half_width);
  fig.center_on(ek::svg::to_double(ek::ambient(f, ek::center(ek::CenterId::G, f))));
  fig.substitute_circle();

  auto conic = [&](const ek::Conic<T>& c, const std::string& label, const ek::svg::Style& st) {
    fig.conic(ek::svg::ambient_conic(f, c), label, st);
  };
  auto bline = [&](const ek::Vec3<T>& l, const std::string& label, const ek::svg::Style& st) {
    fig.line(ek::svg::to_double(ek::to_ambient_line(f, ek::BLine<T>{l}).v), label, st);
  };

  std::vector<std::pair<std::string, ek::Vec3<T>>> points;
  bool draw_sides = false;
  for (auto& e : expand_names(elements)) {
    if (e == "sides") {
      draw_sides = true;
    } else if (e == "circumcircle") {
      conic(ek::circumcircle(f), "circumcircle", {"#1f77b4", 1.5, ""});
    } else if (e == "incircle") {
      conic(ek::incircle(f), "incircle", {"#2ca02c", 1.5, ""});
    } else if (e == "excircles") {
      for (int i = 1; i <= 3; ++i) conic(ek::incircle_of(f, i), "excircle " + std::to_string(i), {"#2ca02c", 1.0, "6,3"});
    } else if (e == "hart") {
      conic(ek::hart_circle(f).conic, "Hart circle", {"#d62728", 1.5, ""});
    } else if (e == "apollonian") {
      auto cs = ek::apollonian_circles(f);
      for (int k = 0; k < 3; ++k) conic(ek::to_conic(f, cs[k]), std::string("apollonian ") + "ABC"[k], {"#9467bd", 1.0, ""});
    } else if (e == "lemoine-conic") {
      conic(ek::lemoine_conic(f), "Lemoine conic", {"#8c564b", 1.5, ""});
    } else if (e == "vigara-conic") {
      conic(ek::vigara_symmetry(f).conic, "Vigara conic", {"#e377c2", 1.5, ""});
    } else if (auto lid = ek::line_by_name(e)) {
      bline(ek::central_line(*lid, f), e, {"#7f7f7f", 1.2, "8,4"});
    } else if (auto p = named_point<T>(e, f)) {
      points.emplace_back(e, *p);
    } else {
      ek::fail(ErrorKind::ParseError, "unknown element '" + e + "'");
    }
  }
  if (draw_sides)
    for (int k = 0; k < 3; ++k) {
      ek::Vec3<T> l{};
      l[k] = 1;
      bline(l, std::string("side ") + "abc"[k], {"black", 1.0, ""});
    }
  for (int k = 0; k < 3; ++k) fig.point(ek::svg::to_double(f.vertex(k)), std::string(1, "ABC"[k]), "black");
  for (auto& [n, p] : points) fig.point(ek::svg::to_double(ek::ambient(f, p)), n, "#d62728");

  for (auto& w : fig.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  std::string svg = fig.str();
  if (out_path.empty()) {
    std::cout << svg;
  } else {
    std::ofstream fo(out_path, std::ios::binary);
    if (!fo) throw std::runtime_error("cannot write " + out_path);
    fo << svg;
  }
  return 0;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return kExitParse;
    case ErrorKind::UndefinedCenter:
    case ErrorKind::IsoscelesDegeneracy:
    case ErrorKind::EquilateralDegeneracy: return kExitUndefined;
    default: return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elliptikit: triangle geometry in the elliptic plane"};
  app.require_subcommand(1);

  TriangleSpec ctri;
  std::vector<std::string> names, radii;
  bool distances = false;
  std::string cprec = "long";
  auto* cc = app.add_subcommand("compute", "coordinates of centers and central lines as JSON");
  add_triangle_options(cc, ctri);
  cc->add_option("names", names, "center or line names, T_A/T_B/T_C, or 'all'");
  cc->add_option("--radius", radii, "circum, in, dual")->delimiter(',');
  cc->add_flag("--distances", distances, "pairwise distances between the requested points");
  cc->add_option("--precision", cprec, "long or double")->check(CLI::IsMember({"long", "double"}));

  VerifyArgs va;
  auto* vc = app.add_subcommand("verify", "run the theorem checks over seeded random frames");
  vc->add_option("--seed", va.seed, "RNG seed");
  vc->add_option("--frames", va.frames, "number of random frames")->check(CLI::PositiveNumber);
  vc->add_option("--floor", va.floor, "staudtian floor for frame rejection")->check(CLI::PositiveNumber);
  vc->add_option("--only", va.only, "check names or group prefixes (repeatable, comma lists allowed)");
  vc->add_option("--tol", va.tol, "tolerance override name=value (repeatable)");
  vc->add_option("--out", va.out, "write the JSON report here instead of stdout");
  vc->add_option("--threads", va.threads, "worker threads (0: hardware concurrency)");
  vc->add_option("--precision", va.precision, "long or double")->check(CLI::IsMember({"long", "double"}));

  std::string lname, lsides = "1.0,0.8,0.6", lambdas = "1e-1,1e-2,1e-3";
  auto* lc = app.add_subcommand("limit", "euclidean limit sweep of a center");
  lc->add_option("name", lname, "center name")->required();
  lc->add_option("--sides", lsides, "base side lengths");
  lc->add_option("--lambdas", lambdas, "shrink factors, comma separated");

  TriangleSpec rtri;
  std::vector<std::string> elements;
  std::string rout;
  double half_width = 2.5;
  auto* rc = app.add_subcommand("render", "SVG figure in the affine chart");
  add_triangle_options(rc, rtri);
  rc->add_option("elements", elements,
                 "centers, lines, circumcircle, incircle, excircles, hart, apollonian, lemoine-conic, vigara-conic, sides");
  rc->add_option("--out", rout, "output file (default stdout)");
  rc->add_option("--window", half_width, "half width of the chart window")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*cc) return cprec == "long" ? compute<long double>(ctri, names, radii, distances)
                                    : compute<double>(ctri, names, radii, distances);
    if (*vc) return verify(va);
    if (*lc) return limit(lname, lsides, lambdas);
    if (*rc) return render(rtri, elements, rout, half_width);
  } catch (const ek::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFail;
  }
  return kExitFail;
}
