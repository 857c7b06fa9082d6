#include "iso3/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <ostream>
#include <sstream>
#include <tuple>

#include "iso3/error.hpp"

namespace iso3 {

namespace {

Json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

Json params(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = number(v);
  return j;
}

}  // namespace

Json to_json(const Interval& i) { return Json::array({number(i.lo), number(i.hi)}); }

Json to_json(const Rect& r) {
  Json j;
  j["u"] = to_json(r.u);
  j["v"] = to_json(r.v);
  return j;
}

Json to_json(const FamilyDescriptor& d) {
  Json j;
  j["id"] = d.id;
  j["kind"] = d.kind;
  j["family"] = to_string(d.family);
  j["parameters"] = d.parameters;
  j["anchor"] = d.anchor;
  j["summary"] = d.summary;
  j["constants"] = params(d.defaults);
  j["domain"] = to_json(d.domain);
  if (d.expected) {
    j["expected"] = {{"curvature", to_string(d.expected->which)},
                     {"value", number(d.expected->value)}};
  } else {
    j["expected"] = nullptr;
  }
  j["constraints"] = d.constraints;
  j["suppressed"] = d.suppressed;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["check"] = r.check;
  j["family"] = r.family;
  j["grid"] = r.grid;
  j["seed"] = r.seed;
  j["max_dev"] = number(r.max_dev);
  j["mean_dev"] = number(r.mean_dev);
  j["worst_point"] = Json::array({number(r.worst_point.first), number(r.worst_point.second)});
  j["tol"] = number(r.tol);
  j["pass"] = r.pass;
  j["control"] = r.control;
  j["expect_pass"] = r.expect_pass();
  j["metric"] = r.metric;
  return j;
}

Json to_json(const std::vector<VerificationReport>& reports) {
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(to_json(r));
  return j;
}

Json to_json(const ReconstructionReport& r, bool samples) {
  Json j;
  j["id"] = r.id;
  j["equation"] = r.equation;
  j["interval"] = Json::array({number(r.t0), number(r.t1)});
  j["step"] = number(r.step);
  j["sup_error"] = number(r.sup_error);
  Json comps = Json::array();
  for (const auto& c : r.components) comps.push_back({{"name", c.name}, {"sup_error", number(c.sup_error)}});
  j["components"] = comps;
  j["probe_steps"] = r.probe_steps;
  Json pe = Json::array(), fa = Json::array();
  for (double e : r.probe_errors) pe.push_back(number(e));
  for (double f : r.factors) fa.push_back(number(f));
  j["probe_errors"] = pe;
  j["factors"] = fa;
  j["order_estimate"] = number(r.order);
  j["curvature"] = to_string(r.which);
  j["target"] = number(r.target);
  j["consistency_dev"] = number(r.consistency_dev);
  if (samples) {
    j["samples"] = {{"t", r.grid_t}, {"numeric", r.numeric}, {"exact", r.exact}};
  }
  return j;
}

Json to_json(const WitnessReport& w) {
  Json j;
  j["id"] = w.id;
  j["statement"] = w.statement;
  j["quantity"] = w.quantity;
  j["kind"] = w.kind == WitnessKind::Vanishing ? "vanishing" : "non-vanishing";
  j["constants"] = params(w.constants);
  j["samples"] = w.samples;
  j["max_abs"] = number(w.max_abs);
  j["min_abs"] = number(w.min_abs);
  j["relation_residual"] = number(w.relation_residual);
  j["threshold"] = number(w.threshold);
  j["contradiction"] = w.contradiction;
  return j;
}

void write_csv(std::ostream& os, const SurfaceChart& chart, const GridSpec& grid) {
  grid.validate(chart.domain());
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf << std::setprecision(17);
  buf << "u,v,x,y,z,E,F,G,l,m,n,K,H\n";
  for (std::size_t j = 0; j < grid.nv; ++j) {
    for (std::size_t i = 0; i < grid.nu; ++i) {
      const double u = grid.u_at(i), v = grid.v_at(j);
      const Jet2 jet = chart.jet(u, v);
      const FundamentalForms ff = fundamental_forms(jet);
      buf << u << ',' << v << ',' << jet.value[0] << ',' << jet.value[1] << ',' << jet.value[2]
          << ',' << ff.E << ',' << ff.F << ',' << ff.G << ',' << ff.l << ',' << ff.m << ','
          << ff.n << ',' << gauss_curvature(ff) << ',' << mean_curvature(ff) << '\n';
    }
  }
  os << buf.str();
}

void write_obj(std::ostream& os, const SurfaceChart& chart, const GridSpec& grid) {
  grid.validate(chart.domain());
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf << std::setprecision(9);
  buf << "# " << chart.name() << " " << grid.label() << "\n";
  for (std::size_t j = 0; j < grid.nv; ++j) {
    for (std::size_t i = 0; i < grid.nu; ++i) {
      const Vec3 p = chart.point(grid.u_at(i), grid.v_at(j));
      buf << "v " << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    }
  }
  for (std::size_t j = 0; j + 1 < grid.nv; ++j) {
    for (std::size_t i = 0; i + 1 < grid.nu; ++i) {
      const std::size_t a = j * grid.nu + i + 1, b = a + 1, c = a + grid.nu, d = c + 1;
      buf << "f " << a << ' ' << b << ' ' << d << '\n';
      buf << "f " << a << ' ' << d << ' ' << c << '\n';
    }
  }
  os << buf.str();
}

// ---- configuration ----------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& s, const std::string& where) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(where + ": expected a number, got '" + s + "'");
  }
  return v;
}

std::uint64_t to_uint(const std::string& s, const std::string& where) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(where + ": expected a non-negative integer, got '" + s + "'");
  }
  return v;
}

bool to_bool(const std::string& s, const std::string& where) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError(where + ": expected true or false, got '" + s + "'");
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw ParseError("grid '" + text + "' is not of the form WxH");
  const auto w = to_uint(text.substr(0, x), "grid width");
  const auto h = to_uint(text.substr(x + 1), "grid height");
  if (w < 2 || h < 2) throw ParseError("grid '" + text + "' needs at least 2x2 samples");
  return {w, h};
}

Rect parse_range(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("range '" + text + "' is not u0:u1,v0:v1");
  auto interval = [&](const std::string& part) {
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw ParseError("range '" + text + "' is not u0:u1,v0:v1");
    Interval i{to_double(trim(part.substr(0, colon)), "range"),
               to_double(trim(part.substr(colon + 1)), "range")};
    if (!(i.lo < i.hi)) throw ParseError("range '" + text + "' has an empty interval");
    return i;
  };
  return {interval(text.substr(0, comma)), interval(text.substr(comma + 1))};
}

void apply_config(std::istream& in, CliConfig& cfg, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    auto& h = cfg.harness;
    auto& t = h.tol;
    if (key == "grid") {
      const auto [w, g] = parse_grid(value);
      if (w != g) throw ParseError(where + ": harness grid must be square");
      h.grid = w;
    } else if (key == "eval_grid") {
      std::tie(cfg.eval_nu, cfg.eval_nv) = parse_grid(value);
    } else if (key == "inset") {
      h.inset = to_double(value, where);
    } else if (key == "eval_inset") {
      cfg.eval_inset = to_double(value, where);
    } else if (key == "seed") {
      h.seed = to_uint(value, where);
    } else if (key == "tol") {
      t.override_all(to_double(value, where));
    } else if (key == "tol.closed") {
      t.closed = to_double(value, where);
    } else if (key == "tol.oracle") {
      t.oracle = to_double(value, where);
    } else if (key == "tol.recon") {
      t.recon = to_double(value, where);
    } else if (key == "tol.recon_sup") {
      t.recon_sup = to_double(value, where);
    } else if (key == "tol.flat") {
      t.flat = to_double(value, where);
    } else if (key == "tol.motion") {
      t.motion = to_double(value, where);
    } else if (key == "tol.witness") {
      t.witness = to_double(value, where);
    } else if (key == "tol.fd") {
      t.fd = to_double(value, where);
    } else if (key == "oracle_points") {
      h.oracle_points = to_uint(value, where);
    } else if (key == "motions") {
      h.motions = to_uint(value, where);
    } else if (key == "motion_grid") {
      h.motion_grid = to_uint(value, where);
    } else if (key == "fd_points") {
      h.fd_points = to_uint(value, where);
    } else if (key == "ode_step") {
      h.ode_step = to_double(value, where);
    } else if (key == "workers") {
      h.workers = to_uint(value, where);
    } else if (key == "out") {
      cfg.out_dir = value;
    } else if (key == "json") {
      cfg.json = to_bool(value, where);
    } else {
      throw ParseError(where + ": unknown key '" + key + "'");
    }
  }
}

void load_config_file(const std::string& path, CliConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  apply_config(in, cfg, path);
}

}  // namespace iso3
