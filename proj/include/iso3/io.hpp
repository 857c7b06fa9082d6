#pragma once

// Serialization (JSON reports, CSV fields, OBJ meshes) and the key=value
// configuration file shared by the command-line front end.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "iso3/catalog.hpp"
#include "iso3/harness.hpp"
#include "iso3/ode.hpp"

namespace iso3 {

using Json = nlohmann::ordered_json;

Json to_json(const Interval& i);
Json to_json(const Rect& r);
Json to_json(const FamilyDescriptor& d);
Json to_json(const VerificationReport& r);
Json to_json(const std::vector<VerificationReport>& reports);
Json to_json(const ReconstructionReport& r, bool samples = false);
Json to_json(const WitnessReport& w);

// Header u,v,x,y,z,E,F,G,l,m,n,K,H; 17 significant digits, '.' decimal.
// Rows run over v outer, u inner. Throws on a non-admissible grid point.
void write_csv(std::ostream& os, const SurfaceChart& chart, const GridSpec& grid);

// Vertices row-major (v outer, u inner) with 9 significant digits; each grid
// cell becomes two triangles with 1-based indices.
void write_obj(std::ostream& os, const SurfaceChart& chart, const GridSpec& grid);

struct CliConfig {
  HarnessConfig harness;
  std::size_t eval_nu = 21;
  std::size_t eval_nv = 21;
  double eval_inset = 0.0;
  std::string out_dir = ".";
  bool json = false;
};

// Lines "key = value"; '#' starts a comment. Unknown keys and malformed
// values raise ParseError naming the line.
void apply_config(std::istream& in, CliConfig& cfg, const std::string& source = "config");
void load_config_file(const std::string& path, CliConfig& cfg);

// "WxH" -> (W, H); both >= 2.
std::pair<std::size_t, std::size_t> parse_grid(const std::string& text);
// "u0:u1,v0:v1"
Rect parse_range(const std::string& text);

}  // namespace iso3
