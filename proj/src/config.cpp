#include "bgk/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <map>
#include <sstream>

namespace bgk {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Malformed {
  std::string what;
};

double to_double(std::string_view s) {
  double x = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw Malformed{"expected a number, got '" + std::string(s) + "'"};
  return x;
}

long to_long(std::string_view s) {
  long x = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), x);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw Malformed{"expected an integer, got '" + std::string(s) + "'"};
  return x;
}

int to_int(std::string_view s) {
  const long x = to_long(s);
  if (x < -2147483647L || x > 2147483647L) throw Malformed{"integer out of range"};
  return static_cast<int>(x);
}

bool to_bool(std::string_view s) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw Malformed{"expected true or false, got '" + std::string(s) + "'"};
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

Scheme to_scheme(std::string_view s) {
  try {
    return parse_scheme(s);
  } catch (const std::invalid_argument& e) {
    throw Malformed{e.what()};
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Malformed{message};
}

using Setter = std::function<void(RunConfig&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"scheme", [](RunConfig& c, std::string_view v) { c.scheme = to_scheme(v); }},
      {"cells",
       [](RunConfig& c, std::string_view v) {
         c.cells = to_int(v);
         require(c.cells >= 2, "cells must be at least 2");
       }},
      {"length",
       [](RunConfig& c, std::string_view v) {
         c.length = to_double(v);
         require(c.length > 0, "length must be positive");
       }},
      {"knudsen",
       [](RunConfig& c, std::string_view v) {
         c.knudsen = to_double(v);
         require(c.knudsen > 0, "knudsen must be positive");
       }},
      {"alpha",
       [](RunConfig& c, std::string_view v) {
         c.alpha = to_double(v);
         require(c.alpha >= 0.5, "alpha >= 1/2 required");
         require(c.alpha <= 1.0, "alpha <= 1 required");
       }},
      {"cfl",
       [](RunConfig& c, std::string_view v) {
         c.cfl = to_double(v);
         require(c.cfl > 0 && c.cfl <= 1, "cfl must lie in (0, 1]");
       }},
      {"tolerance",
       [](RunConfig& c, std::string_view v) {
         c.tolerance = to_double(v);
         require(c.tolerance > 0, "tolerance must be positive");
       }},
      {"max_steps",
       [](RunConfig& c, std::string_view v) {
         c.max_steps = to_long(v);
         require(c.max_steps >= 1, "max_steps must be at least 1");
       }},
      {"progress_every",
       [](RunConfig& c, std::string_view v) {
         c.progress_every = to_long(v);
         require(c.progress_every >= 0, "progress_every must be non-negative");
       }},
      {"output",
       [](RunConfig& c, std::string_view v) {
         require(!v.empty(), "output path is empty");
         c.output = std::string(v);
       }},
      {"velocity.count",
       [](RunConfig& c, std::string_view v) {
         c.velocities = to_int(v);
         require(c.velocities >= 4, "velocity.count must be at least 4");
       }},
      {"velocity.min", [](RunConfig& c, std::string_view v) { c.vmin = to_double(v); }},
      {"velocity.max", [](RunConfig& c, std::string_view v) { c.vmax = to_double(v); }},
      {"gas.mass", [](RunConfig& c, std::string_view v) { c.gas.m = to_double(v); }},
      {"gas.R", [](RunConfig& c, std::string_view v) { c.gas.R = to_double(v); }},
      {"gas.mu0", [](RunConfig& c, std::string_view v) { c.gas.mu0 = to_double(v); }},
      {"gas.T0", [](RunConfig& c, std::string_view v) { c.gas.T0 = to_double(v); }},
      {"gas.omega", [](RunConfig& c, std::string_view v) { c.gas.omega_visc = to_double(v); }},
      {"gas.alpha", [](RunConfig& c, std::string_view v) { c.gas.alpha_bird = to_double(v); }},
      {"gas.kb", [](RunConfig& c, std::string_view v) { c.gas.kb = to_double(v); }},
      {"wall.left.T",
       [](RunConfig& c, std::string_view v) {
         c.left.Tw = to_double(v);
         require(c.left.Tw > 0, "wall temperature must be positive");
       }},
      {"wall.left.u", [](RunConfig& c, std::string_view v) { c.left.uw = to_double(v); }},
      {"wall.right.T",
       [](RunConfig& c, std::string_view v) {
         c.right.Tw = to_double(v);
         require(c.right.Tw > 0, "wall temperature must be positive");
       }},
      {"wall.right.u", [](RunConfig& c, std::string_view v) { c.right.uw = to_double(v); }},
      {"equilibrium.conservative",
       [](RunConfig& c, std::string_view v) { c.conservative = to_bool(v); }},
      {"equilibrium.fallback",
       [](RunConfig& c, std::string_view v) { c.equilibrium_fallback = to_bool(v); }},
      {"collisionless", [](RunConfig& c, std::string_view v) { c.collisionless = to_bool(v); }},
      {"periodic", [](RunConfig& c, std::string_view v) { c.periodic = to_bool(v); }},
      {"study.schemes",
       [](RunConfig& c, std::string_view v) {
         c.study_schemes.clear();
         for (auto item : split_list(v)) c.study_schemes.push_back(to_scheme(item));
       }},
      {"study.meshes",
       [](RunConfig& c, std::string_view v) {
         c.study_meshes.clear();
         for (auto item : split_list(v)) {
           c.study_meshes.push_back(to_int(item));
           require(c.study_meshes.back() >= 2, "study meshes need at least 2 cells");
         }
         require(c.study_meshes.size() >= 3, "study.meshes needs at least 3 levels");
       }},
      {"study.reference",
       [](RunConfig& c, std::string_view v) { c.study_reference = to_int(v); }},
      {"study.sequencing",
       [](RunConfig& c, std::string_view v) { c.study_sequencing = to_bool(v); }},
      {"study.errors", [](RunConfig& c, std::string_view v) { c.study_errors = std::string(v); }},
  };
  return table;
}

}  // namespace

namespace {

using LineOf = std::function<int(std::initializer_list<std::string_view>)>;

// Cross-field checks; errors point at the last line that set one of the
// keys involved.
void check(const RunConfig& c, const LineOf& line_of) {
  try {
    c.gas.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(line_of({"gas.mass", "gas.R", "gas.mu0", "gas.T0", "gas.omega", "gas.alpha",
                               "gas.kb"}),
                      e.what());
  }
  try {
    c.left.validate();
    c.right.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(line_of({"wall.left.T", "wall.left.u", "wall.right.T", "wall.right.u"}),
                      e.what());
  }
  if (!(c.vmin < 0 && c.vmax > 0))
    throw ConfigError(line_of({"velocity.min", "velocity.max"}),
                      "the velocity interval must contain both signs");
  if (c.left.normal != 1 || c.right.normal != -1)
    throw ConfigError(0, "wall normals must point into the gas");
  for (int m : c.study_meshes)
    if (c.study_reference % m != 0 || c.study_reference == m)
      throw ConfigError(line_of({"study.meshes", "study.reference"}),
                        "study.reference (" + std::to_string(c.study_reference) +
                            ") must be a proper multiple of every study mesh (" +
                            std::to_string(m) + ")");
}

}  // namespace

void RunConfig::validate() const {
  check(*this, [](std::initializer_list<std::string_view>) { return 0; });
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::map<std::string, int, std::less<>> seen;
  int line_no = 0;
  for (std::size_t pos = 0; pos <= text.size();) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(line_no, "expected 'key = value', got '" + std::string(line) + "'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
    if (const auto prev = seen.find(key); prev != seen.end())
      throw ConfigError(line_no, "duplicate key '" + std::string(key) + "' (first set on line " +
                                     std::to_string(prev->second) + ")");
    if (value.empty()) throw ConfigError(line_no, "missing value for '" + std::string(key) + "'");
    try {
      it->second(cfg, value);
    } catch (const Malformed& m) {
      // Messages that already start with the key are not prefixed again.
      if (m.what.starts_with(key)) throw ConfigError(line_no, m.what);
      throw ConfigError(line_no, std::string(key) + ": " + m.what);
    }
    seen.emplace(std::string(key), line_no);
  }
  check(cfg, [&seen](std::initializer_list<std::string_view> keys) {
    int line = 0;
    for (auto k : keys)
      if (const auto it = seen.find(k); it != seen.end()) line = std::max(line, it->second);
    return line;
  });
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "': " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace bgk
