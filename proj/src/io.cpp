#include "hypstab/io.hpp"

#include <cstdio>
#include <fstream>

namespace hypstab {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const Vec& v) {
  Json j = Json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("expected an array of numbers");
  Vec v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
  return v;
}

Json to_json(const PiecewiseConstantFn& u) {
  Json j;
  j["breakpoints"] = u.xs;
  j["values"] = Json::array();
  for (const Vec& v : u.values) j["values"].push_back(to_json(v));
  j["background"] = to_json(u.background);
  return j;
}

PiecewiseConstantFn pcw_from_json(const Json& j) {
  PiecewiseConstantFn u;
  u.background = vec_from_json(j.at("background"));
  if (j.contains("breakpoints")) u.xs = j.at("breakpoints").get<std::vector<double>>();
  if (j.contains("values"))
    for (const Json& v : j.at("values")) u.values.push_back(vec_from_json(v));
  if (!u.xs.empty() && u.xs.size() != u.values.size() + 1)
    throw ConfigError("step function needs one more breakpoint than values");
  for (size_t a = 0; a + 1 < u.xs.size(); ++a)
    if (!(u.xs[a] < u.xs[a + 1])) throw ConfigError("breakpoints must be strictly increasing");
  return u;
}

Json to_json(const BVFunction& u) {
  Json j;
  j["background"] = to_json(u.background);
  j["pieces"] = Json::array();
  for (const BVPiece& p : u.pieces)
    j["pieces"].push_back({{"a", p.a}, {"b", p.b}, {"value", to_json(p.value0)},
                           {"slope", to_json(p.slope)}});
  return j;
}

BVFunction bv_from_json(const Json& j) {
  BVFunction u;
  u.background = vec_from_json(j.at("background"));
  for (const Json& pj : j.at("pieces")) {
    BVPiece p;
    p.a = pj.at("a").get<double>();
    p.b = pj.at("b").get<double>();
    p.value0 = vec_from_json(pj.at("value"));
    p.slope = vec_from_json(pj.at("slope"));
    if (!(p.a < p.b)) throw ConfigError("piece needs a < b");
    if (!u.pieces.empty() && p.a < u.pieces.back().b)
      throw ConfigError("pieces must be sorted and disjoint");
    u.pieces.push_back(std::move(p));
  }
  return u;
}

namespace {
const char* wave_kind_name(WaveKind k) {
  switch (k) {
    case WaveKind::Shock: return "shock";
    case WaveKind::RarefactionPiece: return "rarefaction";
    case WaveKind::Contact: return "contact";
    case WaveKind::NonPhysical: return "nonphysical";
  }
  return "?";
}
}  // namespace

Json to_json(const Fan& fan) {
  Json j = Json::array();
  for (const Wave& w : fan.waves)
    j.push_back({{"family", w.family},
                 {"kind", wave_kind_name(w.kind)},
                 {"strength", w.strength},
                 {"speed", w.speed},
                 {"left", to_json(w.left)},
                 {"right", to_json(w.right)}});
  return j;
}

Json event_log_json(const FTTrajectory& traj) {
  Json j;
  j["eps"] = traj.eps;
  j["t_end"] = traj.t_end;
  j["events"] = Json::array();
  for (const FTEvent& e : traj.events)
    j["events"].push_back({{"t", e.t},
                           {"x", e.x},
                           {"simplified", e.simplified},
                           {"incoming", e.n_incoming},
                           {"outgoing", e.n_outgoing},
                           {"upsilon_before", e.upsilon_before},
                           {"upsilon_after", e.upsilon_after},
                           {"nonphysical_total", e.np_total}});
  return j;
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open for writing: " + path);
  for (size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
    out << "\n";
  }
}

void write_snapshot_csv(const std::string& path, const PiecewiseConstantFn& u) {
  const int n = int(u.background.size());
  std::vector<std::string> header{"x"};
  for (int i = 0; i < n; ++i) header.push_back("u" + std::to_string(i));
  std::vector<std::vector<double>> rows;
  for (size_t a = 0; a < u.xs.size(); ++a) {
    std::vector<double> row{u.xs[a]};
    const Vec v = (a < u.values.size()) ? u.values[a] : u.background;
    for (int i = 0; i < n; ++i) row.push_back(v[i]);
    rows.push_back(std::move(row));
  }
  write_csv(path, header, rows);
}

}  // namespace hypstab
