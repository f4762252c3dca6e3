#include "fusionring/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace fusionring {

namespace {

using Json = nlohmann::ordered_json;

Json coords(const Weight& w, int n) { return std::vector<int>(w.c.begin(), w.c.begin() + n); }

Json coeff(const Integer& c) {
  if (c >= std::numeric_limits<int64_t>::min() && c <= std::numeric_limits<int64_t>::max())
    return static_cast<int64_t>(c);
  return c.str();
}

Json character(const RootDatum& rd, const VirtualCharacter& x) {
  Json a = Json::array();
  for (const auto& [w, c] : canonical_terms(rd, x)) a.push_back({{"coeff", coeff(c)}, {"weight", coords(w, rd.n)}});
  return a;
}

std::string to_string(Provenance p) { return p == Provenance::Derived ? "derived" : "table"; }

std::string transform_name(AffineTransform t) {
  switch (t) {
    case AffineTransform::DiagramMap: return "diagram-map";
    case AffineTransform::Reflection: return "reflection";
    case AffineTransform::ShiftOnly: return "shift-only";
  }
  return "?";
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

std::string generators_json(const RootDatum& rd, const GeneratorSet& gs) {
  Json j;
  j["schema"] = "fusionring.generators/1";
  j["type"] = std::string(1, family_letter(rd.type.family));
  j["rank"] = rd.n;
  j["level"] = gs.level;
  j["source"] = gs.provenance == Provenance::Derived ? "derive" : "table";
  j["source_tag"] = gs.source_tag;
  j["golden"] = gs.golden;
  Json g = Json::array();
  for (const auto& x : gs.generators) g.push_back(character(rd, x));
  j["generators"] = g;
  return j.dump(2) + "\n";
}

std::string generators_text(const RootDatum& rd, const GeneratorSet& gs) {
  std::ostringstream os;
  os << "# " << rd.name() << " level " << gs.level << " " << to_string(gs.provenance) << " " << gs.source_tag
     << (gs.golden ? "" : " (experimental)") << "\n";
  for (std::size_t i = 0; i < gs.generators.size(); ++i)
    os << i + 1 << "\t" << to_string(rd, gs.generators[i]) << "\n";
  return os.str();
}

std::string steinberg_json(const RootDatum& rd, const SteinbergBasis& sb) {
  Json j;
  j["schema"] = "fusionring.steinberg/1";
  j["type"] = rd.name();
  Json s = Json::array();
  for (int i = 0; i < rd.n; ++i)
    if (sb.subset >> i & 1u) s.push_back(i + 1);
  j["subset"] = s;
  Json e = Json::array();
  for (const auto& x : sb.entries)
    e.push_back({{"word", word_to_string(x.word)},
                 {"bfs_level", x.bfs_level},
                 {"positive_weight", coords(x.positive_weight, rd.n)},
                 {"basis_weight", coords(x.basis_weight, rd.n)}});
  j["entries"] = e;
  return j.dump(2) + "\n";
}

std::string steinberg_text(const RootDatum& rd, const SteinbergBasis& sb) {
  std::ostringstream os;
  os << "# " << rd.name() << " subset {";
  bool first = true;
  for (int i = 0; i < rd.n; ++i)
    if (sb.subset >> i & 1u) {
      os << (first ? "" : ",") << i + 1;
      first = false;
    }
  os << "} size " << sb.entries.size() << "\n";
  for (const auto& x : sb.entries)
    os << x.bfs_level << "\t" << word_to_string(x.word) << "\t" << to_string(x.positive_weight, rd.n) << "\t"
       << to_string(x.basis_weight, rd.n) << "\n";
  return os.str();
}

std::string affine_steinberg_json(const RootDatum& rd, const AffineSteinbergBasis& ab) {
  Json j;
  j["schema"] = "fusionring.affine_steinberg/1";
  j["type"] = rd.name();
  j["level"] = ab.level;
  j["vertex"] = ab.vertex + 1;
  j["transform"] = transform_name(ab.transform);
  j["shift"] = coords(ab.shift, rd.n);
  j["edge_only"] = ab.edge_only;
  j["description"] = ab.description();
  Json e = Json::array(), v = Json::array();
  for (const auto& w : ab.ab_e) e.push_back(coords(w, rd.n));
  for (const auto& w : ab.ab_v) v.push_back(coords(w, rd.n));
  j["ab_e"] = e;
  j["ab_v"] = v;
  return j.dump(2) + "\n";
}

std::string affine_steinberg_text(const RootDatum& rd, const AffineSteinbergBasis& ab) {
  std::ostringstream os;
  os << "# " << rd.name() << " level " << ab.level << " vertex " << ab.vertex + 1 << " " << ab.description() << "\n";
  os << "# AB_e " << ab.ab_e.size() << ", AB_v " << ab.ab_v.size() << "\n";
  for (const auto& w : ab.ab_e) {
    const bool in_v = std::find(ab.ab_v.begin(), ab.ab_v.end(), w) != ab.ab_v.end();
    os << to_string(w, rd.n) << (in_v ? "\tv" : "") << "\n";
  }
  return os.str();
}

std::string fusion_table_json(const RootDatum& rd, int k, const std::vector<Weight>& alcove,
                              const std::vector<std::vector<std::vector<int64_t>>>& n) {
  Json j;
  j["schema"] = "fusionring.fusion_table/1";
  j["type"] = rd.name();
  j["level"] = k;
  Json a = Json::array();
  for (const auto& w : alcove) a.push_back(coords(w, rd.n));
  j["alcove"] = a;
  Json c = Json::array();
  for (std::size_t x = 0; x < alcove.size(); ++x)
    for (std::size_t y = 0; y < alcove.size(); ++y)
      for (std::size_t z = 0; z < alcove.size(); ++z)
        if (n[x][y][z] != 0) c.push_back({x, y, z, n[x][y][z]});
  j["coefficients"] = c;
  return j.dump() + "\n";
}

std::string fusion_table_tsv(const RootDatum& rd, const std::vector<Weight>& alcove,
                             const std::vector<std::vector<std::vector<int64_t>>>& n) {
  std::ostringstream os;
  os << "lambda\tmu\tnu\tN\n";
  for (std::size_t x = 0; x < alcove.size(); ++x)
    for (std::size_t y = 0; y < alcove.size(); ++y)
      for (std::size_t z = 0; z < alcove.size(); ++z)
        if (n[x][y][z] != 0)
          os << to_string(alcove[x], rd.n) << "\t" << to_string(alcove[y], rd.n) << "\t"
             << to_string(alcove[z], rd.n) << "\t" << n[x][y][z] << "\n";
  return os.str();
}

std::string reports_json(const std::vector<VerifyReport>& reports, bool timing) {
  Json j;
  j["schema"] = "fusionring.verify/1";
  Json a = Json::array();
  for (const auto& r : reports) {
    Json x;
    x["type"] = r.type;
    x["level"] = r.level;
    x["check"] = r.check;
    x["status"] = to_string(r.status);
    Json d = Json::object();
    for (const auto& [k, v] : r.details) d[k] = v;
    x["details"] = d;
    x["counterexamples"] = r.counterexamples;
    x["reproduce"] = r.reproduce;
    if (timing) x["wall_seconds"] = r.wall_seconds;
    a.push_back(x);
  }
  j["reports"] = a;
  return j.dump(2) + "\n";
}

std::string reports_text(const std::vector<VerifyReport>& reports, bool timing) {
  std::ostringstream os;
  for (const auto& r : reports) {
    os << to_string(r.status) << "\t" << r.type << "\tk=" << r.level << "\t" << r.check;
    if (timing) os << "\t" << fmt_seconds(r.wall_seconds) << "s";
    os << "\n";
    for (const auto& [k, v] : r.details) os << "  " << k << ": " << v << "\n";
    for (const auto& c : r.counterexamples) os << "  counterexample: " << c << "\n";
    if (r.status == Status::Fail) os << "  reproduce: " << r.reproduce << "\n";
  }
  return os.str();
}

}  // namespace fusionring
