#include "hyfac/design_file.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hyfac {

namespace {

using json = nlohmann::json;

std::vector<std::vector<Triple>> edges_by_color(const Design& d) {
  std::vector<std::vector<Triple>> out(static_cast<std::size_t>(d.params().k()));
  for (const auto& e : d.edges()) out[static_cast<std::size_t>(e.color)].push_back(e.vertices);
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

std::string quoted(VertexId v) { return "\"" + to_string(v) + "\""; }

int parse_positive(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 1 || s.front() == '0')
    throw ParseError("bad number in vertex label");
  return value;
}

template <class T>
T field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

} // namespace

VertexId parse_label(std::string_view label) {
  if (label.size() < 5 || label.substr(0, 2) != "x_") throw ParseError("bad vertex label");
  const auto rest = label.substr(2);
  const auto sep = rest.find('_');
  if (sep == std::string_view::npos || sep == 0 || sep + 1 == rest.size())
    throw ParseError("bad vertex label");
  return {parse_positive(rest.substr(0, sep)) - 1, parse_positive(rest.substr(sep + 1)) - 1};
}

std::string serialize(const Design& design) {
  const auto& p = design.params();
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": \"hyfac-design\",\n";
  os << "  \"formatVersion\": " << kDesignFormatVersion << ",\n";
  os << "  \"params\": {\"lambda\": " << p.lambda() << ", \"m\": " << p.m() << ", \"n\": " << p.n()
     << ", \"r\": [";
  for (int i = 0; i < p.k(); ++i) os << (i ? ", " : "") << p.r()[static_cast<std::size_t>(i)];
  os << "]},\n";

  std::vector<Vertex> verts(design.vertices().begin(), design.vertices().end());
  std::sort(verts.begin(), verts.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  os << "  \"vertices\": [";
  for (std::size_t i = 0; i < verts.size(); ++i)
    os << (i ? ",\n    " : "\n    ") << "{\"label\": " << quoted(verts[i].id) << ", \"g\": " << verts[i].g
       << "}";
  os << (verts.empty() ? "],\n" : "\n  ],\n");

  const auto classes = edges_by_color(design);
  os << "  \"factors\": [";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    os << (c ? ",\n    " : "\n    ") << "{\"color\": " << c + 1 << ", \"r\": " << p.r()[c] << ", \"edges\": [";
    for (std::size_t j = 0; j < classes[c].size(); ++j) {
      const auto& t = classes[c][j];
      os << (j ? ",\n      " : "\n      ") << "[" << quoted(t[0]) << ", " << quoted(t[1]) << ", "
         << quoted(t[2]) << "]";
    }
    os << (classes[c].empty() ? "]}" : "\n    ]}");
  }
  os << (classes.empty() ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

Design parse_design(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("not valid JSON: ") + e.what());
  }
  if (field<std::string>(doc, "format") != "hyfac-design") throw ParseError("unknown document format");
  if (const int v = field<int>(doc, "formatVersion"); v != kDesignFormatVersion)
    throw ParseError("unsupported formatVersion " + std::to_string(v));

  const json& jp = doc.contains("params") ? doc["params"] : json();
  std::optional<Params> params;
  try {
    params.emplace(field<Count>(jp, "lambda"), field<Count>(jp, "m"), field<Count>(jp, "n"),
                   field<std::vector<Count>>(jp, "r"));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid params: ") + e.what());
  }

  Design d(*params);
  try {
    const json& jv = doc.contains("vertices") ? doc["vertices"] : json();
    if (!jv.is_array()) throw ParseError("'vertices' must be an array");
    for (const auto& v : jv) d.add_vertex(parse_label(field<std::string>(v, "label")), field<Count>(v, "g"));

    const json& jf = doc.contains("factors") ? doc["factors"] : json();
    if (!jf.is_array()) throw ParseError("'factors' must be an array");
    std::set<int> seen;
    for (const auto& f : jf) {
      const int color = field<int>(f, "color");
      if (color < 1 || color > params->k()) throw ParseError("factor color out of range");
      if (!seen.insert(color).second) throw ParseError("factor color listed twice");
      if (field<Count>(f, "r") != params->r()[static_cast<std::size_t>(color - 1)])
        throw ParseError("factor r does not match params");
      const auto edges = field<json>(f, "edges");
      if (!edges.is_array()) throw ParseError("'edges' must be an array");
      for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 3) throw ParseError("edge must be a triple of labels");
        Triple t;
        for (std::size_t i = 0; i < 3; ++i) {
          if (!e[i].is_string()) throw ParseError("edge must be a triple of labels");
          t[i] = parse_label(e[i].get<std::string>());
        }
        d.add_edge(t, color - 1);
      }
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string("inconsistent design: ") + e.what());
  }
  return d;
}

bool same_design(const Design& a, const Design& b) {
  if (!(a.params() == b.params()) || a.order() != b.order()) return false;
  for (const auto& v : a.vertices())
    if (!b.has_vertex(v.id) || b.g(v.id) != v.g) return false;
  return edges_by_color(a) == edges_by_color(b);
}

std::string part_name(int p) {
  std::string name;
  for (int x = p + 1; x > 0; x = (x - 1) / 26) name.insert(name.begin(), static_cast<char>('A' + (x - 1) % 26));
  return name;
}

std::string schedule(const Design& design) {
  const auto& p = design.params();
  if (!p.uniform()) throw DomainError("schedule needs a uniform r (one meeting load per day)");
  if (design.edges().empty()) throw DomainError("design has no meetings to schedule");
  const auto classes = edges_by_color(design);
  std::ostringstream os;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c) os << "\n";
    for (const auto& t : classes[c]) {
      os << "Day " << c + 1 << ": {";
      for (std::size_t i = 0; i < 3; ++i)
        os << (i ? ", " : "") << part_name(t[i].part) << t[i].index + 1;
      os << "}\n";
    }
  }
  return os.str();
}

} // namespace hyfac
