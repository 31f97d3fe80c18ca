#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "gkm/dsl.hpp"
#include "gkm/errors.hpp"

namespace gkm::dsl {

namespace {

using Json = nlohmann::ordered_json;

SourceSpan lineColumnAt(std::string_view text, std::size_t byte) {
  SourceSpan at{1, 1};
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++at.line;
      at.column = 1;
    } else {
      ++at.column;
    }
  }
  return at;
}

Json parseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto at = lineColumnAt(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string message = e.what();
    if (const auto p = message.find("parse error"); p != std::string::npos) message = message.substr(p);
    throw ParseError(at.line, at.column, message);
  }
}

[[noreturn]] void schemaError(const std::string& message) { throw ParseError(1, 1, message); }

const Json& member(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) schemaError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string stringAt(const Json& j, const std::string& where) {
  if (!j.is_string()) schemaError(where + ": expected a string");
  return j.get<std::string>();
}

Rational rationalAt(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  const std::string s = stringAt(j, where);
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    schemaError(where + ": '" + s + "' is not a rational");
  }
}

std::vector<Rational> rationalList(const Json& j, std::size_t count, const std::string& where) {
  if (!j.is_array() || j.size() != count) schemaError(where + ": expected " + std::to_string(count) + " rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rationalAt(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Json rationalArray(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(q.str());
  return out;
}

std::string dotQuote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string emitJson(const MomentGraph& g) {
  Json out;
  out["format"] = 1;
  out["rank"] = g.rank();
  out["vertices"] = Json::array();
  for (const auto& v : g.vertices()) {
    Json jv;
    jv["name"] = v.name;
    if (v.position) jv["pos"] = rationalArray(*v.position);
    out["vertices"].push_back(std::move(jv));
  }
  out["edges"] = Json::array();
  for (const auto& e : g.edges()) {
    Json je;
    je["south"] = e.south;
    je["north"] = e.north;
    je["direction"] = rationalArray(e.direction.coefficients());
    out["edges"].push_back(std::move(je));
  }
  if (g.xi()) out["xi"] = rationalArray(*g.xi());
  return out.dump(2) + "\n";
}

MomentGraph parseGraphJson(std::string_view text) {
  const Json doc = parseJson(text);
  if (!doc.is_object()) schemaError("graph JSON must be an object");
  if (doc.contains("format") && doc["format"] != 1) schemaError("unsupported format (expected 1)");
  const Json& rank = member(doc, "rank", "graph");
  if (!rank.is_number_integer() || rank.get<long>() < 1) schemaError("rank must be a positive integer");
  const auto k = static_cast<std::size_t>(rank.get<long>());
  MomentGraph g(k);

  const Json& vertices = member(doc, "vertices", "graph");
  if (!vertices.is_array()) schemaError("vertices must be an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "vertices[" + std::to_string(i) + "]";
    std::string name = stringAt(member(vertices[i], "name", where), where + ".name");
    std::optional<std::vector<Rational>> pos;
    if (vertices[i].contains("pos")) pos = rationalList(vertices[i]["pos"], k, where + ".pos");
    g.addVertex(std::move(name), std::move(pos));
  }

  const Json& edges = member(doc, "edges", "graph");
  if (!edges.is_array()) schemaError("edges must be an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    std::string south = stringAt(member(edges[i], "south", where), where + ".south");
    std::string north = stringAt(member(edges[i], "north", where), where + ".north");
    auto coeffs = rationalList(member(edges[i], "direction", where), k, where + ".direction");
    if (std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q.isZero(); })) {
      schemaError(where + ".direction: must be nonzero");
    }
    if (south == north) throw ValidationError(kCheckAcyclic, "self-loop " + south + "->" + north + " (" + where + ")");
    g.addEdge(std::move(south), std::move(north), LinearForm(std::move(coeffs)));
  }
  if (doc.contains("xi")) g.setXi(rationalList(doc["xi"], k, "xi"));
  requireValid(g);
  return g;
}

std::string emitDot(const MomentGraph& g) {
  std::string out = "digraph G {\n";
  for (const auto& v : g.vertices()) {
    out += "  " + dotQuote(v.name) + " [label=" + dotQuote(v.name);
    if (v.position) {
      const auto& p = *v.position;
      const double x = p[0].toDouble();
      const double y = p.size() > 1 ? p[1].toDouble() : 0.0;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6g,%.6g!", x, y);
      out += ", pos=" + dotQuote(buf);
    }
    out += "];\n";
  }
  for (const auto& e : g.edges()) {
    out += "  " + dotQuote(e.south) + " -> " + dotQuote(e.north) + " [label=" + dotQuote(e.direction.str()) + "];\n";
  }
  return out + "}\n";
}

GkmClass parseClass(std::string_view text, const MomentGraph& g) {
  const Json doc = parseJson(text);
  if (!doc.is_object()) schemaError("class file must be an object");
  const Json& values = member(doc, "values", "class");
  if (!values.is_object()) schemaError("\"values\" must be an object");

  std::optional<int> declared;
  if (doc.contains("degree")) {
    if (!doc["degree"].is_number_integer() || doc["degree"].get<long>() < 0) {
      schemaError("\"degree\" must be a nonnegative integer");
    }
    declared = static_cast<int>(doc["degree"].get<long>());
  }

  std::vector<std::pair<std::string, Polynomial>> parsed;
  for (const auto& [name, value] : values.items()) {
    if (!g.indexOf(name)) schemaError("unknown vertex '" + name + "'");
    const std::string textValue = stringAt(value, "values." + name);
    Polynomial p(g.rank());
    try {
      p = parsePolynomial(textValue, g.rank());
    } catch (const ParseError& e) {
      schemaError("values." + name + ": " + e.what());
    }
    if (!p.isZero()) {
      if (!p.isHomogeneous()) schemaError("values." + name + ": '" + textValue + "' is not homogeneous");
      const int d = *p.degree();
      if (declared && *declared != d) {
        schemaError("values." + name + ": degree " + std::to_string(d) + " differs from declared degree " +
                    std::to_string(*declared));
      }
      if (!declared) declared = d;
    }
    parsed.emplace_back(name, std::move(p));
  }

  GkmClass c(g.rank(), declared.value_or(0));
  for (auto& [name, p] : parsed) c.set(name, std::move(p));
  return c;
}

std::string emitClassJson(const MomentGraph& g, const GkmClass& c) {
  Json out;
  out["degree"] = c.degree();
  out["values"] = Json::object();
  for (const auto& v : g.vertices()) out["values"][v.name] = c.at(v.name).str();
  return out.dump(2) + "\n";
}

}  // namespace gkm::dsl
