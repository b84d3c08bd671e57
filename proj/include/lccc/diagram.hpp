#ifndef LCCC_DIAGRAM_HPP
#define LCCC_DIAGRAM_HPP

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "lccc/errors.hpp"
#include "lccc/finset.hpp"

namespace lccc {

struct DiagramError : Error {
  using Error::Error;
};

/// A named collection of finite sets and maps loaded from a JSON file
/// with top-level keys "sets" and "maps". Declaration order is kept so
/// reports are stable.
struct Diagram {
  std::vector<std::string> set_order;
  std::vector<std::string> map_order;
  std::map<std::string, FinSet> sets;
  std::map<std::string, FinMap> maps;

  const FinSet& set(const std::string& name) const {
    auto it = sets.find(name);
    if (it == sets.end())
      throw DiagramError("no set named '" + name + "' in the diagram");
    return it->second;
  }

  const FinMap& map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end())
      throw DiagramError("no map named '" + name + "' in the diagram");
    return it->second;
  }
};

inline Diagram parse_diagram(const std::string& text,
                             const std::string& origin = "<input>") {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DiagramError(origin + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("sets") || !doc["sets"].is_object())
    throw DiagramError(origin + ": expected a top-level \"sets\" object");
  Diagram d;
  for (const auto& [name, elems] : doc["sets"].items()) {
    if (!elems.is_array())
      throw DiagramError(origin + ": set '" + name +
                         "' must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& e : elems) {
      if (!e.is_string())
        throw DiagramError(origin + ": set '" + name +
                           "' contains a non-string label");
      labels.push_back(e.get<std::string>());
    }
    if (d.sets.count(name))
      throw DiagramError(origin + ": set '" + name + "' declared twice");
    try {
      d.sets.emplace(name, FinSet(name, std::move(labels)));
    } catch (const Error& e) {
      throw DiagramError(origin + ": " + e.what());
    }
    d.set_order.push_back(name);
  }
  if (doc.contains("maps")) {
    if (!doc["maps"].is_object())
      throw DiagramError(origin + ": \"maps\" must be an object");
    for (const auto& [name, spec] : doc["maps"].items()) {
      if (!spec.is_object() || !spec.contains("dom") ||
          !spec.contains("cod") || !spec.contains("table"))
        throw DiagramError(origin + ": map '" + name +
                           "' needs \"dom\", \"cod\" and \"table\"");
      std::string dom_name = spec["dom"].get<std::string>();
      std::string cod_name = spec["cod"].get<std::string>();
      if (!d.sets.count(dom_name))
        throw DiagramError(origin + ": map '" + name +
                           "' has undeclared domain '" + dom_name + "'");
      if (!d.sets.count(cod_name))
        throw DiagramError(origin + ": map '" + name +
                           "' has undeclared codomain '" + cod_name + "'");
      const FinSet& dom = d.sets.at(dom_name);
      const FinSet& cod = d.sets.at(cod_name);
      const auto& table = spec["table"];
      if (!table.is_object())
        throw DiagramError(origin + ": map '" + name +
                           "' table must be an object");
      std::vector<std::string> images;
      images.reserve(dom.size());
      for (const auto& x : dom.elements()) {
        if (!table.contains(x))
          throw DiagramError(origin + ": map '" + name +
                             "' is missing an entry for '" + x + "'");
        std::string y = table[x].get<std::string>();
        if (!cod.contains(y))
          throw DiagramError(origin + ": map '" + name + "' sends '" + x +
                             "' to '" + y + "', which is not in '" +
                             cod_name + "'");
        images.push_back(std::move(y));
      }
      for (const auto& [x, y] : table.items())
        if (!dom.contains(x))
          throw DiagramError(origin + ": map '" + name +
                             "' has an entry for '" + x +
                             "', which is not in '" + dom_name + "'");
      if (d.maps.count(name) || d.sets.count(name))
        throw DiagramError(origin + ": '" + name + "' declared twice");
      d.maps.emplace(name, FinMap(dom, cod, std::move(images)));
      d.map_order.push_back(name);
    }
  }
  return d;
}

inline Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DiagramError("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_diagram(text, path);
}

}  // namespace lccc

#endif  // LCCC_DIAGRAM_HPP
