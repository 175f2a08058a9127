#pragma once

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <fstream>
#include <iterator>
#include <map>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace probe
{

/// One SVG element with its attributes, in document order.
struct Element
{
  std::string tag;
  std::map<std::string, std::string> attributes;
};

/// Throws boost::property_tree::xml_parser_error on malformed XML.
inline std::vector<Element> svg_elements(std::string const &text)
{
  namespace pt = boost::property_tree;
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);
  std::vector<Element> out;
  for (auto const &[tag, node] : tree.get_child("svg")) {
    if (tag == "<xmlattr>")
      continue;
    Element e{tag, {}};
    if (auto attrs = node.get_child_optional("<xmlattr>")) {
      for (auto const &[key, value] : *attrs)
        e.attributes[key] = value.data();
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<Element> with_class(std::vector<Element> const &all, std::string const &cls)
{
  std::vector<Element> out;
  for (auto const &e : all) {
    auto it = e.attributes.find("class");
    if (it != e.attributes.end() && it->second == cls)
      out.push_back(e);
  }
  return out;
}

inline std::set<std::string> arc_colors(std::string const &svg)
{
  std::set<std::string> colors;
  for (auto const &e : with_class(svg_elements(svg), "arc"))
    colors.insert(e.attributes.at("stroke"));
  return colors;
}

/// Nodes and edges of an undirected DOT graph as written by hasse_dot.
struct DotGraph
{
  std::map<std::string, std::string> labels;
  std::map<std::string, int> ranks;
  std::vector<std::pair<std::string, std::string>> edges;
};

inline DotGraph parse_dot(std::string const &text)
{
  static std::regex const node(R"re(^\s*(v\d+) \[label="([^"]*)", rank=(\d+)\];\s*$)re");
  static std::regex const edge(R"re(^\s*(v\d+) -- (v\d+);\s*$)re");
  DotGraph g;
  std::istringstream in(text);
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, node)) {
      g.labels[m[1]] = m[2];
      g.ranks[m[1]] = std::stoi(m[3]);
    } else if (std::regex_match(line, m, edge)) {
      g.edges.emplace_back(m[1], m[2]);
    }
  }
  return g;
}

inline std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace probe
