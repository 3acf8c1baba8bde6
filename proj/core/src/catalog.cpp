#include "urlevi/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace urlevi {

namespace {

GroupSpec split(const std::string& name, const std::string& label) {
  GroupSpec g;
  g.name = name;
  g.cartan_label = label;
  return g;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupSpec preset(const std::string& name) {
  if (name == "Sp4") return split(name, "C2");
  if (name == "G2") return split(name, "G2");
  if (name == "A1") return split(name, "A1");
  if (name == "SU3q") {
    GroupSpec g = split(name, "A2");
    g.node_perm = {0, 2, 1};
    return g;
  }
  std::smatch m;
  static const std::regex sl1d(R"(SL1D\(?([0-9]+)\)?)");
  static const std::regex sln(R"(SL([0-9]+))");
  if (std::regex_match(name, m, sl1d)) {
    const int n = std::stoi(m[1]);
    if (n < 2 || n > 8) throw UnknownPreset("unknown preset: " + name);
    GroupSpec g = split("SL1D(" + std::to_string(n) + ")", "A" + std::to_string(n - 1));
    g.node_perm.resize(n);
    for (int i = 0; i < n; ++i) g.node_perm[i] = (i + 1) % n;
    return g;
  }
  if (std::regex_match(name, m, sln)) {
    const int n = std::stoi(m[1]);
    if (n < 2 || n > 8) throw UnknownPreset("unknown preset: " + name);
    return split(name, "A" + std::to_string(n - 1));
  }
  throw UnknownPreset("unknown preset: " + name);
}

int parse_char(const std::string& tag) {
  if (tag == "zero" || tag == "0" || tag == "generic" || tag == "p") return 0;
  for (char c : tag)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("bad characteristic: " + tag);
  const int p = std::stoi(tag);
  if (p < 2) throw Error("bad characteristic: " + tag);
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error("characteristic must be prime: " + tag);
  return p;
}

std::string char_tag(int p) { return p == 0 ? "0" : std::to_string(p); }

GroupSpec parse_config(const std::string& text, const std::string& origin) {
  GroupSpec g;
  g.name = origin;
  std::istringstream in(text);
  std::string line;
  bool have_cartan = false;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(origin + ": expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "name") g.name = val;
    else if (key == "cartan") {
      g.cartan_label = normalize_label(val);
      have_cartan = true;
    } else if (key == "node_perm") {
      g.node_perm.clear();
      std::stringstream ss(val);
      std::string item;
      while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
          throw Error(origin + ": bad node_perm entry '" + item + "'");
        g.node_perm.push_back(std::stoi(item));
      }
    } else if (key == "char") g.residue_char = parse_char(val);
    else if (key == "simply_connected") {
      if (val != "true" && val != "1" && val != "false" && val != "0")
        throw Error(origin + ": simply_connected takes true or false");
      g.simply_connected = val == "true" || val == "1";
    }
    else throw Error(origin + ": unknown key '" + key + "'");
  }
  if (!have_cartan) throw Error(origin + ": missing cartan");
  return g;
}

GroupSpec load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnknownPreset("cannot read group config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

}  // namespace urlevi
