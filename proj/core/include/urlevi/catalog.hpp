#pragma once

#include "urlevi/root_system.hpp"

#include <string>

namespace urlevi {

struct UnknownPreset : Error {
  using Error::Error;
};

struct GroupSpec {
  std::string name;
  std::string cartan_label;
  Vec node_perm;  // empty means identity
  bool simply_connected = true;
  int residue_char = 0;  // 0: zero or a prime other than 2, 3
};

// Sp4, G2, SL3, SU3q, SL1D(n) n<=8, SLn n<=8, A1
GroupSpec preset(const std::string& name);
// key=value lines: name, cartan, node_perm (comma separated), char, simply_connected
GroupSpec load_config(const std::string& path);
GroupSpec parse_config(const std::string& text, const std::string& origin);
// "zero", "0", "generic", "p" -> 0; otherwise a prime
int parse_char(const std::string& tag);
std::string char_tag(int p);

}  // namespace urlevi
