#pragma once

#include "urlevi/root_system.hpp"
#include "urlevi/weyl.hpp"

#include <unordered_map>
#include <vector>

namespace urlevi {

struct Subsystem {
  RootSet members;
  Vec base;  // positive base
  std::string type;
  bool closed = true;
  bool parabolic = false;
  std::vector<int> quasi_chars;  // characteristics where a non-closed set is quasi-closed
  int rank() const { return static_cast<int>(base.size()); }
};

class SubsystemTable {
 public:
  explicit SubsystemTable(const RootSystem& rs) : rs_(&rs) {}
  int add(const RootSet& members);
  int find(const RootSet& members) const;
  const Subsystem& operator[](int i) const { return items_[i]; }
  Subsystem& at(int i) { return items_[i]; }
  int size() const { return static_cast<int>(items_.size()); }

 private:
  const RootSystem* rs_;
  std::vector<Subsystem> items_;
  std::unordered_map<RootSet, int> index_;
};

// all bases w(rho), rho a subset of the simple roots, deduplicated as sets
std::vector<Vec> enumerate_theta(const WeylGroup& W);
// the distinct subsystems Phi_theta for theta in Theta, ordered by rank then base
std::vector<RootSet> parabolic_subsystems(const WeylGroup& W);

struct QuasiClosed {
  RootSet members;
  bool closed = true;
  std::vector<int> chars;  // empty when closed
};

// char_p = 0 stands for characteristic zero or any prime other than 2 and 3
std::vector<QuasiClosed> enumerate_quasi_closed(const RootSystem& rs, int char_p);

void sort_subsystems(const RootSystem& rs, std::vector<RootSet>& sets);

}  // namespace urlevi
