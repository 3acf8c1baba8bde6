#pragma once

#include <bitset>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace urlevi {

constexpr int kMaxRoots = 128;
using RootSet = std::bitset<kMaxRoots>;
using Vec = std::vector<int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Roots are integer vectors in simple-root coordinates, ordered by height and then
// by descending coordinates, so alpha_1 < alpha_2 < ... among the simple roots.
struct RootSystem {
  std::string label;  // "A3", "C2", "G2"
  char family = 'A';
  int rank = 0;
  std::vector<Vec> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>
  std::vector<int> d;       // (alpha_i, alpha_i) = 2 d_i
  std::vector<Vec> roots;
  int positive_root_count = 0;
  int highest_root = -1;
  Vec marks;   // coefficients of the highest root
  Vec simple;  // root index of alpha_i
  Vec neg;
  Vec height;
  std::vector<Vec> refl;  // refl[s][r] = index of s_{root s}(root r)
  std::map<Vec, int> lookup;

  int size() const { return static_cast<int>(roots.size()); }
  int index_of(const Vec& v) const;
  bool positive(int r) const { return height[r] > 0; }
  int inner(const Vec& x, const Vec& y) const;
  int norm(int r) const { return inner(roots[r], roots[r]); }
  bool is_long(int r) const;
  bool simply_laced() const;
  int pair(int r, int s) const;  // <root r, root s^vee>
  int coroot_pair(const Vec& gamma, int j) const;  // <gamma, alpha_j^vee>
  int reflect(int s, int r) const { return refl[s][r]; }
};

RootSystem build_root_system(const std::string& label);
std::string normalize_label(const std::string& label);

RootSet to_set(const Vec& idx);
Vec to_list(const RootSet& s);
bool set_less(const RootSet& a, const RootSet& b);

// Roots reachable from the base by the reflections it generates.
RootSet span_of_base(const RootSystem& rs, const Vec& base);
bool is_symmetric(const RootSystem& rs, const RootSet& members);
bool is_closed(const RootSystem& rs, const RootSet& members);
// Indecomposable elements of members among the positive roots.
Vec base_of_subsystem(const RootSystem& rs, const RootSet& members);
// e.g. "A1s", "A1sxA1l", "G2", "T" for the empty subsystem
std::string subsystem_type(const RootSystem& rs, const Vec& base);

}  // namespace urlevi
