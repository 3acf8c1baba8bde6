#pragma once

#include "urlevi/engine.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace urlevi {

struct Descriptor {
  std::string type;           // Cartan type of the span, "T" when empty
  int twist_order_span = 1;   // order of w^-1 Fr on the span's roots
  int twist_order = 1;        // order of w^-1 Fr on all roots
  std::vector<long long> charpoly;  // of w^-1 Fr on the root lattice, leading coefficient first
  std::string str() const;
};

Descriptor describe(const Engine& e, const RootSet& span, int w);
std::vector<long long> characteristic_polynomial(const std::vector<Vec>& m);
std::string poly_string(const std::vector<long long>& c);

struct PairClass {
  Vec base;
  int w = 0;
  int orbit_size = 0;
  Descriptor descriptor;
};

// Pairs (base, w) with Fr(base) = w base as sets, up to
// (base, w) ~ (n base, Fr(n) w n^-1), n in W.
struct PairPartition {
  std::vector<Vec> bases;
  std::vector<std::pair<int, int>> pairs;  // (index into bases, w)
  Vec cls;
  std::vector<PairClass> classes;
  std::unordered_map<RootSet, int> base_index;

  int pair_index(const Vec& base, int w) const;
  // -1 when (base, w) is not an admissible pair
  int class_of(const Vec& base, int w) const;
};

PairPartition partition_pairs(const Engine& e, std::vector<Vec> bases);
// theta inside the simple roots
PairPartition enumerate_IG(const Engine& e);
// positive bases of quasi-closed subsystems at the spec's characteristic
PairPartition enumerate_IGprime(const Engine& e);
// classes of I'_G whose span is not parabolic
std::vector<PairClass> prime_minus_levi(const Engine& e, const PairPartition& prime);

std::vector<Vec> simple_subsets(const RootSystem& rs);

}  // namespace urlevi
