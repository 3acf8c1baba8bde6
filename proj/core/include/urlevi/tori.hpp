#pragma once

#include "urlevi/engine.hpp"

#include <unordered_map>
#include <vector>

namespace urlevi {

// Pairs (subsystem, w) at one facet: w in W_F and Fr(Phi) = w Phi.
struct FacetPairs {
  int facet = 0;
  std::vector<std::pair<int, int>> pairs;  // (position in the universe, w), sorted
  Vec cls;                                 // F-equivalence class of each pair
  int nclasses = 0;
  std::vector<char> class_elliptic;

  int find(int pos, int w) const;
  bool elliptic(int pair) const { return class_elliptic[cls[pair]] != 0; }
};

struct TripleClass {
  int facet = 0;
  int sub = 0;  // subsystem id in the engine's table
  int w = 0;
  int orbit_size = 0;  // pairs at the facet in the class
};

// Triples (F, Phi, w) with Phi drawn from a W-stable universe of subsystems.
class TripleClassifier {
 public:
  TripleClassifier(const Engine& e, Vec universe);

  const Engine& engine() const { return *e_; }
  const Vec& universe() const { return universe_; }
  int position(int sub) const;  // -1 if outside the universe
  int image(int w, int pos) const;
  int fr_image(int pos) const { return fr_image_[pos]; }

  const FacetPairs& at(int facet) const { return facet_pairs_[facet]; }
  // generators of W_F and of W_F meet W_Phi
  const Vec& facet_gens(int facet) const { return facet_gens_[facet]; }
  Vec intersection_gens(int facet, int pos) const;

  // elliptic classes, one per class of the whole apartment, at representative facets
  const std::vector<TripleClass>& classes() const { return classes_; }
  // class of an elliptic triple at any facet of the closed alcove; -1 if not elliptic
  int class_of(int facet, int sub, int w) const;

  // all triples at all facets, blocks of the global relation
  int node(int facet, int pair) const { return offset_[facet] + pair; }
  int node_count() const { return offset_.back(); }
  std::pair<int, int> triple_of(int node) const;  // (facet, pair)
  int global_block(int node) const { return global_[node]; }
  const Vec& block_members(int block) const { return blocks_[block]; }
  int block_class(int block) const { return block_class_[block]; }
  // group used at a representative facet: N_{W^Fr}(W_F) W_F
  const Subgroup& extended_group(int facet) const { return extended_[facet]; }

 private:
  void build_facet(int f);
  void build_classes();
  void build_global();

  const Engine* e_;
  Vec universe_;
  std::unordered_map<int, int> pos_of_;
  Vec fr_image_;
  std::vector<FacetPairs> facet_pairs_;
  std::vector<Vec> facet_gens_;
  std::vector<Subgroup> extended_;
  std::vector<TripleClass> classes_;
  Vec offset_;
  Vec global_;
  std::vector<Vec> blocks_;
  Vec block_class_;
};

// no nonzero vector of span(Phi_F) is fixed by w Fr
bool elliptic_by_fixed_vectors(const Engine& e, int facet, int w);

// classes with empty subsystem
std::vector<TripleClass> maximal_tori(const TripleClassifier& c);

}  // namespace urlevi
