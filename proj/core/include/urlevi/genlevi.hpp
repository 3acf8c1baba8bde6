#pragma once

#include "urlevi/tori.hpp"

#include <memory>

namespace urlevi {

class GenLeviClassifier {
 public:
  explicit GenLeviClassifier(const Engine& e);
  const TripleClassifier& triples() const { return *triples_; }
  const std::vector<TripleClass>& classes() const { return triples_->classes(); }
  bool generalized(int cls) const;
  // indices of classes whose span is not parabolic
  Vec extras() const;

  // some rational conjugate of class a sits inside class b
  bool contains(int a, int b) const;
  // elliptic members of a class, as (facet, pair) at facets of the closed alcove
  const std::vector<std::pair<int, int>>& members(int cls) const { return members_[cls]; }
  // all true (a, b), a != b
  std::vector<std::pair<int, int>> containment_edges() const;

 private:
  const Engine* e_;
  std::unique_ptr<TripleClassifier> triples_;
  std::vector<std::vector<std::pair<int, int>>> members_;
  std::vector<Vec> supersets_;  // by universe position: positions with Phi contained
};

}  // namespace urlevi
