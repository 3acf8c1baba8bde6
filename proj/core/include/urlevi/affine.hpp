#pragma once

#include "urlevi/linalg.hpp"
#include "urlevi/weyl.hpp"

#include <optional>
#include <vector>

namespace urlevi {

// gradient + level, the affine function x -> gradient(x) + level
struct AffineFunctional {
  Vec gradient;
  int level = 0;
  bool operator==(const AffineFunctional&) const = default;
};

// x -> w x + t, t in coroot coordinates
struct AffineElement {
  int linear = 0;
  Vec translation;
};

AffineElement compose(const WeylGroup& W, const AffineElement& a, const AffineElement& b);
AffineFunctional act(const WeylGroup& W, const AffineElement& g, const AffineFunctional& f);
AffineFunctional act(const RootSystem& rs, const FrobeniusAction& fr, const AffineFunctional& f);
AffineFunctional affine_simple_root(const RootSystem& rs, int node);

struct Facet {
  int id = 0;
  Vec nodes;           // vanishing affine simple roots, sorted
  QVec barycenter;     // values of the simple roots at the barycenter
  int dim = 0;         // rank - |nodes|
  int fr_fixed_dim = 0;
  RootSet phi;         // gradients of affine roots vanishing on the facet
  Vec local_simple;    // gradients of the nodes
  Subgroup wf;
  Vec wf_gens;
  Echelon ann;         // affine functions vanishing on the Fr-fixed span
  QMat ann_perp;
  int cls = -1;        // facet equivalence class
  Subgroup span_stab;  // linear parts of W^aff elements stabilizing the Fr-fixed span
  std::vector<char> in_stable_parabolic;  // w lies in W_J, J proper and Fr-stable
  std::vector<Vec> stable_proper_j;       // those J, as node subsets
};

class Apartment {
 public:
  Apartment(const WeylGroup& W, const FrobeniusAction& fr, int radius);

  const WeylGroup& W() const { return *W_; }
  const FrobeniusAction& fr() const { return *fr_; }
  int radius() const { return radius_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const Facet& facet(int i) const { return facets_[i]; }
  int facet_count() const { return static_cast<int>(facets_.size()); }
  int find_facet(const Vec& nodes) const;
  std::vector<QVec> alcove_vertices() const;

  // linear parts of Fr-fixed affine elements n (|t_i| <= radius) with n A(F) = A(G)
  const Vec& transport(int f, int g) const { return transport_[f][g]; }
  std::vector<Vec> facet_classes() const;
  int class_count() const { return nclasses_; }
  bool is_class_rep(int f) const;
  // F lies in the closure of G
  bool in_closure(int f, int g) const;

  std::optional<AffineElement> find_element(int w, const Facet& from, const Facet& to,
                                            bool fr_fixed) const;
  bool maps_span(const AffineElement& g, const Facet& from, const Facet& to) const;
  bool fr_fixed(const AffineElement& g) const;

 private:
  void build_facets();
  void build_transport();

  const WeylGroup* W_;
  const FrobeniusAction* fr_;
  int radius_;
  std::vector<Facet> facets_;
  std::vector<std::vector<Vec>> transport_;
  int nclasses_ = 0;
};

Subgroup span_stabilizer_linear_parts(const Apartment& apt, const Facet& f);

}  // namespace urlevi
