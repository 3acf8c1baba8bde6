#pragma once

#include "urlevi/root_system.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace urlevi {

using Perm = std::vector<std::uint8_t>;

// Elements are indexed in shortlex order of their minimal words, identity first.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  const RootSystem& rs() const { return *rs_; }
  int order() const { return static_cast<int>(perms_.size()); }
  const Perm& perm(int w) const { return perms_[w]; }
  int act(int w, int root) const { return perms_[w][root]; }
  RootSet act(int w, const RootSet& s) const;
  Vec act_coords(int w, const Vec& v) const;
  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int conj(int x, int w) const { return mul(mul(x, w), inv(x)); }  // x w x^-1
  int length(int w) const { return static_cast<int>(words_[w].size()); }
  const Vec& word(int w) const { return words_[w]; }
  int find(const Perm& p) const;
  int reflection(int root) const { return refl_[root]; }
  int simple_reflection(int i) const { return refl_[rs_->simple[i]]; }
  // columns are the images of the simple roots
  std::vector<Vec> matrix(int w) const;
  // action on the coroot lattice in coroot coordinates
  Vec coroot_act(int w, const Vec& t) const;

 private:
  const RootSystem* rs_;
  std::vector<Perm> perms_;
  std::vector<Vec> words_;
  Vec inv_;
  Vec refl_;
  std::uint64_t key_of(const Perm& p) const;
  // keyed by the images of the simple roots, one byte each (rank <= 8)
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<std::int32_t> table_;  // multiplication table for small groups
};

struct Subgroup {
  Vec elems;               // sorted
  std::vector<char> mask;  // indexed by element of W
  bool contains(int w) const { return mask[w] != 0; }
  int order() const { return static_cast<int>(elems.size()); }
};

Subgroup subgroup_from(const WeylGroup& W, const Vec& elems);
Subgroup closure(const WeylGroup& W, const Vec& gens);
Subgroup whole_group(const WeylGroup& W);
Subgroup reflection_subgroup(const WeylGroup& W, const Vec& roots);
Subgroup normalizer_of_subsystem(const WeylGroup& W, const RootSet& members);
Subgroup intersect(const WeylGroup& W, const Subgroup& a, const Subgroup& b);
bool is_subgroup(const WeylGroup& W, const Subgroup& h);
bool is_normal_in(const WeylGroup& W, const Subgroup& n, const Subgroup& g);
// a small generating set, found greedily
Vec generators_of(const WeylGroup& W, const Subgroup& h);
// |{a b : a in A, b in B}|
int product_set_size(const WeylGroup& W, const Subgroup& a, const Subgroup& b);

// Linear part of a diagram automorphism of the extended Dynkin diagram.
struct FrobeniusAction {
  Vec node_perm;            // on {0..l}, node 0 is the affine node
  Vec root_perm;            // linear part acting on roots
  std::vector<Vec> linear;  // columns are images of simple roots
  Vec shift;                // shift[i] = 1 iff node i+1 is sent to node 0
  Vec on_w;                 // Fr(w) = L w L^-1
  int order = 1;

  bool split() const;
  int act_root(int r) const { return root_perm[r]; }
  RootSet act(const RootSet& s) const;
  int act_w(int w) const { return on_w[w]; }
};

FrobeniusAction make_frobenius(const WeylGroup& W, const Vec& node_perm);
// gradient root index of extended node k
int node_gradient(const RootSystem& rs, int k);

// {w' in N_W(W_theta) : w^-1 Fr(w')^-1 w w' in W_theta}
Subgroup twisted_subgroup(const WeylGroup& W, const RootSet& phi_theta, int w,
                          const FrobeniusAction& fr);

// orbits of w -> Fr(n) w n^-1, each sorted, ordered by smallest element
std::vector<Vec> twisted_classes(const WeylGroup& W, const Subgroup& g, const FrobeniusAction& fr);

struct Parabolic {
  Subgroup group;
  bool fr_stable = false;
  bool proper = false;
};

// Conjugates x W_J x^-1 (x in W_F, J a subset of the local simple roots). A conjugate is
// Fr-stable when it fixes an Fr-stable facet of the local Coxeter complex, i.e. it has a
// presentation with Fr(J) = J and x^-1 Fr(x) in W_J.
std::vector<Parabolic> parabolic_subgroups(const WeylGroup& W, const Subgroup& wf,
                                           const Vec& local_simple, const FrobeniusAction& fr);

}  // namespace urlevi
