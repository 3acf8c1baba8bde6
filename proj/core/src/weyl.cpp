#include "urlevi/weyl.hpp"

#include "urlevi/union_find.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace urlevi {

namespace {

constexpr int kTableLimit = 1500;

}  // namespace

std::uint64_t WeylGroup::key_of(const Perm& p) const {
  std::uint64_t k = 0;
  for (int x : rs_->simple) k = k << 8 | p[x];
  return k;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs) {
  const int n = rs.size();
  Perm id(n);
  for (int r = 0; r < n; ++r) id[r] = static_cast<std::uint8_t>(r);
  perms_.push_back(id);
  words_.push_back({});
  index_[key_of(id)] = 0;
  for (size_t head = 0; head < perms_.size(); ++head) {
    for (int i = 0; i < rs.rank; ++i) {
      const Vec& s = rs.refl[rs.simple[i]];
      Perm p(n);
      for (int r = 0; r < n; ++r) p[r] = perms_[head][s[r]];
      const std::uint64_t k = key_of(p);
      if (index_.count(k)) continue;
      index_[k] = static_cast<int>(perms_.size());
      Vec w = words_[head];
      w.push_back(i);
      perms_.push_back(std::move(p));
      words_.push_back(std::move(w));
    }
  }
  const int g = order();
  inv_.resize(g);
  for (int w = 0; w < g; ++w) {
    Perm q(n);
    for (int r = 0; r < n; ++r) q[perms_[w][r]] = static_cast<std::uint8_t>(r);
    inv_[w] = index_.at(key_of(q));
  }
  refl_.resize(n);
  for (int r = 0; r < n; ++r) {
    Perm q(rs.refl[r].begin(), rs.refl[r].end());
    refl_[r] = index_.at(key_of(q));
  }
  if (g <= kTableLimit) {
    table_.assign(static_cast<size_t>(g) * g, -1);
    Perm q(n);
    for (int a = 0; a < g; ++a)
      for (int b = 0; b < g; ++b) {
        for (int r = 0; r < n; ++r) q[r] = perms_[a][perms_[b][r]];
        table_[static_cast<size_t>(a) * g + b] = index_.at(key_of(q));
      }
  }
}

RootSet WeylGroup::act(int w, const RootSet& s) const {
  RootSet out;
  for (int r = 0; r < rs_->size(); ++r)
    if (s.test(r)) out.set(perms_[w][r]);
  return out;
}

int WeylGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<size_t>(a) * order() + b];
  std::uint64_t k = 0;
  for (int x : rs_->simple) k = k << 8 | perms_[a][perms_[b][x]];
  return index_.at(k);
}

int WeylGroup::find(const Perm& p) const {
  auto it = index_.find(key_of(p));
  return it == index_.end() ? -1 : it->second;
}

std::vector<Vec> WeylGroup::matrix(int w) const {
  const int l = rs_->rank;
  std::vector<Vec> m(l, Vec(l, 0));
  for (int j = 0; j < l; ++j) {
    const Vec& img = rs_->roots[perms_[w][rs_->simple[j]]];
    for (int i = 0; i < l; ++i) m[i][j] = img[i];
  }
  return m;
}

Vec WeylGroup::act_coords(int w, const Vec& v) const {
  const auto m = matrix(w);
  Vec out(rs_->rank, 0);
  for (int i = 0; i < rs_->rank; ++i)
    for (int j = 0; j < rs_->rank; ++j) out[i] += m[i][j] * v[j];
  return out;
}

Vec WeylGroup::coroot_act(int w, const Vec& t) const {
  Vec x = t;
  const Vec& word = words_[w];
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    int c = 0;
    for (int j = 0; j < rs_->rank; ++j) c += x[j] * rs_->cartan[j][i];
    x[i] -= c;
  }
  return x;
}

Subgroup subgroup_from(const WeylGroup& W, const Vec& elems) {
  Subgroup h;
  h.mask.assign(W.order(), 0);
  for (int e : elems) h.mask[e] = 1;
  for (int w = 0; w < W.order(); ++w)
    if (h.mask[w]) h.elems.push_back(w);
  return h;
}

Subgroup closure(const WeylGroup& W, const Vec& gens) {
  Subgroup h;
  h.mask.assign(W.order(), 0);
  h.mask[0] = 1;
  std::vector<int> todo{0};
  for (size_t head = 0; head < todo.size(); ++head)
    for (int g : gens) {
      const int x = W.mul(todo[head], g);
      if (!h.mask[x]) {
        h.mask[x] = 1;
        todo.push_back(x);
      }
    }
  std::sort(todo.begin(), todo.end());
  h.elems = std::move(todo);
  return h;
}

Subgroup whole_group(const WeylGroup& W) {
  Vec all(W.order());
  for (int w = 0; w < W.order(); ++w) all[w] = w;
  return subgroup_from(W, all);
}

Subgroup reflection_subgroup(const WeylGroup& W, const Vec& roots) {
  Vec gens;
  for (int r : roots) gens.push_back(W.reflection(r));
  return closure(W, gens);
}

Subgroup normalizer_of_subsystem(const WeylGroup& W, const RootSet& members) {
  Vec keep;
  for (int w = 0; w < W.order(); ++w)
    if (W.act(w, members) == members) keep.push_back(w);
  return subgroup_from(W, keep);
}

Subgroup intersect(const WeylGroup& W, const Subgroup& a, const Subgroup& b) {
  Vec keep;
  for (int w : a.elems)
    if (b.contains(w)) keep.push_back(w);
  return subgroup_from(W, keep);
}

bool is_subgroup(const WeylGroup& W, const Subgroup& h) {
  if (h.elems.empty() || !h.contains(0)) return false;
  return closure(W, generators_of(W, h)).elems == h.elems;
}

bool is_normal_in(const WeylGroup& W, const Subgroup& n, const Subgroup& g) {
  for (int x : generators_of(W, g))
    for (int y : n.elems)
      if (!n.contains(W.conj(x, y))) return false;
  return true;
}

Vec generators_of(const WeylGroup& W, const Subgroup& h) {
  Vec gens;
  Subgroup cur = closure(W, gens);
  for (int x : h.elems) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = closure(W, gens);
    if (cur.order() == h.order()) break;
  }
  return gens;
}

int product_set_size(const WeylGroup& W, const Subgroup& a, const Subgroup& b) {
  std::vector<char> seen(W.order(), 0);
  int count = 0;
  for (int x : a.elems)
    for (int y : b.elems) {
      const int z = W.mul(x, y);
      if (!seen[z]) {
        seen[z] = 1;
        ++count;
      }
    }
  return count;
}

bool FrobeniusAction::split() const {
  for (size_t i = 0; i < node_perm.size(); ++i)
    if (node_perm[i] != static_cast<int>(i)) return false;
  return true;
}

RootSet FrobeniusAction::act(const RootSet& s) const {
  RootSet out;
  for (size_t r = 0; r < root_perm.size(); ++r)
    if (s.test(r)) out.set(root_perm[r]);
  return out;
}

int node_gradient(const RootSystem& rs, int k) {
  return k == 0 ? rs.neg[rs.highest_root] : rs.simple[k - 1];
}

FrobeniusAction make_frobenius(const WeylGroup& W, const Vec& node_perm) {
  const RootSystem& rs = W.rs();
  const int l = rs.rank;
  if (static_cast<int>(node_perm.size()) != l + 1) throw Error("node permutation has wrong size");
  Vec sorted = node_perm;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k <= l; ++k)
    if (sorted[k] != k) throw Error("node permutation is not a permutation of 0..rank");
  for (int j = 0; j <= l; ++j)
    for (int k = 0; k <= l; ++k)
      if (rs.pair(node_gradient(rs, j), node_gradient(rs, k)) !=
          rs.pair(node_gradient(rs, node_perm[j]), node_gradient(rs, node_perm[k])))
        throw Error("node permutation does not preserve the affine Cartan matrix");

  FrobeniusAction fr;
  fr.node_perm = node_perm;
  fr.linear.assign(l, Vec(l, 0));
  fr.shift.assign(l, 0);
  for (int i = 0; i < l; ++i) {
    const Vec& img = rs.roots[node_gradient(rs, node_perm[i + 1])];
    for (int k = 0; k < l; ++k) fr.linear[k][i] = img[k];
    fr.shift[i] = node_perm[i + 1] == 0 ? 1 : 0;
  }
  const int n = rs.size();
  fr.root_perm.resize(n);
  for (int r = 0; r < n; ++r) {
    Vec v(l, 0);
    for (int k = 0; k < l; ++k)
      for (int i = 0; i < l; ++i) v[k] += fr.linear[k][i] * rs.roots[r][i];
    const int img = rs.index_of(v);
    if (img < 0) throw Error("Frobenius linear part does not preserve the roots");
    fr.root_perm[r] = img;
  }
  Vec linv(n);
  for (int r = 0; r < n; ++r) linv[fr.root_perm[r]] = r;
  fr.on_w.resize(W.order());
  for (int w = 0; w < W.order(); ++w) {
    Perm q(n);
    for (int r = 0; r < n; ++r) q[r] = static_cast<std::uint8_t>(fr.root_perm[W.perm(w)[linv[r]]]);
    const int x = W.find(q);
    if (x < 0) throw Error("Frobenius does not normalize the Weyl group");
    fr.on_w[w] = x;
  }
  Vec p = node_perm;
  fr.order = 1;
  auto is_id = [&](const Vec& v) {
    for (int k = 0; k <= l; ++k)
      if (v[k] != k) return false;
    return true;
  };
  while (!is_id(p)) {
    Vec q(l + 1);
    for (int k = 0; k <= l; ++k) q[k] = node_perm[p[k]];
    p = q;
    ++fr.order;
  }
  return fr;
}

Subgroup twisted_subgroup(const WeylGroup& W, const RootSet& phi_theta, int w,
                          const FrobeniusAction& fr) {
  if (fr.act(phi_theta) != W.act(w, phi_theta))
    throw Error("twisted_subgroup: Fr(Phi_theta) != w Phi_theta");
  const Subgroup norm = normalizer_of_subsystem(W, phi_theta);
  const Subgroup wtheta = reflection_subgroup(W, to_list(phi_theta));
  Vec keep;
  const int winv = W.inv(w);
  for (int x : norm.elems) {
    const int y = W.mul(W.mul(W.mul(winv, W.inv(fr.act_w(x))), w), x);
    if (wtheta.contains(y)) keep.push_back(x);
  }
  Subgroup out = subgroup_from(W, keep);
  if (!is_subgroup(W, out)) throw Error("internal: twisted subgroup is not a group");
  for (int y : wtheta.elems)
    if (!out.contains(y)) throw Error("internal: twisted subgroup misses W_theta");
  if (!is_normal_in(W, wtheta, out)) throw Error("internal: W_theta not normal in twisted subgroup");
  return out;
}

std::vector<Vec> twisted_classes(const WeylGroup& W, const Subgroup& g, const FrobeniusAction& fr) {
  const Vec gens = generators_of(W, g);
  std::vector<int> pos(W.order(), -1);
  for (int i = 0; i < g.order(); ++i) pos[g.elems[i]] = i;
  UnionFind uf(g.order());
  for (int i = 0; i < g.order(); ++i)
    for (int n : gens) {
      const int y = W.mul(W.mul(fr.act_w(n), g.elems[i]), W.inv(n));
      if (pos[y] < 0) throw Error("twisted_classes: group is not Fr-stable");
      uf.unite(i, pos[y]);
    }
  std::vector<Vec> out;
  for (const auto& b : uf.blocks()) {
    Vec c;
    for (int i : b) c.push_back(g.elems[i]);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Parabolic> parabolic_subgroups(const WeylGroup& W, const Subgroup& wf,
                                           const Vec& local_simple, const FrobeniusAction& fr) {
  const RootSet simple_set = to_set(local_simple);
  for (int r : local_simple)
    if (!simple_set.test(fr.act_root(r)))
      throw Error("parabolic_subgroups: Fr does not normalize W_F");
  const int k = static_cast<int>(local_simple.size());
  std::map<Vec, Parabolic> found;
  for (int mask = 0; mask < (1 << k); ++mask) {
    Vec J;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) J.push_back(local_simple[i]);
    const RootSet jset = to_set(J);
    bool j_stable = true;
    for (int r : J) j_stable = j_stable && jset.test(fr.act_root(r));
    const Subgroup wj = reflection_subgroup(W, J);
    for (int x : wf.elems) {
      Vec elems;
      for (int y : wj.elems) elems.push_back(W.conj(x, y));
      std::sort(elems.begin(), elems.end());
      auto it = found.find(elems);
      if (it == found.end()) {
        Parabolic p;
        p.group = subgroup_from(W, elems);
        p.proper = p.group.order() != wf.order();
        it = found.emplace(elems, std::move(p)).first;
      }
      if (j_stable && wj.contains(W.mul(W.inv(x), fr.act_w(x)))) it->second.fr_stable = true;
    }
  }
  std::vector<Parabolic> out;
  for (auto& [key, p] : found) out.push_back(std::move(p));
  return out;
}

}  // namespace urlevi
