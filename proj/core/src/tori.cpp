#include "urlevi/tori.hpp"

#include "urlevi/linalg.hpp"
#include "urlevi/union_find.hpp"

#include <algorithm>

namespace urlevi {

int FacetPairs::find(int pos, int w) const {
  const std::pair<int, int> key{pos, w};
  const auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
  return (it != pairs.end() && *it == key) ? static_cast<int>(it - pairs.begin()) : -1;
}

TripleClassifier::TripleClassifier(const Engine& e, Vec universe) : e_(&e), universe_(std::move(universe)) {
  const SubsystemTable& table = e.subsystems();
  std::sort(universe_.begin(), universe_.end(), [&](int a, int b) {
    const Vec& ba = table[a].base;
    const Vec& bb = table[b].base;
    if (ba.size() != bb.size()) return ba.size() < bb.size();
    return ba < bb;
  });
  for (size_t i = 0; i < universe_.size(); ++i) pos_of_.emplace(universe_[i], static_cast<int>(i));
  for (int id : universe_) {
    const int img = position(table.find(e.fr().act(table[id].members)));
    if (img < 0) throw Error("internal: universe is not Fr-stable");
    fr_image_.push_back(img);
  }
  const Apartment& apt = e.apartment();
  for (int f = 0; f < apt.facet_count(); ++f) build_facet(f);
  build_classes();
  build_global();
}

int TripleClassifier::position(int sub) const {
  const auto it = pos_of_.find(sub);
  return it == pos_of_.end() ? -1 : it->second;
}

int TripleClassifier::image(int w, int pos) const {
  const SubsystemTable& table = e_->subsystems();
  const int p = position(table.find(e_->W().act(w, table[universe_[pos]].members)));
  if (p < 0) throw Error("internal: universe is not W-stable");
  return p;
}

Vec TripleClassifier::intersection_gens(int facet, int pos) const {
  const Facet& F = e_->apartment().facet(facet);
  if (F.wf.order() == 1) return {};
  const WeylGroup& W = e_->W();
  const Subgroup wphi = reflection_subgroup(W, to_list(e_->subsystems()[universe_[pos]].members));
  return generators_of(W, intersect(W, F.wf, wphi));
}

void TripleClassifier::build_facet(int f) {
  const WeylGroup& W = e_->W();
  const FrobeniusAction& fr = e_->fr();
  const Facet& F = e_->apartment().facet(f);
  FacetPairs fp;
  fp.facet = f;
  const int n = static_cast<int>(universe_.size());
  for (int pos = 0; pos < n; ++pos)
    for (int w : F.wf.elems)
      if (image(w, pos) == fr_image_[pos]) fp.pairs.emplace_back(pos, w);

  facet_gens_.push_back(F.wf_gens);
  UnionFind uf(static_cast<int>(fp.pairs.size()));
  std::vector<Vec> igens(n);
  std::vector<char> have(n, 0);
  for (int p = 0; p < static_cast<int>(fp.pairs.size()); ++p) {
    const auto [pos, w] = fp.pairs[p];
    for (int g : F.wf_gens) {
      const int q = fp.find(image(g, pos), W.mul(W.mul(fr.act_w(g), w), W.inv(g)));
      if (q < 0) throw Error("internal: W_F action left the facet pairs");
      uf.unite(p, q);
    }
    if (!have[pos]) {
      igens[pos] = intersection_gens(f, pos);
      have[pos] = 1;
    }
    for (int y : igens[pos]) {
      const int q = fp.find(pos, W.mul(w, y));
      if (q < 0) throw Error("internal: right translation left the facet pairs");
      uf.unite(p, q);
    }
  }
  fp.cls = uf.labels();
  fp.nclasses = fp.cls.empty() ? 0 : *std::max_element(fp.cls.begin(), fp.cls.end()) + 1;
  fp.class_elliptic.assign(fp.nclasses, 1);
  for (int p = 0; p < static_cast<int>(fp.pairs.size()); ++p)
    if (F.in_stable_parabolic[fp.pairs[p].second]) fp.class_elliptic[fp.cls[p]] = 0;
  facet_pairs_.push_back(std::move(fp));
}

void TripleClassifier::build_classes() {
  const WeylGroup& W = e_->W();
  const FrobeniusAction& fr = e_->fr();
  const Apartment& apt = e_->apartment();
  extended_.resize(apt.facet_count());
  for (int f = 0; f < apt.facet_count(); ++f) {
    const Facet& F = apt.facet(f);
    Vec gens = F.wf_gens;
    Vec norm;
    for (int x = 0; x < W.order(); ++x)
      if (fr.act_w(x) == x && W.act(x, F.phi) == F.phi) norm.push_back(x);
    for (int x : generators_of(W, subgroup_from(W, norm))) gens.push_back(x);
    extended_[f] = closure(W, gens);
    if (!apt.is_class_rep(f)) continue;

    const FacetPairs& fp = facet_pairs_[f];
    const Vec ext_gens = generators_of(W, extended_[f]);
    UnionFind uf(static_cast<int>(fp.pairs.size()));
    Vec last(fp.nclasses, -1);
    for (int p = 0; p < static_cast<int>(fp.pairs.size()); ++p) {
      const auto [pos, w] = fp.pairs[p];
      for (int m : ext_gens) {
        const int q = fp.find(image(m, pos), W.mul(W.mul(fr.act_w(m), w), W.inv(m)));
        if (q < 0) throw Error("internal: extended action left the facet pairs");
        uf.unite(p, q);
      }
      if (last[fp.cls[p]] >= 0) uf.unite(last[fp.cls[p]], p);
      last[fp.cls[p]] = p;
    }
    for (const Vec& block : uf.blocks()) {
      const bool ell = fp.elliptic(block.front());
      for (int p : block)
        if (fp.elliptic(p) != ell) throw Error("internal: extended class mixes elliptic and non-elliptic pairs");
      if (!ell) continue;
      TripleClass c;
      c.facet = f;
      c.sub = universe_[fp.pairs[block.front()].first];
      c.w = fp.pairs[block.front()].second;
      c.orbit_size = static_cast<int>(block.size());
      classes_.push_back(c);
    }
  }
  const SubsystemTable& table = e_->subsystems();
  std::stable_sort(classes_.begin(), classes_.end(), [&](const TripleClass& a, const TripleClass& b) {
    const int ca = apt.facet(a.facet).cls, cb = apt.facet(b.facet).cls;
    if (ca != cb) return ca < cb;
    const Vec& ba = table[a.sub].base;
    const Vec& bb = table[b.sub].base;
    if (ba.size() != bb.size()) return ba.size() < bb.size();
    if (ba != bb) return ba < bb;
    return a.w < b.w;
  });
}

void TripleClassifier::build_global() {
  const WeylGroup& W = e_->W();
  const FrobeniusAction& fr = e_->fr();
  const Apartment& apt = e_->apartment();
  const int nf = apt.facet_count();
  offset_.assign(nf + 1, 0);
  for (int f = 0; f < nf; ++f) offset_[f + 1] = offset_[f] + static_cast<int>(facet_pairs_[f].pairs.size());
  UnionFind uf(node_count());
  for (int f = 0; f < nf; ++f) {
    const FacetPairs& fp = facet_pairs_[f];
    Vec last(fp.nclasses, -1);
    for (int p = 0; p < static_cast<int>(fp.pairs.size()); ++p) {
      if (last[fp.cls[p]] >= 0) uf.unite(node(f, last[fp.cls[p]]), node(f, p));
      last[fp.cls[p]] = p;
    }
  }
  for (int f = 0; f < nf; ++f)
    for (int g = 0; g < nf; ++g)
      for (int m : apt.transport(f, g)) {
        const FacetPairs& from = facet_pairs_[f];
        const FacetPairs& to = facet_pairs_[g];
        for (int p = 0; p < static_cast<int>(from.pairs.size()); ++p) {
          const auto [pos, w] = from.pairs[p];
          const int q = to.find(image(m, pos), W.mul(W.mul(fr.act_w(m), w), W.inv(m)));
          if (q < 0) throw Error("internal: facet transport left the facet pairs");
          if (from.elliptic(p) != to.elliptic(q)) throw Error("internal: facet transport changed ellipticity");
          uf.unite(node(f, p), node(g, q));
        }
      }
  global_ = uf.labels();
  blocks_ = uf.blocks();
  block_class_.assign(blocks_.size(), -1);
  for (size_t c = 0; c < classes_.size(); ++c) {
    const FacetPairs& fp = facet_pairs_[classes_[c].facet];
    const int p = fp.find(position(classes_[c].sub), classes_[c].w);
    const int b = global_[node(classes_[c].facet, p)];
    if (block_class_[b] >= 0) throw Error("internal: two representative classes are equivalent");
    block_class_[b] = static_cast<int>(c);
  }
  for (int f = 0; f < nf; ++f) {
    const FacetPairs& fp = facet_pairs_[f];
    for (int p = 0; p < static_cast<int>(fp.pairs.size()); ++p)
      if (fp.elliptic(p) && block_class_[global_[node(f, p)]] < 0)
        throw Error("internal: elliptic triple without a representative class");
  }
}

std::pair<int, int> TripleClassifier::triple_of(int nd) const {
  const auto it = std::upper_bound(offset_.begin(), offset_.end(), nd);
  const int f = static_cast<int>(it - offset_.begin()) - 1;
  return {f, nd - offset_[f]};
}

int TripleClassifier::class_of(int facet, int sub, int w) const {
  const int pos = position(sub);
  if (pos < 0) return -1;
  const FacetPairs& fp = facet_pairs_[facet];
  const int p = fp.find(pos, w);
  if (p < 0 || !fp.elliptic(p)) return -1;
  return block_class_[global_[node(facet, p)]];
}

bool elliptic_by_fixed_vectors(const Engine& e, int facet, int w) {
  const RootSystem& rs = e.rs();
  const Facet& F = e.apartment().facet(facet);
  const int l = rs.rank;
  const auto mw = e.W().matrix(w);
  const auto& L = e.fr().linear;
  std::vector<Vec> a(l, Vec(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      for (int k = 0; k < l; ++k) a[i][j] += mw[i][k] * L[k][j];
      if (i == j) a[i][j] -= 1;
    }
  if (F.local_simple.empty()) return true;
  QMat ab(l, QVec(F.local_simple.size(), Q(0)));
  for (int i = 0; i < l; ++i)
    for (size_t c = 0; c < F.local_simple.size(); ++c) {
      long long s = 0;
      for (int k = 0; k < l; ++k) s += a[i][k] * rs.roots[F.local_simple[c]][k];
      ab[i][c] = Q(s);
    }
  return rank(ab) == static_cast<int>(F.local_simple.size());
}

std::vector<TripleClass> maximal_tori(const TripleClassifier& c) {
  std::vector<TripleClass> out;
  for (const TripleClass& t : c.classes())
    if (c.engine().subsystems()[t.sub].rank() == 0) out.push_back(t);
  return out;
}

}  // namespace urlevi
