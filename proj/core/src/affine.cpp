#include "urlevi/affine.hpp"

#include "urlevi/union_find.hpp"

#include <algorithm>
#include <tuple>

namespace urlevi {

namespace {

int pair_with_coroots(const RootSystem& rs, const Vec& gamma, const Vec& t) {
  int s = 0;
  for (int j = 0; j < rs.rank; ++j) s += t[j] * rs.coroot_pair(gamma, j);
  return s;
}

QVec functional_q(const AffineFunctional& f) {
  QVec v = to_q(f.gradient);
  v.emplace_back(f.level);
  return v;
}

QVec mat_times(const std::vector<Vec>& m, const QVec& v) {
  QVec out(m.size(), Q(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += Q(m[i][j]) * v[j];
  return out;
}

// image of the rational affine functional v = (gradient, level) under (w, t)
QVec act_q(const WeylGroup& W, const AffineElement& g, const QVec& v) {
  const RootSystem& rs = W.rs();
  const int l = rs.rank;
  QVec grad(v.begin(), v.begin() + l);
  QVec wg = mat_times(W.matrix(g.linear), grad);
  Q level = v[l];
  for (int j = 0; j < l; ++j) {
    Q c = 0;
    for (int i = 0; i < l; ++i) c += wg[i] * Q(rs.cartan[j][i]);
    level -= c * Q(g.translation[j]);
  }
  wg.push_back(level);
  return wg;
}

}  // namespace

AffineElement compose(const WeylGroup& W, const AffineElement& a, const AffineElement& b) {
  AffineElement c;
  c.linear = W.mul(a.linear, b.linear);
  c.translation = W.coroot_act(a.linear, b.translation);
  for (size_t i = 0; i < c.translation.size(); ++i) c.translation[i] += a.translation[i];
  return c;
}

AffineFunctional act(const WeylGroup& W, const AffineElement& g, const AffineFunctional& f) {
  AffineFunctional out;
  out.gradient = W.act_coords(g.linear, f.gradient);
  out.level = f.level - pair_with_coroots(W.rs(), out.gradient, g.translation);
  return out;
}

AffineFunctional act(const RootSystem& rs, const FrobeniusAction& fr, const AffineFunctional& f) {
  AffineFunctional out;
  out.gradient.assign(rs.rank, 0);
  out.level = f.level;
  for (int k = 0; k < rs.rank; ++k)
    for (int i = 0; i < rs.rank; ++i) out.gradient[k] += fr.linear[k][i] * f.gradient[i];
  for (int i = 0; i < rs.rank; ++i) out.level += f.gradient[i] * fr.shift[i];
  return out;
}

AffineFunctional affine_simple_root(const RootSystem& rs, int node) {
  AffineFunctional f;
  if (node == 0) {
    f.gradient = rs.roots[rs.highest_root];
    for (int& x : f.gradient) x = -x;
    f.level = 1;
  } else {
    f.gradient.assign(rs.rank, 0);
    f.gradient[node - 1] = 1;
  }
  return f;
}

Apartment::Apartment(const WeylGroup& W, const FrobeniusAction& fr, int radius)
    : W_(&W), fr_(&fr), radius_(radius) {
  if (radius < 2) throw Error("search radius must be at least 2");
  build_facets();
  build_transport();
}

std::vector<QVec> Apartment::alcove_vertices() const {
  const RootSystem& rs = W_->rs();
  std::vector<QVec> v(rs.rank + 1, QVec(rs.rank, Q(0)));
  for (int j = 1; j <= rs.rank; ++j) v[j][j - 1] = Q(1, rs.marks[j - 1]);
  return v;
}

void Apartment::build_facets() {
  const RootSystem& rs = W_->rs();
  const int l = rs.rank;
  const Vec& sigma = fr_->node_perm;
  const auto verts = alcove_vertices();
  for (int mask = 0; mask < (1 << (l + 1)) - 1; ++mask) {
    bool stable = true;
    for (int k = 0; k <= l; ++k)
      if ((mask >> k & 1) != (mask >> sigma[k] & 1)) stable = false;
    if (!stable) continue;
    Facet f;
    for (int k = 0; k <= l; ++k)
      if (mask >> k & 1) f.nodes.push_back(k);
    f.dim = l - static_cast<int>(f.nodes.size());
    f.barycenter.assign(l, Q(0));
    int count = 0;
    for (int k = 0; k <= l; ++k) {
      if (mask >> k & 1) continue;
      for (int i = 0; i < l; ++i) f.barycenter[i] += verts[k][i];
      ++count;
    }
    for (auto& x : f.barycenter) x /= count;
    for (int r = 0; r < rs.size(); ++r) {
      Q val = 0;
      for (int i = 0; i < l; ++i) val += Q(rs.roots[r][i]) * f.barycenter[i];
      if (val.denominator() == 1) f.phi.set(r);
    }
    for (int k : f.nodes) f.local_simple.push_back(node_gradient(rs, k));
    f.wf = reflection_subgroup(*W_, f.local_simple);
    if (f.wf.order() != reflection_subgroup(*W_, to_list(f.phi)).order())
      throw Error("internal: facet Weyl group mismatch");

    QMat rows;
    for (int k : f.nodes) rows.push_back(functional_q(affine_simple_root(rs, k)));
    for (int j = 0; j <= l; ++j) {
      if (sigma[j] == j) continue;
      QVec a = functional_q(affine_simple_root(rs, j));
      const QVec b = functional_q(affine_simple_root(rs, sigma[j]));
      for (int i = 0; i <= l; ++i) a[i] -= b[i];
      rows.push_back(std::move(a));
    }
    f.ann = rref(rows);
    f.ann_perp = nullspace(f.ann.rows, l + 1);
    f.fr_fixed_dim = l - static_cast<int>(f.ann.rows.size());

    f.in_stable_parabolic.assign(W_->order(), 0);
    const int k = static_cast<int>(f.nodes.size());
    for (int jm = 0; jm < (1 << k) - 1; ++jm) {
      Vec J;
      for (int i = 0; i < k; ++i)
        if (jm >> i & 1) J.push_back(f.nodes[i]);
      bool jstable = true;
      for (int node : J) jstable = jstable && std::find(J.begin(), J.end(), sigma[node]) != J.end();
      if (!jstable) continue;
      f.stable_proper_j.push_back(J);
      Vec roots;
      for (int node : J) roots.push_back(node_gradient(rs, node));
      for (int w : reflection_subgroup(*W_, roots).elems) f.in_stable_parabolic[w] = 1;
    }
    facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) {
    const bool a0 = !a.nodes.empty() && a.nodes[0] == 0;
    const bool b0 = !b.nodes.empty() && b.nodes[0] == 0;
    return std::tie(a.fr_fixed_dim, a0, a.nodes) < std::tie(b.fr_fixed_dim, b0, b.nodes);
  });
  for (int i = 0; i < facet_count(); ++i) {
    facets_[i].id = i;
    facets_[i].wf_gens = generators_of(*W_, facets_[i].wf);
  }
}

std::optional<AffineElement> Apartment::find_element(int w, const Facet& from, const Facet& to,
                                                     bool fr_fixed_only) const {
  const RootSystem& rs = W_->rs();
  const int l = rs.rank;
  if (from.fr_fixed_dim != to.fr_fixed_dim) return std::nullopt;
  if (W_->act(w, from.phi) != to.phi) return std::nullopt;
  if (fr_fixed_only && fr_->act_w(w) != w) return std::nullopt;
  const auto mw = W_->matrix(w);
  QMat a;
  QVec b;
  for (const QVec& v : from.ann.rows) {
    const QVec grad(v.begin(), v.begin() + l);
    const QVec wg = mat_times(mw, grad);
    QVec pairing(l, Q(0));
    for (int j = 0; j < l; ++j)
      for (int i = 0; i < l; ++i) pairing[j] += wg[i] * Q(rs.cartan[j][i]);
    for (const QVec& u : to.ann_perp) {
      QVec row(l);
      for (int j = 0; j < l; ++j) row[j] = u[l] * pairing[j];
      Q rhs = u[l] * v[l];
      for (int i = 0; i < l; ++i) rhs += u[i] * wg[i];
      a.push_back(std::move(row));
      b.push_back(rhs);
    }
  }
  if (fr_fixed_only) {
    for (int i = 0; i < l; ++i) {
      const Vec wa = rs.roots[W_->act(w, rs.simple[i])];
      const Vec wla = rs.roots[W_->act(w, fr_->act_root(rs.simple[i]))];
      Vec diff(l);
      for (int k = 0; k < l; ++k) diff[k] = wla[k] - wa[k];
      QVec row(l);
      for (int j = 0; j < l; ++j) row[j] = Q(rs.coroot_pair(diff, j));
      int shift = 0;
      for (int k = 0; k < l; ++k) shift += wa[k] * fr_->shift[k];
      a.push_back(std::move(row));
      b.push_back(Q(fr_->shift[i] - shift));
    }
  }
  auto t = solve_integer_in_box(a, b, l, radius_);
  if (!t) return std::nullopt;
  AffineElement g;
  g.linear = w;
  for (long long x : *t) g.translation.push_back(static_cast<int>(x));
  return g;
}

bool Apartment::maps_span(const AffineElement& g, const Facet& from, const Facet& to) const {
  if (from.ann.rows.size() != to.ann.rows.size()) return false;
  for (const QVec& v : from.ann.rows)
    if (!in_row_space(to.ann, act_q(*W_, g, v))) return false;
  return true;
}

bool Apartment::fr_fixed(const AffineElement& g) const {
  const RootSystem& rs = W_->rs();
  for (int i = 0; i < rs.rank; ++i) {
    AffineFunctional f;
    f.gradient.assign(rs.rank, 0);
    f.gradient[i] = 1;
    if (act(rs, *fr_, act(*W_, g, f)) != act(*W_, g, act(rs, *fr_, f))) return false;
  }
  return true;
}

void Apartment::build_transport() {
  const int n = facet_count();
  transport_.assign(n, std::vector<Vec>(n));
  UnionFind uf(n);
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      if (facets_[f].fr_fixed_dim != facets_[g].fr_fixed_dim) continue;
      if (facets_[f].phi.count() != facets_[g].phi.count()) continue;
      for (int w = 0; w < W_->order(); ++w)
        if (find_element(w, facets_[f], facets_[g], true)) transport_[f][g].push_back(w);
      if (!transport_[f][g].empty()) uf.unite(f, g);
    }
  const auto lab = uf.labels();
  nclasses_ = 0;
  for (int f = 0; f < n; ++f) {
    facets_[f].cls = lab[f];
    nclasses_ = std::max(nclasses_, lab[f] + 1);
  }
  for (auto& f : facets_) f.span_stab = span_stabilizer_linear_parts(*this, f);
}

int Apartment::find_facet(const Vec& nodes) const {
  Vec s = nodes;
  std::sort(s.begin(), s.end());
  for (const auto& f : facets_)
    if (f.nodes == s) return f.id;
  return -1;
}

std::vector<Vec> Apartment::facet_classes() const {
  std::vector<Vec> out(nclasses_);
  for (const auto& f : facets_) out[f.cls].push_back(f.id);
  return out;
}

bool Apartment::is_class_rep(int f) const {
  for (int g = 0; g < f; ++g)
    if (facets_[g].cls == facets_[f].cls) return false;
  return true;
}

bool Apartment::in_closure(int f, int g) const {
  const Vec& a = facets_[f].nodes;
  const Vec& b = facets_[g].nodes;
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

Subgroup span_stabilizer_linear_parts(const Apartment& apt, const Facet& f) {
  const WeylGroup& W = apt.W();
  Vec keep;
  for (int w = 0; w < W.order(); ++w)
    if (apt.find_element(w, f, f, false)) keep.push_back(w);
  Subgroup h = subgroup_from(W, keep);
  if (!is_subgroup(W, h)) throw Error("internal: span stabilizer is not a group");
  return h;
}

}  // namespace urlevi
