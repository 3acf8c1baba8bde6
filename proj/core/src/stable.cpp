#include "urlevi/stable.hpp"

#include <algorithm>

namespace urlevi {

Reduction reduce_to_I(const Engine& e, const RootSet& span, int w) {
  const RootSystem& rs = e.rs();
  const WeylGroup& W = e.W();
  const FrobeniusAction& fr = e.fr();
  if (fr.act(span) != W.act(w, span)) throw Error("reduce_to_I: Fr(Phi) != w Phi");
  const Vec base = base_of_subsystem(rs, span);
  RootSet simple;
  for (int r : rs.simple) simple.set(r);

  Reduction out;
  out.n = -1;
  for (int n = 0; n < W.order() && out.n < 0; ++n) {
    const int ninv = W.inv(n);
    bool ok = true;
    for (int r : base) ok = ok && simple.test(W.act(ninv, r));
    if (ok) out.n = n;
  }
  if (out.n < 0) throw Error("reduce_to_I: subsystem is not parabolic");
  const int ninv = W.inv(out.n);
  for (int r : base) out.theta.push_back(W.act(ninv, r));
  std::sort(out.theta.begin(), out.theta.end());
  const int w0 = W.mul(W.mul(W.inv(fr.act_w(out.n)), w), out.n);

  RootSet target;
  for (int r : out.theta) target.set(fr.act_root(r));
  const Subgroup wtheta = reflection_subgroup(W, out.theta);
  int found = 0;
  for (int y : wtheta.elems) {
    const int cand = W.mul(w0, y);
    bool ok = true;
    for (int r : out.theta) ok = ok && target.test(W.act(cand, r));
    if (ok) {
      ++found;
      out.y = y;
      out.w = cand;
    }
  }
  if (found != 1) throw Error("internal: y in W_theta is not unique (" + std::to_string(found) + " found)");
  return out;
}

EmbeddingCount embedding_count(const Engine& e, int facet, const RootSet& span, int w) {
  if (!e.spec().simply_connected)
    throw Error("embedding counts are only exact for simply connected groups; refusing " + e.spec().name);
  const WeylGroup& W = e.W();
  const Facet& F = e.apartment().facet(facet);
  const Subgroup twisted = twisted_subgroup(W, span, w, e.fr());
  const Subgroup centralizer = twisted_subgroup(W, RootSet(), w, e.fr());
  const Subgroup norm = normalizer_of_subsystem(W, span);
  const Subgroup stab = intersect(W, intersect(W, F.span_stab, norm), centralizer);
  const Subgroup wtheta = reflection_subgroup(W, to_list(span));
  EmbeddingCount c;
  c.twisted_order = twisted.order();
  c.stabilizer_order = stab.order();
  c.theta_order = wtheta.order();
  c.product_order = product_set_size(W, stab, wtheta);
  if (c.twisted_order % c.product_order != 0) throw Error("internal: embedding count is not an integer");
  c.count = c.twisted_order / c.product_order;
  return c;
}

StableClassifier::StableClassifier(const TripleClassifier& tori) : tori_(&tori), I_(enumerate_IG(tori.engine())) {
  const Engine& e = tori.engine();
  for (const TripleClass& t : tori.classes()) {
    StableRow row;
    row.triple = t;
    const RootSet& span = e.subsystems()[t.sub].members;
    row.stable_id = stable_class_of(span, t.w);
    row.embeddings = embedding_count(e, t.facet, span, t.w);
    rows_.push_back(row);
  }
}

int StableClassifier::stable_class_of(const RootSet& span, int w) const {
  const Reduction r = reduce_to_I(tori_->engine(), span, w);
  const int c = I_.class_of(r.theta, r.w);
  if (c < 0) throw Error("internal: reduction is not a pair of I");
  return c;
}

}  // namespace urlevi
