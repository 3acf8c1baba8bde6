#include "oracles.hpp"

#include "urlevi/union_find.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

namespace urlevi::oracle {

std::string Report::summary() const {
  std::ostringstream out;
  out << checks << " checks";
  if (!ok()) {
    out << ", " << failures.size() << " failures:";
    for (const auto& f : failures) out << "\n    " << f;
  }
  return out.str();
}

std::vector<Case> triple_cases() {
  std::vector<Case> out = {{"A1", 0},      {"Sp4", 0},     {"G2", 0},      {"SU3q", 0},
                           {"SL3", 0},     {"SL4", 0},     {"SL1D(2)", 0}, {"SL1D(3)", 0},
                           {"SL1D(4)", 0}, {"SL1D(5)", 0}, {"SL1D(6)", 0}, {"SL1D(7)", 0},
                           {"SL1D(8)", 0}};
  return out;
}

std::vector<Case> genlevi_cases() {
  return {{"A1", 0}, {"Sp4", 0}, {"Sp4", 2}, {"G2", 0}, {"G2", 3}, {"SU3q", 0}, {"SL3", 0}};
}

namespace {

std::mutex cache_mutex;

template <class T>
using Cache = std::map<std::tuple<std::string, int, int>, std::unique_ptr<T>>;

}  // namespace

const Engine& engine(const Case& c, int radius) {
  static Cache<Engine> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[{c.group, c.residue_char, radius}];
  if (!slot) slot = make_engine(c.group, c.residue_char, radius);
  return *slot;
}

const GenLeviClassifier& genlevi(const Case& c) {
  const Engine& e = engine(c);
  static Cache<GenLeviClassifier> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[{c.group, c.residue_char, 4}];
  if (!slot) slot = std::make_unique<GenLeviClassifier>(e);
  return *slot;
}

const TripleClassifier& triples(const Case& c, bool generalized) {
  if (generalized) return genlevi(c).triples();
  const Engine& e = engine(c);
  static Cache<TripleClassifier> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[{c.group, c.residue_char, 4}];
  if (!slot) slot = std::make_unique<TripleClassifier>(e, e.theta_ids());
  return *slot;
}

namespace {

std::string name(const Engine& e) { return e.spec().name + "@" + char_tag(e.spec().residue_char); }

std::string pair_str(int pos, int w) {
  return "(" + std::to_string(pos) + "," + std::to_string(w) + ")";
}

// members of the universe position, W_Phi as a mask, and the W-action on positions
struct Universe {
  std::vector<RootSet> members;
  std::vector<Subgroup> wphi;
  std::map<RootSet, int, bool (*)(const RootSet&, const RootSet&)> pos{set_less};
  const WeylGroup* W = nullptr;
  mutable std::vector<Vec> images;  // images[n][p], -1 outside the universe; rows filled on demand

  explicit Universe(const TripleClassifier& t) : W(&t.engine().W()) {
    const Engine& e = t.engine();
    for (int sub : t.universe()) {
      const RootSet& m = e.subsystems()[sub].members;
      pos[m] = static_cast<int>(members.size());
      members.push_back(m);
      wphi.push_back(reflection_subgroup(e.W(), to_list(m)));
    }
    images.resize(W->order());
  }
  int image(const WeylGroup&, int n, int p) const {
    Vec& row = images[n];
    if (row.empty()) {
      row.assign(members.size(), -1);
      for (size_t q = 0; q < members.size(); ++q)
        if (auto it = pos.find(W->act(n, members[q])); it != pos.end()) row[q] = it->second;
    }
    return row[p];
  }
};

// every (q, v) with (p, w) ~_F (q, v), straight from the definition
std::set<std::pair<int, int>> related_set(const Engine& e, const Universe& u, const Facet& F,
                                          int p, int w) {
  const WeylGroup& W = e.W();
  std::set<std::pair<int, int>> out;
  for (int n : F.wf.elems) {
    const int q = u.image(W, n, p);
    if (q < 0) continue;
    const int x = W.mul(W.mul(e.fr().act_w(n), w), W.inv(n));
    for (int rest : F.wf.elems)
      if (u.wphi[q].contains(rest)) out.insert({q, W.mul(x, rest)});
  }
  return out;
}

}  // namespace

Report finite_partition(const Engine& e) {
  Report r;
  const WeylGroup& W = e.W();
  const FrobeniusAction& fr = e.fr();
  const PairPartition part = enumerate_IG(e);

  // admissible pairs from scratch
  std::set<std::pair<Vec, int>> expected, got;
  for (const Vec& base : simple_subsets(e.rs())) {
    RootSet target;
    for (int x : base) target.set(fr.act_root(x));
    for (int w = 0; w < W.order(); ++w) {
      RootSet img;
      for (int x : base) img.set(W.act(w, x));
      if (img == target) expected.insert({base, w});
    }
  }
  for (const auto& [b, w] : part.pairs) got.insert({part.bases[b], w});
  r.expect(expected == got, name(e) + ": admissible pairs of I differ");

  auto act = [&](int n, int idx) {
    const auto [b, w] = part.pairs[idx];
    Vec img;
    for (int x : part.bases[b]) img.push_back(W.act(n, x));
    std::sort(img.begin(), img.end());
    return part.pair_index(img, W.mul(W.mul(fr.act_w(n), w), W.inv(n)));
  };
  const int np = static_cast<int>(part.pairs.size());
  if (W.order() <= 48) {
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < np; ++q) {
        bool rel = false;
        for (int n = 0; n < W.order() && !rel; ++n) rel = act(n, p) == q;
        r.expect(rel == (part.cls[p] == part.cls[q]),
                 name(e) + ": I pairs " + std::to_string(p) + "," + std::to_string(q));
      }
  } else {
    // the W-orbit of a representative is the whole class
    std::vector<Vec> members(part.classes.size());
    for (int p = 0; p < np; ++p) members[part.cls[p]].push_back(p);
    for (const Vec& cls : members) {
      std::set<int> orbit;
      for (int n = 0; n < W.order(); ++n)
        if (const int q = act(n, cls[0]); q >= 0) orbit.insert(q);
      r.expect(orbit == std::set<int>(cls.begin(), cls.end()),
               name(e) + ": I class of pair " + std::to_string(cls[0]) + " is not an orbit");
    }
  }
  return r;
}

Report facet_partitions(const TripleClassifier& t) {
  Report r;
  const Engine& e = t.engine();
  const WeylGroup& W = e.W();
  const Universe u(t);
  for (const Facet& F : e.apartment().facets()) {
    const FacetPairs& fp = t.at(F.id);
    std::set<std::pair<int, int>> expected;
    for (int p = 0; p < static_cast<int>(u.members.size()); ++p)
      for (int w : F.wf.elems)
        if (e.fr().act(u.members[p]) == W.act(w, u.members[p])) expected.insert({p, w});
    r.expect(expected == std::set<std::pair<int, int>>(fp.pairs.begin(), fp.pairs.end()),
             name(e) + ": pairs at facet " + std::to_string(F.id));
    const int n = static_cast<int>(fp.pairs.size());
    for (int a = 0; a < n; ++a) {
      const auto [p, w] = fp.pairs[a];
      const auto rel = related_set(e, u, F, p, w);
      for (int b = 0; b < n; ++b) {
        const auto [q, v] = fp.pairs[b];
        r.expect(rel.count({q, v}) == (fp.cls[a] == fp.cls[b] ? 1u : 0u),
                 name(e) + ": ~F at facet " + std::to_string(F.id) + " " + pair_str(p, w) + " " +
                     pair_str(q, v));
      }
    }
  }
  return r;
}

Report global_partition(const TripleClassifier& t) {
  Report r;
  const Engine& e = t.engine();
  const WeylGroup& W = e.W();
  const Apartment& apt = e.apartment();
  const Universe u(t);
  const int nodes = t.node_count();
  std::vector<Vec> at_facet(apt.facets().size());
  for (int b = 0; b < nodes; ++b) at_facet[t.triple_of(b).first].push_back(b);
  for (int a = 0; a < nodes; ++a) {
    const auto [f, pa] = t.triple_of(a);
    const auto [p, w] = t.at(f).pairs[pa];
    for (int g = 0; g < static_cast<int>(at_facet.size()); ++g) {
      std::set<std::pair<int, int>> rel;
      for (int m : apt.transport(f, g)) {
        const int p2 = u.image(W, m, p);
        const int w2 = W.mul(W.mul(e.fr().act_w(m), w), W.inv(m));
        if (p2 >= 0) rel.merge(related_set(e, u, apt.facet(g), p2, w2));
      }
      for (int b : at_facet[g]) {
        const auto [q, v] = t.at(g).pairs[t.triple_of(b).second];
        r.expect((rel.count({q, v}) > 0) == (t.global_block(a) == t.global_block(b)),
                 name(e) + ": global relation between nodes " + std::to_string(a) + " and " +
                     std::to_string(b));
      }
    }
  }
  return r;
}

Report elliptic_implies_torus(const TripleClassifier& t) {
  Report r;
  const Engine& e = t.engine();
  const int empty = t.position(e.subsystems().find(RootSet()));
  if (empty < 0) {
    r.fail(name(e) + ": empty subsystem missing from the universe");
    return r;
  }
  for (const Facet& F : e.apartment().facets()) {
    const FacetPairs& fp = t.at(F.id);
    for (int p = 0; p < static_cast<int>(fp.pairs.size()); ++p) {
      const auto [pos, w] = fp.pairs[p];
      if (pos == empty)
        r.expect(fp.elliptic(p) == elliptic_by_fixed_vectors(e, F.id, w),
                 name(e) + ": ellipticity of (empty," + std::to_string(w) + ") at facet " +
                     std::to_string(F.id) + " disagrees with fixed vectors");
      if (!fp.elliptic(p)) continue;
      const int q = fp.find(empty, w);
      r.expect(q >= 0 && fp.elliptic(q), name(e) + ": elliptic " + pair_str(pos, w) + " at facet " +
                                              std::to_string(F.id) + " but (empty,w) is not");
    }
  }
  return r;
}

Report ellipticity_is_dimension_max(const TripleClassifier& t) {
  Report r;
  const Engine& e = t.engine();
  const Apartment& apt = e.apartment();
  const int nodes = t.node_count();
  // generalized subsystems lift differently from different faces
  bool levi_only = true;
  for (int sub : t.universe()) levi_only = levi_only && e.subsystems()[sub].parabolic;
  UnionFind uf(nodes);
  for (int a = 0; a < nodes; ++a)
    for (int b = 0; b < nodes; ++b)
      if (t.global_block(a) == t.global_block(b)) uf.unite(a, b);
  // (F, Phi, w) ~ (H, Phi, w) when F lies in the closure of H
  for (int f = 0; f < apt.facet_count(); ++f)
    for (int h = 0; h < apt.facet_count(); ++h) {
      if (f == h || !apt.in_closure(f, h)) continue;
      const FacetPairs& at_h = t.at(h);
      for (int p = 0; p < static_cast<int>(at_h.pairs.size()); ++p) {
        const auto [pos, w] = at_h.pairs[p];
        const int q = t.at(f).find(pos, w);
        r.expect(q >= 0, name(e) + ": pair at facet " + std::to_string(h) +
                             " missing at a face " + std::to_string(f));
        if (q >= 0) uf.unite(t.node(h, p), t.node(f, q));
      }
    }
  for (const auto& block : uf.blocks()) {
    int maxdim = -1;
    for (int nd : block) maxdim = std::max(maxdim, apt.facet(t.triple_of(nd).first).fr_fixed_dim);
    std::set<int> elliptic_classes;
    for (int nd : block) {
      const auto [f, p] = t.triple_of(nd);
      const bool ell = t.at(f).elliptic(p);
      r.expect(ell == (apt.facet(f).fr_fixed_dim == maxdim),
               name(e) + ": node " + std::to_string(nd) + " elliptic=" + std::to_string(ell) +
                   " but its dimension is " + std::to_string(apt.facet(f).fr_fixed_dim) +
                   " of max " + std::to_string(maxdim));
      if (ell) elliptic_classes.insert(t.global_block(nd));
    }
    if (levi_only)
      r.expect(elliptic_classes.size() == 1,
               name(e) + ": block of node " + std::to_string(block[0]) + " has " +
                   std::to_string(elliptic_classes.size()) + " elliptic classes");
    else
      r.expect(!elliptic_classes.empty(), name(e) + ": block without an elliptic class");
  }
  return r;
}

Report reductions(const TripleClassifier& t) {
  Report r;
  const Engine& e = t.engine();
  const WeylGroup& W = e.W();
  const FrobeniusAction& fr = e.fr();
  RootSet simple;
  for (int x : e.rs().simple) simple.set(x);
  auto normal_check = [&](const RootSet& span, int w, const std::string& what) {
    const Subgroup tw = twisted_subgroup(W, span, w, fr);
    const Subgroup wt = reflection_subgroup(W, to_list(span));
    bool inside = true;
    for (int x : wt.elems) inside = inside && tw.contains(x);
    r.expect(inside && is_subgroup(W, tw) && is_normal_in(W, wt, tw),
             name(e) + ": W_theta not normal in the twisted group for " + what);
  };
  std::set<std::pair<int, int>> seen;
  for (int nd = 0; nd < t.node_count(); ++nd) {
    const auto [f, p] = t.triple_of(nd);
    const auto [pos, w] = t.at(f).pairs[p];
    if (!seen.insert({pos, w}).second) continue;
    const RootSet& span = e.subsystems()[t.universe()[pos]].members;
    const std::string what = pair_str(pos, w);
    Reduction red;
    try {
      red = reduce_to_I(e, span, w);
    } catch (const Error& ex) {
      r.fail(name(e) + ": reduce_to_I " + what + ": " + ex.what());
      continue;
    }
    normal_check(span, w, what);
    const RootSet theta_span = span_of_base(e.rs(), red.theta);
    normal_check(theta_span, red.w, what + " reduced");

    // y recounted over all of W
    const int w0 = W.mul(W.mul(W.inv(fr.act_w(red.n)), w), red.n);
    RootSet target;
    for (int x : red.theta) target.set(fr.act_root(x));
    const Subgroup wt = reflection_subgroup(W, red.theta);
    int found = 0, last = -1;
    for (int y = 0; y < W.order(); ++y) {
      if (!wt.contains(y)) continue;
      RootSet img;
      for (int x : red.theta) img.set(W.act(W.mul(w0, y), x));
      if (img == target) {
        ++found;
        last = y;
      }
    }
    r.expect(found == 1 && last == red.y && W.mul(w0, last) == red.w,
             name(e) + ": y for " + what + " found " + std::to_string(found) + " times");
    bool in_delta = true;
    for (int x : red.theta) in_delta = in_delta && simple.test(x);
    r.expect(in_delta, name(e) + ": reduced theta of " + what + " is not in the simple roots");
  }
  return r;
}

Report twisted_subgroups(const TripleClassifier& t) {
  Report r;
  const Engine& e = t.engine();
  const WeylGroup& W = e.W();
  const FrobeniusAction& fr = e.fr();
  std::set<std::pair<int, int>> seen;
  for (int nd = 0; nd < t.node_count(); ++nd) {
    const auto [f, p] = t.triple_of(nd);
    const auto [pos, w] = t.at(f).pairs[p];
    if (!seen.insert({pos, w}).second) continue;
    const RootSet& span = e.subsystems()[t.universe()[pos]].members;
    const Subgroup wt = reflection_subgroup(W, to_list(span));
    Vec expected;
    for (int x = 0; x < W.order(); ++x) {
      if (W.act(x, span) != span) continue;
      const int c = W.mul(W.mul(W.mul(W.inv(w), W.inv(fr.act_w(x))), w), x);
      if (wt.contains(c)) expected.push_back(x);
    }
    r.expect(twisted_subgroup(W, span, w, fr).elems == expected,
             name(e) + ": twisted subgroup of " + pair_str(pos, w));
  }
  return r;
}

Report radius_stability(const std::string& group, int residue_char, int r1, int r2) {
  Report r;
  const Engine* a = &engine({group, residue_char}, r1);
  const Engine* b = &engine({group, residue_char}, r2);
  const Apartment& x = a->apartment();
  const Apartment& y = b->apartment();
  const std::string tag = group + " radius " + std::to_string(r1) + "/" + std::to_string(r2);
  r.expect(x.facet_count() == y.facet_count(), tag + ": facet count");
  if (!r.ok()) return r;
  r.expect(x.facet_classes() == y.facet_classes(), tag + ": facet classes");
  for (int f = 0; f < x.facet_count(); ++f) {
    r.expect(x.facet(f).wf.elems == y.facet(f).wf.elems, tag + ": W_F at facet " + std::to_string(f));
    r.expect(x.facet(f).span_stab.elems == y.facet(f).span_stab.elems,
             tag + ": W(F) at facet " + std::to_string(f));
    for (int g = 0; g < x.facet_count(); ++g) {
      Vec s = x.transport(f, g), t = y.transport(f, g);
      std::sort(s.begin(), s.end());
      std::sort(t.begin(), t.end());
      r.expect(s == t, tag + ": transport " + std::to_string(f) + "->" + std::to_string(g));
    }
  }
  return r;
}

namespace {

bool witness(const GenLeviClassifier& g, const Universe& u, int a, int b) {
  const TripleClassifier& t = g.triples();
  const Engine& e = t.engine();
  const WeylGroup& W = e.W();
  const Apartment& apt = e.apartment();
  auto members = [&](int cls) {
    std::vector<std::pair<int, int>> out;
    for (int nd = 0; nd < t.node_count(); ++nd) {
      const auto [f, p] = t.triple_of(nd);
      if (t.at(f).elliptic(p) && t.block_class(t.global_block(nd)) == cls) out.emplace_back(f, p);
    }
    return out;
  };
  const auto ma = members(a), mb = members(b);
  for (const auto& [fb, pb] : mb) {
    const auto [posb, wb] = t.at(fb).pairs[pb];
    for (const auto& [fa, pa] : ma) {
      if (!apt.in_closure(fa, fb)) continue;
      const auto [posa, wa] = t.at(fa).pairs[pa];
      const Facet& F = apt.facet(fa);
      for (int n : F.wf.elems) {
        const int pos = u.image(W, n, posb);
        if (pos < 0 || (u.members[posa] & ~u.members[pos]).any()) continue;
        const int x = W.mul(W.mul(e.fr().act_w(n), wb), W.inv(n));
        const int rest = W.mul(W.inv(x), wa);
        if (F.wf.contains(rest) && u.wphi[pos].contains(rest)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool contains_by_witness(const GenLeviClassifier& g, int a, int b) {
  return witness(g, Universe(g.triples()), a, b);
}

Report containment(const GenLeviClassifier& g) {
  Report r;
  const Universe u(g.triples());
  const Engine& e = g.triples().engine();
  const int n = static_cast<int>(g.classes().size());
  std::vector<std::vector<char>> rel(n, std::vector<char>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      rel[a][b] = g.contains(a, b);
      r.expect(static_cast<bool>(rel[a][b]) == witness(g, u, a, b),
               name(e) + ": contains(" + std::to_string(a) + "," + std::to_string(b) +
                   ") disagrees with the witness search");
    }
  for (int a = 0; a < n; ++a) r.expect(rel[a][a], name(e) + ": contains not reflexive at " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (rel[a][b] && rel[b][c])
          r.expect(rel[a][c], name(e) + ": contains not transitive at " + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c));
  return r;
}

}  // namespace urlevi::oracle
