#include <doctest.h>

#include "oracles.hpp"
#include "urlevi/notation.hpp"

#include <set>

using namespace urlevi;

namespace {

const oracle::Case sp4{"Sp4", 0}, g2{"G2", 0}, su3{"SU3q", 0};

int node_facet(const Engine& e, const Vec& nodes) { return e.apartment().find_facet(nodes); }

RootSet span(const Engine& e, const char* base) { return span_of_base(e.rs(), parse_base(e.rs(), base)); }

int elem(const Engine& e, const char* w) { return parse_element(e.W(), w); }

int cls_of(const TripleClassifier& t, const Vec& nodes, const char* base, const char* w) {
  const Engine& e = t.engine();
  return t.class_of(node_facet(e, nodes), e.subsystems().find(span(e, base)), elem(e, w));
}

}  // namespace

TEST_CASE("finite pairs") {
  const Engine& a1 = oracle::engine({"A1", 0});
  const auto p = enumerate_IG(a1);
  CHECK(p.classes.size() == 3);
  CHECK(p.class_of({}, 0) >= 0);
  CHECK(p.class_of({}, elem(a1, "w_a")) >= 0);
  CHECK(p.class_of(parse_base(a1.rs(), "{a}"), 0) >= 0);

  CHECK(enumerate_IG(oracle::engine(g2)).classes.size() == 11);
  CHECK(enumerate_IG(oracle::engine(su3)).classes.size() == 5);

  for (const char* g : {"Sp4", "G2", "SU3q", "SL3", "SL4"}) {
    const Engine& e = oracle::engine({g, 0});
    const auto part = enumerate_IG(e);
    // (D, 1) is a singleton
    const int full = part.class_of(e.rs().simple, 0);
    REQUIRE(full >= 0);
    CHECK(part.classes[full].orbit_size == 1);
    int total = 0;
    for (const auto& c : part.classes) total += c.orbit_size;
    CHECK(total == static_cast<int>(part.pairs.size()));
    // empty theta matches twisted classes of W
    int empty = 0;
    for (const auto& c : part.classes) empty += c.base.empty() ? 1 : 0;
    CHECK(empty == static_cast<int>(twisted_classes(e.W(), whole_group(e.W()), e.fr()).size()));
  }
}

TEST_CASE("quasi-closed pairs") {
  const Engine& generic = oracle::engine(g2);
  const auto prime = enumerate_IGprime(generic);
  const auto extra = prime_minus_levi(generic, prime);
  std::set<std::pair<std::string, std::string>> got;
  for (const auto& c : extra) got.insert({base_name(generic.rs(), c.base), word_name(generic.W(), c.w)});
  CHECK(extra.size() == 3);
  CHECK(got.size() == 3);
  CHECK(prime.class_of(parse_base(generic.rs(), "{a,3a+2b}"), 0) >= 0);
  CHECK(prime.class_of(parse_base(generic.rs(), "{b,3a+b}"), 0) >= 0);
  CHECK(prime.class_of(parse_base(generic.rs(), "{b,3a+b}"), elem(generic, "w_a")) >= 0);

  const Engine& three = oracle::engine({"G2", 3});
  const auto p3 = enumerate_IGprime(three);
  CHECK(prime_minus_levi(three, p3).size() == 5);
  CHECK(p3.class_of(parse_base(three.rs(), "{a,a+b}"), 0) >= 0);
  CHECK(p3.class_of(parse_base(three.rs(), "{a,a+b}"), elem(three, "w_b")) >= 0);
  CHECK(prime.class_of(parse_base(generic.rs(), "{a,a+b}"), 0) < 0);

  // I embeds into I'
  for (const auto& c : enumerate_IG(generic).classes) CHECK(prime.class_of(c.base, c.w) >= 0);
}

TEST_CASE("class descriptors") {
  const Engine& e = oracle::engine(g2);
  const Descriptor gl2 = describe(e, span(e, "{a}"), 0);
  CHECK(gl2.type == "A1s");
  CHECK(gl2.twist_order_span == 1);
  const Descriptor u2 = describe(e, span(e, "{a}"), elem(e, "w_b w_a w_b w_a w_b"));
  CHECK(u2.type == "A1s");
  CHECK(u2.twist_order_span == 1);
  CHECK(gl2.twist_order == 1);
  CHECK(u2.twist_order == 2);
  const Descriptor full = describe(e, span(e, "D"), 0);
  CHECK(full.type == "G2");
  CHECK(full.twist_order == 1);
  CHECK(full.charpoly == std::vector<long long>{1, -2, 1});
  CHECK(describe(e, RootSet(), 0).type == "T");
  CHECK(characteristic_polynomial({{0, -1}, {1, 0}}) == std::vector<long long>{1, 0, 1});
}

TEST_CASE("pairs at facets") {
  const TripleClassifier& t = oracle::triples(sp4, false);
  const Engine& e = t.engine();
  const FacetPairs& origin = t.at(node_facet(e, {1, 2}));
  const int empty = t.position(e.subsystems().find(RootSet()));
  const int c = origin.find(empty, elem(e, "c"));
  const int c2 = origin.find(empty, elem(e, "c^2"));
  const int one = origin.find(empty, 0);
  REQUIRE(c >= 0);
  REQUIRE(c2 >= 0);
  REQUIRE(one >= 0);
  CHECK(origin.elliptic(c));
  CHECK(origin.elliptic(c2));
  CHECK_FALSE(origin.elliptic(one));
  std::set<int> empty_classes;
  for (size_t p = 0; p < origin.pairs.size(); ++p)
    if (origin.pairs[p].first == empty) empty_classes.insert(origin.cls[p]);
  CHECK(empty_classes.size() == 5);

  const FacetPairs& alcove = t.at(node_facet(e, {}));
  CHECK(alcove.pairs.size() == t.universe().size());
  for (size_t p = 0; p < alcove.pairs.size(); ++p) {
    CHECK(alcove.pairs[p].second == 0);
    CHECK(alcove.elliptic(static_cast<int>(p)));
  }
  CHECK(alcove.nclasses == static_cast<int>(alcove.pairs.size()));

  const TripleClassifier& u = oracle::triples(su3, false);
  const Engine& s = u.engine();
  const FacetPairs& sa = u.at(node_facet(s, {}));
  CHECK(sa.find(u.position(s.subsystems().find(span(s, "{a+b}"))), 0) >= 0);
}

TEST_CASE("tori") {
  const TripleClassifier& t = oracle::triples(sp4, false);
  CHECK(t.classes().size() == 16);
  std::map<int, int> by_dim;
  for (const auto& c : t.classes()) ++by_dim[t.engine().apartment().facet(c.facet).dim];
  CHECK(by_dim == std::map<int, int>{{0, 6}, {1, 6}, {2, 4}});
  CHECK(maximal_tori(t).size() == 9);
  CHECK(oracle::triples(g2, false).classes().size() == 15);
  // eight empty-theta labels appear on the G2 alcove picture
  CHECK(maximal_tori(oracle::triples(g2, false)).size() == 8);
  CHECK(oracle::triples(su3, false).classes().size() == 7);
  const int tau[] = {0, 1, 2, 2, 3, 2, 4, 2, 4};
  for (int n = 2; n <= 7; ++n) {
    const auto& d = oracle::triples({"SL1D(" + std::to_string(n) + ")", 0}, false);
    CHECK(d.classes().size() == static_cast<size_t>(tau[n]));
    CHECK(maximal_tori(d).size() == 1);
    for (const auto& c : d.classes()) CHECK(c.w == 0);
  }
  // (empty, c) at the origin and at the other Sp4 vertex
  CHECK(cls_of(t, {1, 2}, "{}", "c") >= 0);
  CHECK(cls_of(t, {1, 2}, "{}", "1") < 0);
}

TEST_CASE("stable classes and reductions") {
  const TripleClassifier& t = oracle::triples(sp4, false);
  const Engine& e = t.engine();
  const StableClassifier s(t);
  CHECK(s.I().classes.size() == 10);
  CHECK(s.stable_class_of(span(e, "{a+b}"), elem(e, "w_a")) ==
        s.stable_class_of(span(e, "{a}"), elem(e, "c^2")));
  const Reduction r = reduce_to_I(e, span(e, "{a}"), 0);
  CHECK(r.theta == parse_base(e.rs(), "{a}"));
  CHECK(r.w == 0);
  CHECK(r.y == 0);
  CHECK(s.stable_class_of(span(e, "D"), 0) >= 0);
  CHECK(s.I().classes[s.stable_class_of(span(e, "D"), 0)].orbit_size == 1);

  const Engine& g = oracle::engine(g2);
  const StableClassifier sg(oracle::triples(g2, false));
  CHECK(sg.I().classes.size() == 11);
  CHECK(sg.stable_class_of(span(g, "{3a+2b}"), elem(g, "w_a")) ==
        sg.stable_class_of(span(g, "{b}"), elem(g, "c^3")));
  CHECK(StableClassifier(oracle::triples({"A1", 0}, false)).I().classes.size() == 3);

  // same id at both Sp4 vertices carrying (empty, c^2)
  std::set<int> ids;
  for (const auto& row : s.rows())
    if (row.triple.sub == e.subsystems().find(RootSet()) && row.triple.w == elem(e, "c^2"))
      ids.insert(row.stable_id);
  CHECK(ids.size() == 1);
  const Engine& u = oracle::engine(su3);
  const StableClassifier su(oracle::triples(su3, false));
  std::set<int> uids;
  int hits = 0;
  for (const auto& row : su.rows())
    if (row.triple.sub == u.subsystems().find(RootSet()) && row.triple.w == elem(u, "w_b w_a w_b")) {
      uids.insert(row.stable_id);
      ++hits;
    }
  CHECK(hits == 2);
  CHECK(uids.size() == 1);
}

TEST_CASE("embedding counts") {
  const Engine& e = oracle::engine(sp4);
  CHECK(embedding_count(e, node_facet(e, {0, 2}), RootSet(), elem(e, "c^2")).count == 2);
  const Engine& g = oracle::engine(g2);
  CHECK(embedding_count(g, node_facet(g, {0, 1}), RootSet(), elem(g, "c^3")).count == 3);
  const Engine& u = oracle::engine(su3);
  CHECK(embedding_count(u, node_facet(u, {0}), RootSet(), elem(u, "w_b w_a w_b")).count == 3);
  for (const auto& c : {sp4, g2, su3}) {
    const StableClassifier s(oracle::triples(c, false));
    for (const auto& row : s.rows()) {
      const auto& m = row.embeddings;
      CHECK(m.count >= 1);
      CHECK(m.count * m.product_order == m.twisted_order);
      if (m.twisted_order == m.product_order) CHECK(m.count == 1);
    }
  }
}

TEST_CASE("generalized levis") {
  CHECK(oracle::genlevi(sp4).extras().size() == 2);
  CHECK(oracle::genlevi({"Sp4", 2}).extras().size() == 5);
  CHECK(oracle::genlevi(g2).extras().size() == 3);
  CHECK(oracle::genlevi({"G2", 3}).extras().size() == 5);

  const GenLeviClassifier& two = oracle::genlevi({"Sp4", 2});
  const TripleClassifier& t = two.triples();
  auto extra = [&](int cls) {
    const Vec x = two.extras();
    return std::find(x.begin(), x.end(), cls) != x.end();
  };
  const int a = cls_of(t, {2}, "{a,a+b}", "w_b");
  const int b = cls_of(t, {0}, "{a,-a-b}", "w_{2a+b}");
  CHECK(a >= 0);
  CHECK(b >= 0);
  CHECK((a >= 0 && extra(a)));
  CHECK((b >= 0 && extra(b)));

  const GenLeviClassifier& gen = oracle::genlevi(sp4);
  const TripleClassifier& gt = gen.triples();
  CHECK(cls_of(gt, {}, "{b,b+2a}", "1") >= 0);
  CHECK(cls_of(gt, {1}, "{b,b+2a}", "w_a") >= 0);

  // generic classes sit inside the char p lists
  for (const auto& [lo, hi] : {std::pair{sp4, oracle::Case{"Sp4", 2}}, std::pair{g2, oracle::Case{"G2", 3}}}) {
    const TripleClassifier& x = oracle::genlevi(lo).triples();
    const TripleClassifier& y = oracle::genlevi(hi).triples();
    for (const auto& c : x.classes()) {
      const RootSet& m = x.engine().subsystems()[c.sub].members;
      CHECK(y.class_of(c.facet, y.engine().subsystems().find(m), c.w) >= 0);
    }
  }
  // tori classes are generalized Levi classes
  const TripleClassifier& tori = oracle::triples(sp4, false);
  for (const auto& c : tori.classes()) {
    const RootSet& m = tori.engine().subsystems()[c.sub].members;
    CHECK(gt.class_of(c.facet, gt.engine().subsystems().find(m), c.w) >= 0);
  }
}

TEST_CASE("containment") {
  const GenLeviClassifier& g = oracle::genlevi(sp4);
  const TripleClassifier& t = g.triples();
  const int n = static_cast<int>(g.classes().size());
  for (int a = 0; a < n; ++a) CHECK(g.contains(a, a));
  const int top = cls_of(t, {}, "D", "1");
  REQUIRE(top >= 0);
  for (int a = 0; a < n; ++a) CHECK(g.contains(a, top));
  const int torus = cls_of(t, {0, 2}, "{}", "c^2");
  const int big = cls_of(t, {1}, "{b,b+2a}", "w_a");
  REQUIRE(torus >= 0);
  REQUIRE(big >= 0);
  CHECK(g.contains(torus, big) == oracle::contains_by_witness(g, torus, big));
  CHECK_FALSE(g.contains(top, torus));
}
