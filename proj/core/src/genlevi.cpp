#include "urlevi/genlevi.hpp"

#include <algorithm>

namespace urlevi {

GenLeviClassifier::GenLeviClassifier(const Engine& e)
    : e_(&e), triples_(std::make_unique<TripleClassifier>(e, e.tilde_ids())) {
  const TripleClassifier& t = *triples_;
  members_.resize(t.classes().size());
  for (int nd = 0; nd < t.node_count(); ++nd) {
    const auto [f, p] = t.triple_of(nd);
    if (!t.at(f).elliptic(p)) continue;
    const int c = t.block_class(t.global_block(nd));
    members_[c].emplace_back(f, p);
  }
  const SubsystemTable& table = e.subsystems();
  const int n = static_cast<int>(t.universe().size());
  supersets_.resize(n);
  for (int a = 0; a < n; ++a) {
    const RootSet& ma = table[t.universe()[a]].members;
    const Vec& ba = table[t.universe()[a]].base;
    Vec fast, slow;
    for (int b = 0; b < n; ++b) {
      const RootSet& mb = table[t.universe()[b]].members;
      if ((ma & ~mb).any()) continue;
      const Vec& bb = table[t.universe()[b]].base;
      (std::includes(bb.begin(), bb.end(), ba.begin(), ba.end()) ? fast : slow).push_back(b);
    }
    fast.insert(fast.end(), slow.begin(), slow.end());
    supersets_[a] = std::move(fast);
  }
}

bool GenLeviClassifier::generalized(int cls) const {
  return !e_->subsystems()[classes()[cls].sub].parabolic;
}

Vec GenLeviClassifier::extras() const {
  Vec out;
  for (int c = 0; c < static_cast<int>(classes().size()); ++c)
    if (generalized(c)) out.push_back(c);
  return out;
}

bool GenLeviClassifier::contains(int a, int b) const {
  const TripleClassifier& t = *triples_;
  const Apartment& apt = e_->apartment();
  for (const auto& [fb, pb] : members_[b]) {
    const auto [posb, wb] = t.at(fb).pairs[pb];
    for (const auto& [fa, pa] : members_[a]) {
      if (!apt.in_closure(fa, fb)) continue;
      const FacetPairs& at = t.at(fa);
      const int lifted = at.find(posb, wb);
      if (lifted < 0) throw Error("internal: pair does not restrict to a facet in the closure");
      const int target = at.cls[lifted];
      const auto [posa, wa] = at.pairs[pa];
      for (int pos : supersets_[posa]) {
        const int q = at.find(pos, wa);
        if (q >= 0 && at.cls[q] == target) return true;
      }
    }
  }
  return false;
}

std::vector<std::pair<int, int>> GenLeviClassifier::containment_edges() const {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(classes().size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && contains(a, b)) out.emplace_back(a, b);
  return out;
}

}  // namespace urlevi
