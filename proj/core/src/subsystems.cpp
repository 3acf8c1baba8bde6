#include "urlevi/subsystems.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace urlevi {

int SubsystemTable::add(const RootSet& members) {
  auto it = index_.find(members);
  if (it != index_.end()) return it->second;
  Subsystem s;
  s.members = members;
  s.base = base_of_subsystem(*rs_, members);
  if (span_of_base(*rs_, s.base) != members) throw Error("root subset is not a subsystem");
  s.type = subsystem_type(*rs_, s.base);
  s.closed = is_closed(*rs_, members);
  const int id = static_cast<int>(items_.size());
  items_.push_back(std::move(s));
  index_.emplace(members, id);
  return id;
}

int SubsystemTable::find(const RootSet& members) const {
  auto it = index_.find(members);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Vec> enumerate_theta(const WeylGroup& W) {
  const RootSystem& rs = W.rs();
  std::set<Vec> out;
  for (int mask = 0; mask < (1 << rs.rank); ++mask) {
    Vec rho;
    for (int i = 0; i < rs.rank; ++i)
      if (mask >> i & 1) rho.push_back(rs.simple[i]);
    for (int w = 0; w < W.order(); ++w) {
      Vec b;
      for (int r : rho) b.push_back(W.act(w, r));
      std::sort(b.begin(), b.end());
      out.insert(b);
    }
  }
  return {out.begin(), out.end()};
}

void sort_subsystems(const RootSystem& rs, std::vector<RootSet>& sets) {
  std::vector<std::pair<Vec, RootSet>> keyed;
  for (const auto& s : sets) {
    Vec b = base_of_subsystem(rs, s);
    Vec key{static_cast<int>(b.size())};
    key.insert(key.end(), b.begin(), b.end());
    keyed.emplace_back(std::move(key), s);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  sets.clear();
  for (auto& [k, s] : keyed) sets.push_back(s);
}

std::vector<RootSet> parabolic_subsystems(const WeylGroup& W) {
  const RootSystem& rs = W.rs();
  std::unordered_set<RootSet> seen;
  std::vector<RootSet> out;
  for (int mask = 0; mask < (1 << rs.rank); ++mask) {
    Vec rho;
    for (int i = 0; i < rs.rank; ++i)
      if (mask >> i & 1) rho.push_back(rs.simple[i]);
    const RootSet start = span_of_base(rs, rho);
    if (seen.count(start)) continue;
    seen.insert(start);
    std::vector<RootSet> orbit{start};
    for (size_t head = 0; head < orbit.size(); ++head)
      for (int i = 0; i < rs.rank; ++i) {
        const RootSet next = W.act(W.simple_reflection(i), orbit[head]);
        if (seen.insert(next).second) orbit.push_back(next);
      }
    out.insert(out.end(), orbit.begin(), orbit.end());
  }
  sort_subsystems(rs, out);
  return out;
}

std::vector<QuasiClosed> enumerate_quasi_closed(const RootSystem& rs, int char_p) {
  const int npos = rs.positive_root_count;
  if (npos > 16) throw Error("quasi-closed enumeration: rank too large for brute force (" + rs.label + ")");
  Vec pos;
  for (int r = 0; r < rs.size(); ++r)
    if (rs.positive(r)) pos.push_back(r);
  std::vector<RootSet> closed;
  for (long mask = 0; mask < (1L << npos); ++mask) {
    RootSet s;
    for (int i = 0; i < npos; ++i)
      if (mask >> i & 1) {
        s.set(pos[i]);
        s.set(rs.neg[pos[i]]);
      }
    if (is_closed(rs, s)) closed.push_back(s);
  }
  sort_subsystems(rs, closed);
  std::vector<QuasiClosed> out;
  for (const auto& s : closed) out.push_back({s, true, {}});

  const bool c2 = rs.label == "C2" && char_p == 2;
  const bool g2 = rs.label == "G2" && char_p == 3;
  if (c2 || g2) {
    RootSet shorts;
    for (int r = 0; r < rs.size(); ++r)
      if (!rs.is_long(r)) shorts.set(r);
    out.push_back({shorts, false, {char_p}});
  }
  return out;
}

}  // namespace urlevi
