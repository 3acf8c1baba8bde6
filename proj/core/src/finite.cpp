#include "urlevi/finite.hpp"

#include "urlevi/union_find.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace urlevi {

namespace {

int perm_order(const Vec& p) {
  std::vector<char> seen(p.size(), 0);
  int ord = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool key_less(const Vec& ba, int wa, const Vec& bb, int wb) {
  if (ba.size() != bb.size()) return ba.size() < bb.size();
  if (ba != bb) return ba < bb;
  return wa < wb;
}

}  // namespace

std::vector<long long> characteristic_polynomial(const std::vector<Vec>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  std::vector<std::vector<long long>> mk(n, std::vector<long long>(n, 0)), prod(n, std::vector<long long>(n));
  for (int k = 1; k <= n; ++k) {
    // prod = m * mk + c[k-1] I, then c[k] = -tr(m * prod) / k
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long s = (i == j) ? c[k - 1] : 0;
        for (int t = 0; t < n; ++t) s += m[i][t] * mk[t][j];
        prod[i][j] = s;
      }
    long long tr = 0;
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) tr += m[i][t] * prod[t][i];
    c[k] = -tr / k;
    mk = prod;
  }
  return c;
}

std::string poly_string(const std::vector<long long>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= n; ++i) {
    const long long a = c[i];
    if (a == 0) continue;
    const int deg = n - i;
    if (a < 0) out << "-";
    else if (!first) out << "+";
    const long long m = a < 0 ? -a : a;
    if (m != 1 || deg == 0) out << m;
    if (deg >= 1) out << "x";
    if (deg >= 2) out << "^" << deg;
    first = false;
  }
  return first ? "0" : out.str();
}

std::string Descriptor::str() const {
  std::ostringstream out;
  out << type << "|" << twist_order_span << "|" << twist_order << "|" << poly_string(charpoly);
  return out.str();
}

Descriptor describe(const Engine& e, const RootSet& span, int w) {
  const RootSystem& rs = e.rs();
  const WeylGroup& W = e.W();
  const FrobeniusAction& fr = e.fr();
  Descriptor d;
  d.type = subsystem_type(rs, base_of_subsystem(rs, span));
  const int winv = W.inv(w);
  Vec tau(rs.size());
  for (int r = 0; r < rs.size(); ++r) tau[r] = W.act(winv, fr.act_root(r));
  d.twist_order = perm_order(tau);
  const Vec members = to_list(span);
  Vec local(members.size());
  for (size_t i = 0; i < members.size(); ++i) {
    const auto it = std::find(members.begin(), members.end(), tau[members[i]]);
    if (it == members.end()) throw Error("describe: span is not stable under w^-1 Fr");
    local[i] = static_cast<int>(it - members.begin());
  }
  d.twist_order_span = perm_order(local);
  const auto mw = W.matrix(winv);
  const int l = rs.rank;
  std::vector<Vec> m(l, Vec(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (int k = 0; k < l; ++k) m[i][j] += mw[i][k] * fr.linear[k][j];
  d.charpoly = characteristic_polynomial(m);
  return d;
}

int PairPartition::pair_index(const Vec& base, int w) const {
  const auto it = base_index.find(to_set(base));
  if (it == base_index.end()) return -1;
  const std::pair<int, int> key{it->second, w};
  const auto p = std::lower_bound(pairs.begin(), pairs.end(), key);
  return (p != pairs.end() && *p == key) ? static_cast<int>(p - pairs.begin()) : -1;
}

int PairPartition::class_of(const Vec& base, int w) const {
  const int i = pair_index(base, w);
  return i < 0 ? -1 : cls[i];
}

PairPartition partition_pairs(const Engine& e, std::vector<Vec> bases) {
  const WeylGroup& W = e.W();
  const FrobeniusAction& fr = e.fr();
  const RootSystem& rs = e.rs();
  for (Vec& b : bases) std::sort(b.begin(), b.end());
  std::sort(bases.begin(), bases.end(),
            [](const Vec& a, const Vec& b) { return key_less(a, 0, b, 0); });
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

  PairPartition out;
  out.bases = bases;
  const int nb = static_cast<int>(bases.size());
  for (int i = 0; i < nb; ++i) out.base_index.emplace(to_set(bases[i]), i);

  for (int i = 0; i < nb; ++i) {
    const RootSet target = fr.act(to_set(bases[i]));
    for (int w = 0; w < W.order(); ++w) {
      bool ok = true;
      for (int r : bases[i])
        if (!target.test(W.act(w, r))) {
          ok = false;
          break;
        }
      if (ok) out.pairs.emplace_back(i, w);
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end());

  // stabilizer generators and one transporter per reachable base
  std::vector<Vec> stab_gens(nb);
  std::vector<std::vector<std::pair<int, int>>> transport(nb);
  for (int i = 0; i < nb; ++i) {
    Vec stab;
    std::vector<int> seen(nb, 0);
    for (int n = 0; n < W.order(); ++n) {
      RootSet img;
      for (int r : bases[i]) img.set(W.act(n, r));
      const auto it = out.base_index.find(img);
      if (it == out.base_index.end()) continue;
      if (it->second == i) stab.push_back(n);
      else if (!seen[it->second]) {
        seen[it->second] = 1;
        transport[i].emplace_back(it->second, n);
      }
    }
    stab_gens[i] = generators_of(W, subgroup_from(W, stab));
  }

  const int np = static_cast<int>(out.pairs.size());
  UnionFind uf(np);
  auto move = [&](int p, int target_base, int n) {
    const int w = out.pairs[p].second;
    const int w2 = W.mul(W.mul(fr.act_w(n), w), W.inv(n));
    const auto it = std::lower_bound(out.pairs.begin(), out.pairs.end(), std::make_pair(target_base, w2));
    if (it == out.pairs.end() || *it != std::make_pair(target_base, w2))
      throw Error("internal: pair action left the admissible set");
    uf.unite(p, static_cast<int>(it - out.pairs.begin()));
  };
  for (int p = 0; p < np; ++p) {
    const int b = out.pairs[p].first;
    for (int n : stab_gens[b]) move(p, b, n);
    for (const auto& [b2, n] : transport[b]) move(p, b2, n);
  }
  out.cls = uf.labels();
  const int nc = np == 0 ? 0 : *std::max_element(out.cls.begin(), out.cls.end()) + 1;
  // pairs are sorted by (base index, w) and bases by key, so the first member is the minimum
  std::vector<int> first(nc, -1), size(nc, 0);
  for (int p = 0; p < np; ++p) {
    if (first[out.cls[p]] < 0) first[out.cls[p]] = p;
    ++size[out.cls[p]];
  }
  for (int c = 0; c < nc; ++c) {
    PairClass pc;
    pc.base = bases[out.pairs[first[c]].first];
    pc.w = out.pairs[first[c]].second;
    pc.orbit_size = size[c];
    pc.descriptor = describe(e, span_of_base(rs, pc.base), pc.w);
    out.classes.push_back(std::move(pc));
  }
  return out;
}

std::vector<Vec> simple_subsets(const RootSystem& rs) {
  std::vector<Vec> out;
  for (int mask = 0; mask < (1 << rs.rank); ++mask) {
    Vec b;
    for (int i = 0; i < rs.rank; ++i)
      if (mask >> i & 1) b.push_back(rs.simple[i]);
    out.push_back(std::move(b));
  }
  return out;
}

PairPartition enumerate_IG(const Engine& e) { return partition_pairs(e, simple_subsets(e.rs())); }

PairPartition enumerate_IGprime(const Engine& e) {
  std::vector<Vec> bases;
  for (int id : e.tilde_ids()) bases.push_back(e.subsystems()[id].base);
  return partition_pairs(e, bases);
}

std::vector<PairClass> prime_minus_levi(const Engine& e, const PairPartition& prime) {
  std::vector<PairClass> out;
  for (const PairClass& c : prime.classes) {
    const int id = e.subsystems().find(span_of_base(e.rs(), c.base));
    if (id < 0 || !e.subsystems()[id].parabolic) out.push_back(c);
  }
  return out;
}

}  // namespace urlevi
