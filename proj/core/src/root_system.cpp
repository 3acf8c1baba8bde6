#include "urlevi/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace urlevi {

std::string normalize_label(const std::string& label) {
  std::string s;
  for (char c : label)
    if (c != '_' && c != ' ') s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  return s;
}

namespace {

void set_cartan(RootSystem& rs) {
  const int l = rs.rank;
  rs.cartan.assign(l, Vec(l, 0));
  rs.d.assign(l, 1);
  for (int i = 0; i < l; ++i) rs.cartan[i][i] = 2;
  switch (rs.family) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) rs.cartan[i][i + 1] = rs.cartan[i + 1][i] = -1;
      break;
    case 'C':
      rs.cartan[0][1] = -2;
      rs.cartan[1][0] = -1;
      rs.d = {1, 2};
      break;
    case 'G':
      rs.cartan[0][1] = -3;
      rs.cartan[1][0] = -1;
      rs.d = {1, 3};
      break;
  }
}

Vec apply_simple(const RootSystem& rs, int i, const Vec& v) {
  Vec out = v;
  out[i] -= rs.coroot_pair(v, i);
  return out;
}

int height_of(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

RootSystem build_root_system(const std::string& label) {
  const std::string s = normalize_label(label);
  RootSystem rs;
  if (s.size() < 2 || !std::isdigit(static_cast<unsigned char>(s[1])))
    throw Error("unsupported root system label: " + label);
  rs.family = s[0];
  rs.rank = std::stoi(s.substr(1));
  const bool ok = (rs.family == 'A' && rs.rank >= 1 && rs.rank <= 8) ||
                  (rs.family == 'C' && rs.rank == 2) || (rs.family == 'G' && rs.rank == 2);
  if (!ok) throw Error("unsupported root system label: " + label);
  rs.label = std::string(1, rs.family) + std::to_string(rs.rank);
  set_cartan(rs);

  const int l = rs.rank;
  std::set<Vec> seen;
  std::deque<Vec> todo;
  for (int i = 0; i < l; ++i) {
    Vec e(l, 0);
    e[i] = 1;
    if (seen.insert(e).second) todo.push_back(e);
  }
  while (!todo.empty()) {
    Vec v = todo.front();
    todo.pop_front();
    for (int i = 0; i < l; ++i) {
      Vec w = apply_simple(rs, i, v);
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  rs.roots.assign(seen.begin(), seen.end());
  std::sort(rs.roots.begin(), rs.roots.end(), [](const Vec& a, const Vec& b) {
    const int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  const int n = rs.size();
  if (n > kMaxRoots) throw Error("root system too large: " + label);
  for (int r = 0; r < n; ++r) rs.lookup[rs.roots[r]] = r;
  rs.height.resize(n);
  rs.neg.resize(n);
  for (int r = 0; r < n; ++r) {
    rs.height[r] = height_of(rs.roots[r]);
    Vec m = rs.roots[r];
    for (int& x : m) x = -x;
    rs.neg[r] = rs.lookup.at(m);
  }
  rs.positive_root_count = n / 2;
  rs.highest_root = n - 1;
  rs.marks = rs.roots[rs.highest_root];
  rs.simple.resize(l);
  for (int i = 0; i < l; ++i) {
    Vec e(l, 0);
    e[i] = 1;
    rs.simple[i] = rs.lookup.at(e);
  }
  rs.refl.assign(n, Vec(n, -1));
  for (int s = 0; s < n; ++s)
    for (int r = 0; r < n; ++r) {
      const int c = rs.pair(r, s);
      Vec v = rs.roots[r];
      for (int i = 0; i < l; ++i) v[i] -= c * rs.roots[s][i];
      rs.refl[s][r] = rs.lookup.at(v);
    }
  return rs;
}

int RootSystem::index_of(const Vec& v) const {
  auto it = lookup.find(v);
  return it == lookup.end() ? -1 : it->second;
}

int RootSystem::inner(const Vec& x, const Vec& y) const {
  int s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += x[i] * y[j] * d[i] * cartan[i][j];
  return s;
}

bool RootSystem::is_long(int r) const { return norm(r) == norm(highest_root); }

bool RootSystem::simply_laced() const { return family == 'A'; }

int RootSystem::pair(int r, int s) const {
  return 2 * inner(roots[r], roots[s]) / norm(s);
}

int RootSystem::coroot_pair(const Vec& gamma, int j) const {
  int s = 0;
  for (int i = 0; i < rank; ++i) s += gamma[i] * cartan[j][i];
  return s;
}

RootSet to_set(const Vec& idx) {
  RootSet s;
  for (int i : idx) s.set(i);
  return s;
}

Vec to_list(const RootSet& s) {
  Vec out;
  for (int i = 0; i < kMaxRoots; ++i)
    if (s.test(i)) out.push_back(i);
  return out;
}

bool set_less(const RootSet& a, const RootSet& b) {
  const Vec la = to_list(a), lb = to_list(b);
  if (la.size() != lb.size()) return la.size() < lb.size();
  return la < lb;
}

RootSet span_of_base(const RootSystem& rs, const Vec& base) {
  RootSet members = to_set(base);
  std::deque<int> todo(base.begin(), base.end());
  while (!todo.empty()) {
    const int r = todo.front();
    todo.pop_front();
    for (int b : base) {
      const int x = rs.reflect(b, r);
      if (!members.test(x)) {
        members.set(x);
        todo.push_back(x);
      }
    }
  }
  return members;
}

bool is_symmetric(const RootSystem& rs, const RootSet& members) {
  for (int r : to_list(members))
    if (!members.test(rs.neg[r])) return false;
  return true;
}

bool is_closed(const RootSystem& rs, const RootSet& members) {
  const Vec list = to_list(members);
  for (int a : list)
    for (int b : list) {
      Vec sum = rs.roots[a];
      for (int i = 0; i < rs.rank; ++i) sum[i] += rs.roots[b][i];
      const int c = rs.index_of(sum);
      if (c >= 0 && !members.test(c)) return false;
    }
  return true;
}

Vec base_of_subsystem(const RootSystem& rs, const RootSet& members) {
  if (!is_symmetric(rs, members)) throw Error("root subset is not symmetric");
  Vec pos;
  for (int r : to_list(members))
    if (rs.positive(r)) pos.push_back(r);
  const RootSet pset = to_set(pos);
  Vec base;
  for (int g : pos) {
    bool decomposable = false;
    for (int a : pos) {
      Vec rest = rs.roots[g];
      for (int i = 0; i < rs.rank; ++i) rest[i] -= rs.roots[a][i];
      const int b = rs.index_of(rest);
      if (b >= 0 && pset.test(b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) base.push_back(g);
  }
  return base;
}

std::string subsystem_type(const RootSystem& rs, const Vec& base) {
  if (base.empty()) return "T";
  const int k = static_cast<int>(base.size());
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (int s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<int> todo{s};
    comp[s] = ncomp;
    while (!todo.empty()) {
      const int x = todo.front();
      todo.pop_front();
      for (int y = 0; y < k; ++y)
        if (comp[y] < 0 && rs.pair(base[x], base[y]) != 0) {
          comp[y] = ncomp;
          todo.push_back(y);
        }
    }
    ++ncomp;
  }
  std::vector<std::string> names;
  for (int c = 0; c < ncomp; ++c) {
    Vec nodes;
    for (int s = 0; s < k; ++s)
      if (comp[s] == c) nodes.push_back(base[s]);
    const int size = static_cast<int>(nodes.size());
    int maxbond = 0, maxdeg = 0;
    for (int a : nodes) {
      int deg = 0;
      for (int b : nodes) {
        if (a == b) continue;
        const int m = rs.pair(a, b) * rs.pair(b, a);
        if (m > 0) ++deg;
        maxbond = std::max(maxbond, m);
      }
      maxdeg = std::max(maxdeg, deg);
    }
    std::string name;
    if (maxbond == 3) name = "G2";
    else if (maxbond == 2) name = "C" + std::to_string(size);
    else if (maxdeg >= 3) name = (size >= 6 ? "E" : "D") + std::to_string(size);
    else name = "A" + std::to_string(size);
    if (!rs.simply_laced() && name[0] == 'A') name += rs.is_long(nodes[0]) ? "l" : "s";
    names.push_back(name);
  }
  std::sort(names.begin(), names.end());
  std::string out;
  for (size_t i = 0; i < names.size(); ++i) out += (i ? "x" : "") + names[i];
  return out;
}

}  // namespace urlevi
