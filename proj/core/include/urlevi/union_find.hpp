#pragma once

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <map>
#include <vector>

namespace urlevi {

class UnionFind {
 public:
  explicit UnionFind(int n) : n_(n), sets_(n) {}
  void unite(int a, int b) { sets_.union_set(a, b); }
  int find(int a) { return static_cast<int>(sets_.find_set(a)); }
  bool same(int a, int b) { return find(a) == find(b); }

  // blocks sorted internally and ordered by their smallest member
  std::vector<std::vector<int>> blocks() {
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < n_; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
  }

  // block index of every element, blocks numbered as in blocks()
  std::vector<int> labels() {
    std::vector<int> lab(n_, -1);
    int next = 0;
    for (const auto& b : blocks()) {
      for (int x : b) lab[x] = next;
      ++next;
    }
    return lab;
  }

 private:
  int n_;
  boost::disjoint_sets_with_storage<> sets_;
};

}  // namespace urlevi
