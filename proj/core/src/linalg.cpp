#include "urlevi/linalg.hpp"

#include <cstdlib>

namespace urlevi {

Echelon rref(QMat m) {
  Echelon out;
  if (m.empty()) return out;
  const int ncols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < ncols && r < static_cast<int>(m.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (m[i][c].numerator() != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    const Q lead = m[r][c];
    for (auto& x : m[r]) x /= lead;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || m[i][c].numerator() == 0) continue;
      const Q f = m[i][c];
      for (int j = 0; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

int rank(const QMat& m) { return static_cast<int>(rref(m).rows.size()); }

QMat nullspace(const QMat& m, int ncols) {
  Echelon e = rref(m);
  std::vector<int> is_pivot(ncols, -1);
  for (size_t r = 0; r < e.pivots.size(); ++r) is_pivot[e.pivots[r]] = static_cast<int>(r);
  QMat basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f] >= 0) continue;
    QVec v(ncols, Q(0));
    v[f] = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const Echelon& e, const QVec& v) {
  QVec x = v;
  for (size_t r = 0; r < e.rows.size(); ++r) {
    const Q f = x[e.pivots[r]];
    if (f.numerator() == 0) continue;
    for (size_t j = 0; j < x.size(); ++j) x[j] -= f * e.rows[r][j];
  }
  for (const Q& q : x)
    if (q.numerator() != 0) return false;
  return true;
}

bool same_row_space(const Echelon& a, const Echelon& b) {
  return a.pivots == b.pivots && a.rows == b.rows;
}

QVec to_q(const std::vector<int>& v) {
  QVec out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x);
  return out;
}

namespace {

int step_value(int k) { return (k % 2 == 1) ? (k + 1) / 2 : -(k / 2); }

}  // namespace

std::optional<std::vector<long long>> solve_integer_in_box(const QMat& a, const QVec& b,
                                                           int ncols, int radius) {
  QMat aug;
  aug.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    QVec row = a[i];
    row.push_back(b[i]);
    aug.push_back(std::move(row));
  }
  Echelon e = rref(aug);
  for (int p : e.pivots)
    if (p == ncols) return std::nullopt;

  std::vector<int> is_pivot(ncols, 0);
  for (int p : e.pivots) is_pivot[p] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < ncols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  const int span = 2 * radius + 1;
  std::vector<int> odo(free_cols.size(), 0);
  std::vector<long long> t(ncols, 0);
  while (true) {
    for (size_t k = 0; k < free_cols.size(); ++k) t[free_cols[k]] = step_value(odo[k]);
    bool ok = true;
    for (size_t r = 0; r < e.rows.size() && ok; ++r) {
      Q v = e.rows[r][ncols];
      for (int f : free_cols) v -= e.rows[r][f] * Q(t[f]);
      if (v.denominator() != 1 || std::llabs(v.numerator()) > radius) ok = false;
      else t[e.pivots[r]] = v.numerator();
    }
    if (ok) return t;
    size_t k = 0;
    while (k < odo.size() && ++odo[k] == span) odo[k++] = 0;
    if (k == odo.size()) return std::nullopt;
  }
}

}  // namespace urlevi
