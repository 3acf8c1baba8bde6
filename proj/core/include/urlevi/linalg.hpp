#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <vector>

namespace urlevi {

using Q = boost::rational<long long>;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

struct Echelon {
  QMat rows;                // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

Echelon rref(QMat m);
int rank(const QMat& m);

// basis of {x : m x = 0}, one vector per row
QMat nullspace(const QMat& m, int ncols);

bool in_row_space(const Echelon& e, const QVec& v);
bool same_row_space(const Echelon& a, const Echelon& b);

QVec to_q(const std::vector<int>& v);

// Integer solution of a t = b with |t_i| <= radius, or nothing.
// Free variables are enumerated in the order 0, 1, -1, 2, -2, ...
std::optional<std::vector<long long>> solve_integer_in_box(const QMat& a, const QVec& b,
                                                           int ncols, int radius);

}  // namespace urlevi
