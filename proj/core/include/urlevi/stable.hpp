#pragma once

#include "urlevi/finite.hpp"
#include "urlevi/tori.hpp"

namespace urlevi {

struct Reduction {
  Vec theta;  // subset of the simple roots
  int w = 0;
  int n = 0;  // n^-1 maps the positive base into the simple roots
  int y = 0;  // the unique element of W_theta found on the way
};

// (Phi, w) with Fr(Phi) = w Phi and Phi parabolic -> a pair of I
Reduction reduce_to_I(const Engine& e, const RootSet& span, int w);

struct EmbeddingCount {
  int count = 0;
  int twisted_order = 0;   // |W_{w Fr, theta}|
  int stabilizer_order = 0;  // |W(F, theta, w)|
  int theta_order = 0;     // |W_theta|
  int product_order = 0;   // |W(F, theta, w) W_theta|
};

EmbeddingCount embedding_count(const Engine& e, int facet, const RootSet& span, int w);

struct StableRow {
  TripleClass triple;
  int stable_id = 0;  // index into the I classification
  EmbeddingCount embeddings;
};

class StableClassifier {
 public:
  explicit StableClassifier(const TripleClassifier& tori);
  const PairPartition& I() const { return I_; }
  int stable_class_of(const RootSet& span, int w) const;
  const std::vector<StableRow>& rows() const { return rows_; }

 private:
  const TripleClassifier* tori_;
  PairPartition I_;
  std::vector<StableRow> rows_;
};

}  // namespace urlevi
