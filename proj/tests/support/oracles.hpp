#pragma once

#include "urlevi/finite.hpp"
#include "urlevi/genlevi.hpp"
#include "urlevi/stable.hpp"

#include <string>
#include <vector>

// Brute-force counterparts of the classifiers. Nothing here uses union-find or generators.
namespace urlevi::oracle {

struct Report {
  long checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  void fail(const std::string& what) {
    if (failures.size() < 20) failures.push_back(what);
    else if (failures.size() == 20) failures.push_back("...");
  }
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) fail(what);
  }
  void merge(const Report& o) {
    checks += o.checks;
    for (const auto& f : o.failures) fail(f);
  }
  std::string summary() const;
};

// presets exercised by the property suites, with the residue characteristics that matter
struct Case {
  std::string group;
  int residue_char;
};
std::vector<Case> triple_cases();
std::vector<Case> genlevi_cases();

// built once per process and shared by every suite
const Engine& engine(const Case& c, int radius = 4);
const GenLeviClassifier& genlevi(const Case& c);
// tori universe, or the generalized one (which is genlevi(c).triples())
const TripleClassifier& triples(const Case& c, bool generalized);

// (i) pair partitions: enumerate_IG against a double loop over W (or direct W-orbits when
// |W| is too large for a double loop)
Report finite_partition(const Engine& e);
// (i) pairs at each facet, and ~_F against a double loop over W_F x W_F
Report facet_partitions(const TripleClassifier& t);
// (i) global relation against one transport step followed by ~_G
Report global_partition(const TripleClassifier& t);
// (ii) elliptic triple => (empty, w) elliptic; class ellipticity vs fixed vectors
Report elliptic_implies_torus(const TripleClassifier& t);
// (iii) with face lifts added, elliptic <=> maximal Fr-fixed dimension in the block;
// for Levi-type universes each block also holds exactly one elliptic class
Report ellipticity_is_dimension_max(const TripleClassifier& t);
// (iv) W_theta normal in the twisted group, unique y, on every reduction
Report reductions(const TripleClassifier& t);
// twisted_subgroup against a filter over all of W
Report twisted_subgroups(const TripleClassifier& t);
// (v) facet classes, W_F, W(F) and transports agree between two radii
Report radius_stability(const std::string& group, int residue_char, int r1, int r2);
// (vi) contains(): reflexive, transitive, equal to an exhaustive witness search
Report containment(const GenLeviClassifier& g);
bool contains_by_witness(const GenLeviClassifier& g, int a, int b);

}  // namespace urlevi::oracle
