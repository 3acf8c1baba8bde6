#include <doctest.h>

#include "oracles.hpp"

using namespace urlevi;

namespace {

void require_ok(const oracle::Report& r) {
  INFO(r.summary());
  CHECK(r.ok());
  CHECK(r.checks > 0);
}

std::string label(const oracle::Case& c) { return c.group + " char " + char_tag(c.residue_char); }

}  // namespace

TEST_CASE("finite pair partitions match the double loop") {
  for (const auto& c : oracle::triple_cases()) {
    SUBCASE(label(c).c_str()) { require_ok(oracle::finite_partition(oracle::engine(c))); }
  }
}

TEST_CASE("facet and global partitions match the definitions") {
  for (const auto& c : oracle::triple_cases()) {
    SUBCASE(label(c).c_str()) {
      const auto& t = oracle::triples(c, false);
      require_ok(oracle::facet_partitions(t));
      require_ok(oracle::global_partition(t));
    }
  }
  for (const auto& c : oracle::genlevi_cases()) {
    SUBCASE(("generalized " + label(c)).c_str()) {
      const auto& t = oracle::triples(c, true);
      require_ok(oracle::facet_partitions(t));
      require_ok(oracle::global_partition(t));
    }
  }
}

TEST_CASE("elliptic triples have elliptic tori") {
  for (const auto& c : oracle::triple_cases()) {
    SUBCASE(label(c).c_str()) {
      require_ok(oracle::elliptic_implies_torus(oracle::triples(c, false)));
    }
  }
  for (const auto& c : oracle::genlevi_cases()) {
    SUBCASE(("generalized " + label(c)).c_str()) {
      require_ok(oracle::elliptic_implies_torus(oracle::triples(c, true)));
    }
  }
}

TEST_CASE("ellipticity is dimension maximality") {
  for (const auto& c : oracle::triple_cases()) {
    SUBCASE(label(c).c_str()) {
      require_ok(oracle::ellipticity_is_dimension_max(oracle::triples(c, false)));
    }
  }
  for (const auto& c : oracle::genlevi_cases()) {
    SUBCASE(("generalized " + label(c)).c_str()) {
      require_ok(oracle::ellipticity_is_dimension_max(oracle::triples(c, true)));
    }
  }
}

TEST_CASE("reductions: normal W_theta and unique y") {
  for (const auto& c : oracle::triple_cases()) {
    SUBCASE(label(c).c_str()) {
      const auto& t = oracle::triples(c, false);
      require_ok(oracle::reductions(t));
      require_ok(oracle::twisted_subgroups(t));
    }
  }
}

TEST_CASE("radius 4 and 6 agree") {
  for (const auto& c : oracle::triple_cases()) {
    SUBCASE(label(c).c_str()) { require_ok(oracle::radius_stability(c.group, c.residue_char, 4, 6)); }
  }
}

TEST_CASE("contains is a preorder and matches the witness search") {
  for (const auto& c : oracle::genlevi_cases()) {
    SUBCASE(label(c).c_str()) {
      require_ok(oracle::containment(oracle::genlevi(c)));
    }
  }
}
