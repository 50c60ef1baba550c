#include <catch_amalgamated.hpp>

#include <cstdlib>

#include "hopfcat/commutator.hpp"
#include "hopfcat/constructors.hpp"
#include "hopfcat/errors.hpp"
#include "hopfcat/suite.hpp"

using namespace hopfcat;

namespace {

SuiteConfig small(std::vector<std::string> groups) {
  SuiteConfig cfg;
  cfg.groups = std::move(groups);
  cfg.fields = {FieldSpec::rationals(), FieldSpec::prime(2)};
  return cfg;
}

const PropertyResult& prop(const SuiteReport& r, const std::string& name) {
  for (const PropertyResult& p : r.properties) {
    if (p.name == name) return p;
  }
  FAIL("no property " << name);
  throw;
}

}  // namespace

TEST_CASE("suite output is deterministic") {
  SuiteConfig cfg = small({"C2", "C3", "S3"});
  std::string a = run_suite(cfg).to_string();
  CHECK(a == run_suite(cfg).to_string());
  cfg.seed = 99;
  SuiteReport r = run_suite(cfg);
  CHECK(r.ok());
  CHECK(r.properties.size() == 21);
}

TEST_CASE("suite restricted to C2") {
  SuiteReport r = run_suite(small({"C2"}));
  CHECK(r.ok());
  CHECK(prop(r, "peiffer-necessity").cases == 0);
  CHECK(prop(r, "commutator-oracle").cases > 0);
  // Every commutator in K[C2] is the trivial subalgebra.
  for (const FieldSpec& k : {FieldSpec::rationals(), FieldSpec::prime(2)}) {
    HopfPtr a = group_algebra(catalog_group("C2"), k);
    HopfSubalgebra w = HopfSubalgebra::whole(a);
    HopfSubalgebra t = HopfSubalgebra::trivial(a);
    for (const HopfSubalgebra* x : {&w, &t}) {
      for (const HopfSubalgebra* y : {&w, &t}) CHECK(huq_commutator(*x, *y).closure.dim() == 1);
    }
  }
}

TEST_CASE("antipode fault injection is caught") {
  SuiteConfig cfg = small({"C2", "S3"});
  cfg.inject_antipode_fault = true;
  SuiteReport r = run_suite(cfg);
  const PropertyResult& p = prop(r, "antipode");
  CHECK(p.failures > 0);
  REQUIRE(p.witness.has_value());
  CHECK(p.witness->find("\"axiom\":\"antipode\"") != std::string::npos);
  CHECK(r.to_string().find("WITNESS ") != std::string::npos);
  CHECK_FALSE(r.ok());
}

TEST_CASE("suite configuration errors") {
  CHECK_THROWS_AS(run_suite(small({"A5"})), UnknownGroupError);
  SuiteConfig cfg;
  setenv("HOPFCAT_SEED", "12345", 1);
  apply_seed_override(cfg);
  CHECK(cfg.seed == 12345);
  setenv("HOPFCAT_SEED", "abc", 1);
  CHECK_THROWS_AS(apply_seed_override(cfg), MalformedInputError);
  unsetenv("HOPFCAT_SEED");
}
