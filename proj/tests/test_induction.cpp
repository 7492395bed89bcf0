#include "doctest.h"
#include "oracles.hpp"

#include "nilorb/induction.hpp"
#include "nilorb/orbit.hpp"

#include <random>

using namespace nilorb;

namespace {

std::vector<int> random_composition(int n, std::mt19937_64& rng) {
  std::vector<int> c;
  while (n > 0) {
    const int x = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    c.push_back(x);
    n -= x;
  }
  return c;
}

InductionDatum random_datum(int n, EpsClass eps, std::mt19937_64& rng) {
  InductionDatum d;
  int r = n;
  do {
    r = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
  } while ((n - r) % 2 || (eps == EpsClass::Minus && r % 2));
  d.levi.r = r;
  d.levi.blocks = random_composition((n - r) / 2, rng);
  for (int p : d.levi.blocks) d.gl_orbits.push_back(oracle::random_partition(p, rng));
  d.base_orbit = oracle::random_in_class(r, eps, rng);
  return d;
}

}  // namespace

TEST_CASE("type A induction examples") {
  CHECK(induce_A({{4}}, {Partition{3, 1}}) == Partition{3, 1});
  CHECK(induce_A({{2, 2}}, {Partition{1, 1}, Partition{1, 1}}) == Partition{2, 2});
  CHECK(induce_A({{2, 3}}, {Partition{1, 1}, Partition{2, 1}}) == Partition{3, 2});
  CHECK_THROWS_AS(induce_A({{2, 3}}, {Partition{1, 1}, Partition{2}}), std::invalid_argument);
  CHECK_THROWS_AS(induce_A({{2, 3}}, {Partition{1, 1}}), std::invalid_argument);
}

TEST_CASE("type A induction: row sums equal dual-concat-dual") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const auto comp = random_composition(n, rng);
    std::vector<Partition> orbits;
    for (int p : comp) orbits.push_back(oracle::random_partition(p, rng));
    CHECK(induce_A({comp}, orbits) == oracle::induce_A(orbits));
  }
}

TEST_CASE("BCD induction examples") {
  CHECK(induce_BCD(11, EpsClass::Plus, {{{3}, 5}, {Partition{1, 1, 1}}, Partition{2, 2, 1}}) == Partition{4, 4, 3});
  CHECK(induce_BCD(6, EpsClass::Plus, {{{1}, 4}, {Partition{1}}, Partition{2, 2}}) == Partition{3, 3});
  CHECK(induce_BCD(8, EpsClass::Plus, {{{2}, 4}, {Partition{1, 1}}, Partition{2, 2}}) == Partition{4, 4});
  CHECK(induce_BCD(7, EpsClass::Plus, {{{}, 7}, {}, Partition{3, 3, 1}}) == Partition{3, 3, 1});
  CHECK_THROWS_AS(induce_BCD(8, EpsClass::Plus, {{{2}, 3}, {Partition{1, 1}}, Partition{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(induce_BCD(8, EpsClass::Minus, {{{2}, 4}, {Partition{1, 1}}, Partition{3, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(induce_BCD(8, EpsClass::Plus, {{{2}, 4}, {Partition{2}, Partition{1}}, Partition{4}}),
                  std::invalid_argument);
}

TEST_CASE("the zero orbit of a Borel Levi induces the regular orbit") {
  for (int n = 2; n <= 12; ++n)
    for (auto eps : {EpsClass::Plus, EpsClass::Minus}) {
      if (eps == EpsClass::Minus && n % 2) continue;
      const int l = n / 2;
      const int r = n - 2 * l;
      InductionDatum d{{std::vector<int>(static_cast<std::size_t>(l), 1), r}, {}, Partition{}};
      for (int i = 0; i < l; ++i) d.gl_orbits.push_back(Partition{1});
      if (r) d.base_orbit = Partition{1};
      const Partition reg = induce_BCD(n, eps, d);
      const Algebra a = eps == EpsClass::Plus ? Algebra::so(n) : Algebra::sp(n);
      if (n >= 3) CHECK(reg == regular_orbit(a).partition());
    }
}

TEST_CASE("codimension is preserved") {
  CHECK(codim_preserved(11, EpsClass::Plus, {{{3}, 5}, {Partition{1, 1, 1}}, Partition{2, 2, 1}},
                        Partition{4, 4, 3}));
  CHECK(codim_preserved(4, EpsClass::Plus, {{{1}, 2}, {Partition{1}}, Partition{1, 1}}, Partition{3, 1}));
  CHECK(codim_preserved({{5}}, {Partition{3, 2}}, Partition{3, 2}));
  std::mt19937_64 rng(42);
  for (auto eps : {EpsClass::Plus, EpsClass::Minus})
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 16);
      if (eps == EpsClass::Minus && n % 2) continue;
      const auto d = random_datum(n, eps, rng);
      const Partition out = induce_BCD(n, eps, d);
      CHECK(in_eps_class(out, eps));
      CHECK(codim_preserved(n, eps, d, out));
    }
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const auto comp = random_composition(n, rng);
    std::vector<Partition> orbits;
    for (int p : comp) orbits.push_back(oracle::random_partition(p, rng));
    CHECK(codim_preserved({comp}, orbits, induce_A({comp}, orbits)));
  }
}

TEST_CASE("induction is monotone in the Levi orbit") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    auto d = random_datum(n, EpsClass::Plus, rng);
    auto e = d;
    std::vector<int> ones(static_cast<std::size_t>(d.levi.r), 1);
    e.base_orbit = make_partition(std::span<const int>(ones));
    CHECK(dominates(induce_BCD(n, EpsClass::Plus, d), induce_BCD(n, EpsClass::Plus, e)));
  }
}

TEST_CASE("predicates") {
  CHECK(thmA_predicate(Partition{3, 1}));
  CHECK_FALSE(thmA_predicate(Partition{2, 2}));
  CHECK_FALSE(thmA_predicate(Partition{5}));
  CHECK_FALSE(thmBCD_predicate(Partition{4, 4, 3}));
  CHECK(thmBCD_predicate(Partition{5, 2, 2}));
  CHECK_FALSE(thmBCD_predicate(Partition{1, 1, 1}));
}

TEST_CASE("induced-from-little sets: small cases") {
  CHECK(induced_from_little_set(6, EpsClass::Plus) == std::set<Partition>{{2, 2, 1, 1}, {3, 3}});
  CHECK(induced_from_little_set(6, EpsClass::Minus) ==
        std::set<Partition>{{2, 1, 1, 1, 1}, {2, 2, 1, 1}, {4, 1, 1}});
  CHECK(induced_from_little_set(5, EpsClass::Plus) == std::set<Partition>{{2, 2, 1}});
  CHECK(induced_from_little_set(4, EpsClass::Plus) == std::set<Partition>{{2, 2}});
  CHECK(induced_from_little_set(6, EpsClass::Minus, LeviScope::AllLevis).count(Partition{4, 2}));
  CHECK(induced_from_little_set(11, EpsClass::Plus).count(Partition{4, 4, 3}));
  CHECK(induced_from_little_set(0, EpsClass::Plus).empty());
  CHECK_THROWS_AS(induced_from_little_set(5, EpsClass::Minus), std::invalid_argument);
  CHECK_THROWS_AS(induced_from_little_set(5, EpsClass::A), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_little_set(15, EpsClass::Plus), std::invalid_argument);
}

TEST_CASE("dynamic programme agrees with brute force") {
  for (auto scope : {LeviScope::PublishedTables, LeviScope::AllLevis})
    for (int n = 0; n <= 10; ++n)
      for (auto eps : {EpsClass::Plus, EpsClass::Minus}) {
        if (eps == EpsClass::Minus && n % 2) continue;
        CAPTURE(n);
        CHECK(induced_from_little_set(n, eps, scope) == brute_force_little_set(n, eps, scope));
      }
}

TEST_CASE("type A: induced from little means non-rectangular") {
  for (int n = 3; n <= 12; ++n) {
    std::set<Partition> expected;
    for (const auto& p : enumerate(n, EpsClass::A))
      if (thmA_predicate(p)) expected.insert(p);
    CHECK(brute_force_little_set_A(n) == expected);
  }
}

TEST_CASE("two-jump predicate implies membership") {
  for (int n = 1; n <= 16; ++n)
    for (auto eps : {EpsClass::Plus, EpsClass::Minus}) {
      if (eps == EpsClass::Minus && n % 2) continue;
      const auto& s = induced_from_little_set(n, eps, LeviScope::AllLevis);
      for (const auto& p : enumerate(n, eps))
        if (thmBCD_predicate(p)) CHECK(s.count(p));
    }
}

TEST_CASE("the published scope is contained in the complete one") {
  for (int n = 1; n <= 20; ++n)
    for (auto eps : {EpsClass::Plus, EpsClass::Minus}) {
      if (eps == EpsClass::Minus && n % 2) continue;
      const auto& pub = induced_from_little_set(n, eps, LeviScope::PublishedTables);
      const auto& all = induced_from_little_set(n, eps, LeviScope::AllLevis);
      for (const auto& p : pub) CHECK(all.count(p));
      if (eps == EpsClass::Plus) CHECK(pub == all);
    }
}

TEST_CASE("S is closed under one-step induction") {
  for (int n = 2; n <= 12; ++n)
    for (auto eps : {EpsClass::Plus, EpsClass::Minus}) {
      if (eps == EpsClass::Minus && n % 2) continue;
      const auto& big = induced_from_little_set(n, eps, LeviScope::AllLevis);
      for (int p = 1; 2 * p <= n; ++p) {
        const int r = n - 2 * p;
        for (const auto& nu : induced_from_little_set(r, eps, LeviScope::AllLevis))
          for (const auto& mu : enumerate(p, EpsClass::A))
            CHECK(big.count(induce_BCD(n, eps, {{{p}, r}, {mu}, nu})));
      }
    }
}

TEST_CASE("every member has a replayable certificate") {
  for (int n = 1; n <= 14; ++n)
    for (auto eps : {EpsClass::Plus, EpsClass::Minus}) {
      if (eps == EpsClass::Minus && n % 2) continue;
      const Algebra a = eps == EpsClass::Plus ? Algebra::so(n) : Algebra::sp(n);
      for (auto scope : {LeviScope::PublishedTables, LeviScope::AllLevis}) {
        const auto& s = induced_from_little_set(n, eps, scope);
        for (const auto& p : enumerate(n, eps)) {
          const auto cert = classical_certificate(a, p, scope);
          CHECK(cert.has_value() == static_cast<bool>(s.count(p)));
          if (!cert) continue;
          CHECK(cert->target == p);
          CHECK(verify_certificate(*cert));
          if (scope == LeviScope::PublishedTables && !partition_is_little(p, eps))
            CHECK_FALSE((cert->datum.levi.blocks.size() == 1 && cert->datum.levi.r == 0));
          const auto round = certificate_from_json(certificate_to_json(*cert));
          CHECK(round.target == cert->target);
          CHECK(certificate_to_json(round) == certificate_to_json(*cert));
        }
      }
    }
}

TEST_CASE("certificate JSON schema") {
  const auto cert = classical_certificate(Algebra::so(11), Partition{4, 4, 3});
  REQUIRE(cert);
  const auto j = certificate_to_json(*cert);
  for (const char* key : {"algebra", "target", "levi", "gl_orbits", "base_orbit", "little_factor_index"})
    CHECK(j.contains(key));
  CHECK(j["levi"].contains("blocks"));
  CHECK(j["levi"].contains("r"));
  CHECK(j["target"] == nlohmann::json::array({4, 4, 3}));
  auto bad = *cert;
  bad.target = Partition{5, 3, 3};
  CHECK_FALSE(verify_certificate(bad));
  auto not_little = *cert;
  not_little.little_factor_index = 99;
  CHECK_FALSE(verify_certificate(not_little));
}

TEST_CASE("rc2 status") {
  CHECK(rc2_status(Orbit::parse("sl6:3,3")).verdict == Rc2Verdict::Unknown);
  CHECK(rc2_status(Orbit::parse("sl6:3,2,1")).verdict == Rc2Verdict::ProvenAllM);
  const auto s = rc2_status(Orbit::parse("so11:4,4,3"));
  CHECK(s.verdict == Rc2Verdict::ProvenAllM);
  REQUIRE(s.certificate);
  CHECK(verify_certificate(*s.certificate));
  const auto b2 = rc2_status(Orbit::parse("F4:B2"));
  CHECK(b2.verdict == Rc2Verdict::ProvenAllM);
  CHECK(b2.exceptional_witness == "min@{2,3,4}");
  CHECK(rc2_status(Orbit::parse("sp4:2,2")).verdict == Rc2Verdict::Unknown);
  CHECK(rc2_status(Orbit::parse("F4:B3")).verdict == Rc2Verdict::Unknown);
  CHECK(rc2_status(Orbit::parse("E8:0")).verdict == Rc2Verdict::Unknown);
  for (int n = 2; n <= 10; ++n)
    for (const auto& o : all_orbits(Algebra::sl(n))) {
      const auto st = rc2_status(o);
      CHECK((st.verdict == Rc2Verdict::ProvenAllM) == thmA_predicate(o.partition()));
      if (st.certificate) CHECK(verify_certificate(*st.certificate));
    }
}
