#include "doctest.h"
#include "oracles.hpp"

#include "nilorb/orbit.hpp"

#include <algorithm>

using namespace nilorb;

namespace {

Orbit cl(const Algebra& a, std::initializer_list<int> p) { return Orbit::classical(a, Partition(p)); }

std::vector<Algebra> classical_algebras(int max_rank) {
  std::vector<Algebra> out;
  for (int l = 1; l <= max_rank; ++l) {
    out.push_back(Algebra::sl(l + 1));
    out.push_back(Algebra::so(2 * l + 1));
    out.push_back(Algebra::sp(2 * l));
    if (l >= 4) out.push_back(Algebra::so(2 * l));
  }
  return out;
}

}  // namespace

TEST_CASE("algebra dimensions") {
  CHECK(Algebra::sl(6).dim() == 35);
  CHECK(Algebra::sp(4).dim() == 10);
  CHECK(Algebra::exceptional(Family::E7).dim() == 133);
  CHECK(Algebra::exceptional(Family::G2).dim() == 14);
  CHECK(Algebra::so(12).dim() == 66);
  CHECK(Algebra::parse("so12") == Algebra::so(12));
  CHECK(Algebra::parse("E7") == Algebra::exceptional(Family::E7));
  CHECK_THROWS_AS(Algebra::sp(5), std::invalid_argument);
  CHECK_THROWS_AS(Algebra::parse("su3"), std::invalid_argument);
}

TEST_CASE("orbit parsing") {
  CHECK(Orbit::parse("sl6:3,3").partition() == Partition{3, 3});
  CHECK(Orbit::parse("so8:2^4:I").tag() == VeryEvenTag::I);
  CHECK(Orbit::parse("E7:A4+A1").label() == "A4+A1");
  CHECK(Orbit::parse("so8:2^4:II").to_string() == "so8:2,2,2,2:II");
  CHECK_THROWS_AS(Orbit::parse("so8:2^4"), std::invalid_argument);
  CHECK_THROWS_AS(Orbit::parse("so8:3,3,1,1:I"), std::invalid_argument);
  CHECK_THROWS_AS(Orbit::parse("so8:2,1^6"), std::invalid_argument);
  CHECK_THROWS_AS(Orbit::parse("sl6:3,2"), std::invalid_argument);
  CHECK_THROWS(Orbit::parse("E7:A9"));
}

TEST_CASE("orbit dimensions") {
  CHECK(orbit_dim(cl(Algebra::sp(4), {2, 2})) == 6);
  for (int p = 1; p <= 6; ++p) {
    std::vector<int> parts(static_cast<std::size_t>(p), 2);
    const Orbit o = Orbit::classical(Algebra::sl(2 * p), make_partition(std::span<const int>(parts)));
    CHECK(orbit_dim(o) == 2 * p * p);
  }
  CHECK(orbit_dim(cl(Algebra::so(8), {2, 2, 1, 1, 1, 1})) == 10);
  CHECK(orbit_dim(cl(Algebra::so(8), {1, 1, 1, 1, 1, 1, 1, 1})) == 0);
  CHECK(orbit_dim(Orbit::exceptional(Algebra::exceptional(Family::E8), "E8")) == 240);
  CHECK(orbit_dim(Orbit::exceptional(Algebra::exceptional(Family::F4), "0")) == 0);
  SUBCASE("formula agrees with the column-sum oracle") {
    for (int n = 1; n <= 14; ++n)
      for (auto eps : {EpsClass::A, EpsClass::Plus, EpsClass::Minus}) {
        if (eps == EpsClass::Minus && n % 2) continue;
        for (const auto& p : enumerate(n, eps)) CHECK(partition_orbit_dim(p, eps) == oracle::orbit_dim(p, eps));
      }
  }
  SUBCASE("regular orbit has dimension dim g - rank") {
    for (const auto& a : classical_algebras(12)) CHECK(orbit_dim(regular_orbit(a)) == a.dim() - a.rank());
  }
  SUBCASE("dimensions are even and grow along the closure order") {
    for (const auto& a : {Algebra::sl(7), Algebra::so(10), Algebra::sp(10), Algebra::so(9)}) {
      const auto all = all_orbits(a);
      for (const auto& o : all) {
        CHECK(orbit_dim(o) % 2 == 0);
        for (const auto& b : boundary(o)) CHECK(orbit_dim(b) < orbit_dim(o));
      }
    }
  }
}

TEST_CASE("closure order") {
  const auto a = Algebra::sl(6);
  CHECK(closure_leq(cl(a, {3, 3}), cl(a, {3, 3})));
  CHECK(closure_leq(cl(a, {2, 2, 1, 1}), cl(a, {3, 3})));
  CHECK_FALSE(closure_leq(cl(a, {3, 3}), cl(a, {2, 2, 1, 1})));
  const auto so8 = Algebra::so(8);
  const auto one = Orbit::classical(so8, Partition{2, 2, 2, 2}, VeryEvenTag::I);
  const auto two = Orbit::classical(so8, Partition{2, 2, 2, 2}, VeryEvenTag::II);
  CHECK_FALSE(closure_leq(one, two));
  CHECK_FALSE(closure_leq(two, one));
  CHECK(closure_leq(cl(so8, {2, 2, 1, 1, 1, 1}), one));
  CHECK_FALSE(closure_leq(one, cl(so8, {3, 1, 1, 1, 1, 1})));
  CHECK(closure_leq(one, cl(so8, {3, 2, 2, 1})));
  CHECK_THROWS_AS(closure_leq(cl(a, {3, 3}), cl(Algebra::sl(5), {3, 2})), std::invalid_argument);
  const auto g2 = Algebra::exceptional(Family::G2);
  CHECK_THROWS_AS(closure_leq(Orbit::exceptional(g2, "A1"), Orbit::exceptional(g2, "G2")), std::domain_error);
}

TEST_CASE("boundary") {
  const auto a = Algebra::sl(6);
  std::vector<Partition> got;
  for (const auto& o : boundary(cl(a, {3, 3}))) got.push_back(o.partition());
  std::vector<Partition> want{{3, 2, 1}, {3, 1, 1, 1}, {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
  CHECK(boundary(cl(a, {1, 1, 1, 1, 1, 1})).empty());
  const auto sp4 = Algebra::sp(4);
  got.clear();
  for (const auto& o : boundary(cl(sp4, {2, 2}))) got.push_back(o.partition());
  CHECK(got == std::vector<Partition>{{2, 1, 1}, {1, 1, 1, 1}});
}

TEST_CASE("littleness") {
  for (int p = 1; p <= 5; ++p)
    for (int q = 1; q <= 5; ++q) {
      std::vector<int> parts(static_cast<std::size_t>(p), 2);
      parts.insert(parts.end(), static_cast<std::size_t>(q), 1);
      const Partition l = make_partition(std::span<const int>(parts));
      CHECK(partition_is_little(l, EpsClass::A));
      if (q % 2 == 0) CHECK(partition_is_little(l, EpsClass::Minus) == (p <= q * (q + 1) / 2));
    }
  for (int n = 2; n <= 12; ++n)
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) {
        std::vector<int> parts(static_cast<std::size_t>(n / d), d);
        CHECK_FALSE(partition_is_little(make_partition(std::span<const int>(parts)), EpsClass::A));
      }
  CHECK(is_little(Orbit::exceptional(Algebra::exceptional(Family::F4), "A1")));
  CHECK_FALSE(is_little(cl(Algebra::sl(3), {1, 1, 1})));
}

TEST_CASE("rigidity") {
  CHECK(is_rigid(cl(Algebra::sp(4), {2, 1, 1})));
  CHECK_FALSE(is_rigid(cl(Algebra::so(6), {2, 2, 1, 1})));
  for (int n = 2; n <= 8; ++n)
    for (const auto& o : all_orbits(Algebra::sl(n))) CHECK(is_rigid(o) == o.is_zero());
  CHECK(is_rigid(Orbit::exceptional(Algebra::exceptional(Family::E6), "3A1")));
  CHECK_FALSE(is_rigid(Orbit::exceptional(Algebra::exceptional(Family::E6), "A2")));
}

TEST_CASE("distinguished orbits") {
  CHECK(regular_orbit(Algebra::sl(5)).partition() == Partition{5});
  CHECK(regular_orbit(Algebra::sp(8)).partition() == Partition{8});
  CHECK(regular_orbit(Algebra::so(10)).partition() == Partition{9, 1});
  CHECK(subregular_orbit(Algebra::sl(5)).partition() == Partition{4, 1});
  CHECK(subregular_orbit(Algebra::sp(4)).partition() == Partition{2, 2});
  CHECK(subregular_orbit(Algebra::so(7)).partition() == Partition{5, 1, 1});
  CHECK(minimal_orbit(Algebra::sl(6)).partition() == Partition{2, 1, 1, 1, 1});
  for (int n = 7; n <= 14; ++n) {
    const Orbit m = minimal_orbit(Algebra::so(n));
    std::vector<int> parts{2, 2};
    parts.insert(parts.end(), static_cast<std::size_t>(n - 4), 1);
    CHECK(m.partition() == make_partition(std::span<const int>(parts)));
    CHECK(orbit_dim(m) == 2 * n - 6);
  }
  CHECK(orbit_dim(minimal_orbit(Algebra::exceptional(Family::G2))) == 6);
  CHECK_THROWS_AS(subregular_orbit(Algebra::sl(2)), std::invalid_argument);
}

TEST_CASE("subregular dimension") {
  for (const auto& a : classical_algebras(12)) {
    if (a.rank() < 2) continue;
    CAPTURE(a.name());
    CHECK(orbit_dim(subregular_orbit(a)) == a.dim() - a.rank() - 2);
  }
  CHECK_THROWS_AS(subregular_orbit(Algebra::exceptional(Family::F4)), std::domain_error);
}

TEST_CASE("very even orbits are counted twice") {
  CHECK(all_orbits(Algebra::so(8)).size() == enumerate(8, EpsClass::Plus).size() + 2);
  CHECK(needs_tag(Algebra::so(8), Partition{2, 2, 2, 2}));
  CHECK_FALSE(needs_tag(Algebra::so(12), Partition{3, 3, 2, 2, 1, 1}));
}
