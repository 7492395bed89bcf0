#include "doctest.h"

#include "nilorb/excdata.hpp"
#include "nilorb/orbit.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

using namespace nilorb;

namespace {

std::set<std::string> labels(const std::vector<const ExceptionalOrbitRecord*>& rows) {
  std::set<std::string> out;
  for (const auto* r : rows) out.insert(r->label);
  return out;
}

bool mentions(const ValidationReport& rep, const std::string& needle) {
  return std::any_of(rep.violations.begin(), rep.violations.end(),
                     [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("record counts") {
  const auto& t = ExceptionalTables::instance();
  CHECK(t.of_type(Family::G2).size() == 3);
  CHECK(t.of_type(Family::F4).size() == 14);
  CHECK(t.of_type(Family::E6).size() == 19);
  CHECK(t.of_type(Family::E7).size() == 43);
  CHECK(t.of_type(Family::E8).size() == 68);
  CHECK(t.records().size() == 147);
  for (auto f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8})
    CHECK(t.of_type(f).size() == static_cast<std::size_t>(expected_record_count(f)));
}

TEST_CASE("embedded data is pinned by checksum") {
  CHECK(fnv1a64(embedded_exceptional_csv()) == ExceptionalTables::instance().checksum());
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  std::ifstream in(NILORB_SOURCE_DIR "/data/exceptional_orbits.csv", std::ios::binary);
  REQUIRE(in);
  const std::string file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(fnv1a64(file) == fnv1a64(embedded_exceptional_csv()));
}

TEST_CASE("lookup") {
  const auto& a1 = lookup(Family::G2, "A1");
  CHECK(a1.dim == 6);
  CHECK(a1.rc1);
  CHECK(a1.rc1_reason == "little");
  CHECK(a1.rigid);
  const auto& e8a1 = lookup(Family::E8, "E8(a1)");
  CHECK(e8a1.dim == 238);
  CHECK(e8a1.rc2 == Rc2Table::Yes);
  CHECK(e8a1.rc2_witness == "(11,3)@{2,3,4,5,6,7,8}");
  const auto& f4a3 = lookup(Family::F4, "F4(a3)");
  CHECK(f4a3.dim == 40);
  CHECK(f4a3.rc2_witness == "[0,1,0]@{2,3,4}");
  CHECK(lookup(Family::G2, "~A1").rc1 == false);
  CHECK(ExceptionalTables::instance().find(Family::G2, "B7") == nullptr);
  const auto* by_char = ExceptionalTables::instance().find_by_characteristic(Family::F4, {0, 2, 0, 0});
  REQUIRE(by_char != nullptr);
  CHECK(by_char->label == "F4(a3)");
}

TEST_CASE("unknown labels list near matches") {
  try {
    lookup(Family::F4, "F4(a4)");
    FAIL("expected out_of_range");
  } catch (const std::out_of_range& e) {
    const std::string msg = e.what();
    CHECK(msg.find("F4(a3)") != std::string::npos);
  }
  CHECK_THROWS_AS(lookup(Family::E6, "Z9"), std::out_of_range);
}

TEST_CASE("filters") {
  CHECK(labels(list_orbits(Family::G2, OrbitFilter::Little)) == std::set<std::string>{"A1"});
  CHECK(labels(list_orbits(Family::F4, OrbitFilter::Rc2Unknown)) ==
        std::set<std::string>{"A1+~A1", "A2", "~A2", "A2+~A1", "~A2+A1", "B3", "C3"});
  CHECK(labels(list_orbits(Family::E6, OrbitFilter::Rigid)) == std::set<std::string>{"A1", "3A1", "2A2+A1"});
  CHECK(list_orbits(Family::E8, OrbitFilter::All).size() == 68);
}

TEST_CASE("table invariants") {
  const auto& t = ExceptionalTables::instance();
  const std::vector<std::pair<Family, int>> minimal{
      {Family::G2, 6}, {Family::F4, 16}, {Family::E6, 22}, {Family::E7, 34}, {Family::E8, 58}};
  for (auto [f, d] : minimal) {
    const auto rows = t.of_type(f);
    CHECK(rows.front()->dim == d);
    CHECK(rows.front()->little);
    const Algebra a = Algebra::exceptional(f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto* r = rows[i];
      CHECK(r->little == (2 * r->dim <= a.dim()));
      CHECK((r->rc1_reason == "little") == r->little);
      CHECK(r->characteristic.size() == static_cast<std::size_t>(a.rank()));
      if (i) CHECK(rows[i - 1]->dim <= r->dim);
      if (r->rc2 == Rc2Table::Yes) CHECK_FALSE(r->rc2_witness.empty());
    }
    CHECK(rows.back()->dim == a.dim() - a.rank() - 2);
  }
}

TEST_CASE("witness parsing") {
  const Witness w = parse_witness("(3,1^7)|(1^3)@{1,2,3,4,5,7,8}");
  REQUIRE(w.factors.size() == 2);
  CHECK(w.factors[0].kind == WitnessFactor::Kind::Partition);
  CHECK(w.factors[0].partition == Partition{3, 1, 1, 1, 1, 1, 1, 1});
  CHECK(w.factors[1].partition == Partition{1, 1, 1});
  CHECK(w.nodes == std::set<int>{1, 2, 3, 4, 5, 7, 8});
  const Witness m = parse_witness("min@{2,3,4}");
  REQUIRE(m.factors.size() == 1);
  CHECK(m.factors[0].kind == WitnessFactor::Kind::Minimal);
  const Witness c = parse_witness("[0,1,0]@{2,3,4}");
  CHECK(c.factors[0].characteristic == std::vector<int>{0, 1, 0});
  CHECK_THROWS_AS(parse_witness("(3,1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_witness("foo@{1}"), std::invalid_argument);
}

TEST_CASE("validation of the shipped tables") {
  const ValidationReport rep = validate_tables();
  for (const auto& v : rep.violations) MESSAGE(v);
  CHECK(rep.ok());
  CHECK(rep.records_checked == 147);
  std::size_t with_witness = 0;
  for (const auto& r : ExceptionalTables::instance().records())
    with_witness += r.rc2 == Rc2Table::Yes && r.rc2_witness != "little";
  CHECK(rep.witnesses_replayed == with_witness);
}

TEST_CASE("mutations are detected") {
  const auto fresh = [] { return ExceptionalTables::from_csv(embedded_exceptional_csv(), "test"); };
  SUBCASE("dimension of a little orbit tampered") {
    auto t = fresh();
    for (auto& r : t.mutable_records())
      if (r.type == Family::G2 && r.label == "A1") r.dim += 1;
    const auto rep = validate_tables(t);
    CHECK_FALSE(rep.ok());
    CHECK(mentions(rep, "G2 A1"));
  }
  SUBCASE("little flag flipped") {
    auto t = fresh();
    for (auto& r : t.mutable_records())
      if (r.type == Family::E7 && r.label == "A1") r.little = false;
    CHECK_FALSE(validate_tables(t).ok());
  }
  SUBCASE("dimension raised past a large orbit") {
    auto t = fresh();
    for (auto& r : t.mutable_records())
      if (r.type == Family::F4 && r.label == "B2") r.dim = 44;
    const auto rep = validate_tables(t);
    CHECK(mentions(rep, "F4 B2"));
  }
  SUBCASE("witness partition changed") {
    auto t = fresh();
    for (auto& r : t.mutable_records())
      if (r.type == Family::E8 && r.label == "E8(a1)") r.rc2_witness = "(9,5)@{2,3,4,5,6,7,8}";
    CHECK(mentions(validate_tables(t), "E8(a1)"));
  }
  SUBCASE("row removed") {
    auto t = fresh();
    auto& rows = t.mutable_records();
    rows.erase(std::find_if(rows.begin(), rows.end(), [](const auto& r) { return r.type == Family::E6; }));
    CHECK_FALSE(validate_tables(t).ok());
  }
  SUBCASE("rigid orbit claims a witness") {
    auto t = fresh();
    for (auto& r : t.mutable_records())
      if (r.type == Family::E6 && r.label == "3A1") {
        r.rc2 = Rc2Table::Yes;
        r.rc2_witness = "min@{1,2,3,4,5}";
      }
    CHECK(mentions(validate_tables(t), "3A1"));
  }
}

TEST_CASE("malformed CSV is rejected") {
  CHECK_THROWS(ExceptionalTables::from_csv("type,label\nG2,A1\n", "bad"));
  CHECK_THROWS(ExceptionalTables::from_csv(
      "type,label,characteristic,dim,rc1,rc1_reason,rc2,rc2_witness,rigid,little,notes\n"
      "G2,A1,\"[0,1]\",six,Yes,little,Yes,little,yes,yes,\n",
      "bad"));
}
