#include "nilorb/excdata.hpp"

#include "nilorb/induction.hpp"
#include "nilorb/rootsys.hpp"
#include "nilorb_embedded_data.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nilorb {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string_view embedded_exceptional_csv() { return embedded::kExceptionalCsv; }

int expected_record_count(Family type) {
  switch (type) {
    case Family::G2: return 3;
    case Family::F4: return 14;
    case Family::E6: return 19;
    case Family::E7: return 43;
    case Family::E8: return 68;
    default: return 0;
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (char c : line) {
    if (c == '"')
      quoted = !quoted;
    else if (c == ',' && !quoted)
      cells.emplace_back();
    else if (c != '\r')
      cells.back() += c;
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV line: " + line);
  return cells;
}

std::vector<int> parse_int_list(std::string_view text, char open, char close) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw std::invalid_argument("expected " + std::string(1, open) + "..." + std::string(1, close) + ", got '" +
                                std::string(text) + "'");
  std::vector<int> out;
  std::stringstream in(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

bool yes_no(const std::string& s, const char* yes, const char* no) {
  if (s == yes) return true;
  if (s == no) return false;
  throw std::invalid_argument("expected '" + std::string(yes) + "' or '" + no + "', got '" + s + "'");
}

Family parse_family(const std::string& s) {
  const Algebra a = Algebra::parse(s);
  if (a.classical()) throw std::invalid_argument("not an exceptional type: " + s);
  return a.family();
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

ExceptionalTables ExceptionalTables::from_csv(std::string_view text, std::string source) {
  ExceptionalTables t;
  t.source_ = std::move(source);
  t.checksum_ = fnv1a64(text);
  std::istringstream in{std::string(text)};
  std::string line;
  std::getline(in, line);
  const auto header = split_csv_line(line);
  if (header.size() < 10 || header[0] != "type" || header[9] != "little")
    throw std::invalid_argument("exceptional data: unexpected header '" + line + "'");
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto c = split_csv_line(line);
    if (c.size() < 10)
      throw std::invalid_argument("exceptional data line " + std::to_string(line_no) + ": too few columns");
    try {
      ExceptionalOrbitRecord r;
      r.type = parse_family(c[0]);
      r.label = c[1];
      r.characteristic = parse_int_list(c[2], '[', ']');
      r.dim = std::stoi(c[3]);
      r.rc1 = yes_no(c[4], "Yes", "No");
      r.rc1_reason = c[5];
      r.rc2 = yes_no(c[6], "Yes", "Unknown") ? Rc2Table::Yes : Rc2Table::Unknown;
      r.rc2_witness = c[7];
      r.rigid = yes_no(c[8], "yes", "no");
      r.little = yes_no(c[9], "yes", "no");
      if (c.size() > 10) r.notes = c[10];
      t.records_.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw std::invalid_argument("exceptional data line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return t;
}

const ExceptionalTables& ExceptionalTables::instance() {
  static const ExceptionalTables tables = [] {
    if (const char* path = std::getenv("NILORB_EXCEPTIONAL_DATA"); path && *path) {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error(std::string("cannot read NILORB_EXCEPTIONAL_DATA file ") + path);
      std::stringstream buf;
      buf << f.rdbuf();
      return from_csv(buf.str(), path);
    }
    return from_csv(embedded::kExceptionalCsv, "embedded");
  }();
  return tables;
}

std::vector<const ExceptionalOrbitRecord*> ExceptionalTables::of_type(Family type) const {
  std::vector<const ExceptionalOrbitRecord*> out;
  for (const auto& r : records_)
    if (r.type == type) out.push_back(&r);
  return out;
}

const ExceptionalOrbitRecord* ExceptionalTables::find(Family type, std::string_view label) const {
  for (const auto& r : records_)
    if (r.type == type && r.label == label) return &r;
  return nullptr;
}

const ExceptionalOrbitRecord* ExceptionalTables::find_by_characteristic(Family type,
                                                                        const std::vector<int>& c) const {
  for (const auto& r : records_)
    if (r.type == type && r.characteristic == c) return &r;
  return nullptr;
}

const ExceptionalOrbitRecord& ExceptionalTables::lookup(Family type, std::string_view label) const {
  if (const auto* r = find(type, label)) return *r;
  std::vector<std::string> near;
  const std::string want = lower(label);
  for (const auto* r : of_type(type)) {
    const std::string have = lower(r->label);
    if (have == want || edit_distance(have, want) <= 2 ||
        (want.size() >= 2 && have.find(want) != std::string::npos))
      near.push_back(r->label);
  }
  std::string msg = "unknown " + Algebra::exceptional(type).name() + " orbit '" + std::string(label) + "'";
  if (!near.empty()) {
    msg += "; near matches:";
    for (std::size_t i = 0; i < near.size() && i < 6; ++i) msg += (i ? ", " : " ") + near[i];
  }
  throw std::out_of_range(msg);
}

std::vector<const ExceptionalOrbitRecord*> ExceptionalTables::list(Family type, OrbitFilter filter) const {
  std::vector<const ExceptionalOrbitRecord*> out;
  for (const auto* r : of_type(type)) {
    bool keep = true;
    switch (filter) {
      case OrbitFilter::All: break;
      case OrbitFilter::Little: keep = r->little; break;
      case OrbitFilter::Rigid: keep = r->rigid; break;
      case OrbitFilter::Rc2Unknown: keep = r->rc2 == Rc2Table::Unknown; break;
    }
    if (keep) out.push_back(r);
  }
  return out;
}

const ExceptionalOrbitRecord& lookup(Family type, std::string_view label) {
  return ExceptionalTables::instance().lookup(type, label);
}

std::vector<const ExceptionalOrbitRecord*> list_orbits(Family type, OrbitFilter filter) {
  return ExceptionalTables::instance().list(type, filter);
}

Witness parse_witness(std::string_view text) {
  const auto at = text.find('@');
  if (at == std::string_view::npos) throw std::invalid_argument("witness '" + std::string(text) + "' has no '@'");
  Witness w;
  for (int node : parse_int_list(text.substr(at + 1), '{', '}')) w.nodes.insert(node);
  std::string_view factors = text.substr(0, at);
  while (true) {
    const auto bar = factors.find('|');
    const std::string f(factors.substr(0, bar));
    WitnessFactor wf{WitnessFactor::Kind::Minimal, {}, {}};
    if (f == "min") {
      wf.kind = WitnessFactor::Kind::Minimal;
    } else if (!f.empty() && f.front() == '[') {
      wf.kind = WitnessFactor::Kind::Characteristic;
      wf.characteristic = parse_int_list(f, '[', ']');
    } else if (!f.empty() && f.front() == '(' && f.back() == ')') {
      wf.kind = WitnessFactor::Kind::Partition;
      wf.partition = parse_partition(f);
    } else {
      throw std::invalid_argument("witness factor '" + f + "' is not min, [characteristic] or (partition)");
    }
    w.factors.push_back(std::move(wf));
    if (bar == std::string_view::npos) break;
    factors = factors.substr(bar + 1);
  }
  return w;
}

namespace {

// Classical characteristics named by partition in the tables' notes (D6) or
// standard (C3).
std::optional<Partition> classical_characteristic(const Algebra& a, const std::vector<int>& c) {
  static const std::map<std::pair<std::string, std::vector<int>>, std::vector<int>> known = {
      {{"so12", {0, 0, 0, 0, 2, 0}}, {2, 2, 2, 2, 2, 2}},
      {{"so12", {0, 0, 0, 0, 0, 2}}, {2, 2, 2, 2, 2, 2}},
      {{"so12", {0, 2, 0, 0, 2, 0}}, {4, 4, 2, 2}},
      {{"so12", {0, 2, 0, 0, 0, 2}}, {4, 4, 2, 2}},
      {{"so12", {0, 2, 0, 2, 2, 0}}, {6, 6}},
      {{"so12", {0, 2, 0, 2, 0, 2}}, {6, 6}},
      {{"sp6", {0, 1, 0}}, {2, 2, 1, 1}},
  };
  auto it = known.find({a.name(), c});
  if (it == known.end()) return std::nullopt;
  return make_partition(it->second);
}

struct FactorInfo {
  int dim = 0;
  bool certified = false;  // little, or induced from an orbit with a little factor
};

FactorInfo replay_factor(const ExceptionalTables& tables, const DynkinComponent& comp, const WitnessFactor& f) {
  const Algebra a = component_algebra(comp);
  auto classical_info = [&](const Partition& p) {
    if (p.size() != a.n() || !in_eps_class(p, a.eps()))
      throw std::invalid_argument("(" + p.to_string() + ") is not an orbit of " + a.name());
    FactorInfo info{partition_orbit_dim(p, a.eps()), partition_is_little(p, a.eps())};
    if (!info.certified) {
      if (a.eps() == EpsClass::A)
        info.certified = thmA_predicate(p);
      else
        info.certified = induced_from_little_set(a.n(), a.eps(), LeviScope::AllLevis).count(p) > 0;
    }
    return info;
  };
  switch (f.kind) {
    case WitnessFactor::Kind::Minimal: {
      if (a.classical()) {
        const Orbit o = minimal_orbit(a);
        return {orbit_dim(o), is_little(o)};
      }
      const auto rows = tables.of_type(a.family());
      if (rows.empty()) throw std::invalid_argument("no table for " + a.name());
      return {rows.front()->dim, rows.front()->little};
    }
    case WitnessFactor::Kind::Partition: {
      if (!a.classical()) throw std::invalid_argument("partition factor on exceptional component " + a.name());
      return classical_info(f.partition);
    }
    case WitnessFactor::Kind::Characteristic: {
      if (static_cast<int>(f.characteristic.size()) != comp.rank)
        throw std::invalid_argument("characteristic length does not match component " + a.name());
      if (a.classical()) {
        const auto p = classical_characteristic(a, f.characteristic);
        if (!p) throw std::invalid_argument("unrecognized characteristic for " + a.name());
        return classical_info(*p);
      }
      const auto* rec = tables.find_by_characteristic(a.family(), f.characteristic);
      if (!rec) throw std::invalid_argument("no " + a.name() + " orbit with that characteristic");
      return {rec->dim, rec->little || rec->rc2 == Rc2Table::Yes};
    }
  }
  return {};
}

}  // namespace

ValidationReport validate_tables(const ExceptionalTables& tables) {
  ValidationReport report;
  auto fail = [&](const ExceptionalOrbitRecord* r, const std::string& msg) {
    std::string where = r ? Algebra::exceptional(r->type).name() + " " + r->label + ": " : "";
    report.violations.push_back(where + msg);
  };
  const std::map<Family, int> min_dims = {
      {Family::G2, 6}, {Family::F4, 16}, {Family::E6, 22}, {Family::E7, 34}, {Family::E8, 58}};
  for (const auto& [type, min_dim] : min_dims) {
    const Algebra g = Algebra::exceptional(type);
    const auto rows = tables.of_type(type);
    if (static_cast<int>(rows.size()) != expected_record_count(type))
      fail(nullptr, g.name() + " has " + std::to_string(rows.size()) + " records, expected " +
                        std::to_string(expected_record_count(type)));
    if (rows.empty()) continue;
    if (rows.front()->dim != min_dim || !rows.front()->little)
      fail(rows.front(), "minimal orbit should have dim " + std::to_string(min_dim) + " and be little");
    const RootSystem rs = RootSystem::build(g.root_type(), g.rank());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto* r = rows[i];
      ++report.records_checked;
      if (i > 0 && r->dim < rows[i - 1]->dim) fail(r, "dimension decreases down the table");
      for (std::size_t j = 0; j < i; ++j) {
        if (rows[j]->label == r->label) fail(r, "duplicate label");
        if (rows[j]->characteristic == r->characteristic) fail(r, "duplicate characteristic");
      }
      if (static_cast<int>(r->characteristic.size()) != g.rank() ||
          std::any_of(r->characteristic.begin(), r->characteristic.end(), [](int v) { return v < 0 || v > 2; }))
        fail(r, "characteristic must have one entry in {0,1,2} per node");
      if (r->dim <= 0 || r->dim % 2 != 0 || r->dim >= g.dim() - g.rank())
        fail(r, "dimension out of range for a non-zero, non-regular orbit");
      const bool little = r->dim > 0 && 2 * r->dim <= g.dim();
      if (little != r->little) fail(r, "little flag disagrees with 2 dim <= dim g");
      if (r->little && r->rc2 != Rc2Table::Yes) fail(r, "little orbit must have RC2");
      if ((r->rc1 && r->rc1_reason == "little") != r->little) fail(r, "RC1 reason 'little' iff little");
      if (r->rc1 && r->rc1_reason.empty()) fail(r, "RC1 Yes without a reason");
      if (!r->rc1 && !r->rc1_reason.empty()) fail(r, "RC1 No with a reason");
      if (r->rc1_reason.rfind("restriction:", 0) == 0) {
        const std::string rest = r->rc1_reason.substr(12);
        const auto colon = rest.find(':');
        try {
          const Algebra amb = Algebra::parse(rest.substr(0, colon));
          const auto& big = tables.lookup(amb.family(), rest.substr(colon + 1));
          if (2 * big.dim > amb.dim() - 1) fail(r, "restriction ambient orbit fails 2 dim <= dim g - 1");
        } catch (const std::exception& e) {
          fail(r, std::string("bad restriction reason: ") + e.what());
        }
      }
      if ((r->rc2 == Rc2Table::Yes) == r->rc2_witness.empty()) fail(r, "RC2 Yes needs a witness, Unknown none");
      if (r->rc2 != Rc2Table::Yes || r->rc2_witness == "little") {
        if (r->rc2_witness == "little" && !r->little) fail(r, "witness 'little' on a non-little orbit");
        continue;
      }
      if (r->rigid) fail(r, "rigid orbit cannot be induced");
      try {
        const Witness w = parse_witness(r->rc2_witness);
        if (static_cast<int>(w.nodes.size()) != g.rank() - 1)
          throw std::invalid_argument("node subset is not a maximal Levi");
        const auto comps = dynkin_components(rs, w.nodes);
        if (comps.size() != w.factors.size())
          throw std::invalid_argument(std::to_string(w.factors.size()) + " factors for " +
                                      std::to_string(comps.size()) + " components");
        int orbit_sum = 0;
        bool certified = false;
        for (std::size_t k = 0; k < comps.size(); ++k) {
          const FactorInfo info = replay_factor(tables, comps[k], w.factors[k]);
          orbit_sum += info.dim;
          certified = certified || info.certified;
        }
        const int replayed = g.dim() - levi_dim(rs, w.nodes) + orbit_sum;
        if (replayed != r->dim)
          throw std::invalid_argument("dimension replay gives " + std::to_string(replayed));
        if (!certified) throw std::invalid_argument("no factor is little or induced from little");
        ++report.witnesses_replayed;
      } catch (const std::exception& e) {
        fail(r, "witness '" + r->rc2_witness + "': " + e.what());
      }
    }
  }
  return report;
}

ValidationReport validate_tables() { return validate_tables(ExceptionalTables::instance()); }

}  // namespace nilorb
