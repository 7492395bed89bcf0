#include "nilorb/rc.hpp"

#include "nilorb/excdata.hpp"
#include "nilorb/rootsys.hpp"
#include "nilorb_embedded_data.hpp"

#include <sstream>
#include <stdexcept>

namespace nilorb {

std::string_view to_string(Rc1Status s) {
  switch (s) {
    case Rc1Status::Yes: return "Yes";
    case Rc1Status::No: return "No";
    case Rc1Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(Rc1Reason r) {
  switch (r) {
    case Rc1Reason::Little: return "Little";
    case Rc1Reason::Restriction: return "Restriction";
    case Rc1Reason::SpecialCase2p: return "SpecialCase2p";
    case Rc1Reason::ExceptionalTable: return "ExceptionalTable";
    case Rc1Reason::None: return "None";
  }
  return "?";
}

namespace {

RootSystem root_system_of(const Algebra& a) { return RootSystem::build(a.root_type(), a.rank()); }

}  // namespace

Algebra levi_semisimple_part(const Algebra& ambient, const std::set<int>& subset) {
  const RootSystem rs = root_system_of(ambient);
  if (static_cast<int>(subset.size()) != ambient.rank() - 1)
    throw std::invalid_argument("restriction: Levi subset is not maximal");
  const auto comps = dynkin_components(rs, subset);
  if (comps.size() != 1) throw std::invalid_argument("restriction: semisimple part of the Levi is not simple");
  return component_algebra(comps.front());
}

RestrictionCheck restriction_check(const RestrictionDatum& d) {
  if (!(d.ambient_orbit.algebra() == d.ambient))
    throw std::invalid_argument("restriction: ambient orbit is not in " + d.ambient.name());
  const Algebra a = levi_semisimple_part(d.ambient, d.levi_subset);
  if (!(d.sub_orbit.algebra() == a))
    throw std::invalid_argument("restriction: sub-orbit " + d.sub_orbit.to_string() + " is not in " + a.name());
  RestrictionCheck c;
  c.cond_i = levi_condition_i(root_system_of(d.ambient), d.levi_subset);
  c.cond_ii = !d.sub_orbit.is_zero();
  c.lhs_iii = 2 * orbit_dim(d.ambient_orbit);
  c.rhs_iii = d.ambient.dim() - 1;
  c.cond_iii = c.lhs_iii <= c.rhs_iii;
  return c;
}

std::vector<RestrictionDatum> parse_restriction_csv(std::string_view text) {
  std::vector<RestrictionDatum> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells(1);
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"')
        quoted = !quoted;
      else if (ch == ',' && !quoted)
        cells.emplace_back();
      else if (ch != '\r')
        cells.back() += ch;
    }
    if (cells.size() != 5) throw std::invalid_argument("restriction registry: bad line '" + line + "'");
    const std::string& type = cells[0];
    Algebra ambient = type.size() > 1 && (type[0] == 'D' || type[0] == 'd')
                          ? Algebra::so(2 * std::stoi(type.substr(1)))
                          : Algebra::parse(type);
    std::set<int> subset;
    std::string nodes = cells[1];
    if (nodes.size() < 2 || nodes.front() != '{' || nodes.back() != '}')
      throw std::invalid_argument("restriction registry: bad node set '" + nodes + "'");
    std::stringstream ns(nodes.substr(1, nodes.size() - 2));
    for (std::string item; std::getline(ns, item, ',');) subset.insert(std::stoi(item));
    out.push_back(RestrictionDatum{ambient, subset, Orbit::parse(cells[2]), Orbit::parse(cells[3]),
                                   std::stoi(cells[4])});
  }
  return out;
}

const std::vector<RestrictionDatum>& restriction_registry() {
  static const std::vector<RestrictionDatum> registry = parse_restriction_csv(embedded::kRestrictionCsv);
  return registry;
}

Rc1Verdict rc1_status(const Orbit& o) {
  if (is_little(o)) return {Rc1Status::Yes, Rc1Reason::Little, 0};
  const Algebra& a = o.algebra();
  if (a.family() == Family::SL && a.n() >= 4 && a.n() % 2 == 0) {
    const Partition& p = o.partition();
    if (p.is_rectangular() && p[0] == 2) return {Rc1Status::Yes, Rc1Reason::SpecialCase2p, 0};
  }
  for (const auto& d : restriction_registry())
    if (d.sub_orbit == o && restriction_check(d).all())
      return {Rc1Status::Yes, Rc1Reason::Restriction, d.source_row};
  if (!a.classical() && !o.is_zero() && o.label() != a.name()) {
    const auto& rec = lookup(a.family(), o.label());
    return {rec.rc1 ? Rc1Status::Yes : Rc1Status::No, Rc1Reason::ExceptionalTable, 0};
  }
  return {};
}

int zero_fiber_lower_bound(const Orbit& o, int m) {
  if (o.is_zero()) throw std::invalid_argument("zero_fiber_lower_bound: zero orbit");
  if (m < 1) throw std::invalid_argument("zero_fiber_lower_bound: m >= 1 required");
  if (m == 1) return o.algebra().dim();
  return m * orbit_dim(o) + codim(o);
}

bool zero_fiber_forces_rc2(const Orbit& o, int m) {
  return zero_fiber_lower_bound(o, m) >= (m + 1) * orbit_dim(o);
}

}  // namespace nilorb
