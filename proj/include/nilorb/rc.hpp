#pragma once

#include "nilorb/orbit.hpp"

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

enum class Rc1Status { Yes, No, Unknown };
enum class Rc1Reason { Little, Restriction, SpecialCase2p, ExceptionalTable, None };

std::string_view to_string(Rc1Status s);
std::string_view to_string(Rc1Reason r);

struct Rc1Verdict {
  Rc1Status status = Rc1Status::Unknown;
  Rc1Reason reason = Rc1Reason::None;
  int restriction_row = 0;  // source row of the restriction registry, when reason is Restriction
};

/// A maximal Levi l_S of `ambient` whose semisimple part a is simple, an
/// orbit G.e of the ambient algebra and the orbit A.e of a.
struct RestrictionDatum {
  Algebra ambient;
  std::set<int> levi_subset;  // Bourbaki indices
  Orbit ambient_orbit;
  Orbit sub_orbit;
  int source_row = 0;
};

struct RestrictionCheck {
  bool cond_i = false;    // [l, l] contains a regular semisimple element of g
  bool cond_ii = false;   // A.e is non-zero
  bool cond_iii = false;  // 2 dim G.e <= dim g - dim z(l)
  int lhs_iii = 0;        // 2 dim G.e
  int rhs_iii = 0;        // dim g - 1
  bool all() const noexcept { return cond_i && cond_ii && cond_iii; }
};

/// Throws std::invalid_argument when the Levi is not maximal, its
/// semisimple part is not simple, or the sub-orbit lives in the wrong algebra.
RestrictionCheck restriction_check(const RestrictionDatum& d);

/// Algebra of the semisimple part of l_S (simple by assumption).
Algebra levi_semisimple_part(const Algebra& ambient, const std::set<int>& subset);

/// The restriction registry (embedded CSV, loaded once).
const std::vector<RestrictionDatum>& restriction_registry();
std::vector<RestrictionDatum> parse_restriction_csv(std::string_view text);

Rc1Verdict rc1_status(const Orbit& o);

/// Lower bound on the dimension of the fibre of J_m over the zero jet:
/// dim g for m = 1, m dim O + codim O for m >= 2. Throws for the zero orbit.
int zero_fiber_lower_bound(const Orbit& o, int m);

/// bound >= (m + 1) dim O, which for nonzero orbits is equivalent to littleness.
bool zero_fiber_forces_rc2(const Orbit& o, int m);

}  // namespace nilorb
