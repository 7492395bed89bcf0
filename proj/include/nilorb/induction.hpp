#pragma once

#include "nilorb/orbit.hpp"
#include "nilorb/partition.hpp"

#include "json.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nilorb {

/// Levi of gl_n / sl_n: a composition of n.
struct LeviShapeA {
  std::vector<int> composition;
};

/// Levi gl_{p1} x ... x gl_{pk} x g(r) of so_n or sp_n, with 2 sum(p) + r = n.
struct LeviShapeBCD {
  std::vector<int> blocks;
  int r = 0;
  int total() const;
};

struct InductionDatum {
  LeviShapeBCD levi;
  std::vector<Partition> gl_orbits;  // one per block
  Partition base_orbit;              // in the eps-class of r
};

/// Row sums of the (zero-padded) partitions. Throws std::invalid_argument
/// when orbits[j] is not a partition of composition[j].
Partition induce_A(const LeviShapeA& levi, const std::vector<Partition>& orbits);

/// Checks the datum against (n, eps); throws std::invalid_argument.
void validate_datum(int n, EpsClass eps, const InductionDatum& datum);

/// Raw row sums of (l1..lk, mu, lk..l1), then collapse into the eps-class.
Partition induce_BCD(int n, EpsClass eps, const InductionDatum& datum);

/// codim in g of the induced orbit equals codim in the Levi of the factor orbits.
bool codim_preserved(int n, EpsClass eps, const InductionDatum& datum, const Partition& result);
bool codim_preserved(const LeviShapeA& levi, const std::vector<Partition>& orbits, const Partition& result);

/// Which Levi subalgebras the induced-from-little search ranges over.
///  AllLevis        : every Levi (p1..pk; r).
///  PublishedTables : leaves out the Levis (p; 0) with a single gl block and
///                    no classical factor. This reproduces the published
///                    statistics tables; it changes the symplectic counts only.
enum class LeviScope { AllLevis, PublishedTables };

/// S_eps(n): little partitions together with those induced from an orbit
/// with a little factor. Memoized and thread-safe.
const std::set<Partition>& induced_from_little_set(int n, EpsClass eps,
                                                   LeviScope scope = LeviScope::PublishedTables);

/// Independent enumeration over all Levi shapes and orbit tuples; n <= 14.
std::set<Partition> brute_force_little_set(int n, EpsClass eps,
                                           LeviScope scope = LeviScope::PublishedTables);

/// Type-A analogue: partitions of n that are little in sl_n or induced from
/// an orbit with a little factor, over every composition of n; n <= 14.
std::set<Partition> brute_force_little_set_A(int n);

/// Non-rectangular (at least two distinct part values).
bool thmA_predicate(const Partition& lambda);
/// Two positions k < l (with lambda_{t+1} = 0) where the part drops by at least 2.
bool thmBCD_predicate(const Partition& lambda);

/// A single induction datum whose orbit tuple has a little factor and
/// which induces `target`. For type A, `levi.blocks` is the composition,
/// `levi.r` is 0 and `base_orbit` is empty. `little_factor_index` indexes
/// the tuple (gl_orbits..., base_orbit). A little orbit certifies itself
/// through the trivial Levi g = g(n).
struct Rc2Certificate {
  Algebra algebra;
  Partition target;
  InductionDatum datum;
  int little_factor_index = 0;
};

/// Replays the datum and checks the flagged factor is little.
bool verify_certificate(const Rc2Certificate& cert);

nlohmann::json certificate_to_json(const Rc2Certificate& cert);
Rc2Certificate certificate_from_json(const nlohmann::json& j);

enum class Rc2Verdict { ProvenAllM, Unknown };

struct Rc2Status {
  Rc2Verdict verdict = Rc2Verdict::Unknown;
  std::optional<Rc2Certificate> certificate;  // classical orbits
  std::string exceptional_witness;            // exceptional tables
};

/// Classical orbits search every Levi (LeviScope::AllLevis).
Rc2Status rc2_status(const Orbit& o);

/// Certificate for a partition of S_eps(n) under `scope`; nullopt when absent.
std::optional<Rc2Certificate> classical_certificate(const Algebra& a, const Partition& lambda,
                                                    LeviScope scope = LeviScope::AllLevis);

}  // namespace nilorb
