#pragma once

#include "nilorb/partition.hpp"
#include "nilorb/rootsys.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

enum class Family { SL, SO, SP, G2, F4, E6, E7, E8 };

/// A simple (or, for so2/so4, reductive) Lie algebra.
///
/// `n` is the natural matrix size for the classical families (sl_n, so_n,
/// sp_n with n even) and 0 for the exceptional ones.
class Algebra {
public:
  static Algebra sl(int n);
  static Algebra so(int n);
  static Algebra sp(int n);
  static Algebra exceptional(Family f);
  /// "sl6", "so12", "sp4", "E7", "G2" (case-insensitive prefix).
  static Algebra parse(std::string_view text);

  Family family() const noexcept { return family_; }
  int n() const noexcept { return n_; }
  bool classical() const noexcept {
    return family_ == Family::SL || family_ == Family::SO || family_ == Family::SP;
  }
  /// Partition class of the orbit labels; only meaningful for classical algebras.
  EpsClass eps() const;
  int rank() const;
  int dim() const;
  /// Root system of the same type (sl_n -> A_{n-1}, so_{2l+1} -> B_l, ...).
  RootType root_type() const;
  std::string name() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

private:
  Algebra(Family f, int n) : family_(f), n_(n) {}
  Family family_;
  int n_;
};

enum class VeryEvenTag { I, II };

/// A nilpotent orbit: a partition for classical algebras (plus I/II for very
/// even partitions in so_{2l}), a Bala-Carter label for exceptional ones.
/// Exceptional labels are the table labels plus "0" and the regular label
/// (the type name, e.g. "E8").
class Orbit {
public:
  /// Throws std::invalid_argument when the partition is not a valid label.
  static Orbit classical(const Algebra& a, Partition p, std::optional<VeryEvenTag> tag = std::nullopt);
  static Orbit exceptional(const Algebra& a, std::string label);
  /// "sl6:3,3", "so8:2^4:I", "sp4:2,2", "E7:A4+A1".
  static Orbit parse(std::string_view text);

  const Algebra& algebra() const noexcept { return algebra_; }
  const Partition& partition() const noexcept { return partition_; }
  const std::string& label() const noexcept { return label_; }
  std::optional<VeryEvenTag> tag() const noexcept { return tag_; }
  bool is_zero() const;

  std::string to_string() const;

  friend bool operator==(const Orbit&, const Orbit&) = default;

private:
  Orbit(Algebra a, Partition p, std::string label, std::optional<VeryEvenTag> tag)
      : algebra_(a), partition_(std::move(p)), label_(std::move(label)), tag_(tag) {}
  Algebra algebra_;
  Partition partition_;
  std::string label_;
  std::optional<VeryEvenTag> tag_;
};

/// True when so_n labels `p` by two orbits (n = |p| even, p very even, p nonempty).
bool needs_tag(const Algebra& a, const Partition& p);

int algebra_dim(const Algebra& a);

/// The simple algebra of a Dynkin component (A_k -> sl_{k+1}, B_k -> so_{2k+1}, ...).
Algebra component_algebra(const DynkinComponent& c);

/// Classical orbit dimension from the partition alone.
int partition_orbit_dim(const Partition& lambda, EpsClass eps);
int orbit_dim(const Orbit& o);
int codim(const Orbit& o);

/// Orbit containment in closure. Throws std::invalid_argument on mismatched
/// algebras and std::domain_error for exceptional orbits.
bool closure_leq(const Orbit& o1, const Orbit& o2);
/// Every orbit strictly below `o`, in enumeration order (I before II).
std::vector<Orbit> boundary(const Orbit& o);
/// All orbits of a classical algebra, in enumeration order.
std::vector<Orbit> all_orbits(const Algebra& a);

bool is_little(const Orbit& o);
/// 0 < 2 dim <= dim g, with dim g taken from `eps` and |lambda|.
bool partition_is_little(const Partition& lambda, EpsClass eps);
bool is_rigid(const Orbit& o);
bool partition_is_rigid(const Partition& lambda, EpsClass eps);

Orbit regular_orbit(const Algebra& a);
Orbit subregular_orbit(const Algebra& a);
Orbit minimal_orbit(const Algebra& a);

}  // namespace nilorb
