#pragma once

#include <Eigen/Core>

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

enum class RootType { A, B, C, D, E6, E7, E8, F4, G2 };

std::string_view to_string(RootType t);
/// Accepts "A".."D", "E6", "E7", "E8", "F4", "G2" (case-insensitive).
RootType parse_root_type(std::string_view s);

/// Integer vector in doubled coordinates, so half-integral roots of E8/F4 stay exact.
using RootVector = Eigen::VectorXi;

/// A reduced root system in its standard orthonormal realization.
///
/// Simple roots follow Bourbaki numbering (1-based in the public API):
///   A_l : e_i - e_{i+1}
///   B_l : e_i - e_{i+1} (i < l), e_l
///   C_l : e_i - e_{i+1} (i < l), 2 e_l
///   D_l : e_i - e_{i+1} (i < l), e_{l-1} + e_l
///   G2  : e_1 - e_2 (short), -2 e_1 + e_2 + e_3 (long)
///   F4  : e_2 - e_3, e_3 - e_4, e_4, (e_1 - e_2 - e_3 - e_4)/2
///   E8  : (e_1 + e_8 - e_2 - ... - e_7)/2, e_1 + e_2, e_2 - e_1, ..., e_7 - e_6
///   E7, E6 : the subsystems of E8 spanned by its first 7 or 6 simple roots.
class RootSystem {
public:
  /// Throws std::invalid_argument for an invalid (type, rank) pair.
  static RootSystem build(RootType type, int rank);

  RootType type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  /// Ambient dimension of the realization.
  int ambient_dim() const noexcept { return static_cast<int>(simple_.front().size()); }
  /// D2 (A1 x A1) and D3 (= A3) are accepted but are not simple of type D.
  bool degenerate() const noexcept { return type_ == RootType::D && rank_ <= 3; }

  const std::vector<RootVector>& roots() const noexcept { return roots_; }
  const std::vector<RootVector>& simple_roots() const noexcept { return simple_; }
  const RootVector& simple_root(int bourbaki_index) const;

  /// Cartan integer <beta^vee, alpha> = 2 (beta, alpha) / (beta, beta).
  int pairing(const RootVector& beta, const RootVector& alpha) const;
  int pairing(int simple_index, const RootVector& alpha) const {
    return pairing(simple_root(simple_index), alpha);
  }

  /// Coefficients of `root` in the simple-root basis (exact; throws if not integral).
  Eigen::VectorXi simple_coordinates(const RootVector& root) const;

  Eigen::MatrixXi cartan_matrix() const;

private:
  RootSystem(RootType type, int rank, std::vector<RootVector> simple, std::vector<RootVector> roots);

  RootType type_;
  int rank_;
  std::vector<RootVector> simple_;
  std::vector<RootVector> roots_;
  Eigen::MatrixXd simple_basis_;  // columns are simple roots, for coordinate solves
};

/// Does [l_S, l_S] contain a regular semisimple element of g?
/// Holds iff every root alpha has some beta in S with <beta^vee, alpha> != 0.
/// `subset` holds Bourbaki indices (1-based).
bool levi_condition_i(const RootSystem& rs, const std::set<int>& subset);

/// |roots| + rank.
int algebra_dim_from_roots(const RootSystem& rs);

/// A connected component of the Dynkin subdiagram on a node subset.
struct DynkinComponent {
  RootType type;
  int rank;
  std::vector<int> nodes;  // Bourbaki indices of `rs`, ascending
};

/// Components of the subdiagram on `subset`, ordered by smallest node.
/// B2 and C2 are reported as B2.
std::vector<DynkinComponent> dynkin_components(const RootSystem& rs, const std::set<int>& subset);

/// dim l_S: rank of g plus the number of roots supported on `subset`.
int levi_dim(const RootSystem& rs, const std::set<int>& subset);

}  // namespace nilorb
