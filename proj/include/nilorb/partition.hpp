#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nilorb {

/// Which family of partitions labels the nilpotent orbits.
///  A     : every partition of n (sl_n)
///  Plus  : even parts have even multiplicity (so_n)
///  Minus : odd parts have even multiplicity (sp_n)
enum class EpsClass { A, Plus, Minus };

std::string_view to_string(EpsClass eps);

/// A partition stored as a non-increasing sequence of positive parts.
///
/// Parts beyond length() read as zero, which is the padding convention used
/// by dominance, collapse and induction.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);

  /// Canonicalizes `raw`: drops zeros and sorts non-increasing.
  /// Throws std::invalid_argument on a negative entry.
  static Partition from_parts(std::span<const int> raw);

  const std::vector<int>& parts() const& noexcept { return parts_; }
  std::vector<int> parts() && noexcept { return std::move(parts_); }
  int size() const noexcept { return total_; }  // n
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](int i) const noexcept {
    return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const noexcept;
  /// True when all parts are equal (the empty partition counts as rectangular).
  bool is_rectangular() const noexcept;
  bool is_zero_orbit() const noexcept;  // (1^n)

  /// Expanded comma form, e.g. "3,2,2,1"; the empty partition prints as "".
  std::string to_string() const;
  /// Exponent form, e.g. "3,2^2,1".
  std::string to_compact_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the part sequence.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  explicit Partition(std::vector<int> sorted_parts);

  std::vector<int> parts_;
  int total_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

Partition make_partition(std::span<const int> raw);
inline Partition make_partition(std::initializer_list<int> raw) {
  return make_partition(std::span<const int>(raw.begin(), raw.size()));
}

/// Parses "2^3,1" or "3,2,1"; whitespace is ignored, "" and "0" give ().
Partition parse_partition(std::string_view text);

/// Transpose of the Young diagram.
Partition dual(const Partition& lambda);

/// lambda >= mu in dominance order. Throws std::invalid_argument when the totals differ.
bool dominates(const Partition& lambda, const Partition& mu);

/// Multiset union of parts.
Partition concat(const Partition& lambda, const Partition& mu);

bool in_eps_class(const Partition& lambda, EpsClass eps);

/// Only even parts, each with even multiplicity.
bool is_very_even(const Partition& lambda);

/// The unique maximal element of the eps-class dominated by lambda.
///
/// Runs the prefix-repair iteration on lambda padded with zeros to length n:
/// with r the longest prefix already in the class, decrement the part at
/// 1-based position r+1 and increment the first part of the required parity
/// after position r+1, until the result lies in the class.
Partition collapse(const Partition& lambda, EpsClass eps);

/// All partitions of n in the eps-class, lexicographically decreasing.
std::vector<Partition> enumerate(int n, EpsClass eps);

/// Calls `visit` for every partition of n in lexicographically decreasing order.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

}  // namespace nilorb
