#include "nilorb/rootsys.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace nilorb {

std::string_view to_string(RootType t) {
  switch (t) {
    case RootType::A: return "A";
    case RootType::B: return "B";
    case RootType::C: return "C";
    case RootType::D: return "D";
    case RootType::E6: return "E6";
    case RootType::E7: return "E7";
    case RootType::E8: return "E8";
    case RootType::F4: return "F4";
    case RootType::G2: return "G2";
  }
  return "?";
}

RootType parse_root_type(std::string_view s) {
  std::string up;
  for (char c : s) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == "A") return RootType::A;
  if (up == "B") return RootType::B;
  if (up == "C") return RootType::C;
  if (up == "D") return RootType::D;
  if (up == "E6") return RootType::E6;
  if (up == "E7") return RootType::E7;
  if (up == "E8") return RootType::E8;
  if (up == "F4") return RootType::F4;
  if (up == "G2") return RootType::G2;
  throw std::invalid_argument("unknown root system type '" + std::string(s) + "'");
}

namespace {

RootVector unit(int dim, int i, int scale = 2) {
  RootVector v = RootVector::Zero(dim);
  v(i) = scale;
  return v;
}

// +-e_i +- e_j for i < j, doubled.
void add_pm_pairs(std::vector<RootVector>& out, int dim, int count) {
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          RootVector v = RootVector::Zero(dim);
          v(i) = 2 * si;
          v(j) = 2 * sj;
          out.push_back(v);
        }
}

// (+-1, ..., +-1)/2 doubled; parity -1 keeps all sign patterns, 0 keeps an even
// number of minus signs.
void add_half_spin(std::vector<RootVector>& out, int dim, int parity) {
  for (int mask = 0; mask < (1 << dim); ++mask) {
    int minus = __builtin_popcount(static_cast<unsigned>(mask));
    if (parity == 0 && minus % 2 != 0) continue;
    RootVector v(dim);
    for (int i = 0; i < dim; ++i) v(i) = (mask >> i) & 1 ? -1 : 1;
    out.push_back(v);
  }
}

std::vector<RootVector> e8_simple() {
  std::vector<RootVector> s;
  RootVector a1(8);
  a1 << 1, -1, -1, -1, -1, -1, -1, 1;
  s.push_back(a1);
  RootVector a2 = RootVector::Zero(8);
  a2(0) = 2;
  a2(1) = 2;
  s.push_back(a2);
  for (int i = 0; i < 6; ++i) {  // alpha_3 .. alpha_8 = e_{i+2} - e_{i+1}
    RootVector v = RootVector::Zero(8);
    v(i) = -2;
    v(i + 1) = 2;
    s.push_back(v);
  }
  return s;
}

void check_rank(RootType type, int rank) {
  bool ok = false;
  switch (type) {
    case RootType::A: ok = rank >= 1; break;
    case RootType::B: ok = rank >= 1; break;
    case RootType::C: ok = rank >= 1; break;
    case RootType::D: ok = rank >= 2; break;
    case RootType::E6: ok = rank == 6; break;
    case RootType::E7: ok = rank == 7; break;
    case RootType::E8: ok = rank == 8; break;
    case RootType::F4: ok = rank == 4; break;
    case RootType::G2: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid root system " + std::string(to_string(type)) + " of rank " +
                                std::to_string(rank));
}

}  // namespace

RootSystem::RootSystem(RootType type, int rank, std::vector<RootVector> simple,
                       std::vector<RootVector> roots)
    : type_(type), rank_(rank), simple_(std::move(simple)), roots_(std::move(roots)) {
  simple_basis_.resize(simple_.front().size(), rank_);
  for (int i = 0; i < rank_; ++i) simple_basis_.col(i) = simple_[static_cast<std::size_t>(i)].cast<double>();
}

RootSystem RootSystem::build(RootType type, int rank) {
  check_rank(type, rank);
  std::vector<RootVector> simple, roots;
  const int l = rank;
  switch (type) {
    case RootType::A: {
      const int dim = l + 1;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (i != j) roots.push_back(unit(dim, i) - unit(dim, j));
      for (int i = 0; i < l; ++i) simple.push_back(unit(dim, i) - unit(dim, i + 1));
      break;
    }
    case RootType::B:
    case RootType::C:
    case RootType::D: {
      add_pm_pairs(roots, l, l);
      if (type != RootType::D) {
        const int scale = type == RootType::B ? 2 : 4;
        for (int i = 0; i < l; ++i) {
          roots.push_back(unit(l, i, scale));
          roots.push_back(unit(l, i, -scale));
        }
      }
      for (int i = 0; i + 1 < l; ++i) simple.push_back(unit(l, i) - unit(l, i + 1));
      if (type == RootType::B) simple.push_back(unit(l, l - 1));
      if (type == RootType::C) simple.push_back(unit(l, l - 1, 4));
      if (type == RootType::D) simple.push_back(unit(l, l - 2) + unit(l, l - 1));
      break;
    }
    case RootType::G2: {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (i == j) continue;
          roots.push_back(unit(3, i) - unit(3, j));
          int k = 3 - i - j;
          roots.push_back(unit(3, i, 4) - unit(3, j) - unit(3, k));
          roots.push_back(unit(3, j) + unit(3, k) - unit(3, i, 4));
        }
      std::sort(roots.begin(), roots.end(), [](const RootVector& a, const RootVector& b) {
        return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
      });
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      simple.push_back(unit(3, 0) - unit(3, 1));
      simple.push_back(unit(3, 1) + unit(3, 2) - unit(3, 0, 4));
      break;
    }
    case RootType::F4: {
      add_pm_pairs(roots, 4, 4);
      for (int i = 0; i < 4; ++i) {
        roots.push_back(unit(4, i));
        roots.push_back(unit(4, i, -2));
      }
      add_half_spin(roots, 4, -1);
      simple.push_back(unit(4, 1) - unit(4, 2));
      simple.push_back(unit(4, 2) - unit(4, 3));
      simple.push_back(unit(4, 3));
      RootVector a4(4);
      a4 << 1, -1, -1, -1;
      simple.push_back(a4);
      break;
    }
    case RootType::E6:
    case RootType::E7:
    case RootType::E8: {
      std::vector<RootVector> all;
      add_pm_pairs(all, 8, 8);
      add_half_spin(all, 8, 0);
      auto s8 = e8_simple();
      if (type == RootType::E8) {
        simple = s8;
        roots = all;
        break;
      }
      // Keep the E8 roots supported on the first `rank` simple roots.
      RootSystem e8(RootType::E8, 8, s8, all);
      simple.assign(s8.begin(), s8.begin() + rank);
      for (const auto& r : all) {
        Eigen::VectorXi c = e8.simple_coordinates(r);
        if (c.tail(8 - rank).isZero()) roots.push_back(r);
      }
      break;
    }
  }
  return RootSystem(type, rank, std::move(simple), std::move(roots));
}

const RootVector& RootSystem::simple_root(int bourbaki_index) const {
  if (bourbaki_index < 1 || bourbaki_index > rank_)
    throw std::out_of_range("simple root index " + std::to_string(bourbaki_index) + " outside 1.." +
                            std::to_string(rank_));
  return simple_[static_cast<std::size_t>(bourbaki_index - 1)];
}

int RootSystem::pairing(const RootVector& beta, const RootVector& alpha) const {
  const int num = 2 * beta.dot(alpha);
  const int den = beta.dot(beta);
  if (den == 0 || num % den != 0) throw std::logic_error("pairing: non-integral Cartan number");
  return num / den;
}

Eigen::VectorXi RootSystem::simple_coordinates(const RootVector& root) const {
  Eigen::VectorXd c = simple_basis_.colPivHouseholderQr().solve(root.cast<double>());
  Eigen::VectorXi rounded = c.array().round().cast<int>();
  RootVector back = RootVector::Zero(root.size());
  for (int i = 0; i < rank_; ++i) back += rounded(i) * simple_[static_cast<std::size_t>(i)];
  if (back != root) throw std::invalid_argument("vector is not in the root lattice");
  return rounded;
}

Eigen::MatrixXi RootSystem::cartan_matrix() const {
  Eigen::MatrixXi m(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      m(i, j) = pairing(simple_[static_cast<std::size_t>(j)], simple_[static_cast<std::size_t>(i)]);
  return m;
}

bool levi_condition_i(const RootSystem& rs, const std::set<int>& subset) {
  for (int b : subset)
    if (b < 1 || b > rs.rank())
      throw std::out_of_range("Levi subset node " + std::to_string(b) + " outside 1.." +
                              std::to_string(rs.rank()));
  return std::all_of(rs.roots().begin(), rs.roots().end(), [&](const RootVector& alpha) {
    return std::any_of(subset.begin(), subset.end(),
                       [&](int b) { return rs.pairing(b, alpha) != 0; });
  });
}

int algebra_dim_from_roots(const RootSystem& rs) {
  return static_cast<int>(rs.roots().size()) + rs.rank();
}

namespace {

void check_subset(const RootSystem& rs, const std::set<int>& subset) {
  for (int b : subset)
    if (b < 1 || b > rs.rank())
      throw std::out_of_range("node " + std::to_string(b) + " outside 1.." + std::to_string(rs.rank()));
}

DynkinComponent classify(const RootSystem& rs, std::vector<int> nodes) {
  const int k = static_cast<int>(nodes.size());
  auto bond = [&](int a, int b) {
    return rs.pairing(a, rs.simple_root(b)) * rs.pairing(b, rs.simple_root(a));
  };
  auto degree = [&](int a) {
    int d = 0;
    for (int b : nodes)
      if (b != a && bond(a, b) != 0) ++d;
    return d;
  };
  int max_bond = 0;
  int double_a = 0, double_b = 0;
  for (int a : nodes)
    for (int b : nodes)
      if (a < b && bond(a, b) > max_bond) {
        max_bond = bond(a, b);
        double_a = a;
        double_b = b;
      }
  if (max_bond == 3) return {RootType::G2, 2, nodes};
  if (max_bond == 2) {
    if (k == 4 && degree(double_a) == 2 && degree(double_b) == 2) return {RootType::F4, 4, nodes};
    int longest = 0;
    for (int a : nodes) longest = std::max(longest, static_cast<int>(rs.simple_root(a).squaredNorm()));
    int n_long = 0;
    for (int a : nodes) n_long += rs.simple_root(a).squaredNorm() == longest;
    return {k > 2 && n_long == 1 ? RootType::C : RootType::B, k, nodes};
  }
  int branch = 0;
  for (int a : nodes)
    if (degree(a) == 3) branch = a;
  if (branch == 0) return {RootType::A, k, nodes};
  std::vector<int> arms;
  for (int start : nodes) {
    if (start == branch || bond(start, branch) == 0) continue;
    int len = 1, prev = branch, cur = start;
    for (;;) {
      int next = 0;
      for (int b : nodes)
        if (b != cur && b != prev && bond(cur, b) != 0) next = b;
      if (next == 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[1] == 1) return {RootType::D, k, nodes};
  const RootType e = k == 6 ? RootType::E6 : k == 7 ? RootType::E7 : RootType::E8;
  return {e, k, nodes};
}

}  // namespace

std::vector<DynkinComponent> dynkin_components(const RootSystem& rs, const std::set<int>& subset) {
  check_subset(rs, subset);
  std::set<int> left = subset;
  std::vector<DynkinComponent> out;
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto it = left.begin(); it != left.end();) {
        if (rs.pairing(comp[i], rs.simple_root(*it)) != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(comp.begin(), comp.end());
    out.push_back(classify(rs, std::move(comp)));
  }
  return out;
}

int levi_dim(const RootSystem& rs, const std::set<int>& subset) {
  check_subset(rs, subset);
  int count = 0;
  for (const auto& r : rs.roots()) {
    const Eigen::VectorXi c = rs.simple_coordinates(r);
    bool inside = true;
    for (int i = 0; i < rs.rank() && inside; ++i)
      if (c(i) != 0 && !subset.count(i + 1)) inside = false;
    count += inside;
  }
  return count + rs.rank();
}

}  // namespace nilorb
