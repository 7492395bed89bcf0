#include "nilorb/induction.hpp"

#include "nilorb/excdata.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace nilorb {

int LeviShapeBCD::total() const {
  return 2 * std::accumulate(blocks.begin(), blocks.end(), 0) + r;
}

namespace {

void add_rows(std::vector<int>& acc, const Partition& p, int weight) {
  if (static_cast<int>(acc.size()) < p.length()) acc.resize(static_cast<std::size_t>(p.length()), 0);
  for (int i = 0; i < p.length(); ++i) acc[static_cast<std::size_t>(i)] += weight * p[i];
}

int eps_dim(int n, EpsClass eps) {
  switch (eps) {
    case EpsClass::A: return n * n - 1;
    case EpsClass::Plus: return n * (n - 1) / 2;
    case EpsClass::Minus: return n * (n + 1) / 2;
  }
  return 0;
}

void require_bcd(EpsClass eps, const char* what) {
  if (eps == EpsClass::A) throw std::invalid_argument(std::string(what) + ": eps must be Plus or Minus");
}

}  // namespace

Partition induce_A(const LeviShapeA& levi, const std::vector<Partition>& orbits) {
  if (levi.composition.size() != orbits.size())
    throw std::invalid_argument("induce_A: " + std::to_string(levi.composition.size()) + " blocks but " +
                                std::to_string(orbits.size()) + " orbits");
  std::vector<int> rows;
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    if (levi.composition[j] < 1 || orbits[j].size() != levi.composition[j])
      throw std::invalid_argument("induce_A: orbit (" + orbits[j].to_string() + ") does not fit block " +
                                  std::to_string(levi.composition[j]));
    add_rows(rows, orbits[j], 1);
  }
  return Partition::from_parts(rows);
}

void validate_datum(int n, EpsClass eps, const InductionDatum& d) {
  require_bcd(eps, "induction datum");
  if (d.levi.r < 0) throw std::invalid_argument("induction datum: negative r");
  if (d.levi.total() != n)
    throw std::invalid_argument("induction datum: 2*sum(blocks) + r = " + std::to_string(d.levi.total()) +
                                ", expected " + std::to_string(n));
  if (d.gl_orbits.size() != d.levi.blocks.size())
    throw std::invalid_argument("induction datum: one gl orbit per block required");
  for (std::size_t j = 0; j < d.gl_orbits.size(); ++j)
    if (d.levi.blocks[j] < 1 || d.gl_orbits[j].size() != d.levi.blocks[j])
      throw std::invalid_argument("induction datum: gl orbit (" + d.gl_orbits[j].to_string() +
                                  ") does not fit block " + std::to_string(d.levi.blocks[j]));
  if (d.base_orbit.size() != d.levi.r || !in_eps_class(d.base_orbit, eps))
    throw std::invalid_argument("induction datum: base orbit (" + d.base_orbit.to_string() +
                                ") is not in the " + std::string(to_string(eps)) + " class of " +
                                std::to_string(d.levi.r));
}

Partition induce_BCD(int n, EpsClass eps, const InductionDatum& d) {
  validate_datum(n, eps, d);
  std::vector<int> rows;
  for (const auto& p : d.gl_orbits) add_rows(rows, p, 2);
  add_rows(rows, d.base_orbit, 1);
  return collapse(Partition::from_parts(rows), eps);
}

bool codim_preserved(int n, EpsClass eps, const InductionDatum& d, const Partition& result) {
  validate_datum(n, eps, d);
  int levi_codim = eps_dim(d.levi.r, eps) - partition_orbit_dim(d.base_orbit, eps);
  for (std::size_t j = 0; j < d.gl_orbits.size(); ++j) {
    const int p = d.levi.blocks[j];
    levi_codim += p * p - partition_orbit_dim(d.gl_orbits[j], EpsClass::A);
  }
  return eps_dim(n, eps) - partition_orbit_dim(result, eps) == levi_codim;
}

bool codim_preserved(const LeviShapeA& levi, const std::vector<Partition>& orbits, const Partition& result) {
  int n = 0, levi_codim = -1;
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    const int m = levi.composition.at(j);
    n += m;
    levi_codim += m * m - partition_orbit_dim(orbits[j], EpsClass::A);
  }
  if (result.size() != n) return false;
  return n * n - 1 - partition_orbit_dim(result, EpsClass::A) == levi_codim;
}

bool thmA_predicate(const Partition& lambda) { return !lambda.is_rectangular(); }

bool thmBCD_predicate(const Partition& lambda) {
  int jumps = 0;
  for (int i = 0; i < lambda.length(); ++i)
    if (lambda[i] - lambda[i + 1] >= 2) ++jumps;
  return jumps >= 2;
}

namespace {

struct Route {
  bool little = false;
  int p = 0;
  Partition mu;
  Partition nu;
};

struct Level {
  std::set<Partition> members;
  std::map<Partition, Route> routes;
};

class LittleSetCache {
public:
  const Level& get(int n, EpsClass eps, LeviScope scope) {
    std::lock_guard lock(mutex_);
    return compute(n, eps, scope);
  }

private:
  using Key = std::tuple<int, EpsClass, LeviScope>;

  const Level& compute(int n, EpsClass eps, LeviScope scope) {
    const Key key{n, eps, scope};
    if (auto it = levels_.find(key); it != levels_.end()) return *it->second;
    auto level = std::make_unique<Level>();
    for (const auto& lambda : enumerate(n, eps))
      if (partition_is_little(lambda, eps)) level->routes.emplace(lambda, Route{true, 0, {}, {}});
    for (int p = 1; 2 * p <= n; ++p) {
      const int r = n - 2 * p;
      if (scope == LeviScope::PublishedTables && r == 0) continue;
      const auto& below = compute(r, eps, scope).members;
      const auto bases = enumerate(r, eps);
      for (const auto& mu : enumerate(p, EpsClass::A)) {
        const bool free_mu = thmA_predicate(mu);
        for (const auto& nu : bases) {
          if (!free_mu && !below.count(nu)) continue;
          std::vector<int> rows;
          add_rows(rows, mu, 2);
          add_rows(rows, nu, 1);
          Partition lambda = collapse(Partition::from_parts(rows), eps);
          level->routes.emplace(std::move(lambda), Route{false, p, mu, nu});
        }
      }
    }
    for (const auto& [lambda, route] : level->routes) level->members.insert(lambda);
    return *levels_.emplace(key, std::move(level)).first->second;
  }

  std::mutex mutex_;
  std::map<Key, std::unique_ptr<Level>> levels_;
};

LittleSetCache& cache() {
  static LittleSetCache c;
  return c;
}

void check_n(int n, EpsClass eps, const char* what) {
  require_bcd(eps, what);
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative n");
  if (eps == EpsClass::Minus && n % 2 != 0)
    throw std::invalid_argument(std::string(what) + ": symplectic n must be even");
}

template <class F>
void for_each_tuple(const std::vector<int>& sizes, std::size_t at, std::vector<Partition>& cur, const F& visit) {
  if (at == sizes.size()) {
    visit(cur);
    return;
  }
  for (const auto& p : enumerate(sizes[at], EpsClass::A)) {
    cur.push_back(p);
    for_each_tuple(sizes, at + 1, cur, visit);
    cur.pop_back();
  }
}

// Block multisets: Levis differing by a permutation of the gl blocks are conjugate.
void for_each_block_multiset(int q, const std::function<void(const std::vector<int>&)>& visit) {
  for_each_partition(q, [&](const Partition& p) { visit(p.parts()); });
}

// split a non-rectangular mu as Ind(Lambda, (2^p, 1^(r-p))) in gl
std::pair<Partition, Partition> split_nonrectangular(const Partition& mu) {
  const int r = mu.length();
  int p = 1;
  while (mu[p - 1] == mu[p]) ++p;
  std::vector<int> rest;
  for (int i = 0; i < r; ++i) rest.push_back(mu[i] - (i < p ? 2 : 1));
  std::vector<int> little(static_cast<std::size_t>(r), 1);
  std::fill(little.begin(), little.begin() + p, 2);
  return {Partition::from_parts(rest), Partition::from_parts(little)};
}

}  // namespace

const std::set<Partition>& induced_from_little_set(int n, EpsClass eps, LeviScope scope) {
  check_n(n, eps, "induced_from_little_set");
  return cache().get(n, eps, scope).members;
}

std::set<Partition> brute_force_little_set(int n, EpsClass eps, LeviScope scope) {
  check_n(n, eps, "brute_force_little_set");
  if (n > 14) throw std::invalid_argument("brute_force_little_set: n <= 14 required");
  std::set<Partition> out;
  for (int q = 0; 2 * q <= n; ++q) {
    const int r = n - 2 * q;
    const auto bases = enumerate(r, eps);
    for_each_block_multiset(q, [&](const std::vector<int>& blocks) {
      if (scope == LeviScope::PublishedTables && blocks.size() == 1 && r == 0) return;
      std::vector<Partition> cur;
      for_each_tuple(blocks, 0, cur, [&](const std::vector<Partition>& gl) {
        const bool gl_little = std::any_of(gl.begin(), gl.end(), [](const Partition& p) {
          return partition_is_little(p, EpsClass::A);
        });
        for (const auto& mu : bases) {
          if (!gl_little && !partition_is_little(mu, eps)) continue;
          out.insert(induce_BCD(n, eps, InductionDatum{{blocks, r}, gl, mu}));
        }
      });
    });
  }
  return out;
}

std::set<Partition> brute_force_little_set_A(int n) {
  if (n < 1 || n > 14) throw std::invalid_argument("brute_force_little_set_A: 1 <= n <= 14 required");
  std::set<Partition> out;
  for_each_block_multiset(n, [&](const std::vector<int>& blocks) {
    std::vector<Partition> cur;
    for_each_tuple(blocks, 0, cur, [&](const std::vector<Partition>& orbits) {
      if (std::any_of(orbits.begin(), orbits.end(),
                      [](const Partition& p) { return partition_is_little(p, EpsClass::A); }))
        out.insert(induce_A(LeviShapeA{blocks}, orbits));
    });
  });
  return out;
}

namespace {

Rc2Certificate certificate_A(const Algebra& a, const Partition& lambda) {
  Rc2Certificate cert{a, lambda, {}, 0};
  if (partition_is_little(lambda, EpsClass::A)) {
    cert.datum.levi.blocks = {lambda.size()};
    cert.datum.gl_orbits = {lambda};
    return cert;
  }
  auto [rest, little] = split_nonrectangular(lambda);
  if (!rest.empty()) {
    cert.datum.levi.blocks.push_back(rest.size());
    cert.datum.gl_orbits.push_back(rest);
  }
  cert.little_factor_index = static_cast<int>(cert.datum.gl_orbits.size());
  cert.datum.levi.blocks.push_back(little.size());
  cert.datum.gl_orbits.push_back(little);
  return cert;
}

// Flattens the DP route of lambda into a single datum (transitivity of induction).
std::pair<InductionDatum, int> flatten(int n, EpsClass eps, LeviScope scope, const Partition& lambda) {
  const Route& route = cache().get(n, eps, scope).routes.at(lambda);
  if (route.little) return {InductionDatum{{{}, n}, {}, lambda}, 0};
  const int r = n - 2 * route.p;
  if (thmA_predicate(route.mu)) {
    auto [rest, little] = split_nonrectangular(route.mu);
    InductionDatum d{{{}, r}, {}, route.nu};
    if (!rest.empty()) {
      d.levi.blocks.push_back(rest.size());
      d.gl_orbits.push_back(rest);
    }
    const int index = static_cast<int>(d.gl_orbits.size());
    d.levi.blocks.push_back(little.size());
    d.gl_orbits.push_back(little);
    return {d, index};
  }
  auto [inner, index] = flatten(r, eps, scope, route.nu);
  inner.levi.blocks.insert(inner.levi.blocks.begin(), route.p);
  inner.gl_orbits.insert(inner.gl_orbits.begin(), route.mu);
  return {inner, index + 1};
}

}  // namespace

std::optional<Rc2Certificate> classical_certificate(const Algebra& a, const Partition& lambda,
                                                    LeviScope scope) {
  if (!a.classical()) throw std::domain_error("classical_certificate: " + a.name() + " is exceptional");
  if (lambda.size() != a.n() || !in_eps_class(lambda, a.eps()))
    throw std::invalid_argument("classical_certificate: (" + lambda.to_string() + ") is not an orbit of " +
                                a.name());
  if (a.eps() == EpsClass::A) {
    if (!partition_is_little(lambda, EpsClass::A) && !thmA_predicate(lambda)) return std::nullopt;
    return certificate_A(a, lambda);
  }
  if (!induced_from_little_set(a.n(), a.eps(), scope).count(lambda)) return std::nullopt;
  auto [datum, index] = flatten(a.n(), a.eps(), scope, lambda);
  Rc2Certificate cert{a, lambda, std::move(datum), index};
  if (!verify_certificate(cert))
    throw std::logic_error("certificate for (" + lambda.to_string() + ") does not replay");
  return cert;
}

bool verify_certificate(const Rc2Certificate& cert) {
  const Algebra& a = cert.algebra;
  if (!a.classical()) return false;
  const auto& d = cert.datum;
  const int k = static_cast<int>(d.gl_orbits.size());
  if (cert.little_factor_index < 0 || cert.little_factor_index > k) return false;
  try {
    if (a.eps() == EpsClass::A) {
      if (cert.little_factor_index == k || d.levi.r != 0 || !d.base_orbit.empty()) return false;
      if (induce_A(LeviShapeA{d.levi.blocks}, d.gl_orbits) != cert.target) return false;
    } else if (induce_BCD(a.n(), a.eps(), d) != cert.target) {
      return false;
    }
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (cert.little_factor_index < k)
    return partition_is_little(d.gl_orbits[static_cast<std::size_t>(cert.little_factor_index)], EpsClass::A);
  return partition_is_little(d.base_orbit, a.eps());
}

nlohmann::json certificate_to_json(const Rc2Certificate& cert) {
  nlohmann::json gl = nlohmann::json::array();
  for (const auto& p : cert.datum.gl_orbits) gl.push_back(p.parts());
  return {{"algebra", cert.algebra.name()},
          {"target", cert.target.parts()},
          {"levi", {{"blocks", cert.datum.levi.blocks}, {"r", cert.datum.levi.r}}},
          {"gl_orbits", gl},
          {"base_orbit", cert.datum.base_orbit.parts()},
          {"little_factor_index", cert.little_factor_index}};
}

Rc2Certificate certificate_from_json(const nlohmann::json& j) {
  auto part = [](const nlohmann::json& v) { return make_partition(v.get<std::vector<int>>()); };
  Rc2Certificate cert{Algebra::parse(j.at("algebra").get<std::string>()), part(j.at("target")), {}, 0};
  cert.datum.levi.blocks = j.at("levi").at("blocks").get<std::vector<int>>();
  cert.datum.levi.r = j.at("levi").at("r").get<int>();
  for (const auto& g : j.at("gl_orbits")) cert.datum.gl_orbits.push_back(part(g));
  cert.datum.base_orbit = part(j.at("base_orbit"));
  cert.little_factor_index = j.at("little_factor_index").get<int>();
  return cert;
}

Rc2Status rc2_status(const Orbit& o) {
  Rc2Status status;
  const Algebra& a = o.algebra();
  if (a.classical()) {
    status.certificate = classical_certificate(a, o.partition(), LeviScope::AllLevis);
    if (status.certificate) status.verdict = Rc2Verdict::ProvenAllM;
    return status;
  }
  if (o.label() == "0" || o.label() == a.name()) return status;
  const auto& rec = lookup(a.family(), o.label());
  if (rec.rc2 == Rc2Table::Yes) {
    status.verdict = Rc2Verdict::ProvenAllM;
    status.exceptional_witness = rec.rc2_witness;
  }
  return status;
}

}  // namespace nilorb
