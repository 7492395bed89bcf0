#include "nilorb/orbit.hpp"

#include "nilorb/excdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace nilorb {

namespace {

std::string family_prefix(Family f) {
  switch (f) {
    case Family::SL: return "sl";
    case Family::SO: return "so";
    case Family::SP: return "sp";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

std::string lower(std::string_view s) {
  std::string out;
  for (char c : s) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Algebra Algebra::sl(int n) {
  if (n < 1) throw std::invalid_argument("sl_n needs n >= 1, got " + std::to_string(n));
  return Algebra(Family::SL, n);
}

Algebra Algebra::so(int n) {
  if (n < 1) throw std::invalid_argument("so_n needs n >= 1, got " + std::to_string(n));
  return Algebra(Family::SO, n);
}

Algebra Algebra::sp(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("sp_n needs an even n >= 2, got " + std::to_string(n));
  return Algebra(Family::SP, n);
}

Algebra Algebra::exceptional(Family f) {
  if (f == Family::SL || f == Family::SO || f == Family::SP)
    throw std::invalid_argument("exceptional(): classical family given");
  return Algebra(f, 0);
}

Algebra Algebra::parse(std::string_view text) {
  const std::string s = lower(trim(text));
  for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8})
    if (s == lower(family_prefix(f))) return exceptional(f);
  if (s.size() > 2) {
    int n = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 2, s.data() + s.size(), n);
    if (ec == std::errc() && ptr == s.data() + s.size()) {
      const std::string head = s.substr(0, 2);
      if (head == "sl") return sl(n);
      if (head == "so") return so(n);
      if (head == "sp") return sp(n);
    }
  }
  throw std::invalid_argument("unknown algebra '" + std::string(text) + "'");
}

EpsClass Algebra::eps() const {
  switch (family_) {
    case Family::SL: return EpsClass::A;
    case Family::SO: return EpsClass::Plus;
    case Family::SP: return EpsClass::Minus;
    default: throw std::domain_error("eps(): " + name() + " is not classical");
  }
}

int Algebra::rank() const {
  switch (family_) {
    case Family::SL: return n_ - 1;
    case Family::SO:
    case Family::SP: return n_ / 2;
    case Family::G2: return 2;
    case Family::F4: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
  }
  return 0;
}

int Algebra::dim() const {
  switch (family_) {
    case Family::SL: return n_ * n_ - 1;
    case Family::SO: return n_ * (n_ - 1) / 2;
    case Family::SP: return n_ * (n_ + 1) / 2;
    case Family::G2: return 14;
    case Family::F4: return 52;
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
  }
  return 0;
}

RootType Algebra::root_type() const {
  switch (family_) {
    case Family::SL: return RootType::A;
    case Family::SO: return n_ % 2 ? RootType::B : RootType::D;
    case Family::SP: return RootType::C;
    case Family::G2: return RootType::G2;
    case Family::F4: return RootType::F4;
    case Family::E6: return RootType::E6;
    case Family::E7: return RootType::E7;
    case Family::E8: return RootType::E8;
  }
  return RootType::A;
}

std::string Algebra::name() const {
  return classical() ? family_prefix(family_) + std::to_string(n_) : family_prefix(family_);
}

int algebra_dim(const Algebra& a) { return a.dim(); }

Algebra component_algebra(const DynkinComponent& c) {
  switch (c.type) {
    case RootType::A: return Algebra::sl(c.rank + 1);
    case RootType::B: return Algebra::so(2 * c.rank + 1);
    case RootType::C: return Algebra::sp(2 * c.rank);
    case RootType::D: return Algebra::so(2 * c.rank);
    case RootType::E6: return Algebra::exceptional(Family::E6);
    case RootType::E7: return Algebra::exceptional(Family::E7);
    case RootType::E8: return Algebra::exceptional(Family::E8);
    case RootType::F4: return Algebra::exceptional(Family::F4);
    case RootType::G2: return Algebra::exceptional(Family::G2);
  }
  throw std::logic_error("component_algebra: unknown type");
}

bool needs_tag(const Algebra& a, const Partition& p) {
  return a.family() == Family::SO && a.n() % 2 == 0 && !p.empty() && is_very_even(p);
}

Orbit Orbit::classical(const Algebra& a, Partition p, std::optional<VeryEvenTag> tag) {
  if (!a.classical()) throw std::invalid_argument("classical orbit requested in " + a.name());
  if (p.size() != a.n())
    throw std::invalid_argument("partition (" + p.to_string() + ") does not label an orbit of " +
                                a.name());
  if (!in_eps_class(p, a.eps()))
    throw std::invalid_argument("partition (" + p.to_string() + ") is not in the " +
                                std::string(nilorb::to_string(a.eps())) + " class of " + a.name());
  if (needs_tag(a, p) != tag.has_value())
    throw std::invalid_argument(tag ? "I/II tag given for a partition that is not very even"
                                    : "very even partition (" + p.to_string() + ") needs an I/II tag");
  return Orbit(a, std::move(p), {}, tag);
}

Orbit Orbit::exceptional(const Algebra& a, std::string label) {
  if (a.classical()) throw std::invalid_argument("exceptional label given for " + a.name());
  if (label != "0" && label != a.name()) (void)lookup(a.family(), label);
  return Orbit(a, Partition{}, std::move(label), std::nullopt);
}

Orbit Orbit::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("orbit '" + std::string(text) + "' is not of the form algebra:label");
  const Algebra a = Algebra::parse(text.substr(0, colon));
  std::string_view rest = trim(text.substr(colon + 1));
  if (!a.classical()) return exceptional(a, std::string(rest));
  std::optional<VeryEvenTag> tag;
  if (const auto c2 = rest.find(':'); c2 != std::string_view::npos) {
    const std::string t(trim(rest.substr(c2 + 1)));
    if (t == "I")
      tag = VeryEvenTag::I;
    else if (t == "II")
      tag = VeryEvenTag::II;
    else
      throw std::invalid_argument("unknown very even tag '" + t + "'");
    rest = rest.substr(0, c2);
  }
  return classical(a, parse_partition(rest), tag);
}

bool Orbit::is_zero() const {
  return algebra_.classical() ? partition_.is_zero_orbit() : label_ == "0";
}

std::string Orbit::to_string() const {
  std::string out = algebra_.name() + ':';
  if (!algebra_.classical()) return out + label_;
  out += partition_.to_string();
  if (tag_) out += *tag_ == VeryEvenTag::I ? ":I" : ":II";
  return out;
}

int partition_orbit_dim(const Partition& lambda, EpsClass eps) {
  const int n = lambda.size();
  int sq = 0;
  const Partition d_lambda = dual(lambda);
  for (int d : d_lambda.parts()) sq += d * d;
  int odd = 0;
  for (int part : lambda.parts()) odd += part % 2;
  switch (eps) {
    case EpsClass::A: return n * n - sq;
    case EpsClass::Plus: return n * (n - 1) / 2 - (sq - odd) / 2;
    case EpsClass::Minus: return n * (n + 1) / 2 - (sq + odd) / 2;
  }
  return 0;
}

namespace {

int eps_algebra_dim(int n, EpsClass eps) {
  switch (eps) {
    case EpsClass::A: return n * n - 1;
    case EpsClass::Plus: return n * (n - 1) / 2;
    case EpsClass::Minus: return n * (n + 1) / 2;
  }
  return 0;
}

const ExceptionalOrbitRecord* exceptional_record(const Orbit& o) {
  const auto& l = o.label();
  if (l == "0" || l == o.algebra().name()) return nullptr;
  return &lookup(o.algebra().family(), l);
}

}  // namespace

int orbit_dim(const Orbit& o) {
  const Algebra& a = o.algebra();
  if (a.classical()) return partition_orbit_dim(o.partition(), a.eps());
  if (o.label() == "0") return 0;
  if (o.label() == a.name()) return a.dim() - a.rank();
  return exceptional_record(o)->dim;
}

int codim(const Orbit& o) { return o.algebra().dim() - orbit_dim(o); }

bool closure_leq(const Orbit& o1, const Orbit& o2) {
  if (!(o1.algebra() == o2.algebra()))
    throw std::invalid_argument("closure_leq: orbits of " + o1.algebra().name() + " and " +
                                o2.algebra().name());
  if (!o1.algebra().classical())
    throw std::domain_error("closure_leq: exceptional closure order is not supported");
  if (o1.partition() == o2.partition()) return o1.tag() == o2.tag();
  return dominates(o2.partition(), o1.partition());
}

namespace {

void push_tagged(std::vector<Orbit>& out, const Algebra& a, const Partition& p) {
  if (needs_tag(a, p)) {
    out.push_back(Orbit::classical(a, p, VeryEvenTag::I));
    out.push_back(Orbit::classical(a, p, VeryEvenTag::II));
  } else {
    out.push_back(Orbit::classical(a, p));
  }
}

void require_classical(const Algebra& a, const char* what) {
  if (!a.classical())
    throw std::domain_error(std::string(what) + ": " + a.name() + " is exceptional; use the exceptional tables");
}

}  // namespace

std::vector<Orbit> all_orbits(const Algebra& a) {
  require_classical(a, "all_orbits");
  std::vector<Orbit> out;
  for (const auto& p : enumerate(a.n(), a.eps())) push_tagged(out, a, p);
  return out;
}

std::vector<Orbit> boundary(const Orbit& o) {
  const Algebra& a = o.algebra();
  require_classical(a, "boundary");
  std::vector<Orbit> out;
  for (const auto& p : enumerate(a.n(), a.eps()))
    if (p != o.partition() && dominates(o.partition(), p)) push_tagged(out, a, p);
  return out;
}

bool partition_is_little(const Partition& lambda, EpsClass eps) {
  const int d = partition_orbit_dim(lambda, eps);
  return d > 0 && 2 * d <= eps_algebra_dim(lambda.size(), eps);
}

bool is_little(const Orbit& o) {
  const int d = orbit_dim(o);
  return d > 0 && 2 * d <= o.algebra().dim();
}

bool partition_is_rigid(const Partition& lambda, EpsClass eps) {
  if (eps == EpsClass::A) return lambda.is_zero_orbit();
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int next = i + 1 < p.size() ? p[i + 1] : 0;
    if (p[i] - next > 1) return false;
  }
  const int banned_parity = eps == EpsClass::Plus ? 1 : 0;
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (p[i] % 2 == banned_parity && j - i == 2) return false;
    i = j;
  }
  return true;
}

bool is_rigid(const Orbit& o) {
  const Algebra& a = o.algebra();
  if (a.classical()) return partition_is_rigid(o.partition(), a.eps());
  if (o.label() == "0") return true;
  if (o.label() == a.name()) return false;
  return exceptional_record(o)->rigid;
}

Orbit regular_orbit(const Algebra& a) {
  if (!a.classical()) return Orbit::exceptional(a, a.name());
  Partition top{a.n()};
  if (a.eps() != EpsClass::A) top = collapse(top, a.eps());
  return Orbit::classical(a, top);
}

Orbit subregular_orbit(const Algebra& a) {
  require_classical(a, "subregular_orbit");
  if (a.rank() < 2) throw std::invalid_argument("subregular_orbit: " + a.name() + " has rank < 2");
  const auto below = boundary(regular_orbit(a));
  std::vector<const Orbit*> maximal;
  for (const auto& cand : below) {
    bool dominated = std::any_of(below.begin(), below.end(), [&](const Orbit& other) {
      return &other != &cand && closure_leq(cand, other) && !closure_leq(other, cand);
    });
    if (!dominated) maximal.push_back(&cand);
  }
  if (maximal.size() != 1)
    throw std::domain_error("subregular_orbit: " + std::to_string(maximal.size()) +
                            " maximal orbits below the regular orbit of " + a.name());
  return *maximal.front();
}

Orbit minimal_orbit(const Algebra& a) {
  if (!a.classical()) {
    const auto rows = ExceptionalTables::instance().of_type(a.family());
    if (rows.empty()) throw std::domain_error("minimal_orbit: no table rows for " + a.name());
    return Orbit::exceptional(a, rows.front()->label);
  }
  std::vector<Orbit> best;
  int best_dim = 0;
  for (const auto& o : all_orbits(a)) {
    const int d = orbit_dim(o);
    if (d == 0) continue;
    if (best.empty() || d < best_dim) {
      best.assign(1, o);
      best_dim = d;
    } else if (d == best_dim) {
      best.push_back(o);
    }
  }
  if (best.size() != 1)
    throw std::domain_error("minimal_orbit: " + a.name() + " has " + std::to_string(best.size()) +
                            " nonzero orbits of minimal dimension");
  return best.front();
}

}  // namespace nilorb
