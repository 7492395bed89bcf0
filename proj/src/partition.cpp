#include "nilorb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nilorb {

std::string_view to_string(EpsClass eps) {
  switch (eps) {
    case EpsClass::A: return "A";
    case EpsClass::Plus: return "Plus";
    case EpsClass::Minus: return "Minus";
  }
  return "?";
}

Partition::Partition(std::vector<int> sorted_parts)
    : parts_(std::move(sorted_parts)),
      total_(std::accumulate(parts_.begin(), parts_.end(), 0)) {}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(from_parts(std::span<const int>(parts.begin(), parts.size()))) {}

Partition Partition::from_parts(std::span<const int> raw) {
  std::vector<int> v;
  v.reserve(raw.size());
  for (int x : raw) {
    if (x < 0) throw std::invalid_argument("partition: negative part " + std::to_string(x));
    if (x > 0) v.push_back(x);
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

bool Partition::is_rectangular() const noexcept {
  return parts_.empty() || parts_.front() == parts_.back();
}

bool Partition::is_zero_orbit() const noexcept {
  return parts_.empty() || parts_.front() == 1;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_compact_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p.parts()) {
    h ^= static_cast<std::size_t>(x);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Partition make_partition(std::span<const int> raw) { return Partition::from_parts(raw); }

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("partition: cannot parse '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.size() >= 2 && compact.front() == '(' && compact.back() == ')')
    compact = compact.substr(1, compact.size() - 2);
  std::vector<int> raw;
  std::string_view rest = compact;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto caret = item.find('^');
    int value = parse_int(item.substr(0, caret), text);
    int times = caret == std::string_view::npos ? 1 : parse_int(item.substr(caret + 1), text);
    if (value < 0 || times < 0)
      throw std::invalid_argument("partition: negative entry in '" + std::string(text) + "'");
    raw.insert(raw.end(), static_cast<std::size_t>(times), value);
  }
  return Partition::from_parts(raw);
}

Partition dual(const Partition& lambda) {
  std::vector<int> d(static_cast<std::size_t>(lambda[0]), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++d[static_cast<std::size_t>(j)];
  return Partition::from_parts(d);
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("dominates: partitions of " + std::to_string(lambda.size()) +
                                " and " + std::to_string(mu.size()));
  int a = 0, b = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int k = 0; k < len; ++k) {
    a += lambda[k];
    b += mu[k];
    if (a < b) return false;
  }
  return true;
}

Partition concat(const Partition& lambda, const Partition& mu) {
  std::vector<int> v(lambda.parts());
  v.insert(v.end(), mu.parts().begin(), mu.parts().end());
  return Partition::from_parts(v);
}

namespace {

// True for values whose multiplicity the class constrains to be even.
bool constrained(int value, EpsClass eps) {
  if (value <= 0) return false;
  switch (eps) {
    case EpsClass::A: return false;
    case EpsClass::Plus: return value % 2 == 0;
    case EpsClass::Minus: return value % 2 == 1;
  }
  return false;
}

// Length of the longest prefix of `seq` lying in the class (0 when none).
std::size_t longest_class_prefix(const std::vector<int>& seq, EpsClass eps) {
  const int top = seq.empty() ? 0 : seq.front();
  std::vector<char> odd(static_cast<std::size_t>(top) + 1, 0);
  int bad = 0;
  std::size_t best = 0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    int v = seq[k];
    if (constrained(v, eps)) {
      auto& o = odd[static_cast<std::size_t>(v)];
      o ^= 1;
      bad += o ? 1 : -1;
    }
    if (bad == 0) best = k + 1;
  }
  return best;
}

}  // namespace

bool in_eps_class(const Partition& lambda, EpsClass eps) {
  if (eps == EpsClass::A) return true;
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (constrained(p[i], eps) && (j - i) % 2 == 1) return false;
    i = j;
  }
  return true;
}

bool is_very_even(const Partition& lambda) {
  for (int part : lambda.parts())
    if (part % 2 != 0) return false;
  return in_eps_class(lambda, EpsClass::Plus);
}

Partition collapse(const Partition& lambda, EpsClass eps) {
  if (eps == EpsClass::A) throw std::invalid_argument("collapse: eps must be Plus or Minus");
  const int n = lambda.size();
  if (eps == EpsClass::Minus && n % 2 != 0)
    throw std::invalid_argument("collapse: Minus requires an even total, got " + std::to_string(n));
  if (in_eps_class(lambda, eps)) return lambda;

  std::vector<int> seq(static_cast<std::size_t>(n), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), seq.begin());
  const int wanted_parity = eps == EpsClass::Plus ? 0 : 1;
  for (;;) {
    const std::size_t r = longest_class_prefix(seq, eps);
    if (r == seq.size()) break;
    --seq[r];
    std::size_t s = r + 1;
    while (s < seq.size() && seq[s] % 2 != wanted_parity) ++s;
    if (s == seq.size()) throw std::logic_error("collapse: no part to receive the moved box");
    ++seq[s];
  }
  return Partition::from_parts(seq);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition::from_parts(cur));
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(remaining - k, k, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("enumerate: negative n");
  std::vector<int> cur;
  partitions_rec(n, n, cur, visit);
}

std::vector<Partition> enumerate(int n, EpsClass eps) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) {
    if (in_eps_class(p, eps)) out.push_back(p);
  });
  return out;
}

}  // namespace nilorb
