#include "nilorb/jets.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace nilorb {

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

// true when a precedes b in the canonical order
bool canonical_less(const Monomial& a, const Monomial& b) {
  const int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da > db;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first) return a[i].first < b[j].first;
    if (a[i].second != b[j].second) return a[i].second > b[j].second;
    ++i;
    ++j;
  }
  return i < a.size() && j == b.size();
}

}  // namespace

JetPolynomial JetPolynomial::constant(std::int64_t c) {
  JetPolynomial p;
  p.add_term({}, c);
  return p;
}

JetPolynomial JetPolynomial::variable(int base, int level) {
  if (base < 0 || level < 0) throw std::invalid_argument("variable: negative index");
  JetPolynomial p;
  p.add_term({{JetVar{base, level}, 1}}, 1);
  return p;
}

void JetPolynomial::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

std::int64_t JetPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

int JetPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

bool JetPolynomial::is_homogeneous() const {
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return monomial_degree(t.first) == d; });
}

int JetPolynomial::max_level() const {
  int l = -1;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) l = std::max(l, v.level);
  return l;
}

std::vector<std::pair<Monomial, std::int64_t>> JetPolynomial::canonical_terms() const {
  std::vector<std::pair<Monomial, std::int64_t>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

std::string variable_name(JetVar v) { return "x" + std::to_string(v.base) + "_" + std::to_string(v.level); }

std::string JetPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : canonical_terms()) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::string body;
    for (const auto& [v, e] : m) {
      if (!body.empty()) body += '*';
      body += variable_name(v);
      if (e > 1) body += '^' + std::to_string(e);
    }
    if (body.empty())
      out += std::to_string(mag);
    else if (mag != 1)
      out += std::to_string(mag) + '*' + body;
    else
      out += body;
  }
  return out;
}

nlohmann::json JetPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : canonical_terms()) {
    nlohmann::json mono = nlohmann::json::array();
    for (const auto& [v, e] : m) mono.push_back({v.base, v.level, e});
    arr.push_back({{"coeff", c}, {"monomial", mono}});
  }
  return arr;
}

JetPolynomial JetPolynomial::from_json(const nlohmann::json& j) {
  JetPolynomial p;
  for (const auto& t : j) {
    Monomial m;
    for (const auto& f : t.at("monomial")) m.emplace_back(JetVar{f.at(0).get<int>(), f.at(1).get<int>()}, f.at(2).get<int>());
    std::sort(m.begin(), m.end());
    p.add_term(m, t.at("coeff").get<std::int64_t>());
  }
  return p;
}

std::int64_t JetPolynomial::evaluate(const std::function<std::int64_t(JetVar)>& value) const {
  std::int64_t total = 0;
  for (const auto& [m, c] : terms_) {
    std::int64_t t = c;
    for (const auto& [v, e] : m) {
      const std::int64_t x = value(v);
      for (int k = 0; k < e; ++k) t *= x;
    }
    total += t;
  }
  return total;
}

JetPolynomial& JetPolynomial::operator+=(const JetPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

JetPolynomial& JetPolynomial::operator-=(const JetPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

JetPolynomial operator*(const JetPolynomial& a, const JetPolynomial& b) {
  JetPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

JetPolynomial operator*(std::int64_t c, const JetPolynomial& a) {
  JetPolynomial out;
  for (const auto& [m, v] : a.terms_) out.add_term(m, c * v);
  return out;
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedPolynomial run() {
    collect_names();
    pos_ = 0;
    JetPolynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return {std::move(p), std::vector<std::string>(names_.begin(), names_.end())};
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("polynomial '" + std::string(text_) + "': " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool ident_start(char c) const { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  bool ident_char(char c) const { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void collect_names() {
    for (std::size_t i = 0; i < text_.size();) {
      if (ident_start(text_[i])) {
        std::size_t j = i;
        while (j < text_.size() && ident_char(text_[j])) ++j;
        names_.insert(std::string(text_.substr(i, j - i)));
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(text_[i]))) {
        while (i < text_.size() && ident_char(text_[i])) ++i;
      } else {
        ++i;
      }
    }
  }

  JetPolynomial expr() {
    skip();
    JetPolynomial acc;
    bool negate = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negate = text_[pos_++] == '-';
    acc = term();
    if (negate) acc = -1 * acc;
    for (;;) {
      skip();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) return acc;
      const bool minus = text_[pos_++] == '-';
      JetPolynomial t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
  }

  JetPolynomial term() {
    JetPolynomial acc = factor();
    for (;;) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] != '*') return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  JetPolynomial factor() {
    JetPolynomial base = primary();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip();
      const long e = integer();
      if (e < 0 || e > 64) fail("exponent out of range");
      JetPolynomial out = JetPolynomial::constant(1);
      for (long k = 0; k < e; ++k) out = out * base;
      return out;
    }
    return base;
  }

  long integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 15) fail("integer literal too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  JetPolynomial primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      JetPolynomial inner = expr();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -1 * factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long v = integer();
      if (pos_ < text_.size() && ident_start(text_[pos_])) fail("write '*' between a number and a variable");
      return JetPolynomial::constant(v);
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const auto index = std::distance(names_.begin(), names_.find(name));
      return JetPolynomial::variable(static_cast<int>(index));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<std::string> names_;
};

// Truncated power series in t with polynomial coefficients.
using Series = std::vector<JetPolynomial>;

Series series_mul(const Series& a, const Series& b, int m) {
  Series out(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= m; ++j)
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view text) { return Parser(text).run(); }

std::vector<JetPolynomial> jet_expand(const JetPolynomial& f, int m) {
  if (m < 0) throw std::invalid_argument("jet_expand: m >= 0 required");
  if (f.max_level() > 0) throw std::invalid_argument("jet_expand: input must use level-0 variables only");
  const auto size = static_cast<std::size_t>(m) + 1;
  std::map<int, Series> arcs;
  auto arc = [&](int base) -> const Series& {
    auto it = arcs.find(base);
    if (it != arcs.end()) return it->second;
    Series s(size);
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(j)] = JetPolynomial::variable(base, j);
    return arcs.emplace(base, std::move(s)).first->second;
  };
  Series total(size);
  for (const auto& [mono, c] : f.terms()) {
    Series acc(size);
    acc[0] = JetPolynomial::constant(c);
    for (const auto& [v, e] : mono)
      for (int k = 0; k < e; ++k) acc = series_mul(acc, arc(v.base), m);
    for (std::size_t j = 0; j < size; ++j) total[j] += acc[j];
  }
  return total;
}

std::vector<JetPolynomial> matrix_power_jet_ideal(int n, int d, int m, bool traceless) {
  if (n < 2) throw std::invalid_argument("matrix_power_jet_ideal: n >= 2 required");
  if (d != 2 && d != 3) throw std::invalid_argument("matrix_power_jet_ideal: d must be 2 or 3");
  if (m < 0) throw std::invalid_argument("matrix_power_jet_ideal: m >= 0 required");
  using Matrix = std::vector<std::vector<JetPolynomial>>;
  Matrix x(static_cast<std::size_t>(n), std::vector<JetPolynomial>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) x[a][b] = JetPolynomial::variable(a * n + b);
  if (traceless) {
    JetPolynomial last;
    for (int a = 0; a + 1 < n; ++a) last -= x[a][a];
    x[n - 1][n - 1] = last;
  }
  auto mul = [n](const Matrix& p, const Matrix& q) {
    Matrix r(static_cast<std::size_t>(n), std::vector<JetPolynomial>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) r[a][b] += p[a][c] * q[c][b];
    return r;
  };
  const Matrix x2 = mul(x, x);
  const Matrix xd = d == 2 ? x2 : mul(x2, x);
  std::vector<std::vector<JetPolynomial>> expanded;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) expanded.push_back(jet_expand(xd[a][b], m));
  if (d == 3) {
    JetPolynomial trace;
    for (int a = 0; a < n; ++a) trace += x2[a][a];
    expanded.push_back(jet_expand(trace, m));
  }
  std::vector<JetPolynomial> out;
  for (int j = 0; j <= m; ++j)
    for (const auto& e : expanded) out.push_back(e[static_cast<std::size_t>(j)]);
  return out;
}

int homogeneous_min_degree(const std::vector<JetPolynomial>& gens) {
  int best = -1;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw std::invalid_argument("homogeneous_min_degree: inhomogeneous generator " + g.to_string());
    best = best < 0 ? g.degree() : std::min(best, g.degree());
  }
  if (best < 0) throw std::invalid_argument("homogeneous_min_degree: no non-zero generator");
  return best;
}

}  // namespace nilorb
