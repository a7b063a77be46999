#include "anabelkit/expr.hpp"

#include <cctype>
#include <sstream>

#include "anabelkit/padic.hpp"

namespace anabelkit {

RationalPoly::RationalPoly(const mpq_class& c) {
  if (c != 0) terms_[{}] = c;
}

RationalPoly RationalPoly::variable(const std::string& name) {
  RationalPoly r;
  r.terms_[{{name, 1}}] = 1;
  return r;
}

bool RationalPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

mpq_class RationalPoly::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::set<std::string> RationalPoly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

long RationalPoly::degree_in(const std::string& var) const {
  long d = 0;
  for (const auto& [m, c] : terms_) {
    auto it = m.find(var);
    if (it != m.end()) d = std::max(d, it->second);
  }
  return d;
}

std::vector<RationalPoly> RationalPoly::coefficients_in(const std::string& var) const {
  std::vector<RationalPoly> out(degree_in(var) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    long e = 0;
    auto it = rest.find(var);
    if (it != rest.end()) {
      e = it->second;
      rest.erase(it);
    }
    out[e].add_term(rest, c);
  }
  return out;
}

void RationalPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
  RationalPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma;
      for (const auto& [v, e] : mb) m[v] += e;
      r.add_term(m, ca * cb);
    }
  *this = std::move(r);
  return *this;
}

RationalPoly RationalPoly::pow(long k) const {
  if (k < 0) throw DomainError("negative exponent in polynomial expression");
  RationalPoly r(1), b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

std::string RationalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Monomial, mpq_class>> items(terms_.rbegin(), terms_.rend());
  for (const auto& [m, c] : items) {
    mpq_class a = abs(c);
    bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit_coeff = (a == 1) && !m.empty();
    if (!unit_coeff) os << a.get_str();
    bool need_star = !unit_coeff;
    for (const auto& [v, e] : m) {
      if (need_star) os << "*";
      os << v;
      if (e != 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RationalPoly parse() {
    RationalPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw DomainError("cannot parse expression \"" + s_ + "\": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_' || c == '(';
  }

  RationalPoly expr() {
    RationalPoly r = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        r += term();
      } else if (peek('-')) {
        ++pos_;
        r += -term();
      } else {
        return r;
      }
    }
  }

  RationalPoly term() {
    RationalPoly r = unary();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r *= unary();
      } else if (peek('/')) {
        ++pos_;
        RationalPoly d = unary();
        if (!d.is_constant() || d.constant_term() == 0) fail("division by a non-constant or zero");
        mpq_class inv = 1 / d.constant_term();
        r *= RationalPoly(inv);
      } else if (starts_factor()) {
        r *= power();
      } else {
        return r;
      }
    }
  }

  RationalPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  RationalPoly power() {
    RationalPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      return base.pow(std::stol(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  RationalPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalPoly r = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalPoly(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return RationalPoly::variable(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

RationalPoly parse_expression(const std::string& text) { return Parser(text).parse(); }

std::vector<mpq_class> univariate_coefficients(const RationalPoly& f, const std::string& var) {
  std::vector<mpq_class> out(f.degree_in(var) + 1, 0);
  for (const auto& [m, c] : f.terms()) {
    long e = 0;
    for (const auto& [v, k] : m) {
      if (v != var) throw DomainError("unexpected variable '" + v + "' in polynomial in " + var);
      e = k;
    }
    out[e] += c;
  }
  return out;
}

}  // namespace anabelkit
