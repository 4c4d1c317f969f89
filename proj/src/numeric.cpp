#include "zguess/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace zguess {

namespace {

bool valid_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Int parse_int(std::string_view text) {
  if (!valid_integer_literal(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  std::string s(text[0] == '+' ? text.substr(1) : text);
  return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot_pos);
    std::string_view frac = text.substr(dot_pos + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative || (!whole.empty() && whole[0] == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !valid_integer_literal(whole) || !valid_integer_literal(frac) ||
        frac[0] == '-' || frac[0] == '+') {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    Int scale = power(Int(10), frac.size());
    Rat r(parse_int(whole) * scale + parse_int(frac), scale);
    r.canonicalize();
    return negative ? Rat(-r) : r;
  }
  return Rat(parse_int(text));
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int round_div(const Int& a, const Int& b) {
  // floor((2a + b) / 2b) with the sign of b folded in.
  Int num = 2 * a + b;
  Int den = 2 * b;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Int mod_floor(const Int& a, const Int& b) {
  Int r;
  Int m = abs(b);
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int binomial(const Int& n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Int power(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

double log2_abs(const Int& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void normalize_sign(IntVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    return;
  }
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  }
  return s;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

IntVector to_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace zguess
