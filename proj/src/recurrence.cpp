#include "zguess/recurrence.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace zguess {

SequenceData::SequenceData(RatVector t, long off) : terms(std::move(t)), offset(off) {
  if (terms.empty()) throw std::invalid_argument("SequenceData: no terms");
}

SequenceData SequenceData::from_ints(const IntVector& values, long off) {
  return SequenceData(RatVector(values.begin(), values.end()), off);
}

SequenceData SequenceData::from_longs(std::initializer_list<long> values, long off) {
  RatVector t;
  for (long v : values) t.emplace_back(v);
  return SequenceData(std::move(t), off);
}

bool SequenceData::integral() const {
  for (const auto& x : terms) {
    if (!is_integer(x)) return false;
  }
  return true;
}

SequenceData SequenceData::prefix(std::size_t count) const {
  if (count == 0 || count > terms.size()) throw std::invalid_argument("SequenceData::prefix: bad length");
  return SequenceData(RatVector(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(count)),
                      offset);
}

Recurrence::Recurrence(std::vector<IntVector> grid, BasisFamily origin)
    : grid_(std::move(grid)), origin_(origin) {
  if (grid_.empty() || grid_.front().empty()) throw std::invalid_argument("Recurrence: empty grid");
  for (const auto& row : grid_) {
    if (row.size() != grid_.front().size()) throw std::invalid_argument("Recurrence: ragged grid");
  }
}

Recurrence Recurrence::from_vector(const IntVector& v, std::size_t order, std::size_t degree,
                                   const BasisFamily& f) {
  const std::size_t width = order + 1;
  if (v.size() != width * (degree + 1)) {
    throw std::invalid_argument("Recurrence::from_vector: vector length is not (r+1)(d+1)");
  }
  if (is_zero(v)) throw std::invalid_argument("Recurrence::from_vector: zero vector");

  std::vector<RatVector> power_rows(width);
  Int den = 1;
  for (std::size_t i = 0; i < width; ++i) {
    RatVector family_coeffs(degree + 1);
    for (std::size_t j = 0; j <= degree; ++j) family_coeffs[j] = v[(degree - j) * width + i];
    power_rows[i] = to_standard(f, family_coeffs);
    for (const auto& c : power_rows[i]) den = lcm(den, c.get_den());
  }
  std::vector<IntVector> grid(width, IntVector(degree + 1));
  for (std::size_t i = 0; i < width; ++i)
    for (std::size_t j = 0; j <= degree; ++j) {
      Rat scaled = power_rows[i][j] * den;
      grid[i][j] = scaled.get_num();
    }
  return Recurrence(std::move(grid), f).normalized();
}

Int Recurrence::poly_at(std::size_t i, const Int& n) const {
  Int acc = 0;
  const IntVector& row = grid_[i];
  for (std::size_t j = row.size(); j-- > 0;) acc = acc * n + row[j];
  return acc;
}

Int Recurrence::sup_norm() const {
  Int m = 0;
  for (const auto& row : grid_)
    for (const auto& c : row) {
      if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
    }
  return m;
}

Recurrence Recurrence::normalized() const {
  Int g = 0;
  for (const auto& row : grid_) g = gcd(g, content(row));
  if (g == 0) return *this;
  std::vector<IntVector> grid = grid_;
  for (auto& row : grid)
    for (auto& c : row) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  for (std::size_t i = grid.size(); i-- > 0;) {
    std::size_t j = grid[i].size();
    while (j > 0 && grid[i][j - 1] == 0) --j;
    if (j == 0) continue;
    if (grid[i][j - 1] < 0) {
      for (auto& row : grid)
        for (auto& c : row) c = -c;
    }
    break;
  }
  return Recurrence(std::move(grid), origin_);
}

IntVector Recurrence::to_vector() const {
  const std::size_t width = order() + 1;
  const std::size_t d = degree();
  IntVector v(width * (d + 1));
  for (std::size_t i = 0; i < width; ++i)
    for (std::size_t j = 0; j <= d; ++j) v[(d - j) * width + i] = grid_[i][j];
  return v;
}

namespace {

// (last nonzero shift, last nonzero power); nullopt for the zero operator.
std::optional<std::pair<std::size_t, std::size_t>> extent(const std::vector<IntVector>& g) {
  std::optional<std::size_t> top_i;
  std::size_t top_j = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j) {
      if (g[i][j] == 0) continue;
      top_i = i;
      top_j = std::max(top_j, j);
    }
  if (!top_i) return std::nullopt;
  return std::make_pair(*top_i, top_j);
}

}  // namespace

bool Recurrence::operator==(const Recurrence& other) const {
  auto a = extent(grid_);
  auto b = extent(other.grid_);
  if (a != b) return false;
  if (!a) return true;
  for (std::size_t i = 0; i <= a->first; ++i)
    for (std::size_t j = 0; j <= a->second; ++j) {
      if (grid_[i][j] != other.grid_[i][j]) return false;
    }
  return true;
}

LeadingCoefficientVanishes::LeadingCoefficientVanishes(long n)
    : std::runtime_error("leading coefficient vanishes at n = " + std::to_string(n)), n_(n) {}

RatVector unroll(const Recurrence& rec, const RatVector& initial, std::size_t count) {
  const std::size_t r = rec.order();
  if (initial.size() < r) throw std::invalid_argument("unroll: fewer initial terms than the order");
  RatVector a = initial;
  a.reserve(initial.size() + count);
  Rat acc;
  for (std::size_t step = 0; step < count; ++step) {
    const std::size_t idx = initial.size() + step;
    const long n = static_cast<long>(idx - r);
    const Int nn(n);
    Int lead = rec.poly_at(r, nn);
    if (lead == 0) throw LeadingCoefficientVanishes(n);
    acc = 0;
    for (std::size_t i = 0; i < r; ++i) {
      Int p = rec.poly_at(i, nn);
      if (p != 0) acc += Rat(p) * a[static_cast<std::size_t>(n) + i];
    }
    a.push_back(-acc / Rat(lead));
  }
  return RatVector(a.begin() + static_cast<std::ptrdiff_t>(initial.size()), a.end());
}

bool fits_data(const Recurrence& rec, const SequenceData& data) {
  const std::size_t r = rec.order();
  if (data.last_index() < r) throw std::invalid_argument("fits_data: fewer terms than order + 1");
  Rat acc;
  for (std::size_t n = 0; n + r <= data.last_index(); ++n) {
    acc = 0;
    const Int nn(static_cast<unsigned long>(n));
    for (std::size_t i = 0; i <= r; ++i) {
      Int p = rec.poly_at(i, nn);
      if (p != 0) acc += Rat(p) * data.terms[n + i];
    }
    if (acc != 0) return false;
  }
  return true;
}

bool integrality_check(const Recurrence& rec, const SequenceData& data, std::size_t t) {
  if (!data.integral()) throw std::invalid_argument("integrality_check: data not integral");
  if (data.size() < rec.order()) throw std::invalid_argument("integrality_check: fewer terms than order");
  try {
    for (const auto& x : unroll(rec, data.terms, t)) {
      if (!is_integer(x)) return false;
    }
  } catch (const LeadingCoefficientVanishes&) {
    return false;
  }
  return true;
}

namespace {

std::string format_poly(const IntVector& coeffs) {
  std::string out;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    const Int& c = coeffs[j];
    if (c == 0) continue;
    Int mag = abs(c);
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (j == 0 || mag != 1) out += mag.get_str();
    if (j >= 1) out += "n";
    if (j >= 2) out += "^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }
  }

  Recurrence parse() {
    std::vector<std::pair<std::size_t, IntVector>> terms;
    if (s_ != "0=0") {
      for (;;) {
        terms.push_back(term());
        if (peek() == '+') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect("=0");
    if (pos_ != s_.size()) fail("trailing characters");
    std::size_t r = 0, d = 0;
    for (const auto& [shift, poly] : terms) {
      r = std::max(r, shift);
      d = std::max(d, poly.size() - 1);
    }
    std::vector<IntVector> grid(r + 1, IntVector(d + 1));
    for (const auto& [shift, poly] : terms)
      for (std::size_t j = 0; j < poly.size(); ++j) grid[shift][j] += poly[j];
    return Recurrence(std::move(grid));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_recurrence: " + what + " at offset " + std::to_string(pos_));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void expect(std::string_view lit) {
    if (s_.compare(pos_, lit.size(), lit) != 0) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::pair<std::size_t, IntVector> term() {
    expect("(");
    IntVector poly = polynomial();
    expect(")*a(n");
    std::size_t shift = 0;
    if (peek() == '+') {
      ++pos_;
      std::string ds = digits();
      if (ds.empty()) fail("expected shift");
      shift = std::stoul(ds);
    }
    expect(")");
    return {shift, poly};
  }

  IntVector polynomial() {
    IntVector poly(1);
    bool first = true;
    while (peek() != ')') {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (peek() == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected sign");
      }
      first = false;
      std::string ds = digits();
      Int c = ds.empty() ? Int(1) : Int(ds);
      std::size_t power = 0;
      if (peek() == 'n') {
        ++pos_;
        power = 1;
        if (peek() == '^') {
          ++pos_;
          std::string ps = digits();
          if (ps.empty()) fail("expected exponent");
          power = std::stoul(ps);
        }
      } else if (ds.empty()) {
        fail("expected coefficient");
      }
      if (poly.size() <= power) poly.resize(power + 1);
      poly[power] += sign * c;
    }
    return poly;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const Recurrence& rec) {
  std::string out;
  for (std::size_t i = 0; i <= rec.order(); ++i) {
    const IntVector& row = rec.grid()[i];
    if (is_zero(row)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + format_poly(row) + ")*a(n" + (i ? "+" + std::to_string(i) : "") + ")";
  }
  if (out.empty()) out = "0";
  return out + " = 0";
}

Recurrence parse_recurrence(std::string_view text) { return Parser(text).parse(); }

}  // namespace zguess
