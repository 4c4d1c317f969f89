#pragma once

// Arbitrary-precision scalars shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zguess {

using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Parses a decimal integer ("-12", "+7"). Throws std::invalid_argument.
Int parse_int(std::string_view text);

/// Parses "p", "p/q" or a finite decimal ("0.99") into a canonical rational.
Rat parse_rat(std::string_view text);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

inline Int make_int(long v) { return Int(v); }

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// floor(a / b) for b != 0.
Int floor_div(const Int& a, const Int& b);

/// Nearest integer to a / b, halves rounded toward +infinity.
Int round_div(const Int& a, const Int& b);

/// a mod b in [0, |b|).
Int mod_floor(const Int& a, const Int& b);

/// Generalized binomial coefficient C(n, k) for any integer n (GMP convention
/// C(-n, k) = (-1)^k C(n+k-1, k)); this is the value of the polynomial
/// x(x-1)...(x-k+1)/k! at x = n.
Int binomial(const Int& n, unsigned long k);

Int power(const Int& base, unsigned long exponent);

/// log2(|x|); -infinity for zero.
double log2_abs(const Int& x);

/// gcd of all entries (0 for an all-zero or empty vector).
Int content(const IntVector& v);

/// Flips v in place so its first nonzero entry is positive.
void normalize_sign(IntVector& v);

bool is_zero(const IntVector& v);

Int dot(const IntVector& a, const IntVector& b);

/// Integer square norm.
inline Int norm2(const IntVector& v) { return dot(v, v); }

/// Lexicographic comparison on equal-length vectors.
bool lex_less(const IntVector& a, const IntVector& b);

IntVector to_int_vector(std::initializer_list<long> values);

std::string to_string(const IntVector& v);

}  // namespace zguess
