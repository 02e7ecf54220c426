#ifndef VLIE_SCALAR_HPP
#define VLIE_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vlie {

/// Exact rational scalar. Always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (no whitespace, no floating point). Throws Error.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Generalized binomial n(n-1)...(n-i+1)/i! for any integer n and i >= 0.
Rational gen_binomial(long n, long i);

/// n(n-1)...(n-i+1), the empty product for i == 0.
Rational falling_factorial(long n, long i);

Rational factorial(long n);

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace vlie

#endif  // VLIE_SCALAR_HPP
