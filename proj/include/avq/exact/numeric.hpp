#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace avq {

/// Arbitrary-precision integer.
using Int = mpz_class;
/// Arbitrary-precision rational; GMP keeps it reduced with a positive denominator.
using Rat = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A closure, orbit or enumeration hit its configured size cap.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// Input data violated a documented invariant.
class ValidationError : public Error {
public:
  using Error::Error;
};

inline Rat make_rat(const Int &num, const Int &den) {
  if (den == 0)
    throw Error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat &r) { return r.get_den() == 1; }

/// Floor of a rational number.
inline Int floor_rat(const Rat &r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

/// Representative of r modulo 1 in [0, 1).
inline Rat frac(const Rat &r) { return r - Rat(floor_rat(r)); }

/// Floor-mod for integers, result in [0, |m|).
inline Int mod_floor(const Int &a, const Int &m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0)
    r += abs(m);
  return r;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t to_i64(const Int &v) {
  if (!v.fits_slong_p())
    throw Error("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

/// Parses "p", "-p" or "p/q".
Rat parse_rat(std::string_view text);

std::string to_string(const Rat &r);
std::string to_string(const Int &v);

}  // namespace avq
