#ifndef PARCOVER_RATIONAL_HPP
#define PARCOVER_RATIONAL_HPP

#include <cstdint>

#include <gmpxx.h>

namespace parcover {

// All degree and weight arithmetic is exact; floating point appears nowhere.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms; den must be nonzero
Rational make_rational(std::int64_t num, std::int64_t den);

Integer floor_of(const Rational &r);

// r - floor(r), in [0,1)
Rational fractional_part(const Rational &r);

// throws std::overflow_error when the value does not fit
std::int64_t to_int64(const Integer &z);

// A parabolic weight: exact rational in [0,1), stored reduced.
class Weight {
public:
  Weight() = default; // zero
  explicit Weight(Rational value);
  static Weight reduced_from(std::int64_t num, std::int64_t den);

  const Rational &value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  // weight of the same step in the dual bundle: 0 -> 0, a -> 1 - a
  Weight dual() const;

  friend bool operator==(const Weight &a, const Weight &b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Weight &a, const Weight &b) {
    return a.value_ < b.value_;
  }

private:
  Rational value_ = 0;
};

} // namespace parcover

#endif
