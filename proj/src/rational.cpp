#include "parcover/rational.hpp"

#include <stdexcept>

namespace parcover {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw std::invalid_argument("zero denominator");
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

Integer floor_of(const Rational &r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational fractional_part(const Rational &r) {
  Rational result = r - Rational(floor_of(r));
  return result;
}

std::int64_t to_int64(const Integer &z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(z.get_si());
}

Weight::Weight(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ >= 1)
    throw std::invalid_argument("parabolic weight must lie in [0,1)");
}

Weight Weight::reduced_from(std::int64_t num, std::int64_t den) {
  return Weight(make_rational(num, den));
}

Weight Weight::dual() const {
  if (is_zero())
    return Weight();
  Rational flipped = 1 - value_;
  return Weight(std::move(flipped));
}

} // namespace parcover
