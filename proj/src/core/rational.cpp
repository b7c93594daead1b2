#include "rational.hpp"

#include "error.hpp"

namespace llab {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  const std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    fail(ErrorKind::InvalidArgument, "not a rational number: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

Integer falling_factorial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace llab
