#include "starmap/arith.hpp"

#include <string>

#include "starmap/error.hpp"

namespace starmap {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
  if (den == 0) throw Inconsistency(std::string(context) + ": division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Inconsistency(std::string(context) + ": " + num.get_str() + " is not divisible by " +
                        den.get_str());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt to_integer(const Rational& q, const char* context) {
  if (q.get_den() != 1) {
    throw Inconsistency(std::string(context) + ": non-integral value " + to_string(q));
  }
  return q.get_num();
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace starmap
