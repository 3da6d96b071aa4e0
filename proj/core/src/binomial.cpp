#include "tautring/binomial.hpp"

namespace tautring {

Integer binom(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // binom(-m, k) = (-1)^k binom(m+k-1, k)
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), Integer(-n + k - 1).get_mpz_t(), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : Integer(-r);
}

}  // namespace tautring
