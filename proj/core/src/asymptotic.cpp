#include "wsne/auxgame.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace wsne {

// Interval certification at fixed precision: the left side is rounded up at
// every step, the right side down. A `true` answer is therefore a proof; a
// `false` answer means "not certain at this precision", which coincides with
// plain falsity everywhere the scan ranges we use are concerned.
bool check_asymptotic_inequality(int64_t n, int k, LogBase base) {
  if (n < 2 || k < 1)
    throw std::invalid_argument("check_asymptotic_inequality: require n >= 2, k >= 1");
  constexpr mpfr_prec_t prec = 128;
  mpfr_t lhs, logn, rhs, t;
  mpfr_inits2(prec, lhs, logn, rhs, t, static_cast<mpfr_ptr>(nullptr));

  unsigned long k2 = static_cast<unsigned long>(k) * static_cast<unsigned long>(k);
  if (base == LogBase::natural) {
    // e^(k^2 ln 2) * k * ln n
    mpfr_const_log2(t, MPFR_RNDU);
    mpfr_mul_ui(t, t, k2, MPFR_RNDU);
    mpfr_exp(lhs, t, MPFR_RNDU);
    mpfr_set_si(logn, n, MPFR_RNDU);
    mpfr_log(logn, logn, MPFR_RNDU);
  } else {
    // log base 2 everywhere: e^(k^2) * k * log2 n
    mpfr_set_ui(t, k2, MPFR_RNDU);
    mpfr_exp(lhs, t, MPFR_RNDU);
    mpfr_set_si(logn, n, MPFR_RNDU);
    mpfr_log2(logn, logn, MPFR_RNDU);
  }
  mpfr_mul_ui(lhs, lhs, static_cast<unsigned long>(k), MPFR_RNDU);
  mpfr_mul(lhs, lhs, logn, MPFR_RNDU);

  mpfr_set_si(rhs, n, MPFR_RNDD);
  mpfr_rootn_ui(rhs, rhs, static_cast<unsigned long>(k), MPFR_RNDD);

  bool holds = mpfr_cmp(lhs, rhs) < 0;
  mpfr_clears(lhs, logn, rhs, t, static_cast<mpfr_ptr>(nullptr));
  return holds;
}

}  // namespace wsne
