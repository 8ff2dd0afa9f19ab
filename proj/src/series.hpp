#pragma once

// Internal helpers shared by the special-function translation units.

#include <cmath>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "weberosc/errors.hpp"
#include "weberosc/specfun.hpp"

namespace weberosc::specfun::detail {

using real = long double;

inline constexpr real kEps = std::numeric_limits<real>::epsilon();
inline constexpr real kPi = 3.141592653589793238462643383279502884L;
inline constexpr real kSqrtPi = 1.772453850905516027298167483341145183L;

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  explicit CompensatedSum(real init = 0) : sum_{init} {}

  void add(real v) {
    const real t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  real value() const { return sum_ + comp_; }

 private:
  real sum_ = 0;
  real comp_ = 0;
};

#if defined(__SIZEOF_FLOAT128__)
__extension__ typedef __float128 wide;
inline constexpr real kWideEps = 1.0e-34L;
#else
using wide = long double;
inline constexpr real kWideEps = kEps;
#endif

/// Value of a series with a bound on its rounding error.
struct SeriesValue {
  real value;
  real error;
};

// Above this ratio of sum |t_n| to |sum t_n| the series is re-summed in wide
// arithmetic.
inline constexpr real kCancellationLimit = 1e3L;

template <unsigned Digits>
using multi = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Digits>,
    boost::multiprecision::et_off>;

template <class T>
inline T abs_of(const T& v) {
  return v < 0 ? T(-v) : v;
}

template <class T, class Ratio>
SeriesValue sum_terms(Ratio ratio, const SeriesControl& ctl, const char* name,
                      real eps) {
  T term = 1;
  T sum = 1;
  real magnitude = 1;
  int quiet = 0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    const T r = ratio(static_cast<T>(n));
    term *= r;
    if (term == 0) {
      return {static_cast<real>(sum), eps * magnitude};
    }
    sum += term;
    magnitude += static_cast<real>(abs_of(term));
    if (!std::isfinite(magnitude)) {
      throw ConvergenceError(std::string(name) + ": series overflowed");
    }
    if (abs_of(term) <= static_cast<T>(ctl.rel_tol) * abs_of(sum) &&
        abs_of(r) < 1) {
      if (++quiet == 3) {
        return {static_cast<real>(sum), eps * magnitude};
      }
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError(std::string(name) + ": no convergence within " +
                         std::to_string(ctl.max_terms) + " terms");
}

/// Sums 1 + t_1 + t_2 + ... with t_{n+1} = t_n * ratio(n). The ratio must be
/// callable with both real and wide arguments.
template <class Ratio>
SeriesValue sum_hypergeometric(Ratio ratio, const SeriesControl& ctl,
                               const char* name) {
  SeriesValue s = sum_terms<real>(ratio, ctl, name, kEps);
  if (s.error <= kCancellationLimit * kEps * std::fabs(s.value)) {
    return s;
  }
  // The wide pass and each later one keep about 17 digits beyond double.
  const auto settled = [](const SeriesValue& v) {
    return v.error <= 1e-17L * std::fabs(v.value);
  };
  s = sum_terms<wide>(ratio, ctl, name, kWideEps);
  if (settled(s)) {
    return s;
  }
  s = sum_terms<multi<60>>(ratio, ctl, name, 1e-60L);
  if (settled(s)) {
    return s;
  }
  s = sum_terms<multi<120>>(ratio, ctl, name, 1e-120L);
  if (settled(s)) {
    return s;
  }
  return sum_terms<multi<240>>(ratio, ctl, name, 1e-240L);
}

inline bool is_nonpositive_integer(real x) {
  return x <= 0 && std::floor(x) == x;
}

/// sin(pi x), exact zero at integers.
inline real sinpi(real x) {
  real r = std::fmod(x, real(2));
  if (r > 1) {
    r -= 2;
  } else if (r <= -1) {
    r += 2;
  }
  if (r == 0 || r == 1) {
    return 0;
  }
  if (r > 0.5L) {
    r = 1 - r;
  } else if (r < -0.5L) {
    r = -1 - r;
  }
  return std::sin(kPi * r);
}

/// 1/Γ(x) in extended precision.
inline real recip_gamma(real x) {
  if (is_nonpositive_integer(x)) {
    return 0;
  }
  if (x > 0) {
    return x < 1700 ? 1 / std::tgamma(x) : std::exp(-std::lgamma(x));
  }
  return sinpi(x) * std::tgamma(1 - x) / kPi;
}

/// Kummer series for z >= 0 without transformation.
inline SeriesValue kummer_series(real a, real b, real z,
                                 const SeriesControl& ctl) {
  return sum_hypergeometric(
      [=](auto n) {
        using T = decltype(n);
        return (T(a) + n) * T(z) / ((T(b) + n) * (n + 1));
      },
      ctl, "kummer_1f1");
}

}  // namespace weberosc::specfun::detail
