#include "weberosc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "weberosc/errors.hpp"

namespace weberosc::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae on [0, 1]; odd indices are the Gauss-10 nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077715451540710, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  double resabs;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double lo,
                      double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = kWgk[10] * fc;
  double gauss = 0.0;
  double resabs = std::fabs(kronrod);
  std::array<double, 10> fsum{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fsum[j] = f1 + f2;
    kronrod += kWgk[j] * fsum[j];
    resabs += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) {
      gauss += kWg[j / 2] * fsum[j];
    }
  }
  const double mean = 0.5 * kronrod;
  double resasc = kWgk[10] * std::fabs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * std::fabs(fsum[j] - 2 * mean);
  }
  const double scale = std::fabs(half);
  const double value = kronrod * half;
  double error = std::fabs((kronrod - gauss) * half);
  resabs *= scale;
  resasc *= scale;
  if (resasc != 0 && error != 0) {
    error = resasc * std::min(1.0, std::pow(200 * error / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50 * kEps)) {
    error = std::max(50 * kEps * resabs, error);
  }
  if (!std::isfinite(value) || !std::isfinite(error)) {
    throw QuadratureError("integrate_adaptive: integrand is not finite");
  }
  return {lo, hi, value, error, resabs};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double lo, double hi,
                                    const QuadratureOptions& opts) {
  if (!(opts.rel_tol >= 0) || !(opts.abs_tol >= 0) || opts.max_intervals < 1) {
    throw DomainError("integrate_adaptive: invalid options");
  }
  if (lo == hi) {
    return {0.0, 0.0, 0};
  }
  std::priority_queue<Segment> heap;
  heap.push(gauss_kronrod(f, lo, hi));
  int evaluations = 21;
  double value = heap.top().value;
  double error = heap.top().error;
  double resabs = heap.top().resabs;
  int intervals = 1;
  while (true) {
    const double tol = std::max(
        {opts.abs_tol, opts.rel_tol * std::fabs(value), 100 * kEps * resabs});
    if (error <= tol) {
      break;
    }
    if (intervals >= opts.max_intervals) {
      throw QuadratureError("integrate_adaptive: interval limit reached");
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Segment left = gauss_kronrod(f, worst.lo, mid);
    const Segment right = gauss_kronrod(f, mid, worst.hi);
    evaluations += 42;
    ++intervals;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    resabs += left.resabs + right.resabs - worst.resabs;
    heap.push(left);
    heap.push(right);
  }
  // Re-add from scratch to drop the drift of the running updates.
  double total = 0.0;
  double total_error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_error += heap.top().error;
    heap.pop();
  }
  return {total, total_error, evaluations};
}

}  // namespace weberosc::quad
