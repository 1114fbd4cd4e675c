#pragma once

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace magvac {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  // Boundary between the directly integrated panel [0, tail_split] and the
  // exponentially mapped tail.
  double tail_split = 1.0;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
      throw std::invalid_argument("QuadratureConfig: tolerances must be positive");
    if (max_subdivisions < 1)
      throw std::invalid_argument("QuadratureConfig: max_subdivisions must be >= 1");
    if (!(tail_split > 0.0))
      throw std::invalid_argument("QuadratureConfig: tail_split must be positive");
  }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  int subdivisions = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 abscissae and weights on [-1, 1].
// Nodes are strictly interior, so integrand endpoints are never evaluated.
inline constexpr double kKronrodX[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
inline void gauss_kronrod_15(F&& f, double a, double b, double& value,
                             double& error) {
  const double center = 0.5 * (a + b);
  const double halfwidth = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kKronrodW[7] * fc;
  double gauss = kGaussW[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = halfwidth * kKronrodX[i];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kKronrodW[i] * (f1 + f2);
    if (i % 2 == 1) gauss += kGaussW[i / 2] * (f1 + f2);
  }
  value = kronrod * halfwidth;
  error = std::fabs((kronrod - gauss) * halfwidth);
}

struct Panel {
  double a, b, value, error;
  bool tail;
  bool operator<(const Panel& o) const { return error < o.error; }
};

}  // namespace detail

// Adaptive integral of f over [0, infinity). The integrand must be continuous
// on (0, inf) with at worst a removable singularity at 0 and must decay like
// exp(-t/decay_scale) up to polynomial factors. The finite panel
// [0, tail_split] is bisected adaptively; the rest is mapped onto u in (0, 1]
// by t = tail_split - decay_scale*ln(u) and handled by the same rule.
template <class F>
QuadratureResult integrate_semi_infinite(F&& f, double decay_scale,
                                         QuadratureConfig config = {}) {
  config.validate();
  if (!(decay_scale > 0.0))
    throw std::domain_error("integrate_semi_infinite: decay_scale must be positive");

  const double split = config.tail_split;
  const double scale = decay_scale;
  auto mapped_tail = [&](double u) {
    const double t = split - scale * std::log(u);
    return f(t) * (scale / u);
  };
  auto evaluate = [&](detail::Panel& p) {
    if (p.tail)
      detail::gauss_kronrod_15(mapped_tail, p.a, p.b, p.value, p.error);
    else
      detail::gauss_kronrod_15(f, p.a, p.b, p.value, p.error);
  };

  std::priority_queue<detail::Panel> queue;
  double total = 0.0, total_error = 0.0;
  for (detail::Panel p : {detail::Panel{0.0, split, 0, 0, false},
                          detail::Panel{0.0, 1.0, 0, 0, true}}) {
    evaluate(p);
    total += p.value;
    total_error += p.error;
    queue.push(p);
  }

  QuadratureResult result;
  auto tolerance = [&] {
    return std::max(config.abs_tol, config.rel_tol * std::fabs(total));
  };
  while (total_error > tolerance() &&
         result.subdivisions < config.max_subdivisions) {
    detail::Panel worst = queue.top();
    queue.pop();
    detail::Panel left{worst.a, 0.5 * (worst.a + worst.b), 0, 0, worst.tail};
    detail::Panel right{left.b, worst.b, 0, 0, worst.tail};
    evaluate(left);
    evaluate(right);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++result.subdivisions;
  }

  result.value = total;
  result.error_estimate = total_error;
  result.converged = total_error <= tolerance();
  return result;
}

}  // namespace magvac
