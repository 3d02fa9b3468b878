#include "censband/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace censband {

QuadratureRule::QuadratureRule(int n) {
  if (n < 1) throw std::invalid_argument("quadrature rule needs at least one node");
  nodes_.resize(n);
  weights_.resize(n);
  // Newton iteration on Legendre polynomials, symmetric pairs.
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes_[i] = -x;
    nodes_[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights_[i] = w;
    weights_[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;
}

double QuadratureRule::integrate(double a, double b,
                                 const std::function<double(double)>& f) const {
  if (a >= b) return 0.0;
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < size(); ++i) acc += weights_[i] * f(mid + half * nodes_[i]);
  return acc * half;
}

double QuadratureRule::integrate_split(double a, double b,
                                       const std::function<double(double)>& f,
                                       std::vector<double> breaks) const {
  if (a >= b) return 0.0;
  breaks.push_back(a);
  breaks.push_back(b);
  std::sort(breaks.begin(), breaks.end());
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    double lo = std::clamp(breaks[k], a, b);
    double hi = std::clamp(breaks[k + 1], a, b);
    if (hi > lo) acc += integrate(lo, hi, f);
  }
  return acc;
}

double tensor_quadrature(const std::function<double(const std::vector<double>&)>& f,
                         const std::vector<Interval>& box, const QuadratureRule& rule) {
  const std::size_t d = box.size();
  if (d == 0) throw std::invalid_argument("tensor_quadrature: empty box");
  if (d > 4)
    throw std::invalid_argument("tensor_quadrature: dimension > 4 not supported (cost blowup)");
  const int m = rule.size();
  std::vector<double> x(d);
  std::vector<int> idx(d, 0);
  std::vector<double> mid(d), half(d);
  for (std::size_t j = 0; j < d; ++j) {
    mid[j] = 0.5 * (box[j].lo + box[j].hi);
    half[j] = 0.5 * (box[j].hi - box[j].lo);
    if (half[j] < 0.0) return 0.0;
  }
  double acc = 0.0;
  while (true) {
    double w = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      x[j] = mid[j] + half[j] * rule.nodes()[idx[j]];
      w *= rule.weights()[idx[j]] * half[j];
    }
    acc += w * f(x);
    std::size_t j = 0;
    while (j < d && ++idx[j] == m) {
      idx[j] = 0;
      ++j;
    }
    if (j == d) break;
  }
  return acc;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol) {
  if (a >= b) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, tol);
}

}  // namespace censband
