#pragma once

#include <functional>
#include <vector>

namespace censband {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double t) const { return t >= lo && t <= hi; }
};

/// Gauss-Legendre rule on [-1,1]; exact for polynomials up to degree 2n-1.
class QuadratureRule {
 public:
  explicit QuadratureRule(int n);

  int size() const { return static_cast<int>(nodes_.size()); }
  int exact_degree() const { return 2 * size() - 1; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  double integrate(double a, double b, const std::function<double(double)>& f) const;

  /// Integrate over [a,b] split at the given breakpoints (those inside the
  /// interval; callers pass kernel support edges and similar kinks).
  double integrate_split(double a, double b, const std::function<double(double)>& f,
                         std::vector<double> breaks) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Tensor-product Gauss-Legendre integral of f over a box. Guarded to
/// dimension <= 4; the cost grows as size()^d.
double tensor_quadrature(const std::function<double(const std::vector<double>&)>& f,
                         const std::vector<Interval>& box, const QuadratureRule& rule);

/// Adaptive 1-D integral (Gauss-Kronrod) to the requested absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10);

}  // namespace censband
