#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "censband/quadrature.hpp"

namespace censband {

/// Compactly supported smoothing kernel with a declared moment order.
/// Every shipped kernel integrates to one over its support and vanishes
/// outside it.
class Kernel {
 public:
  Kernel(std::string name, Interval support, int order, double total_variation,
         std::function<double(double)> eval);

  double operator()(double u) const {
    return (u < support_.lo || u > support_.hi) ? 0.0 : eval_(u);
  }
  const std::string& name() const { return name_; }
  Interval support() const { return support_; }
  int order() const { return order_; }
  double total_variation() const { return total_variation_; }

  static Kernel epanechnikov();
  static Kernel uniform();
  static Kernel biweight();
  static Kernel poly4();  // fourth-order polynomial kernel (15/8)(3/5 - u^2)
  static Kernel by_name(const std::string& name);
  static const std::vector<std::string>& shipped_names();

 private:
  std::string name_;
  Interval support_;
  int order_;
  double total_variation_;
  std::function<double(double)> eval_;
};

/// j-th moment of the kernel, integral of u^j k(u) du over the support.
double kernel_moment(const Kernel& k, int j);

struct OrderReport {
  bool ok = false;
  int gamma = 0;
  std::vector<double> moments;     // moments 1..gamma-1
  double gamma_moment = 0.0;       // moment of degree gamma
  std::string summary;
};

/// Check the moment conditions for order gamma: moments 1..gamma-1 vanish to
/// tol and the gamma moment is finite (reported).
OrderReport verify_order(const Kernel& k, int gamma, double tol);

/// Integral of k^2 over the support.
double l2_norm_sq(const Kernel& k);

/// Mixed moment of the d-dim product kernel, degrees per axis.
double product_kernel_moment(const std::vector<Kernel>& axes, const std::vector<int>& degrees);

/// Verify the product kernel's order-s condition: every mixed moment of total
/// degree 1..s-1 vanishes to tol.
bool verify_product_order(const std::vector<Kernel>& axes, int s, double tol);

}  // namespace censband
