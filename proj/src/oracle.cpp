#include "wpvol/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wpvol/kernels.hpp"

namespace wpvol::oracle {

GaussRule gauss_legendre(unsigned points) {
  if (points == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  const double n = points;
  for (unsigned i = 0; i < (points + 1) / 2; ++i) {
    // Newton iteration from the Tricomi initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (unsigned k = 2; k <= points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[points - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[points - 1 - i] = w;
  }
  return rule;
}

double exp_moment_tail(unsigned m, double T) {
  // 2^{m+1} Gamma(m+1, T/2) = 2^{m+1} m! e^{-T/2} sum_{j<=m} (T/2)^j / j!
  const double z = 0.5 * T;
  double term = 1.0;
  double sum = 1.0;
  for (unsigned j = 1; j <= m; ++j) {
    term *= z / j;
    sum += term;
  }
  const double log_value = (m + 1.0) * std::numbers::ln2 + std::lgamma(m + 1.0) - z + std::log(sum);
  return std::exp(log_value);
}

namespace {

/// Composite nodes and weights on [0, T].
void composite_nodes(double T, double width, const GaussRule& rule, std::vector<double>& xs,
                     std::vector<double>& ws) {
  const auto panels = static_cast<std::size_t>(std::ceil(T / width));
  const double h = T / static_cast<double>(panels);
  xs.clear();
  ws.clear();
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = (static_cast<double>(p) + 0.5) * h;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      xs.push_back(mid + 0.5 * h * rule.nodes[i]);
      ws.push_back(0.5 * h * rule.weights[i]);
    }
  }
}

double single_sum(unsigned m, double t, double T, double width, const GaussRule& rule) {
  std::vector<double> xs;
  std::vector<double> ws;
  composite_nodes(T, width, rule, xs, ws);
  long double acc = 0.0L;
  for (std::size_t i = 0; i < xs.size(); ++i) acc += ws[i] * std::pow(xs[i], m) * H_num(xs[i], t);
  return static_cast<double>(acc);
}

double double_sum(unsigned a, unsigned b, double t, double T, double width, const GaussRule& rule) {
  std::vector<double> xs;
  std::vector<double> ws;
  composite_nodes(T, width, rule, xs, ws);
  const std::size_t count = xs.size();
  std::vector<double> wa(count);
  std::vector<double> wb(count);
  for (std::size_t i = 0; i < count; ++i) {
    wa[i] = ws[i] * std::pow(xs[i], a);
    wb[i] = ws[i] * std::pow(xs[i], b);
  }
  std::vector<double> rows(count);
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t p = 0; p < n; ++p) {
    const auto i = static_cast<std::size_t>(p);
    long double row = 0.0L;
    for (std::size_t j = 0; j < count; ++j) row += wb[j] * H_num(xs[i] + xs[j], t);
    rows[i] = static_cast<double>(wa[i] * row);
  }
  // Fixed-order final reduction keeps the result independent of the thread count.
  long double acc = 0.0L;
  for (double r : rows) acc += r;
  return static_cast<double>(acc);
}

/// H(x,t) <= 2 e^{(t-x)/2} for t >= 0.
double single_tail(unsigned m, double t, double T) { return 2.0 * std::exp(0.5 * t) * exp_moment_tail(m, T); }

double double_tail(unsigned a, unsigned b, double t, double T) {
  return 2.0 * std::exp(0.5 * t) *
         (exp_moment_tail(a, T) * exp_moment_tail(b, 0.0) + exp_moment_tail(a, 0.0) * exp_moment_tail(b, T));
}

}  // namespace

QuadResult quad_F(unsigned k, double t) {
  if (k > 10 || t < 0.0 || t > 20.0) throw std::domain_error("quad_F: outside k <= 10, 0 <= t <= 20");
  const unsigned m = 2 * k + 1;
  QuadResult r;
  r.spec.panel_width = 1.0;
  r.spec.points = 20;
  r.spec.truncation = std::max(20.0, 2.0 * t);
  while (single_tail(m, t, r.spec.truncation) >= r.spec.tail_target) r.spec.truncation += 10.0;
  r.tail_bound = single_tail(m, t, r.spec.truncation);

  const GaussRule rule = gauss_legendre(r.spec.points);
  const double fine = single_sum(m, t, r.spec.truncation, r.spec.panel_width, rule);
  const double coarse = single_sum(m, t, r.spec.truncation, 2.0 * r.spec.panel_width, rule);
  r.value = fine;
  r.error_estimate = std::abs(fine - coarse) + r.tail_bound;
  return r;
}

QuadResult quad_double(unsigned i, unsigned j, double t) {
  if (i + j > 5 || t < 0.0 || t > 10.0) throw std::domain_error("quad_double: outside i+j <= 5, 0 <= t <= 10");
  const unsigned a = 2 * i + 1;
  const unsigned b = 2 * j + 1;
  QuadResult r;
  r.spec.panel_width = 2.0;
  r.spec.points = 12;
  r.spec.truncation = std::max(20.0, 2.0 * t);
  while (double_tail(a, b, t, r.spec.truncation) >= r.spec.tail_target) r.spec.truncation += 10.0;
  r.tail_bound = double_tail(a, b, t, r.spec.truncation);

  const GaussRule rule = gauss_legendre(r.spec.points);
  const double fine = double_sum(a, b, t, r.spec.truncation, r.spec.panel_width, rule);
  const double coarse = double_sum(a, b, t, r.spec.truncation, 2.0 * r.spec.panel_width, rule);
  r.value = fine;
  r.error_estimate = std::abs(fine - coarse) + r.tail_bound;
  return r;
}

namespace {

constexpr std::array<double, 4> kGrid{0.5, 1.0, 2.0, 5.0};
constexpr double kStep = 1e-4;

OracleCheck make_check(std::string name, std::string grid, double dev, double tol) {
  return {std::move(name), std::move(grid), dev, tol, dev < tol};
}

double kernel_value(const KernelPoly& f, double t) {
  // t is a small integer in every caller, so t^2 is exact.
  const Rat t2(static_cast<long>(std::lround(t * t)));
  const Rat squares[] = {t2};
  return evaluate_squares(f, squares).to_double();
}

}  // namespace

std::vector<OracleCheck> kernel_identity_suite() {
  const std::string grid = "{0.5,1,2,5}^3";
  double fd_d = 0.0;
  double fd_r = 0.0;
  double ident = 0.0;
  double even = 0.0;
  for (double x : kGrid) {
    for (double y : kGrid) {
      for (double z : kGrid) {
        const double dd = (D_num(x + kStep, y, z) - D_num(x - kStep, y, z)) / (2.0 * kStep);
        fd_d = std::max(fd_d, std::abs(dd - H_num(y + z, x)));
        const double dr = (R_num(x + kStep, y, z) - R_num(x - kStep, y, z)) / (2.0 * kStep);
        fd_r = std::max(fd_r, std::abs(2.0 * dr - H_num(z, x + y) - H_num(z, x - y)));
        ident = std::max(ident, std::abs(R_num(x, y, z) + R_num(x, z, y) - x - D_num(x, y, z)));
      }
      even = std::max(even, std::abs(H_num(x, y) - H_num(x, -y)));
    }
  }
  const double origin = std::max(std::abs(D_num(0, 0, 0)), std::abs(R_num(0, 0, 0)));
  return {
      make_check("dD/dx = H(y+z,x)", grid + ", central step 1e-4", fd_d, 1e-6),
      make_check("2 dR/dx = H(z,x+y) + H(z,x-y)", grid + ", central step 1e-4", fd_r, 1e-6),
      make_check("R(x,y,z) + R(x,z,y) = x + D(x,y,z)", grid, ident, 1e-10),
      make_check("H(x,y) = H(x,-y)", "{0.5,1,2,5}^2", even, 1e-15),
      make_check("D(0,0,0) = R(0,0,0) = 0", "origin", origin, 1e-15),
  };
}

std::vector<OracleCheck> closed_form_suite() {
  constexpr std::array<double, 3> kT{0.0, 1.0, 5.0};
  std::vector<OracleCheck> out;
  for (unsigned k = 0; k <= 8; ++k) {
    double dev = 0.0;
    for (double t : kT) {
      const double exact = kernel_value(kernel_F(k), t);
      dev = std::max(dev, std::abs(quad_F(k, t).value - exact) / std::max(1.0, std::abs(exact)));
    }
    out.push_back(make_check("F_" + std::to_string(2 * k + 1) + " closed form vs quadrature (relative)",
                             "t in {0,1,5}", dev, 1e-8));
  }
  for (unsigned i = 0; i <= 5; ++i) {
    for (unsigned j = 0; i + j <= 5; ++j) {
      double dev = 0.0;
      for (double t : kT) {
        const double exact = kernel_value(kernel_double(i, j), t);
        dev = std::max(dev, std::abs(quad_double(i, j, t).value - exact) / std::max(1.0, std::abs(exact)));
      }
      out.push_back(make_check("G_{" + std::to_string(i) + "," + std::to_string(j) +
                                   "} closed form vs quadrature (relative)",
                               "t in {0,1,5}", dev, 1e-8));
    }
  }
  return out;
}

}  // namespace wpvol::oracle
