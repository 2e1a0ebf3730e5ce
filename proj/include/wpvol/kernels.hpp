#ifndef WPVOL_KERNELS_HPP
#define WPVOL_KERNELS_HPP

#include "wpvol/lpoly.hpp"

namespace wpvol {

/// One-variable even polynomial in t.
using KernelPoly = LPoly;

// Floating-point kernel functions, evaluated in overflow-free form.

/// H(x,y) = 1/(1+e^{(x+y)/2}) + 1/(1+e^{(x-y)/2})
double H_num(double x, double y);
/// D(x,y,z) = 2 log((e^{x/2} + e^{(y+z)/2}) / (e^{-x/2} + e^{(y+z)/2}))
double D_num(double x, double y, double z);
/// R(x,y,z) = x - log((cosh(y/2) + cosh((x+z)/2)) / (cosh(y/2) + cosh((x-z)/2)))
double R_num(double x, double y, double z);

/// F_{2k+1}(t) = int_0^inf x^{2k+1} H(x,t) dx, exact. Cached; the returned
/// reference stays valid for the life of the program.
const KernelPoly& kernel_F(unsigned k);

/// G_{i,j}(t) = int_0^inf int_0^inf x^{2i+1} y^{2j+1} H(x+y,t) dx dy, exact.
const KernelPoly& kernel_double(unsigned i, unsigned j);

/// 1/2 (F(a+b) + F(a-b)) as a polynomial in (a, b).
LPoly shifted_sum(const KernelPoly& f);

/// Coefficient of t^{2m} in a kernel polynomial.
const PiPoly& kernel_coeff(const KernelPoly& f, unsigned m);

}  // namespace wpvol

#endif  // WPVOL_KERNELS_HPP
