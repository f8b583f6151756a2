#include "xqcalc/wallis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xqcalc {

namespace {

void check_exponents(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("trigonometric moment exponents must be >= 0");
}

// Primitive of cos^p sin^q evaluated at x, reduced to the four base cases
// p, q in {0, 1}:
//   I(p,q) = -cos^{p+1} sin^{q-1} / (p+q) + (q-1)/(p+q) I(p, q-2)
//   I(p,q) =  cos^{p-1} sin^{q+1} / (p+q) + (p-1)/(p+q) I(p-2, q)
double primitive(int p, int q, double x) {
  const double c = std::cos(x);
  const double s = std::sin(x);
  double boundary = 0.0;
  double factor = 1.0;
  while (q >= 2) {
    const double n = p + q;
    boundary += factor * (-std::pow(c, p + 1) * std::pow(s, q - 1) / n);
    factor *= (q - 1) / n;
    q -= 2;
  }
  while (p >= 2) {
    const double n = p + q;
    boundary += factor * (std::pow(c, p - 1) * std::pow(s, q + 1) / n);
    factor *= (p - 1) / n;
    p -= 2;
  }
  double base = 0.0;
  if (p == 0 && q == 0) base = x;
  else if (p == 1 && q == 0) base = s;
  else if (p == 0 && q == 1) base = -c;
  else base = 0.5 * s * s;
  return boundary + factor * base;
}

}  // namespace

double wallis_full(int a, int b) {
  check_exponents(a, b);
  if (a % 2 != 0 || b % 2 != 0) return 0.0;
  double w = 2.0 * std::numbers::pi;
  // W(0,b) = (b-1)/b W(0,b-2), then W(a,b) = (a-1)/(a+b) W(a-2,b)
  for (int k = 2; k <= b; k += 2) w *= static_cast<double>(k - 1) / k;
  for (int k = 2; k <= a; k += 2) w *= static_cast<double>(k - 1) / (k + b);
  return w;
}

double wallis_half(int a, int b) {
  check_exponents(a, b);
  if (b % 2 != 0) return 0.0;
  int k0 = a % 2;
  double w = (k0 == 0) ? std::numbers::pi : 2.0;
  // H(a,0) = (a-1)/a H(a-2,0), then H(a,b) = (b-1)/(a+b) H(a,b-2)
  for (int k = k0 + 2; k <= a; k += 2) w *= static_cast<double>(k - 1) / k;
  for (int k = 2; k <= b; k += 2) w *= static_cast<double>(k - 1) / (a + k);
  return w;
}

double trig_moment(int p, int q, double lo, double hi) {
  check_exponents(p, q);
  return primitive(p, q, hi) - primitive(p, q, lo);
}

}  // namespace xqcalc
