#pragma once

namespace xqcalc {

/// Integral of cos^a(theta) sin^b(theta) over [0, 2 pi].
double wallis_full(int a, int b);

/// Integral of sin^a(phi) cos^b(phi) over [0, pi].
double wallis_half(int a, int b);

/// Integral of cos^p(x) sin^q(x) over [lo, hi] for arbitrary (signed) bounds,
/// by the standard power-reduction formulas.
double trig_moment(int p, int q, double lo, double hi);

}  // namespace xqcalc
