#pragma once

namespace ehvi {

/// Standard normal density. Returns 0 at +-infinity.
double std_normal_pdf(double s);

/// Standard normal distribution function, Phi(-inf) = 0, Phi(+inf) = 1.
double std_normal_cdf(double s);

/// Upper tail 1 - Phi(s), evaluated without cancellation.
double std_normal_sf(double s);

/// Probability mass of N(mu, sigma^2) on [l, u). Uses whichever tail keeps
/// the subtraction well conditioned.
double normal_mass(double l, double u, double mu, double sigma);

/// Upper-tail first moment about a:
///
///   psi(a, b, mu, sigma) = integral_b^inf (z - a) N(z; mu, sigma) dz
///                        = sigma * phi(t) + (mu - a) * (1 - Phi(t)),   t = (b - mu) / sigma
///
/// so that psi(a, l) - psi(a, u) is the partial improvement over [l, u).
/// b may be +-infinity. Throws InvalidPredictor if sigma <= 0.
double psi(double a, double b, double mu, double sigma);

/// integral_l^u (z - fbest) N(z; mu, sigma) dz for l <= u, clamped at zero
/// against rounding. Throws InvalidArgument if l > u.
double partial_ei_1d(double fbest, double l, double u, double mu, double sigma);

}  // namespace ehvi
