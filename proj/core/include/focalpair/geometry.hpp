#pragma once

namespace focalpair {

/// Fraction of a dipole's spontaneous emission collected by a circular
/// aperture subtending a cone of the given half-angle, weighted by the
/// dipole radiation pattern:
///
///   kappa = (3 / 8 pi) * integral over the cone of (1 - |p.k|^2) dOmega
///
/// The dipole moment p points along z; axis_tilt is the angle between the
/// cone axis and z. Evaluated by adaptive panel quadrature to an absolute
/// tolerance of 1e-10.
///
/// half_angle must lie in [0, pi], axis_tilt in [0, pi/2]; throws
/// std::domain_error otherwise. A zero aperture returns exactly 0; the full
/// sphere integrates to 1.
double kappa_from_cone(double half_angle, double axis_tilt = 0.0);

/// Closed form of the same weight for an aperture centred on the dipole
/// axis (axis_tilt = 0).
double kappa_cone_axial(double half_angle);

}  // namespace focalpair
