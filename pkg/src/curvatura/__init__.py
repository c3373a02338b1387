"""Constant-curvature plane geometry: spherical, Euclidean and hyperbolic."""
