#pragma once

#include "slab/quadratic.hpp"
#include "slab/word.hpp"

namespace slab {

// Coding of the rotation z -> z + alpha (mod 1) started at y: letter k is 1
// iff y + (k-1) alpha (mod 1) lies in [0, 1-alpha). Requires 0 <= y < 1 and
// 0 < alpha < 1 with alpha irrational.
struct RotationParams {
  QuadraticReal y;
  QuadraticReal alpha;
};

// Half-line x + t*theta (t > 0) against the unit grid; theta > 0
// componentwise, start x in [0,1)^2. A trajectory through a grid
// intersection (a billiard corner / the torus corner) at t > 0 is
// degenerate; a rational slope avoiding the grid codes an eventually
// periodic word and is refused.
struct LineParams {
  QuadraticReal x1, x2;
  QuadraticReal theta1, theta2;
};

WordStream rotation_stream(const RotationParams& p);

// Letter 1 per vertical grid-line crossing, 2 per horizontal; exact event
// ordering of the next-integer hitting times of the two coordinates.
WordStream cutting_stream(const LineParams& p);

// Billiard in [0,1]^2 with reflections; letter 1 per vertical-wall bounce.
// Equals the cutting sequence by unfolding, but is simulated independently.
WordStream billiard_stream(const LineParams& p);

// Linear flow on the torus R^2/Z^2; letter 1 per crossing of the vertical
// section {0} x [0,1), letter 2 per horizontal.
WordStream flow_stream(const LineParams& p);

FiniteWord rotation_word(const RotationParams& p, std::uint64_t n);
FiniteWord cutting_sequence(const LineParams& p, std::uint64_t n);
FiniteWord billiard_word(const LineParams& p, std::uint64_t n);
FiniteWord flow_word(const LineParams& p, std::uint64_t n);

// Rotation parameters coding the same word as the grid codings of p:
// alpha = theta2/(theta1+theta2), y the flow-orthogonal projection of the
// first crossing point rescaled to [0,1).
RotationParams rotation_equivalent_params(const LineParams& p);

// Billiard trajectory rendering: 512x512 viewport, stroke-only polyline with
// letter labels at bounce points; deterministic output. Rational slopes are
// rendered (only corner hits within the drawn bounces are refused).
std::string render_trajectory_svg(const LineParams& p, std::uint64_t bounces);

}  // namespace slab
