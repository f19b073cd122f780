#include "slab/codings.hpp"

#include <cstdio>
#include <memory>
#include <vector>

namespace slab {

namespace {

void validate_rotation(const RotationParams& p) {
  QuadraticReal zero(0), one(1);
  require(p.y >= zero && p.y < one, "invalid-arguments", "rotation start must be in [0,1)");
  require(p.alpha > zero && p.alpha < one, "invalid-arguments",
          "rotation angle must be in (0,1)");
  require(!p.alpha.is_rational(), "invalid-arguments",
          "rational rotation angle codes an eventually periodic word; refused");
}

void validate_line_ranges(const LineParams& p) {
  QuadraticReal zero(0), one(1);
  require(p.x1 >= zero && p.x1 < one && p.x2 >= zero && p.x2 < one, "invalid-arguments",
          "start point must be in [0,1)^2");
  require(p.theta1 > zero && p.theta2 > zero, "invalid-arguments",
          "direction must be positive componentwise");
}

// Rational slope p/q (lowest terms): the line hits a grid intersection at
// some t > 0 iff p*x1 - q*x2 is an integer; otherwise its coding would be
// eventually periodic and is refused. Irrational slopes pass through (grid
// hits, if any, surface as simultaneous events during simulation).
void guard_coding_slope(const LineParams& p) {
  QuadraticReal slope = p.theta2 / p.theta1;
  if (!slope.is_rational()) return;
  Rat s = slope.as_rational();
  QuadraticReal r = QuadraticReal(Rat(s.get_num())) * p.x1 -
                    QuadraticReal(Rat(s.get_den())) * p.x2;
  require(r.frac().sign() != 0, "degenerate-trajectory",
          "trajectory passes through a grid intersection");
  fail("invalid-arguments", "rational slope codes an eventually periodic word; refused");
}

FiniteWord take(const WordStream& s, std::uint64_t n) { return s.prefix(n); }

}  // namespace

WordStream rotation_stream(const RotationParams& p) {
  validate_rotation(p);
  struct State {
    QuadraticReal z, alpha, threshold;
  };
  auto st = std::make_shared<State>(
      State{p.y, p.alpha, QuadraticReal(1) - p.alpha});
  std::string label = "rotation(" + p.y.str() + "," + p.alpha.str() + ")";
  return WordStream(Alphabet(), label, [st](std::vector<Letter>& buf) {
    for (int i = 0; i < 64; ++i) {
      buf.push_back(st->z < st->threshold ? 1 : 2);
      st->z = (st->z + st->alpha).frac();
    }
  });
}

WordStream cutting_stream(const LineParams& p) {
  validate_line_ranges(p);
  guard_coding_slope(p);
  struct State {
    QuadraticReal X1, X2, t1, t2;
  };
  auto st = std::make_shared<State>(State{p.x1, p.x2, p.theta1, p.theta2});
  std::string label = "cutting(" + p.x1.str() + "," + p.x2.str() + ";" + p.theta1.str() +
                      "," + p.theta2.str() + ")";
  return WordStream(Alphabet(), label, [st](std::vector<Letter>& buf) {
    for (int i = 0; i < 16; ++i) {
      QuadraticReal c1{Int(st->X1.floor() + 1)};
      QuadraticReal c2{Int(st->X2.floor() + 1)};
      QuadraticReal tv = (c1 - st->X1) / st->t1;
      QuadraticReal th = (c2 - st->X2) / st->t2;
      int cmp = qr_compare(tv, th);
      require(cmp != 0, "degenerate-trajectory", "trajectory hits a grid intersection");
      if (cmp < 0) {
        st->X2 = st->X2 + tv * st->t2;
        st->X1 = c1;  // exact: X1 + tv*theta1 == c1
        buf.push_back(1);
      } else {
        st->X1 = st->X1 + th * st->t1;
        st->X2 = c2;
        buf.push_back(2);
      }
    }
  });
}

WordStream billiard_stream(const LineParams& p) {
  validate_line_ranges(p);
  guard_coding_slope(p);
  struct State {
    QuadraticReal q1, q2, t1, t2;
    int s1 = 1, s2 = 1;  // direction signs after reflections
  };
  auto st = std::make_shared<State>(State{p.x1, p.x2, p.theta1, p.theta2});
  std::string label = "billiard(" + p.x1.str() + "," + p.x2.str() + ";" + p.theta1.str() +
                      "," + p.theta2.str() + ")";
  return WordStream(Alphabet(), label, [st](std::vector<Letter>& buf) {
    QuadraticReal zero(0), one(1);
    for (int i = 0; i < 16; ++i) {
      QuadraticReal t1 = (st->s1 > 0 ? one - st->q1 : st->q1) / st->t1;
      QuadraticReal t2 = (st->s2 > 0 ? one - st->q2 : st->q2) / st->t2;
      int cmp = qr_compare(t1, t2);
      require(cmp != 0, "degenerate-trajectory", "trajectory hits a corner");
      if (cmp < 0) {
        st->q2 = st->s2 > 0 ? st->q2 + t1 * st->t2 : st->q2 - t1 * st->t2;
        st->q1 = st->s1 > 0 ? one : zero;
        st->s1 = -st->s1;
        buf.push_back(1);
      } else {
        st->q1 = st->s1 > 0 ? st->q1 + t2 * st->t1 : st->q1 - t2 * st->t1;
        st->q2 = st->s2 > 0 ? one : zero;
        st->s2 = -st->s2;
        buf.push_back(2);
      }
    }
  });
}

WordStream flow_stream(const LineParams& p) {
  validate_line_ranges(p);
  guard_coding_slope(p);
  struct State {
    QuadraticReal q1, q2, t1, t2;
  };
  auto st = std::make_shared<State>(State{p.x1, p.x2, p.theta1, p.theta2});
  std::string label = "flow(" + p.x1.str() + "," + p.x2.str() + ";" + p.theta1.str() +
                      "," + p.theta2.str() + ")";
  return WordStream(Alphabet(), label, [st](std::vector<Letter>& buf) {
    QuadraticReal zero(0), one(1);
    for (int i = 0; i < 16; ++i) {
      QuadraticReal t1 = (one - st->q1) / st->t1;
      QuadraticReal t2 = (one - st->q2) / st->t2;
      int cmp = qr_compare(t1, t2);
      require(cmp != 0, "degenerate-trajectory", "orbit passes through the torus corner");
      if (cmp < 0) {
        st->q2 = st->q2 + t1 * st->t2;
        st->q1 = zero;  // wrapped vertical crossing
        buf.push_back(1);
      } else {
        st->q1 = st->q1 + t2 * st->t1;
        st->q2 = zero;
        buf.push_back(2);
      }
    }
  });
}

FiniteWord rotation_word(const RotationParams& p, std::uint64_t n) {
  return take(rotation_stream(p), n);
}

FiniteWord cutting_sequence(const LineParams& p, std::uint64_t n) {
  return take(cutting_stream(p), n);
}

FiniteWord billiard_word(const LineParams& p, std::uint64_t n) {
  return take(billiard_stream(p), n);
}

FiniteWord flow_word(const LineParams& p, std::uint64_t n) {
  return take(flow_stream(p), n);
}

RotationParams rotation_equivalent_params(const LineParams& p) {
  validate_line_ranges(p);
  QuadraticReal l = p.theta1 + p.theta2;
  QuadraticReal alpha = p.theta2 / l;
  // Project along theta onto the section transversal; the first crossing
  // point lands at x2*theta1 + (1-x1)*theta2 on the segment [0, l).
  QuadraticReal z1 = p.x2 * p.theta1 + (QuadraticReal(1) - p.x1) * p.theta2;
  return RotationParams{(z1 / l).frac(), alpha};
}

std::string render_trajectory_svg(const LineParams& p, std::uint64_t bounces) {
  validate_line_ranges(p);
  // Reflection simulation; collects bounce points and wall letters.
  QuadraticReal q1 = p.x1, q2 = p.x2;
  int s1 = 1, s2 = 1;
  QuadraticReal zero(0), one(1);
  std::vector<std::pair<double, double>> pts{{q1.to_double(), q2.to_double()}};
  std::vector<int> letters;
  for (std::uint64_t k = 0; k < bounces; ++k) {
    QuadraticReal t1 = (s1 > 0 ? one - q1 : q1) / p.theta1;
    QuadraticReal t2 = (s2 > 0 ? one - q2 : q2) / p.theta2;
    int cmp = qr_compare(t1, t2);
    require(cmp != 0, "degenerate-trajectory", "trajectory hits a corner");
    if (cmp < 0) {
      q2 = s2 > 0 ? q2 + t1 * p.theta2 : q2 - t1 * p.theta2;
      q1 = s1 > 0 ? one : zero;
      s1 = -s1;
      letters.push_back(1);
    } else {
      q1 = s1 > 0 ? q1 + t2 * p.theta1 : q1 - t2 * p.theta1;
      q2 = s2 > 0 ? one : zero;
      s2 = -s2;
      letters.push_back(2);
    }
    pts.emplace_back(q1.to_double(), q2.to_double());
  }
  auto px = [](double u) { return 16.0 + 480.0 * u; };
  auto py = [](double v) { return 496.0 - 480.0 * v; };
  char tmp[128];
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" "
      "viewBox=\"0 0 512 512\">\n"
      "  <rect x=\"16\" y=\"16\" width=\"480\" height=\"480\" fill=\"none\" "
      "stroke=\"black\" stroke-width=\"1\"/>\n";
  svg += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::snprintf(tmp, sizeof tmp, "%s%.3f,%.3f", i ? " " : "", px(pts[i].first),
                  py(pts[i].second));
    svg += tmp;
  }
  svg += "\"/>\n";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    std::snprintf(tmp, sizeof tmp,
                  "  <text x=\"%.3f\" y=\"%.3f\" font-size=\"12\" fill=\"black\" "
                  "stroke=\"none\">%d</text>\n",
                  px(pts[i + 1].first) + 4.0, py(pts[i + 1].second) - 4.0, letters[i]);
    svg += tmp;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace slab
