#pragma once

// The half-plane {y >= 1} is tiled by semi-infinite triangles
//   Delta(g) = {(x,y) : 0 <= d - cx - ay <= c <= -dx - by}
// indexed by g = [[a,b],[c,d]] in Gamma \ Gamma_infty with c > 0.
// Point location descends the cone hierarchy rooted at C(U) after
// reducing x mod y*Z; a word-tree brute force serves as oracle.

#include "hurwitz/modular_group.hpp"
#include "hurwitz/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

inline constexpr int kDefaultMaxDepth = 64;

struct RatPoint {
  Rat x, y;
  bool operator==(const RatPoint&) const = default;
};
std::string to_string(const RatPoint& p);

enum class TrianglePosition { Outside, Interior, Edge, VertexP2, VertexP3 };
std::string to_string(TrianglePosition p);

struct Triangle {
  GroupElement gamma;
  RatPoint p3;  // (-ac-bd+bc, c^2+d^2-cd), on the side d-cx-ay = c
  RatPoint p2;  // (-ac-bd, c^2+d^2), on the side d-cx-ay = 0
};

// requires gamma outside Gamma_infty
Triangle triangle_of(const GroupElement& gamma);

struct Cone {
  GroupElement gamma;
  RatPoint apex;  // P3 for gamma in TPlus, P2 for gamma in TMinus
};

// requires gamma in T = TPlus u TMinus
Cone cone_of(const GroupElement& gamma);

// exact classification of p against the closed triangle Delta(gamma);
// for gamma = T^n in Gamma_infty the triangle is the strip
// [-n-1,-n] x (-inf,1] (corners: left = P2, right = P3)
TrianglePosition triangle_contains(const GroupElement& gamma,
                                   const RatPoint& p);

class DepthExhausted : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// all g in Gamma \ Gamma_infty whose closed triangle contains p, sorted
// by word; |result| is 1 / 2 / 3 / 4 for interior / edge / P2 / P3
// points.  Requires p.y >= 1 (std::domain_error), throws DepthExhausted
// if the cone descent does not finish within max_depth steps.
std::vector<GroupElement> locate(const RatPoint& p,
                                 int max_depth = kDefaultMaxDepth);

// independent oracle: tests every word of length <= max_word_len
// against the triangle inequalities (may be incomplete if the horizon
// is too small; never throws)
std::vector<GroupElement> locate_bruteforce(const RatPoint& p,
                                            int max_word_len);

// Delta(T*gamma) = T*Delta(gamma) with T(x,y) = (x-y,y); checks that
// membership classification agrees at p; requires gamma not in
// Gamma_infty
bool equivariance_check(const GroupElement& gamma, const RatPoint& p);

struct RegionReport {
  long samples = 0;
  std::vector<std::string> failures;
  std::string note;
  bool ok() const { return failures.empty(); }
};

// samples the three regions {0 <= x <= y-1}, {y-1 <= x}, {x <= 0} of the
// half-plane and checks that located labels fall in the word class (T,
// T', T'') tiling that region, with at least one triangle per point
RegionReport region_decomposition_check(int max_word_len, int samples,
                                        unsigned long seed = 1);

// one TSV row per point: x, y, located labels (word strings joined by
// ","), cardinality, and the sharpest containment class among them
// (interior / edge / vertex-p2 / vertex-p3)
std::string sample_report_tsv(const std::vector<RatPoint>& points,
                              int max_depth = kDefaultMaxDepth);

struct Viewport {
  Rat xmin, xmax, ymin, ymax;
};

// SVG 1.1 document showing every triangle of word length <= max_word_len
// that meets the viewport (plus Gamma_infty strips of word length
// <= max_word_len when y < 1 is visible).  Finite sides are styled by
// the final letter: dashed = S, solid thick = U, dotted = U2.  The only
// place in the library where rationals become decimals.
std::string svg_render(const Viewport& vp, int max_word_len);

}  // namespace hurwitz
