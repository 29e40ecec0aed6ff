#include "hurwitz/tessellation.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

std::string to_string(const RatPoint& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

std::string to_string(TrianglePosition p) {
  switch (p) {
    case TrianglePosition::Outside: return "outside";
    case TrianglePosition::Interior: return "interior";
    case TrianglePosition::Edge: return "edge";
    case TrianglePosition::VertexP2: return "vertex-p2";
    case TrianglePosition::VertexP3: return "vertex-p3";
  }
  throw std::logic_error("unreachable");
}

Triangle triangle_of(const GroupElement& g) {
  if (g.in_gamma_infinity())
    throw std::domain_error("triangle_of requires gamma outside Gamma_infty");
  const Int &a = g.a(), &b = g.b(), &c = g.c(), &d = g.d();
  RatPoint p3{Rat(-a * c - b * d + b * c), Rat(c * c + d * d - c * d)};
  RatPoint p2{Rat(-a * c - b * d), Rat(c * c + d * d)};
  return Triangle{g, p3, p2};
}

Cone cone_of(const GroupElement& g) {
  Triangle t = triangle_of(g);
  switch (classify(g)) {
    case GammaClass::TPlus: return Cone{g, t.p3};
    case GammaClass::TMinus: return Cone{g, t.p2};
    default:
      throw std::domain_error("cone_of requires an element of T = T+ u T-");
  }
}

namespace {

// p = (X/Q, Y/Q) with Q > 0: all triangle predicates become integer
// sign tests
struct ScaledPoint {
  Int X, Y, Q;
};

ScaledPoint scale(const RatPoint& p) {
  Int q;
  mpz_lcm(q.get_mpz_t(), p.x.get_den().get_mpz_t(),
          p.y.get_den().get_mpz_t());
  return ScaledPoint{p.x.get_num() * (q / p.x.get_den()),
                     p.y.get_num() * (q / p.y.get_den()), q};
}

// Q * (d - cx - ay): the two infinite sides of Delta are {.. = 0} and
// {.. = cQ}
Int side_form(const GroupElement& g, const ScaledPoint& p) {
  return g.d() * p.Q - g.c() * p.X - g.a() * p.Y;
}

// Q * (-dx - by): the finite side lies on {.. = cQ}
Int base_form(const GroupElement& g, const ScaledPoint& p) {
  return -(g.d() * p.X) - g.b() * p.Y;
}

TrianglePosition strip_contains(const Int& n, const RatPoint& p) {
  Rat lo = Rat(-n - 1);
  Rat hi = Rat(-n);
  if (p.x < lo || p.x > hi || p.y > 1) return TrianglePosition::Outside;
  bool left = (p.x == lo);
  bool right = (p.x == hi);
  bool top = (p.y == 1);
  if (top && left) return TrianglePosition::VertexP2;
  if (top && right) return TrianglePosition::VertexP3;
  if (top || left || right) return TrianglePosition::Edge;
  return TrianglePosition::Interior;
}

}  // namespace

TrianglePosition triangle_contains(const GroupElement& g, const RatPoint& p) {
  if (g.in_gamma_infinity()) return strip_contains(g.translation_offset(), p);
  ScaledPoint sp = scale(p);
  Int f = side_form(g, sp);
  Int cq = g.c() * sp.Q;
  Int e2 = cq - f;
  Int e3 = base_form(g, sp) - cq;
  if (sgn(f) < 0 || sgn(e2) < 0 || sgn(e3) < 0)
    return TrianglePosition::Outside;
  bool on_base = (sgn(e3) == 0);
  if (sgn(f) == 0 && on_base) return TrianglePosition::VertexP2;
  if (sgn(e2) == 0 && on_base) return TrianglePosition::VertexP3;
  if (sgn(f) == 0 || sgn(e2) == 0 || on_base) return TrianglePosition::Edge;
  return TrianglePosition::Interior;
}

std::vector<GroupElement> locate(const RatPoint& p, int max_depth) {
  if (p.y < 1)
    throw std::domain_error("locate requires y >= 1");
  // reduce x into [0, y) by the Gamma_infty action T^n(x,y) = (x-ny, y)
  Int k = rat_floor(p.x / p.y);
  RatPoint pn{p.x - Rat(k) * p.y, p.y};
  GroupElement shift = GroupElement::translation(-k);
  std::set<GroupElement> found;

  const GroupElement u2 = GroupElement::U2();
  if (triangle_contains(u2, pn) != TrianglePosition::Outside)
    found.insert(shift * u2);
  if (sgn(pn.x) == 0) {
    // a point on the seam x = 0 also lies in the closure of the
    // neighbouring translate, which meets it only along Delta(U2)
    RatPoint wrapped{pn.y, pn.y};
    if (triangle_contains(u2, wrapped) != TrianglePosition::Outside)
      found.insert(GroupElement::translation(-k + 1) * u2);
  }

  // cone descent: for g in T+ (c, d > 0) the cone
  //   C(g) = {side_form <= c} n {base_form >= c}
  // splits as Delta(g) u C(gS) along {side_form = 0}, and C(gS) splits as
  // Delta(gS) u C(gSU) u C(gSU2); the two child cones share the apex
  // P3(gS) and are separated by the line {side_form + base_form = c + d}.
  // All boundaries are followed on both sides.
  ScaledPoint sp = scale(pn);
  if (pn.x <= pn.y - 1) {
    struct Frame {
      GroupElement g;
      int depth;
    };
    std::vector<Frame> stack{{GroupElement::U(), 0}};
    while (!stack.empty()) {
      Frame fr = std::move(stack.back());
      stack.pop_back();
      if (fr.depth > max_depth)
        throw DepthExhausted("cone descent exceeded max depth " +
                             std::to_string(max_depth));
      const GroupElement& g = fr.g;
      Int f = side_form(g, sp);
      if (sgn(f) >= 0) found.insert(shift * g);  // p in Delta(g)
      if (sgn(f) <= 0) {                         // p in C(gS)
        Int base = base_form(g, sp);
        Int fs = base - g.c() * sp.Q;      // side_form of gS
        Int cs = g.d() * sp.Q;             // its c entry, scaled
        if (fs <= cs) found.insert(shift * (g * GroupElement::S()));
        if (fs >= cs) {
          Int sep = f + base - (g.c() + g.d()) * sp.Q;
          // children of the T+ recursion, built in place (both stay
          // normalized: c > 0 and c + d > 0)
          if (sgn(sep) >= 0)
            stack.push_back({GroupElement(g.a(), g.a() + g.b(), g.c(),
                                          g.c() + g.d()),
                             fr.depth + 1});
          if (sgn(sep) <= 0)
            stack.push_back({GroupElement(g.a() + g.b(), g.b(),
                                          g.c() + g.d(), g.d()),
                             fr.depth + 1});
        }
      }
    }
  }

  std::vector<GroupElement> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), word_order_less);
  return out;
}

std::vector<GroupElement> locate_bruteforce(const RatPoint& p,
                                            int max_word_len) {
  std::vector<GroupElement> out;
  enumerate_words(max_word_len, [&](const Word&, const GroupElement& g) {
    if (g.in_gamma_infinity()) return;
    if (triangle_contains(g, p) != TrianglePosition::Outside)
      out.push_back(g);
  });
  std::sort(out.begin(), out.end(), word_order_less);
  return out;
}

bool equivariance_check(const GroupElement& g, const RatPoint& p) {
  if (g.in_gamma_infinity())
    throw std::domain_error("equivariance_check requires gamma outside "
                            "Gamma_infty");
  GroupElement tg = GroupElement::T() * g;
  RatPoint tp{p.x - p.y, p.y};
  return triangle_contains(g, p) == triangle_contains(tg, tp);
}

namespace {

Rat random_rat(std::mt19937_64& rng, long num_lo, long num_hi, long den_lo,
               long den_hi, long max_den) {
  // uniform denominator in [1, max_den], numerator so the value lies in
  // [num_lo/den_lo, num_hi/den_hi]
  std::uniform_int_distribution<long> den_dist(1, max_den);
  long den = den_dist(rng);
  // ceil(num_lo*den/den_lo), floor(num_hi*den/den_hi) in long arithmetic
  auto floor_q = [](long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  long lo = -floor_q(-num_lo * den, den_lo);
  long hi = floor_q(num_hi * den, den_hi);
  if (lo > hi) lo = hi;
  std::uniform_int_distribution<long> num_dist(lo, hi);
  return make_rat(num_dist(rng), den);
}

}  // namespace

std::string sample_report_tsv(const std::vector<RatPoint>& points,
                              int max_depth) {
  std::ostringstream out;
  out << "x\ty\tlabels\tcardinality\tposition_class\n";
  for (const RatPoint& p : points) {
    std::vector<GroupElement> labels = locate(p, max_depth);
    TrianglePosition sharpest = TrianglePosition::Interior;
    std::string joined;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i > 0) joined += ",";
      joined += to_string(word_from_matrix(labels[i]));
      TrianglePosition pos = triangle_contains(labels[i], p);
      if (static_cast<int>(pos) > static_cast<int>(sharpest)) sharpest = pos;
    }
    out << to_string(p.x) << "\t" << to_string(p.y) << "\t" << joined << "\t"
        << labels.size() << "\t" << to_string(sharpest) << "\n";
  }
  return out.str();
}

RegionReport region_decomposition_check(int max_word_len, int samples,
                                        unsigned long seed) {
  RegionReport report;
  report.note =
      "cone split: children separated by the line through the shared apex "
      "P3(gS) with slope -(c+d)/(a+b); validated against the brute-force "
      "oracle";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    Rat y = random_rat(rng, 9, 64, 8, 8, 32);  // y in (1, 8]
    int region = i % 3;
    Rat x;
    GammaClass want{};
    switch (region) {
      case 0: {  // interior of {0 <= x <= y-1}: labels start with U
        Rat r = random_rat(rng, 1, 63, 64, 64, 64);
        x = r * (y - 1);
        want = GammaClass::TPlus;  // or TMinus; both start with U
        break;
      }
      case 1: {  // {y-1 < x}: labels start with U2
        x = y - 1 + random_rat(rng, 1, 48, 16, 16, 16);
        want = GammaClass::TPrime;
        break;
      }
      default: {  // {x < 0}: labels start with S
        x = -random_rat(rng, 1, 48, 16, 16, 16);
        want = GammaClass::TDoublePrime;
        break;
      }
    }
    RatPoint p{x, y};
    ++report.samples;
    std::vector<GroupElement> labels = locate(p);
    if (labels.empty()) {
      report.failures.push_back("no triangle covers " + to_string(p));
      continue;
    }
    for (const GroupElement& g : labels) {
      GammaClass got = classify(g);
      bool good = (region == 0)
                      ? (got == GammaClass::TPlus || got == GammaClass::TMinus)
                      : got == want;
      if (!good)
        report.failures.push_back("label " + to_string(g) + " of class " +
                                  to_string(got) + " at " + to_string(p));
    }
    // spot-check against the oracle while we are here
    if (max_word_len > 0) {
      std::vector<GroupElement> oracle = locate_bruteforce(p, max_word_len);
      bool closed = true;
      for (const GroupElement& g : labels)
        if (static_cast<int>(word_from_matrix(g).length()) >
            max_word_len - 2)
          closed = false;
      if (closed && oracle != labels)
        report.failures.push_back("oracle disagreement at " + to_string(p));
    }
  }
  return report;
}

}  // namespace hurwitz
