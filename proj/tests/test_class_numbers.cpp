#include <doctest.h>

#include "hurwitz/class_numbers.hpp"

#include <random>
#include <set>

using namespace hurwitz;

namespace {

// wide-box oracle, independent of the 3A^2 <= D bound: scan every
// (A, B) with 1 <= A <= box and |B| <= box and solve for C
std::set<QuadForm> reduced_forms_bruteforce(long d, long box) {
  std::set<QuadForm> out;
  for (long a = 1; a <= box; ++a)
    for (long b = -box; b <= box; ++b) {
      long num = b * b + d;  // 4AC
      if (num <= 0 || num % (4 * a) != 0) continue;
      QuadForm f{Int(a), Int(b), Int(num / (4 * a))};
      if (is_reduced(f)) out.insert(f);
    }
  return out;
}

QuadForm random_posdef_form(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(1, 12);
  std::uniform_int_distribution<long> any(-12, 12);
  for (;;) {
    QuadForm f{Int(small(rng)), Int(any(rng)), Int(small(rng))};
    if (f.positive_definite()) return f;
  }
}

}  // namespace

TEST_CASE("reduce fixes reduced forms and normalizes boundary signs") {
  Reduction r = reduce(QuadForm{1, 0, 1});
  CHECK(r.form == QuadForm{1, 0, 1});
  CHECK(r.transform == GroupElement::identity());

  r = reduce(QuadForm{1, 2, 2});
  CHECK(r.form == QuadForm{1, 0, 1});
  CHECK(r.form.discriminant() == -4);
  CHECK(apply(QuadForm{1, 2, 2}, r.transform) == r.form);

  // |B| < A < C is already reduced even with B < 0: (2,-1,3) is a class
  // of discriminant -23 distinct from (2,1,3)
  r = reduce(QuadForm{2, -1, 3});
  CHECK(r.form == QuadForm{2, -1, 3});

  // boundary |B| = A forces B >= 0
  r = reduce(QuadForm{2, -2, 3});
  CHECK(r.form == QuadForm{2, 2, 3});
  CHECK(apply(QuadForm{2, -2, 3}, r.transform) == r.form);

  // boundary A = C forces B >= 0
  r = reduce(QuadForm{3, -2, 3});
  CHECK(r.form == QuadForm{3, 2, 3});

  CHECK_THROWS_AS(reduce(QuadForm{1, 4, 1}), std::domain_error);
  CHECK_THROWS_AS(reduce(QuadForm{-1, 0, -1}), std::domain_error);
}

TEST_CASE("reduce: idempotent, discriminant-preserving, with witness") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    QuadForm f = random_posdef_form(rng);
    Reduction r = reduce(f);
    CHECK(is_reduced(r.form));
    CHECK(r.form.discriminant() == f.discriminant());
    CHECK(apply(f, r.transform) == r.form);
    CHECK(reduce(r.form).form == r.form);
  }
}

TEST_CASE("enumerate_reduced small discriminants") {
  CHECK(enumerate_reduced(3) == std::vector<QuadForm>{QuadForm{1, 1, 1}});
  CHECK(enumerate_reduced(4) == std::vector<QuadForm>{QuadForm{1, 0, 1}});
  std::vector<QuadForm> d23 = enumerate_reduced(23);
  CHECK(d23 == std::vector<QuadForm>{QuadForm{1, 1, 6}, QuadForm{2, -1, 3},
                                     QuadForm{2, 1, 3}});
  CHECK(hurwitz_class_number(23) == 3);  // cardinality matches H(23)

  CHECK_THROWS_AS(enumerate_reduced(0), std::domain_error);
  CHECK_THROWS_AS(enumerate_reduced(-4), std::domain_error);
  CHECK_THROWS_AS(enumerate_reduced(5), std::domain_error);
  CHECK_THROWS_AS(enumerate_reduced(6), std::domain_error);
}

TEST_CASE("enumeration bound is exhaustive against a wide box") {
  for (long d = 3; d <= 200; ++d) {
    if (d % 4 != 0 && d % 4 != 3) continue;
    std::vector<QuadForm> fast = enumerate_reduced(d);
    std::set<QuadForm> oracle = reduced_forms_bruteforce(d, d);
    CHECK(std::set<QuadForm>(fast.begin(), fast.end()) == oracle);
    for (const QuadForm& f : fast) CHECK(3 * f.A * f.A <= d);
  }
}

TEST_CASE("hurwitz_class_number golden values") {
  CHECK(hurwitz_class_number(0) == make_rat(-1, 12));
  CHECK(hurwitz_class_number(3) == make_rat(1, 3));
  CHECK(hurwitz_class_number(4) == make_rat(1, 2));
  CHECK(hurwitz_class_number(7) == 1);
  CHECK(hurwitz_class_number(8) == 1);
  CHECK(hurwitz_class_number(11) == 1);
  CHECK(hurwitz_class_number(12) == make_rat(4, 3));
  CHECK(hurwitz_class_number(15) == 2);
  CHECK(hurwitz_class_number(16) == make_rat(3, 2));
  CHECK(hurwitz_class_number(19) == 1);
  CHECK(hurwitz_class_number(20) == 2);
  CHECK(hurwitz_class_number(23) == 3);
  CHECK(hurwitz_class_number(24) == 2);
}

TEST_CASE("hurwitz_class_number rejects bad input") {
  CHECK_THROWS_AS(hurwitz_class_number(-4), std::domain_error);
  CHECK_THROWS_AS(hurwitz_class_number(1), std::domain_error);
  CHECK_THROWS_AS(hurwitz_class_number(2), std::domain_error);
  CHECK_THROWS_AS(hurwitz_class_number(5), std::domain_error);
}

TEST_CASE("weights: H(D) equals the weighted count of reduced forms") {
  for (long d = 3; d <= 120; ++d) {
    if (d % 4 != 0 && d % 4 != 3) continue;
    Rat total = 0;
    for (const QuadForm& f : enumerate_reduced(d)) {
      if (f.B == 0 && f.A == f.C)
        total += make_rat(1, 2);
      else if (f.A == f.B && f.B == f.C)
        total += make_rat(1, 3);
      else
        total += 1;
    }
    CHECK(total == hurwitz_class_number(d));
  }
}

TEST_CASE("denominator of H(D) divides 12") {
  for (long d = 0; d <= 160; ++d) {
    if (d % 4 != 0 && d % 4 != 3) continue;
    Int den = hurwitz_class_number(d).get_den();
    CHECK(12 % den == 0);
  }
}

TEST_CASE("form serialization") {
  CHECK(to_string(QuadForm{2, -1, 3}) == "(2,-1,3)");
}
