#include <doctest.h>

#include "hurwitz/cosets.hpp"

#include <map>
#include <random>
#include <set>

using namespace hurwitz;

namespace {

IntMatrix imat(long a, long b, long c, long d) {
  return IntMatrix(Int(a), Int(b), Int(c), Int(d));
}

// independent sigma(n)
long divisor_sum(long n) {
  long total = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) total += d;
  return total;
}

GroupElement random_gamma(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> start(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  Word w;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    if (w.empty()) {
      int r = start(rng);
      w.letters.push_back(r == 0 ? Letter::S
                                 : (r == 1 ? Letter::U : Letter::U2));
    } else if (w.letters.back() == Letter::S) {
      w.letters.push_back(coin(rng) ? Letter::U : Letter::U2);
    } else {
      w.letters.push_back(Letter::S);
    }
  }
  return matrix_from_word(w);
}

// exhaustive box enumeration of weighted elliptic matrices:
// independently re-derives both the matrix list and the chi weights
// through the fundamental-domain module
std::map<IntMatrix, Rat> weighted_elliptic_bruteforce(long n) {
  std::map<IntMatrix, Rat> out;
  long bound = 1;
  while (bound * bound <= 4 * n) ++bound;
  bound = 2 * bound + 2;
  for (long a = -bound; a <= bound; ++a)
    for (long d = -bound; d <= bound; ++d)
      for (long c = 1; c <= bound; ++c) {
        long num = a * d - n;  // b*c
        if (num % c != 0) continue;
        long b = num / c;
        if (b < -(4 * n + bound) || b > 0) continue;
        IntMatrix m = imat(a, b, c, d);
        if (m.det() != n || !m.elliptic()) continue;
        Rat weight = chi_weight(rat_matrix(m));
        if (sgn(weight) > 0) out.emplace(m, weight);
      }
  return out;
}

}  // namespace

TEST_CASE("form_of_matrix") {
  CHECK(form_of_matrix(int_matrix(GroupElement::S())) == QuadForm{1, 0, 1});
  CHECK(form_of_matrix(int_matrix(GroupElement::S())).discriminant() == -4);
  CHECK(form_of_matrix(int_matrix(GroupElement::U())) == QuadForm{1, 1, 1});
  CHECK(form_of_matrix(int_matrix(GroupElement::U())).discriminant() == -3);
  CHECK(form_of_matrix(imat(1, 0, 0, 2)) == QuadForm{0, 1, 0});
  CHECK(form_of_matrix(imat(1, 0, 0, 2)).discriminant() == 1);
}

TEST_CASE("form bijection is Gamma-equivariant") {
  // matrices live modulo +-1, so the conjugated form matches the
  // substituted form up to a global sign; elliptic matrices (both forms
  // positive definite) match on the nose
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-7, 7);
  int checked = 0, elliptic_checked = 0;
  while (checked < 400) {
    long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    long det = a * d - b * c;
    if (det < 1 || det > 50) continue;
    IntMatrix m = imat(a, b, c, d);
    GroupElement g = random_gamma(rng, 6);
    IntMatrix conjugated = int_matrix(g.inverse()) * m * int_matrix(g);
    QuadForm got = form_of_matrix(conjugated);
    QuadForm expected = apply(form_of_matrix(m), g);
    QuadForm negated{-expected.A, -expected.B, -expected.C};
    CHECK((got == expected || got == negated));
    if (m.elliptic()) {
      CHECK(got == expected);
      ++elliptic_checked;
    }
    ++checked;
  }
  CHECK(elliptic_checked > 30);
}

TEST_CASE("coset_label canonical examples") {
  CHECK(coset_label(imat(2, 0, 0, 1)).label == CosetLabel{2, 0, 1});
  CHECK(coset_label(imat(1, 0, 0, 2)).label == CosetLabel{1, 0, 2});
  CHECK(coset_label(imat(0, -2, 1, 0)).label == CosetLabel{2, 0, 1});
  // the scalar matrix sqrt(n)*I lands on (sqrt n, 0, sqrt n)
  CHECK(coset_label(imat(3, 0, 0, 3)).label == CosetLabel{3, 0, 3});
}

TEST_CASE("coset_label witness reproduces the canonical form") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(-9, 9);
  int checked = 0;
  while (checked < 300) {
    long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    long det = a * d - b * c;
    if (det < 1) continue;
    IntMatrix m = imat(a, b, c, d);
    CosetDecomposition dec = coset_label(m);
    IntMatrix canonical = m * int_matrix(dec.witness);
    CHECK(canonical == IntMatrix(dec.label.delta_prime, dec.label.beta,
                                 Int(0), dec.label.delta));
    ++checked;
  }
}

TEST_CASE("coset_label is right-Gamma-invariant") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> entry(-9, 9);
  int checked = 0;
  while (checked < 250) {
    long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    long det = a * d - b * c;
    if (det < 1) continue;
    IntMatrix m = imat(a, b, c, d);
    GroupElement g = random_gamma(rng, 6);
    CHECK(coset_label(m * int_matrix(g)).label == coset_label(m).label);
    ++checked;
  }
}

TEST_CASE("coset_reps") {
  CHECK(coset_reps(1) == std::vector<CosetLabel>{CosetLabel{1, 0, 1}});
  CHECK(coset_reps(2) ==
        std::vector<CosetLabel>{CosetLabel{2, 0, 1}, CosetLabel{2, 1, 1},
                                CosetLabel{1, 0, 2}});
  CHECK(coset_reps(4).size() == 7);
  for (long n = 1; n <= 50; ++n) {
    std::vector<CosetLabel> reps = coset_reps(Int(n));
    CHECK(static_cast<long>(reps.size()) == divisor_sum(n));
    // each label is hit by its own canonical matrix
    for (const CosetLabel& label : reps)
      CHECK(coset_label(IntMatrix(label.delta_prime, label.beta, Int(0),
                                  label.delta))
                .label == label);
  }
  CHECK_THROWS_AS(coset_reps(0), std::domain_error);
}

TEST_CASE("enumerate_weighted_elliptic n = 1") {
  std::vector<WeightedMatrix> list = enumerate_weighted_elliptic(1);
  REQUIRE(list.size() == 5);
  Rat total = 0;
  std::map<IntMatrix, Rat> seen;
  for (const WeightedMatrix& wm : list) {
    total += wm.weight;
    seen.emplace(wm.matrix, wm.weight);
  }
  CHECK(total == make_rat(7, 6));
  CHECK(seen.at(int_matrix(GroupElement::S())) == make_rat(1, 2));
  CHECK(seen.at(int_matrix(GroupElement::U())) == make_rat(1, 6));
  CHECK(seen.at(int_matrix(GroupElement::U2())) == make_rat(1, 6));
  CHECK(seen.at(imat(1, -1, 1, 0)) == make_rat(1, 6));
  CHECK(seen.at(imat(0, -1, 1, -1)) == make_rat(1, 6));
}

TEST_CASE("enumerate_weighted_elliptic matches the box oracle") {
  for (long n = 1; n <= 24; ++n) {
    std::map<IntMatrix, Rat> oracle = weighted_elliptic_bruteforce(n);
    std::map<IntMatrix, Rat> fast;
    for (const WeightedMatrix& wm : enumerate_weighted_elliptic(Int(n))) {
      CHECK(abs(wm.matrix.a() - wm.matrix.d()) <= wm.matrix.c());
      CHECK(-wm.matrix.b() >= wm.matrix.c());
      CHECK(fast.emplace(wm.matrix, wm.weight).second);  // no duplicates
    }
    CHECK(fast == oracle);
  }
}

TEST_CASE("theorem1_sides") {
  RelationSides s1 = theorem1_sides(1);
  CHECK(s1.lhs == 1);
  CHECK(s1.rhs == 1);
  RelationSides s2 = theorem1_sides(2);
  CHECK(s2.lhs == 4);
  CHECK(s2.rhs == 4);
  RelationSides s4 = theorem1_sides(4);
  CHECK(s4.lhs == 10);
  CHECK(s4.rhs == 10);
  for (long n = 1; n <= 100; ++n) CHECK(theorem1_sides(Int(n)).ok());
  CHECK_THROWS_AS(theorem1_sides(0), std::domain_error);
}

TEST_CASE("eq0_sides") {
  RelationSides s1 = eq0_sides(1);
  CHECK(s1.lhs == make_rat(7, 6));
  CHECK(s1.rhs == make_rat(7, 6));
  CHECK(eq0_sides(2).lhs == 4);
  RelationSides s9 = eq0_sides(9);
  CHECK(s9.rhs == make_rat(127, 6));
  CHECK(s9.lhs == s9.rhs);
  for (long n = 1; n <= 60; ++n) CHECK(eq0_sides(Int(n)).ok());
}

TEST_CASE("theorem2 sums and predictions") {
  CHECK(theorem2_sum(1, CosetLabel{1, 0, 1}) == make_rat(7, 6));
  CHECK(theorem2_predicted(1, CosetLabel{1, 0, 1}) == make_rat(7, 6));

  CHECK(theorem2_sum(2, CosetLabel{2, 0, 1}) == 2);
  CHECK(theorem2_sum(2, CosetLabel{2, 1, 1}) == 2);
  CHECK(theorem2_sum(2, CosetLabel{1, 0, 2}) == 0);
  CHECK(theorem2_predicted(2, CosetLabel{1, 0, 2}) == 0);

  CHECK(theorem2_predicted(6, CosetLabel{3, 1, 2}) == 2);
  CHECK(theorem2_predicted(4, CosetLabel{2, 0, 2}) == make_rat(7, 6));
  CHECK(theorem2_predicted(4, CosetLabel{2, 1, 2}) == 1);
  CHECK(theorem2_sum(4, CosetLabel{2, 0, 2}) == make_rat(7, 6));
  CHECK(theorem2_sum(4, CosetLabel{2, 1, 2}) == 1);

  CHECK_THROWS_AS(theorem2_sum(6, CosetLabel{3, 1, 3}), std::domain_error);
  CHECK_THROWS_AS(theorem2_predicted(6, CosetLabel{2, 2, 3}),
                  std::domain_error);
}

TEST_CASE("coset totals partition the relation sides") {
  for (long n = 1; n <= 40; ++n) {
    Rat sums = 0, predicted = 0;
    for (const CosetRow& row : theorem2_table(Int(n))) {
      CHECK(row.ok());
      sums += row.sum;
      predicted += row.predicted;
    }
    RelationSides sides = eq0_sides(Int(n));
    CHECK(sums == sides.lhs);
    CHECK(predicted == sides.rhs);
  }
}

TEST_CASE("theorem21_sum examples") {
  CHECK(theorem21_sum(0, 1) == make_rat(1, 2));
  CHECK(theorem21_sum(make_rat(1, 2), Rat(1)) == make_rat(1, 2));
  CHECK(theorem21_sum(make_rat(1, 3), make_rat(3, 2)) == 1);
  CHECK(theorem21_sum(make_rat(2, 3), Rat(3)) == 1);
  CHECK(theorem21_sum(make_rat(1, 2), make_rat(2, 3)) == 0);  // y < 1
  CHECK_THROWS_AS(theorem21_sum(0, 0), std::domain_error);
  CHECK_THROWS_AS(theorem21_sum(1, -2), std::domain_error);
}

TEST_CASE("theorem21_sum is invariant under x -> x + k*y") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> num(-12, 12);
  std::uniform_int_distribution<long> den(1, 12);
  std::uniform_int_distribution<long> shift(-3, 3);
  for (int i = 0; i < 40; ++i) {
    Rat x = make_rat(num(rng), den(rng));
    Rat y = make_rat(std::abs(num(rng)) + 1, den(rng));
    Rat base = theorem21_sum(x, y);
    CHECK(base == Rat(1 + sign(y - 1)) / 2);
    CHECK(theorem21_sum(x + Rat(shift(rng)) * y, y) == base);
  }
}
