#include <doctest.h>

#include "blockcraft/config.hpp"
#include "blockcraft/glq_chars.hpp"
#include "blockcraft/sym_chars.hpp"
#include "oracles.hpp"

using namespace blockcraft;

namespace {

BigInt Q(unsigned long q) { return BigInt(q); }

std::map<BigInt, BigInt> multiset(std::initializer_list<long> degrees) {
  std::map<BigInt, BigInt> out;
  for (long d : degrees) out[d] += 1;
  return out;
}

}  // namespace

TEST_CASE("orders") {
  CHECK(gl_order(1, Q(7)) == 6);
  CHECK(gl_order(2, Q(3)) == 48);
  CHECK(gl_order(3, Q(2)) == 168);
  CHECK(gl_order(0, Q(5)) == 1);
  CHECK(torus_order(Partition{1, 1, 1}, Q(4)) == 27);
  CHECK(torus_order(Partition{2}, Q(3)) == 8);
  CHECK(torus_order(Partition{}, Q(3)) == 1);
  for (int k = 1; k <= 3; ++k)
    for (int p : {2, 3}) {
      if (k == 3 && p == 3) continue;
      CHECK(gl_order(k, Q(static_cast<unsigned long>(p))) == static_cast<unsigned long>(oracle::general_linear(k, p).size()));
    }
}

TEST_CASE("irreducible polynomial counts") {
  CHECK(irreducible_poly_count(1, Q(9)) == 9);
  CHECK(irreducible_poly_count(2, Q(3)) == 3);
  CHECK(irreducible_poly_count(3, Q(2)) == 2);
  CHECK(available_polys(1, Q(5)) == 4);
  CHECK(available_polys(2, Q(2)) == 1);
  // sum_{e | d} e N_e(q) = q^d
  for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul})
    for (int d = 1; d <= 8; ++d) {
      BigInt total = 0;
      for (int e = 1; e <= d; ++e)
        if (d % e == 0) total += e * irreducible_poly_count(e, Q(q));
      CHECK(total == big_pow(Q(q), static_cast<unsigned long>(d)));
    }
}

TEST_CASE("semisimple class census") {
  const auto one = enumerate_class_types(1, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0].classes == 4);

  BigInt total = 0;
  for (const auto& c : enumerate_class_types(2, 3)) total += c.classes;
  CHECK(total == 6);  // (q - 1) q^{n-1}

  const auto two = enumerate_class_types(2, 2);
  std::map<ClassType, BigInt> by_type;
  for (const auto& c : two) by_type[c.type] = c.classes;
  CHECK(by_type.at(ClassType{{{1, 2}}}) == 1);
  CHECK(by_type.at(ClassType{{{1, 1}, {1, 1}}}) == 0);
  CHECK(by_type.at(ClassType{{{2, 1}}}) == 1);

  for (int n = 1; n <= 6; ++n)
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 7ul}) {
      BigInt sum = 0;
      for (const auto& c : enumerate_class_types(n, q)) sum += c.classes;
      CHECK(sum == (q - 1) * big_pow(Q(q), static_cast<unsigned long>(n - 1)));
    }
  CHECK_THROWS_AS(enumerate_class_types(2, 6), ArgumentError);
  CHECK_THROWS_AS(enumerate_class_types(limits().gl_enumeration_max_n + 1, 2), ResourceError);
}

TEST_CASE("unipotent degrees") {
  for (unsigned long q : {2ul, 3ul, 9ul}) {
    CHECK(unipotent_degree(Partition{4}, Q(q)) == 1);
    CHECK(unipotent_degree(Partition{1, 1}, Q(q)) == q);
    CHECK(unipotent_degree(Partition{2, 1}, Q(q)) == q * (q + 1));
    CHECK(unipotent_degree(Partition{1, 1, 1}, Q(q)) == q * q * q);  // Steinberg of GL_3
  }
  CHECK(unipotent_degree(Partition{3, 2}, Q(2)) == 124);
}

TEST_CASE("q -> 1 recovers the symmetric group degree") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& lambda : enumerate_partitions(n)) {
      const auto poly = unipotent_degree_polynomial(lambda);
      BigInt at_one = 0;
      for (const auto& c : poly) at_one += c;
      CHECK(at_one == sym_degree(lambda));
      // The polynomial evaluated at q = 3 matches the numeric formula.
      BigInt at_three = 0, power = 1;
      for (const auto& c : poly) {
        at_three += c * power;
        power *= 3;
      }
      CHECK(at_three == unipotent_degree(lambda, Q(3)));
    }
}

TEST_CASE("Green degrees") {
  // GL_2(3): split regular semisimple and irreducible quadratic elements.
  const SeriesLabel split{{{1, Partition{1}}, {1, Partition{1}}}};
  const SeriesLabel quadratic{{{2, Partition{1}}}};
  CHECK(green_degree(split, 3) == 4);
  CHECK(green_degree(quadratic, 3) == 2);
  // Regular element in a maximal torus: degree |G : T|_{p'}.
  CHECK(green_degree(SeriesLabel{{{3, Partition{1}}}}, 2) == exact_div(gl_order_pprime(3, Q(2)), torus_order(Partition{3}, Q(2))));
}

TEST_CASE("all degrees") {
  CHECK(all_degrees(2, 3).entries() == multiset({1, 1, 2, 2, 2, 3, 3, 4}));
  CHECK(all_degrees(2, 2).entries() == multiset({1, 1, 2}));
  CHECK(all_degrees(3, 2).entries() == multiset({1, 3, 3, 6, 7, 8}));
  CHECK(all_degrees(1, 7).entries() == multiset({1, 1, 1, 1, 1, 1}));

  for (int n = 1; n <= 4; ++n)
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
      const auto degrees = all_degrees(n, q);
      CHECK(degrees.sum_of_squares() == gl_order(n, Q(q)));
      for (const auto& [deg, mult] : degrees.entries()) CHECK(mpz_divisible_p(gl_order(n, Q(q)).get_mpz_t(), deg.get_mpz_t()));
    }
  CHECK(all_degrees(5, 2).sum_of_squares() == gl_order(5, Q(2)));
  CHECK(all_degrees(5, 3).sum_of_squares() == gl_order(5, Q(3)));

  for (unsigned long q = 2; q <= 7; ++q) {
    if (q == 6) continue;
    CHECK(all_degrees(2, q).character_count() == q * q - 1);
  }
}

TEST_CASE("class counts against matrix enumeration") {
  CHECK(all_degrees(2, 2).character_count() == static_cast<unsigned long>(oracle::gl_class_count_brute(2, 2)));
  CHECK(all_degrees(2, 3).character_count() == static_cast<unsigned long>(oracle::gl_class_count_brute(2, 3)));
  CHECK(all_degrees(3, 2).character_count() == static_cast<unsigned long>(oracle::gl_class_count_brute(3, 2)));
}

TEST_CASE("p'-degree counts") {
  CHECK(irr_pprime_count_gl(1, 5) == 4);
  CHECK(irr_pprime_count_gl(2, 3) == 6);
  CHECK(irr_pprime_count_gl(3, 2) == 4);
  for (int n = 1; n <= 4; ++n)
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul}) {
      CHECK(irr_pprime_count_gl_enumerated(n, q) == irr_pprime_count_gl(n, q));
      CHECK(maslowski_local_count(n, q) == irr_pprime_count_gl(n, q));
      const unsigned p = static_cast<unsigned>(characteristic(q));
      CHECK(irr_lprime_count(all_degrees(n, q), p) == irr_pprime_count_gl(n, q));
    }
}
