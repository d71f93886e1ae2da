#include <doctest.h>

#include <numeric>

#include "corpus.hpp"
#include "monoidchar/errors.hpp"
#include "monoidchar/galois.hpp"

using namespace monoidchar;

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("Q").kind == FieldSpec::Kind::Rationals);
  CHECK(FieldSpec::parse("F4").characteristic == 2);
  CHECK(FieldSpec::parse("F4").order == 4);
  CHECK(FieldSpec::parse("AC0").characteristic == 0);
  CHECK(FieldSpec::parse("AC3").kind == FieldSpec::Kind::AlgebraicallyClosed);
  CHECK(FieldSpec::parse("F9").characteristic == 3);
  CHECK_THROWS_AS(FieldSpec::parse("F6"), UnsupportedField);
  CHECK_THROWS_AS(FieldSpec::parse("R"), UnsupportedField);
  CHECK(FieldSpec::parse("F25").to_string() == "F25");
}

TEST_CASE("lcm_p_regular_orders") {
  FiniteMonoid T2 = corpus::full_transformation_monoid(2);
  CHECK(lcm_p_regular_orders(T2, 0) == 2);
  CHECK(lcm_p_regular_orders(T2, 2) == 1);
  FiniteMonoid triv = monoid_from_table(1, {{0}}, 0);
  CHECK(lcm_p_regular_orders(triv, 0) == 1);
  CHECK(lcm_p_regular_orders(triv, 5) == 1);
  CHECK(lcm_p_regular_orders(corpus::cyclic_group(6), 2) == 3);
}

TEST_CASE("p never divides the lcm of p-regular orders") {
  for (const auto& entry : corpus::build_corpus())
    for (long p : {2L, 3L, 5L}) CHECK(lcm_p_regular_orders(entry.monoid, p) % p != 0);
}

TEST_CASE("galois_image closed forms") {
  GaloisImage f2 = galois_image(FieldSpec::finite_field(2), 3);
  CHECK(f2.members == std::vector<long>{1, 2});
  GaloisImage q4 = galois_image(FieldSpec::rationals(), 4);
  CHECK(q4.members == std::vector<long>{1, 3});
  GaloisImage ac = galois_image(FieldSpec::algebraically_closed(5), 12);
  CHECK(ac.members == std::vector<long>{1});
  CHECK_THROWS_AS(galois_image(FieldSpec::finite_field(2), 4), NotCoprime);
}

TEST_CASE("galois_image is a subgroup of the units") {
  for (auto [fs, n] : std::vector<std::pair<FieldSpec, long>>{
           {FieldSpec::finite_field(2), 9},
           {FieldSpec::finite_field(3), 8},
           {FieldSpec::finite_field(4), 15},
           {FieldSpec::rationals(), 12},
           {FieldSpec::algebraically_closed(0), 7}}) {
    GaloisImage T = galois_image(fs, n);
    CHECK(T.contains(1));
    for (long a : T.members) {
      CHECK(std::gcd(a, n) == 1);
      for (long b : T.members) CHECK(T.contains((a * b) % n));
    }
  }
}

TEST_CASE("galois_image_reduce") {
  GaloisImage big = galois_image(FieldSpec::finite_field(2), 9);
  CHECK(big.members == std::vector<long>{1, 2, 4, 5, 7, 8});
  GaloisImage small = galois_image_reduce(big, 9, 3);
  CHECK(small.members == galois_image(FieldSpec::finite_field(2), 3).members);

  GaloisImage q12 = galois_image(FieldSpec::rationals(), 12);
  CHECK(galois_image_reduce(q12, 12, 6).members == std::vector<long>{1, 5});

  CHECK(galois_image_reduce(q12, 12, 12).members == q12.members);
  CHECK_THROWS_AS(galois_image_reduce(q12, 12, 5), NotDivisor);
}

TEST_CASE("reduction consistency over common multiples") {
  for (const auto& entry : corpus::build_corpus()) {
    for (auto fs : {FieldSpec::finite_field(2), FieldSpec::finite_field(3),
                    FieldSpec::rationals()}) {
      long p = fs.characteristic;
      long n = lcm_p_regular_orders(entry.monoid, p);
      for (long t : {n, 2 * n, 3 * n, 5 * n, 6 * n}) {
        if (p != 0 && t % p == 0) continue;  // keep t coprime to p
        GaloisImage reduced = galois_image_reduce(galois_image(fs, t), t, n);
        CHECK(reduced.members == galois_image(fs, n).members);
      }
    }
  }
}
