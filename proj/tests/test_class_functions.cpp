#include <doctest.h>

#include "corpus.hpp"
#include "monoidchar/class_functions.hpp"
#include "monoidchar/errors.hpp"

using namespace monoidchar;

namespace {

// t2 element indices: 0 = id, 1 = swap, 2 = const0, 3 = const1
FiniteMonoid t2() { return corpus::full_transformation_monoid(2); }

}  // namespace

TEST_CASE("right_regular_rep character values") {
  FiniteMonoid M = t2();
  ClassFunction chi_q = char_of_rep(right_regular_rep(M, FieldSpec::rationals()));
  CHECK(chi_q(M.identity) == 4);
  CHECK(chi_q(2) == 1);  // only const0 satisfies x*const0 = x

  ClassFunction chi_f2 = char_of_rep(right_regular_rep(M, FieldSpec::finite_field(2)));
  CHECK(chi_f2(M.identity) == 0);  // |M| = 4 reduced mod 2

  FiniteMonoid triv = monoid_from_table(1, {{0}}, 0);
  ClassFunction chi_t = char_of_rep(right_regular_rep(triv, FieldSpec::rationals()));
  CHECK(chi_t(0) == 1);
}

TEST_CASE("natural_character") {
  FiniteMonoid M = t2();
  ClassFunction chi = natural_character(M, FieldSpec::rationals());
  CHECK(chi(0) == 2);  // identity fixes both points
  CHECK(chi(1) == 0);  // swap
  CHECK(chi(2) == 1);  // const0
  CHECK(chi(3) == 1);  // const1

  // matches the trace of the natural 0/1 representation
  ClassFunction via_rep = char_of_rep(natural_rep(M, FieldSpec::rationals()));
  CHECK(chi.values == via_rep.values);

  FiniteMonoid triv = monoid_from_table(1, {{0}}, 0);
  CHECK_THROWS_AS(natural_character(triv, FieldSpec::rationals()), NoTransformationData);
}

TEST_CASE("trace identities hold and fault injection is caught") {
  for (const auto& entry : corpus::build_corpus()) {
    const FiniteMonoid& M = entry.monoid;
    for (auto fs : {FieldSpec::finite_field(2), FieldSpec::rationals(),
                    FieldSpec::algebraically_closed(3)}) {
      ClassFunction chi = char_of_rep(right_regular_rep(M, fs));
      CHECK(verify_character_identities(chi).empty());
      if (M.has_transformations())
        CHECK(verify_character_identities(natural_character(M, fs)).empty());
    }
  }

  FiniteMonoid M = t2();
  ClassFunction corrupted = char_of_rep(right_regular_rep(M, FieldSpec::rationals()));
  // swap*const0 = const0 but const0*swap = const1, so unbalancing the two
  // constants breaks the commutation identity
  corrupted.values[2] += 1;
  CHECK_FALSE(verify_character_identities(corrupted).empty());
}

TEST_CASE("restrict_to_group") {
  FiniteMonoid M = t2();
  ClassFunction chi = natural_character(M, FieldSpec::rationals());
  auto at_id = restrict_to_group(chi, 0);
  REQUIRE(at_id.size() == 2);
  CHECK(at_id[0] == std::pair{0, mpq_class(2)});
  CHECK(at_id[1] == std::pair{1, mpq_class(0)});
  auto at_const = restrict_to_group(chi, 2);
  REQUIRE(at_const.size() == 1);
  CHECK(at_const[0] == std::pair{2, mpq_class(1)});
  CHECK_THROWS_AS(restrict_to_group(chi, 1), NotIdempotent);
}

TEST_CASE("restriction of a trace is the trace of the corner block") {
  FiniteMonoid M = corpus::full_transformation_monoid(3);
  MatrixRep rep = natural_rep(M, FieldSpec::rationals());
  ClassFunction chi = char_of_rep(rep);
  for (int e : idempotents(M))
    for (auto [g, value] : restrict_to_group(chi, e)) {
      mpz_class tr = 0;
      for (int r = 0; r < rep.degree; ++r) tr += rep.entry(g, r, r);
      CHECK(value == mpq_class(tr));
    }
}

TEST_CASE("cyclic_subset_check") {
  FiniteMonoid M = t2();
  std::vector<bool> whole(M.size, true);
  CHECK_FALSE(cyclic_subset_check(M, whole).has_value());

  std::vector<bool> just_id(M.size, false);
  just_id[0] = true;
  auto ce = cyclic_subset_check(M, just_id);
  REQUIRE(ce.has_value());
  CHECK(ce->kind == CyclicCounterexample::Kind::Power);
  CHECK(ce->m == 1);  // swap^2 = id is in X but swap is not
  CHECK(ce->s == 2);

  FiniteMonoid Z2 = corpus::cyclic_group(2);
  std::vector<bool> only_e = {true, false};
  auto ce2 = cyclic_subset_check(Z2, only_e);
  REQUIRE(ce2.has_value());
  CHECK(ce2->m == 1);
  CHECK(ce2->s == 2);
}

TEST_CASE("indicator_virtual_certificate") {
  FiniteMonoid M = t2();
  std::vector<bool> constants = {false, false, true, true};
  for (auto fs : corpus::corpus_fields()) {
    VirtualCertificate cert = indicator_virtual_certificate(M, constants, fs);
    REQUIRE(cert.d_class_reps == std::vector<int>{2, 0});
    CHECK(cert.restriction_trivial == std::vector<bool>{true, false});
    CHECK(cert.indicator(2) == 1);
    CHECK(cert.indicator(0) == 0);
  }

  std::vector<bool> everything(M.size, true);
  VirtualCertificate all = indicator_virtual_certificate(M, everything, FieldSpec::rationals());
  CHECK(all.restriction_trivial == std::vector<bool>{true, true});

  std::vector<bool> nothing(M.size, false);
  VirtualCertificate none = indicator_virtual_certificate(M, nothing, FieldSpec::rationals());
  CHECK(none.restriction_trivial == std::vector<bool>{false, false});

  std::vector<bool> not_cyclic = {true, false, false, false};
  CHECK_THROWS_AS(indicator_virtual_certificate(M, not_cyclic, FieldSpec::rationals()),
                  NotCyclic);
}
