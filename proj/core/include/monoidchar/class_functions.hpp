#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "monoidchar/char_equiv.hpp"
#include "monoidchar/galois.hpp"
#include "monoidchar/monoid.hpp"

namespace monoidchar {

/// An exact scalar reduced into the field: a rational in characteristic 0,
/// a residue in [0, p) in characteristic p.
mpq_class reduce_into_field(const mpz_class& v, const FieldSpec& fs);

/// A map from monoid elements to exact field values.
struct ClassFunction {
  const FiniteMonoid* host = nullptr;
  FieldSpec field;
  std::vector<mpq_class> values;

  const mpq_class& operator()(int m) const { return values[m]; }
};

/// A matrix representation of the monoid over the prime field (or Q).
/// Entries are integers kept reduced mod p when p > 0.
struct MatrixRep {
  const FiniteMonoid* host = nullptr;
  FieldSpec field;
  int degree = 0;
  std::vector<std::vector<mpz_class>> images;  // row-major degree x degree

  const mpz_class& entry(int m, int r, int c) const {
    return images[m][r * degree + c];
  }
};

/// Representation of M on itself by right multiplication (0/1 matrices of
/// x -> x*m).
MatrixRep right_regular_rep(const FiniteMonoid& M, const FieldSpec& fs);

/// The defining 0/1 representation of a transformation monoid; requires
/// transformation data on M.
MatrixRep natural_rep(const FiniteMonoid& M, const FieldSpec& fs);

/// Fixed-point count of each transformation, reduced into the field.
ClassFunction natural_character(const FiniteMonoid& M, const FieldSpec& fs);

ClassFunction char_of_rep(const MatrixRep& rep);

struct IdentityViolationRecord {
  std::string identity;  // "commutation", "p-part", "galois-twist"
  int a = 0;
  int b = 0;   // commutation only
  long j = 0;  // galois-twist only
};

/// Checks the three trace identities of characters against all elements,
/// pairs, and Galois residues.  Empty for any genuine character.
std::vector<IdentityViolationRecord> verify_character_identities(const ClassFunction& chi);

/// Values of f on the elements of G_e, as (element, value) pairs.
std::vector<std::pair<int, mpq_class>> restrict_to_group(const ClassFunction& f, int e);

struct CyclicCounterexample {
  enum class Kind { Power, Commutation };
  Kind kind = Kind::Power;
  int m = 0, s = 0;    // Power: m in X xor m^s in X
  int m1 = 0, m2 = 0;  // Commutation: m1*m2 in X xor m2*m1 in X
  std::string describe() const;
};

/// Checks the two closure conditions a subset needs for its indicator to be a
/// virtual character; returns the first counterexample if any.
std::optional<CyclicCounterexample> cyclic_subset_check(const FiniteMonoid& M,
                                                        const std::vector<bool>& X);

struct VirtualCertificate {
  ClassFunction indicator;
  std::vector<int> d_class_reps;
  std::vector<bool> restriction_trivial;  // per rep: true = trivial char, false = zero
};

/// Certifies that the indicator of X is a virtual character: constant on
/// equivalence classes, and restricting to the trivial character or to zero
/// on every maximal subgroup at a D-class representative.
VirtualCertificate indicator_virtual_certificate(const FiniteMonoid& M,
                                                 const std::vector<bool>& X,
                                                 const FieldSpec& fs);

}  // namespace monoidchar
