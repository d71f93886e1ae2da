#pragma once

#include <string>
#include <vector>

#include "monoidchar/monoid.hpp"

namespace monoidchar {

/// The three field shapes for which the Galois image of the cyclotomic
/// extension has a closed form.
struct FieldSpec {
  enum class Kind { AlgebraicallyClosed, Rationals, FiniteField };
  Kind kind = Kind::Rationals;
  long characteristic = 0;
  long order = 0;  // q, FiniteField only

  static FieldSpec algebraically_closed(long p);
  static FieldSpec rationals();
  static FieldSpec finite_field(long q);

  /// Accepts "Q", "F<q>", "AC0", "AC<p>".
  static FieldSpec parse(const std::string& text);
  std::string to_string() const;
};

/// A subgroup of the unit group mod n, stored extensionally.
struct GaloisImage {
  long modulus = 1;
  std::vector<long> members;  // sorted residues in [1, n)

  bool contains(long j) const;
};

/// lcm of the orders of the p-regular elements of M.
long lcm_p_regular_orders(const FiniteMonoid& M, long p);

GaloisImage galois_image(const FieldSpec& fs, long n);

/// Reduces a Galois image at modulus t to modulus n | t (elementwise mod n).
GaloisImage galois_image_reduce(const GaloisImage& T_at_t, long t, long n);

}  // namespace monoidchar
