#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace monoidchar {

/// Dense polynomial over Q, coefficients in ascending degree.
struct Polynomial {
  std::vector<mpq_class> coeffs;  // trailing zeros trimmed; empty = zero

  Polynomial() = default;
  explicit Polynomial(std::vector<mpq_class> c) : coeffs(std::move(c)) { trim(); }
  static Polynomial constant(const mpq_class& v);

  void trim();
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
  mpq_class at(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[k] : mpq_class(0);
  }
  mpq_class eval(const mpq_class& x) const;

  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  bool operator==(const Polynomial&) const = default;

  /// Ascending-degree rendering with explicit signs, e.g. "1 - x - x^2".
  std::string to_string(const std::string& var = "x") const;
};

/// Remainder of polynomial division.
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);

/// Monic gcd over Q.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// P/Q with Q(0) = 1 and gcd(P, Q) = 1.
struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;

  /// Reduces and renormalizes so the invariants hold; Q(0) must be nonzero.
  static RationalFunction normalized(Polynomial p, Polynomial q);

  /// Power-series coefficients of P/Q through degree N.
  std::vector<mpq_class> series(int N) const;

  std::string to_string() const;
  bool operator==(const RationalFunction&) const = default;
};

}  // namespace monoidchar
