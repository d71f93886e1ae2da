#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace monoidchar {

/// A finite monoid given by its full multiplication table.
///
/// Elements are dense indices 0..size-1.  When the monoid was generated from
/// transformations of a finite point set, the acting maps are kept as
/// optional metadata in `images`.
struct FiniteMonoid {
  int size = 0;
  std::vector<int> table;  // row-major, table[a*size+b] = a*b
  int identity = 0;
  std::vector<std::string> element_labels;      // may be empty
  int degree = 0;                               // 0 when no transformation data
  std::vector<std::vector<int>> images;         // per element, when degree > 0

  int mul(int a, int b) const { return table[a * size + b]; }

  /// m^e by repeated squaring; e = 0 gives the identity.
  int pow(int m, std::uint64_t e) const;

  bool has_transformations() const { return degree > 0; }
};

struct IndexPeriod {
  int index = 1;   // minimal r with m^r = m^{r+s}
  int period = 1;  // minimal s for that r
};

/// The maximal subgroup G_e of the local monoid eMe.
struct GroupView {
  const FiniteMonoid* host = nullptr;
  int idempotent = 0;
  std::vector<int> elements;               // sorted
  std::unordered_map<int, int> inverse_map;

  bool contains(int g) const { return inverse_map.count(g) != 0; }
  int inverse(int g) const { return inverse_map.at(g); }
};

FiniteMonoid monoid_from_table(int size, const std::vector<std::vector<int>>& table_rows,
                               int identity);

inline constexpr int kDefaultMonoidCap = 10000;

/// Closure of a set of total maps on {0..degree-1} under composition.
/// Composition convention: (f*g)(x) = g(f(x)), left factor applied first.
FiniteMonoid monoid_from_transformations(int degree,
                                         const std::vector<std::vector<int>>& generators,
                                         int size_cap = kDefaultMonoidCap);

IndexPeriod index_period(const FiniteMonoid& M, int m);

/// The unique idempotent power of m.
int omega(const FiniteMonoid& M, int m);

/// m^omega * m; always a group element of G_{m^omega}.
int omega_plus_one(const FiniteMonoid& M, int m);

bool is_group_element(const FiniteMonoid& M, int m);

/// Order of a group element: minimal s > 0 with m = m^{s+1}.
int group_order(const FiniteMonoid& M, int m);

bool is_p_regular(const FiniteMonoid& M, int m, long p);

/// The p'-part of m^{omega+1}: the unique power of it that is p-regular and
/// whose cofactor has p-power order.  For p = 0 this is m^{omega+1} itself.
int p_regular_part(const FiniteMonoid& M, int m, long p);

/// g^j for a group element g and a residue j taken mod |g| (j = 0 mod |g|
/// yields the idempotent of <g>, not the monoid identity).
int group_power(const FiniteMonoid& M, int g, long j);

std::vector<int> idempotents(const FiniteMonoid& M);

/// The principal two-sided ideal MmM, sorted.
std::vector<int> principal_ideal(const FiniteMonoid& M, int m);

/// A witness (x, y) with xyx=x, yxy=y, xy=e, yx=f, if e and f are
/// D-equivalent idempotents.
std::optional<std::pair<int, int>> d_equivalent(const FiniteMonoid& M, int e, int f);

/// One idempotent per D-class of E(M), ordered so e_i <= e_j in the ideal
/// order implies i <= j; the identity's class comes last.
std::vector<int> d_class_idempotent_reps(const FiniteMonoid& M);

GroupView maximal_subgroup(const FiniteMonoid& M, int e);

/// The isomorphism G_{xy} -> G_{yx}, a |-> y*a*x, from a D-witness (x, y).
struct GroupIsomorphism {
  const FiniteMonoid* host;
  int x, y;
  int apply(int a) const { return host->mul(host->mul(y, a), x); }
  int apply_inverse(int b) const { return host->mul(host->mul(x, b), y); }
};

GroupIsomorphism group_isomorphism_from_witness(const FiniteMonoid& M, int x, int y);

/// Parses either the "monoid" table format or the "transformations" format.
FiniteMonoid parse_monoid(std::istream& in);
FiniteMonoid parse_monoid_file(const std::string& path);

}  // namespace monoidchar
