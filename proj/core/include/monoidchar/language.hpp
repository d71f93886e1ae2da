#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monoidchar/class_functions.hpp"
#include "monoidchar/monoid.hpp"
#include "monoidchar/polynomial.hpp"

namespace monoidchar {

struct Dfa {
  int states = 0;
  std::vector<std::string> alphabet;
  std::vector<int> delta;  // states x alphabet, row-major
  int initial = 0;
  std::vector<bool> accepting;

  int step(int state, int symbol) const { return delta[state * alphabet.size() + symbol]; }
  bool accepts(const std::vector<int>& word) const;
};

Dfa parse_dfa(std::istream& in);
Dfa parse_dfa_file(const std::string& path);

/// The transition monoid of a DFA together with the letter map of the
/// homomorphism from words, the recognized subset X, and a shortest word
/// reaching each monoid element.
struct TransitionMonoid {
  FiniteMonoid monoid;
  std::vector<int> letter_map;               // symbol index -> element
  std::vector<bool> subset;                  // X = image of the language
  std::vector<std::vector<int>> witness_word;  // per element, symbol indices

  std::string word_string(const Dfa& dfa, int element) const;
};

TransitionMonoid transition_monoid(const Dfa& dfa, int size_cap = kDefaultMonoidCap);

struct CyclicVerdict {
  bool cyclic = false;
  std::optional<CyclicCounterexample> counterexample;  // monoid-level
  std::string word_counterexample;                     // human-readable, when not cyclic
};

CyclicVerdict is_cyclic_language(const Dfa& dfa);

/// Exact number of accepted words of length n, by transfer matrix.
mpz_class word_count(const Dfa& dfa, int n);

struct ZetaSeries {
  std::vector<mpq_class> coefficients;  // c_0..c_N, c_0 = 1
  std::vector<mpz_class> word_counts;   // a_1..a_N
};

/// exp(sum a_n x^n / n) truncated to order N.
ZetaSeries zeta_truncated(const Dfa& dfa, int N);
ZetaSeries zeta_from_counts(const std::vector<mpz_class>& counts);

/// Finds the minimal-degree rational function whose expansion matches every
/// series coefficient; the recurrence check over all coefficients is the
/// certificate.
std::optional<RationalFunction> rational_reconstruct(const ZetaSeries& series, int dmax);

struct ZetaReport {
  int monoid_size = 0;
  CyclicVerdict verdict;
  std::vector<FieldSpec> fields;
  std::vector<VirtualCertificate> certificates;  // parallel to fields; empty if not cyclic
  ZetaSeries series;
  std::optional<RationalFunction> zeta;
  int dmax_used = 0;
  bool undetermined = false;  // reconstruction failed at 2x retry
};

ZetaReport zeta_report(const Dfa& dfa, const std::vector<FieldSpec>& fields, int N,
                       int dmax = 0);

}  // namespace monoidchar
