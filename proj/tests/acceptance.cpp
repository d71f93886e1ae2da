// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, nonzero exit if anything fails.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "monoidchar/char_equiv.hpp"
#include "monoidchar/class_functions.hpp"
#include "monoidchar/errors.hpp"
#include "monoidchar/galois.hpp"
#include "monoidchar/language.hpp"
#include "monoidchar/monoid.hpp"

using namespace monoidchar;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion << ": " << name;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

bool golden_mean_word(const std::vector<int>& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == 1 && w[i + 1] == 1) return false;
  return w.empty() || !(w.front() == 1 && w.back() == 1);
}

mpz_class brute_force_golden_mean_count(int n) {
  mpz_class count = 0;
  std::vector<int> w(n, 0);
  for (long mask = 0; mask < (1L << n); ++mask) {
    for (int i = 0; i < n; ++i) w[i] = (mask >> i) & 1;
    if (golden_mean_word(w)) ++count;
  }
  return count;
}

int pow_factorial(const FiniteMonoid& M, int m) {
  int x = m;
  for (int k = 2; k <= M.size; ++k) x = M.pow(x, static_cast<std::uint64_t>(k));
  return x;
}

}  // namespace

int main() {
  std::vector<corpus::Entry> monoids = corpus::build_corpus();
  std::vector<FieldSpec> fields = corpus::corpus_fields();
  std::cout << "corpus: " << monoids.size() << " monoids x " << fields.size()
            << " fields" << std::endl;

  // 1: the closure partition and the pairwise-witness partition coincide
  {
    bool ok = true;
    std::string detail;
    for (const auto& entry : monoids)
      for (const auto& fs : fields) {
        if (equiv_closure(entry.monoid, fs) != partition_from_approx(entry.monoid, fs)) {
          ok = false;
          detail = entry.name + " over " + fs.to_string();
        }
      }
    report(1, "closure partition equals witness partition on the whole corpus", ok, detail);
  }

  // 2: class count equals the summed subgroup class count, via a bijection
  {
    bool ok = true;
    std::string detail;
    for (const auto& entry : monoids)
      for (const auto& fs : fields) {
        try {
          EquivPartition P = equiv_closure(entry.monoid, fs);
          if (P.num_classes() != irr_count(entry.monoid, fs)) {
            ok = false;
            detail = entry.name + " over " + fs.to_string() + ": count mismatch";
          }
          psi_bijection(entry.monoid, fs);
        } catch (const Error& e) {
          ok = false;
          detail = entry.name + " over " + fs.to_string() + ": " + e.what();
        }
      }
    report(2, "class count equals irreducible count and the bijection holds", ok, detail);
  }

  // 3: specific counts for T2 and Z3
  {
    FiniteMonoid T2 = corpus::full_transformation_monoid(2);
    FiniteMonoid Z3 = corpus::cyclic_group(3);
    bool ok =
        equiv_closure(T2, FieldSpec::algebraically_closed(0)).num_classes() == 3 &&
        equiv_closure(T2, FieldSpec::rationals()).num_classes() == 3 &&
        equiv_closure(T2, FieldSpec::finite_field(2)).num_classes() == 2 &&
        equiv_closure(Z3, FieldSpec::rationals()).num_classes() == 2 &&
        equiv_closure(Z3, FieldSpec::algebraically_closed(0)).num_classes() == 3 &&
        equiv_closure(Z3, FieldSpec::finite_field(2)).num_classes() == 2;
    report(3, "specific class counts for T2 and the cyclic group of order 3", ok);
  }

  // 4: trace identities for both built-in characters; fault injection control
  {
    bool ok = true;
    std::string detail;
    for (const auto& entry : monoids)
      for (const auto& fs : fields) {
        if (!verify_character_identities(char_of_rep(right_regular_rep(entry.monoid, fs)))
                 .empty()) {
          ok = false;
          detail = entry.name + " right-regular over " + fs.to_string();
        }
        if (entry.monoid.has_transformations() &&
            !verify_character_identities(natural_character(entry.monoid, fs)).empty()) {
          ok = false;
          detail = entry.name + " natural over " + fs.to_string();
        }
      }
    FiniteMonoid T2 = corpus::full_transformation_monoid(2);
    ClassFunction corrupted =
        char_of_rep(right_regular_rep(T2, FieldSpec::rationals()));
    corrupted.values[2] += 1;  // breaks the commutation identity for the constants
    if (verify_character_identities(corrupted).empty()) {
      ok = false;
      detail = "fault injection went undetected";
    }
    report(4, "trace identities hold exactly; fault injection is caught", ok, detail);
  }

  // 5: Galois image reduction is consistent across common multiples
  {
    bool ok = true;
    std::string detail;
    for (const auto& entry : monoids)
      for (auto fs : {FieldSpec::finite_field(2), FieldSpec::finite_field(3),
                      FieldSpec::rationals()}) {
        long p = fs.characteristic;
        long n = lcm_p_regular_orders(entry.monoid, p);
        for (long t : {n, 6 * n, 5 * n}) {
          long tt = t;
          while (p != 0 && tt % p == 0) tt += n;  // keep t coprime to p
          GaloisImage direct = galois_image(fs, n);
          GaloisImage reduced = galois_image_reduce(galois_image(fs, tt), tt, n);
          if (direct.members != reduced.members) {
            ok = false;
            detail = entry.name + " over " + fs.to_string() + " t=" + std::to_string(tt);
          }
        }
      }
    report(5, "Galois image reduction agrees with direct computation", ok, detail);
  }

  // 6: virtual-character certificate for every cyclic fixture over every field
  {
    bool ok = true;
    std::string detail;
    for (const char* name : {"astar.dfa", "full2.dfa", "golden_mean.dfa"}) {
      TransitionMonoid tm = transition_monoid(parse_dfa_file(corpus::fixture(name)));
      for (const auto& fs : fields) {
        try {
          indicator_virtual_certificate(tm.monoid, tm.subset, fs);
        } catch (const Error& e) {
          ok = false;
          detail = std::string(name) + " over " + fs.to_string() + ": " + e.what();
        }
      }
    }
    report(6, "indicator certificates succeed for every cyclic fixture", ok, detail);
  }

  // 7: zeta pipeline against brute force and exact reconstruction
  {
    bool ok = true;
    std::string detail;
    Dfa gm = parse_dfa_file(corpus::fixture("golden_mean.dfa"));
    ZetaSeries series = zeta_truncated(gm, 12);
    for (int n = 1; n <= 12; ++n)
      if (series.word_counts[n - 1] != brute_force_golden_mean_count(n)) {
        ok = false;
        detail = "word count mismatch at n=" + std::to_string(n);
      }
    auto f = rational_reconstruct(series, 2);
    if (!f || f->numerator != Polynomial({mpq_class(1)}) ||
        f->denominator != Polynomial({mpq_class(1), mpq_class(-1), mpq_class(-1)})) {
      ok = false;
      detail = "golden-mean zeta is not 1/(1 - x - x^2)";
    }
    auto astar = zeta_report(parse_dfa_file(corpus::fixture("astar.dfa")), {}, 12);
    if (!astar.zeta || astar.zeta->to_string() != "(1) / (1 - x)") {
      ok = false;
      detail = "a* zeta is not 1/(1 - x)";
    }
    auto full2 = zeta_report(parse_dfa_file(corpus::fixture("full2.dfa")), {}, 12);
    if (!full2.zeta || full2.zeta->to_string() != "(1) / (1 - 2x)") {
      ok = false;
      detail = "full 2-letter zeta is not 1/(1 - 2x)";
    }
    report(7, "zeta pipeline matches brute force and reconstructs exactly", ok, detail);
  }

  // 8: negative control
  {
    CyclicVerdict v = is_cyclic_language(parse_dfa_file(corpus::fixture("aaplus.dfa")));
    bool ok = !v.cyclic && v.counterexample &&
              v.counterexample->kind == CyclicCounterexample::Kind::Power &&
              v.counterexample->s == 2 && v.word_counterexample == "u=a s=2";
    report(8, "(aa)+ is rejected as non-cyclic with counterexample u=a, s=2", ok);
  }

  // 9: the witness relation is an equivalence on every corpus pair
  {
    bool ok = true;
    std::string detail;
    for (const auto& entry : monoids)
      for (const auto& fs : fields) {
        try {
          partition_from_approx(entry.monoid, fs);  // raises if not an equivalence
        } catch (const NotTransitive& e) {
          ok = false;
          detail = entry.name + " over " + fs.to_string() + ": " + e.what();
        }
      }
    report(9, "witness relation is symmetric and transitive on the whole corpus", ok,
           detail);
  }

  // 10: m^(|M|!) = m^omega for every element
  {
    bool ok = true;
    std::string detail;
    for (const auto& entry : monoids)
      for (int m = 0; m < entry.monoid.size; ++m)
        if (pow_factorial(entry.monoid, m) != omega(entry.monoid, m)) {
          ok = false;
          detail = entry.name + " element " + std::to_string(m);
        }
    report(10, "m^(|M|!) equals the omega power for every corpus element", ok, detail);
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << std::endl;
  return failures == 0 ? 0 : 1;
}
