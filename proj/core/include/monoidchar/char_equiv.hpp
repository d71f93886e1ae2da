#pragma once

#include <optional>
#include <vector>

#include "monoidchar/galois.hpp"
#include "monoidchar/monoid.hpp"

namespace monoidchar {

/// A partition of 0..host_size-1 with class-representative lookup.
/// Classes are listed in order of their smallest element, each sorted.
struct EquivPartition {
  int host_size = 0;
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;

  int num_classes() const { return static_cast<int>(classes.size()); }
  bool same_class(int a, int b) const { return class_of[a] == class_of[b]; }
  bool operator==(const EquivPartition&) const = default;

  /// Canonical partition from an arbitrary class-id labeling.
  static EquivPartition from_labels(const std::vector<int>& labels);
};

/// Partition of an explicit element subset (used for p-regular elements of a
/// maximal subgroup); `elements` lists the partitioned elements.
struct SubsetPartition {
  std::vector<int> elements;               // sorted
  std::vector<std::vector<int>> classes;   // over element values

  int num_classes() const { return static_cast<int>(classes.size()); }
};

/// K-conjugacy on the p-regular elements of G: g ~ h iff x g x^-1 = h^j for
/// some x in G and j in T.
SubsetPartition k_conjugacy_classes(const GroupView& G, const GaloisImage& T, long p);

/// The least equivalence generated by commutation, m = p'-part of m^{omega+1},
/// and Galois twisting of p-regular elements.
EquivPartition equiv_closure(const FiniteMonoid& M, const FieldSpec& fs);

struct ApproxWitness {
  int x = 0;
  int y = 0;
  long j = 1;
};

std::optional<ApproxWitness> approx_test(const FiniteMonoid& M, const FieldSpec& fs,
                                         int a, int b);

/// Partition induced by pairwise approx_test; raises NotTransitive if the
/// pairwise relation fails to be an equivalence.
EquivPartition partition_from_approx(const FiniteMonoid& M, const FieldSpec& fs);

/// Number of irreducible representations of M over the field: the sum over
/// D-class idempotent representatives of the K-conjugacy class counts.
long irr_count(const FiniteMonoid& M, const FieldSpec& fs);

/// The bijection from K-conjugacy classes at each D-class representative to
/// character-equivalence classes.
struct PsiBijection {
  std::vector<int> d_class_reps;
  std::vector<SubsetPartition> group_partitions;  // parallel to d_class_reps
  EquivPartition monoid_partition;
  // pairs ((rep index, class index), equiv class id), one per source class
  std::vector<std::pair<std::pair<int, int>, int>> assignments;
};

PsiBijection psi_bijection(const FiniteMonoid& M, const FieldSpec& fs);

}  // namespace monoidchar
