#pragma once

#include <vector>

namespace qsymlab {

/// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;
/// Ordered list of positive parts.
using Composition = std::vector<int>;

bool is_partition(const std::vector<int>& parts);
bool is_composition(const std::vector<int>& parts);
int weight(const std::vector<int>& parts);
/// Sorts descending and validates positivity.
Partition to_partition(std::vector<int> parts);
Partition conjugate_partition(const Partition& lambda);
/// Dominance order: a >= b termwise on partial sums (equal weights assumed).
bool dominates(const Partition& a, const Partition& b);

/// All partitions of n, largest-part-first lexicographic descending
/// ((n), (n-1,1), ..., (1^n)).  This order refines dominance.
std::vector<Partition> partitions_of(int n);
std::vector<Composition> compositions_of(int n);
/// Distinct rearrangements of lambda's parts, in lexicographic order.
std::vector<Composition> distinct_rearrangements(const Partition& lambda);

/// Subsets S = {s_1<...<s_k} of [n-1] correspond to compositions
/// (s_1, s_2-s_1, ..., n-s_k) of n.
Composition subset_to_composition(int n, const std::vector<int>& subset);
std::vector<int> composition_to_subset(const Composition& alpha);

/// Subset of [m] encoded as a bitmask (bit i-1 set iff i in S).
std::vector<int> bitmask_to_subset(unsigned mask, int m);
unsigned subset_to_bitmask(const std::vector<int>& subset);

}  // namespace qsymlab
