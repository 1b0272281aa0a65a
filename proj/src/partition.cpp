#include "qsymlab/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qsymlab {

bool is_partition(const std::vector<int>& parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

bool is_composition(const std::vector<int>& parts) {
  for (int p : parts)
    if (p < 1) return false;
  return true;
}

int weight(const std::vector<int>& parts) {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

Partition to_partition(std::vector<int> parts) {
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("to_partition: parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return parts;
}

Partition conjugate_partition(const Partition& lambda) {
  Partition out;
  if (lambda.empty()) return out;
  out.resize(static_cast<size_t>(lambda[0]));
  for (int j = 0; j < lambda[0]; ++j) {
    int cnt = 0;
    for (int part : lambda)
      if (part > j) ++cnt;
    out[static_cast<size_t>(j)] = cnt;
  }
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  size_t len = std::max(a.size(), b.size());
  for (size_t i = 0; i < len; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // Compositions of n biject with subsets of [n-1].
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask)
    out.push_back(subset_to_composition(n, bitmask_to_subset(mask, n - 1)));
  return out;
}

std::vector<Composition> distinct_rearrangements(const Partition& lambda) {
  std::vector<Composition> out;
  Composition sorted = lambda;
  std::sort(sorted.begin(), sorted.end());
  do {
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

Composition subset_to_composition(int n, const std::vector<int>& subset) {
  Composition alpha;
  int prev = 0;
  for (int s : subset) {
    if (s <= prev || s > n - 1)
      throw std::invalid_argument("subset_to_composition: subset not increasing within [n-1]");
    alpha.push_back(s - prev);
    prev = s;
  }
  alpha.push_back(n - prev);
  return alpha;
}

std::vector<int> composition_to_subset(const Composition& alpha) {
  std::vector<int> subset;
  int acc = 0;
  for (size_t i = 0; i + 1 < alpha.size(); ++i) {
    acc += alpha[i];
    subset.push_back(acc);
  }
  return subset;
}

std::vector<int> bitmask_to_subset(unsigned mask, int m) {
  std::vector<int> out;
  for (int i = 1; i <= m; ++i)
    if (mask & (1u << (i - 1))) out.push_back(i);
  return out;
}

unsigned subset_to_bitmask(const std::vector<int>& subset) {
  unsigned mask = 0;
  for (int s : subset) mask |= 1u << (s - 1);
  return mask;
}

}  // namespace qsymlab
