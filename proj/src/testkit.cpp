#include "patchwork/testkit.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "patchwork/closure.hpp"
#include "patchwork/orderability.hpp"

namespace patchwork {

std::uint64_t max_patchwork_size(unsigned n) {
  if (n > 6) throw UsageError("max_patchwork_size overflows for n > 6");
  const unsigned exponent = (1u << n) - 1;  // <= 63
  return (std::uint64_t{1} << exponent) + 1;
}

std::uint64_t max_convex_patchwork_size(unsigned n) {
  const std::uint64_t m = n;
  return 2 * m * m - m + 2;
}

SetFamily powerset_example(unsigned n) {
  if (n > 4) throw UsageError("powerset_example requires n <= 4");
  const std::size_t points = std::size_t{1} << n;

  std::vector<std::string> labels;
  for (std::size_t a = 0; a < points; ++a) {
    std::string label;
    for (unsigned i = 1; i <= n; ++i)
      if (a & (std::size_t{1} << (i - 1))) label += std::to_string(i);
    labels.push_back(std::move(label));
  }
  GroundSet ground(std::move(labels));

  std::vector<SubsetMask> generators;
  for (unsigned i = 1; i <= n; ++i) {
    SubsetMask x(points);
    for (std::size_t a = 0; a < points; ++a)
      if (a & (std::size_t{1} << (i - 1))) x.set(a);
    generators.push_back(std::move(x));
  }
  return SetFamily(std::move(ground), std::move(generators));
}

SetFamily interval_example(unsigned n) {
  if (n < 1) throw UsageError("interval_example requires n >= 1");
  const int in = static_cast<int>(n);
  std::vector<std::string> labels;
  for (int v = -in; v <= in; ++v) labels.push_back(std::to_string(v));
  GroundSet ground(std::move(labels));

  const std::size_t width = 2 * n + 1;
  std::vector<SubsetMask> generators;
  for (int i = 1; i <= in; ++i) {
    SubsetMask a(width);
    for (int v = -in + i; v <= i - 1; ++v)
      a.set(static_cast<std::size_t>(v + in));
    generators.push_back(std::move(a));
  }
  return SetFamily(std::move(ground), std::move(generators));
}

BruteForceResult brute_force_decide(const SetFamily& f) {
  const std::size_t n = f.ground().size();
  if (n > 8) throw UsageError("brute_force_decide requires |universe| <= 8");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (verify_order(f, perm).ok) return {true, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {false, std::nullopt};
}

FamilyEnumerator::FamilyEnumerator(std::size_t omega_size,
                                   std::optional<std::size_t> max_sets)
    : max_sets_(max_sets) {
  if (omega_size > 4)
    throw UsageError("family enumeration requires omega_size <= 4");
  if (!max_sets && omega_size > 3)
    throw UsageError("unbounded family enumeration requires omega_size <= 3");

  static const char* kLabels[] = {"a", "b", "c", "d"};
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < omega_size; ++i) labels.push_back(kLabels[i]);
  ground_ = GroundSet(std::move(labels));

  const std::size_t mask_count = std::size_t{1} << omega_size;
  for (std::size_t bits = 0; bits < mask_count; ++bits) {
    SubsetMask m(omega_size);
    for (std::size_t i = 0; i < omega_size; ++i)
      if (bits & (std::size_t{1} << i)) m.set(i);
    all_masks_.push_back(std::move(m));
  }
  std::sort(all_masks_.begin(), all_masks_.end(), canonical_less);
  end_ = std::uint64_t{1} << mask_count;
}

std::optional<SetFamily> FamilyEnumerator::next() {
  while (cursor_ < end_) {
    const std::uint64_t pick = cursor_++;
    if (max_sets_ && static_cast<std::size_t>(std::popcount(pick)) > *max_sets_)
      continue;
    std::vector<SubsetMask> sets;
    for (std::size_t i = 0; i < all_masks_.size(); ++i)
      if (pick & (std::uint64_t{1} << i)) sets.push_back(all_masks_[i]);
    return SetFamily(ground_, std::move(sets));
  }
  return std::nullopt;
}

BoundReport bound_report(ExtremalKind kind, unsigned n) {
  SetFamily f = kind == ExtremalKind::powerset ? powerset_example(n)
                                               : interval_example(n);
  BoundReport r;
  r.n = n;
  r.general_bound = max_patchwork_size(n);
  r.convex_bound = max_convex_patchwork_size(n);
  r.achieved = close(f).size();
  return r;
}

}  // namespace patchwork
