#include "patchwork/closure.hpp"

#include <vector>

namespace patchwork {

Patchwork::Patchwork(SetFamily family, std::size_t generator_count)
    : family_(std::move(family)), generator_count_(generator_count) {
  for (std::size_t i = 0; i < family_.sets().size(); ++i)
    index_.emplace(family_.sets()[i], i);
}

Patchwork Patchwork::from_closed_family(SetFamily family,
                                        std::size_t generator_count) {
  auto check = is_patchwork(family);
  if (!check.ok) {
    const auto& g = family.ground();
    const auto& v = *check.violation;
    if (v.pair)
      throw NotAPatchworkError("missing " + g.set_notation(v.missing) +
                               " for the overlapping pair " +
                               g.set_notation(v.pair->first) + ", " +
                               g.set_notation(v.pair->second));
    throw NotAPatchworkError("missing required member " +
                             g.set_notation(v.missing));
  }
  return Patchwork(std::move(family), generator_count);
}

bool Patchwork::contains(const SubsetMask& m) const {
  return index_.find(m) != index_.end();
}

std::optional<std::size_t> Patchwork::index_of(const SubsetMask& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct Builder {
  std::vector<SubsetMask> members;
  std::unordered_map<SubsetMask, std::size_t, MaskHash> index;
  std::optional<std::size_t> bound;
  bool exceeded = false;

  void push(const SubsetMask& m) {
    if (exceeded) return;
    if (index.emplace(m, members.size()).second) {
      members.push_back(m);
      if (bound && members.size() > *bound) exceeded = true;
    }
  }
};

ClosureOutcome close_impl(const SetFamily& f, std::optional<std::size_t> bound) {
  const std::size_t width = f.ground().size();
  Builder b;
  b.bound = bound;
  b.push(SubsetMask(width));
  b.push(SubsetMask::full(width));
  for (const auto& s : f.sets()) b.push(s);

  // Pair (j, k) is visited exactly once, when the outer index reaches k;
  // members appended mid-run extend the outer loop.
  for (std::size_t k = 1; k < b.members.size() && !b.exceeded; ++k) {
    for (std::size_t j = 0; j < k && !b.exceeded; ++j) {
      // Copies: push() may reallocate the member vector.
      const SubsetMask a = b.members[j];
      const SubsetMask c = b.members[k];
      if (!overlap(a, c)) continue;
      b.push(a | c);
      b.push(a & c);
      b.push(a - c);
      b.push(c - a);
    }
  }

  if (b.exceeded) return ClosureOutcome::exceeded(b.members.size(), *bound);
  return ClosureOutcome::closed(
      Patchwork(SetFamily(f.ground(), std::move(b.members)), f.size()));
}

}  // namespace

Patchwork close(const SetFamily& f) {
  return close_impl(f, std::nullopt).patchwork();
}

ClosureOutcome close_bounded(const SetFamily& f, std::size_t bound) {
  if (bound < 2) throw UsageError("closure bound must be at least 2");
  return close_impl(f, bound);
}

PatchworkCheck is_patchwork(const SetFamily& f) {
  const std::size_t width = f.ground().size();
  const SubsetMask empty(width);
  const SubsetMask full = SubsetMask::full(width);
  if (!f.contains(empty))
    return {false, PatchworkViolation{std::nullopt, empty}};
  if (!f.contains(full)) return {false, PatchworkViolation{std::nullopt, full}};

  const auto& sets = f.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const auto& a = sets[i];
      const auto& b = sets[j];
      if (!overlap(a, b)) continue;
      for (const auto& m : {a | b, a & b, a - b, b - a}) {
        if (!f.contains(m))
          return {false, PatchworkViolation{std::make_pair(a, b), m}};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace patchwork
