#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <variant>

#include "patchwork/setcore.hpp"

namespace patchwork {

// A family closed under union, intersection and both differences of every
// overlapping pair, and containing the empty set and the whole universe.
// Carries a hash index for O(1) membership tests.
class Patchwork {
 public:
  Patchwork() = default;

  // `family` must already be closed. close() builds one from generators;
  // from_closed_family() validates an untrusted family first.
  Patchwork(SetFamily family, std::size_t generator_count);
  static Patchwork from_closed_family(SetFamily family,
                                      std::size_t generator_count);

  const SetFamily& family() const { return family_; }
  const GroundSet& ground() const { return family_.ground(); }
  std::size_t size() const { return family_.size(); }
  std::size_t generator_count() const { return generator_count_; }

  bool contains(const SubsetMask& m) const;
  std::optional<std::size_t> index_of(const SubsetMask& m) const;

 private:
  SetFamily family_;
  std::unordered_map<SubsetMask, std::size_t, MaskHash> index_;
  std::size_t generator_count_ = 0;
};

// Least closed family containing f plus the empty set and the universe.
// Worklist fixpoint: each unordered pair of members is combined exactly
// once, including pairs against masks appended mid-run. Always terminates
// on finite input.
Patchwork close(const SetFamily& f);

struct ClosureExceeded {
  std::size_t reached = 0;
  std::size_t bound = 0;
};

// Result of a bounded closure: either the finished patchwork, or evidence
// that the family grew strictly past the bound (reported the moment it
// happens, with no further pairs processed).
class ClosureOutcome {
 public:
  static ClosureOutcome closed(Patchwork p) {
    return ClosureOutcome(std::move(p));
  }
  static ClosureOutcome exceeded(std::size_t reached, std::size_t bound) {
    return ClosureOutcome(ClosureExceeded{reached, bound});
  }

  bool is_closed() const { return std::holds_alternative<Patchwork>(state_); }
  const Patchwork& patchwork() const { return std::get<Patchwork>(state_); }
  const ClosureExceeded& exceedance() const {
    return std::get<ClosureExceeded>(state_);
  }

 private:
  explicit ClosureOutcome(std::variant<Patchwork, ClosureExceeded> s)
      : state_(std::move(s)) {}
  std::variant<Patchwork, ClosureExceeded> state_;
};

// Requires bound >= 2 (the closure always holds the empty set and the
// universe).
ClosureOutcome close_bounded(const SetFamily& f, std::size_t bound);

// First closure violation found, in canonical scan order. `pair` is
// absent when a required constant (empty set or universe) is missing.
struct PatchworkViolation {
  std::optional<std::pair<SubsetMask, SubsetMask>> pair;
  SubsetMask missing;
};

struct PatchworkCheck {
  bool ok = false;
  std::optional<PatchworkViolation> violation;
};

PatchworkCheck is_patchwork(const SetFamily& f);

}  // namespace patchwork
