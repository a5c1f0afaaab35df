#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "patchwork/errors.hpp"

namespace patchwork {

// Fixed-width bit vector over a ground set. Value type; equality is
// bitwise. Bits beyond width() are kept zero.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(std::size_t width);

  static SubsetMask full(std::size_t width);
  static SubsetMask single(std::size_t width, std::size_t element);
  static SubsetMask from_elements(std::size_t width,
                                  const std::vector<std::size_t>& elements);

  std::size_t width() const { return width_; }
  bool test(std::size_t i) const;
  SubsetMask& set(std::size_t i, bool value = true);

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_full() const { return count() == width_; }

  bool is_subset_of(const SubsetMask& other) const;
  bool intersects(const SubsetMask& other) const;

  SubsetMask operator|(const SubsetMask& o) const;
  SubsetMask operator&(const SubsetMask& o) const;
  SubsetMask operator-(const SubsetMask& o) const;  // set difference
  SubsetMask& operator|=(const SubsetMask& o);

  bool operator==(const SubsetMask& o) const = default;

  std::vector<std::size_t> elements() const;
  std::size_t hash() const;

 private:
  void check_same_width(const SubsetMask& o) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct MaskHash {
  std::size_t operator()(const SubsetMask& m) const { return m.hash(); }
};

// Canonical order: by cardinality, then lexicographically on the sorted
// element sequence (the mask holding the lowest differing element wins).
// All downstream output orders derive from this.
bool canonical_less(const SubsetMask& a, const SubsetMask& b);

// True iff a and b have nonempty intersection and neither contains the
// other. The partial closure operations apply exactly to such pairs.
bool overlap(const SubsetMask& a, const SubsetMask& b);

// The universe: distinct element labels; list position is the element
// index used by every mask.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  SubsetMask empty_mask() const { return SubsetMask(size()); }
  SubsetMask full_mask() const { return SubsetMask::full(size()); }
  SubsetMask subset(const std::vector<std::string>& member_labels) const;

  std::vector<std::string> mask_labels(const SubsetMask& m) const;
  std::string set_notation(const SubsetMask& m) const;  // "{a,b}"

  bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A deduplicated family of subsets of one ground set, kept in canonical
// order. Immutable after construction.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(GroundSet ground, std::vector<SubsetMask> sets);

  const GroundSet& ground() const { return ground_; }
  const std::vector<SubsetMask>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(const SubsetMask& m) const;

  bool operator==(const SetFamily& o) const = default;

 private:
  GroundSet ground_;
  std::vector<SubsetMask> sets_;
};

// Instance format: {"omega": [label, ...], "sets": [[label, ...], ...]}.
// The order of "omega" fixes element indices. Sets are deduplicated and
// canonically ordered on parse; serialize emits the canonical form, so
// serialize-then-parse is the identity.
SetFamily parse_family(std::string_view text);
std::string serialize_family(const SetFamily& f);

}  // namespace patchwork
