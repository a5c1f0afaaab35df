#include "patchwork/setcore.hpp"

#include <algorithm>
#include <bit>

#include "json.hpp"

namespace patchwork {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t width) {
  return (width + kWordBits - 1) / kWordBits;
}
}  // namespace

SubsetMask::SubsetMask(std::size_t width)
    : width_(width), words_(word_count(width), 0) {}

SubsetMask SubsetMask::full(std::size_t width) {
  SubsetMask m(width);
  for (auto& w : m.words_) w = ~std::uint64_t{0};
  if (width % kWordBits != 0 && !m.words_.empty())
    m.words_.back() &= (std::uint64_t{1} << (width % kWordBits)) - 1;
  return m;
}

SubsetMask SubsetMask::single(std::size_t width, std::size_t element) {
  SubsetMask m(width);
  m.set(element);
  return m;
}

SubsetMask SubsetMask::from_elements(std::size_t width,
                                     const std::vector<std::size_t>& elements) {
  SubsetMask m(width);
  for (auto e : elements) m.set(e);
  return m;
}

bool SubsetMask::test(std::size_t i) const {
  if (i >= width_) throw UsageError("element index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

SubsetMask& SubsetMask::set(std::size_t i, bool value) {
  if (i >= width_) throw UsageError("element index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
  if (value)
    words_[i / kWordBits] |= bit;
  else
    words_[i / kWordBits] &= ~bit;
  return *this;
}

std::size_t SubsetMask::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

void SubsetMask::check_same_width(const SubsetMask& o) const {
  if (width_ != o.width_)
    throw UsageError("mask width mismatch: " + std::to_string(width_) +
                     " vs " + std::to_string(o.width_));
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
  check_same_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & ~other.words_[k]) return false;
  return true;
}

bool SubsetMask::intersects(const SubsetMask& other) const {
  check_same_width(other);
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & other.words_[k]) return true;
  return false;
}

SubsetMask SubsetMask::operator|(const SubsetMask& o) const {
  check_same_width(o);
  SubsetMask r(width_);
  for (std::size_t k = 0; k < words_.size(); ++k)
    r.words_[k] = words_[k] | o.words_[k];
  return r;
}

SubsetMask SubsetMask::operator&(const SubsetMask& o) const {
  check_same_width(o);
  SubsetMask r(width_);
  for (std::size_t k = 0; k < words_.size(); ++k)
    r.words_[k] = words_[k] & o.words_[k];
  return r;
}

SubsetMask SubsetMask::operator-(const SubsetMask& o) const {
  check_same_width(o);
  SubsetMask r(width_);
  for (std::size_t k = 0; k < words_.size(); ++k)
    r.words_[k] = words_[k] & ~o.words_[k];
  return r;
}

SubsetMask& SubsetMask::operator|=(const SubsetMask& o) {
  check_same_width(o);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  return *this;
}

std::vector<std::size_t> SubsetMask::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w) {
      out.push_back(k * kWordBits +
                    static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t SubsetMask::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ width_;
  for (auto w : words_)
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  return h;
}

bool canonical_less(const SubsetMask& a, const SubsetMask& b) {
  if (a.width() != b.width()) return a.width() < b.width();
  const std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  // Same cardinality: the mask containing the lowest differing element
  // comes first; this matches lexicographic order on sorted element lists.
  for (std::size_t i = 0; i < a.width(); ++i) {
    const bool in_a = a.test(i), in_b = b.test(i);
    if (in_a != in_b) return in_a;
  }
  return false;
}

bool overlap(const SubsetMask& a, const SubsetMask& b) {
  return a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a);
}

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw UsageError("duplicate ground label: \"" + labels_[i] + "\"");
  }
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubsetMask GroundSet::subset(
    const std::vector<std::string>& member_labels) const {
  SubsetMask m(size());
  for (const auto& l : member_labels) {
    auto i = index_of(l);
    if (!i) throw UsageError("unknown element label: \"" + l + "\"");
    m.set(*i);
  }
  return m;
}

std::vector<std::string> GroundSet::mask_labels(const SubsetMask& m) const {
  std::vector<std::string> out;
  for (auto e : m.elements()) out.push_back(labels_.at(e));
  return out;
}

std::string GroundSet::set_notation(const SubsetMask& m) const {
  std::string s = "{";
  bool first = true;
  for (auto e : m.elements()) {
    if (!first) s += ",";
    s += labels_.at(e);
    first = false;
  }
  return s + "}";
}

SetFamily::SetFamily(GroundSet ground, std::vector<SubsetMask> sets)
    : ground_(std::move(ground)), sets_(std::move(sets)) {
  for (const auto& s : sets_)
    if (s.width() != ground_.size())
      throw UsageError("set width does not match the ground set");
  std::sort(sets_.begin(), sets_.end(), canonical_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetFamily::contains(const SubsetMask& m) const {
  return std::binary_search(sets_.begin(), sets_.end(), m, canonical_less);
}

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad_instance(const std::string& detail) {
  throw ParseError("invalid instance: " + detail);
}

}  // namespace

SetFamily parse_family(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad_instance("top level must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "omega" && key != "sets") bad_instance("unknown key \"" + key + "\"");
  }
  if (!j.contains("omega") || !j["omega"].is_array())
    bad_instance("\"omega\" must be an array of labels");
  if (!j.contains("sets") || !j["sets"].is_array())
    bad_instance("\"sets\" must be an array of label arrays");

  std::vector<std::string> labels;
  for (const auto& l : j["omega"]) {
    if (!l.is_string()) bad_instance("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  GroundSet ground;
  try {
    ground = GroundSet(std::move(labels));
  } catch (const UsageError& e) {
    bad_instance(e.what());
  }

  std::vector<SubsetMask> sets;
  for (const auto& arr : j["sets"]) {
    if (!arr.is_array()) bad_instance("each set must be an array of labels");
    SubsetMask m(ground.size());
    for (const auto& l : arr) {
      if (!l.is_string()) bad_instance("labels must be strings");
      auto idx = ground.index_of(l.get<std::string>());
      if (!idx)
        bad_instance("set references element \"" + l.get<std::string>() +
                     "\" not in omega");
      m.set(*idx);
    }
    sets.push_back(std::move(m));
  }
  return SetFamily(std::move(ground), std::move(sets));
}

std::string serialize_family(const SetFamily& f) {
  ordered_json j;
  j["omega"] = f.ground().labels();
  auto sets = ordered_json::array();
  for (const auto& m : f.sets()) sets.push_back(f.ground().mask_labels(m));
  j["sets"] = std::move(sets);
  return j.dump();
}

}  // namespace patchwork
