#include "patchwork/orderability.hpp"

#include <algorithm>
#include <map>

#include "patchwork/testkit.hpp"

namespace patchwork {

QuotientResult quotient(const SetFamily& f) {
  const auto& g = f.ground();
  const std::size_t n_elems = g.size();
  const std::size_t n_sets = f.size();

  QuotientMap map;
  std::map<std::vector<bool>, std::size_t> class_of;  // signature -> class id
  std::vector<std::size_t> elem_class(n_elems, 0);
  for (std::size_t x = 0; x < n_elems; ++x) {
    std::vector<bool> sig(n_sets);
    for (std::size_t s = 0; s < n_sets; ++s) sig[s] = f.sets()[s].test(x);
    auto [it, inserted] = class_of.emplace(sig, map.classes.size());
    if (inserted) {
      map.classes.push_back(SubsetMask(n_elems));
      map.representatives.push_back(x);
      SubsetMask sig_mask(n_sets);
      for (std::size_t s = 0; s < n_sets; ++s)
        if (sig[s]) sig_mask.set(s);
      map.signatures.push_back(std::move(sig_mask));
    }
    elem_class[x] = it->second;
    map.classes[it->second].set(x);
  }

  std::vector<std::string> reduced_labels;
  for (auto r : map.representatives) reduced_labels.push_back(g.label(r));
  GroundSet reduced_ground(std::move(reduced_labels));

  std::vector<SubsetMask> reduced_sets;
  for (std::size_t s = 0; s < n_sets; ++s) {
    SubsetMask m(map.classes.size());
    for (std::size_t c = 0; c < map.classes.size(); ++c)
      if (map.signatures[c].test(s)) m.set(c);
    reduced_sets.push_back(std::move(m));
  }
  return QuotientResult{SetFamily(std::move(reduced_ground), std::move(reduced_sets)),
                        std::move(map)};
}

std::vector<std::size_t> lift_order(const std::vector<std::size_t>& reduced_order,
                                    const QuotientMap& map) {
  const std::size_t k = map.classes.size();
  if (reduced_order.size() != k)
    throw UsageError("lift_order: order length does not match the class count");
  std::vector<bool> seen(k, false);
  for (auto c : reduced_order) {
    if (c >= k || seen[c])
      throw UsageError("lift_order: not a permutation of the classes");
    seen[c] = true;
  }
  std::vector<std::size_t> full;
  for (auto c : reduced_order)
    for (auto e : map.classes[c].elements()) full.push_back(e);
  return full;
}

namespace {

void check_permutation(const std::vector<std::size_t>& order, std::size_t n) {
  if (order.size() != n)
    throw UsageError("order length does not match the universe");
  std::vector<bool> seen(n, false);
  for (auto e : order) {
    if (e >= n || seen[e]) throw UsageError("order is not a permutation");
    seen[e] = true;
  }
}

}  // namespace

OrderCheck verify_order(const SetFamily& f, const std::vector<std::size_t>& order) {
  const std::size_t n = f.ground().size();
  check_permutation(order, n);
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  for (const auto& set : f.sets()) {
    const auto members = set.elements();
    if (members.size() <= 1) continue;
    std::size_t lo = n, hi = 0;
    for (auto e : members) {
      lo = std::min(lo, pos[e]);
      hi = std::max(hi, pos[e]);
    }
    if (hi - lo + 1 == members.size()) continue;
    for (std::size_t q = lo + 1; q < hi; ++q) {
      if (!set.test(order[q]))
        return {false, ConvexityWitness{set, order[lo], order[q], order[hi]}};
    }
  }
  return {true, std::nullopt};
}

std::optional<AdjacentTriple> find_adjacent_triple(const Patchwork& p,
                                                   const AutonomyTree& tree) {
  (void)p;
  for (const auto& nd : tree.nodes) {  // nodes are in canonical order
    if (nd.label.kind != CohortCase::complete) continue;
    return AdjacentTriple{tree.nodes[nd.cohort[0]].set,
                          tree.nodes[nd.cohort[1]].set,
                          tree.nodes[nd.cohort[2]].set};
  }
  return std::nullopt;
}

namespace {

void emit_order(const AutonomyTree& tree, std::size_t node,
                std::vector<std::size_t>& out) {
  const auto& nd = tree.nodes[node];
  switch (nd.label.kind) {
    case CohortCase::complete:
      throw ContractViolation(
          "construct_order: a complete cohort admits no ordering");
    case CohortCase::path:
      for (auto c : nd.label.path_order) emit_order(tree, c, out);
      break;
    case CohortCase::edgeless:
      for (auto c : nd.cohort) emit_order(tree, c, out);
      for (auto e : nd.non_cohort.elements()) out.push_back(e);
      break;
  }
}

}  // namespace

std::vector<std::size_t> construct_order(const Patchwork& p,
                                         const AutonomyTree& tree) {
  std::vector<std::size_t> out;
  out.reserve(p.ground().size());
  emit_order(tree, tree.root, out);
  if (out.size() != p.ground().size())
    throw ContractViolation("construct_order: not every element was placed");
  return out;
}

namespace {

SubsetMask lift_mask(const SubsetMask& reduced, const QuotientMap& map,
                     std::size_t full_width) {
  SubsetMask m(full_width);
  for (auto c : reduced.elements()) m |= map.classes[c];
  return m;
}

Certificate lift_certificate(const AdjacentTriple& t,
                             const std::optional<QuotientMap>& map,
                             std::size_t full_width) {
  if (!map) return t;
  return AdjacentTriple{lift_mask(t.a, *map, full_width),
                        lift_mask(t.b, *map, full_width),
                        lift_mask(t.c, *map, full_width)};
}

}  // namespace

DecideResult decide(const SetFamily& f, const DecideOptions& opts) {
  DecideResult res;
  const auto& g = f.ground();

  if (g.size() == 0) {  // the empty order makes everything convex
    res.verdict.order = std::vector<std::size_t>{};
    res.closure = close(f);
    return res;
  }

  const std::size_t n = f.size();
  SetFamily work = f;
  std::optional<QuotientMap> qmap;
  if (opts.use_quotient && n < 63 && g.size() > (std::size_t{1} << n)) {
    auto q = quotient(f);
    work = std::move(q.reduced);
    qmap = std::move(q.map);
    res.quotient_used = true;
  }

  const auto bound = static_cast<std::size_t>(
      max_convex_patchwork_size(static_cast<unsigned>(n)));
  auto outcome = close_bounded(work, bound);

  if (!outcome.is_closed()) {
    if (opts.find_triple) {
      auto full = close_bounded(work, opts.closure_cap);
      if (full.is_closed()) {
        auto tree = autonomy_tree(full.patchwork());
        auto triple = find_adjacent_triple(full.patchwork(), tree);
        if (!triple)
          throw ContractViolation(
              "closure exceeded the orderable bound yet no complete cohort "
              "exists");
        res.verdict.certificate = lift_certificate(*triple, qmap, g.size());
        res.closure = full.patchwork();
        res.tree = std::move(tree);
        return res;
      }
    }
    res.verdict.certificate =
        ClosureBoundExceeded{bound, outcome.exceedance().reached};
    return res;
  }

  const Patchwork& p = outcome.patchwork();
  AutonomyTree tree = autonomy_tree(p);

  if (auto triple = find_adjacent_triple(p, tree)) {
    res.verdict.certificate = lift_certificate(*triple, qmap, g.size());
  } else {
    auto order = construct_order(p, tree);
    if (!verify_order(p.family(), order).ok)
      throw ContractViolation("constructed order leaves a closure member "
                              "non-convex");
    auto full_order = qmap ? lift_order(order, *qmap) : order;
    if (!verify_order(f, full_order).ok)
      throw ContractViolation("lifted order leaves an input set non-convex");
    res.verdict.order = std::move(full_order);
  }
  res.closure = p;
  res.tree = std::move(tree);
  return res;
}

}  // namespace patchwork
