#pragma once

#include <random>
#include <string>
#include <vector>

#include "patchwork/closure.hpp"
#include "patchwork/orderability.hpp"
#include "patchwork/setcore.hpp"
#include "patchwork/structure.hpp"

// Fixtures and independent oracles shared by the unit and acceptance
// suites. The oracles deliberately avoid the library's worklist/index
// machinery: membership is by linear scan and the fixpoint is reached by
// restarting full pair sweeps.

namespace testutil {

patchwork::GroundSet ground(std::vector<std::string> labels);
patchwork::SetFamily family(const patchwork::GroundSet& g,
                            const std::vector<std::vector<std::string>>& sets);

// {x,y}, {y,z}, {x,z} over {x,y,z}: the classic non-orderable family.
patchwork::SetFamily triangle();
// {1}, {1,2}, {1,2,3} over {1,2,3}: orderable as given.
patchwork::SetFamily chain();

// Independent closure oracle: repeated full sweeps until stable.
std::vector<patchwork::SubsetMask> naive_closure(const patchwork::SetFamily& f);

patchwork::SetFamily random_family(std::mt19937& rng,
                                   const patchwork::GroundSet& g,
                                   std::size_t max_sets);

// Valid tree spec with exactly `labels` labels; edgeless nodes with fewer
// than three children always carry a label, so every declared kind is
// extensionally truthful in the synthesized patchwork.
patchwork::TreeSpec random_tree_spec(std::mt19937& rng, std::size_t labels);

// Structural isomorphism between a synthesized tree and its spec: same
// shape, kinds, non-cohort label sets, and path orders up to reversal.
bool tree_matches_spec(const patchwork::SynthesisResult& result,
                       const patchwork::TreeSpec& spec, std::string* why = nullptr);

// Checks an adjacency-triple certificate against the full closure of f.
bool valid_triple(const patchwork::SetFamily& f,
                  const patchwork::AdjacentTriple& t, std::string* why = nullptr);

// All structure laws of a closed family over a nonempty universe:
// laminarity, decomposition identity, the connected-subfamily
// characterization in both directions, the degree/cycle clique laws, and
// classification totality. Returns human-readable violations; empty means
// every law holds.
std::vector<std::string> structure_law_violations(const patchwork::Patchwork& p);

}  // namespace testutil
