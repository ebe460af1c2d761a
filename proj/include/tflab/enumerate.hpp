#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "tflab/topoframe.hpp"

namespace tflab {

/// Every labeled poset on `nodes` nodes (0 to 4; BoundExceeded above).
/// Counts: 1, 1, 3, 19, 219.
std::vector<Poset> enumerate_posets(int nodes);

/// Every labeled topology on {1..npoints} as a bitmask over subset indices
/// (bit s set means the subset with point-mask s is open). Generated by
/// closure growth from the indiscrete topology; sorted ascending.
/// npoints up to 4, BoundExceeded above.
std::vector<uint32_t> enumerate_topology_masks(int npoints);

/// Independent oracle for the same count: filters every family of subsets
/// containing the empty set and the whole set for closure under pairwise
/// union and intersection. Shares no code with the growth generator.
std::vector<uint32_t> topology_masks_bruteforce(int npoints);

/// The labeled topologies instantiated over one shared powerset lattice.
std::vector<std::shared_ptr<const Topoframe>> enumerate_topoframes(
    int npoints);

/// All subframes of complemented elements of an arbitrary lattice, each as
/// a topoframe, smallest families first. Only subframes with at most
/// `max_subframe_size` members are kept; BoundExceeded when the lattice has
/// more than 20 complemented elements.
std::vector<std::shared_ptr<const Topoframe>> enumerate_subframe_topoframes(
    const std::shared_ptr<const Lattice>& L, int max_subframe_size);

}  // namespace tflab
