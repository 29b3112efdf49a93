#ifndef HILB_REPLAY_HPP
#define HILB_REPLAY_HPP

#include "hilb/certificate.hpp"

namespace hilb {

/// Replays the finite case analysis for a non-factorial nodal quintic
/// threefold with at most 24 nodes: of all symmetric unimodal candidate
/// h-vectors of socle degree 6, only the complete intersections of
/// multidegree (1,1,4,4) and (1,2,3,4) survive. Deterministic; geometric
/// inputs appear as AXIOM steps, everything else is re-checkable
/// arithmetic.
ProofCertificate replay_d5();

/// Replays the bound showing the cubic system through the nodes has a
/// two-dimensional base locus in the (1,1,4,4) case: a three-dimensional
/// component would force 20 + 3 + 2 + 1 = 26 > 24 nodes.
ProofCertificate replay_plane_case();

}  // namespace hilb

#endif
