#pragma once

#include <vector>

#include "qcap/channel.hpp"

namespace qcap {

/// The 24 single-qubit Clifford unitaries (mod global phase), in a fixed
/// deterministic order: BFS closure of {S, H} from the identity, each element
/// phase-canonicalized. Every member conjugates Paulis to signed Paulis.
const std::vector<ComplexMatrix>& clifford_group();

/// (1/24) sum_c c^dag ch(c rho c^dag) c, in Kraus form (24 x |kraus| ops).
/// Choi-equal to depolarizing(1 - entanglement_fidelity(ch)).
KrausChannel twirl(const KrausChannel& ch);

/// <phi+| (I (x) ch)(|phi+><phi+|) |phi+>. Computed both via the trace
/// formula sum_k |Tr A_k / 2|^2 and via the Choi overlap; the two routes
/// must agree to 1e-12.
double entanglement_fidelity(const KrausChannel& ch);

}  // namespace qcap
