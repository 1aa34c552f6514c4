#pragma once

// The cryptomorphism engine: rebuild a phirotope from a verified circuit
// orientation by labeling the basis graph with pivot quotients, propagating
// along a spanning tree, and checking every non-tree edge for cycle
// consistency.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phimat/matroid.hpp"
#include "phimat/phased_sets.hpp"
#include "phimat/phirotope.hpp"

namespace phimat {

// Unit labels on ordered adjacent basis pairs. With B1∪B2 = {x0<...<xd},
// B1∖B2 = {x_i}, B2∖B1 = {x_j} and X the member on the edge circuit,
//   gamma(B1,B2) = (−1)^{i−j} · X(x_i) · X(x_j)^{−1},
// the pivot-rule quotient in sorted-tuple form; gamma(B2,B1) is its inverse.
struct EdgeLabeling {
    BasisGraph graph;
    std::map<std::pair<int, int>, Phase> gamma;  // ordered vertex-index pairs

    Phase label(int from, int to) const;
};

EdgeLabeling label_basis_graph(const Matroid& m, const PhasedSignature& c);

// Thrown when some non-tree edge closes an inconsistent cycle: the input is
// not the circuit set of a complex matroid. Carries the offending cycle.
struct cycle_inconsistency_error : axiom_error {
    cycle_inconsistency_error(std::string what, std::vector<ElemSet> cyc)
        : axiom_error(std::move(what)), cycle(std::move(cyc)) {}
    std::vector<ElemSet> cycle;
};

// Rebuilds a phirotope with value 1 at `basepoint` (default: the
// lexicographically smallest basis). Precondition: verify_circuit_axioms.
Phirotope reconstruct_phirotope(const Matroid& m, const PhasedSignature& c,
                                const std::optional<ElemSet>& basepoint = std::nullopt);

struct RoundtripReport {
    bool gp_ok = false;
    std::string gp_witness;
    bool dual_pair_ok = false;
    std::string dual_pair_witness;
    bool cocircuit_constructions_agree = false;
    bool reconstructed = false;
    std::string reconstruction_error;
    std::optional<Phase> unit;  // reconstructed = unit · input
    bool circuits_match = false;

    bool ok() const {
        return gp_ok && dual_pair_ok && cocircuit_constructions_agree && reconstructed &&
               unit.has_value() && circuits_match;
    }
    std::string str() const;
};

// Full cryptomorphism round trip: circuits and cocircuits, dual-pair axioms,
// both cocircuit constructions, reconstruction and the global unit.
RoundtripReport roundtrip_report(const Phirotope& phi);

}  // namespace phimat
