#pragma once

// Phased circuit and cocircuit signatures: extraction from phirotopes by the
// pivot rule, axiom verification (C0/C1/SE/ME and S1–S4), orthogonality,
// minors, the circuit→cocircuit construction, and weak maps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phimat/gauss.hpp"
#include "phimat/matroid.hpp"
#include "phimat/phirotope.hpp"

namespace phimat {

enum class SignatureKind { circuits, cocircuits };

// A set of phased circuits (or cocircuits) stored as canonical orbit
// representatives: each member is scaled so its smallest support element has
// phase 1. Two members never share a support.
class PhasedSignature {
public:
    PhasedSignature(ElemSet ground, SignatureKind kind, const std::vector<PhaseVector>& raw);

    const ElemSet& ground() const { return ground_; }
    SignatureKind kind() const { return kind_; }
    const std::map<ElemSet, PhaseVector>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    std::vector<ElemSet> supports() const;
    bool has_member_on(const ElemSet& support) const { return members_.count(support) > 0; }
    const PhaseVector& member_on(const ElemSet& support) const;

    friend bool operator==(const PhasedSignature& x, const PhasedSignature& y) {
        return x.ground_ == y.ground_ && x.members_ == y.members_;
    }

    // File format: optional `ground: ...` header, then one canonical member
    // per line as `e1:<phase>,e2:<phase>,...`.
    static PhasedSignature parse(const std::string& text, SignatureKind kind);
    std::string str() const;

private:
    ElemSet ground_;
    SignatureKind kind_;
    std::map<ElemSet, PhaseVector> members_;
};

struct CheckResult {
    bool ok = true;
    std::string witness;
};

// One canonical member per circuit of the underlying matroid, phases from the
// pivot rule X(f)/X(e) = −φ(e,x2..xd)/φ(f,x2..xd) with the lexicographically
// first completion. Precondition: φ passes check_gp.
PhasedSignature circuits_from_phirotope(const Phirotope& phi);

// Circuits of the dual phirotope.
PhasedSignature cocircuits_from_phirotope(const Phirotope& phi);

CheckResult check_orthogonality(const PhasedSignature& c, const PhasedSignature& d);

// Axioms (S1)–(S4) for a dual pair on M.
CheckResult verify_dual_pair(const Matroid& m, const PhasedSignature& c,
                             const PhasedSignature& d);

// Axioms (C0), (C1) and Modular Elimination, with the special-elimination
// property (SE) verified alongside as a derived fact.
CheckResult verify_circuit_axioms(const Matroid& m, const PhasedSignature& c);

// The unique cocircuit signature orthogonal to c, built by reading ratios off
// basic circuits: W(e)/W(f) = −X(e)/X(f).
PhasedSignature cocircuit_signature_from_circuits(const Matroid& m, const PhasedSignature& c);

// Same signature obtained from the orthogonality characterization: supports
// are the minimal nonempty sets meeting every circuit support in ≠ 1
// elements. Asserts agreement with cocircuit_signature_from_circuits.
PhasedSignature min_support_orthogonal(const PhasedSignature& c);

PhasedSignature delete_signature(const PhasedSignature& c, const ElemSet& a);
PhasedSignature contract_signature(const PhasedSignature& c, const ElemSet& a);

// Weak map: every member of c1 dominates some unit multiple of a member of c2.
bool weak_map_circuits(const PhasedSignature& c1, const PhasedSignature& c2);

// Dominance of phirotopes: the unit c with phi1 ≥ c·phi2, if one exists.
// Requires equal ground sets and equal ranks.
std::optional<Phase> weak_map_phirotopes(const Phirotope& phi1, const Phirotope& phi2);

// Exhaustive checks of the triangle and square basis-exchange relations.
CheckResult check_triangle_relations(const Matroid& m, const PhasedSignature& c);
CheckResult check_square_relations(const Matroid& m, const PhasedSignature& c);

}  // namespace phimat
