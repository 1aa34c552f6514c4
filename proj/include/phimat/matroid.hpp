#pragma once

// Unphased matroid kernel, stored by explicit basis lists. Everything derived
// (circuits, cocircuits, basis graph) is computed exhaustively; ground sets
// are capped at 12 elements, since exhaustive axiom verification is the point.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "phimat/errors.hpp"
#include "phimat/sets.hpp"

namespace phimat {

struct BasisGraph {
    std::vector<ElemSet> vertices;                    // bases, sorted
    std::vector<std::pair<int, int>> edges;           // index pairs, i < j
    std::map<std::pair<int, int>, ElemSet> edge_circuit;
    std::vector<std::vector<int>> adjacency;

    int vertex_index(const ElemSet& basis) const;
};

class Matroid {
public:
    static constexpr int kMaxGround = 12;

    // Validates the Basis Exchange Axiom exhaustively; the thrown axiom_error
    // names a witnessing triple (B1, B2, e).
    Matroid(ElemSet ground, std::vector<ElemSet> bases);

    // Validates incomparability and elimination for the circuit family, then
    // builds bases as the maximal circuit-free sets.
    static Matroid from_circuits(ElemSet ground, std::vector<ElemSet> circuits);

    const ElemSet& ground() const { return ground_; }
    int rank() const { return bases_.empty() ? 0 : static_cast<int>(bases_.front().size()); }
    const std::vector<ElemSet>& bases() const { return bases_; }
    const std::vector<ElemSet>& circuits() const { return circuits_; }
    std::vector<ElemSet> cocircuits() const { return dual().circuits(); }

    int rank(const ElemSet& subset) const;
    ElemSet closure(const ElemSet& subset) const;
    bool is_independent(const ElemSet& subset) const;
    bool is_basis(const ElemSet& subset) const;
    bool is_circuit(const ElemSet& subset) const;

    // The unique circuit inside B ∪ {e}, for a basis B and e ∉ B.
    ElemSet basic_circuit(const ElemSet& basis, int e) const;

    Matroid dual() const;
    Matroid deletion(const ElemSet& a) const;
    Matroid contraction(const ElemSet& a) const;

    // Nullity-two criterion: |C1 ∪ C2| − rank(C1 ∪ C2) = 2.
    bool is_modular_pair_circuits(const ElemSet& c1, const ElemSet& c2) const;

    BasisGraph basis_graph() const;

    // Greedy over ascending labels; restricted to `within`.
    ElemSet lex_maximal_independent_subset(const ElemSet& within) const;

    friend bool operator==(const Matroid& x, const Matroid& y) {
        return x.ground_ == y.ground_ && x.bases_ == y.bases_;
    }

    // Text format: a `ground: 1 2 3` line followed by `basis: 1 2` lines.
    static Matroid parse(const std::string& text);
    std::string str() const;

private:
    Matroid() = default;
    void compute_circuits();

    ElemSet ground_;
    std::vector<ElemSet> bases_;    // sorted family of sorted sets
    std::vector<ElemSet> circuits_;
};

}  // namespace phimat
