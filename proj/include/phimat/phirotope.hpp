#pragma once

// Phirotopes: alternating maps from ordered d-tuples of the ground set to
// S^1 ∪ {0}, stored on sorted d-subsets. Construction from exact matrices,
// the phase Grassmann–Plücker check, duality, minors, cross-ratios.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phimat/gauss.hpp"
#include "phimat/linalg.hpp"
#include "phimat/matroid.hpp"

namespace phimat {

struct GpCheck {
    bool ok = true;
    ElemSet x, y;  // witnessing tuples on failure
    std::string witness() const;
};

class Phirotope {
public:
    // `values` on sorted rank-subsets; zero entries may be omitted.
    // Validates shape and nonzero-ness (axiom φ1); the support's exchange
    // property is validated lazily by underlying_matroid().
    Phirotope(ElemSet ground, int rank, std::map<ElemSet, Phase> values);

    static Phirotope from_matrix(const GaussMatrix& m);  // throws on row-deficient input

    const ElemSet& ground() const { return ground_; }
    int rank() const { return rank_; }
    const std::map<ElemSet, Phase>& values() const { return values_; }
    std::vector<ElemSet> support() const;

    Phase value(const ElemSet& sorted_subset) const;
    // Alternating extension: repeated entries give 0, permutations give signs.
    Phase eval(const std::vector<int>& tuple) const;

    Matroid underlying_matroid() const;

    // Grassmann–Plücker condition (φ3) over all sorted (d+1)- and
    // (d−1)-subsets; returns the witnessing pair of tuples on failure.
    GpCheck check_gp() const;

    Phirotope dual() const;
    Phirotope contraction(const ElemSet& a) const;
    Phirotope deletion(const ElemSet& a) const;

    // Generalized cross ratio of a, b and the (d−1)-tuples c, d; nullopt when
    // the denominator vanishes.
    std::optional<Phase> cross_ratio(int a, int b, const std::vector<int>& c,
                                     const std::vector<int>& d) const;

    // Column rescaling by units: every value gains Π_{e in subset} scalars(e).
    Phirotope reorient(const std::map<int, Phase>& scalars) const;

    // Brute-force search for a reorientation making all values lie in one
    // antipodal pair {μ,−μ}; candidate scalars are the phases appearing in the
    // instance, their inverses and negations. Returns a witness if found.
    std::optional<std::map<int, Phase>> reorientation_to_real() const;

    // The unit c with *this = c·other, if one exists.
    std::optional<Phase> unit_multiple_of(const Phirotope& other) const;

    friend bool operator==(const Phirotope& x, const Phirotope& y) {
        return x.ground_ == y.ground_ && x.rank_ == y.rank_ && x.values_ == y.values_;
    }

    // File format: header `phirotope rank=d ground=n`, then one line per
    // sorted d-subset `i1 i2 ... id : <phase>`; omitted subsets are zero.
    static Phirotope parse(const std::string& text);
    std::string str() const;

private:
    ElemSet ground_;
    int rank_;
    std::map<ElemSet, Phase> values_;  // nonzero entries only
};

}  // namespace phimat
