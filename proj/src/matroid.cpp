#include "phimat/matroid.hpp"

#include <algorithm>
#include <sstream>

namespace phimat {

namespace {

std::string set_str(const ElemSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::vector<ElemSet> normalize_family(std::vector<ElemSet> fam) {
    for (auto& s : fam) s = sorted(std::move(s));
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    return fam;
}

}  // namespace

int BasisGraph::vertex_index(const ElemSet& basis) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), basis);
    if (it == vertices.end() || *it != basis) return -1;
    return static_cast<int>(it - vertices.begin());
}

Matroid::Matroid(ElemSet ground, std::vector<ElemSet> bases)
    : ground_(sorted(std::move(ground))), bases_(normalize_family(std::move(bases))) {
    if (static_cast<int>(ground_.size()) > kMaxGround)
        throw std::invalid_argument("Matroid: ground set larger than 12 elements");
    if (bases_.empty()) throw axiom_error("matroid: empty basis family");
    for (const auto& b : bases_) {
        if (!is_subset(b, ground_))
            throw axiom_error("matroid: basis " + set_str(b) + " is not inside the ground set");
        if (b.size() != bases_.front().size())
            throw axiom_error("matroid: bases " + set_str(bases_.front()) + " and " +
                              set_str(b) + " have different sizes");
    }
    for (const auto& b1 : bases_)
        for (const auto& b2 : bases_)
            for (int e : set_difference(b1, b2)) {
                bool ok = false;
                for (int f : set_difference(b2, b1))
                    if (is_basis(set_with(set_without(b1, e), f))) {
                        ok = true;
                        break;
                    }
                if (!ok)
                    throw axiom_error("basis exchange fails for B1=" + set_str(b1) +
                                      ", B2=" + set_str(b2) + ", e=" + std::to_string(e));
            }
    compute_circuits();
}

void Matroid::compute_circuits() {
    // Minimal sets contained in no basis, by increasing cardinality.
    circuits_.clear();
    const int n = static_cast<int>(ground_.size());
    for (int k = 1; k <= n; ++k) {
        for_each_subset(ground_, k, [&](const ElemSet& s) {
            for (const auto& c : circuits_)
                if (is_subset(c, s)) return true;
            bool independent = false;
            for (const auto& b : bases_)
                if (is_subset(s, b)) {
                    independent = true;
                    break;
                }
            if (!independent) circuits_.push_back(s);
            return true;
        });
    }
    std::sort(circuits_.begin(), circuits_.end());
}

Matroid Matroid::from_circuits(ElemSet ground, std::vector<ElemSet> circuits) {
    ground = sorted(std::move(ground));
    circuits = normalize_family(std::move(circuits));
    for (const auto& c : circuits) {
        if (c.empty()) throw axiom_error("circuit family contains the empty set");
        if (!is_subset(c, ground))
            throw axiom_error("circuit " + set_str(c) + " is not inside the ground set");
    }
    for (const auto& c1 : circuits)
        for (const auto& c2 : circuits) {
            if (c1 == c2) continue;
            if (is_subset(c1, c2))
                throw axiom_error("circuit incomparability fails: " + set_str(c1) +
                                  " inside " + set_str(c2));
        }
    auto contains_circuit_within = [&](const ElemSet& s) {
        for (const auto& c : circuits)
            if (is_subset(c, s)) return true;
        return false;
    };
    for (const auto& c1 : circuits)
        for (const auto& c2 : circuits) {
            if (c1 >= c2) continue;
            for (int e : set_intersection(c1, c2)) {
                ElemSet u = set_without(set_union(c1, c2), e);
                if (!contains_circuit_within(u))
                    throw axiom_error("circuit elimination fails for C1=" + set_str(c1) +
                                      ", C2=" + set_str(c2) + ", e=" + std::to_string(e));
            }
        }
    // Bases: maximal circuit-free subsets. Grow greedily from every subset is
    // wasteful; instead collect all independent sets of maximum size.
    std::vector<ElemSet> best;
    const int n = static_cast<int>(ground.size());
    for (int k = n; k >= 0; --k) {
        for_each_subset(ground, k, [&](const ElemSet& s) {
            if (!contains_circuit_within(s)) best.push_back(s);
            return true;
        });
        if (!best.empty()) break;
    }
    Matroid m(ground, best);
    if (m.circuits_ != circuits)
        throw std::logic_error("matroid reconstruction from circuits is inconsistent");
    return m;
}

bool Matroid::is_basis(const ElemSet& subset) const {
    return std::binary_search(bases_.begin(), bases_.end(), subset);
}

bool Matroid::is_circuit(const ElemSet& subset) const {
    return std::binary_search(circuits_.begin(), circuits_.end(), subset);
}

int Matroid::rank(const ElemSet& subset) const {
    std::size_t best = 0;
    for (const auto& b : bases_) best = std::max(best, set_intersection(subset, b).size());
    return static_cast<int>(best);
}

ElemSet Matroid::closure(const ElemSet& subset) const {
    int r = rank(subset);
    ElemSet out;
    for (int e : ground_)
        if (set_contains(subset, e) || rank(set_with(subset, e)) == r) out.push_back(e);
    return out;
}

bool Matroid::is_independent(const ElemSet& subset) const {
    return rank(subset) == static_cast<int>(subset.size());
}

ElemSet Matroid::basic_circuit(const ElemSet& basis, int e) const {
    if (set_contains(basis, e))
        throw std::invalid_argument("basic_circuit: element already in the basis");
    if (!is_basis(basis)) throw std::invalid_argument("basic_circuit: not a basis");
    ElemSet within = set_with(basis, e);
    for (const auto& c : circuits_)
        if (is_subset(c, within)) return c;
    throw std::logic_error("basic_circuit: no circuit found");  // cannot happen
}

Matroid Matroid::dual() const {
    std::vector<ElemSet> cobases;
    cobases.reserve(bases_.size());
    for (const auto& b : bases_) cobases.push_back(set_difference(ground_, b));
    Matroid m;
    m.ground_ = ground_;
    m.bases_ = normalize_family(std::move(cobases));
    m.compute_circuits();  // exchange holds for complements automatically
    return m;
}

Matroid Matroid::deletion(const ElemSet& a) const {
    if (!is_subset(a, ground_)) throw std::invalid_argument("deletion: not a subset");
    std::vector<ElemSet> trimmed;
    std::size_t best = 0;
    for (const auto& b : bases_) {
        ElemSet t = set_difference(b, a);
        best = std::max(best, t.size());
        trimmed.push_back(std::move(t));
    }
    std::vector<ElemSet> kept;
    for (auto& t : trimmed)
        if (t.size() == best) kept.push_back(std::move(t));
    Matroid m;
    m.ground_ = set_difference(ground_, a);
    m.bases_ = normalize_family(std::move(kept));
    m.compute_circuits();
    return m;
}

Matroid Matroid::contraction(const ElemSet& a) const {
    if (!is_subset(a, ground_)) throw std::invalid_argument("contraction: not a subset");
    ElemSet keep = lex_maximal_independent_subset(a);
    std::vector<ElemSet> newbases;
    ElemSet rest = set_difference(ground_, a);
    for (const auto& b : bases_)
        if (is_subset(keep, b) && is_subset(set_difference(b, keep), rest))
            newbases.push_back(set_difference(b, keep));
    Matroid m;
    m.ground_ = rest;
    m.bases_ = normalize_family(std::move(newbases));
    m.compute_circuits();
    return m;
}

ElemSet Matroid::lex_maximal_independent_subset(const ElemSet& within) const {
    ElemSet chosen;
    for (int e : within) {
        ElemSet trial = set_with(chosen, e);
        if (is_independent(trial)) chosen = std::move(trial);
    }
    return chosen;
}

bool Matroid::is_modular_pair_circuits(const ElemSet& c1, const ElemSet& c2) const {
    if (!is_circuit(c1) || !is_circuit(c2))
        throw std::invalid_argument("is_modular_pair_circuits: inputs must be circuits");
    if (c1 == c2) throw std::invalid_argument("is_modular_pair_circuits: circuits must differ");
    ElemSet u = set_union(c1, c2);
    return static_cast<int>(u.size()) - rank(u) == 2;
}

BasisGraph Matroid::basis_graph() const {
    BasisGraph g;
    g.vertices = bases_;
    g.adjacency.assign(bases_.size(), {});
    for (std::size_t i = 0; i < bases_.size(); ++i)
        for (std::size_t j = i + 1; j < bases_.size(); ++j) {
            ElemSet diff = set_difference(bases_[i], bases_[j]);
            if (diff.size() != 1) continue;
            auto edge = std::make_pair(static_cast<int>(i), static_cast<int>(j));
            g.edges.push_back(edge);
            int f = set_difference(bases_[j], bases_[i])[0];
            g.edge_circuit[edge] = basic_circuit(bases_[i], f);
            g.adjacency[i].push_back(static_cast<int>(j));
            g.adjacency[j].push_back(static_cast<int>(i));
        }
    return g;
}

Matroid Matroid::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ElemSet ground;
    bool have_ground = false;
    std::vector<ElemSet> bases;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        ElemSet elems;
        int e;
        while (ls >> e) elems.push_back(e);
        if (key == "ground:") {
            ground = sorted(elems);
            have_ground = true;
        } else if (key == "basis:") {
            bases.push_back(sorted(elems));
        } else {
            throw parse_error("matroid file: unexpected line '" + line + "'");
        }
    }
    if (!have_ground) throw parse_error("matroid file: missing ground line");
    return Matroid(ground, bases);
}

std::string Matroid::str() const {
    std::string out = "ground:";
    for (int e : ground_) out += " " + std::to_string(e);
    out += "\n";
    for (const auto& b : bases_) {
        out += "basis:";
        for (int e : b) out += " " + std::to_string(e);
        out += "\n";
    }
    return out;
}

}  // namespace phimat
