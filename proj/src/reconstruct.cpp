#include "phimat/reconstruct.hpp"

#include <algorithm>
#include <deque>

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

}  // namespace

Phase EdgeLabeling::label(int from, int to) const {
    auto it = gamma.find({from, to});
    if (it == gamma.end()) throw std::invalid_argument("EdgeLabeling: not an edge");
    return it->second;
}

EdgeLabeling label_basis_graph(const Matroid& m, const PhasedSignature& c) {
    EdgeLabeling out;
    out.graph = m.basis_graph();
    for (const auto& [edge, circuit] : out.graph.edge_circuit) {
        const ElemSet& b1 = out.graph.vertices[edge.first];
        const ElemSet& b2 = out.graph.vertices[edge.second];
        ElemSet uni = set_union(b1, b2);
        int xi = set_difference(b1, b2)[0];
        int xj = set_difference(b2, b1)[0];
        auto pos = [&](int e) {
            return static_cast<int>(std::lower_bound(uni.begin(), uni.end(), e) - uni.begin());
        };
        const PhaseVector& x = c.member_on(circuit);
        Phase g = x.at(xi) * x.at(xj).inv();
        if ((pos(xi) - pos(xj)) % 2 != 0) g = -g;
        out.gamma[edge] = g;
        out.gamma[{edge.second, edge.first}] = g.inv();
    }
    return out;
}

Phirotope reconstruct_phirotope(const Matroid& m, const PhasedSignature& c,
                                const std::optional<ElemSet>& basepoint) {
    EdgeLabeling labels = label_basis_graph(m, c);
    const BasisGraph& g = labels.graph;

    int root = 0;
    if (basepoint) {
        root = g.vertex_index(*basepoint);
        if (root < 0) throw std::invalid_argument("reconstruct: basepoint is not a basis");
    }

    const int nv = static_cast<int>(g.vertices.size());
    std::vector<Phase> value(nv);
    std::vector<int> parent(nv, -1);
    std::vector<bool> seen(nv, false);
    value[root] = Phase::one();
    seen[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.adjacency[u]) {
            if (seen[v]) continue;
            seen[v] = true;
            parent[v] = u;
            value[v] = value[u] * labels.label(u, v);
            queue.push_back(v);
        }
    }
    // The basis graph is connected, so every vertex is reached.

    // Every non-tree edge must close consistently; fundamental cycles generate
    // all cycle products for a unit-valued labeling.
    for (const auto& [edge, circuit] : g.edge_circuit) {
        auto [u, v] = edge;
        if (parent[u] == v || parent[v] == u) continue;
        if (value[v] != value[u] * labels.label(u, v)) {
            std::vector<ElemSet> cycle;
            std::vector<int> up, vp;
            for (int w = u; w >= 0; w = parent[w]) up.push_back(w);
            for (int w = v; w >= 0; w = parent[w]) vp.push_back(w);
            // Trim to the two branches below the lowest common ancestor.
            while (up.size() > 1 && vp.size() > 1 && up[up.size() - 2] == vp[vp.size() - 2]) {
                up.pop_back();
                vp.pop_back();
            }
            for (int w : up) cycle.push_back(g.vertices[w]);
            for (auto it = vp.rbegin() + 1; it != vp.rend(); ++it)
                cycle.push_back(g.vertices[*it]);
            std::string what = "cycle inconsistency (input is not a complex matroid):";
            for (const auto& b : cycle) what += " " + set_str(b);
            throw cycle_inconsistency_error(what, cycle);
        }
    }

    std::map<ElemSet, Phase> values;
    for (int i = 0; i < nv; ++i) values.emplace(g.vertices[i], value[i]);
    return Phirotope(m.ground(), m.rank(), std::move(values));
}

std::string RoundtripReport::str() const {
    auto line = [](const std::string& name, bool ok, const std::string& extra) {
        std::string s = name + ": " + (ok ? "ok" : "FAIL");
        if (!extra.empty()) s += " (" + extra + ")";
        return s + "\n";
    };
    std::string out;
    out += line("grassmann-plucker", gp_ok, gp_witness);
    out += line("dual pair (S1-S4)", dual_pair_ok, dual_pair_witness);
    out += line("cocircuit constructions agree", cocircuit_constructions_agree, "");
    out += line("reconstruction", reconstructed && unit.has_value() && circuits_match,
                reconstruction_error.empty()
                    ? (unit ? "global unit c=" + unit->str() : "no global unit")
                    : reconstruction_error);
    return out;
}

RoundtripReport roundtrip_report(const Phirotope& phi) {
    RoundtripReport rep;
    GpCheck gp = phi.check_gp();
    rep.gp_ok = gp.ok;
    rep.gp_witness = gp.witness();
    if (!rep.gp_ok) return rep;

    Matroid m = phi.underlying_matroid();
    PhasedSignature c = circuits_from_phirotope(phi);
    PhasedSignature d = cocircuits_from_phirotope(phi);
    CheckResult dp = verify_dual_pair(m, c, d);
    rep.dual_pair_ok = dp.ok;
    rep.dual_pair_witness = dp.witness;

    PhasedSignature d2 = cocircuit_signature_from_circuits(m, c);
    PhasedSignature d3 = min_support_orthogonal(c);
    rep.cocircuit_constructions_agree = d == d2 && d == d3;

    try {
        Phirotope rebuilt = reconstruct_phirotope(m, c);
        rep.reconstructed = true;
        rep.unit = rebuilt.unit_multiple_of(phi);
        rep.circuits_match = circuits_from_phirotope(rebuilt) == c;
    } catch (const cycle_inconsistency_error& e) {
        rep.reconstruction_error = e.what();
    }
    return rep;
}

}  // namespace phimat
