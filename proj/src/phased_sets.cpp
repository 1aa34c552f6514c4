#include "phimat/phased_sets.hpp"

#include <algorithm>
#include <sstream>

#include "phimat/linalg.hpp"

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

std::string member_str(const PhaseVector& x) { return "(" + x.str() + ")"; }

}  // namespace

PhasedSignature::PhasedSignature(ElemSet ground, SignatureKind kind,
                                 const std::vector<PhaseVector>& raw)
    : ground_(sorted(std::move(ground))), kind_(kind) {
    for (const PhaseVector& v : raw) {
        if (v.ground != ground_)
            throw std::invalid_argument("PhasedSignature: member off the ground set");
        if (v.is_zero()) throw axiom_error("phased signature contains the zero vector");
        PhaseVector canon = v.canonical();
        auto [it, inserted] = members_.emplace(canon.support(), canon);
        if (!inserted && !(it->second == canon))
            throw axiom_error("(C1) fails: two members on support " +
                              set_str(canon.support()) + " are not unit multiples");
    }
}

std::vector<ElemSet> PhasedSignature::supports() const {
    std::vector<ElemSet> out;
    out.reserve(members_.size());
    for (const auto& [s, v] : members_) out.push_back(s);
    return out;
}

const PhaseVector& PhasedSignature::member_on(const ElemSet& support) const {
    auto it = members_.find(support);
    if (it == members_.end())
        throw std::invalid_argument("no member on support " + set_str(support));
    return it->second;
}

PhasedSignature PhasedSignature::parse(const std::string& text, SignatureKind kind) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> member_lines;
    ElemSet ground;
    bool have_ground = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string trimmed;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed.push_back(ch);
        if (trimmed.empty()) continue;
        if (line.find("ground:") != std::string::npos) {
            std::istringstream ls(line.substr(line.find("ground:") + 7));
            int e;
            while (ls >> e) ground.push_back(e);
            have_ground = true;
            continue;
        }
        member_lines.push_back(trimmed);
    }
    std::vector<PhaseVector> raw;
    if (!have_ground) {
        // Infer the ground set from the supports.
        ElemSet all;
        for (const auto& l : member_lines) {
            std::istringstream ls(l);
            std::string tok;
            while (std::getline(ls, tok, ',')) {
                auto colon = tok.find(':');
                if (colon != std::string::npos) all.push_back(std::stoi(tok.substr(0, colon)));
            }
        }
        ground = sorted(all);
    }
    ground = sorted(ground);
    for (const auto& l : member_lines) raw.push_back(PhaseVector::parse_line(l, ground));
    return PhasedSignature(ground, kind, raw);
}

std::string PhasedSignature::str() const {
    std::string out = "ground:";
    for (int e : ground_) out += " " + std::to_string(e);
    out += "\n";
    for (const auto& [s, v] : members_) out += v.str() + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Extraction from phirotopes

namespace {

// Lexicographically first completion of (circuit ∖ first element) to a basis.
ElemSet lex_completion(const Matroid& m, const ElemSet& circuit) {
    ElemSet base = set_without(circuit, circuit[0]);
    ElemSet completion;
    int r = m.rank(base);
    for (int e : m.ground()) {
        if (r == m.rank()) break;
        if (set_contains(circuit, e)) continue;
        ElemSet trial = set_with(set_union(base, completion), e);
        int tr = m.rank(trial);
        if (tr > r) {
            completion = set_with(completion, e);
            r = tr;
        }
    }
    return completion;
}

PhaseVector member_from_pivot(const Phirotope& phi, const Matroid& m, const ElemSet& circuit) {
    std::map<int, Phase> entries;
    entries[circuit[0]] = Phase::one();
    if (circuit.size() > 1) {
        ElemSet completion = lex_completion(m, circuit);
        for (std::size_t i = 1; i < circuit.size(); ++i) {
            std::vector<int> rest;
            for (std::size_t j = 0; j < circuit.size(); ++j)
                if (j != 0 && j != i) rest.push_back(circuit[j]);
            rest.insert(rest.end(), completion.begin(), completion.end());
            std::vector<int> top{circuit[0]};
            top.insert(top.end(), rest.begin(), rest.end());
            std::vector<int> bot{circuit[i]};
            bot.insert(bot.end(), rest.begin(), rest.end());
            // X(x_i)/X(x_0) = −φ(x_0,rest)/φ(x_i,rest)
            entries[circuit[i]] = -(phi.eval(top) * phi.eval(bot).inv());
        }
    }
    return PhaseVector(phi.ground(), std::move(entries));
}

}  // namespace

PhasedSignature circuits_from_phirotope(const Phirotope& phi) {
    Matroid m = phi.underlying_matroid();
    std::vector<PhaseVector> raw;
    for (const ElemSet& c : m.circuits()) raw.push_back(member_from_pivot(phi, m, c));
    return PhasedSignature(phi.ground(), SignatureKind::circuits, raw);
}

PhasedSignature cocircuits_from_phirotope(const Phirotope& phi) {
    PhasedSignature of_dual = circuits_from_phirotope(phi.dual());
    std::vector<PhaseVector> raw;
    for (const auto& [s, v] : of_dual.members()) raw.push_back(v);
    return PhasedSignature(phi.ground(), SignatureKind::cocircuits, raw);
}

// ---------------------------------------------------------------------------
// Orthogonality and dual-pair axioms

CheckResult check_orthogonality(const PhasedSignature& c, const PhasedSignature& d) {
    if (c.ground() != d.ground())
        throw std::invalid_argument("check_orthogonality: ground sets differ");
    for (const auto& [sx, x] : c.members())
        for (const auto& [sy, y] : d.members())
            if (!orthogonal(x, y))
                return {false, "(S4) fails: " + member_str(x) + " not orthogonal to " +
                                   member_str(y)};
    return {};
}

CheckResult verify_dual_pair(const Matroid& m, const PhasedSignature& c,
                             const PhasedSignature& d) {
    // (S1),(S1*),(S2),(S2*) are structural in the canonical representation;
    // re-assert cheaply.
    for (const auto* sig : {&c, &d})
        for (const auto& [s, v] : sig->members())
            if (!(v.canonical() == v))
                return {false, "(S1/S2) representation breach on " + set_str(s)};
    if (c.supports() != m.circuits())
        return {false, "(S3) fails: circuit supports do not match the matroid"};
    if (d.supports() != m.cocircuits())
        return {false, "(S3) fails: cocircuit supports do not match the matroid"};
    CheckResult orth = check_orthogonality(c, d);
    if (!orth.ok) return orth;
    return {};
}

// ---------------------------------------------------------------------------
// Modular elimination

namespace {

// Is z strictly inside pconv{mu, nu} (all nonzero)? Singleton and antipodal
// cases are discrete; otherwise pconv is the open minor arc.
bool in_pconv_pair(const Phase& z, const Phase& mu, const Phase& nu) {
    if (mu == nu) return z == mu;
    if (mu == -nu) return z == mu || z == nu;
    Int orient = cross(mu, nu);
    const Phase& lo = orient > 0 ? mu : nu;
    const Phase& hi = orient > 0 ? nu : mu;
    return cross(lo, z) > 0 && cross(z, hi) > 0;
}

// Can some unit multiple of z0 satisfy, at every g in supp(z0), the modular
// elimination value condition against x and y?
bool rescalable_to_fit(const PhaseVector& z0, const PhaseVector& x, const PhaseVector& y) {
    std::vector<Phase> pins;                         // β·z0(g) must equal value
    std::vector<std::pair<Phase, Phase>> choices;    // β·z0(g) ∈ {first, second}
    std::vector<std::pair<Phase, Phase>> arcs;       // β·z0(g) in open arc
    std::vector<Phase> pin_beta, choice_beta_a, choice_beta_b;
    std::vector<Phase> arc_w;

    for (const auto& [g, zg] : z0.entries) {
        Phase xg = x.at(g), yg = y.at(g);
        if (xg.is_zero() && yg.is_zero())
            return false;  // support escapes the union; caller prevents this
        if (xg.is_zero() || yg.is_zero()) {
            Phase target = xg.is_zero() ? yg : xg;
            pins.push_back(target);
            pin_beta.push_back(target * zg.inv());
        } else if (xg == yg) {
            pins.push_back(xg);
            pin_beta.push_back(xg * zg.inv());
        } else if (xg == -yg) {
            choices.emplace_back(xg, yg);
            choice_beta_a.push_back(xg * zg.inv());
            choice_beta_b.push_back(yg * zg.inv());
        } else {
            arcs.emplace_back(xg, yg);
            arc_w.push_back(zg);
        }
    }

    auto satisfies_all = [&](const Phase& beta) {
        std::size_t pi = 0, ci = 0, ai = 0;
        for (const auto& [g, zg] : z0.entries) {
            Phase v = beta * zg;
            Phase xg = x.at(g), yg = y.at(g);
            if (xg.is_zero() || yg.is_zero() || xg == yg) {
                if (v != pins[pi++]) return false;
            } else if (xg == -yg) {
                auto [p, q] = choices[ci++];
                if (v != p && v != q) return false;
            } else {
                auto [p, q] = arcs[ai++];
                if (!in_pconv_pair(v, p, q)) return false;
            }
        }
        return true;
    };

    if (!pin_beta.empty()) return satisfies_all(pin_beta.front());
    if (!choice_beta_a.empty())
        return satisfies_all(choice_beta_a.front()) || satisfies_all(choice_beta_b.front());
    if (arcs.empty()) return true;  // no constraints at all

    // Only open-arc constraints: β exists iff the rotated open cones have a
    // common ray. Decide exactly with Fourier–Motzkin in the plane.
    LinSystem sys;
    sys.nvars = 2;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        auto [mu, nu] = arcs[i];
        const Phase& w = arc_w[i];
        Phase lo = cross(mu, nu) > 0 ? mu : nu;
        Phase hi = cross(mu, nu) > 0 ? nu : mu;
        // β·w in (lo,hi): cross(lo, β·w) > 0 and cross(β·w, hi) > 0, linear in β.
        auto& f1 = sys.add_strict();
        f1[0] = Rat(lo.a() * w.b() - lo.b() * w.a());   // coeff of Re β
        f1[1] = Rat(lo.a() * w.a() + lo.b() * w.b());   // coeff of Im β
        auto& f2 = sys.add_strict();
        f2[0] = Rat(hi.b() * w.a() - hi.a() * w.b());
        f2[1] = Rat(-(hi.a() * w.a() + hi.b() * w.b()));
    }
    return fm_feasible(sys);
}

struct MePair {
    const PhaseVector* x;
    PhaseVector y;  // rescaled
    int e;
};

}  // namespace

CheckResult verify_circuit_axioms(const Matroid& m, const PhasedSignature& c) {
    // (C0) is the orbit convention; (C1) holds by canonical storage. Assert
    // representation and the support precondition.
    for (const auto& [s, v] : c.members())
        if (!(v.canonical() == v)) return {false, "(C0/C1) representation breach on " + set_str(s)};
    if (c.supports() != m.circuits())
        return {false, "support family does not match the circuits of the matroid"};

    std::vector<const PhaseVector*> members;
    for (const auto& [s, v] : c.members()) members.push_back(&v);

    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const PhaseVector& x = *members[i];
            const PhaseVector& y0 = *members[j];
            ElemSet sx = x.support(), sy = y0.support();
            ElemSet common = set_intersection(sx, sy);
            if (common.empty()) continue;
            ElemSet uni = set_union(sx, sy);
            bool modular = m.is_modular_pair_circuits(sx, sy);

            for (int e : common) {
                // Rescale y so that x(e) = −y(e) ≠ 0.
                PhaseVector y = y0.scaled(-(x.at(e) * y0.at(e).inv()));
                for (int f : uni) {
                    if (f == e) continue;
                    bool qualifies_me = modular && x.at(f) != -y.at(f);
                    bool qualifies_se = y.at(f) != x.at(f);
                    if (!qualifies_me && !qualifies_se) continue;

                    bool se_found = false, me_found = false;
                    for (const auto& [sz, z0] : c.members()) {
                        if (!set_contains(sz, f) || set_contains(sz, e) || !is_subset(sz, uni))
                            continue;
                        se_found = true;
                        if (qualifies_me && !me_found && rescalable_to_fit(z0, x, y))
                            me_found = true;
                        if (se_found && (me_found || !qualifies_me)) break;
                    }
                    if (qualifies_me && !me_found)
                        return {false, "(ME) fails for X=" + member_str(x) +
                                           ", Y=" + member_str(y) + ", e=" + std::to_string(e) +
                                           ", f=" + std::to_string(f)};
                    if (qualifies_se && !se_found)
                        return {false, "(SE) fails for X=" + member_str(x) +
                                           ", Y=" + member_str(y) + ", e=" + std::to_string(e) +
                                           ", f=" + std::to_string(f)};
                }
            }
        }
    return {};
}

// ---------------------------------------------------------------------------
// Cocircuits from circuits

namespace {

PhaseVector phase_cocircuit(const Matroid& m, const PhasedSignature& c, const ElemSet& d) {
    ElemSet hyperplane = set_difference(m.ground(), d);
    ElemSet a = m.lex_maximal_independent_subset(hyperplane);
    const int f = d[0];
    std::map<int, Phase> entries;
    entries[f] = Phase::one();
    ElemSet basis = set_with(a, f);
    for (std::size_t i = 1; i < d.size(); ++i) {
        int e = d[i];
        ElemSet circ = m.basic_circuit(basis, e);
        const PhaseVector& x = c.member_on(circ);
        // W(e)/W(f) = −X(e)/X(f)
        entries[e] = -(x.at(e) * x.at(f).inv());
    }
    return PhaseVector(m.ground(), std::move(entries));
}

}  // namespace

PhasedSignature cocircuit_signature_from_circuits(const Matroid& m, const PhasedSignature& c) {
    std::vector<PhaseVector> raw;
    for (const ElemSet& d : m.cocircuits()) raw.push_back(phase_cocircuit(m, c, d));
    return PhasedSignature(m.ground(), SignatureKind::cocircuits, raw);
}

PhasedSignature min_support_orthogonal(const PhasedSignature& c) {
    Matroid m = Matroid::from_circuits(c.ground(), c.supports());
    // Minimal nonempty sets meeting every circuit support in ≠ 1 elements.
    std::vector<ElemSet> found;
    const int n = static_cast<int>(c.ground().size());
    for (int k = 1; k <= n; ++k) {
        for_each_subset(c.ground(), k, [&](const ElemSet& s) {
            for (const auto& prev : found)
                if (is_subset(prev, s)) return true;
            for (const auto& [supp, v] : c.members())
                if (set_intersection(s, supp).size() == 1) return true;
            found.push_back(s);
            return true;
        });
    }
    std::sort(found.begin(), found.end());
    std::vector<PhaseVector> raw;
    for (const ElemSet& d : found) raw.push_back(phase_cocircuit(m, c, d));
    PhasedSignature result(c.ground(), SignatureKind::cocircuits, raw);
    if (!(result == cocircuit_signature_from_circuits(m, c)))
        throw std::logic_error(
            "min_support_orthogonal disagrees with the basic-circuit construction");
    return result;
}

// ---------------------------------------------------------------------------
// Minors of signatures

PhasedSignature delete_signature(const PhasedSignature& c, const ElemSet& a) {
    ElemSet rest = set_difference(c.ground(), a);
    std::vector<PhaseVector> raw;
    for (const auto& [s, v] : c.members())
        if (set_intersection(s, a).empty()) raw.push_back(v.restricted_to(rest));
    return PhasedSignature(rest, c.kind(), raw);
}

PhasedSignature contract_signature(const PhasedSignature& c, const ElemSet& a) {
    ElemSet rest = set_difference(c.ground(), a);
    std::vector<PhaseVector> restrictions;
    for (const auto& [s, v] : c.members()) {
        PhaseVector r = v.restricted_to(rest);
        if (!r.is_zero()) restrictions.push_back(std::move(r));
    }
    std::vector<PhaseVector> minimal;
    for (const PhaseVector& x : restrictions) {
        bool is_min = true;
        for (const PhaseVector& y : restrictions)
            if (y.support() != x.support() && is_subset(y.support(), x.support())) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(x);
    }
    return PhasedSignature(rest, c.kind(), minimal);
}

// ---------------------------------------------------------------------------
// Weak maps

bool weak_map_circuits(const PhasedSignature& c1, const PhasedSignature& c2) {
    if (c1.ground() != c2.ground())
        throw std::invalid_argument("weak_map_circuits: ground sets differ");
    for (const auto& [sx, x] : c1.members()) {
        bool dominated = false;
        for (const auto& [sy, y] : c2.members()) {
            if (!is_subset(sy, sx)) continue;
            Phase alpha = x.at(sy[0]) * y.at(sy[0]).inv();
            if (y.scaled(alpha).leq(x)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;
    }
    return true;
}

std::optional<Phase> weak_map_phirotopes(const Phirotope& phi1, const Phirotope& phi2) {
    if (phi1.ground() != phi2.ground())
        throw std::invalid_argument("weak_map_phirotopes: ground sets differ");
    if (phi1.rank() != phi2.rank())
        throw std::invalid_argument("weak_map_phirotopes: ranks differ");
    if (phi2.values().empty()) return Phase::one();
    const auto& [b0, v0] = *phi2.values().begin();
    Phase p0 = phi1.value(b0);
    if (p0.is_zero()) return std::nullopt;
    Phase c = p0 * v0.inv();
    for (const auto& [b, v] : phi2.values())
        if (phi1.value(b) != c * v) return std::nullopt;
    return c;
}

// ---------------------------------------------------------------------------
// Triangle and square relations

CheckResult check_triangle_relations(const Matroid& m, const PhasedSignature& c) {
    if (m.rank() < 1) return {};
    const ElemSet& ground = m.ground();
    CheckResult result;
    for_each_subset(ground, m.rank() - 1, [&](const ElemSet& a) {
        if (!m.is_independent(a)) return true;
        ElemSet outside = set_difference(ground, a);
        std::vector<int> ext;
        for (int e : outside)
            if (m.is_basis(set_with(a, e))) ext.push_back(e);
        for (int e : ext)
            for (int f : ext)
                for (int g : ext) {
                    if (e == f || f == g || e == g) continue;
                    auto ratio = [&](int u, int v) {
                        const PhaseVector& x = c.member_on(m.basic_circuit(set_with(a, u), v));
                        return x.at(u) * x.at(v).inv();
                    };
                    if (ratio(e, f) * ratio(f, g) != -ratio(e, g)) {
                        result = {false, "triangle relation fails at A=" + set_str(a) +
                                             " e,f,g=" + std::to_string(e) + "," +
                                             std::to_string(f) + "," + std::to_string(g)};
                        return false;
                    }
                }
        return true;
    });
    return result;
}

CheckResult check_square_relations(const Matroid& m, const PhasedSignature& c) {
    if (m.rank() < 2) return {};
    const ElemSet& ground = m.ground();
    CheckResult result;
    for_each_subset(ground, m.rank() - 2, [&](const ElemSet& a) {
        if (!m.is_independent(a)) return true;
        ElemSet outside = set_difference(ground, a);
        for (int e : outside)
            for (int f : outside)
                for (int g : outside)
                    for (int h : outside) {
                        if (e == f || e == g || e == h || f == g || f == h || g == h) continue;
                        ElemSet b1 = set_with(set_with(a, f), g);
                        ElemSet b2 = set_with(set_with(a, e), g);
                        ElemSet b1p = set_with(set_with(a, f), h);
                        ElemSet b2p = set_with(set_with(a, e), h);
                        if (!m.is_basis(b1) || !m.is_basis(b2) || !m.is_basis(b1p) ||
                            !m.is_basis(b2p))
                            continue;
                        ElemSet c1 = m.basic_circuit(b1, e);
                        ElemSet c1p = m.basic_circuit(b1p, e);
                        ElemSet c2 = m.basic_circuit(b1, h);
                        ElemSet c2p = m.basic_circuit(b2, h);
                        if (!set_contains(c1, f) || !set_contains(c1p, f) ||
                            !set_contains(c2, g) || !set_contains(c2p, g))
                            continue;
                        const PhaseVector& x1 = c.member_on(c1);
                        const PhaseVector& x2 = c.member_on(c2);
                        const PhaseVector& x1p = c.member_on(c1p);
                        const PhaseVector& x2p = c.member_on(c2p);
                        // Orientation fixed by cycle consistency of the pivot
                        // labels around the square B1 B2 B2' B1'.
                        Phase lhs = (x1.at(e) * x1.at(f).inv()) * (x2.at(g) * x2.at(h).inv());
                        Phase rhs = (x1p.at(e) * x1p.at(f).inv()) * (x2p.at(g) * x2p.at(h).inv());
                        if (lhs != rhs) {
                            result = {false,
                                      "square relation fails at A=" + set_str(a) + " e,f,g,h=" +
                                          std::to_string(e) + "," + std::to_string(f) + "," +
                                          std::to_string(g) + "," + std::to_string(h)};
                            return false;
                        }
                    }
        return true;
    });
    return result;
}

}  // namespace phimat
