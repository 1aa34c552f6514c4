// Acceptance suite: one pass/fail line per criterion, every check exact.
// Invoked as: acceptance [path-to-phimat-binary]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phimat/phased_sets.hpp"
#include "phimat/phirotope.hpp"
#include "phimat/reconstruct.hpp"
#include "test_support.hpp"

using namespace phimat;
using phimat::testing::Rng;

namespace {

int g_failed = 0;

void criterion(int n, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << "A" << n << (n < 10 ? "  " : " ") << name << ": " << (ok ? "PASS" : "FAIL");
    if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++g_failed;
}

struct Instance {
    GaussMatrix matrix;
    Phirotope phi;
    Matroid matroid;
    PhasedSignature circuits;
    PhasedSignature cocircuits;

    explicit Instance(GaussMatrix m)
        : matrix(std::move(m)),
          phi(Phirotope::from_matrix(matrix)),
          matroid(phi.underlying_matroid()),
          circuits(circuits_from_phirotope(phi)),
          cocircuits(cocircuits_from_phirotope(phi)) {}
};

std::string run_cli(const std::string& bin, const std::string& args, int& code) {
    std::string out_file = "/tmp/phimat_acceptance.out";
    int status = std::system((bin + " " + args + " > " + out_file + " 2>&1").c_str());
    code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    // The 50 shared instances: full-rank Gaussian-integer matrices with
    // d in {1,2,3}, n ≤ 6, entries in [-3,3] + [-3,3]i. Fixed seed.
    Rng rng(20240701);
    std::vector<Instance> instances;
    while (instances.size() < 50) instances.emplace_back(testing::random_realization(rng));

    // ----------------------------------------------------------------- A1
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < instances.size() && ok; ++i) {
            GpCheck gp = instances[i].phi.check_gp();
            if (!gp.ok) {
                ok = false;
                detail = "instance " + std::to_string(i) + ": " + gp.witness();
            }
        }
        criterion(1, "Grassmann-Plucker soundness on 50 realizations", ok, detail);
    }

    // ----------------------------------------------------------------- A2
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < instances.size() && ok; ++i) {
            const Instance& inst = instances[i];
            try {
                Phirotope rebuilt = reconstruct_phirotope(inst.matroid, inst.circuits);
                if (!rebuilt.unit_multiple_of(inst.phi).has_value() ||
                    !(circuits_from_phirotope(rebuilt) == inst.circuits)) {
                    ok = false;
                    detail = "instance " + std::to_string(i);
                }
            } catch (const std::exception& e) {
                ok = false;
                detail = e.what();
            }
        }
        criterion(2, "cryptomorphism round trip, exact up to one unit", ok, detail);
    }

    // ----------------------------------------------------------------- A3
    {
        bool ok = true;
        std::string detail;
        Rng prng(99);
        for (std::size_t i = 0; i < instances.size() && ok; ++i) {
            const Instance& inst = instances[i];
            if (!check_orthogonality(inst.circuits, inst.cocircuits).ok ||
                !verify_dual_pair(inst.matroid, inst.circuits, inst.cocircuits).ok) {
                ok = false;
                detail = "orthogonality on instance " + std::to_string(i);
                break;
            }
            // Perturbable entries: members with at least two support elements.
            std::vector<std::pair<ElemSet, int>> slots;
            for (const auto& [s, v] : inst.cocircuits.members())
                if (s.size() >= 2)
                    for (int e : s) slots.emplace_back(s, e);
            if (slots.empty()) continue;
            std::uniform_int_distribution<std::size_t> pick(0, slots.size() - 1);
            for (int t = 0; t < 10 && ok; ++t) {
                auto [supp, elem] = slots[pick(prng)];
                Phase u = testing::random_ray(prng);
                while (u == Phase::one()) u = testing::random_ray(prng);
                std::vector<PhaseVector> raw;
                for (const auto& [s, v] : inst.cocircuits.members()) {
                    if (s != supp) {
                        raw.push_back(v);
                        continue;
                    }
                    auto entries = v.entries;
                    entries[elem] = entries[elem] * u;
                    raw.emplace_back(v.ground, entries);
                }
                PhasedSignature bad(inst.cocircuits.ground(), SignatureKind::cocircuits, raw);
                if (check_orthogonality(inst.circuits, bad).ok) {
                    ok = false;
                    detail = "perturbation survived on instance " + std::to_string(i);
                }
            }
        }
        criterion(3, "dual-pair orthogonality; all unit perturbations fail (S4)", ok, detail);
    }

    // ----------------------------------------------------------------- A4
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < instances.size() && ok; ++i) {
            CheckResult res = verify_circuit_axioms(instances[i].matroid, instances[i].circuits);
            if (!res.ok) {
                ok = false;
                detail = "instance " + std::to_string(i) + ": " + res.witness;
            }
        }
        criterion(4, "modular elimination axioms on all instances", ok, detail);
    }

    // ----------------------------------------------------------------- A5
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < instances.size() && ok; ++i) {
            const Instance& inst = instances[i];
            Phirotope dd = inst.phi.dual().dual();
            if (!dd.unit_multiple_of(inst.phi).has_value()) {
                ok = false;
                detail = "double dual on instance " + std::to_string(i);
                break;
            }
            PhasedSignature viaBasics =
                cocircuit_signature_from_circuits(inst.matroid, inst.circuits);
            PhasedSignature viaMin = min_support_orthogonal(inst.circuits);
            if (!(inst.cocircuits == viaBasics) || !(inst.cocircuits == viaMin)) {
                ok = false;
                detail = "three-way cocircuit agreement on instance " + std::to_string(i);
                break;
            }
            if (i < 20) {
                // Hermitian realization oracle: minimal-support kernel phases
                // of a complement realization match the dual pivot extraction
                // up to one unit per cocircuit (canonical forms equal).
                GaussMatrix h = testing::hermitian_complement(inst.matrix);
                for (const auto& [supp, member] : inst.cocircuits.members()) {
                    PhaseVector oracle =
                        testing::phases_of(circuit_vector(h, supp), inst.phi.ground())
                            .canonical();
                    if (!(member == oracle)) {
                        ok = false;
                        detail = "Hermitian oracle on instance " + std::to_string(i);
                        break;
                    }
                }
            }
        }
        criterion(5, "duality coherence and the Hermitian realization oracle", ok, detail);
    }

    // ----------------------------------------------------------------- A6
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < 20 && ok; ++i) {
            const Instance& inst = instances[i];
            PhasedSignature star = min_support_orthogonal(inst.circuits);
            for (int e : inst.phi.ground()) {
                PhasedSignature lhs = contract_signature(star, {e});
                PhasedSignature rhs = min_support_orthogonal(delete_signature(inst.circuits, {e}));
                if (!(lhs == rhs)) {
                    ok = false;
                    detail = "element " + std::to_string(e) + " on instance " + std::to_string(i);
                    break;
                }
            }
        }
        criterion(6, "minor-duality exchange C*/e = (C\\e)*", ok, detail);
    }

    // ----------------------------------------------------------------- A7
    {
        bool ok = true;
        std::string detail;
        GaussMatrix w1 = GaussMatrix::parse("1 1+i 1 0\n1+i 3i 0 1\n");
        GaussMatrix w2 = GaussMatrix::parse("1 1+i 1 0\n1+i 4i 0 1\n");
        if (!(rref(w1) == GaussMatrix::parse("1 0 3 -1+i\n0 1 -1+i -i\n")) ||
            !(rref(w2) == GaussMatrix::parse("1 0 2 -1/2+1/2i\n0 1 -1/2+1/2i -1/2i\n"))) {
            ok = false;
            detail = "gauss-jordan intermediates differ";
        }
        if (ok && !(Phirotope::from_matrix(w1) == Phirotope::from_matrix(w2))) {
            ok = false;
            detail = "phirotopes differ";
        }
        if (ok) {
            std::map<int, Phase> t{{1, phase_of(GaussRational::parse("2+i"))},
                                   {2, phase_of(GaussRational::parse("1+4i"))},
                                   {3, Phase::one()},
                                   {4, Phase::one()}};
            PhaseVector target(w1.column_labels(), t);
            if (!phase_vector_realizable(w1, target) || phase_vector_realizable(w2, target)) {
                ok = false;
                detail = "realizability verdicts wrong";
            }
        }
        if (ok && !cli.empty()) {
            int code = 0;
            std::string out = run_cli(cli, "demo no-vector-axioms", code);
            if (code != 0 ||
                out.find("(a) equal (b) realizable (c) not realizable") == std::string::npos) {
                ok = false;
                detail = "cli demo: exit " + std::to_string(code);
            }
        }
        criterion(7, "no-vector-axioms demo (section 6)", ok, detail);
    }

    // ----------------------------------------------------------------- A8
    {
        bool ok = true;
        std::string detail;
        GaussMatrix m = GaussMatrix::parse(
            "1 0 -1 0 0 i 1-i\n"
            "2 -1 0 -1 0 -i 3+i\n"
            "-i 0 -i 0 2i -i -2i\n"
            "-1 0 0 -i 1+i 0 -2\n");
        std::vector<GaussRational> x, y;
        for (int v : {1, 1, 1, 1, 1, 0, 0}) x.emplace_back(v);
        for (int v : {-1, 0, 0, 1, 1, 1, 1}) y.emplace_back(v);
        if (!testing::matrix_times_vector_is_zero(m, x) ||
            !testing::matrix_times_vector_is_zero(m, y)) {
            ok = false;
            detail = "kernel memberships fail";
        }
        if (ok) {
            Matroid mat = Phirotope::from_matrix(m).underlying_matroid();
            std::vector<ElemSet> found;
            for (const ElemSet& c : mat.circuits())
                if (!set_contains(c, 1)) found.push_back(c);
            std::vector<ElemSet> expected = {{2, 3, 4, 5, 6}, {2, 3, 4, 5, 7}, {2, 3, 4, 6, 7},
                                             {2, 3, 5, 6, 7}, {2, 4, 5, 6, 7}, {3, 4, 5, 6, 7}};
            if (found != expected) {
                ok = false;
                detail = "circuit supports differ";
            }
            for (const ElemSet& c : expected)
                if (ok && !testing::matrix_times_vector_is_zero(m, circuit_vector(m, c))) {
                    ok = false;
                    detail = "eliminated circuit vector not in the kernel";
                }
        }
        if (ok && !cli.empty()) {
            int code = 0;
            std::string out = run_cli(cli, "demo elimination", code);
            if (code != 0 || out.find("supports match the six expected eliminations: yes") ==
                                 std::string::npos) {
                ok = false;
                detail = "cli demo: exit " + std::to_string(code);
            }
        }
        criterion(8, "elimination demo (section 5, example 5.1)", ok, detail);
    }

    // ----------------------------------------------------------------- A9
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < instances.size() && ok; ++i) {
            for (const auto& [sx, xv] : instances[i].circuits.members())
                for (const auto& [sy, yv] : instances[i].cocircuits.members())
                    if (set_intersection(sx, sy).size() == 1) {
                        ok = false;
                        detail = "instance " + std::to_string(i);
                    }
        }
        criterion(9, "phased circuit/cocircuit supports never meet in one element", ok, detail);
    }

    // ---------------------------------------------------------------- A10
    {
        bool ok = true;
        std::string detail;
        Rng wrng(424242);
        int built = 0;
        while (built < 20 && ok) {
            GaussMatrix m = testing::random_realization(wrng);
            Phirotope phi1 = Phirotope::from_matrix(m);
            const auto& vals = phi1.values();
            if (vals.empty()) continue;
            // Zero one nonzero minor by solving for a single entry; the minor
            // is affine in it.
            std::uniform_int_distribution<std::size_t> pickb(0, vals.size() - 1);
            auto it = vals.begin();
            std::advance(it, pickb(wrng));
            ElemSet basis = it->first;
            std::uniform_int_distribution<int> pickr(0, m.rows - 1);
            std::uniform_int_distribution<std::size_t> pickc(0, basis.size() - 1);
            int row = pickr(wrng);
            int col = basis[pickc(wrng)] - 1;
            std::vector<int> tuple(basis.begin(), basis.end());
            GaussMatrix m0 = m, m1 = m;
            m0.at(row, col) = GaussRational(0);
            m1.at(row, col) = GaussRational(1);
            GaussRational b = det(m0, tuple);
            GaussRational a = det(m1, tuple) - b;
            if (a.is_zero()) continue;
            GaussMatrix m2 = m;
            m2.at(row, col) = -b / a;
            if (rank(m2) != m.rows) continue;
            ++built;
            Phirotope phi2 = Phirotope::from_matrix(m2);
            PhasedSignature c1 = circuits_from_phirotope(phi1);
            PhasedSignature c2 = circuits_from_phirotope(phi2);
            if (weak_map_circuits(c1, c2) != weak_map_phirotopes(phi1, phi2).has_value() ||
                weak_map_circuits(c2, c1) != weak_map_phirotopes(phi2, phi1).has_value()) {
                ok = false;
                detail = "equivalence breaks on constructed pair " + std::to_string(built);
            }
            if (ok && (!weak_map_circuits(c1, c1) || !weak_map_phirotopes(phi1, phi1))) {
                ok = false;
                detail = "identity weak map fails";
            }
        }
        if (ok) {
            Phirotope p1 = Phirotope::from_matrix(GaussMatrix::parse("1 0 1\n0 1 1\n"));
            Phirotope p2 = Phirotope::from_matrix(GaussMatrix::parse("1 0 1\n0 1 i\n"));
            if (weak_map_phirotopes(p1, p2) || weak_map_phirotopes(p2, p1) ||
                weak_map_circuits(circuits_from_phirotope(p1), circuits_from_phirotope(p2)) ||
                weak_map_circuits(circuits_from_phirotope(p2), circuits_from_phirotope(p1))) {
                ok = false;
                detail = "i-perturbed non-example passes";
            }
        }
        criterion(10, "weak maps: circuit and phirotope dominance agree", ok, detail);
    }

    // ---------------------------------------------------------------- A11
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < instances.size() && ok; ++i) {
            CheckResult tri = check_triangle_relations(instances[i].matroid, instances[i].circuits);
            CheckResult sq = check_square_relations(instances[i].matroid, instances[i].circuits);
            if (!tri.ok || !sq.ok) {
                ok = false;
                detail = "instance " + std::to_string(i) + ": " +
                         (tri.ok ? sq.witness : tri.witness);
            }
        }
        criterion(11, "triangle and square basis-exchange relations", ok, detail);
    }

    // ---------------------------------------------------------------- A12
    {
        bool ok = true;
        std::string detail;
        Rng rrng(777);
        for (int t = 0; t < 20 && ok; ++t) {
            GaussMatrix m = testing::random_realization(rrng, /*real_only=*/true);
            Phirotope p = Phirotope::from_matrix(m);
            if (p.rank() < 1) continue;

            std::vector<std::map<int, Phase>> rescalings;
            for (int s = 0; s < 10; ++s) {
                std::map<int, Phase> sc;
                for (int e : p.ground()) sc[e] = testing::random_ray(rrng);
                rescalings.push_back(std::move(sc));
            }
            std::vector<Phirotope> reoriented;
            for (const auto& sc : rescalings) reoriented.push_back(p.reorient(sc));

            for (int a : p.ground()) {
                for (int b : p.ground()) {
                    if (a == b) continue;
                    bool keep = for_each_subset(p.ground(), p.rank() - 1, [&](const ElemSet& cs) {
                        return for_each_subset(
                            p.ground(), p.rank() - 1, [&](const ElemSet& ds) {
                                auto cr = p.cross_ratio(a, b, cs, ds);
                                if (cr && !cr->is_real()) {
                                    ok = false;
                                    detail = "non-real cross-ratio from a real matrix";
                                    return false;
                                }
                                for (const Phirotope& q : reoriented) {
                                    auto qr = q.cross_ratio(a, b, cs, ds);
                                    if (cr.has_value() != qr.has_value() ||
                                        (cr && !(*cr == *qr))) {
                                        ok = false;
                                        detail = "cross-ratio changed under reorientation";
                                        return false;
                                    }
                                }
                                return true;
                            });
                    });
                    if (!keep) break;
                }
                if (!ok) break;
            }
        }
        criterion(12, "cross-ratios: real on real data, reorientation invariant", ok, detail);
    }

    std::cout << (g_failed == 0 ? "acceptance: all criteria PASS"
                                : "acceptance: " + std::to_string(g_failed) + " criteria FAIL")
              << "\n";
    return g_failed == 0 ? 0 : 1;
}
