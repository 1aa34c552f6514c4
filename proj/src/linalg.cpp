#include "phimat/linalg.hpp"

#include <sstream>

#include "phimat/errors.hpp"

namespace phimat {

ElemSet GaussMatrix::column_labels() const {
    ElemSet out(cols);
    for (int c = 0; c < cols; ++c) out[c] = c + 1;
    return out;
}

GaussMatrix GaussMatrix::conjugated() const {
    GaussMatrix out(rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = data[i].conj();
    return out;
}

GaussMatrix GaussMatrix::parse(const std::string& text) {
    std::vector<std::vector<GaussRational>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<GaussRational> row;
        std::string tok;
        while (ls >> tok) row.push_back(GaussRational::parse(tok));
        if (row.empty()) continue;
        if (!rows.empty() && rows.front().size() != row.size())
            throw parse_error("ragged matrix: rows of different lengths");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw parse_error("empty matrix");
    GaussMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

std::string GaussMatrix::str() const {
    std::string out;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c) out += " ";
            out += at(r, c).str();
        }
        out += "\n";
    }
    return out;
}

GaussRational det(const GaussMatrix& m, const std::vector<int>& cols) {
    const int d = m.rows;
    if (static_cast<int>(cols.size()) != d)
        throw std::invalid_argument("det: need exactly as many columns as rows");
    for (int c : cols)
        if (c < 1 || c > m.cols) throw std::invalid_argument("det: column label out of range");
    // Gaussian elimination with exact division.
    GaussMatrix a(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) a.at(r, c) = m.at(r, cols[c] - 1);
    GaussRational result(1);
    for (int c = 0; c < d; ++c) {
        int pivot = -1;
        for (int r = c; r < d; ++r)
            if (!a.at(r, c).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return GaussRational(0);
        if (pivot != c) {
            for (int k = 0; k < d; ++k) std::swap(a.at(pivot, k), a.at(c, k));
            result = -result;
        }
        result = result * a.at(c, c);
        for (int r = c + 1; r < d; ++r) {
            if (a.at(r, c).is_zero()) continue;
            GaussRational f = a.at(r, c) / a.at(c, c);
            for (int k = c; k < d; ++k) a.at(r, k) = a.at(r, k) - f * a.at(c, k);
        }
    }
    return result;
}

GaussMatrix rref(const GaussMatrix& m) {
    GaussMatrix a = m;
    int lead = 0;
    for (int r = 0; r < a.rows && lead < a.cols; ++r) {
        int pivot = -1;
        while (lead < a.cols) {
            for (int i = r; i < a.rows; ++i)
                if (!a.at(i, lead).is_zero()) {
                    pivot = i;
                    break;
                }
            if (pivot >= 0) break;
            ++lead;
        }
        if (pivot < 0) break;
        if (pivot != r)
            for (int k = 0; k < a.cols; ++k) std::swap(a.at(pivot, k), a.at(r, k));
        GaussRational inv = GaussRational(1) / a.at(r, lead);
        for (int k = 0; k < a.cols; ++k) a.at(r, k) = a.at(r, k) * inv;
        for (int i = 0; i < a.rows; ++i) {
            if (i == r || a.at(i, lead).is_zero()) continue;
            GaussRational f = a.at(i, lead);
            for (int k = 0; k < a.cols; ++k) a.at(i, k) = a.at(i, k) - f * a.at(r, k);
        }
        ++lead;
    }
    return a;
}

int rank(const GaussMatrix& m) {
    GaussMatrix r = rref(m);
    int rk = 0;
    for (int i = 0; i < r.rows; ++i) {
        bool nonzero = false;
        for (int c = 0; c < r.cols; ++c)
            if (!r.at(i, c).is_zero()) {
                nonzero = true;
                break;
            }
        if (nonzero) ++rk;
    }
    return rk;
}

int rank_of_columns(const GaussMatrix& m, const ElemSet& cols) {
    GaussMatrix sub(m.rows, static_cast<int>(cols.size()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < sub.cols; ++c) sub.at(r, c) = m.at(r, cols[c] - 1);
    return rank(sub);
}

std::vector<std::vector<GaussRational>> kernel_basis(const GaussMatrix& m) {
    GaussMatrix r = rref(m);
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot(m.cols, false);
    for (int i = 0; i < r.rows; ++i) {
        int c = 0;
        while (c < r.cols && r.at(i, c).is_zero()) ++c;
        if (c == r.cols) break;
        pivot_col_of_row.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<std::vector<GaussRational>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussRational> v(m.cols, GaussRational(0));
        v[free] = GaussRational(1);
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[pivot_col_of_row[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<GaussRational> circuit_vector(const GaussMatrix& m, const ElemSet& support) {
    if (support.empty()) throw axiom_error("circuit_vector: empty support");
    const int k = static_cast<int>(support.size()) - 1;
    if (rank_of_columns(m, support) != k)
        throw axiom_error("circuit_vector: support is not dependent of nullity one");
    for (int i = 0; i <= k; ++i)
        if (rank_of_columns(m, set_without(support, support[i])) != k)
            throw axiom_error("circuit_vector: support is not a minimal dependent set");

    // Lexicographically first completion of support ∖ {first element} to a
    // column basis. Elements of the support itself never extend the rank.
    ElemSet base = set_without(support, support[0]);
    ElemSet completion;
    int r = rank_of_columns(m, base);
    const int d = rank(m);
    for (int c = 1; c <= m.cols && r < d; ++c) {
        if (set_contains(support, c)) continue;
        ElemSet trial = set_with(set_union(base, completion), c);
        int tr = rank_of_columns(m, trial);
        if (tr > r) {
            completion = set_with(completion, c);
            r = tr;
        }
    }

    std::vector<GaussRational> out(m.cols, GaussRational(0));
    int sign = 1;
    for (int i = 0; i <= k; ++i, sign = -sign) {
        std::vector<int> tuple;
        for (int j = 0; j <= k; ++j)
            if (j != i) tuple.push_back(support[j]);
        for (int w : completion) tuple.push_back(w);
        GaussRational dv = det(m, tuple);
        out[support[i] - 1] = sign > 0 ? dv : -dv;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fourier–Motzkin

std::vector<Rat>& LinSystem::add_equality() {
    equalities.emplace_back(nvars + 1, Rat(0));
    return equalities.back();
}

std::vector<Rat>& LinSystem::add_strict() {
    strict_inequalities.emplace_back(nvars + 1, Rat(0));
    return strict_inequalities.back();
}

namespace {

// form layout: coefficients 0..n-1, constant at index n.
void substitute(std::vector<Rat>& form, int var, const std::vector<Rat>& repl) {
    Rat c = form[var];
    if (c == 0) return;
    form[var] = 0;
    for (std::size_t i = 0; i < form.size(); ++i) form[i] += c * repl[i];
}

bool all_coeffs_zero(const std::vector<Rat>& form) {
    for (std::size_t i = 0; i + 1 < form.size(); ++i)
        if (form[i] != 0) return false;
    return true;
}

}  // namespace

bool fm_feasible(const LinSystem& sys) {
    const int n = sys.nvars;
    std::vector<std::vector<Rat>> eqs(sys.equalities.begin(), sys.equalities.end());
    std::vector<std::vector<Rat>> ineqs(sys.strict_inequalities.begin(),
                                        sys.strict_inequalities.end());
    std::vector<bool> eliminated(n, false);

    // Equalities first: solve for one variable and substitute everywhere.
    for (std::size_t used = 0; used < eqs.size(); ++used) {
        auto& eq = eqs[used];
        int var = -1;
        for (int v = 0; v < n; ++v)
            if (eq[v] != 0) {
                var = v;
                break;
            }
        if (var < 0) {
            if (eq[n] != 0) return false;  // 0 = c with c ≠ 0
            continue;
        }
        // var = repl(other vars): repl = -(form - c·var)/c
        std::vector<Rat> repl(n + 1, Rat(0));
        Rat c = eq[var];
        for (int i = 0; i <= n; ++i)
            if (i != var) repl[i] = -eq[i] / c;
        eliminated[var] = true;
        for (std::size_t j = used + 1; j < eqs.size(); ++j) substitute(eqs[j], var, repl);
        for (auto& f : ineqs) substitute(f, var, repl);
    }

    // Fourier–Motzkin on the strict system.
    for (int var = 0; var < n; ++var) {
        if (eliminated[var]) continue;
        std::vector<std::vector<Rat>> lower, upper, rest;
        for (auto& f : ineqs) {
            if (f[var] > 0)
                lower.push_back(std::move(f));
            else if (f[var] < 0)
                upper.push_back(std::move(f));
            else
                rest.push_back(std::move(f));
        }
        ineqs = std::move(rest);
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                // a·x + r > 0 (a>0) and b·x + s > 0 (b<0) combine to
                // a·s − b·r > 0.
                std::vector<Rat> comb(n + 1, Rat(0));
                for (int i = 0; i <= n; ++i) comb[i] = lo[var] * up[i] - up[var] * lo[i];
                if (!all_coeffs_zero(comb)) {
                    ineqs.push_back(std::move(comb));
                } else if (comb[n] <= 0) {
                    return false;
                }
            }
    }
    for (const auto& f : ineqs) {
        if (!all_coeffs_zero(f)) continue;  // involves a free variable; satisfiable
        if (f[f.size() - 1] <= 0) return false;
    }
    // Anything left with a live coefficient is a one-sided bound: satisfiable.
    return true;
}

bool phase_vector_realizable(const GaussMatrix& m, const PhaseVector& target) {
    if (target.ground != m.column_labels())
        throw std::invalid_argument("phase_vector_realizable: ground set mismatch");
    const int d = m.rows;
    LinSystem sys;
    sys.nvars = 2 * d;  // c_j = x_{2j} + i·x_{2j+1}

    // w_e = Σ_j c_j m(j,e); split into real and imaginary parts of the
    // constraints. For e in the support, w_e / target(e) must be a positive
    // real, i.e. w_e·conj(t_e) has zero imaginary part and positive real part.
    for (int e = 1; e <= m.cols; ++e) {
        Phase t = target.at(e);
        if (t.is_zero()) {
            auto& re0 = sys.add_equality();
            auto& im0 = sys.add_equality();
            for (int j = 0; j < d; ++j) {
                const GaussRational& a = m.at(j, e - 1);
                re0[2 * j] += a.re;
                re0[2 * j + 1] += -a.im;
                im0[2 * j] += a.im;
                im0[2 * j + 1] += a.re;
            }
        } else {
            GaussRational tc{Rat(t.a()), Rat(-t.b())};
            auto& im0 = sys.add_equality();
            auto& repos = sys.add_strict();
            for (int j = 0; j < d; ++j) {
                GaussRational a = m.at(j, e - 1) * tc;
                im0[2 * j] += a.im;
                im0[2 * j + 1] += a.re;
                repos[2 * j] += a.re;
                repos[2 * j + 1] += -a.im;
            }
        }
    }
    return fm_feasible(sys);
}

}  // namespace phimat
