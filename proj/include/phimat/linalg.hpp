#pragma once

// Exact linear algebra over the Gaussian rationals: determinants of column
// selections, reduced row echelon form, kernel bases, Cramer circuit vectors,
// and exact Fourier–Motzkin feasibility for mixed equality / strict-inequality
// rational systems. Dense only; these matrices have at most a dozen columns.

#include <deque>
#include <string>
#include <vector>

#include "phimat/gauss.hpp"

namespace phimat {

struct GaussMatrix {
    int rows = 0, cols = 0;
    std::vector<GaussRational> data;  // row-major

    GaussMatrix() = default;
    GaussMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

    GaussRational& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    const GaussRational& at(int r, int c) const {
        return data[static_cast<std::size_t>(r) * cols + c];
    }

    // Column labels are 1-based positions.
    ElemSet column_labels() const;
    GaussMatrix conjugated() const;

    friend bool operator==(const GaussMatrix& x, const GaussMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.data == y.data;
    }

    // One row per line, whitespace-separated literals, '#' comments.
    static GaussMatrix parse(const std::string& text);
    std::string str() const;
};

// Determinant of the submatrix with the given columns, in the given order.
GaussRational det(const GaussMatrix& m, const std::vector<int>& cols);

GaussMatrix rref(const GaussMatrix& m);
int rank(const GaussMatrix& m);
int rank_of_columns(const GaussMatrix& m, const ElemSet& cols);

// Basis of the right kernel {x : m·x = 0}; size cols − rank.
std::vector<std::vector<GaussRational>> kernel_basis(const GaussMatrix& m);

// The kernel vector (unique up to scalar) supported exactly on a circuit of
// the column matroid, by Cramer cofactors with the lexicographically first
// independent completion. Throws axiom_error if `support` is not a circuit.
std::vector<GaussRational> circuit_vector(const GaussMatrix& m, const ElemSet& support);

// ---------------------------------------------------------------------------
// Exact feasibility

// A linear form c0 + c1·x1 + ... + cn·xn is stored as [c1,...,cn,c0].
// Deques keep references from add_equality/add_strict stable across later
// insertions.
struct LinSystem {
    int nvars = 0;
    std::deque<std::vector<Rat>> equalities;           // form = 0
    std::deque<std::vector<Rat>> strict_inequalities;  // form > 0

    std::vector<Rat>& add_equality();
    std::vector<Rat>& add_strict();
};

// True iff the system has a real solution. Equalities are eliminated by exact
// substitution, then Fourier–Motzkin elimination runs on the strict system.
bool fm_feasible(const LinSystem& sys);

// Is there w in the row space of m with ph(w) = target, componentwise?
// Reduces to fm_feasible over the 2·rows real coefficients.
bool phase_vector_realizable(const GaussMatrix& m, const PhaseVector& target);

}  // namespace phimat
