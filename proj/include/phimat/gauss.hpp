#pragma once

// Exact scalars: Gaussian rationals (a + bi with rational parts) and phases,
// i.e. points of S^1 ∪ {0}. A nonzero phase is stored as a primitive integer
// ray (a,b): the half-line R+·(a+bi). Rays through distinct lattice directions
// are distinct phases; no floating point is involved anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "phimat/errors.hpp"
#include "phimat/sets.hpp"

namespace phimat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string rat_to_string(const Rat& r);

// ---------------------------------------------------------------------------
// GaussRational

struct GaussRational {
    Rat re, im;

    GaussRational() = default;
    GaussRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussRational(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussRational conj() const { return {re, -im}; }
    Rat norm() const { return re * re + im * im; }  // |z|^2

    friend GaussRational operator+(const GaussRational& x, const GaussRational& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussRational operator-(const GaussRational& x, const GaussRational& y) {
        return {x.re - y.re, x.im - y.im};
    }
    GaussRational operator-() const { return {-re, -im}; }
    friend GaussRational operator*(const GaussRational& x, const GaussRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussRational operator/(const GaussRational& x, const GaussRational& y) {
        if (y.is_zero()) throw std::domain_error("GaussRational: division by zero");
        Rat n = y.norm();
        GaussRational t = x * y.conj();
        return {t.re / n, t.im / n};
    }
    friend bool operator==(const GaussRational& x, const GaussRational& y) {
        return x.re == y.re && x.im == y.im;
    }

    // Literal grammar: [±]p[/q][±r[/s]i], e.g. "1+2i", "-3/2i", "0", "i".
    static GaussRational parse(const std::string& text);
    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

// ---------------------------------------------------------------------------
// Phase

class Phase {
public:
    Phase() : a_(0), b_(0) {}  // zero phase

    // The ray through a+bi; normalized by gcd, sign preserved ((-1,-1) and
    // (1,1) are distinct phases: rays, not lines).
    static Phase ray(Int a, Int b);
    static Phase zero() { return Phase(); }
    static Phase one() { return ray(1, 0); }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    Phase inv() const;                       // conjugate ray; error on zero
    Phase operator-() const { return is_zero() ? Phase() : raw(-a_, -b_); }
    friend Phase operator*(const Phase& p, const Phase& q) {
        if (p.is_zero() || q.is_zero()) return Phase();
        return ray(p.a_ * q.a_ - p.b_ * q.b_, p.a_ * q.b_ + p.b_ * q.a_);
    }
    friend Phase operator/(const Phase& p, const Phase& q) { return p * q.inv(); }

    friend bool operator==(const Phase& p, const Phase& q) {
        return p.a_ == q.a_ && p.b_ == q.b_;
    }
    friend bool operator!=(const Phase& p, const Phase& q) { return !(p == q); }
    friend bool operator<(const Phase& p, const Phase& q) {
        if (p.a_ != q.a_) return p.a_ < q.a_;
        return p.b_ < q.b_;
    }

    bool is_real() const { return b_ == 0; }  // zero, 1 or -1

    // cross(p,q) = Im(conj(p)·q); sign decides all half-circle tests.
    friend Int cross(const Phase& p, const Phase& q) { return p.a_ * q.b_ - p.b_ * q.a_; }
    friend Int dot(const Phase& p, const Phase& q) { return p.a_ * q.a_ + p.b_ * q.b_; }

    static Phase parse(const std::string& text);  // "0" or "a+bi" literal
    std::string str() const;

private:
    static Phase raw(Int a, Int b) {
        Phase p;
        p.a_ = std::move(a);
        p.b_ = std::move(b);
        return p;
    }
    Int a_, b_;
};

std::ostream& operator<<(std::ostream& os, const Phase& p);

Phase phase_of(const GaussRational& z);

// True iff all (nonzero) rays fit in some closed half-circle of S^1.
bool in_closed_half_circle(const std::vector<Phase>& ps);

// Membership 0 ∈ pconv(ps), following the paper's case list exactly:
// an all-zero nonempty multiset contains 0; a single nonzero ray never does;
// an antipodal pair does; three or more rays do iff they fit in no closed
// half-circle. Strictly positive coefficients throughout.
bool zero_in_pconv(const std::vector<Phase>& ps);

// ---------------------------------------------------------------------------
// PhaseVector

struct PhaseVector {
    ElemSet ground;                 // sorted element labels
    std::map<int, Phase> entries;   // nonzero entries only

    PhaseVector() = default;
    PhaseVector(ElemSet g, std::map<int, Phase> e);

    Phase at(int e) const {
        auto it = entries.find(e);
        return it == entries.end() ? Phase::zero() : it->second;
    }
    ElemSet support() const;
    bool is_zero() const { return entries.empty(); }

    PhaseVector restricted_to(const ElemSet& new_ground) const;
    PhaseVector scaled(const Phase& unit) const;
    // Representative with phase 1 at the smallest support element.
    PhaseVector canonical() const;

    // Componentwise order: this ≤ other iff every entry is 0 or equals other's.
    bool leq(const PhaseVector& other) const;

    friend bool operator==(const PhaseVector& x, const PhaseVector& y) {
        return x.ground == y.ground && x.entries == y.entries;
    }
    friend bool operator<(const PhaseVector& x, const PhaseVector& y) {
        if (x.ground != y.ground) return x.ground < y.ground;
        return x.entries < y.entries;
    }

    std::string str() const;  // "e1:<phase>,e2:<phase>,..."
    static PhaseVector parse_line(const std::string& line, const ElemSet& ground);
};

// S ⊥ T in the Hermitian sense: 0 ∈ pconv{S(e)·T(e)^{-1} : e in both supports},
// with disjoint supports orthogonal by convention.
bool orthogonal(const PhaseVector& s, const PhaseVector& t);

}  // namespace phimat
