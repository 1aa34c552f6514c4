#include "phimat/gauss.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace phimat {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

// ---------------------------------------------------------------------------
// GaussRational text literals

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
};

// [±] digits [/ digits] ['i']  |  [±] 'i'
struct Term {
    Rat value;
    bool imaginary;
};

Int parse_digits(Cursor& c) {
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw parse_error("expected digits in number literal");
    Int v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + (c.peek() - '0');
        ++c.i;
    }
    return v;
}

Term parse_term(Cursor& c) {
    int sign = 1;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        if (c.peek() == '-') sign = -1;
        ++c.i;
    }
    if (!c.done() && c.peek() == 'i') {
        ++c.i;
        return {Rat(sign), true};
    }
    Int num = parse_digits(c);
    Int den = 1;
    if (!c.done() && c.peek() == '/') {
        ++c.i;
        den = parse_digits(c);
        if (den == 0) throw parse_error("zero denominator in literal");
    }
    bool imag = false;
    if (!c.done() && c.peek() == 'i') {
        imag = true;
        ++c.i;
    }
    return {Rat(sign * num, den), imag};
}

}  // namespace

GaussRational GaussRational::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw parse_error("empty number literal");
    Cursor c{s};
    GaussRational out;
    bool have_re = false, have_im = false;
    for (int t = 0; t < 2 && !c.done(); ++t) {
        Term term = parse_term(c);
        if (term.imaginary) {
            if (have_im) throw parse_error("two imaginary parts in '" + text + "'");
            out.im = term.value;
            have_im = true;
        } else {
            if (have_re) throw parse_error("two real parts in '" + text + "'");
            out.re = term.value;
            have_re = true;
        }
    }
    if (!c.done()) throw parse_error("trailing characters in number literal '" + text + "'");
    return out;
}

std::string GaussRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re != 0) out = rat_to_string(re);
    if (im != 0) {
        Rat a = im < 0 ? Rat(-im) : im;
        std::string mag = (a == 1) ? "" : rat_to_string(a);
        if (im < 0)
            out += "-" + mag + "i";
        else
            out += (out.empty() ? "" : "+") + mag + "i";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

// ---------------------------------------------------------------------------
// Phase

Phase Phase::ray(Int a, Int b) {
    if (a == 0 && b == 0) throw std::domain_error("Phase::ray: (0,0) is not a ray");
    Int g = gcd(abs(a), abs(b));
    return raw(a / g, b / g);
}

Phase Phase::inv() const {
    if (is_zero()) throw std::domain_error("phase_inv of zero phase");
    return raw(a_, -b_);
}

Phase Phase::parse(const std::string& text) {
    GaussRational z = GaussRational::parse(text);
    return phase_of(z);
}

std::string Phase::str() const {
    if (is_zero()) return "0";
    GaussRational z{Rat(a_), Rat(b_)};
    return z.str();
}

std::ostream& operator<<(std::ostream& os, const Phase& p) { return os << p.str(); }

Phase phase_of(const GaussRational& z) {
    if (z.is_zero()) return Phase::zero();
    // Clear denominators by a positive factor; the ray is scale-invariant.
    Int m = denominator(z.re) * denominator(z.im);
    Rat a = z.re * m, b = z.im * m;
    return Phase::ray(numerator(a), numerator(b));
}

// ---------------------------------------------------------------------------
// pconv predicates

bool in_closed_half_circle(const std::vector<Phase>& ps) {
    for (const Phase& p : ps)
        if (p.is_zero()) throw std::domain_error("in_closed_half_circle: zero entry");
    // If the rays fit in a closed half-circle, some boundary unit can be
    // rotated onto one of the rays or its antipode.
    for (const Phase& cand : ps) {
        for (int s = 0; s < 2; ++s) {
            Phase u = s ? -cand : cand;
            bool ok = true;
            for (const Phase& p : ps)
                if (cross(u, p) < 0) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
    }
    return false;
}

bool zero_in_pconv(const std::vector<Phase>& ps) {
    std::vector<Phase> rays;
    bool any = false;
    for (const Phase& p : ps) {
        any = true;
        if (p.is_zero()) continue;
        bool seen = false;
        for (const Phase& r : rays)
            if (r == p) {
                seen = true;
                break;
            }
        if (!seen) rays.push_back(p);
    }
    if (rays.empty()) return any;  // pconv of zeros is {0}; pconv(∅) = ∅
    if (rays.size() == 1) return false;
    if (rays.size() == 2 && rays[0] == -rays[1]) return true;
    return !in_closed_half_circle(rays);
}

// ---------------------------------------------------------------------------
// PhaseVector

PhaseVector::PhaseVector(ElemSet g, std::map<int, Phase> e)
    : ground(std::move(g)), entries(std::move(e)) {
    for (auto it = entries.begin(); it != entries.end();) {
        if (!set_contains(ground, it->first))
            throw std::invalid_argument("PhaseVector: entry off the ground set");
        it = it->second.is_zero() ? entries.erase(it) : std::next(it);
    }
}

ElemSet PhaseVector::support() const {
    ElemSet s;
    s.reserve(entries.size());
    for (const auto& [e, p] : entries) s.push_back(e);
    return s;
}

PhaseVector PhaseVector::restricted_to(const ElemSet& new_ground) const {
    std::map<int, Phase> out;
    for (const auto& [e, p] : entries)
        if (set_contains(new_ground, e)) out.emplace(e, p);
    return {new_ground, std::move(out)};
}

PhaseVector PhaseVector::scaled(const Phase& unit) const {
    if (unit.is_zero()) throw std::domain_error("PhaseVector::scaled: zero is not a unit");
    std::map<int, Phase> out;
    for (const auto& [e, p] : entries) out.emplace(e, p * unit);
    return {ground, std::move(out)};
}

PhaseVector PhaseVector::canonical() const {
    if (entries.empty()) return *this;
    return scaled(entries.begin()->second.inv());
}

bool PhaseVector::leq(const PhaseVector& other) const {
    for (const auto& [e, p] : entries)
        if (other.at(e) != p) return false;
    return true;
}

std::string PhaseVector::str() const {
    std::string out;
    for (const auto& [e, p] : entries) {
        if (!out.empty()) out += ",";
        out += std::to_string(e) + ":" + p.str();
    }
    return out;
}

PhaseVector PhaseVector::parse_line(const std::string& line, const ElemSet& ground) {
    std::map<int, Phase> entries;
    std::string token;
    std::istringstream in(line);
    while (std::getline(in, token, ',')) {
        auto colon = token.find(':');
        if (colon == std::string::npos)
            throw parse_error("bad signature entry '" + token + "'");
        int e;
        try {
            e = std::stoi(token.substr(0, colon));
        } catch (const std::exception&) {
            throw parse_error("bad element label in '" + token + "'");
        }
        Phase p = Phase::parse(token.substr(colon + 1));
        if (!entries.emplace(e, p).second)
            throw parse_error("duplicate element in signature line");
    }
    return {ground, std::move(entries)};
}

bool orthogonal(const PhaseVector& s, const PhaseVector& t) {
    if (s.ground != t.ground)
        throw std::invalid_argument("orthogonal: ground sets differ");
    std::vector<Phase> quotients;
    for (const auto& [e, p] : s.entries) {
        Phase q = t.at(e);
        if (!q.is_zero()) quotients.push_back(p * q.inv());
    }
    // Disjoint supports are orthogonal by definition (Hermitian product of
    // disjointly supported vectors vanishes identically).
    if (quotients.empty()) return true;
    return zero_in_pconv(quotients);
}

}  // namespace phimat
