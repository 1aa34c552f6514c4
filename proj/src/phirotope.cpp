#include "phimat/phirotope.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace phimat {

namespace {

std::string tuple_str(const std::vector<int>& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t[i]);
    }
    return out + ")";
}

}  // namespace

std::string GpCheck::witness() const {
    if (ok) return "";
    return "Grassmann-Plucker fails at x=" + tuple_str(x) + ", y=" + tuple_str(y);
}

Phirotope::Phirotope(ElemSet ground, int rank, std::map<ElemSet, Phase> values)
    : ground_(sorted(std::move(ground))), rank_(rank) {
    if (rank_ < 0 || rank_ > static_cast<int>(ground_.size()))
        throw std::invalid_argument("Phirotope: rank out of range");
    for (auto& [subset, phase] : values) {
        if (phase.is_zero()) continue;
        if (static_cast<int>(subset.size()) != rank_ || sorted(subset) != subset ||
            !is_subset(subset, ground_))
            throw std::invalid_argument("Phirotope: value key is not a sorted rank-subset");
        values_.emplace(subset, phase);
    }
    if (values_.empty()) throw axiom_error("phirotope axiom (phi1) fails: all values zero");
}

Phirotope Phirotope::from_matrix(const GaussMatrix& m) {
    const int d = m.rows;
    if (phimat::rank(m) != d)
        throw axiom_error("phirotope_from_matrix: matrix is row-deficient");
    std::map<ElemSet, Phase> values;
    for_each_subset(m.column_labels(), d, [&](const ElemSet& s) {
        Phase p = phase_of(det(m, s));
        if (!p.is_zero()) values.emplace(s, p);
        return true;
    });
    return Phirotope(m.column_labels(), d, std::move(values));
}

std::vector<ElemSet> Phirotope::support() const {
    std::vector<ElemSet> out;
    out.reserve(values_.size());
    for (const auto& [s, p] : values_) out.push_back(s);
    return out;
}

Phase Phirotope::value(const ElemSet& sorted_subset) const {
    auto it = values_.find(sorted_subset);
    return it == values_.end() ? Phase::zero() : it->second;
}

Phase Phirotope::eval(const std::vector<int>& tuple) const {
    if (static_cast<int>(tuple.size()) != rank_)
        throw std::invalid_argument("Phirotope::eval: wrong tuple length");
    int sign = permutation_sign(tuple);
    if (sign == 0) return Phase::zero();
    ElemSet key = tuple;
    std::sort(key.begin(), key.end());
    Phase v = value(key);
    return sign > 0 ? v : -v;
}

Matroid Phirotope::underlying_matroid() const {
    return Matroid(ground_, support());
}

GpCheck Phirotope::check_gp() const {
    GpCheck result;
    if (rank_ == 0) return result;
    const int d = rank_;
    bool ok = for_each_subset(ground_, d + 1, [&](const ElemSet& xs) {
        return for_each_subset(ground_, d - 1, [&](const ElemSet& ys) {
            std::vector<Phase> terms;
            terms.reserve(xs.size());
            int sign = 1;
            for (int k = 0; k <= d; ++k, sign = -sign) {
                ElemSet left = xs;
                left.erase(left.begin() + k);
                Phase first = value(left);
                if (first.is_zero()) {
                    terms.push_back(Phase::zero());
                    continue;
                }
                std::vector<int> right;
                right.push_back(xs[k]);
                right.insert(right.end(), ys.begin(), ys.end());
                Phase term = first * eval(right);
                terms.push_back(sign > 0 ? term : -term);
            }
            if (!zero_in_pconv(terms)) {
                result = {false, xs, ys};
                return false;
            }
            return true;
        });
    });
    (void)ok;
    return result;
}

Phirotope Phirotope::dual() const {
    const int n = static_cast<int>(ground_.size());
    const int corank = n - rank_;
    std::map<ElemSet, Phase> values;
    for_each_subset(ground_, corank, [&](const ElemSet& s) {
        ElemSet t = set_difference(ground_, s);
        Phase v = value(t);
        if (v.is_zero()) return true;
        std::vector<int> concat = s;
        concat.insert(concat.end(), t.begin(), t.end());
        int sign = permutation_sign(concat);
        Phase dv = v.inv();
        values.emplace(s, sign > 0 ? dv : -dv);
        return true;
    });
    return Phirotope(ground_, corank, std::move(values));
}

Phirotope Phirotope::contraction(const ElemSet& a) const {
    if (!is_subset(a, ground_)) throw std::invalid_argument("contraction: not a subset");
    Matroid m = underlying_matroid();
    ElemSet keep = m.lex_maximal_independent_subset(a);
    const int l = static_cast<int>(keep.size());
    ElemSet rest = set_difference(ground_, a);
    std::map<ElemSet, Phase> values;
    for_each_subset(rest, rank_ - l, [&](const ElemSet& s) {
        std::vector<int> tuple = s;
        tuple.insert(tuple.end(), keep.begin(), keep.end());
        Phase v = eval(tuple);
        if (!v.is_zero()) values.emplace(s, v);
        return true;
    });
    return Phirotope(rest, rank_ - l, std::move(values));
}

Phirotope Phirotope::deletion(const ElemSet& a) const {
    if (!is_subset(a, ground_)) throw std::invalid_argument("deletion: not a subset");
    Matroid m = underlying_matroid();
    ElemSet rest = set_difference(ground_, a);
    const int r = m.rank(rest);
    // If E∖A does not span, complete it from A, greedily by label.
    ElemSet completion;
    if (r < rank_) {
        ElemSet have = rest;
        for (int e : a) {
            if (static_cast<int>(completion.size()) == rank_ - r) break;
            ElemSet trial = set_with(have, e);
            if (m.rank(trial) > m.rank(have)) {
                completion = set_with(completion, e);
                have = std::move(trial);
            }
        }
    }
    std::map<ElemSet, Phase> values;
    for_each_subset(rest, r, [&](const ElemSet& s) {
        std::vector<int> tuple = s;
        tuple.insert(tuple.end(), completion.begin(), completion.end());
        Phase v = eval(tuple);
        if (!v.is_zero()) values.emplace(s, v);
        return true;
    });
    return Phirotope(rest, r, std::move(values));
}

std::optional<Phase> Phirotope::cross_ratio(int a, int b, const std::vector<int>& c,
                                            const std::vector<int>& d) const {
    if (static_cast<int>(c.size()) != rank_ - 1 || static_cast<int>(d.size()) != rank_ - 1)
        throw std::invalid_argument("cross_ratio: tuples must have length rank-1");
    auto tup = [](int head, const std::vector<int>& tail) {
        std::vector<int> t{head};
        t.insert(t.end(), tail.begin(), tail.end());
        return t;
    };
    Phase denom = eval(tup(b, c)) * eval(tup(a, d));
    if (denom.is_zero()) return std::nullopt;
    Phase numer = eval(tup(a, c)) * eval(tup(b, d));
    return numer * denom.inv();
}

Phirotope Phirotope::reorient(const std::map<int, Phase>& scalars) const {
    for (const auto& [e, u] : scalars)
        if (u.is_zero()) throw std::domain_error("reorient: zero is not a unit");
    std::map<ElemSet, Phase> values;
    for (const auto& [s, p] : values_) {
        Phase v = p;
        for (int e : s) {
            auto it = scalars.find(e);
            if (it != scalars.end()) v = v * it->second;
        }
        values.emplace(s, v);
    }
    return Phirotope(ground_, rank_, std::move(values));
}

std::optional<std::map<int, Phase>> Phirotope::reorientation_to_real() const {
    std::set<Phase> candidates{Phase::one(), -Phase::one()};
    for (const auto& [s, p] : values_) {
        candidates.insert(p);
        candidates.insert(-p);
        candidates.insert(p.inv());
        candidates.insert(-p.inv());
    }
    std::vector<Phase> cand(candidates.begin(), candidates.end());
    const int n = static_cast<int>(ground_.size());
    std::map<int, Phase> scalars;

    // All nonzero rescaled values must fall in a single antipodal pair.
    std::function<bool(int)> search = [&](int idx) {
        if (idx == n) {
            Phirotope r = reorient(scalars);
            const Phase mu = r.values_.begin()->second;
            for (const auto& [s, p] : r.values_)
                if (p != mu && p != -mu) return false;
            return true;
        }
        for (const Phase& u : cand) {
            scalars[ground_[idx]] = u;
            if (search(idx + 1)) return true;
        }
        scalars.erase(ground_[idx]);
        return false;
    };
    if (search(0)) return scalars;
    return std::nullopt;
}

std::optional<Phase> Phirotope::unit_multiple_of(const Phirotope& other) const {
    if (ground_ != other.ground_ || rank_ != other.rank_) return std::nullopt;
    if (values_.size() != other.values_.size()) return std::nullopt;
    auto it = values_.begin();
    auto jt = other.values_.begin();
    Phase c = it->second * jt->second.inv();
    for (; it != values_.end(); ++it, ++jt) {
        if (it->first != jt->first) return std::nullopt;
        if (it->second != c * jt->second) return std::nullopt;
    }
    return c;
}

Phirotope Phirotope::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int rank = -1, n = -1;
    std::map<ElemSet, Phase> values;
    bool have_header = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (!have_header) {
            if (first != "phirotope") throw parse_error("phirotope file: missing header");
            std::string field;
            while (ls >> field) {
                if (field.rfind("rank=", 0) == 0)
                    rank = std::stoi(field.substr(5));
                else if (field.rfind("ground=", 0) == 0)
                    n = std::stoi(field.substr(7));
                else
                    throw parse_error("phirotope file: bad header field '" + field + "'");
            }
            if (rank < 0 || n < 0) throw parse_error("phirotope file: incomplete header");
            have_header = true;
            continue;
        }
        std::vector<int> subset{std::stoi(first)};
        std::string tok;
        bool seen_colon = false;
        std::string phase_text;
        while (ls >> tok) {
            if (tok == ":") {
                seen_colon = true;
            } else if (!seen_colon) {
                try {
                    subset.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw parse_error("phirotope file: bad index '" + tok + "'");
                }
            } else {
                phase_text += tok;
            }
        }
        if (!seen_colon || phase_text.empty())
            throw parse_error("phirotope file: malformed value line '" + line + "'");
        Phase p = Phase::parse(phase_text);
        int sign = permutation_sign(subset);
        if (sign == 0) {
            if (!p.is_zero())
                throw parse_error("phirotope file: repeated index with nonzero phase");
            continue;
        }
        ElemSet key = sorted(subset);
        if (values.count(key)) throw parse_error("phirotope file: duplicate subset line");
        values[key] = sign > 0 ? p : -p;
    }
    if (!have_header) throw parse_error("phirotope file: empty");
    ElemSet ground(n);
    for (int i = 0; i < n; ++i) ground[i] = i + 1;
    return Phirotope(ground, rank, std::move(values));
}

std::string Phirotope::str() const {
    std::string out = "phirotope rank=" + std::to_string(rank_) +
                      " ground=" + std::to_string(ground_.size()) + "\n";
    for (const auto& [s, p] : values_) {
        std::string key;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) key += " ";
            key += std::to_string(s[i]);
        }
        out += key + " : " + p.str() + "\n";
    }
    return out;
}

}  // namespace phimat
