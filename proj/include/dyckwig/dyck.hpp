#pragma once

// Weighted Dyck-path combinatorics.
//
// A path of size r is a word of r ups and r downs whose prefixes never contain more downs
// than ups. An up step ending at height k is "at level k" and contributes u_k to the weight.
// P_{r|h}^{(a,b)} sums the weights of the size-r paths of height <= h that start with at
// least a ups and end with at least b downs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "multipoly.hpp"

namespace dyckwig {

enum class Step : std::uint8_t { Up, Down };

class DyckPath {
public:
    DyckPath() = default;

    /// Throws InvalidWord unless the steps form a Dyck path.
    explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
        if (steps_.size() % 2 != 0) throw InvalidWord("odd number of steps");
        long level = 0;
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            level += steps_[i] == Step::Up ? 1 : -1;
            if (level < 0) throw InvalidWord("prefix of length " + std::to_string(i + 1) + " dips below the axis");
        }
        if (level != 0) throw InvalidWord("unequal numbers of ups and downs");
    }

    const std::vector<Step>& steps() const { return steps_; }
    std::size_t size() const { return steps_.size() / 2; }
    bool empty() const { return steps_.empty(); }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;

private:
    std::vector<Step> steps_;
};

inline std::string word(const DyckPath& p) {
    std::string s;
    s.reserve(p.steps().size());
    for (Step st : p.steps()) s += st == Step::Up ? 'u' : 'd';
    return s;
}

inline DyckPath parse_word(std::string_view s) {
    std::vector<Step> steps;
    steps.reserve(s.size());
    for (char c : s) {
        if (c == 'u') steps.push_back(Step::Up);
        else if (c == 'd') steps.push_back(Step::Down);
        else throw InvalidWord(std::string("invalid letter '") + c + "' in Dyck word");
    }
    return DyckPath(std::move(steps));
}

inline unsigned height(const DyckPath& p) {
    unsigned level = 0, best = 0;
    for (Step st : p.steps()) {
        if (st == Step::Up) best = std::max(best, ++level);
        else --level;
    }
    return best;
}

inline Monomial weight(const DyckPath& p) {
    std::vector<unsigned> per_level;
    unsigned level = 0;
    for (Step st : p.steps()) {
        if (st == Step::Up) {
            if (per_level.size() <= level) per_level.resize(level + 1, 0);
            ++per_level[level++];
        } else {
            --level;
        }
    }
    Monomial m;
    for (unsigned k = 0; k < per_level.size(); ++k) m.multiply_var(k + 1, per_level[k]);
    return m;
}

/// Selects D_{r|h}^{(a,b)}; an absent h means no height bound.
struct PathConstraint {
    int r = 0;
    std::optional<int> h;
    int a = 0;
    int b = 0;

    static PathConstraint unrestricted(int r, int a = 0, int b = 0) { return {r, std::nullopt, a, b}; }

    int max_height() const { return h.value_or(r); }

    void validate() const {
        if (r < 0 || a < 0 || b < 0 || (h && *h < 0))
            throw DomainError("path constraint parameters must be nonnegative");
    }
};

/// Depth-first walk over D_{r|h}^{(a,b)} in lexicographic word order (u < d).
template <typename Visitor>
void for_each_path(const PathConstraint& c, Visitor&& visit) {
    c.validate();
    if (c.a > c.r || c.b > c.r) return;
    const int len = 2 * c.r;
    const int hmax = c.max_height();
    std::vector<Step> steps(static_cast<std::size_t>(len));

    auto dfs = [&](auto& self, int pos, int level, int ups) -> void {
        if (pos == len) {
            visit(std::as_const(steps));
            return;
        }
        const int remaining = len - pos - 1;
        if (ups < c.r && level + 1 <= hmax && pos < len - c.b && level + 1 <= remaining) {
            steps[pos] = Step::Up;
            self(self, pos + 1, level + 1, ups + 1);
        }
        if (level > 0 && pos >= c.a) {
            steps[pos] = Step::Down;
            self(self, pos + 1, level - 1, ups);
        }
    };
    dfs(dfs, 0, 0, 0);
}

inline std::vector<DyckPath> enumerate(const PathConstraint& c) {
    std::vector<DyckPath> out;
    for_each_path(c, [&](const std::vector<Step>& s) { out.emplace_back(s); });
    return out;
}

inline std::size_t count_paths(const PathConstraint& c) {
    std::size_t n = 0;
    for_each_path(c, [&](const std::vector<Step>&) { ++n; });
    return n;
}

/// P_{r|h}^{(a,b)} as the literal sum of path weights.
inline MultiPoly dyck_poly_enum(const PathConstraint& c) {
    std::map<std::vector<unsigned>, Integer> counts;
    std::vector<unsigned> per_level;
    for_each_path(c, [&](const std::vector<Step>& s) {
        per_level.assign(static_cast<std::size_t>(c.r) + 1, 0);
        unsigned level = 0;
        for (Step st : s) {
            if (st == Step::Up) ++per_level[++level];
            else --level;
        }
        ++counts[per_level];
    });
    MultiPoly p;
    for (const auto& [levels, n] : counts) {
        Monomial m;
        for (unsigned k = 1; k < levels.size(); ++k) m.multiply_var(k, levels[k]);
        p.add_term(m, n);
    }
    return p;
}

/// Memoized P_r^{(a,b)} via first-return decomposition.
///
/// Safe for concurrent use: lookups take a shared lock, inserts a unique one, and a value
/// computed twice by racing threads is identical.
class DyckPolyCache {
public:
    using Key = std::tuple<int, int, int>;

    std::shared_ptr<const MultiPoly> get(int r, int a, int b) {
        static const auto zero = std::make_shared<const MultiPoly>();
        static const auto one = std::make_shared<const MultiPoly>(1);
        if (r < 0 || a < 0 || b < 0 || a > r || b > r) return zero;
        if (r == 0) return one;
        // Every nonempty path starts with an up and ends with a down.
        a = std::max(a, 1);
        b = std::max(b, 1);
        const Key key{r, a, b};
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) return it->second;
        }
        auto value = std::make_shared<const MultiPoly>(compute(r, a, b));
        std::unique_lock lock(mutex_);
        return table_.try_emplace(key, std::move(value)).first->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    // Path = u (raised path of size i) d (rest of size r-1-i).
    MultiPoly compute(int r, int a, int b) {
        const MultiPoly u1 = MultiPoly::var(1);
        const int rest_total = r - 1;
        MultiPoly sum;
        if (a == 1 && b == 1) {
            for (int i = 0; i <= rest_total; ++i)
                sum += u1 * get(i, 0, 0)->shifted(1) * *get(rest_total - i, 0, 0);
            return sum;
        }
        // The raised part carries the leading constraint; a nonempty rest carries the trailing one.
        for (int i = 0; i < rest_total; ++i) {
            auto raised = get(i, a - 1, 0);
            if (raised->is_zero()) continue;
            auto rest = get(rest_total - i, 1, b);
            if (rest->is_zero()) continue;
            sum += u1 * raised->shifted(1) * *rest;
        }
        sum += u1 * get(rest_total, a - 1, b - 1)->shifted(1);
        return sum;
    }

    mutable std::shared_mutex mutex_;
    std::map<Key, std::shared_ptr<const MultiPoly>> table_;
};

inline DyckPolyCache& default_dyck_cache() {
    static DyckPolyCache cache;
    return cache;
}

/// P_r^{(a,b)} (no height bound); zero for negative or oversized indices.
inline MultiPoly dyck_poly_rec(int r, int a, int b) { return *default_dyck_cache().get(r, a, b); }

inline MultiPoly restrict_height(const MultiPoly& p, int h) {
    return p.restricted(static_cast<unsigned>(std::max(h, 0)));
}

/// P_{r|h}^{(a,b)} through the recurrence followed by height restriction.
inline MultiPoly dyck_poly(const PathConstraint& c) {
    c.validate();
    return restrict_height(dyck_poly_rec(c.r, c.a, c.b), c.max_height());
}

/// Both sides of P_{r+2}^{(a,b)} - P_{r+2}^{(a+2,b)} = u_{a-1}u_a P_r^{(a-2,b)} + (u_a+u_{a+1}) P_{r+1}^{(a,b)},
/// with u_k = 0 for k <= 0.
inline std::pair<MultiPoly, MultiPoly> lemma_lhs_rhs(int r, int a, int b) {
    auto u = [](int k) { return k >= 1 ? MultiPoly::var(static_cast<unsigned>(k)) : MultiPoly(); };
    MultiPoly lhs = dyck_poly_rec(r + 2, a, b) - dyck_poly_rec(r + 2, a + 2, b);
    MultiPoly rhs = u(a - 1) * u(a) * dyck_poly_rec(r, a - 2, b) + (u(a) + u(a + 1)) * dyck_poly_rec(r + 1, a, b);
    return {std::move(lhs), std::move(rhs)};
}

/// Coefficients of t^0..t^order of 1/(1 - t u1/(1 - t u2/(... 1 - t u_n))).
inline std::vector<MultiPoly> gen_series(int order, int n_vars) {
    if (order < 0 || n_vars < 0) throw DomainError("gen_series needs order >= 0 and n_vars >= 0");
    const auto len = static_cast<std::size_t>(order) + 1;
    std::vector<MultiPoly> g(len);
    g[0] = 1;
    for (int k = n_vars; k >= 1; --k) {
        // x = t u_k g; then h = 1/(1 - x) solved coefficientwise from h = 1 + x h.
        std::vector<MultiPoly> x(len);
        const MultiPoly uk = MultiPoly::var(static_cast<unsigned>(k));
        for (std::size_t m = 1; m < len; ++m) x[m] = uk * g[m - 1];
        std::vector<MultiPoly> h(len);
        h[0] = 1;
        for (std::size_t m = 1; m < len; ++m)
            for (std::size_t i = 1; i <= m; ++i)
                if (!x[i].is_zero() && !h[m - i].is_zero()) h[m] += x[i] * h[m - i];
        g = std::move(h);
    }
    return g;
}

/// Q_r: sum over D_r of prod_i t_i^{(number of maximal up-runs of length i)}.
/// Variable index i stands for t_i.
inline MultiPoly u_segment_poly(int r) {
    if (r < 0) throw DomainError("u_segment_poly needs r >= 0");
    MultiPoly q;
    for_each_path(PathConstraint::unrestricted(r), [&](const std::vector<Step>& s) {
        Monomial m;
        unsigned run = 0;
        for (Step st : s) {
            if (st == Step::Up) {
                ++run;
            } else if (run > 0) {
                m.multiply_var(run);
                run = 0;
            }
        }
        q.add_term(m, 1);
    });
    return q;
}

} // namespace dyckwig
