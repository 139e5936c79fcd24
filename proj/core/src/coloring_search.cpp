#include <rado/coloring.hpp>

#include <algorithm>
#include <cstdint>

namespace rado {

namespace {

// Depth-first search over colorings of [1, target], positions filled in
// order and colors tried ascending, so the first complete coloring reached is
// the lexicographically least valid one. Colors follow restricted growth
// (position p may use at most 1 + the largest color on [1, p-1]); the least
// valid coloring with color 1 at position 1 always has that shape, since
// relabeling colors by first occurrence never increases it.
//
// The search is resumable: after a success at target N the stack holds the
// least valid coloring of [1, N], and every lexicographically smaller prefix
// has been refuted. extend_to(N + 1) continues from there.
class ColoringSearch {
public:
    ColoringSearch(const Equation& eq, int palette, std::size_t cap, std::span<const Row> ineqs,
                   SearchOptions options)
        : palette_(palette), cap_(cap)
    {
        if (palette < 1)
            throw Error(Errc::precondition, "palette size must be at least 1");
        const std::size_t slots = cap_ + 2;
        buckets_.resize(slots);
        dead_.assign(slots, false);
        partners_.resize(slots);
        forbid_.assign(slots * (palette_ + 1), 0);
        blocked_.assign(slots, 0);
        color_.assign(slots, 0);
        next_.assign(slots, 1);
        max_used_.assign(slots, 0);

        collect_solutions(eq, ineqs);
        if (ineqs.empty() && options.ratio_pruning)
            collect_ratio_pairs(eq);
    }

    bool extend_to(std::size_t target)
    {
        if (exhausted_)
            return false;
        // Constant tuples are solutions at every position or at none.
        for (std::size_t q = depth_ + 1; q <= target; ++q) {
            if (dead_[q]) {
                exhausted_ = true;
                return false;
            }
        }
        std::size_t p = depth_ + 1;
        if (p <= target)
            next_[p] = 1;
        while (true) {
            if (p > target) {
                depth_ = target;
                return true;
            }
            if (p == 0) {
                exhausted_ = true;
                depth_ = 0;
                return false;
            }
            const Color limit = std::min<Color>(palette_, max_used_[p - 1] + 1);
            bool placed = false;
            for (Color c = next_[p]; c <= limit; ++c) {
                if (assign(p, c, target)) {
                    next_[p] = c + 1;
                    placed = true;
                    break;
                }
            }
            if (placed) {
                ++p;
                if (p <= target)
                    next_[p] = 1;
            } else {
                --p;
                if (p >= 1)
                    unassign(p);
            }
        }
    }

    Coloring current() const
    {
        return Coloring(palette_, std::vector<Color>(color_.begin() + 1, color_.begin() + 1 + depth_));
    }

private:
    void collect_solutions(const Equation& eq, std::span<const Row> ineqs)
    {
        std::vector<std::vector<std::vector<std::uint32_t>>> sets(cap_ + 1);
        for_each_solution(eq, 1, static_cast<std::int64_t>(cap_), ineqs,
                          [&](std::span<const std::int64_t> x) {
                              auto top = static_cast<std::uint32_t>(*std::max_element(x.begin(), x.end()));
                              std::vector<std::uint32_t> others;
                              for (auto v : x)
                                  if (static_cast<std::uint32_t>(v) != top)
                                      others.push_back(static_cast<std::uint32_t>(v));
                              if (others.empty()) {
                                  dead_[top] = true;
                                  return true;
                              }
                              std::sort(others.begin(), others.end());
                              others.erase(std::unique(others.begin(), others.end()), others.end());
                              sets[top].push_back(std::move(others));
                              return true;
                          });
        for (std::size_t p = 1; p <= cap_; ++p) {
            auto& s = sets[p];
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            for (auto& others : s) {
                Bucket b{static_cast<std::uint32_t>(pool_.size()), static_cast<std::uint32_t>(others.size())};
                pool_.insert(pool_.end(), others.begin(), others.end());
                buckets_[p].push_back(b);
            }
        }
    }

    void collect_ratio_pairs(const Equation& eq)
    {
        for (const auto& ratio : forbidden_ratios(eq)) {
            if (!ratio.is_positive() || ratio == Rational(1))
                continue;
            // Pairs (y, ratio * y) with both ends in [1, cap].
            const Integer num = ratio.numerator();
            const Integer den = ratio.denominator();
            for (Integer y = den; y <= static_cast<unsigned long>(cap_); y += den) {
                Integer z = y / den * num;
                if (z > static_cast<unsigned long>(cap_))
                    break;
                auto a = y.get_ui(), b = z.get_ui();
                auto lo = std::min(a, b), hi = std::max(a, b);
                partners_[lo].push_back(static_cast<std::uint32_t>(hi));
            }
        }
        for (auto& list : partners_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    }

    int& forbid(std::size_t q, Color c) { return forbid_[q * (palette_ + 1) + c]; }

    bool assign(std::size_t p, Color c, std::size_t target)
    {
        if (dead_[p] || forbid(p, c) > 0)
            return false;
        for (const auto& b : buckets_[p]) {
            bool mono = true;
            for (std::uint32_t k = 0; k < b.size && mono; ++k)
                mono = color_[pool_[b.offset + k]] == c;
            if (mono)
                return false;
        }
        const auto& partners = partners_[p];
        for (std::size_t k = 0; k < partners.size(); ++k) {
            std::size_t q = partners[k];
            if (forbid(q, c)++ == 0 && ++blocked_[q] == palette_ && q <= target) {
                for (std::size_t u = 0; u <= k; ++u)
                    release(partners[u], c);
                return false;
            }
        }
        color_[p] = c;
        max_used_[p] = std::max(max_used_[p - 1], c);
        return true;
    }

    void release(std::size_t q, Color c)
    {
        if (--forbid(q, c) == 0)
            --blocked_[q];
    }

    void unassign(std::size_t p)
    {
        Color c = color_[p];
        for (auto q : partners_[p])
            release(q, c);
        color_[p] = 0;
    }

    struct Bucket {
        std::uint32_t offset;
        std::uint32_t size;
    };

    int palette_;
    std::size_t cap_;
    std::vector<std::vector<Bucket>> buckets_;
    std::vector<std::uint32_t> pool_;
    std::vector<bool> dead_;
    std::vector<std::vector<std::uint32_t>> partners_;
    std::vector<int> forbid_;
    std::vector<int> blocked_;
    std::vector<Color> color_;
    std::vector<Color> next_;
    std::vector<Color> max_used_;
    std::size_t depth_ = 0;
    bool exhausted_ = false;
};

} // namespace

std::optional<Coloring> search_coloring(const Equation& eq, int palette, std::size_t n,
                                        std::span<const Row> ineqs, SearchOptions options)
{
    ColoringSearch search(eq, palette, n, ineqs, options);
    if (!search.extend_to(n))
        return std::nullopt;
    return search.current();
}

RadiusResult rado_radius(const Equation& eq, int palette, std::size_t cap,
                         std::span<const Row> ineqs, SearchOptions options)
{
    if (cap < 1)
        throw Error(Errc::precondition, "cap must be at least 1");
    ColoringSearch search(eq, palette, cap, ineqs, options);
    RadiusResult result;
    result.witness = Coloring(palette, {});
    for (std::size_t n = 1; n <= cap; ++n) {
        if (!search.extend_to(n)) {
            result.found = true;
            result.value = n;
            return result;
        }
        result.witness = search.current();
    }
    result.value = cap;
    return result;
}

} // namespace rado
