#pragma once

// Finite colorings of [1, N], monochromatic-solution verification, and the
// backtracking search for solution-free colorings and Rado radii.

#include <rado/algebra.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace rado {

using Color = int;

/// A coloring of [1, N] with colors in {1, ..., r}. N may be 0 (empty).
class Coloring {
public:
    Coloring(int palette, std::vector<Color> colors);

    std::size_t length() const { return colors_.size(); }
    int palette() const { return palette_; }
    std::span<const Color> colors() const { return colors_; }

    bool contains(const Integer& x) const { return x >= 1 && x <= static_cast<unsigned long>(colors_.size()); }
    /// Color of x in [1, N].
    Color operator()(std::size_t x) const { return colors_[x - 1]; }
    Color at(const Integer& x) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    int palette_;
    std::vector<Color> colors_;
};

/// Text format: "N r" on the first line, then N colors. '#' lines are comments.
Coloring read_coloring(std::istream& in);
Coloring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const Coloring& col);

/// x -> 1 if odd, 2 if even.
Coloring parity_coloring(std::size_t n);

/// perm[c-1] is the image of color c.
Coloring permute_colors(const Coloring& col, std::span<const Color> perm);

struct Counterexample {
    SolutionTuple tuple;
    Color color;
};

/// Valid (std::monostate) or the lexicographically first monochromatic solution.
using VerifyOutcome = std::variant<std::monostate, Counterexample>;

inline bool is_valid(const VerifyOutcome& v) { return std::holds_alternative<std::monostate>(v); }

/// Calls visit for every tuple in [lo, hi]^n satisfying the equation and every
/// inequality row, in lexicographic order; stops early when visit returns
/// false. The last variable is solved from the others.
void for_each_solution(const Equation& eq, std::int64_t lo, std::int64_t hi,
                       std::span<const Row> ineqs,
                       const std::function<bool(std::span<const std::int64_t>)>& visit);

std::vector<SolutionTuple> enumerate_solutions(const Equation& eq, std::int64_t n,
                                               std::span<const Row> ineqs = {});

VerifyOutcome verify_coloring(const Equation& eq, const Coloring& col,
                              std::span<const Row> ineqs = {});

struct SearchOptions {
    /// Forward-check forbidden-ratio pairs (y, S_l y). Only active without
    /// inequality rows, where such pairs are genuine solutions.
    bool ratio_pruning = true;
};

/// Lexicographically least solution-free coloring of [1, n] with color 1 at
/// position 1, or nullopt if none exists.
std::optional<Coloring> search_coloring(const Equation& eq, int palette, std::size_t n,
                                        std::span<const Row> ineqs = {},
                                        SearchOptions options = {});

struct RadiusResult {
    /// True when a radius was found; false means every N <= cap admits a
    /// solution-free coloring.
    bool found = false;
    /// The radius R when found, else the cap.
    std::size_t value = 0;
    /// Least valid coloring at R - 1 (when found) or at cap (when not).
    Coloring witness{1, {}};
};

/// Least R <= cap such that no solution-free r-coloring of [1, R] exists.
RadiusResult rado_radius(const Equation& eq, int palette, std::size_t cap,
                         std::span<const Row> ineqs = {}, SearchOptions options = {});

} // namespace rado
