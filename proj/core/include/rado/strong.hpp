#pragma once

// Monochromatic solutions that also avoid finitely many hyperplanes.
//
// The pipeline: find a progression family (a solution x whose entries sit in
// monochromatic progressions x_i + t d, |t| <= H), then pick integer shifts
// t_i with sum a_i t_i = 0 that dodge every inequality, and return x + t d.
// Product colorings and the AP finder are the finite pieces of the
// compactness construction behind progression families; they are exercised
// at small scale only.

#include <rado/algebra.hpp>
#include <rado/coloring.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rado {

/// Inequality rows A_j . x != 0 attached to an equation. No row may be a
/// multiple of the equation (including the zero row, which no tuple satisfies).
class InequalitySystem {
public:
    InequalitySystem(const Equation& eq, std::vector<Row> rows);

    /// All rows e_i - e_j, i < j: pairwise distinct entries.
    static InequalitySystem distinct(const Equation& eq);

    std::size_t size() const { return rows_.size(); }
    std::span<const Row> rows() const { return rows_; }

private:
    std::vector<Row> rows_;
};

/// Rows e_i - e_j for all i < j over n variables.
std::vector<Row> distinct_rows(std::size_t n);

struct ProgressionFamily {
    SolutionTuple base;
    Integer step;
    std::size_t half_length = 0;
};

/// H = 2 * ceil((k + 1) * sum |a_i| / 2). Bounds every shift produced by
/// find_shift_multipliers for k inequalities.
Integer progression_halflength(const Equation& eq, std::size_t k);

/// Integer shifts t with sum a_i t_i = 0, max |t_i| <= bound, and every row
/// nonzero at base + t * step. Tries t_i = m |a_n|, m = 1..k+1 for i < n
/// first, then the box [-bound, bound]^(n-1); throws infeasible if neither
/// yields a hit.
std::vector<Integer> find_shift_multipliers(const Equation& eq, const InequalitySystem& ineqs,
                                            const SolutionTuple& base, const Integer& step,
                                            const Integer& bound);

SolutionTuple apply_shift(const SolutionTuple& base, const Integer& step,
                          std::span<const Integer> shift);

struct FamilyOptions {
    /// Worker threads over the step d; the result does not depend on it.
    unsigned threads = 1;
};

/// First family (by step, then base in lexicographic order) lying inside
/// [1, N] with all n (2C + 1) members one color.
std::optional<ProgressionFamily> find_progression_family(const Equation& eq, const Coloring& col,
                                                         std::size_t half_length,
                                                         FamilyOptions options = {});

struct StrongSolution {
    SolutionTuple tuple;
    Color color = 0;
    /// Present when the progression path produced the tuple.
    std::optional<ProgressionFamily> family;
    std::vector<Integer> shift;
};

/// A monochromatic solution satisfying every inequality: through a
/// progression family when one fits in [1, N], else the least monochromatic
/// solution found by direct enumeration.
std::optional<StrongSolution> strong_solve(const Equation& eq, const InequalitySystem& ineqs,
                                           const Coloring& col, FamilyOptions options = {});

/// Classes alpha -> (col(alpha), col(2 alpha), ..., col(R alpha)) for
/// alpha <= N / R.
struct ProductColoring {
    std::size_t window = 1;
    std::vector<std::vector<Color>> classes;

    std::size_t length() const { return classes.size(); }
    const std::vector<Color>& operator()(std::size_t alpha) const { return classes[alpha - 1]; }
};

ProductColoring product_coloring(const Coloring& col, std::size_t window);

/// Least (a, d) in lexicographic order with a, a + d, ..., a + (L-1) d in the
/// domain and all in one class. For L = 1 the step is reported as 1.
std::optional<std::pair<std::size_t, std::size_t>> find_monochromatic_ap(const Coloring& col,
                                                                         std::size_t length);
std::optional<std::pair<std::size_t, std::size_t>> find_monochromatic_ap(const ProductColoring& col,
                                                                         std::size_t length);

} // namespace rado
