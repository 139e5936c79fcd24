#pragma once

// Upper-triangular matrices of forbidden ratios with the linkage property
// c[0][i] * c[i+1][j] = c[0][j]. A matrix of size m certifies that the
// equation is m-regular; the walk below replays the pigeonhole argument on a
// concrete coloring.

#include <rado/algebra.hpp>
#include <rado/coloring.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rado {

/// Positive entries c[i][j] for 0 <= i <= j < m, each equal to a forbidden
/// ratio S_l of the equation it was built for. Rows below the first are the
/// quotients c[i+1][j] = c[0][j] / c[0][i].
class LinkageMatrix {
public:
    std::size_t size() const { return m_; }
    const Rational& entry(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }
    /// Smallest l with S_l equal to entry(i, j).
    std::size_t ratio_index(std::size_t i, std::size_t j) const { return index_[i * m_ + j]; }
    std::vector<Rational> first_row() const;

    friend LinkageMatrix build_matrix(const Equation& eq, std::span<const Rational> first_row);

private:
    LinkageMatrix() = default;
    std::size_t m_ = 0;
    std::vector<Rational> entries_;
    std::vector<std::size_t> index_;
};

/// True iff every implied entry c[0][j] / c[0][i], i < j, is positive and in
/// ratio_set. First-row entries are assumed to be members.
bool linkage_check(std::span<const Rational> first_row, std::span<const Rational> ratio_set);

/// Throws not-a-ratio if a first-row entry is not a positive forbidden ratio,
/// not-linked if an implied entry is not one.
LinkageMatrix build_matrix(const Equation& eq, std::span<const Rational> first_row);

struct LinkageOptions {
    /// Worker threads over the first entry; the result does not depend on it.
    unsigned threads = 1;
};

/// Distinct positive forbidden ratios other than 1, ascending.
std::vector<Rational> linkage_candidates(const Equation& eq);

/// Lexicographically least valid first row of length m (entries drawn with
/// repetition from linkage_candidates), as a full matrix.
std::optional<LinkageMatrix> linkage_search(const Equation& eq, std::size_t m,
                                            LinkageOptions options = {});

/// Largest m <= m_cap for which linkage_search succeeds, 0 if none. A lower
/// bound on the degree of regularity.
std::size_t max_linkage(const Equation& eq, std::size_t m_cap, LinkageOptions options = {});

/// Least x > 0 with every entry times x an integer (lcm of all denominators).
Integer integrality_base(const LinkageMatrix& mat);

struct WalkResult {
    Integer u;               // z_i
    Integer v;               // z_j
    std::size_t from = 0;    // i in z_0 = x, z_j = c[0][j-1] * x
    std::size_t to = 0;      // j
    std::size_t row = 0;     // matrix position of v / u
    std::size_t col = 0;
    std::size_t ratio_l = 0; // S_l = v / u
    SolutionTuple solution{1};
    Color color = 0;
};

/// Pigeonholes the m + 1 values x, c[0][0] x, ..., c[0][m-1] x under a
/// coloring with at most m colors and returns the first same-colored pair
/// (lexicographic in (i, j)) with its monochromatic forbidden-ratio solution.
WalkResult linkage_walk(const Equation& eq, const LinkageMatrix& mat, const Coloring& coloring,
                        const Integer& x);

} // namespace rado
