#include <rado/linkage.hpp>

#include <algorithm>
#include <future>
#include <thread>

namespace rado {

std::vector<Rational> LinkageMatrix::first_row() const
{
    return std::vector<Rational>(entries_.begin(), entries_.begin() + m_);
}

namespace {

bool contains(std::span<const Rational> set, const Rational& q)
{
    return std::find(set.begin(), set.end(), q) != set.end();
}

// Appending `next` to a valid prefix keeps it valid iff every quotient
// next / prefix[i] is an allowed ratio.
bool extends(std::span<const Rational> prefix, const Rational& next, std::span<const Rational> set)
{
    for (const auto& p : prefix) {
        Rational q = next / p;
        if (!q.is_positive() || !contains(set, q))
            return false;
    }
    return true;
}

bool search_rows(std::vector<Rational>& row, std::size_t m, std::span<const Rational> candidates)
{
    if (row.size() == m)
        return true;
    for (const auto& c : candidates) {
        if (!extends(row, c, candidates))
            continue;
        row.push_back(c);
        if (search_rows(row, m, candidates))
            return true;
        row.pop_back();
    }
    return false;
}

} // namespace

bool linkage_check(std::span<const Rational> first_row, std::span<const Rational> ratio_set)
{
    for (std::size_t j = 1; j < first_row.size(); ++j)
        if (!extends(first_row.first(j), first_row[j], ratio_set))
            return false;
    return true;
}

LinkageMatrix build_matrix(const Equation& eq, std::span<const Rational> first_row)
{
    if (first_row.empty())
        throw Error(Errc::precondition, "a linkage matrix needs at least one entry");
    const auto ratios = forbidden_ratios(eq);
    std::vector<Rational> positive;
    for (const auto& s : ratios)
        if (s.is_positive())
            positive.push_back(s);

    for (std::size_t j = 0; j < first_row.size(); ++j)
        if (!first_row[j].is_positive() || !contains(positive, first_row[j]))
            throw Error(Errc::not_a_ratio, "entry " + first_row[j].str() + " at column " +
                                               std::to_string(j + 1) +
                                               " is not a positive forbidden ratio");
    if (!linkage_check(first_row, positive))
        throw Error(Errc::not_linked, "row " + join(first_row) + " lacks the linkage property");

    LinkageMatrix mat;
    const std::size_t m = first_row.size();
    mat.m_ = m;
    mat.entries_.assign(m * m, Rational(0));
    mat.index_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            Rational e = i == 0 ? first_row[j] : first_row[j] / first_row[i - 1];
            auto it = std::find(ratios.begin(), ratios.end(), e);
            mat.entries_[i * m + j] = e;
            mat.index_[i * m + j] = static_cast<std::size_t>(it - ratios.begin());
        }
    }
    return mat;
}

std::vector<Rational> linkage_candidates(const Equation& eq)
{
    std::vector<Rational> out;
    for (const auto& s : forbidden_ratios(eq))
        if (s.is_positive() && s != Rational(1))
            out.push_back(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<LinkageMatrix> linkage_search(const Equation& eq, std::size_t m,
                                            LinkageOptions options)
{
    if (m < 1)
        throw Error(Errc::precondition, "matrix size must be at least 1");
    const auto candidates = linkage_candidates(eq);
    const std::size_t workers =
        std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(candidates.size(), 1));

    // Each first entry is an independent subtree; take the least that succeeds.
    auto try_first = [&](std::size_t k) -> std::optional<std::vector<Rational>> {
        std::vector<Rational> row{candidates[k]};
        if (search_rows(row, m, candidates))
            return row;
        return std::nullopt;
    };

    for (std::size_t base = 0; base < candidates.size(); base += workers) {
        const std::size_t end = std::min(candidates.size(), base + workers);
        std::vector<std::optional<std::vector<Rational>>> found(end - base);
        if (workers == 1) {
            found[0] = try_first(base);
        } else {
            std::vector<std::future<std::optional<std::vector<Rational>>>> jobs;
            for (std::size_t k = base; k < end; ++k)
                jobs.push_back(std::async(std::launch::async, try_first, k));
            for (std::size_t k = 0; k < jobs.size(); ++k)
                found[k] = jobs[k].get();
        }
        for (auto& row : found)
            if (row)
                return build_matrix(eq, *row);
    }
    return std::nullopt;
}

std::size_t max_linkage(const Equation& eq, std::size_t m_cap, LinkageOptions options)
{
    if (m_cap < 1)
        throw Error(Errc::precondition, "m cap must be at least 1");
    // Prefixes of a valid row are valid, so the successful sizes form [1, best].
    std::size_t best = 0;
    for (std::size_t m = 1; m <= m_cap; ++m) {
        if (!linkage_search(eq, m, options))
            break;
        best = m;
    }
    return best;
}

Integer integrality_base(const LinkageMatrix& mat)
{
    Integer base = 1;
    for (std::size_t i = 0; i < mat.size(); ++i)
        for (std::size_t j = i; j < mat.size(); ++j) {
            Integer d = mat.entry(i, j).denominator();
            mpz_lcm(base.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t());
        }
    return base;
}

WalkResult linkage_walk(const Equation& eq, const LinkageMatrix& mat, const Coloring& coloring,
                        const Integer& x)
{
    const std::size_t m = mat.size();
    const auto ratios = forbidden_ratios(eq);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            if (mat.ratio_index(i, j) >= ratios.size() || ratios[mat.ratio_index(i, j)] != mat.entry(i, j))
                throw Error(Errc::precondition, "matrix was not built for this equation");
    if (static_cast<std::size_t>(coloring.palette()) > m)
        throw Error(Errc::precondition, "palette of " + std::to_string(coloring.palette()) +
                                            " colors exceeds matrix size " + std::to_string(m));
    if (x < 1 || x % integrality_base(mat) != 0)
        throw Error(Errc::precondition,
                    "x = " + x.get_str() + " is not a positive multiple of the integrality base " +
                        integrality_base(mat).get_str());

    std::vector<Integer> z(m + 1);
    std::vector<Color> c(m + 1);
    z[0] = x;
    for (std::size_t j = 1; j <= m; ++j)
        z[j] = (mat.entry(0, j - 1) * Rational(x)).numerator();
    for (std::size_t j = 0; j <= m; ++j)
        c[j] = coloring.at(z[j]);

    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = i + 1; j <= m; ++j) {
            if (c[i] != c[j])
                continue;
            // z_j / z_i = c[0][j-1] when i = 0, else c[i][j-1].
            WalkResult r;
            r.from = i;
            r.to = j;
            r.u = z[i];
            r.v = z[j];
            r.row = i;
            r.col = j - 1;
            r.ratio_l = mat.ratio_index(r.row, r.col);
            r.solution = forbidden_ratio_solution(eq, r.ratio_l, z[i]);
            r.color = c[i];
            return r;
        }
    }
    throw Error(Errc::precondition, "no same-colored pair; the matrix does not match the equation");
}

} // namespace rado
