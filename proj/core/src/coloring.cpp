#include <rado/coloring.hpp>

#include "small_int.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rado {

Coloring::Coloring(int palette, std::vector<Color> colors)
    : palette_(palette), colors_(std::move(colors))
{
    if (palette_ < 1)
        throw Error(Errc::invalid_coloring, "palette size must be at least 1");
    for (std::size_t i = 0; i < colors_.size(); ++i)
        if (colors_[i] < 1 || colors_[i] > palette_)
            throw Error(Errc::invalid_coloring, "position " + std::to_string(i + 1) + " has color " +
                                                    std::to_string(colors_[i]) + " outside 1.." +
                                                    std::to_string(palette_));
}

Color Coloring::at(const Integer& x) const
{
    if (!contains(x))
        throw Error(Errc::incomplete_coloring,
                    "value " + x.get_str() + " is outside the colored interval [1, " +
                        std::to_string(colors_.size()) + "]");
    return colors_[x.get_ui() - 1];
}

Coloring read_coloring(std::istream& in)
{
    std::vector<long long> numbers;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
                numbers.push_back(v);
            } catch (const std::exception&) {
                throw Error(Errc::parse, "coloring file: malformed token '" + tok + "'");
            }
        }
    }
    if (numbers.size() < 2)
        throw Error(Errc::parse, "coloring file: missing 'N r' header");
    long long n = numbers[0];
    long long r = numbers[1];
    if (n < 0 || r < 1)
        throw Error(Errc::parse, "coloring file: bad header");
    if (static_cast<long long>(numbers.size()) - 2 != n)
        throw Error(Errc::parse, "coloring file: header says " + std::to_string(n) +
                                     " colors, found " + std::to_string(numbers.size() - 2));
    std::vector<Color> colors;
    colors.reserve(n);
    for (std::size_t i = 2; i < numbers.size(); ++i)
        colors.push_back(static_cast<Color>(numbers[i]));
    return Coloring(static_cast<int>(r), std::move(colors));
}

Coloring read_coloring_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::parse, "cannot open coloring file '" + path + "'");
    return read_coloring(in);
}

void write_coloring(std::ostream& out, const Coloring& col)
{
    out << col.length() << ' ' << col.palette() << '\n';
    for (std::size_t i = 0; i < col.length(); ++i)
        out << (i ? " " : "") << col.colors()[i];
    out << '\n';
}

Coloring parity_coloring(std::size_t n)
{
    std::vector<Color> c(n);
    for (std::size_t x = 1; x <= n; ++x)
        c[x - 1] = x % 2 == 1 ? 1 : 2;
    return Coloring(2, std::move(c));
}

Coloring permute_colors(const Coloring& col, std::span<const Color> perm)
{
    const auto r = static_cast<std::size_t>(col.palette());
    if (perm.size() != r)
        throw Error(Errc::precondition, "permutation must have one image per color");
    std::vector<bool> seen(r + 1, false);
    for (Color c : perm) {
        if (c < 1 || c > col.palette() || seen[c])
            throw Error(Errc::precondition, "color map is not a bijection on the palette");
        seen[c] = true;
    }
    std::vector<Color> out(col.colors().begin(), col.colors().end());
    for (auto& c : out)
        c = perm[c - 1];
    return Coloring(col.palette(), std::move(out));
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return -floor_div(-a, b);
}

} // namespace

void for_each_solution(const Equation& eq, std::int64_t lo, std::int64_t hi,
                       std::span<const Row> ineqs,
                       const std::function<bool(std::span<const std::int64_t>)>& visit)
{
    if (lo > hi)
        return;
    const std::size_t n = eq.arity();
    const std::int64_t magnitude = std::max(std::abs(lo), std::abs(hi));
    const auto a = detail::to_small_row(eq.coeffs(), magnitude, "equation");
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(ineqs.size());
    for (const auto& row : ineqs) {
        if (row.size() != n)
            throw Error(Errc::arity_mismatch, "inequality row has " + std::to_string(row.size()) +
                                                  " entries, equation has " + std::to_string(n));
        rows.push_back(detail::to_small_row(row, magnitude, "inequality row"));
    }

    // Range of sum_{j >= i} a_j x_j over the box.
    std::vector<std::int64_t> rem_min(n + 1, 0), rem_max(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        std::int64_t u = a[i] * lo, v = a[i] * hi;
        rem_min[i] = rem_min[i + 1] + std::min(u, v);
        rem_max[i] = rem_max[i + 1] + std::max(u, v);
    }

    std::vector<std::int64_t> x(n);
    bool stop = false;

    auto satisfies_rows = [&]() {
        for (const auto& row : rows) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < n; ++i)
                s += row[i] * x[i];
            if (s == 0)
                return false;
        }
        return true;
    };

    auto recurse = [&](auto&& self, std::size_t i, std::int64_t partial) -> void {
        if (i == n - 1) {
            std::int64_t num = -partial;
            if (num % a[i] != 0)
                return;
            std::int64_t last = num / a[i];
            if (last < lo || last > hi)
                return;
            x[i] = last;
            if (satisfies_rows() && !visit(x))
                stop = true;
            return;
        }
        // Need partial + a_i v + rest = 0 with rest in [rem_min, rem_max].
        std::int64_t want_lo = -partial - rem_max[i + 1];
        std::int64_t want_hi = -partial - rem_min[i + 1];
        std::int64_t v_lo, v_hi;
        if (a[i] > 0) {
            v_lo = ceil_div(want_lo, a[i]);
            v_hi = floor_div(want_hi, a[i]);
        } else {
            v_lo = ceil_div(want_hi, a[i]);
            v_hi = floor_div(want_lo, a[i]);
        }
        v_lo = std::max(v_lo, lo);
        v_hi = std::min(v_hi, hi);
        for (std::int64_t v = v_lo; v <= v_hi && !stop; ++v) {
            x[i] = v;
            self(self, i + 1, partial + a[i] * v);
        }
    };
    recurse(recurse, 0, 0);
}

std::vector<SolutionTuple> enumerate_solutions(const Equation& eq, std::int64_t n,
                                               std::span<const Row> ineqs)
{
    std::vector<SolutionTuple> out;
    for_each_solution(eq, 1, n, ineqs, [&](std::span<const std::int64_t> x) {
        std::vector<Integer> v;
        v.reserve(x.size());
        for (auto xi : x)
            v.emplace_back(static_cast<long>(xi));
        out.emplace_back(std::move(v));
        return true;
    });
    return out;
}

VerifyOutcome verify_coloring(const Equation& eq, const Coloring& col, std::span<const Row> ineqs)
{
    VerifyOutcome outcome;
    const auto n = static_cast<std::int64_t>(col.length());
    for_each_solution(eq, 1, n, ineqs, [&](std::span<const std::int64_t> x) {
        Color c = col(static_cast<std::size_t>(x[0]));
        for (auto xi : x)
            if (col(static_cast<std::size_t>(xi)) != c)
                return true;
        std::vector<Integer> v;
        for (auto xi : x)
            v.emplace_back(static_cast<long>(xi));
        outcome = Counterexample{SolutionTuple(std::move(v)), c};
        return false;
    });
    return outcome;
}

} // namespace rado
