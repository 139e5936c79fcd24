#include <rado/strong.hpp>

#include <algorithm>
#include <future>

namespace rado {

std::vector<Row> distinct_rows(std::size_t n)
{
    std::vector<Row> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Row r(n, 0);
            r[i] = 1;
            r[j] = -1;
            rows.push_back(std::move(r));
        }
    return rows;
}

InequalitySystem::InequalitySystem(const Equation& eq, std::vector<Row> rows) : rows_(std::move(rows))
{
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        const auto& row = rows_[j];
        const std::string name = "inequality row " + std::to_string(j + 1) + " (" + join(row) + ")";
        if (row.size() != eq.arity())
            throw Error(Errc::arity_mismatch, name + " has " + std::to_string(row.size()) +
                                                  " entries, equation has " +
                                                  std::to_string(eq.arity()));
        if (std::all_of(row.begin(), row.end(), [](const Integer& v) { return v == 0; }))
            throw Error(Errc::precondition, name + " is zero and can never be satisfied");
        if (is_multiple_of(row, eq))
            throw Error(Errc::precondition, name + " is a multiple of the equation");
    }
}

InequalitySystem InequalitySystem::distinct(const Equation& eq)
{
    return InequalitySystem(eq, distinct_rows(eq.arity()));
}

Integer progression_halflength(const Equation& eq, std::size_t k)
{
    Integer total = Integer(static_cast<unsigned long>(k + 1)) * eq.abs_coefficient_sum();
    Integer ceil_half = (total + 1) / 2;
    return 2 * ceil_half;
}

namespace {

// Advances digits (each in [lo, hi]) in lexicographic order, last digit
// fastest. Returns false after the last combination.
bool next_combination(std::vector<Integer>& digits, const Integer& lo, const Integer& hi)
{
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] < hi) {
            ++digits[i];
            return true;
        }
        digits[i] = lo;
    }
    return false;
}

constexpr unsigned long fallback_budget = 1ul << 24;

} // namespace

std::vector<Integer> find_shift_multipliers(const Equation& eq, const InequalitySystem& ineqs,
                                            const SolutionTuple& base, const Integer& step,
                                            const Integer& bound)
{
    const std::size_t n = eq.arity();
    if (base.size() != n)
        throw Error(Errc::arity_mismatch, "base tuple arity does not match the equation");
    if (!check_solution(eq, base))
        throw Error(Errc::precondition, "base tuple " + base.str() + " does not solve the equation");
    if (step < 1)
        throw Error(Errc::precondition, "step must be positive");

    // Row j holds at base + t * step iff step * (A_j . t) != -(A_j . x).
    std::vector<Integer> targets;
    for (const auto& row : ineqs.rows())
        targets.push_back(-evaluate_row(row, base.values()));

    const Integer& last = eq[n - 1];
    std::vector<Integer> shift(n);

    auto accept = [&](std::span<const Integer> head) {
        Integer partial = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (abs(head[i]) > bound)
                return false;
            shift[i] = head[i];
            partial += eq[i] * head[i];
        }
        if (partial % last != 0)
            return false;
        shift[n - 1] = -partial / last;
        if (abs(shift[n - 1]) > bound)
            return false;
        for (std::size_t j = 0; j < targets.size(); ++j)
            if (step * evaluate_row(ineqs.rows()[j], shift) == targets[j])
                return false;
        return true;
    };

    const Integer unit = abs(last);
    const Integer k1 = static_cast<unsigned long>(ineqs.size() + 1);
    std::vector<Integer> multipliers(n - 1, Integer(1));
    std::vector<Integer> head(n - 1);
    do {
        for (std::size_t i = 0; i + 1 < n; ++i)
            head[i] = multipliers[i] * unit;
        if (accept(head))
            return shift;
    } while (next_combination(multipliers, 1, k1));

    std::vector<Integer> box(n - 1, Integer(-bound));
    unsigned long tried = 0;
    do {
        if (accept(box))
            return shift;
        if (++tried >= fallback_budget)
            throw Error(Errc::infeasible, "shift search budget exhausted");
    } while (next_combination(box, -bound, bound));
    throw Error(Errc::infeasible, "no shift vector avoids every inequality within the bound");
}

SolutionTuple apply_shift(const SolutionTuple& base, const Integer& step, std::span<const Integer> shift)
{
    if (shift.size() != base.size())
        throw Error(Errc::arity_mismatch, "shift arity does not match the tuple");
    std::vector<Integer> out(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        out[i] = base[i] + shift[i] * step;
        if (out[i] < 1)
            throw Error(Errc::precondition, "shifted entry " + std::to_string(i + 1) + " = " +
                                                out[i].get_str() + " is not positive");
    }
    return SolutionTuple(std::move(out));
}

namespace {

std::optional<SolutionTuple> family_with_step(const Equation& eq, const Coloring& col,
                                              std::int64_t half, std::int64_t d)
{
    const auto n = static_cast<std::int64_t>(col.length());
    const std::int64_t lo = 1 + half * d;
    const std::int64_t hi = n - half * d;
    if (lo > hi)
        return std::nullopt;

    // steady[x]: x + t d has col(x) for every |t| <= half.
    std::vector<char> steady(static_cast<std::size_t>(n + 1), 0);
    for (std::int64_t x = lo; x <= hi; ++x) {
        const Color c = col(static_cast<std::size_t>(x));
        bool ok = true;
        for (std::int64_t t = -half; t <= half && ok; ++t)
            ok = col(static_cast<std::size_t>(x + t * d)) == c;
        steady[x] = ok;
    }

    std::optional<SolutionTuple> found;
    for_each_solution(eq, lo, hi, {}, [&](std::span<const std::int64_t> x) {
        const Color c = col(static_cast<std::size_t>(x[0]));
        for (auto xi : x)
            if (!steady[xi] || col(static_cast<std::size_t>(xi)) != c)
                return true;
        std::vector<Integer> v;
        for (auto xi : x)
            v.emplace_back(static_cast<long>(xi));
        found = SolutionTuple(std::move(v));
        return false;
    });
    return found;
}

} // namespace

std::optional<ProgressionFamily> find_progression_family(const Equation& eq, const Coloring& col,
                                                         std::size_t half_length,
                                                         FamilyOptions options)
{
    const auto n = static_cast<std::int64_t>(col.length());
    if (n == 0)
        return std::nullopt;
    const auto half = static_cast<std::int64_t>(half_length);
    if (half >= n)
        return std::nullopt;
    // With half = 0 the step never matters; report d = 1.
    const std::int64_t max_step = half == 0 ? 1 : (n - 1) / (2 * half);
    const std::int64_t workers = std::max<std::int64_t>(1, options.threads);

    for (std::int64_t first = 1; first <= max_step; first += workers) {
        const std::int64_t last = std::min(max_step, first + workers - 1);
        std::vector<std::optional<SolutionTuple>> hits(static_cast<std::size_t>(last - first + 1));
        if (workers == 1) {
            hits[0] = family_with_step(eq, col, half, first);
        } else {
            std::vector<std::future<std::optional<SolutionTuple>>> jobs;
            for (std::int64_t d = first; d <= last; ++d)
                jobs.push_back(std::async(std::launch::async, family_with_step, std::cref(eq),
                                          std::cref(col), half, d));
            for (std::size_t k = 0; k < jobs.size(); ++k)
                hits[k] = jobs[k].get();
        }
        for (std::size_t k = 0; k < hits.size(); ++k)
            if (hits[k])
                return ProgressionFamily{*hits[k], Integer(static_cast<long>(first + k)), half_length};
    }
    return std::nullopt;
}

std::optional<StrongSolution> strong_solve(const Equation& eq, const InequalitySystem& ineqs,
                                           const Coloring& col, FamilyOptions options)
{
    const Integer bound = progression_halflength(eq, ineqs.size());
    if (bound < static_cast<unsigned long>(col.length())) {
        auto family = find_progression_family(eq, col, bound.get_ui(), options);
        if (family) {
            auto shift = find_shift_multipliers(eq, ineqs, family->base, family->step, bound);
            SolutionTuple tuple = apply_shift(family->base, family->step, shift);
            Color c = col.at(tuple[0]);
            return StrongSolution{std::move(tuple), c, std::move(family), std::move(shift)};
        }
    }
    auto outcome = verify_coloring(eq, col, ineqs.rows());
    if (auto* ce = std::get_if<Counterexample>(&outcome))
        return StrongSolution{ce->tuple, ce->color, std::nullopt, {}};
    return std::nullopt;
}

ProductColoring product_coloring(const Coloring& col, std::size_t window)
{
    if (window < 1)
        throw Error(Errc::precondition, "window must be at least 1");
    ProductColoring out;
    out.window = window;
    const std::size_t domain = col.length() / window;
    out.classes.resize(domain);
    for (std::size_t alpha = 1; alpha <= domain; ++alpha) {
        auto& cls = out.classes[alpha - 1];
        cls.reserve(window);
        for (std::size_t i = 1; i <= window; ++i)
            cls.push_back(col(alpha * i));
    }
    return out;
}

namespace {

template <typename Classes>
std::optional<std::pair<std::size_t, std::size_t>> least_ap(const Classes& col, std::size_t length)
{
    if (length < 1)
        throw Error(Errc::precondition, "progression length must be at least 1");
    const std::size_t domain = col.length();
    if (domain == 0)
        return std::nullopt;
    if (length == 1)
        return std::pair<std::size_t, std::size_t>{1, 1};
    for (std::size_t a = 1; a <= domain; ++a) {
        for (std::size_t d = 1; a + (length - 1) * d <= domain; ++d) {
            bool same = true;
            for (std::size_t t = 1; t < length && same; ++t)
                same = col(a + t * d) == col(a);
            if (same)
                return std::pair<std::size_t, std::size_t>{a, d};
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_monochromatic_ap(const Coloring& col,
                                                                         std::size_t length)
{
    return least_ap(col, length);
}

std::optional<std::pair<std::size_t, std::size_t>> find_monochromatic_ap(const ProductColoring& col,
                                                                         std::size_t length)
{
    return least_ap(col, length);
}

} // namespace rado
