#include <rado/algebra.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace rado {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::invalid_equation: return "invalid-equation";
    case Errc::arity_mismatch: return "arity-mismatch";
    case Errc::not_integral: return "not-integral";
    case Errc::nonpositive_ratio: return "nonpositive-ratio";
    case Errc::not_linked: return "not-linked";
    case Errc::not_a_ratio: return "not-a-ratio";
    case Errc::incomplete_coloring: return "incomplete-coloring";
    case Errc::invalid_coloring: return "invalid-coloring";
    case Errc::precondition: return "precondition";
    case Errc::infeasible: return "infeasible";
    case Errc::parse: return "parse";
    case Errc::schema: return "schema";
    }
    return "unknown";
}

Rational::Rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error(Errc::precondition, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw Error(Errc::precondition, "division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const
{
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view text, std::string_view whole)
{
    text = trim(text);
    std::string digits;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-')
            digits += '-';
        ++i;
    }
    std::size_t start = i;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(Errc::parse, "malformed number '" + std::string(whole) + "'");
        digits += c;
    }
    if (i == start || digits.empty() || digits == "-")
        throw Error(Errc::parse, "malformed number '" + std::string(whole) + "'");
    return Integer(digits, 10);
}

std::vector<std::string_view> split_commas(std::string_view text)
{
    std::vector<std::string_view> parts;
    if (trim(text).empty())
        return parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        parts.push_back(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return parts;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw Error(Errc::parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::vector<Rational> parse_rational_list(std::string_view text)
{
    std::vector<Rational> out;
    for (auto part : split_commas(text))
        out.push_back(parse_rational(part));
    return out;
}

Row parse_integer_row(std::string_view text)
{
    Row out;
    for (auto part : split_commas(text))
        out.push_back(parse_integer(part, part));
    return out;
}

std::string join(std::span<const Integer> values, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += values[i].get_str();
    }
    return out;
}

std::string join(std::span<const Rational> values, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += values[i].str();
    }
    return out;
}

Integer Equation::coefficient_sum() const
{
    Integer s = 0;
    for (const auto& a : coeffs_)
        s += a;
    return s;
}

Integer Equation::abs_coefficient_sum() const
{
    Integer s = 0;
    for (const auto& a : coeffs_)
        s += abs(a);
    return s;
}

Equation normalize(std::span<const Rational> raw)
{
    if (raw.size() < 2)
        throw Error(Errc::invalid_equation, "an equation needs at least two coefficients");
    Integer common_den = 1;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].is_zero())
            throw Error(Errc::invalid_equation,
                        "coefficient " + std::to_string(i + 1) + " is zero");
        Integer d = raw[i].denominator();
        mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> ints;
    ints.reserve(raw.size());
    Integer g = 0;
    for (const auto& r : raw) {
        Integer v = r.numerator() * (common_den / r.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (ints.front() < 0)
        g = -g;
    for (auto& v : ints)
        v /= g;
    return Equation(std::move(ints));
}

Equation normalize(std::span<const Integer> raw)
{
    std::vector<Rational> r(raw.begin(), raw.end());
    return normalize(std::span<const Rational>(r));
}

Equation make_equation(std::initializer_list<long> raw)
{
    std::vector<Rational> r(raw.begin(), raw.end());
    return normalize(std::span<const Rational>(r));
}

Equation parse_equation(std::string_view text)
{
    auto raw = parse_rational_list(text);
    return normalize(std::span<const Rational>(raw));
}

SolutionTuple::SolutionTuple(std::vector<Integer> values) : values_(std::move(values))
{
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] < 1)
            throw Error(Errc::precondition,
                        "solution entry " + std::to_string(i + 1) + " is not a positive integer");
}

SolutionTuple::SolutionTuple(std::initializer_list<long> values)
    : SolutionTuple(std::vector<Integer>(values.begin(), values.end()))
{
}

SolutionTuple SolutionTuple::scaled(const Integer& factor) const
{
    std::vector<Integer> v = values_;
    for (auto& x : v)
        x *= factor;
    return SolutionTuple(std::move(v));
}

std::optional<std::vector<std::size_t>> rado_subset(const Equation& eq)
{
    struct Node {
        std::optional<Integer> prev;
        std::size_t item;
    };
    std::map<Integer, Node> reached;

    auto reconstruct = [&](const Integer& zero_sum) {
        std::vector<std::size_t> subset;
        std::optional<Integer> cur = zero_sum;
        while (cur) {
            const Node& node = reached.at(*cur);
            subset.push_back(node.item);
            cur = node.prev;
        }
        std::sort(subset.begin(), subset.end());
        return subset;
    };

    for (std::size_t i = 0; i < eq.arity(); ++i) {
        const Integer& a = eq[i];
        std::vector<Integer> before;
        before.reserve(reached.size());
        for (const auto& [sum, node] : reached)
            before.push_back(sum);

        reached.try_emplace(a, Node{std::nullopt, i});
        for (const auto& s : before) {
            Integer t = s + a;
            auto [it, inserted] = reached.try_emplace(t, Node{s, i});
            if (inserted && t == 0)
                return reconstruct(t);
        }
    }
    return std::nullopt;
}

bool rado_regular(const Equation& eq)
{
    return rado_subset(eq).has_value();
}

std::vector<Rational> forbidden_ratios(const Equation& eq)
{
    Integer total = eq.coefficient_sum();
    std::vector<Rational> out;
    out.reserve(eq.arity());
    for (const auto& a : eq.coeffs())
        out.emplace_back(-(total - a), a);
    return out;
}

SolutionTuple forbidden_ratio_solution(const Equation& eq, std::size_t l, const Integer& y)
{
    if (l >= eq.arity())
        throw Error(Errc::arity_mismatch, "ratio index out of range");
    if (y < 1)
        throw Error(Errc::precondition, "base value must be a positive integer");
    Rational ratio = forbidden_ratios(eq)[l];
    if (!ratio.is_positive())
        throw Error(Errc::nonpositive_ratio,
                    "S_" + std::to_string(l + 1) + " = " + ratio.str() + " is not positive");
    Rational pivot = ratio * Rational(y);
    if (!pivot.is_integer())
        throw Error(Errc::not_integral,
                    "S_" + std::to_string(l + 1) + " * " + y.get_str() + " = " + pivot.str() +
                        " is not an integer");
    std::vector<Integer> values(eq.arity(), y);
    values[l] = pivot.numerator();
    return SolutionTuple(std::move(values));
}

Integer evaluate_row(std::span<const Integer> row, std::span<const Integer> values)
{
    if (row.size() != values.size())
        throw Error(Errc::arity_mismatch, "expected " + std::to_string(row.size()) +
                                              " values, got " + std::to_string(values.size()));
    Integer s = 0;
    for (std::size_t i = 0; i < row.size(); ++i)
        s += row[i] * values[i];
    return s;
}

bool check_solution(const Equation& eq, const SolutionTuple& t)
{
    return evaluate_row(eq.coeffs(), t.values()) == 0;
}

Equation at_family(std::size_t n)
{
    if (n < 2)
        throw Error(Errc::invalid_equation, "the family is defined for n >= 2");
    std::vector<Rational> raw(n);
    Rational first = 1;
    for (std::size_t i = 1; i < n; ++i) {
        Integer p = 1;
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), i);
        Rational term(p, p - 1);
        first -= term;
        raw[i] = term;
    }
    raw[0] = first;
    return normalize(std::span<const Rational>(raw));
}

bool is_multiple_of(std::span<const Integer> row, const Equation& eq)
{
    if (row.size() != eq.arity())
        throw Error(Errc::arity_mismatch, "row has " + std::to_string(row.size()) +
                                              " entries, equation has " +
                                              std::to_string(eq.arity()));
    if (row[0] == 0)
        return false;
    for (std::size_t i = 1; i < row.size(); ++i)
        if (row[i] * eq[0] != eq[i] * row[0])
            return false;
    return true;
}

} // namespace rado
