#pragma once

// Exact arithmetic and single-equation algebra: canonical equations, the
// Rado subset-sum condition, forbidden ratios and the Alexeev-Tsimerman
// family.
//
// Indices in this API are 0-based. Text and JSON surfaces print them 1-based.

#include <rado/error.hpp>

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rado {

using Integer = mpz_class;

/// Exact rational, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(const Integer& value) : q_(value) {}
    Rational(const Integer& num, const Integer& den);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_positive() const { return sign() > 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const { return from_mpq(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational from_mpq(mpq_class q) { Rational r; r.q_ = std::move(q); return r; }
    mpq_class q_;
};

/// Parses "p" or "p/q" (optional sign, surrounding whitespace ignored).
Rational parse_rational(std::string_view text);

/// Parses a comma-separated list of rationals, e.g. "-7/3, 2, 4/3".
std::vector<Rational> parse_rational_list(std::string_view text);

using Row = std::vector<Integer>;

/// Parses a comma-separated list of integers, e.g. "1,-1,0".
Row parse_integer_row(std::string_view text);

std::string join(std::span<const Integer> values, std::string_view sep = ",");
std::string join(std::span<const Rational> values, std::string_view sep = ",");

/// A single linear homogeneous equation a_1 x_1 + ... + a_n x_n = 0 in
/// canonical form: n >= 2, all coefficients nonzero, primitive, first
/// coefficient positive. Only constructible through normalize().
class Equation {
public:
    std::size_t arity() const { return coeffs_.size(); }
    const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
    std::span<const Integer> coeffs() const { return coeffs_; }

    Integer coefficient_sum() const;
    Integer abs_coefficient_sum() const;

    std::string str() const { return join(coeffs_); }

    friend bool operator==(const Equation&, const Equation&) = default;

    friend Equation normalize(std::span<const Rational> raw);

private:
    explicit Equation(std::vector<Integer> c) : coeffs_(std::move(c)) {}
    std::vector<Integer> coeffs_;
};

Equation normalize(std::span<const Rational> raw);
Equation normalize(std::span<const Integer> raw);
Equation make_equation(std::initializer_list<long> raw);
Equation parse_equation(std::string_view text);

/// A tuple of positive integers (x_1, ..., x_n).
class SolutionTuple {
public:
    explicit SolutionTuple(std::vector<Integer> values);
    SolutionTuple(std::initializer_list<long> values);

    std::size_t size() const { return values_.size(); }
    const Integer& operator[](std::size_t i) const { return values_[i]; }
    std::span<const Integer> values() const { return values_; }

    SolutionTuple scaled(const Integer& factor) const;
    std::string str() const { return join(values_); }

    friend bool operator==(const SolutionTuple&, const SolutionTuple&) = default;
    friend std::ostream& operator<<(std::ostream& os, const SolutionTuple& t) {
        return os << '(' << t.str() << ')';
    }

private:
    std::vector<Integer> values_;
};

/// Index subset of coefficients summing to zero, or nullopt if none exists.
/// Subset-sum over reachable sums, so cost is bounded by the number of
/// distinct partial sums rather than 2^n.
std::optional<std::vector<std::size_t>> rado_subset(const Equation& eq);

/// Rado's criterion: some nonempty index subset of coefficients sums to 0.
bool rado_regular(const Equation& eq);

/// S_l = -((sum a_i) - a_l) / a_l for every l, in index order.
std::vector<Rational> forbidden_ratios(const Equation& eq);

/// x_i = y for i != l and x_l = S_l * y.
SolutionTuple forbidden_ratio_solution(const Equation& eq, std::size_t l, const Integer& y);

bool check_solution(const Equation& eq, const SolutionTuple& t);

/// Integer dot product of a row with a tuple; throws on arity mismatch.
Integer evaluate_row(std::span<const Integer> row, std::span<const Integer> values);

/// The Alexeev-Tsimerman equation on n variables, normalized.
Equation at_family(std::size_t n);

/// True iff row = q * coefficients for some nonzero rational q.
bool is_multiple_of(std::span<const Integer> row, const Equation& eq);

} // namespace rado
