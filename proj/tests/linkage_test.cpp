#include <rado/linkage.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace rado;

namespace {

Rational frac(long p, long q = 1)
{
    return Rational(Integer(p), Integer(q));
}

std::vector<Rational> row(std::initializer_list<Rational> v)
{
    return std::vector<Rational>(v);
}

Errc error_code(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::schema;
}

std::optional<std::vector<Rational>> oracle_row(const Equation& eq, std::size_t m)
{
    oracle::Vec a;
    for (const auto& c : eq.coeffs())
        a.push_back(c.get_si());
    auto r = oracle::least_linkage_row(a, m);
    if (!r)
        return std::nullopt;
    std::vector<Rational> out;
    for (auto f : *r)
        out.push_back(frac(f.p, f.q));
    return out;
}

std::size_t oracle_max(const Equation& eq, std::size_t cap)
{
    std::size_t best = 0;
    for (std::size_t m = 1; m <= cap; ++m)
        if (oracle_row(eq, m))
            best = m;
    return best;
}

} // namespace

TEST_CASE("linkage_check")
{
    const auto set = row({frac(10, 7), frac(1, 2), frac(1, 4)});
    CHECK(linkage_check(row({frac(1, 2), frac(1, 4)}), set));
    CHECK_FALSE(linkage_check(row({frac(1, 2), frac(10, 7)}), set));
    CHECK(linkage_check(row({frac(2)}), row({frac(2)})));
}

TEST_CASE("build_matrix")
{
    auto eq = make_equation({7, -6, -4});
    LinkageMatrix mat = build_matrix(eq, row({frac(1, 2), frac(1, 4)}));
    REQUIRE(mat.size() == 2);
    CHECK(mat.entry(0, 0) == frac(1, 2));
    CHECK(mat.entry(0, 1) == frac(1, 4));
    CHECK(mat.entry(1, 1) == frac(1, 2));
    CHECK(mat.ratio_index(0, 0) == 1);
    CHECK(mat.ratio_index(0, 1) == 2);
    CHECK(mat.ratio_index(1, 1) == 1);

    LinkageMatrix schur = build_matrix(make_equation({1, 1, -1}), row({frac(2)}));
    CHECK(schur.size() == 1);
    CHECK(schur.entry(0, 0) == frac(2));
    CHECK(schur.ratio_index(0, 0) == 2);

    CHECK(error_code([&] { build_matrix(eq, row({frac(1, 2), frac(1, 8)})); }) == Errc::not_a_ratio);
    CHECK(error_code([&] { build_matrix(eq, row({frac(1, 4), frac(1, 2)})); }) == Errc::not_linked);
}

TEST_CASE("linkage_search")
{
    auto eq = make_equation({7, -6, -4});
    auto two = linkage_search(eq, 2);
    REQUIRE(two);
    CHECK(two->first_row() == row({frac(1, 2), frac(1, 4)}));
    CHECK_FALSE(linkage_search(eq, 3));

    for (std::size_t n = 3; n <= 6; ++n) {
        auto mat = linkage_search(at_family(n), n - 1);
        REQUIRE(mat);
        std::vector<Rational> expected;
        for (std::size_t i = 1; i < n; ++i)
            expected.emplace_back(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(i));
        CHECK(mat->first_row() == expected);
    }
    CHECK(error_code([&] { linkage_search(eq, 0); }) == Errc::precondition);
}

TEST_CASE("max_linkage against the exhaustive oracle")
{
    // Frozen from oracle::least_linkage_row over the full product of rows.
    CHECK(oracle_max(make_equation({7, -6, -4}), 5) == 2);
    CHECK(oracle_max(make_equation({1, 1, -1}), 5) == 1);
    CHECK(oracle_max(make_equation({1, -2}), 5) == 1);

    CHECK(max_linkage(make_equation({7, -6, -4}), 5) == 2);
    CHECK(max_linkage(make_equation({1, 1, -1}), 5) == 1);
    CHECK(max_linkage(make_equation({1, -2}), 5) == 1);
    // No positive ratio other than 1.
    CHECK(max_linkage(make_equation({1, -1}), 5) == 0);
}

TEST_CASE("linkage_search matches the oracle on small equations")
{
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            for (long c = -4; c <= 4; ++c) {
                if (a == 0 || b == 0 || c == 0)
                    continue;
                Equation eq = make_equation({a, b, c});
                for (std::size_t m = 1; m <= 3; ++m) {
                    auto got = linkage_search(eq, m);
                    auto want = oracle_row(eq, m);
                    REQUIRE(got.has_value() == want.has_value());
                    if (got)
                        CHECK(got->first_row() == *want);
                }
            }
}

TEST_CASE("linkage_search is independent of thread count, monotone and scale invariant")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-12, 12), arity(2, 5), scale(2, 6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Integer> raw;
        long n = arity(rng);
        while (static_cast<long>(raw.size()) < n)
            if (long v = coef(rng); v != 0)
                raw.emplace_back(v);
        Equation eq = normalize(std::span<const Integer>(raw));
        std::vector<Integer> scaled = raw;
        long k = scale(rng);
        for (auto& v : scaled)
            v *= -k;
        Equation eq2 = normalize(std::span<const Integer>(scaled));

        bool failed_before = false;
        for (std::size_t m = 1; m <= 4; ++m) {
            auto a = linkage_search(eq, m);
            auto b = linkage_search(eq, m, LinkageOptions{4});
            auto c = linkage_search(eq2, m);
            REQUIRE(a.has_value() == b.has_value());
            REQUIRE(a.has_value() == c.has_value());
            if (a) {
                CHECK(a->first_row() == b->first_row());
                CHECK(a->first_row() == c->first_row());
                // Rebuilding from row 1 reproduces the matrix.
                auto rebuilt = build_matrix(eq, a->first_row());
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = i; j < m; ++j)
                        CHECK(rebuilt.entry(i, j) == a->entry(i, j));
                // Prefixes of a valid row are valid.
                CHECK_FALSE(failed_before);
                for (std::size_t k = 1; k < m; ++k) {
                    auto shorter = linkage_search(eq, k);
                    REQUIRE(shorter);
                }
            }
            failed_before = failed_before || !a;
        }
    }
}

TEST_CASE("integrality_base")
{
    auto eq = make_equation({7, -6, -4});
    CHECK(integrality_base(build_matrix(eq, row({frac(1, 2), frac(1, 4)}))) == 4);
    CHECK(integrality_base(build_matrix(make_equation({1, 1, -1}), row({frac(2)}))) == 1);
    CHECK(integrality_base(build_matrix(at_family(4), row({frac(1, 2), frac(1, 4), frac(1, 8)}))) == 8);
}

TEST_CASE("linkage_walk")
{
    auto schur = make_equation({1, 1, -1});
    auto one = build_matrix(schur, row({frac(2)}));
    WalkResult w = linkage_walk(schur, one, Coloring(1, {1, 1}), 1);
    CHECK(w.u == 1);
    CHECK(w.v == 2);
    CHECK(w.solution == SolutionTuple{1, 1, 2});
    CHECK(w.color == 1);

    auto eq = make_equation({7, -6, -4});
    auto mat = build_matrix(eq, row({frac(1, 2), frac(1, 4)}));

    // Values 4, 2, 1 colored c(1), c(2), c(4).
    w = linkage_walk(eq, mat, Coloring(2, {1, 2, 2, 1}), 4);
    CHECK(w.u == 4);
    CHECK(w.v == 1);
    CHECK(w.row == 0);
    CHECK(w.col == 1);
    CHECK(w.ratio_l == 2);
    CHECK(w.solution == SolutionTuple{4, 4, 1});

    w = linkage_walk(eq, mat, Coloring(2, {2, 1, 2, 1}), 4);
    CHECK(w.u == 4);
    CHECK(w.v == 2);
    CHECK(w.ratio_l == 1);
    CHECK(w.solution == SolutionTuple{4, 2, 4});

    // Pair (2, 1) lives below the first row.
    w = linkage_walk(eq, mat, Coloring(2, {2, 2, 1, 1}), 4);
    CHECK(w.u == 2);
    CHECK(w.v == 1);
    CHECK(w.row == 1);
    CHECK(w.col == 1);
    CHECK(w.solution == SolutionTuple{2, 1, 2});

    CHECK(error_code([&] { linkage_walk(eq, mat, Coloring(3, {1, 2, 3, 1}), 4); }) == Errc::precondition);
    CHECK(error_code([&] { linkage_walk(eq, mat, Coloring(2, {1, 2, 2, 1}), 2); }) == Errc::precondition);
    CHECK(error_code([&] { linkage_walk(eq, mat, Coloring(2, {1, 2}), 4); }) == Errc::incomplete_coloring);
}
