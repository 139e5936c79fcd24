#include <rado/coloring.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace rado;

namespace {

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

oracle::Vec small(const Equation& eq)
{
    oracle::Vec a;
    for (const auto& c : eq.coeffs())
        a.push_back(c.get_si());
    return a;
}

std::vector<oracle::Vec> small_rows(std::span<const Row> rows)
{
    std::vector<oracle::Vec> out;
    for (const auto& r : rows) {
        oracle::Vec v;
        for (const auto& c : r)
            v.push_back(c.get_si());
        out.push_back(v);
    }
    return out;
}

std::vector<Color> colors_of(const Coloring& c)
{
    return {c.colors().begin(), c.colors().end()};
}

Equation random_equation(std::mt19937_64& rng, long n_max, long coef_max)
{
    std::uniform_int_distribution<long> coef(-coef_max, coef_max), arity(2, n_max);
    std::vector<Integer> raw;
    long n = arity(rng);
    while (static_cast<long>(raw.size()) < n)
        if (long v = coef(rng); v != 0)
            raw.emplace_back(v);
    return normalize(std::span<const Integer>(raw));
}

const Row x1_ne_x2{1, -1, 0};

} // namespace

TEST_CASE("enumerate_solutions")
{
    auto schur = make_equation({1, 1, -1});
    auto sols = enumerate_solutions(schur, 3);
    CHECK(sols == std::vector<SolutionTuple>{{1, 1, 2}, {1, 2, 3}, {2, 1, 3}});

    std::vector<Row> rows{x1_ne_x2};
    CHECK(enumerate_solutions(schur, 3, rows) == std::vector<SolutionTuple>{{1, 2, 3}, {2, 1, 3}});

    CHECK(enumerate_solutions(make_equation({1, 1, -3}), 2) == std::vector<SolutionTuple>{{1, 2, 1}, {2, 1, 1}});
    CHECK(enumerate_solutions(make_equation({1, 1, -3}), 1).empty());
}

TEST_CASE("enumerate_solutions matches n-fold enumeration")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        Equation eq = random_equation(rng, 4, 6);
        const long n = eq.arity() == 4 ? 12 : 30;
        std::vector<Row> rows;
        if (trial % 3 == 0) {
            Row r(eq.arity(), 0);
            r[0] = 1;
            r[1] = -1;
            if (!is_multiple_of(r, eq))
                rows.push_back(r);
        }
        auto got = enumerate_solutions(eq, n, rows);
        auto want = oracle::solutions(small(eq), n, small_rows(rows));
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i)
            for (std::size_t k = 0; k < eq.arity(); ++k)
                CHECK(got[i][k] == want[i][k]);
    }
}

TEST_CASE("verify_coloring")
{
    auto schur = make_equation({1, 1, -1});
    auto outcome = verify_coloring(schur, parity_coloring(10));
    auto* ce = std::get_if<Counterexample>(&outcome);
    REQUIRE(ce);
    CHECK(ce->tuple == SolutionTuple{2, 2, 4});
    CHECK(ce->color == 2);

    CHECK(is_valid(verify_coloring(schur, Coloring(2, {1, 2, 2, 1}))));

    std::vector<Row> rows{x1_ne_x2};
    CHECK(is_valid(verify_coloring(schur, Coloring(1, {1, 1}), rows)));
    CHECK_FALSE(is_valid(verify_coloring(schur, Coloring(1, {1, 1}))));
}

TEST_CASE("search_coloring")
{
    auto schur = make_equation({1, 1, -1});
    auto c = search_coloring(schur, 2, 4);
    REQUIRE(c);
    CHECK(colors_of(*c) == std::vector<Color>{1, 2, 2, 1});
    CHECK_FALSE(search_coloring(schur, 2, 5));
    CHECK_FALSE(search_coloring(schur, 1, 2));
    CHECK(error_code([&] { search_coloring(schur, 0, 2); }) == Errc::precondition);
}

TEST_CASE("rado_radius")
{
    auto schur = make_equation({1, 1, -1});
    auto r1 = rado_radius(schur, 1, 10);
    CHECK(r1.found);
    CHECK(r1.value == 2);
    CHECK(colors_of(r1.witness) == std::vector<Color>{1});

    auto r2 = rado_radius(schur, 2, 10);
    CHECK(r2.found);
    CHECK(r2.value == 5);
    CHECK(colors_of(r2.witness) == std::vector<Color>{1, 2, 2, 1});

    // x + y = 3z is not regular but is 2-regular.
    auto a = small(make_equation({1, 1, -3}));
    REQUIRE(oracle::radius(a, 2, 12) == std::optional<std::size_t>(9));
    auto r3 = rado_radius(make_equation({1, 1, -3}), 2, 50);
    CHECK(r3.found);
    CHECK(r3.value == 9);

    auto none = rado_radius(make_equation({1, -2}), 2, 50);
    CHECK_FALSE(none.found);
    CHECK(none.value == 50);
    CHECK(none.witness.length() == 50);
    CHECK(is_valid(verify_coloring(make_equation({1, -2}), none.witness)));

    // x = y is solved by every constant tuple.
    auto trivial = rado_radius(make_equation({1, -1}), 3, 5);
    CHECK(trivial.found);
    CHECK(trivial.value == 1);
    CHECK(trivial.witness.length() == 0);
}

TEST_CASE("permute_colors")
{
    CHECK(colors_of(permute_colors(Coloring(2, {1, 2, 2, 1}), std::vector<Color>{2, 1})) ==
          std::vector<Color>{2, 1, 1, 2});
    Coloring c(3, {3, 1, 2, 2});
    CHECK(permute_colors(c, std::vector<Color>{1, 2, 3}) == c);
    Coloring d(2, {1, 2, 1});
    auto swap = std::vector<Color>{2, 1};
    CHECK(permute_colors(permute_colors(d, swap), swap) == d);
    CHECK(error_code([&] { permute_colors(d, std::vector<Color>{1, 1}); }) == Errc::precondition);
}

TEST_CASE("coloring file format")
{
    std::istringstream in("# Schur witness\n4 2\n1 2 2 1\n");
    Coloring c = read_coloring(in);
    CHECK(c.palette() == 2);
    CHECK(colors_of(c) == std::vector<Color>{1, 2, 2, 1});

    std::ostringstream out;
    write_coloring(out, c);
    CHECK(out.str() == "4 2\n1 2 2 1\n");

    std::istringstream short_body("3 2\n1 2\n");
    CHECK(error_code([&] { read_coloring(short_body); }) == Errc::parse);
    std::istringstream bad_color("2 2\n1 3\n");
    CHECK(error_code([&] { read_coloring(bad_color); }) == Errc::invalid_coloring);
    std::istringstream junk("2 2\n1 x\n");
    CHECK(error_code([&] { read_coloring(junk); }) == Errc::parse);
}

TEST_CASE("search agrees with exhaustive enumeration for N <= 12, r <= 3")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> pal(1, 3);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    for (int trial = 0; trial < 60; ++trial) {
        Equation eq = random_equation(rng, 3, 4);
        int r = pal(rng);
        std::size_t n = len(rng);
        if (r == 3)
            n = std::min<std::size_t>(n, 10);
        std::vector<Row> rows;
        if (trial % 2 == 0 && eq.arity() == 3 && !is_multiple_of(x1_ne_x2, eq))
            rows.push_back(x1_ne_x2);

        auto want = oracle::least_coloring(small(eq), r, n, small_rows(rows));
        auto got = search_coloring(eq, r, n, rows);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(colors_of(*got) == *want);
            CHECK(is_valid(verify_coloring(eq, *got, rows)));
        }
    }
}

TEST_CASE("radius boundary, pruning and symmetry")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        Equation eq = random_equation(rng, 3, 5);
        const int r = trial % 2 ? 2 : 3;
        auto res = rado_radius(eq, r, 20);
        auto unpruned = rado_radius(eq, r, 20, {}, SearchOptions{false});
        CHECK(res.found == unpruned.found);
        CHECK(res.value == unpruned.value);
        CHECK(res.witness == unpruned.witness);
        if (res.found && res.value >= 2) {
            CHECK(search_coloring(eq, r, res.value - 1).has_value());
            CHECK_FALSE(search_coloring(eq, r, res.value).has_value());
        }
        CHECK(is_valid(verify_coloring(eq, res.witness)));

        std::vector<Color> perm(r);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(is_valid(verify_coloring(eq, permute_colors(res.witness, perm))));
    }
}
