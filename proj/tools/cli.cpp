#include "cli.hpp"

#include <rado/algebra.hpp>
#include <rado/certificate.hpp>
#include <rado/coloring.hpp>
#include <rado/linkage.hpp>
#include <rado/strong.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#ifndef RADOLAB_VERSION
#define RADOLAB_VERSION "dev"
#endif

namespace rado::cli {

namespace {

struct Globals {
    bool json = false;
    bool seedless = false;
    unsigned threads = 1;
};

struct RowOptions {
    std::vector<std::string> ineqs;
    bool distinct = false;
};

void add_row_options(CLI::App* sub, RowOptions& rows, bool with_distinct = true)
{
    sub->add_option("--ineq", rows.ineqs, "Inequality row c1,...,cn meaning c.x != 0 (repeatable)");
    if (with_distinct)
        sub->add_flag("--distinct", rows.distinct, "Require pairwise distinct entries");
}

std::vector<Row> build_rows(const Equation& eq, const RowOptions& opts)
{
    std::vector<Row> rows;
    for (const auto& text : opts.ineqs)
        rows.push_back(parse_integer_row(text));
    if (opts.distinct)
        for (auto& r : distinct_rows(eq.arity()))
            rows.push_back(std::move(r));
    // Validates arity and proportionality; throws naming the row.
    InequalitySystem check(eq, rows);
    return rows;
}

std::string timestamp_now()
{
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::string indices_text(const std::vector<std::size_t>& idx)
{
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i)
        s += (i ? "," : "") + std::to_string(idx[i] + 1);
    return s + "}";
}

std::string colors_text(const Coloring& col)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < col.length(); ++i)
        os << (i ? " " : "") << col.colors()[i];
    return os.str();
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Degree-of-regularity toolkit for linear homogeneous equations", "rado"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "Emit a JSON certificate");
    app.add_flag("--seedless", g.seedless, "Deterministic output (no timestamp in certificates)");
    app.add_option("--threads", g.threads, "Worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber);

    std::string coeffs, file, coloring_file, row_text, x_text;
    int palette = 2;
    std::size_t n = 0, cap = 0, max_m = 0;
    RowOptions rows;

    auto* check_regular = app.add_subcommand("check-regular", "Rado's single-equation criterion");
    auto* ratios = app.add_subcommand("ratios", "Forbidden ratios S_l");
    auto* linkage = app.add_subcommand("linkage", "Largest linkage matrix (lower bound on degree of regularity)");
    auto* radius = app.add_subcommand("radius", "Least N with no solution-free coloring of [1, N]");
    auto* find = app.add_subcommand("find-coloring", "Least solution-free coloring of [1, N]");
    auto* verify = app.add_subcommand("verify-coloring", "Check a coloring file for monochromatic solutions");
    auto* family = app.add_subcommand("at-family", "Alexeev-Tsimerman equation on n variables");
    auto* solve = app.add_subcommand("solve", "Monochromatic solution avoiding inequality hyperplanes");
    auto* walk = app.add_subcommand("walk", "Pigeonhole walk along a linkage matrix");
    auto* verify_cert = app.add_subcommand("verify-cert", "Re-verify a JSON certificate");

    for (auto* sub : {check_regular, ratios, linkage, radius, find, verify, solve, walk})
        sub->add_option("--coeffs", coeffs, "Coefficients, e.g. 1,1,-1 or -7/3,2,4/3")->required();

    linkage->add_option("--max-m", max_m, "Largest matrix size to try")->required()->check(CLI::PositiveNumber);

    radius->add_option("-r", palette, "Number of colors")->required()->check(CLI::PositiveNumber);
    radius->add_option("--cap", cap, "Largest N to search")->required()->check(CLI::PositiveNumber);
    add_row_options(radius, rows);

    find->add_option("-r", palette, "Number of colors")->required()->check(CLI::PositiveNumber);
    find->add_option("-n", n, "Interval length N")->required()->check(CLI::PositiveNumber);
    add_row_options(find, rows);

    verify->add_option("--file", file, "Coloring file")->required();
    add_row_options(verify, rows);

    family->add_option("-n", n, "Number of variables (>= 2)")->required();

    solve->add_option("--coloring", coloring_file, "Coloring file")->required();
    add_row_options(solve, rows);

    walk->add_option("--row", row_text, "First row of the linkage matrix, e.g. 1/2,1/4")->required();
    walk->add_option("--coloring", coloring_file, "Coloring file covering the walk values")->required();
    walk->add_option("--x", x_text, "Base value (multiple of the integrality base)")->required();

    verify_cert->add_option("--file", file, "Certificate JSON file")->required();

    std::vector<std::string> argv(args.begin(), args.end());
    std::string command;
    for (std::size_t i = 0; i < argv.size(); ++i)
        command += (i ? " " : "") + argv[i];
    std::vector<const char*> cargv;
    for (const auto& a : argv)
        cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return affirmative;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    CertificateMeta meta{RADOLAB_VERSION, command, std::nullopt};
    if (!g.seedless)
        meta.timestamp = timestamp_now();

    auto emit = [&](const Equation& eq, std::string_view kind, Json payload) {
        out << make_certificate(eq, kind, std::move(payload), meta).dump(2) << '\n';
    };

    try {
        if (*verify_cert) {
            std::ifstream in(file);
            if (!in)
                throw Error(Errc::parse, "cannot open certificate file '" + file + "'");
            Json cert;
            try {
                cert = Json::parse(in);
            } catch (const nlohmann::json::exception& e) {
                throw Error(Errc::schema, std::string("invalid JSON: ") + e.what());
            }
            bool ok = verify_certificate(cert);
            out << (ok ? "verified" : "verification failed") << '\n';
            return ok ? affirmative : negative;
        }

        if (*family) {
            Equation eq = at_family(n);
            if (g.json)
                emit(eq, "ratios", ratios_payload(eq, n));
            else
                out << eq.str() << '\n';
            return affirmative;
        }

        Equation eq = parse_equation(coeffs);

        if (*check_regular) {
            auto subset = rado_subset(eq);
            if (g.json)
                emit(eq, "regularity", regularity_payload(eq));
            else if (subset)
                out << "regular (subset indices " << indices_text(*subset) << ")\n";
            else
                out << "not regular\n";
            return subset ? affirmative : negative;
        }

        if (*ratios) {
            if (g.json) {
                emit(eq, "ratios", ratios_payload(eq));
            } else {
                auto s = forbidden_ratios(eq);
                for (std::size_t l = 0; l < s.size(); ++l)
                    out << "S_" << l + 1 << " = " << s[l] << '\n';
            }
            return affirmative;
        }

        if (*linkage) {
            LinkageOptions lo{g.threads};
            std::size_t best = max_linkage(eq, max_m, lo);
            std::optional<LinkageMatrix> mat;
            if (best > 0)
                mat = linkage_search(eq, best, lo);
            if (g.json) {
                emit(eq, "linkage", linkage_payload(eq, max_m, mat));
            } else {
                out << "max m = " << best << " (cap " << max_m << ")\n";
                if (mat) {
                    out << "first row: " << join(mat->first_row()) << '\n';
                    for (std::size_t i = 0; i < mat->size(); ++i) {
                        out << "row " << i + 1 << ":";
                        for (std::size_t j = i; j < mat->size(); ++j)
                            out << ' ' << mat->entry(i, j) << " (S_" << mat->ratio_index(i, j) + 1 << ')';
                        out << '\n';
                    }
                }
            }
            return best > 0 ? affirmative : negative;
        }

        if (*radius) {
            auto r = build_rows(eq, rows);
            RadiusResult res = rado_radius(eq, palette, cap, r);
            if (g.json) {
                emit(eq, "radius", radius_payload(palette, cap, r, res));
            } else if (res.found) {
                out << "Radius(" << res.value << ")\n";
                out << "witness N=" << res.witness.length() << ": " << colors_text(res.witness) << '\n';
            } else {
                out << "Unknown(" << res.value << ")\n";
                out << "witness N=" << res.witness.length() << ": " << colors_text(res.witness) << '\n';
            }
            return res.found ? affirmative : unknown;
        }

        if (*find) {
            auto r = build_rows(eq, rows);
            auto col = search_coloring(eq, palette, n, r);
            if (g.json)
                emit(eq, "coloring", search_payload(palette, n, r, col));
            else if (col)
                write_coloring(out, *col);
            else
                out << "none\n";
            return col ? affirmative : negative;
        }

        if (*verify) {
            auto r = build_rows(eq, rows);
            Coloring col = read_coloring_file(file);
            auto outcome = verify_coloring(eq, col, r);
            if (g.json) {
                emit(eq, "coloring", verification_payload(col, r, outcome));
            } else if (const auto* ce = std::get_if<Counterexample>(&outcome)) {
                out << "counterexample " << ce->tuple << " color " << ce->color << '\n';
            } else {
                out << "valid\n";
            }
            return is_valid(outcome) ? affirmative : negative;
        }

        if (*solve) {
            auto r = build_rows(eq, rows);
            InequalitySystem system(eq, r);
            Coloring col = read_coloring_file(coloring_file);
            auto sol = strong_solve(eq, system, col, FamilyOptions{g.threads});
            if (g.json) {
                emit(eq, "solution", solution_payload(r, col, sol));
            } else if (sol) {
                out << "solution " << sol->tuple << " color " << sol->color << '\n';
                if (sol->family)
                    out << "via progression family base " << sol->family->base << " step "
                        << sol->family->step.get_str() << " half-length " << sol->family->half_length
                        << " shift (" << join(sol->shift) << ")\n";
                else
                    out << "via direct enumeration\n";
            } else {
                out << "none\n";
            }
            return sol ? affirmative : negative;
        }

        if (*walk) {
            auto row = parse_rational_list(row_text);
            LinkageMatrix mat = build_matrix(eq, row);
            Integer x = parse_rational(x_text).numerator();
            if (!parse_rational(x_text).is_integer())
                throw Error(Errc::parse, "--x must be an integer");
            Coloring col = read_coloring_file(coloring_file);
            WalkResult w = linkage_walk(eq, mat, col, x);
            if (g.json) {
                emit(eq, "walk", walk_payload(mat, x, col, w));
            } else {
                out << "pair (" << w.u.get_str() << "," << w.v.get_str() << ") at position ("
                    << w.row + 1 << "," << w.col + 1 << ") ratio S_" << w.ratio_l + 1 << " = "
                    << mat.entry(w.row, w.col) << '\n';
                out << "solution " << w.solution << " color " << w.color << '\n';
            }
            return affirmative;
        }
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace rado::cli
