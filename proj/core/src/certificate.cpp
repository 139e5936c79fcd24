#include <rado/certificate.hpp>

#include <algorithm>
#include <set>

namespace rado {

namespace {

Json integers_to_json(std::span<const Integer> values)
{
    Json out = Json::array();
    for (const auto& v : values)
        out.push_back(v.get_str());
    return out;
}

Json rationals_to_json(std::span<const Rational> values)
{
    Json out = Json::array();
    for (const auto& v : values)
        out.push_back(v.str());
    return out;
}

Json rows_to_json(std::span<const Row> rows)
{
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back(integers_to_json(r));
    return out;
}

Integer integer_from_json(const Json& j)
{
    const auto& s = j.get_ref<const std::string&>();
    Rational q = parse_rational(s);
    if (!q.is_integer() || s.find('/') != std::string::npos)
        throw Error(Errc::schema, "expected an integer string, got '" + s + "'");
    return q.numerator();
}

std::vector<Integer> integers_from_json(const Json& j)
{
    std::vector<Integer> out;
    for (const auto& v : j)
        out.push_back(integer_from_json(v));
    return out;
}

std::vector<Rational> rationals_from_json(const Json& j)
{
    std::vector<Rational> out;
    for (const auto& v : j)
        out.push_back(parse_rational(v.get_ref<const std::string&>()));
    return out;
}

std::vector<Row> rows_from_json(const Json& j)
{
    std::vector<Row> out;
    for (const auto& r : j)
        out.push_back(integers_from_json(r));
    return out;
}

Json matrix_indices_to_json(const LinkageMatrix& mat)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < mat.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = i; j < mat.size(); ++j)
            row.push_back(mat.ratio_index(i, j) + 1);
        out.push_back(row);
    }
    return out;
}

bool rows_hold(std::span<const Row> rows, const SolutionTuple& t)
{
    for (const auto& r : rows)
        if (evaluate_row(r, t.values()) == 0)
            return false;
    return true;
}

bool monochromatic(const Coloring& col, const SolutionTuple& t, Color c)
{
    for (const auto& v : t.values())
        if (!col.contains(v) || col.at(v) != c)
            return false;
    return true;
}

bool verify_regularity(const Equation& eq, const Json& p)
{
    const bool regular = p.at("regular").get<bool>();
    if (regular != rado_regular(eq))
        return false;
    if (!regular)
        return p.at("subset").is_null();
    std::set<std::size_t> seen;
    Integer sum = 0;
    for (const auto& idx : p.at("subset")) {
        auto i = idx.get<std::size_t>();
        if (i < 1 || i > eq.arity() || !seen.insert(i).second)
            return false;
        sum += eq[i - 1];
    }
    return !seen.empty() && sum == 0;
}

bool verify_ratios(const Equation& eq, const Json& p)
{
    if (rationals_from_json(p.at("ratios")) != forbidden_ratios(eq))
        return false;
    if (p.contains("at_family_n"))
        return at_family(p.at("at_family_n").get<std::size_t>()) == eq;
    return true;
}

bool verify_linkage(const Equation& eq, const Json& p)
{
    const auto cap = p.at("m_cap").get<std::size_t>();
    const auto m = p.at("m").get<std::size_t>();
    auto row = rationals_from_json(p.at("first_row"));
    if (m > cap || row.size() != m)
        return false;
    if (m == 0)
        return true;
    if (std::find(row.begin(), row.end(), Rational(1)) != row.end())
        return false;
    LinkageMatrix mat = build_matrix(eq, row);
    if (p.at("ratio_indices") != matrix_indices_to_json(mat))
        return false;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            if (mat.entry(i, j) == Rational(1))
                return false;
    return true;
}

bool verify_radius(const Equation& eq, const Json& p)
{
    const int palette = p.at("palette").get<int>();
    const auto cap = p.at("cap").get<std::size_t>();
    const auto rows = rows_from_json(p.at("ineqs"));
    const auto& status = p.at("status").get_ref<const std::string&>();
    const auto value = p.at("R").get<std::size_t>();
    Coloring witness = coloring_from_json(p.at("witness"));
    if (witness.palette() != palette || value > cap || value < 1)
        return false;
    if (!is_valid(verify_coloring(eq, witness, rows)))
        return false;
    if (status == "unknown")
        return value == cap && witness.length() == cap;
    if (status != "radius")
        throw Error(Errc::schema, "unknown radius status '" + status + "'");
    if (witness.length() != value - 1)
        return false;
    if (value > recheck_cap)
        return false;
    return !search_coloring(eq, palette, value, rows).has_value();
}

bool verify_coloring_payload(const Equation& eq, const Json& p)
{
    const auto rows = rows_from_json(p.at("ineqs"));
    const auto& mode = p.at("mode").get_ref<const std::string&>();
    if (mode == "search") {
        const int palette = p.at("palette").get<int>();
        const auto n = p.at("N").get<std::size_t>();
        if (!p.at("found").get<bool>()) {
            if (n > recheck_cap)
                return false;
            return !search_coloring(eq, palette, n, rows).has_value();
        }
        Coloring col = coloring_from_json(p.at("coloring"));
        if (col.palette() != palette || col.length() != n)
            return false;
        return is_valid(verify_coloring(eq, col, rows));
    }
    if (mode != "verify")
        throw Error(Errc::schema, "unknown coloring mode '" + mode + "'");
    Coloring col = coloring_from_json(p.at("coloring"));
    auto outcome = verify_coloring(eq, col, rows);
    if (p.at("valid").get<bool>())
        return is_valid(outcome);
    const auto* ce = std::get_if<Counterexample>(&outcome);
    if (!ce)
        return false;
    const auto& claimed = p.at("counterexample");
    SolutionTuple tuple(integers_from_json(claimed.at("tuple")));
    Color color = claimed.at("color").get<Color>();
    return tuple == ce->tuple && color == ce->color && check_solution(eq, tuple) &&
           monochromatic(col, tuple, color) && rows_hold(rows, tuple);
}

bool verify_solution(const Equation& eq, const Json& p)
{
    const auto rows = rows_from_json(p.at("ineqs"));
    Coloring col = coloring_from_json(p.at("coloring"));
    if (!p.at("found").get<bool>())
        return is_valid(verify_coloring(eq, col, rows));
    SolutionTuple tuple(integers_from_json(p.at("solution")));
    Color color = p.at("color").get<Color>();
    if (tuple.size() != eq.arity() || !check_solution(eq, tuple) || !rows_hold(rows, tuple) ||
        !monochromatic(col, tuple, color))
        return false;
    if (p.contains("family")) {
        const auto& f = p.at("family");
        SolutionTuple base(integers_from_json(f.at("base")));
        Integer step = integer_from_json(f.at("step"));
        Integer half = integer_from_json(f.at("half_length"));
        auto shift = integers_from_json(f.at("shift"));
        if (!check_solution(eq, base) || shift.size() != eq.arity() ||
            evaluate_row(eq.coeffs(), shift) != 0)
            return false;
        for (const auto& t : shift)
            if (abs(t) > half)
                return false;
        if (apply_shift(base, step, shift) != tuple)
            return false;
    }
    return true;
}

bool verify_walk(const Equation& eq, const Json& p)
{
    auto row = rationals_from_json(p.at("first_row"));
    LinkageMatrix mat = build_matrix(eq, row);
    if (p.at("ratio_indices") != matrix_indices_to_json(mat))
        return false;
    Integer x = integer_from_json(p.at("x"));
    const int palette = p.at("palette").get<int>();
    if (x < 1 || x % integrality_base(mat) != 0 || palette < 1 ||
        static_cast<std::size_t>(palette) > mat.size())
        return false;

    const auto& values = p.at("values");
    if (values.size() != mat.size() + 1)
        return false;
    std::vector<Integer> z;
    std::vector<Color> colors;
    for (std::size_t j = 0; j < values.size(); ++j) {
        Integer expect = j == 0 ? x : (mat.entry(0, j - 1) * Rational(x)).numerator();
        Integer got = integer_from_json(values[j].at(0));
        Color c = values[j].at(1).get<Color>();
        if (got != expect || c < 1 || c > palette)
            return false;
        z.push_back(got);
        colors.push_back(c);
    }
    const auto from = p.at("pair_index").at(0).get<std::size_t>();
    const auto to = p.at("pair_index").at(1).get<std::size_t>();
    if (from >= to || to > mat.size())
        return false;
    Color color = p.at("color").get<Color>();
    if (colors[from] != color || colors[to] != color)
        return false;
    const auto r = p.at("position").at(0).get<std::size_t>();
    const auto c = p.at("position").at(1).get<std::size_t>();
    if (r != from + 1 || c != to)
        return false;
    const auto l = p.at("ratio_index").get<std::size_t>();
    if (l < 1 || l > eq.arity() || mat.ratio_index(r - 1, c - 1) != l - 1)
        return false;
    if (Rational(z[to], z[from]) != forbidden_ratios(eq)[l - 1])
        return false;
    SolutionTuple tuple(integers_from_json(p.at("solution")));
    if (tuple != forbidden_ratio_solution(eq, l - 1, z[from]) || !check_solution(eq, tuple))
        return false;
    for (const auto& v : tuple.values())
        if (v != z[from] && v != z[to])
            return false;
    return true;
}

} // namespace

Json coloring_to_json(const Coloring& col)
{
    return Json{{"palette", col.palette()},
                {"N", col.length()},
                {"colors", std::vector<Color>(col.colors().begin(), col.colors().end())}};
}

Coloring coloring_from_json(const Json& j)
{
    auto colors = j.at("colors").get<std::vector<Color>>();
    if (j.at("N").get<std::size_t>() != colors.size())
        throw Error(Errc::schema, "coloring length does not match N");
    return Coloring(j.at("palette").get<int>(), std::move(colors));
}

Json make_certificate(const Equation& eq, std::string_view kind, Json payload,
                      const CertificateMeta& meta)
{
    Json m{{"tool_version", meta.tool_version}, {"command", meta.command}};
    if (meta.timestamp)
        m["timestamp"] = *meta.timestamp;
    return Json{{"schema", certificate_schema},
                {"kind", kind},
                {"equation", integers_to_json(eq.coeffs())},
                {"payload", std::move(payload)},
                {"meta", std::move(m)}};
}

Json regularity_payload(const Equation& eq)
{
    auto subset = rado_subset(eq);
    Json p{{"regular", subset.has_value()}, {"subset", nullptr}};
    if (subset) {
        Json s = Json::array();
        for (auto i : *subset)
            s.push_back(i + 1);
        p["subset"] = s;
    }
    return p;
}

Json ratios_payload(const Equation& eq, std::optional<std::size_t> family_n)
{
    Json p{{"ratios", rationals_to_json(forbidden_ratios(eq))}};
    if (family_n)
        p["at_family_n"] = *family_n;
    return p;
}

Json linkage_payload(const Equation&, std::size_t m_cap, const std::optional<LinkageMatrix>& best)
{
    Json p{{"m_cap", m_cap}, {"m", 0}, {"first_row", Json::array()}, {"ratio_indices", Json::array()}};
    if (best) {
        p["m"] = best->size();
        p["first_row"] = rationals_to_json(best->first_row());
        p["ratio_indices"] = matrix_indices_to_json(*best);
    }
    return p;
}

Json radius_payload(int palette, std::size_t cap, std::span<const Row> ineqs,
                    const RadiusResult& result)
{
    return Json{{"palette", palette},
                {"cap", cap},
                {"ineqs", rows_to_json(ineqs)},
                {"status", result.found ? "radius" : "unknown"},
                {"R", result.value},
                {"witness", coloring_to_json(result.witness)}};
}

Json search_payload(int palette, std::size_t n, std::span<const Row> ineqs,
                    const std::optional<Coloring>& found)
{
    return Json{{"mode", "search"},
                {"palette", palette},
                {"N", n},
                {"ineqs", rows_to_json(ineqs)},
                {"found", found.has_value()},
                {"coloring", found ? coloring_to_json(*found) : Json(nullptr)}};
}

Json verification_payload(const Coloring& col, std::span<const Row> ineqs,
                          const VerifyOutcome& outcome)
{
    Json p{{"mode", "verify"},
           {"coloring", coloring_to_json(col)},
           {"ineqs", rows_to_json(ineqs)},
           {"valid", is_valid(outcome)},
           {"counterexample", nullptr}};
    if (const auto* ce = std::get_if<Counterexample>(&outcome))
        p["counterexample"] = Json{{"tuple", integers_to_json(ce->tuple.values())}, {"color", ce->color}};
    return p;
}

Json solution_payload(std::span<const Row> ineqs, const Coloring& col,
                      const std::optional<StrongSolution>& solution)
{
    Json p{{"ineqs", rows_to_json(ineqs)},
           {"coloring", coloring_to_json(col)},
           {"found", solution.has_value()}};
    if (solution) {
        p["solution"] = integers_to_json(solution->tuple.values());
        p["color"] = solution->color;
        p["path"] = solution->family ? "progression" : "direct";
        if (solution->family) {
            const auto& f = *solution->family;
            p["family"] = Json{{"base", integers_to_json(f.base.values())},
                               {"step", f.step.get_str()},
                               {"half_length", std::to_string(f.half_length)},
                               {"shift", integers_to_json(solution->shift)}};
        }
    }
    return p;
}

Json walk_payload(const LinkageMatrix& mat, const Integer& x, const Coloring& col,
                  const WalkResult& walk)
{
    Json values = Json::array();
    for (std::size_t j = 0; j <= mat.size(); ++j) {
        Integer z = j == 0 ? x : (mat.entry(0, j - 1) * Rational(x)).numerator();
        values.push_back(Json::array({z.get_str(), col.at(z)}));
    }
    return Json{{"first_row", rationals_to_json(mat.first_row())},
                {"ratio_indices", matrix_indices_to_json(mat)},
                {"x", x.get_str()},
                {"palette", col.palette()},
                {"values", values},
                {"pair", Json::array({walk.u.get_str(), walk.v.get_str()})},
                {"pair_index", Json::array({walk.from, walk.to})},
                {"position", Json::array({walk.row + 1, walk.col + 1})},
                {"ratio_index", walk.ratio_l + 1},
                {"solution", integers_to_json(walk.solution.values())},
                {"color", walk.color}};
}

bool verify_certificate(const Json& cert)
{
    try {
        if (!cert.is_object())
            throw Error(Errc::schema, "certificate must be a JSON object");
        if (cert.at("schema").get_ref<const std::string&>() != certificate_schema)
            throw Error(Errc::schema, "unsupported schema '" + cert.at("schema").get<std::string>() + "'");
        const auto& kind = cert.at("kind").get_ref<const std::string&>();
        const auto& payload = cert.at("payload");
        if (!payload.is_object())
            throw Error(Errc::schema, "payload must be an object");
        auto raw = integers_from_json(cert.at("equation"));
        Equation eq = normalize(std::span<const Integer>(raw));
        if (std::vector<Integer>(eq.coeffs().begin(), eq.coeffs().end()) != raw)
            return false;

        if (kind == "regularity")
            return verify_regularity(eq, payload);
        if (kind == "ratios")
            return verify_ratios(eq, payload);
        if (kind == "linkage")
            return verify_linkage(eq, payload);
        if (kind == "radius")
            return verify_radius(eq, payload);
        if (kind == "coloring")
            return verify_coloring_payload(eq, payload);
        if (kind == "solution")
            return verify_solution(eq, payload);
        if (kind == "walk")
            return verify_walk(eq, payload);
        throw Error(Errc::schema, "unknown certificate kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::schema, std::string("malformed certificate: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == Errc::schema || e.code() == Errc::parse)
            throw Error(Errc::schema, e.what());
        return false;
    }
}

} // namespace rado
