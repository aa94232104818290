#include <homcalc/io.hpp>
#include <homcalc/errors.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace homcalc
{

namespace
{

[[noreturn]] void fail(const std::string &path, const std::string &msg, std::size_t pos = 0)
{
    throw ParseError(path + ": " + msg, pos);
}

const Json &field(const Json &j, const std::string &path, const char *key)
{
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        fail(path, std::string("missing field \"") + key + "\"");
    }
    return *it;
}

const Json &array_of(const Json &j, const std::string &path, std::size_t size)
{
    if (!j.is_array()) {
        fail(path, "expected an array");
    }
    if (j.size() != size) {
        fail(path, "expected " + std::to_string(size) + " entries, got " + std::to_string(j.size()));
    }
    return j;
}

std::size_t size_field(const Json &j, const std::string &path, const char *key)
{
    const Json &v = field(j, path, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        fail(path + "." + key, "expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::string scalar_text(const Json &v, const std::string &path)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
    }
    fail(path, "expected a string or integer");
}

Rational rational_at(const Json &v, const std::string &path)
{
    const std::string text = scalar_text(v, path);
    try {
        return Rational::parse(text);
    } catch (const ParseError &e) {
        fail(path, e.detail(), e.position());
    }
}

Poly poly_at(const Json &v, const std::string &path, const VarListPtr &vars)
{
    const std::string text = scalar_text(v, path);
    try {
        return Poly::parse(text, vars);
    } catch (const ParseError &e) {
        fail(path, e.detail(), e.position());
    }
}

std::string idx(const std::string &path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

QMatrix rational_matrix(const Json &j, const std::string &path, std::size_t rows,
                        std::size_t cols)
{
    array_of(j, path, rows);
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        array_of(j[i], idx(path, i), cols);
        for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) = rational_at(j[i][k], idx(idx(path, i), k));
        }
    }
    return m;
}

Json matrix_json(const QMatrix &m)
{
    Json out = Json::array();
    for (const auto &row : m.to_strings()) {
        out.push_back(row);
    }
    return out;
}

} // namespace

Json parse_json_text(std::string_view text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
}

Json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open input file '" + path + "'", 0);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_json_text(buf.str());
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.detail(), e.position());
    }
}

std::string dump_json(const Json &j)
{
    return j.dump(2) + "\n";
}

// --------------------------------------------------------------- algebroid

HomAlgebroid algebroid_from_json(const Json &j)
{
    const std::string root = "$";
    const Json &base_j = field(j, root, "base");
    const Json &vars_j = field(base_j, "$.base", "vars");
    if (!vars_j.is_array()) {
        fail("$.base.vars", "expected an array of variable names");
    }
    VarList names;
    for (std::size_t i = 0; i < vars_j.size(); ++i) {
        if (!vars_j[i].is_string()) {
            fail(idx("$.base.vars", i), "expected a string");
        }
        const std::string name = vars_j[i].get<std::string>();
        const bool valid = !name.empty()
                           && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')
                           && std::all_of(name.begin(), name.end(), [](char c) {
                                  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                              });
        if (!valid) {
            fail(idx("$.base.vars", i), "invalid variable name '" + name + "'");
        }
        if (std::find(names.begin(), names.end(), name) != names.end()) {
            fail(idx("$.base.vars", i), "duplicate variable '" + name + "'");
        }
        names.push_back(name);
    }
    const VarListPtr vars = make_vars(names);
    const std::size_t n = names.size();
    const Json &phi_j = array_of(field(base_j, "$.base", "phi"), "$.base.phi", n);
    std::vector<Poly> phi;
    for (std::size_t i = 0; i < n; ++i) {
        phi.push_back(poly_at(phi_j[i], idx("$.base.phi", i), vars));
    }
    auto base = std::make_shared<const BaseGeometry>(vars, std::move(phi));

    const std::size_t r = size_field(j, root, "rank");
    const Json &alpha_j = array_of(field(j, root, "alpha"), "$.alpha", r);
    PolyMatrix alpha(r);
    for (std::size_t i = 0; i < r; ++i) {
        array_of(alpha_j[i], idx("$.alpha", i), r);
        for (std::size_t k = 0; k < r; ++k) {
            alpha[i].push_back(poly_at(alpha_j[i][k], idx(idx("$.alpha", i), k), vars));
        }
    }
    const Json &anchor_j = array_of(field(j, root, "anchor"), "$.anchor", r);
    PolyMatrix anchor(r);
    for (std::size_t i = 0; i < r; ++i) {
        array_of(anchor_j[i], idx("$.anchor", i), n);
        for (std::size_t k = 0; k < n; ++k) {
            anchor[i].push_back(poly_at(anchor_j[i][k], idx(idx("$.anchor", i), k), vars));
        }
    }
    const Json &bracket_j = array_of(field(j, root, "bracket"), "$.bracket", r);
    SectionMatrix bracket(r);
    for (std::size_t i = 0; i < r; ++i) {
        const std::string pi = idx("$.bracket", i);
        array_of(bracket_j[i], pi, r);
        for (std::size_t k = 0; k < r; ++k) {
            const std::string pk = idx(pi, k);
            array_of(bracket_j[i][k], pk, r);
            std::vector<Poly> coeffs;
            for (std::size_t m = 0; m < r; ++m) {
                coeffs.push_back(poly_at(bracket_j[i][k][m], idx(pk, m), vars));
            }
            bracket[i].emplace_back(std::move(coeffs));
        }
    }
    Variant variant = Variant::A;
    const Json &variant_j = field(j, root, "variant");
    if (!variant_j.is_string()) {
        fail("$.variant", "expected \"A\" or \"B\"");
    }
    try {
        variant = parse_variant(variant_j.get<std::string>());
    } catch (const ParseError &e) {
        fail("$.variant", e.detail());
    }
    return HomAlgebroid(base, r, std::move(bracket), make_anchor(base, anchor), std::move(alpha),
                        variant);
}

Json algebroid_to_json(const HomAlgebroid &ab)
{
    const BaseGeometry &base = ab.base();
    Json phi = Json::array();
    for (const auto &p : base.phi_images()) {
        phi.push_back(p.to_string());
    }
    auto poly_rows = [](const PolyMatrix &m) {
        Json out = Json::array();
        for (const auto &row : m) {
            Json r = Json::array();
            for (const auto &p : row) {
                r.push_back(p.to_string());
            }
            out.push_back(std::move(r));
        }
        return out;
    };
    Json bracket = Json::array();
    for (const auto &row : ab.bracket_sf()) {
        Json r = Json::array();
        for (const auto &s : row) {
            Json c = Json::array();
            for (const auto &p : s.coefficients()) {
                c.push_back(p.to_string());
            }
            r.push_back(std::move(c));
        }
        bracket.push_back(std::move(r));
    }
    return Json{{"base", {{"vars", *base.vars()}, {"phi", phi}}},
                {"rank", ab.rank()},
                {"alpha", poly_rows(ab.alpha_sf())},
                {"anchor", poly_rows(ab.anchor_matrix())},
                {"bracket", bracket},
                {"variant", to_string(ab.variant())}};
}

// ----------------------------------------------------------------- Hom-Lie

HomLieAlgebra homlie_from_json(const Json &j)
{
    const std::size_t n = size_field(j, "$", "dim");
    const Json &c_j = array_of(field(j, "$", "c"), "$.c", n);
    BracketTable c(n, std::vector<QVector>(n));
    for (std::size_t a = 0; a < n; ++a) {
        array_of(c_j[a], idx("$.c", a), n);
        for (std::size_t b = 0; b < n; ++b) {
            const std::string p = idx(idx("$.c", a), b);
            array_of(c_j[a][b], p, n);
            for (std::size_t k = 0; k < n; ++k) {
                c[a][b].push_back(rational_at(c_j[a][b][k], idx(p, k)));
            }
        }
    }
    QMatrix alpha = rational_matrix(field(j, "$", "alpha"), "$.alpha", n, n);
    try {
        return HomLieAlgebra(n, std::move(c), std::move(alpha));
    } catch (const PreconditionError &e) {
        fail("$.c", e.what());
    }
}

Json homlie_to_json(const HomLieAlgebra &g)
{
    Json c = Json::array();
    for (const auto &row : g.structure_constants()) {
        Json r = Json::array();
        for (const auto &v : row) {
            Json entries = Json::array();
            for (const auto &q : v) {
                entries.push_back(q.to_string());
            }
            r.push_back(std::move(entries));
        }
        c.push_back(std::move(r));
    }
    return Json{{"dim", g.dim()}, {"c", c}, {"alpha", matrix_json(g.alpha())}};
}

Representation representation_from_json(const Json &j)
{
    HomLieAlgebra g = homlie_from_json(j);
    const std::size_t m = size_field(j, "$", "dimV");
    const Json &rho_j = array_of(field(j, "$", "rho"), "$.rho", g.dim());
    std::vector<QMatrix> rho;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        rho.push_back(rational_matrix(rho_j[i], idx("$.rho", i), m, m));
    }
    QMatrix beta = rational_matrix(field(j, "$", "beta"), "$.beta", m, m);
    return Representation(std::move(g), m, std::move(rho), std::move(beta));
}

Json representation_to_json(const Representation &r)
{
    Json out = homlie_to_json(r.algebra());
    out["dimV"] = r.dimV();
    Json rho = Json::array();
    for (const auto &m : r.rho()) {
        rho.push_back(matrix_json(m));
    }
    out["rho"] = rho;
    out["beta"] = matrix_json(r.beta());
    return out;
}

InstanceKind detect_kind(const Json &j)
{
    if (!j.is_object()) {
        fail("$", "expected an object");
    }
    if (j.contains("base")) {
        return InstanceKind::algebroid;
    }
    if (j.contains("dimV")) {
        return InstanceKind::representation;
    }
    if (j.contains("dim")) {
        return InstanceKind::homlie;
    }
    fail("$", "cannot tell the instance kind (expected \"base\", \"dim\" or \"dimV\")");
}

// ----------------------------------------------------------------- cochains

Cochain cochain_from_json(const Json &j, const BaseGeometry &base)
{
    const Json &kind_j = field(j, "$", "kind");
    if (!kind_j.is_string()) {
        fail("$.kind", "expected a string");
    }
    const std::string kind = kind_j.get<std::string>();
    if (kind == "function") {
        return Cochain::function(poly_at(field(j, "$", "poly"), "$.poly", base.vars()));
    }
    if (kind != "basis") {
        fail("$.kind", "expected \"basis\" or \"function\", got \"" + kind + "\"");
    }
    const std::size_t k = size_field(j, "$", "k");
    if (k == 0) {
        fail("$.k", "a basis cochain has degree >= 1");
    }
    int twist = 0;
    if (j.contains("twist")) {
        const Json &t = j["twist"];
        if (!t.is_number_integer() || (t.get<int>() != 0 && t.get<int>() != 1)) {
            fail("$.twist", "expected 0 or 1");
        }
        twist = t.get<int>();
    }
    const Json &comps = field(j, "$", "components");
    if (!comps.is_object()) {
        fail("$.components", "expected an object keyed by comma-separated 1-based indices");
    }
    std::map<Cochain::Tuple, Poly> components;
    for (const auto &[key, value] : comps.items()) {
        const std::string path = "$.components[\"" + key + "\"]";
        Cochain::Tuple tuple;
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ',')) {
            part.erase(std::remove_if(part.begin(), part.end(),
                                      [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                       part.end());
            if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }) || part.size() > 6) {
                fail(path, "bad index list");
            }
            const std::size_t i = std::stoul(part);
            if (i == 0) {
                fail(path, "indices are 1-based");
            }
            tuple.push_back(i - 1);
        }
        if (tuple.size() != k) {
            fail(path, "expected " + std::to_string(k) + " indices");
        }
        components[tuple] = poly_at(value, path, base.vars());
    }
    try {
        return Cochain::basis(k, twist, components);
    } catch (const StructureError &e) {
        fail("$.components", e.what());
    }
}

std::vector<Section> parse_sections(std::string_view text, const HomAlgebroid &ab)
{
    const BaseGeometry &base = ab.base();
    const std::size_t r = ab.rank();
    const std::size_t n = base.num_variables();
    VarList names = *base.vars();
    for (std::size_t i = 0; i < r; ++i) {
        const std::string e = "e" + std::to_string(i + 1);
        if (std::find(names.begin(), names.end(), e) != names.end()) {
            throw ParseError("base variable '" + e + "' clashes with a section basis name", 0);
        }
        names.push_back(e);
    }
    const VarListPtr extended = make_vars(names);

    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    if (begin < end && text[begin] == '[') {
        if (text[end - 1] != ']') {
            throw ParseError("section list: missing ']'", end);
        }
        ++begin;
        --end;
    }
    std::vector<Section> out;
    std::size_t start = begin;
    int depth = 0;
    auto flush = [&](std::size_t stop) {
        const std::string_view piece = text.substr(start, stop - start);
        if (piece.find_first_not_of(" \t\n") == std::string_view::npos) {
            if (stop == end && out.empty() && start == begin) {
                return; // empty list
            }
            throw ParseError("section list: empty entry", start);
        }
        Poly p;
        try {
            p = Poly::parse(piece, extended);
        } catch (const ParseError &e) {
            throw ParseError("section " + std::to_string(out.size() + 1) + ": " + e.detail(),
                             start + e.position());
        }
        std::vector<Poly> coeffs(r, base.zero());
        for (const auto &[exps, c] : p.terms()) {
            std::size_t which = r;
            std::uint32_t e_degree = 0;
            for (std::size_t i = 0; i < r; ++i) {
                if (exps[n + i] != 0) {
                    e_degree += exps[n + i];
                    which = i;
                }
            }
            if (e_degree != 1) {
                throw ParseError("section " + std::to_string(out.size() + 1)
                                     + ": every term must contain exactly one of e1..e"
                                     + std::to_string(r),
                                 start);
            }
            Exponents base_exps(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(n));
            coeffs[which] += Poly::monomial(base.vars(), std::move(base_exps), c);
        }
        out.emplace_back(std::move(coeffs));
    };
    for (std::size_t i = begin; i < end; ++i) {
        if (text[i] == '(') {
            ++depth;
        } else if (text[i] == ')') {
            --depth;
        } else if (text[i] == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(end);
    return out;
}

} // namespace homcalc
