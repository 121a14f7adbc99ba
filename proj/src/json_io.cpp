#include "alres/json_io.hpp"

#include <fstream>

namespace alres::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what)
{
    fail(ErrorCode::ParseError, what);
}

int require_int(const json& j, const char* what)
{
    if (!j.is_number_integer())
        parse_fail(std::string(what) + " must be an integer");
    return j.get<int>();
}

const json& require_field(const json& j, const char* key)
{
    auto it = j.find(key);
    if (it == j.end())
        parse_fail(std::string("missing field '") + key + "'");
    return *it;
}

} // namespace

json to_json(const BiLaurent& p)
{
    json terms = json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back(json::array({k.first, k.second, c.str()}));
    return terms;
}

BiLaurent bilaurent_from_json(const json& j)
{
    if (!j.is_array())
        parse_fail("polynomial must be an array of [w_exp, lambda_exp, coeff] triples");
    BiLaurent p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[2].is_string())
            parse_fail("polynomial term must be [w_exp, lambda_exp, coeff-string]");
        Int c;
        try {
            c = Int(t[2].get<std::string>());
        } catch (const std::exception&) {
            parse_fail("bad coefficient string '" + t[2].get<std::string>() + "'");
        }
        p.add_term(require_int(t[0], "w exponent"), require_int(t[1], "lambda exponent"), c);
    }
    return p;
}

json to_json(const RatFun& r)
{
    return json{{"den", to_json(r.den())}, {"num", to_json(r.num())}};
}

RatFun ratfun_from_json(const json& j)
{
    if (!j.is_object())
        parse_fail("rational function must be an object with num and den");
    return RatFun(bilaurent_from_json(require_field(j, "num")),
                  bilaurent_from_json(require_field(j, "den")));
}

json to_json(const Mat2& m)
{
    return json::array({json::array({to_json(m.e11()), to_json(m.e12())}),
                        json::array({to_json(m.e21()), to_json(m.e22())})});
}

Mat2 mat2_from_json(const json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2
        || !j[1].is_array() || j[1].size() != 2)
        parse_fail("matrix must be a 2x2 array");
    return Mat2(ratfun_from_json(j[0][0]), ratfun_from_json(j[0][1]),
                ratfun_from_json(j[1][0]), ratfun_from_json(j[1][1]));
}

json to_json(const Potential& p)
{
    json r = json::array();
    json s = json::array();
    for (int n = p.k(); n <= p.K(); ++n) {
        r.push_back(p.r(n));
        s.push_back(p.s(n));
    }
    return json{{"k", p.k()}, {"r", r}, {"s", s}};
}

Potential potential_from_json(const json& j)
{
    if (!j.is_object())
        parse_fail("potential must be an object {k, r, s}");
    const int k = require_int(require_field(j, "k"), "field 'k'");
    const json& jr = require_field(j, "r");
    const json& js = require_field(j, "s");
    if (!jr.is_array() || !js.is_array())
        parse_fail("fields 'r' and 's' must be arrays");
    if (jr.empty())
        parse_fail("field 'r': support must not be empty");
    if (jr.size() != js.size())
        parse_fail("fields 'r' and 's' must have equal length");
    auto read_binary = [](const json& a, const char* name) {
        std::vector<int> v;
        v.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i].is_number_integer())
                parse_fail(std::string("field '") + name + "' entry "
                           + std::to_string(i) + " is not an integer");
            const int x = a[i].get<int>();
            if (x != 0 && x != 1)
                parse_fail(std::string("field '") + name + "' entry "
                           + std::to_string(i) + " must be 0 or 1");
            v.push_back(x);
        }
        return v;
    };
    return Potential(k, read_binary(jr, "r"), read_binary(js, "s"));
}

Potential load_potential_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        parse_fail("cannot open potential file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        parse_fail("potential file '" + path + "': " + e.what());
    }
    return potential_from_json(j);
}

json to_json(const WindowBounds& b)
{
    return json{{"m_hi", b.m_hi}, {"m_lo", b.m_lo}, {"n_hi", b.n_hi}, {"n_lo", b.n_lo}};
}

WindowBounds window_bounds_from_json(const json& j)
{
    if (!j.is_object())
        parse_fail("window bounds must be an object");
    return WindowBounds{require_int(require_field(j, "m_lo"), "m_lo"),
                        require_int(require_field(j, "m_hi"), "m_hi"),
                        require_int(require_field(j, "n_lo"), "n_lo"),
                        require_int(require_field(j, "n_hi"), "n_hi")};
}

json to_json(const KernelWindow& w)
{
    const WindowBounds& b = w.bounds();
    json entries = json::array();
    for (int m = b.m_lo; m <= b.m_hi; ++m)
        for (int n = b.n_lo; n <= b.n_hi; ++n)
            entries.push_back(json{{"h_exp", KernelWindow::h_exponent(m, n)},
                                   {"m", m},
                                   {"matrix", to_json(w.at(m, n))},
                                   {"n", n}});
    json j = to_json(b);
    j["region"] = region_name(w.region());
    j["regularized"] = w.regularized();
    j["entries"] = std::move(entries);
    return j;
}

KernelWindow kernel_window_from_json(const json& j)
{
    const WindowBounds b = window_bounds_from_json(j);
    const auto tag = region_from_name(require_field(j, "region").get<std::string>());
    if (!tag)
        parse_fail("unknown region tag");
    bool reg = false;
    if (auto it = j.find("regularized"); it != j.end())
        reg = it->get<bool>();
    KernelWindow w(b, *tag, reg);
    for (const auto& e : require_field(j, "entries")) {
        const int m = require_int(require_field(e, "m"), "entry m");
        const int n = require_int(require_field(e, "n"), "entry n");
        w.at(m, n) = mat2_from_json(require_field(e, "matrix"));
    }
    return w;
}

json to_json(const LambdaExpansion& e)
{
    json residues = json::array();
    for (const auto& r : e.residues)
        residues.push_back(to_json(r));
    return json{{"Q", e.Q}, {"regular", to_json(e.regular)}, {"residues", residues}};
}

json to_json(const FailSite& f)
{
    return json{{"m", f.m}, {"n", f.n}, {"residual", to_json(f.residual)}};
}

json to_json(const IdentityReport& r)
{
    json j{{"gating", r.gating},
           {"name", r.name},
           {"pass", r.pass},
           {"region", r.region},
           {"window", to_json(r.window)}};
    j["first_fail"] = r.first_fail ? to_json(*r.first_fail) : json(nullptr);
    if (!r.note.empty())
        j["note"] = r.note;
    return j;
}

json to_json(const std::vector<IdentityReport>& rs)
{
    json j = json::array();
    for (const auto& r : rs)
        j.push_back(to_json(r));
    return j;
}

json to_json(const BoundaryPairReport& r)
{
    return json{{"h_minus", r.h_minus},
                {"h_plus", r.h_plus},
                {"lambda0", r.lambda0},
                {"max_abs_jump", r.max_abs_jump},
                {"max_rel_mismatch", r.max_rel_mismatch},
                {"pass", r.pass},
                {"region_minus", r.region_minus},
                {"region_plus", r.region_plus}};
}

} // namespace alres::io
