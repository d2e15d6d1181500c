#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "localize.hpp"

namespace dhloc {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct Diagnostic {
    std::string path;
    std::string message;
};

inline std::string to_string(const Diagnostic& d) { return d.path + ": " + d.message; }

class ModelError : public Error {
public:
    explicit ModelError(std::vector<Diagnostic> diags)
        : Error(Errc::InvalidModel, summary(diags)), diags_(std::move(diags)) {}

    const std::vector<Diagnostic>& diagnostics() const { return diags_; }

private:
    static std::string summary(const std::vector<Diagnostic>& ds) {
        std::string s = std::to_string(ds.size()) + " problem(s)";
        for (const auto& d : ds) s += "\n  " + to_string(d);
        return s;
    }

    std::vector<Diagnostic> diags_;
};

// ---------------------------------------------------------------- json encoding

inline json rational_json(const Rational& q) { return to_string(q); }

inline json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_json(x));
    return a;
}

inline json vecs_json(const std::vector<Vec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(vec_json(v));
    return a;
}

inline json wall_json(const std::string& id, const Wall& w) {
    json j;
    if (!id.empty()) j["id"] = id;
    j["basepoint"] = vec_json(w.basepoint);
    j["directions"] = vecs_json(w.directions);
    j["normals"] = vecs_json(w.normals);
    return j;
}

inline json datum_json(const FixedPointDatum& d) {
    json j;
    j["wall"] = d.wall_id;
    j["beta"] = vec_json(d.beta);
    j["weights"] = json::array();
    for (const auto& w : d.weights) j["weights"].push_back({{"vector", vec_json(w.vector)}, {"rank", w.rank}});
    j["chern_table"] = json::array();
    for (const auto& e : d.chern_table) {
        json mu = json::array();
        for (const auto& [k, m] : e.chern) mu.push_back({k, m});
        j["chern_table"].push_back({{"chern", mu}, {"xi", e.xi}, {"value", rational_json(e.value)}});
    }
    j["base_orientation"] = d.base_orientation;
    j["sgn_g"] = d.sgn_g;
    j["chern_degree_cap"] = d.chern_degree_cap;
    return j;
}

inline json model_json(const Model& m) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = m.name;
    j["root_datum"] = std::string(type_tag(m.rd->type));
    j["gamma"] = vec_json(m.gamma);
    j["allow_nongeneric_gamma"] = m.allow_nongeneric_gamma;
    j["generation"] = {{"lattice", m.generate_lattice}, {"weyl", m.generate_weyl}};
    j["walls"] = json::array();
    for (std::size_t i = 0; i < m.walls.size(); ++i) j["walls"].push_back(wall_json(m.wall_ids[i], m.walls[i]));
    j["data"] = json::array();
    for (const auto& d : m.data) j["data"].push_back(datum_json(d));
    j["window_default"] = {{"lo", vec_json(m.window_default.lo)}, {"hi", vec_json(m.window_default.hi)}};
    j["metadata"] = json::object();
    for (const auto& [k, v] : m.metadata) j["metadata"][k] = v;
    return j;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- json decoding

namespace detail {

class Reader {
public:
    std::vector<Diagnostic> diags;

    void fail(const std::string& path, const std::string& msg) { diags.push_back({path, msg}); }

    const json* field(const json& obj, const std::string& path, const char* key) {
        if (!obj.is_object()) {
            fail(path, "expected an object");
            return nullptr;
        }
        auto it = obj.find(key);
        if (it == obj.end()) {
            fail(path + "." + key, "missing field");
            return nullptr;
        }
        return &*it;
    }

    std::optional<Rational> rational(const json& j, const std::string& path) {
        if (!j.is_string()) {
            fail(path, "rationals must be exact \"p/q\" strings");
            return std::nullopt;
        }
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error& e) {
            fail(path, e.what());
            return std::nullopt;
        }
    }

    std::optional<Vec> vec(const json& j, const std::string& path, std::size_t dim) {
        if (!j.is_array()) {
            fail(path, "expected an array of rationals");
            return std::nullopt;
        }
        if (j.size() != dim) {
            fail(path, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(j.size()));
            return std::nullopt;
        }
        Vec v(dim);
        bool ok = true;
        for (std::size_t i = 0; i < dim; ++i) {
            auto q = rational(j[i], path + "[" + std::to_string(i) + "]");
            if (q) v[i] = *q;
            else ok = false;
        }
        return ok ? std::optional<Vec>(v) : std::nullopt;
    }

    std::vector<Vec> vecs(const json& j, const std::string& path, std::size_t dim) {
        std::vector<Vec> out;
        if (!j.is_array()) {
            fail(path, "expected an array of vectors");
            return out;
        }
        for (std::size_t i = 0; i < j.size(); ++i)
            if (auto v = vec(j[i], path + "[" + std::to_string(i) + "]", dim)) out.push_back(*v);
        return out;
    }

    std::optional<int> integer(const json& j, const std::string& path) {
        if (!j.is_number_integer()) {
            fail(path, "expected an integer");
            return std::nullopt;
        }
        return j.get<int>();
    }

    std::optional<bool> boolean(const json& j, const std::string& path) {
        if (!j.is_boolean()) {
            fail(path, "expected true or false");
            return std::nullopt;
        }
        return j.get<bool>();
    }
};

} // namespace detail

inline void check_model(const Model& m, std::vector<Diagnostic>& diags);

// Decodes and validates; on success diags is empty.
inline std::optional<Model> model_from_json(const json& j, std::vector<Diagnostic>& diags) {
    detail::Reader r;
    if (!j.is_object()) {
        diags.push_back({"$", "model file must be a JSON object"});
        return std::nullopt;
    }
    if (auto v = r.field(j, "$", "schema_version")) {
        auto n = r.integer(*v, "$.schema_version");
        if (n && *n != kSchemaVersion) r.fail("$.schema_version", "unsupported schema version " + std::to_string(*n));
    }
    Model m;
    if (auto v = r.field(j, "$", "name"); v && v->is_string()) m.name = v->get<std::string>();
    else if (v) r.fail("$.name", "expected a string");
    const json* tag = r.field(j, "$", "root_datum");
    if (!tag) {
        diags = std::move(r.diags);
        return std::nullopt;
    }
    try {
        if (!tag->is_string()) throw Error(Errc::UnsupportedType, "root_datum must be a string tag");
        m.rd = std::make_shared<const RootDatum>(build_root_datum(tag->get<std::string>()));
    } catch (const Error& e) {
        r.fail("$.root_datum", e.what());
        diags = std::move(r.diags);
        return std::nullopt;
    }
    const std::size_t n = m.rd->rank;
    if (auto v = r.field(j, "$", "gamma"))
        if (auto g = r.vec(*v, "$.gamma", n)) m.gamma = *g;
    if (auto v = j.find("allow_nongeneric_gamma"); v != j.end())
        if (auto b = r.boolean(*v, "$.allow_nongeneric_gamma")) m.allow_nongeneric_gamma = *b;
    if (auto v = j.find("generation"); v != j.end()) {
        if (auto x = v->find("lattice"); v->is_object() && x != v->end())
            if (auto b = r.boolean(*x, "$.generation.lattice")) m.generate_lattice = *b;
        if (auto x = v->find("weyl"); v->is_object() && x != v->end())
            if (auto b = r.boolean(*x, "$.generation.weyl")) m.generate_weyl = *b;
    }
    if (auto ws = r.field(j, "$", "walls"); ws && ws->is_array()) {
        for (std::size_t i = 0; i < ws->size(); ++i) {
            const json& w = (*ws)[i];
            std::string p = "$.walls[" + std::to_string(i) + "]";
            Wall wall;
            std::string id;
            if (auto x = r.field(w, p, "id"); x && x->is_string()) id = x->get<std::string>();
            else if (x) r.fail(p + ".id", "expected a string");
            if (auto x = r.field(w, p, "basepoint"))
                if (auto b = r.vec(*x, p + ".basepoint", n)) wall.basepoint = *b;
            if (auto x = r.field(w, p, "directions")) wall.directions = r.vecs(*x, p + ".directions", n);
            if (auto x = r.field(w, p, "normals")) wall.normals = r.vecs(*x, p + ".normals", n);
            m.wall_ids.push_back(id);
            m.walls.push_back(std::move(wall));
        }
    } else if (ws) {
        r.fail("$.walls", "expected an array");
    }
    if (auto ds = r.field(j, "$", "data"); ds && ds->is_array()) {
        for (std::size_t i = 0; i < ds->size(); ++i) {
            const json& d = (*ds)[i];
            std::string p = "$.data[" + std::to_string(i) + "]";
            FixedPointDatum fd;
            if (auto x = r.field(d, p, "wall"); x && x->is_string()) {
                fd.wall_id = x->get<std::string>();
                auto it = std::find(m.wall_ids.begin(), m.wall_ids.end(), fd.wall_id);
                if (it == m.wall_ids.end()) r.fail(p + ".wall", "unknown wall id '" + fd.wall_id + "'");
                else fd.wall = m.walls[static_cast<std::size_t>(it - m.wall_ids.begin())];
            } else if (x) {
                r.fail(p + ".wall", "expected a wall id string");
            }
            if (auto x = r.field(d, p, "beta"))
                if (auto b = r.vec(*x, p + ".beta", n)) fd.beta = *b;
            if (auto x = r.field(d, p, "weights"); x && x->is_array()) {
                for (std::size_t k = 0; k < x->size(); ++k) {
                    std::string wp = p + ".weights[" + std::to_string(k) + "]";
                    Weight w;
                    if (auto y = r.field((*x)[k], wp, "vector"))
                        if (auto v = r.vec(*y, wp + ".vector", n)) w.vector = *v;
                    if (auto y = r.field((*x)[k], wp, "rank"))
                        if (auto rk = r.integer(*y, wp + ".rank")) w.rank = *rk;
                    fd.weights.push_back(std::move(w));
                }
            } else if (x) {
                r.fail(p + ".weights", "expected an array");
            }
            if (auto x = r.field(d, p, "chern_table"); x && x->is_array()) {
                for (std::size_t e = 0; e < x->size(); ++e) {
                    std::string ep = p + ".chern_table[" + std::to_string(e) + "]";
                    ChernEntry ce;
                    const json& ej = (*x)[e];
                    if (auto y = r.field(ej, ep, "chern"); y && y->is_array()) {
                        for (const auto& pair : *y) {
                            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                                !pair[1].is_number_integer()) {
                                r.fail(ep + ".chern", "entries must be [k, m] integer pairs");
                                continue;
                            }
                            ce.chern.emplace_back(pair[0].get<int>(), pair[1].get<int>());
                        }
                        std::sort(ce.chern.begin(), ce.chern.end());
                    } else if (y) {
                        r.fail(ep + ".chern", "expected an array");
                    }
                    if (auto y = r.field(ej, ep, "xi"); y && y->is_array()) {
                        for (const auto& v : *y) {
                            if (v.is_number_integer()) ce.xi.push_back(v.get<int>());
                            else r.fail(ep + ".xi", "exponents must be integers");
                        }
                    } else if (y) {
                        r.fail(ep + ".xi", "expected an array");
                    }
                    if (auto y = r.field(ej, ep, "value"))
                        if (auto q = r.rational(*y, ep + ".value")) ce.value = *q;
                    fd.chern_table.push_back(std::move(ce));
                }
            } else if (x) {
                r.fail(p + ".chern_table", "expected an array");
            }
            if (auto x = r.field(d, p, "base_orientation"))
                if (auto s = r.integer(*x, p + ".base_orientation")) fd.base_orientation = *s;
            if (auto x = r.field(d, p, "sgn_g"))
                if (auto s = r.integer(*x, p + ".sgn_g")) fd.sgn_g = *s;
            if (auto x = r.field(d, p, "chern_degree_cap"))
                if (auto s = r.integer(*x, p + ".chern_degree_cap")) fd.chern_degree_cap = *s;
            m.data.push_back(std::move(fd));
        }
    } else if (ds) {
        r.fail("$.data", "expected an array");
    }
    if (auto w = r.field(j, "$", "window_default")) {
        if (auto x = r.field(*w, "$.window_default", "lo"))
            if (auto v = r.vec(*x, "$.window_default.lo", n)) m.window_default.lo = *v;
        if (auto x = r.field(*w, "$.window_default", "hi"))
            if (auto v = r.vec(*x, "$.window_default.hi", n)) m.window_default.hi = *v;
    }
    if (auto md = j.find("metadata"); md != j.end()) {
        if (!md->is_object()) r.fail("$.metadata", "expected an object");
        else
            for (auto it = md->begin(); it != md->end(); ++it) {
                if (it.value().is_string()) m.metadata[it.key()] = it.value().get<std::string>();
                else r.fail("$.metadata." + it.key(), "metadata values must be strings");
            }
    }
    diags = std::move(r.diags);
    if (!diags.empty()) return std::nullopt;
    check_model(m, diags);
    if (!diags.empty()) return std::nullopt;
    return m;
}

// Semantic invariants of a structurally complete model.
inline void check_model(const Model& m, std::vector<Diagnostic>& diags) {
    const RootDatum& rd = *m.rd;
    const std::size_t n = rd.rank;
    auto fail = [&](const std::string& p, const std::string& msg) { diags.push_back({p, msg}); };

    std::set<std::string> ids;
    for (std::size_t i = 0; i < m.walls.size(); ++i) {
        std::string p = "$.walls[" + std::to_string(i) + "]";
        const Wall& w = m.walls[i];
        if (!ids.insert(m.wall_ids[i]).second) fail(p + ".id", "duplicate wall id '" + m.wall_ids[i] + "'");
        if (rank(w.directions, n) != w.directions.size()) fail(p + ".directions", "directions are dependent");
        if (rank(w.normals, n) != w.normals.size()) fail(p + ".normals", "normals are dependent");
        if (w.directions.size() + w.normals.size() != n)
            fail(p, "directions and normals must together have " + std::to_string(n) + " vectors");
        for (std::size_t a = 0; a < w.directions.size(); ++a)
            for (std::size_t b = 0; b < w.normals.size(); ++b)
                if (rd.pairing(w.directions[a], w.normals[b]) != 0)
                    fail(p + ".normals[" + std::to_string(b) + "]",
                         "not orthogonal to direction " + std::to_string(a));
    }
    if (!diags.empty()) return;

    std::set<std::string> used;
    for (std::size_t i = 0; i < m.data.size(); ++i) {
        const auto& d = m.data[i];
        std::string p = "$.data[" + std::to_string(i) + "]";
        if (!used.insert(d.wall_id).second) fail(p + ".wall", "a second datum on wall '" + d.wall_id + "'");
        if (!wall_contains(rd, d.wall, d.beta)) fail(p + ".beta", "critical value is not on its wall");
        else if (wall_project(rd, d.wall, m.gamma) != d.beta)
            fail(p + ".beta", "critical value must be the projection of gamma, " +
                                  to_string(wall_project(rd, d.wall, m.gamma)));
        if (d.base_orientation != 1 && d.base_orientation != -1) fail(p + ".base_orientation", "must be +1 or -1");
        if (d.sgn_g != 1 && d.sgn_g != -1) fail(p + ".sgn_g", "must be +1 or -1");
        if (d.chern_degree_cap < 0) fail(p + ".chern_degree_cap", "must be nonnegative");
        bool weights_ok = true;
        for (std::size_t k = 0; k < d.weights.size(); ++k) {
            std::string wp = p + ".weights[" + std::to_string(k) + "]";
            const auto& w = d.weights[k];
            if (w.rank < 1) {
                fail(wp + ".rank", "complex rank must be positive");
                weights_ok = false;
            }
            if (w.vector.is_zero()) {
                fail(wp + ".vector", "weight is zero");
                weights_ok = false;
                continue;
            }
            for (const auto& dir : d.wall.directions)
                if (rd.pairing(w.vector, dir) != 0) {
                    fail(wp + ".vector", "weight " + to_string(w.vector) + " is not orthogonal to its wall");
                    weights_ok = false;
                    break;
                }
            if (!d.beta.empty() && rd.pairing(w.vector, d.beta - m.gamma) == 0) {
                fail(wp + ".vector", "weight pairs to zero with beta - gamma");
                weights_ok = false;
            }
        }
        for (std::size_t e = 0; e < d.chern_table.size(); ++e) {
            std::string ep = p + ".chern_table[" + std::to_string(e) + "]";
            const auto& ce = d.chern_table[e];
            if (ce.xi.size() != d.wall.directions.size())
                fail(ep + ".xi", "expected " + std::to_string(d.wall.directions.size()) + " exponents");
            for (int x : ce.xi)
                if (x < 0) fail(ep + ".xi", "exponents must be nonnegative");
            for (const auto& [k, mm] : ce.chern) {
                if (k < 0 || static_cast<std::size_t>(k) >= d.weights.size())
                    fail(ep + ".chern", "weight index " + std::to_string(k) + " out of range");
                else if (mm < 1 || mm > d.weights[static_cast<std::size_t>(k)].rank)
                    fail(ep + ".chern", "Chern degree " + std::to_string(mm) + " outside 1..rank");
            }
            if (ChernSeries::degree(ce.chern) > d.chern_degree_cap)
                fail(ep + ".chern", "total Chern degree exceeds chern_degree_cap " + std::to_string(d.chern_degree_cap));
            for (std::size_t f = 0; f < e; ++f)
                if (d.chern_table[f].chern == ce.chern && d.chern_table[f].xi == ce.xi) fail(ep, "duplicate entry");
        }
        if (weights_ok && d.chern_degree_cap >= 0) {
            const ChernSeries series = inverse_euler_series(weight_ranks(d), d.chern_degree_cap);
            for (const auto& [key, c] : series.terms())
                if (!detail::table_polynomial(d, key.first))
                    fail(p + ".chern_table", "missing entry for " + detail::chern_text(key.first));
        }
    }
    if (m.window_default.lo.size() != n || m.window_default.hi.size() != n) fail("$.window_default", "wrong size");
    else if (m.window_default.empty()) fail("$.window_default", "lo exceeds hi");
    if (!diags.empty()) return;
    try {
        auto rep = genericity_check(m);
        if (!rep.ok())
            for (const auto& s : rep.diagnostics) fail("$.gamma", "not generic: " + s);
    } catch (const Error& e) {
        fail("$", e.what());
    }
}

inline std::vector<Diagnostic> validate(const json& j) {
    std::vector<Diagnostic> diags;
    model_from_json(j, diags);
    return diags;
}

inline Model model_from_json(const json& j) {
    std::vector<Diagnostic> diags;
    auto m = model_from_json(j, diags);
    if (!m) throw ModelError(std::move(diags));
    return *m;
}

inline json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::Parse, origin + ": " + e.what());
    }
}

inline Model builtin_s4(const Rational& gamma = frac(1, 4));
inline Model builtin_woodward_su3();

// A path, or "builtin:s4" / "builtin:woodward".
inline Model load_model(const std::string& path) {
    if (path == "builtin:s4") return builtin_s4();
    if (path == "builtin:woodward") return builtin_woodward_su3();
    std::ifstream in(path);
    if (!in) throw Error(Errc::Parse, "cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return model_from_json(parse_json_text(ss.str(), path));
}

inline void save_model(const Model& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::Parse, "cannot write '" + path + "'");
    out << dump(model_json(m));
}

// ---------------------------------------------------------------- distributions

inline json distribution_json(const ConeDistribution& d) {
    json j;
    j["root_datum"] = std::string(type_tag(d.ambient().type));
    j["terms"] = json::array();
    for (const auto& t : d.terms()) {
        json poly = json::array();
        for (const auto& [e, c] : t.xi_poly.terms()) poly.push_back({{"exp", e}, {"coef", rational_json(c)}});
        j["terms"].push_back({{"coef", rational_json(t.coef)},
                              {"base", vec_json(t.base)},
                              {"gens", vecs_json(t.gens)},
                              {"leb", vecs_json(t.leb)},
                              {"xi_poly", poly}});
    }
    return j;
}

inline ConeDistribution distribution_from_json(const json& j) {
    detail::Reader r;
    const json* tag = r.field(j, "$", "root_datum");
    if (!tag || !tag->is_string()) throw ModelError(std::vector<Diagnostic>{{"$.root_datum", "missing root datum tag"}});
    auto rd = std::make_shared<const RootDatum>(build_root_datum(tag->get<std::string>()));
    ConeDistribution d(rd);
    const json* ts = r.field(j, "$", "terms");
    if (ts && ts->is_array())
        for (std::size_t i = 0; i < ts->size(); ++i) {
            std::string p = "$.terms[" + std::to_string(i) + "]";
            const json& tj = (*ts)[i];
            ConeTerm t;
            if (auto x = r.field(tj, p, "coef"))
                if (auto q = r.rational(*x, p + ".coef")) t.coef = *q;
            if (auto x = r.field(tj, p, "base"))
                if (auto b = r.vec(*x, p + ".base", rd->rank)) t.base = *b;
            if (auto x = r.field(tj, p, "gens")) t.gens = r.vecs(*x, p + ".gens", rd->rank);
            if (auto x = r.field(tj, p, "leb")) t.leb = r.vecs(*x, p + ".leb", rd->rank);
            t.xi_poly = Polynomial(t.leb.size());
            if (auto x = r.field(tj, p, "xi_poly"); x && x->is_array())
                for (const auto& mono : *x) {
                    auto q = mono.contains("coef") ? r.rational(mono["coef"], p + ".xi_poly") : std::nullopt;
                    if (!q || !mono.contains("exp") || !mono["exp"].is_array() || mono["exp"].size() != t.leb.size()) {
                        r.fail(p + ".xi_poly", "malformed monomial");
                        continue;
                    }
                    t.xi_poly.add_term(mono["exp"].get<std::vector<int>>(), *q);
                }
            if (r.diags.empty()) d.add_term(std::move(t));
        }
    else
        r.fail("$.terms", "expected an array");
    if (!r.diags.empty()) throw ModelError(std::move(r.diags));
    return d;
}

// ---------------------------------------------------------------- builtin models

// S^4 with the SU(2) action: A1, point walls at the integers (two classes mod Lambda = 2Z).
inline Model builtin_s4(const Rational& gamma) {
    Model m;
    m.name = "s4";
    m.rd = std::make_shared<const RootDatum>(build_root_datum(RootType::A1));
    m.gamma = Vec{gamma};
    m.allow_nongeneric_gamma = gamma == 0;
    m.wall_ids = {"t", "z0", "z1"};
    m.walls = {Wall{Vec{0}, {Vec{1}}, {}}, Wall{Vec{0}, {}, {Vec{1}}}, Wall{Vec{1}, {}, {Vec{1}}}};

    FixedPointDatum central;
    central.wall_id = "t";
    central.wall = m.walls[0];
    central.beta = m.gamma;
    central.chern_table = {{{}, {0}, 1}};

    auto fixed_point = [&](std::size_t wall, int sgn) {
        FixedPointDatum d;
        d.wall_id = m.wall_ids[wall];
        d.wall = m.walls[wall];
        d.beta = d.wall.basepoint;
        d.weights = {{Vec{1}, 1}, {Vec{-1}, 1}};
        d.chern_table = {{{}, {}, 1}};
        d.sgn_g = sgn;
        return d;
    };
    m.data = {central, fixed_point(1, 1), fixed_point(2, -1)};
    m.window_default = Box{Vec{-3}, Vec{4}};
    m.metadata = {{"description", "S^4 as a q-Hamiltonian SU(2)-space, torus weights +1 and -1 at the fixed points"},
                  {"coordinates", "t* = R with the weight lattice Z; root 2; Lambda = 2Z; alcove [0,1]"},
                  {"walls", "z0 generates the even integers and z1 the odd ones under Lambda; sgn_g = -1 at exp(1) = -I"}};
    return m;
}

// Multiplicity-free SU(3)-space: no fixed points; walls through the edges of the medial triangle.
inline Model builtin_woodward_su3() {
    Model m;
    m.name = "woodward_su3";
    m.rd = std::make_shared<const RootDatum>(build_root_datum(RootType::A2));
    m.gamma = Vec{0, 0};
    m.allow_nongeneric_gamma = true;
    m.wall_ids = {"t", "delta_a"};
    m.walls = {Wall{Vec{0, 0}, {Vec{1, 0}, Vec{0, 1}}, {}},
               Wall{Vec{frac(1, 4), frac(1, 4)}, {Vec{1, -1}}, {Vec{1, 1}}}};
    FixedPointDatum a;
    a.wall_id = "delta_a";
    a.wall = m.walls[1];
    a.beta = Vec{frac(1, 4), frac(1, 4)};
    a.weights = {{Vec{frac(-1, 2), frac(-1, 2)}, 1}};
    a.chern_table = {{{}, {0}, 1}};
    m.data = {a};
    m.window_default = Box{Vec{-2, -2}, Vec{2, 2}};
    m.metadata = {{"description", "multiplicity-free q-Hamiltonian SU(3)-space; the central contribution vanishes"},
                  {"coordinates", "fundamental-weight basis; Lambda = root lattice; alcove x1, x2 >= 0, x1 + x2 <= 1"},
                  {"critical_values", "a = (1/4,1/4) on x1+x2 = 1/2; b = (1/2,-1/4) and c = (-1/4,1/2) are its Weyl images "
                                      "with sign -1"}};
    return m;
}

} // namespace dhloc
