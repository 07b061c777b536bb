#include "lpa/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lpa/errors.hpp"

namespace lpa::io {

namespace {
const Json& field_of(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string str(const Json& j, const char* what) {
    if (!j.is_string()) throw MalformedInput(std::string(what) + " must be a string");
    return j.get<std::string>();
}

VertexIndex vertex(const Quiver& q, const Json& j) {
    const auto v = q.find_vertex(str(j, "vertex name"));
    if (!v) throw MalformedInput("unknown vertex '" + j.get<std::string>() + "'");
    return *v;
}

std::vector<VertexIndex> vertices(const Quiver& q, const Json& j) {
    if (!j.is_array()) throw MalformedInput("vertex list must be an array");
    std::vector<VertexIndex> out;
    for (const auto& x : j) out.push_back(vertex(q, x));
    return out;
}

Json group_list(const std::vector<VertexIndex>& vs, const Quiver& q) {
    Json a = Json::array();
    for (auto v : vs) a.push_back(q.vertex_name(v));
    return a;
}
}  // namespace

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(path + ": " + e.what());
    }
}

QuiverPtr quiver_from_json(const Json& j) {
    const Json& vs = field_of(j, "vertices");
    if (!vs.is_array()) throw MalformedInput("vertices must be an array");
    std::vector<std::string> names;
    for (const auto& v : vs) names.push_back(str(v, "vertex name"));
    std::vector<Quiver::ArrowSpec> arrows;
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array()) throw MalformedInput("arrows must be an array");
        for (const auto& a : j["arrows"])
            arrows.push_back({str(field_of(a, "name"), "arrow name"), str(field_of(a, "src"), "src"),
                              str(field_of(a, "dst"), "dst")});
    }
    return make_quiver(std::move(names), arrows);
}

Json to_json(const Quiver& q) {
    Json arrows = Json::array();
    for (const auto& a : q.arrows())
        arrows.push_back({{"name", a.name}, {"src", q.vertex_name(a.src)}, {"dst", q.vertex_name(a.dst)}});
    return {{"vertices", q.vertex_names()}, {"arrows", arrows}};
}

Scalar scalar_from_json(const Field& f, const Json& j) {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
    throw MalformedInput("scalar must be a string or an integer");
}

AlgebraElement element_from_json(const QuiverPtr& q, const Field& f, const Json& j) {
    AlgebraElement x(q, f);
    const Json& terms = field_of(j, "terms");
    if (!terms.is_array()) throw MalformedInput("terms must be an array");
    for (const auto& t : terms) {
        const Json& p = field_of(t, "path");
        const VertexIndex base = vertex(*q, field_of(p, "base"));
        Path path = Path::trivial(base);
        if (p.contains("arrows")) {
            for (const auto& a : p["arrows"]) {
                const auto ai = q->find_arrow(str(a, "arrow name"));
                if (!ai) throw MalformedInput("unknown arrow '" + a.get<std::string>() + "'");
                if (q->arrow(*ai).src != path.range) throw MalformedInput("arrows do not compose from the base vertex");
                path.arrows.push_back(*ai);
                path.range = q->arrow(*ai).dst;
            }
        }
        x.add_term(path, scalar_from_json(f, field_of(t, "coeff")));
    }
    return x;
}

Json to_json(const AlgebraElement& x) {
    const Quiver& q = *x.quiver();
    Json terms = Json::array();
    for (const auto& [p, c] : x.terms()) {
        Json arrows = Json::array();
        for (auto a : p.arrows) arrows.push_back(q.arrow(a).name);
        terms.push_back({{"path", {{"base", q.vertex_name(p.source)}, {"arrows", arrows}}}, {"coeff", c.to_string()}});
    }
    return {{"terms", terms}};
}

AlgebraMatrix algebra_matrix_from_json(const QuiverPtr& q, const Field& f, const Json& j) {
    AlgebraMatrix m(q, f, vertices(*q, field_of(j, "row_types")), vertices(*q, field_of(j, "col_types")));
    const Json& e = field_of(j, "entries");
    if (!e.is_array() || e.size() != m.rows()) throw MalformedInput("entries must have one row per row type");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!e[i].is_array() || e[i].size() != m.cols()) throw MalformedInput("entry row has the wrong length");
        for (std::size_t k = 0; k < m.cols(); ++k) m.set(i, k, element_from_json(q, f, e[i][k]));
    }
    return m;
}

Json to_json(const AlgebraMatrix& m) {
    const Quiver& q = *m.quiver();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m.at(i, k)));
        rows.push_back(row);
    }
    return {{"row_types", group_list(m.row_types(), q)}, {"col_types", group_list(m.col_types(), q)}, {"entries", rows}};
}

Rep rep_from_json(const QuiverPtr& e, const Field& f, const Json& j) {
    Side side = Side::OverEbar;
    if (j.contains("side")) {
        const std::string s = str(j["side"], "side");
        if (s == "E")
            side = Side::OverE;
        else if (s != "Ebar")
            throw MalformedInput("side must be \"E\" or \"Ebar\"");
    }
    std::vector<std::size_t> dims(e->num_vertices(), 0);
    const Json& d = field_of(j, "dims");
    if (!d.is_object()) throw MalformedInput("dims must be an object");
    for (const auto& [name, n] : d.items()) {
        const auto v = e->find_vertex(name);
        if (!v) throw MalformedInput("unknown vertex '" + name + "'");
        if (!n.is_number_unsigned()) throw MalformedInput("dimension must be a non-negative integer");
        dims[*v] = n.get<std::size_t>();
    }
    const Rep zero = Rep::zero_maps(e, side, f, dims);
    std::vector<Matrix> maps = zero.maps();
    if (j.contains("maps")) {
        for (const auto& [name, rows] : j["maps"].items()) {
            auto a = e->find_arrow(name);
            if (!a && name.size() > 1 && name.back() == '~') a = e->find_arrow(name.substr(0, name.size() - 1));
            if (!a) throw MalformedInput("unknown arrow '" + name + "'");
            Matrix& m = maps[*a];
            if (!rows.is_array() || rows.size() != m.rows())
                throw ShapeMismatch("map " + name + " needs " + std::to_string(m.rows()) + " rows");
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (!rows[r].is_array() || rows[r].size() != m.cols())
                    throw ShapeMismatch("map " + name + " needs " + std::to_string(m.cols()) + " columns");
                for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scalar_from_json(f, rows[r][c]);
            }
        }
    }
    return Rep(e, side, f, dims, std::move(maps));
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_si());
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const Rep& r) {
    const Quiver& e = *r.quiver();
    Json dims = Json::object(), maps = Json::object();
    for (VertexIndex v = 0; v < e.num_vertices(); ++v) dims[e.vertex_name(v)] = r.dim(v);
    for (ArrowIndex a = 0; a < e.num_arrows(); ++a)
        if (r.map(a).rows() && r.map(a).cols()) maps[e.arrow(a).name] = to_json(r.map(a));
    return {{"side", side_name(r.side())}, {"dims", dims}, {"maps", maps}};
}

Json to_json(const std::vector<Scalar>& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(c.to_string());
    return a;
}

Json to_json(const FGAbelianGroup& g) {
    Json inv = Json::array();
    for (const auto& d : g.invariant_factors) inv.push_back(d.get_str());
    return {{"free_rank", g.free_rank}, {"invariant_factors", inv}, {"text", g.to_string()}};
}

Json to_json(const UnitCoker& u) {
    if (u.structural)
        return {{"structural", true},
                {"sign_part", to_json(u.two_torsion_part)},
                {"per_prime_part", to_json(u.per_prime_part)},
                {"text", u.to_string()}};
    return {{"structural", false}, {"group", to_json(u.group)}, {"text", u.to_string()}};
}

Json to_json(const BlaSummary& s) {
    Json gens = Json::array();
    for (const auto& g : s.generators)
        gens.push_back({{"fingerprint", g.fingerprint}, {"endo_degree", g.endo_degree}, {"rep", to_json(g.simple)}});
    return {{"dmax", s.dmax}, {"rank", s.generators.size()}, {"truncated", s.truncated}, {"generators", gens}};
}

Json to_json(const KReport& r) {
    Json j = {{"target", target_name(r.target)}, {"degree", r.degree}};
    if (r.integer_part) j["integer_part"] = to_json(*r.integer_part);
    if (r.unit_part) j["unit_part"] = to_json(*r.unit_part);
    if (r.bla_part) j["bla_part"] = to_json(*r.bla_part);
    return j;
}

Json to_json(const std::vector<FactorCount>& fs) {
    Json a = Json::array();
    for (const auto& f : fs)
        a.push_back({{"multiplicity", f.multiplicity},
                     {"endo_degree", f.simple.field().is_finite() ? Json(endomorphism_field_degree(f.simple)) : Json()},
                     {"rep", to_json(f.simple)}});
    return a;
}

Json to_json(const TorsionReport& t) {
    Json imgs = Json::array();
    for (const auto& g : t.generator_images) imgs.push_back(to_json(g));
    return {{"lattice", to_json(t.lattice)},
            {"generator_images", imgs},
            {"length", t.length},
            {"factors", to_json(t.factors)},
            {"blanchfield", t.blanchfield}};
}

FilteredFreeModule module_from_json(const QuiverPtr& q, const Field& f, const Json& j) {
    const Json& b = field_of(j, "basis");
    if (!b.is_array()) throw MalformedInput("basis must be an array");
    std::vector<FilteredFreeModule::BasisElement> basis;
    for (const auto& e : b) {
        long mu = 0;
        if (e.contains("mu")) {
            if (!e["mu"].is_number_integer()) throw MalformedInput("mu must be an integer");
            mu = e["mu"].get<long>();
        }
        basis.push_back({str(field_of(e, "label"), "label"), vertex(*q, field_of(e, "vertex")), mu});
    }
    return FilteredFreeModule(q, f, std::move(basis));
}

ModuleVector vector_from_json(const FilteredFreeModule& m, const Json& j) {
    if (!j.is_object()) throw MalformedInput("module vector must be an object keyed by basis label");
    ModuleVector v(m);
    for (const auto& [label, x] : j.items()) {
        std::size_t b = 0;
        try {
            b = m.index_of(label);
        } catch (const std::exception&) {
            throw MalformedInput("unknown basis label '" + label + "'");
        }
        v.set_coeff(m, b, element_from_json(m.quiver(), m.field(), x));
    }
    return v;
}

Json to_json(const FilteredFreeModule& m, const ModuleVector& v) {
    Json j = Json::object();
    for (std::size_t b = 0; b < v.rank(); ++b)
        if (!v.coeff(b).is_zero()) j[m.basis(b).label] = to_json(v.coeff(b));
    return j;
}

namespace {
void render(std::ostringstream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto scalar = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    auto flat = [&](const Json& x) {
        if (!x.is_array()) return false;
        for (const auto& y : x)
            if (y.is_structured() && !(y.is_array() && std::all_of(y.begin(), y.end(), [](const Json& z) { return z.is_primitive(); })))
                return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_primitive() || flat(v))
                os << pad << k << ": " << (v.is_primitive() ? scalar(v) : v.dump()) << '\n';
            else {
                os << pad << k << ":\n";
                render(os, v, indent + 1);
            }
        }
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) {
            if (v.is_primitive() || flat(v))
                os << pad << "- " << (v.is_primitive() ? scalar(v) : v.dump()) << '\n';
            else {
                os << pad << "- [" << i << "]\n";
                render(os, v, indent + 1);
            }
            ++i;
        }
    } else {
        os << pad << scalar(j) << '\n';
    }
}
}  // namespace

std::string to_text(const Json& j) {
    std::ostringstream os;
    render(os, j, 0);
    return os.str();
}

}  // namespace lpa::io
