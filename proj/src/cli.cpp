#include "lpa/cli.hpp"

#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "lpa/blanchfield.hpp"
#include "lpa/errors.hpp"
#include "lpa/json_io.hpp"
#include "lpa/ktheory.hpp"
#include "lpa/simples.hpp"

namespace lpa::cli {

namespace {
using io::Json;

struct Options {
    std::string quiver, input, field = "q", format = "json", target = "leavitt";
    int degree = 0;
    std::size_t dmax = 2;
    std::uint64_t seed = 0;
    bool serial = false;
};

Json cmd_quiver_info(const Options& o) {
    const auto q = io::quiver_from_json(io::read_file(o.quiver));
    auto names = [&](const std::vector<VertexIndex>& vs) {
        Json a = Json::array();
        for (auto v : vs) a.push_back(q->vertex_name(v));
        return a;
    };
    const auto inc = incidence(*q);
    std::vector<VertexIndex> regular = inc.columns;
    return {{"vertices", q->vertex_names()},
            {"arrows", q->num_arrows()},
            {"sinks", names(sinks(*q))},
            {"sources", names(sources(*q))},
            {"regular", names(regular)},
            {"adjacency", io::to_json(adjacency(*q))},
            {"N_E", io::to_json(inc.n_e)},
            {"acyclic", is_acyclic(*q)}};
}

Json cmd_ktheory(const Options& o) {
    const auto q = io::quiver_from_json(io::read_file(o.quiver));
    const Field f = Field::parse(o.field);
    KReport r;
    switch (parse_target(o.target)) {
        case KTarget::Leavitt: r = k_leavitt(q, f, o.degree); break;
        case KTarget::Rational: r = k_rational(q, f, o.degree, o.dmax); break;
        case KTarget::Regular: r = k_regular(q, f, o.degree, o.dmax); break;
    }
    Json j = io::to_json(r);
    if (r.target == KTarget::Leavitt && r.degree == 0) j["kernel_rank"] = k0_leavitt(*q).ker_rank;
    return j;
}

Json simple_entry(const Rep& s) {
    Json j = {{"fingerprint", fingerprint(s)}};
    const auto nu = is_coker_nu(s);
    j["coker_nu"] = nu ? Json(s.quiver()->vertex_name(*nu)) : Json();
    if (s.field().is_finite()) j["endo_degree"] = endomorphism_field_degree(s);
    j["rep"] = io::to_json(s);
    return j;
}

Json cmd_comp_series(const Options& o) {
    const auto q = io::quiver_from_json(io::read_file(o.quiver));
    const Rep r = io::rep_from_json(q, Field::parse(o.field), io::read_file(o.input));
    const auto cs = composition_series(r, o.seed);
    Json factors = Json::array();
    for (const auto& s : cs.factors) factors.push_back(simple_entry(s));
    return {{"dim", r.total_dim()}, {"length", cs.length()}, {"factors", factors}};
}

Json cmd_induce(const Options& o) {
    const auto q = io::quiver_from_json(io::read_file(o.quiver));
    const Rep r = io::rep_from_json(q, Field::parse(o.field), io::read_file(o.input));
    const auto fs = induced_factors(r);
    std::size_t len = 0;
    for (const auto& f : fs) len += f.multiplicity;
    return {{"induced_length", len},
            {"killed", len == 0},
            {"blanchfield", is_blanchfield_induced(r)},
            {"factors", io::to_json(fs)}};
}

Json cmd_simples(const Options& o) {
    const auto q = io::quiver_from_json(io::read_file(o.quiver));
    const auto ss = enumerate_simples(q, Field::parse(o.field), o.dmax, !o.serial);
    Json a = Json::array();
    for (const auto& s : ss) a.push_back(simple_entry(s));
    return {{"dmax", o.dmax}, {"count", ss.size()}, {"simples", a}};
}

Json cmd_from_sigma(const Options& o) {
    const auto q = io::quiver_from_json(io::read_file(o.quiver));
    const auto sigma = io::algebra_matrix_from_json(q, Field::parse(o.field), io::read_file(o.input));
    return io::to_json(sigma_to_lattice(sigma));
}

struct ModuleInput {
    QuiverPtr q;
    std::optional<FilteredFreeModule> m;
    std::vector<ModuleVector> gens;
    Json raw;
};

ModuleInput load_module(const Options& o, const char* key) {
    ModuleInput in;
    in.q = io::quiver_from_json(io::read_file(o.quiver));
    in.raw = io::read_file(o.input);
    in.m = io::module_from_json(in.q, Field::parse(o.field), in.raw);
    if (!in.raw.contains(key) || !in.raw[key].is_array()) throw MalformedInput(std::string("missing array '") + key + "'");
    for (const auto& g : in.raw[key]) in.gens.push_back(io::vector_from_json(*in.m, g));
    return in;
}

Json vectors(const FilteredFreeModule& m, const std::vector<ModuleVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) {
        const auto h = v.homogeneous_vertex();
        a.push_back({{"degree", degree(m, v)},
                     {"vertex", h ? Json(m.quiver()->vertex_name(*h)) : Json()},
                     {"vector", io::to_json(m, v)}});
    }
    return a;
}

Json cmd_weak_basis(const Options& o) {
    const auto in = load_module(o, "generators");
    const auto wb = weak_basis(*in.m, in.gens);
    return {{"size", wb.size()}, {"independent", is_independent(*in.m, wb)}, {"basis", vectors(*in.m, wb)}};
}

Json cmd_member(const Options& o) {
    const auto in = load_module(o, "generators");
    if (!in.raw.contains("query")) throw MalformedInput("missing 'query'");
    const auto v = io::vector_from_json(*in.m, in.raw["query"]);
    const auto wb = weak_basis(*in.m, in.gens);
    const auto nf = normal_form(*in.m, v, wb);
    Json witness = Json::array();
    for (const auto& w : nf.witness) witness.push_back(io::to_json(w));
    return {{"member", nf.remainder.is_zero()},
            {"remainder", io::to_json(*in.m, nf.remainder)},
            {"basis", vectors(*in.m, wb)},
            {"witness", witness}};
}

Json cmd_projective_split(const Options& o) {
    const auto in = load_module(o, "relations");
    const auto ps = projective_split(*in.m, in.gens);
    Json mu = Json::object();
    for (const auto& b : ps.module.basis()) mu[b.label] = b.mu;
    return {{"n", ps.n},
            {"mu", mu},
            {"dim_L_mod_Q", ps.dim_L_mod_Q},
            {"independent", ps.independent},
            {"cutoff_ok", ps.cutoff_ok},
            {"relations_basis", vectors(ps.module, ps.relations_basis)},
            {"q_gens", vectors(ps.module, ps.q_gens)}};
}

int exit_code(const Error& e) {
    const std::string& k = e.kind();
    return (k == "UnsupportedDegree" || k == "InfiniteFieldUnsupported") ? 2 : 1;
}

std::string one_line(std::string s) {
    for (auto& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    return s;
}
}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for Leavitt path algebras and quiver representations", "lpa"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c, bool field = true) {
        c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        if (field) c->add_option("--field", o.field, "q or fp:<p>");
    };

    auto* quiver = app.add_subcommand("quiver", "quiver summaries")->require_subcommand(1);
    auto* info = quiver->add_subcommand("info", "sinks, sources, N_E");
    info->add_option("quiver", o.quiver)->required();
    common(info, false);

    auto* kt = app.add_subcommand("ktheory", "K-groups of L(E), the rational closure or Q(E)");
    kt->add_option("quiver", o.quiver)->required();
    kt->add_option("--degree", o.degree);
    kt->add_option("--target", o.target)->check(CLI::IsMember({"leavitt", "rational", "regular"}));
    kt->add_option("--dmax", o.dmax);
    common(kt);

    auto* rep = app.add_subcommand("rep", "finite-dimensional representations")->require_subcommand(1);
    auto* cs = rep->add_subcommand("comp-series", "composition factors");
    auto* ind = rep->add_subcommand("induce", "length of L(E) (x) N");
    for (auto* c : {cs, ind}) {
        c->add_option("quiver", o.quiver)->required();
        c->add_option("rep", o.input)->required();
        common(c);
    }
    cs->add_option("--seed", o.seed);
    auto* sim = rep->add_subcommand("simples", "simple P(Ebar)-modules up to a dimension");
    sim->add_option("quiver", o.quiver)->required();
    sim->add_option("--dmax", o.dmax);
    sim->add_flag("--serial", o.serial, "skip the OpenMP filter");
    common(sim);

    auto* tor = app.add_subcommand("torsion", "torsion modules")->require_subcommand(1);
    auto* fs = tor->add_subcommand("from-sigma", "lattice of coker(sigma)");
    fs->add_option("quiver", o.quiver)->required();
    fs->add_option("sigma", o.input)->required();
    common(fs);

    auto* mod = app.add_subcommand("module", "submodules of filtered free modules")->require_subcommand(1);
    auto* wb = mod->add_subcommand("weak-basis", "weak basis of the generated submodule");
    auto* mem = mod->add_subcommand("member", "membership with witness");
    auto* ps = mod->add_subcommand("projective-split", "projective Q inside F/N");
    for (auto* c : {wb, mem, ps}) {
        c->add_option("quiver", o.quiver)->required();
        c->add_option("module", o.input)->required();
        common(c);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: Usage: " << one_line(e.what()) << '\n';
        return 1;
    }

    try {
        Json j;
        if (info->parsed())
            j = cmd_quiver_info(o);
        else if (kt->parsed())
            j = cmd_ktheory(o);
        else if (cs->parsed())
            j = cmd_comp_series(o);
        else if (ind->parsed())
            j = cmd_induce(o);
        else if (sim->parsed())
            j = cmd_simples(o);
        else if (fs->parsed())
            j = cmd_from_sigma(o);
        else if (wb->parsed())
            j = cmd_weak_basis(o);
        else if (mem->parsed())
            j = cmd_member(o);
        else
            j = cmd_projective_split(o);
        if (o.format == "text")
            out << io::to_text(j);
        else
            out << j.dump(2) << '\n';
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << one_line(e.what()) << '\n';
        return exit_code(e);
    } catch (const nlohmann::json::exception& e) {
        err << "error: MalformedInput: " << one_line(e.what()) << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: Internal: " << one_line(e.what()) << '\n';
        return 1;
    }
}

}  // namespace lpa::cli
