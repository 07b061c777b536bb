#include "lpa/quiver.hpp"

#include <algorithm>
#include <functional>

#include "lpa/errors.hpp"

namespace lpa {

bool PathLess::operator()(const Path& a, const Path& b) const {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.source < b.source;
}

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw MalformedQuiver("quiver has no vertices");
    for (VertexIndex i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].empty()) throw MalformedQuiver("empty vertex name");
        if (!vertex_lookup_.emplace(vertices_[i], i).second)
            throw MalformedQuiver("duplicate vertex '" + vertices_[i] + "'");
    }
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    for (const auto& spec : arrows) {
        if (spec.name.empty()) throw MalformedQuiver("empty arrow name");
        const auto s = find_vertex(spec.src);
        const auto d = find_vertex(spec.dst);
        if (!s) throw MalformedQuiver("arrow '" + spec.name + "' has undeclared source '" + spec.src + "'");
        if (!d) throw MalformedQuiver("arrow '" + spec.name + "' has undeclared range '" + spec.dst + "'");
        const auto idx = static_cast<ArrowIndex>(arrows_.size());
        if (!arrow_lookup_.emplace(spec.name, idx).second)
            throw MalformedQuiver("duplicate arrow '" + spec.name + "'");
        arrows_.push_back(Arrow{spec.name, *s, *d});
        out_[*s].push_back(idx);
        in_[*d].push_back(idx);
    }
}

std::optional<VertexIndex> Quiver::find_vertex(const std::string& name) const {
    const auto it = vertex_lookup_.find(name);
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<ArrowIndex> Quiver::find_arrow(const std::string& name) const {
    const auto it = arrow_lookup_.find(name);
    if (it == arrow_lookup_.end()) return std::nullopt;
    return it->second;
}

VertexIndex Quiver::vertex_index(const std::string& name) const {
    if (auto v = find_vertex(name)) return *v;
    throw MalformedInput("unknown vertex '" + name + "'");
}

ArrowIndex Quiver::arrow_index(const std::string& name) const {
    if (auto a = find_arrow(name)) return *a;
    throw MalformedInput("unknown arrow '" + name + "'");
}

std::vector<Quiver::ArrowSpec> Quiver::arrow_specs() const {
    std::vector<ArrowSpec> out;
    out.reserve(arrows_.size());
    for (const auto& a : arrows_) out.push_back({a.name, vertices_[a.src], vertices_[a.dst]});
    return out;
}

bool Quiver::arrow_specs_equal(const Quiver& other) const {
    if (arrows_.size() != other.arrows_.size()) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const auto& a = arrows_[i];
        const auto& b = other.arrows_[i];
        if (a.name != b.name || a.src != b.src || a.dst != b.dst) return false;
    }
    return true;
}

std::vector<VertexIndex> sinks(const Quiver& q) {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < q.num_vertices(); ++v)
        if (q.is_sink(v)) out.push_back(v);
    return out;
}

std::vector<VertexIndex> sources(const Quiver& q) {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < q.num_vertices(); ++v)
        if (q.is_source(v)) out.push_back(v);
    return out;
}

IntMatrix adjacency(const Quiver& q) {
    IntMatrix a(q.num_vertices(), q.num_vertices());
    for (const auto& e : q.arrows()) a(e.src, e.dst) += 1;
    return a;
}

IncidencePair incidence(const Quiver& q) {
    const IntMatrix at = adjacency(q).transpose();
    IncidencePair out;
    for (VertexIndex v = 0; v < q.num_vertices(); ++v)
        if (!q.is_sink(v)) out.columns.push_back(v);
    const std::size_t d = q.num_vertices();
    out.n_e = IntMatrix(d, out.columns.size());
    out.one = IntMatrix(d, out.columns.size());
    for (std::size_t c = 0; c < out.columns.size(); ++c) {
        for (std::size_t r = 0; r < d; ++r) out.n_e(r, c) = at(r, out.columns[c]);
        out.one(out.columns[c], c) = 1;
    }
    return out;
}

std::string bar_name(const std::string& arrow_name) { return arrow_name + "~"; }

Quiver inverse_quiver(const Quiver& q) {
    std::vector<Quiver::ArrowSpec> arrows;
    for (const auto& a : q.arrows())
        arrows.push_back({bar_name(a.name), q.vertex_name(a.dst), q.vertex_name(a.src)});
    return Quiver(q.vertex_names(), arrows);
}

bool is_forward_acyclic(const Quiver& q, VertexIndex start) {
    // iterative DFS with white/grey/black colouring
    enum class Colour { White, Grey, Black };
    std::vector<Colour> colour(q.num_vertices(), Colour::White);
    std::vector<std::pair<VertexIndex, std::size_t>> stack{{start, 0}};
    colour[start] = Colour::Grey;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& out = q.arrows_from(v);
        if (next == out.size()) {
            colour[v] = Colour::Black;
            stack.pop_back();
            continue;
        }
        const VertexIndex w = q.arrow(out[next++]).dst;
        if (colour[w] == Colour::Grey) return false;
        if (colour[w] == Colour::White) {
            colour[w] = Colour::Grey;
            stack.emplace_back(w, 0);
        }
    }
    return true;
}

std::optional<mpz_class> count_paths_from(const Quiver& q, VertexIndex v) {
    if (!is_forward_acyclic(q, v)) return std::nullopt;
    std::vector<std::optional<mpz_class>> memo(q.num_vertices());
    std::function<mpz_class(VertexIndex)> count = [&](VertexIndex u) -> mpz_class {
        if (memo[u]) return *memo[u];
        mpz_class c = 1;
        for (ArrowIndex a : q.arrows_from(u)) c += count(q.arrow(a).dst);
        memo[u] = c;
        return c;
    };
    return count(v);
}

std::vector<Path> paths_of_length(const Quiver& q, std::size_t n) {
    std::vector<Path> layer;
    for (VertexIndex v = 0; v < q.num_vertices(); ++v) layer.push_back(Path::trivial(v));
    for (std::size_t len = 0; len < n; ++len) {
        std::vector<Path> next;
        for (const auto& p : layer)
            for (ArrowIndex a : q.arrows_from(p.range)) {
                Path ext = p;
                ext.arrows.push_back(a);
                ext.range = q.arrow(a).dst;
                next.push_back(std::move(ext));
            }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end(), PathLess{});
    return layer;
}

std::vector<Path> paths_up_to(const Quiver& q, std::size_t n) {
    std::vector<Path> out;
    for (std::size_t len = 0; len <= n; ++len) {
        auto layer = paths_of_length(q, len);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<Path> paths_of_length_into(const Quiver& q, std::size_t n, VertexIndex range) {
    // grow leftwards from the range vertex
    std::vector<Path> layer{Path::trivial(range)};
    for (std::size_t len = 0; len < n; ++len) {
        std::vector<Path> next;
        for (const auto& p : layer)
            for (ArrowIndex a : q.arrows_into(p.source)) {
                Path ext;
                ext.source = q.arrow(a).src;
                ext.range = p.range;
                ext.arrows.reserve(p.arrows.size() + 1);
                ext.arrows.push_back(a);
                ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
                next.push_back(std::move(ext));
            }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end(), PathLess{});
    return layer;
}

std::size_t count_paths_into_up_to(const Quiver& q, std::size_t n, VertexIndex range) {
    std::vector<std::size_t> ending(q.num_vertices(), 0);  // paths from u to range of current length
    ending[range] = 1;
    std::size_t total = 1;
    for (std::size_t len = 1; len <= n; ++len) {
        std::vector<std::size_t> next(q.num_vertices(), 0);
        for (const auto& a : q.arrows()) next[a.src] += ending[a.dst];
        ending = std::move(next);
        for (auto c : ending) total += c;
    }
    return total;
}

std::optional<Path> concat(const Path& a, const Path& b) {
    if (a.range != b.source) return std::nullopt;
    Path r;
    r.source = a.source;
    r.range = b.range;
    r.arrows.reserve(a.arrows.size() + b.arrows.size());
    r.arrows = a.arrows;
    r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
    return r;
}

std::string path_to_string(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return "p_" + q.vertex_name(p.source);
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) s += (i ? "." : "") + q.arrow(p.arrows[i]).name;
    return s;
}

}  // namespace lpa
