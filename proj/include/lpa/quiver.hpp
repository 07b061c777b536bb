#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lpa/integer_matrix.hpp"

namespace lpa {

using VertexIndex = std::uint32_t;
using ArrowIndex = std::uint32_t;

struct Arrow {
    std::string name;
    VertexIndex src = 0;
    VertexIndex dst = 0;
};

/// A path stored by its endpoints and arrow indices. Trivial paths have an
/// empty arrow list and source == range.
struct Path {
    VertexIndex source = 0;
    VertexIndex range = 0;
    std::vector<ArrowIndex> arrows;

    static Path trivial(VertexIndex v) { return Path{v, v, {}}; }
    std::size_t length() const { return arrows.size(); }
    bool is_trivial() const { return arrows.empty(); }

    friend bool operator==(const Path&, const Path&) = default;
};

/// Length-lexicographic order on arrow sequences; trivial paths by vertex.
struct PathLess {
    bool operator()(const Path& a, const Path& b) const;
};

/// Finite quiver E = (E0, E1, s, r). Declaration order of vertices fixes all
/// matrix indexing. Immutable once constructed.
class Quiver {
public:
    struct ArrowSpec {
        std::string name;
        std::string src;
        std::string dst;
    };

    /// Validates and builds. Throws MalformedQuiver on duplicate names,
    /// dangling endpoints or an empty vertex list.
    Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& vertex_names() const { return vertices_; }
    const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
    const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    VertexIndex vertex_index(const std::string& name) const;
    ArrowIndex arrow_index(const std::string& name) const;
    std::optional<VertexIndex> find_vertex(const std::string& name) const;
    std::optional<ArrowIndex> find_arrow(const std::string& name) const;

    /// Arrows with the given source, in declaration order.
    const std::vector<ArrowIndex>& arrows_from(VertexIndex v) const { return out_.at(v); }
    /// Arrows with the given range, in declaration order.
    const std::vector<ArrowIndex>& arrows_into(VertexIndex v) const { return in_.at(v); }

    bool is_sink(VertexIndex v) const { return out_.at(v).empty(); }
    bool is_source(VertexIndex v) const { return in_.at(v).empty(); }

    std::vector<ArrowSpec> arrow_specs() const;

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices_ == b.vertices_ && a.arrow_specs_equal(b);
    }

private:
    bool arrow_specs_equal(const Quiver& other) const;

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, VertexIndex> vertex_lookup_;
    std::map<std::string, ArrowIndex> arrow_lookup_;
    std::vector<std::vector<ArrowIndex>> out_;
    std::vector<std::vector<ArrowIndex>> in_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

inline QuiverPtr make_quiver(std::vector<std::string> vertices,
                             const std::vector<Quiver::ArrowSpec>& arrows) {
    return std::make_shared<const Quiver>(std::move(vertices), arrows);
}

// ---- queries -------------------------------------------------------------

std::vector<VertexIndex> sinks(const Quiver& q);
std::vector<VertexIndex> sources(const Quiver& q);

/// (A_E)_{ij} = number of arrows i -> j.
IntMatrix adjacency(const Quiver& q);

struct IncidencePair {
    IntMatrix n_e;  ///< A_E^t with sink columns removed (d x (d - #sinks)).
    IntMatrix one;  ///< identity with sink columns removed.
    std::vector<VertexIndex> columns;  ///< the non-sink vertex of each column
};
IncidencePair incidence(const Quiver& q);

/// Arrow name of the reversed arrow in the inverse quiver.
std::string bar_name(const std::string& arrow_name);

/// All arrows reversed, e -> bar_name(e); vertex order preserved.
Quiver inverse_quiver(const Quiver& q);

/// True iff no directed cycle is reachable from v.
bool is_forward_acyclic(const Quiver& q, VertexIndex v);

/// Number of paths with source v, or nullopt when infinite.
std::optional<mpz_class> count_paths_from(const Quiver& q, VertexIndex v);

/// All paths of length <= n, length-lexicographic by arrow order.
std::vector<Path> paths_up_to(const Quiver& q, std::size_t n);

/// All paths of exactly length n, in length-lexicographic order.
std::vector<Path> paths_of_length(const Quiver& q, std::size_t n);

/// Paths of exactly length n ending at `range`.
std::vector<Path> paths_of_length_into(const Quiver& q, std::size_t n, VertexIndex range);

/// Number of paths of length <= n ending at `range`.
std::size_t count_paths_into_up_to(const Quiver& q, std::size_t n, VertexIndex range);

/// Concatenation a*b; nullopt when r(a) != s(b).
std::optional<Path> concat(const Path& a, const Path& b);

std::string path_to_string(const Quiver& q, const Path& p);

}  // namespace lpa
