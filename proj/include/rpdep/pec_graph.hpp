#ifndef RPDEP_PEC_GRAPH_HPP_
#define RPDEP_PEC_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "rpdep/formula.hpp"

namespace rpdep {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

constexpr Color other(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }
char color_letter(Color c) noexcept;

/// Subset of {red, blue}.
class ColorSet
{
public:
    constexpr ColorSet() noexcept = default;
    constexpr bool contains(Color c) const noexcept { return (bits_ >> static_cast<unsigned>(c)) & 1u; }
    constexpr void insert(Color c) noexcept { bits_ |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(c)); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::uint8_t bits() const noexcept { return bits_; }
    constexpr bool operator==(const ColorSet&) const noexcept = default;

private:
    std::uint8_t bits_ = 0;
};

struct ColoredEdge
{
    std::uint32_t u;
    std::uint32_t v;
    Color color;
};

struct Neighbor
{
    std::uint32_t vertex;
    Color color;
};

/**
 * \brief Undirected, simple, 2-edge-colored graph in compressed adjacency form.
 */
class ColoredGraph
{
public:
    enum class Duplicates { Reject, Merge };

    ColoredGraph() = default;

    /**
     * Builds the graph in O(|V| + |E|). Self-loops are rejected. A repeated
     * vertex pair is rejected, or with Duplicates::Merge collapsed when the
     * colors agree (differing colors are always rejected).
     */
    static ColoredGraph from_edges(std::size_t vertex_count, std::span<const ColoredEdge> edges,
                                   Duplicates policy = Duplicates::Reject);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    /// Number of undirected edges.
    std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }
    std::size_t red_edge_count() const noexcept { return red_edges_; }

    std::span<const Neighbor> neighbors(std::uint32_t v) const
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    std::optional<Color> color_between(std::uint32_t u, std::uint32_t v) const;

    /// Each undirected edge once, with u < v, ascending.
    std::vector<ColoredEdge> edges() const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adjacency_;
    std::size_t red_edges_ = 0;
};

/// Uncolored graph whose vertices are literal codes followed by one vertex per clause.
struct IncidenceGraph
{
    std::size_t literal_vertices = 0;
    std::size_t clause_vertices = 0;
    std::vector<std::vector<std::uint32_t>> adjacency;

    std::uint32_t literal_vertex(Literal l) const noexcept { return l.code(); }
    std::uint32_t clause_vertex(std::size_t clause) const noexcept
    {
        return static_cast<std::uint32_t>(literal_vertices + clause);
    }
    bool is_clause_vertex(std::uint32_t v) const noexcept { return v >= literal_vertices; }
    std::size_t edge_count() const;
};

/**
 * Connection graph over literal codes: red edges z - ~z for z in X, blue
 * edges between literals sharing a clause. Requires a ternary formula so the
 * graph stays linear in |F|; throws std::invalid_argument otherwise, or when
 * X contains a universal or unknown variable.
 */
ColoredGraph build_connection_graph(const QcnfFormula& f, const VariableSet& x);

/**
 * Same construction without the ternary requirement. Each clause of width n
 * contributes a clique of n(n-1)/2 blue edges.
 */
ColoredGraph build_clique_graph(const QcnfFormula& f, const VariableSet& x);

/// Mask form: `connect[v]` selects the red edge of variable v.
ColoredGraph build_clique_graph(const QcnfFormula& f, const std::vector<bool>& connect);

/// Clause/literal incidence graph plus z - ~z edges for z in X.
IncidenceGraph build_incidence_graph(const QcnfFormula& f, const VariableSet& x);

enum class QueueDiscipline { Fifo, Lifo };

/// How a (vertex, color) label was first set.
struct LabelOrigin
{
    std::uint32_t vertex; ///< previous vertex on the walk
    bool seed;            ///< set from a blue edge at the source
};

/**
 * \brief Result of a PEC-walk run from one source.
 *
 * `colors(t)` holds every c such that some properly edge-colored walk from
 * the source to t starts with a blue edge and ends with an edge of color c.
 */
class ColorLabeling
{
public:
    std::uint32_t source() const noexcept { return source_; }
    std::size_t vertex_count() const noexcept { return colors_.size(); }
    ColorSet colors(std::uint32_t v) const { return colors_.at(v); }
    std::optional<LabelOrigin> origin(std::uint32_t v, Color c) const;
    /// Number of ordered pairs ever put on the queue, seeds included.
    std::size_t pushes() const noexcept { return pushes_; }

private:
    friend ColorLabeling pec_walk(const ColoredGraph&, std::uint32_t, QueueDiscipline);

    static constexpr std::uint32_t kNone = 0xffffffffu;

    std::uint32_t source_ = 0;
    std::vector<ColorSet> colors_;
    std::vector<std::uint32_t> origin_;     // indexed 2v + color
    std::vector<std::uint8_t> seed_origin_; // indexed 2v + color
    std::size_t pushes_ = 0;
};

/// Labels all vertices in O(|V| + |E|). Throws std::out_of_range for an unknown source.
ColorLabeling pec_walk(const ColoredGraph& g, std::uint32_t source,
                       QueueDiscipline discipline = QueueDiscipline::Fifo);

/// c in psi(t). Throws std::invalid_argument when t is the source.
bool reachable_with_last_color(const ColorLabeling& labeling, std::uint32_t t, Color c);

/**
 * Rebuilds a witness walk source, ..., t from the recorded origins and
 * revalidates it against g. Throws std::invalid_argument if c is not in psi(t).
 */
std::vector<std::uint32_t> extract_walk(const ColoredGraph& g, const ColorLabeling& labeling, std::uint32_t t,
                                        Color c);

/// Edges exist, colors alternate, first edge blue, and (if given) last edge has color `last`.
bool is_pec_walk(const ColoredGraph& g, std::span<const std::uint32_t> walk,
                 std::optional<Color> last = std::nullopt);

/// Line format: `v <n>` then `e <u> <v> <r|b>` per edge.
void write_graph_text(std::ostream& out, const ColoredGraph& g);

} // namespace rpdep

#endif
