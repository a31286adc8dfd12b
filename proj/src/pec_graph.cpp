#include "rpdep/pec_graph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rpdep {

namespace {

constexpr std::size_t label_index(std::uint32_t v, Color c) noexcept
{
    return 2 * static_cast<std::size_t>(v) + static_cast<std::size_t>(c);
}

void require_existential(const QcnfFormula& f, const VariableSet& x)
{
    for (const Variable v : x) {
        if (!f.in_prefix(v)) {
            throw std::invalid_argument("connecting set contains unknown variable " + std::to_string(v));
        }
        if (!f.is_existential(v)) {
            throw std::invalid_argument("connecting set contains universal variable " + std::to_string(v));
        }
    }
}

std::vector<bool> to_mask(const QcnfFormula& f, const VariableSet& x)
{
    std::vector<bool> mask(static_cast<std::size_t>(f.max_var()) + 1, false);
    for (const Variable v : x) {
        mask[v] = true;
    }
    return mask;
}

} // namespace

char color_letter(Color c) noexcept
{
    return c == Color::Red ? 'r' : 'b';
}

ColoredGraph ColoredGraph::from_edges(std::size_t vertex_count, std::span<const ColoredEdge> edges,
                                      Duplicates policy)
{
    std::vector<std::size_t> degree(vertex_count + 1, 0);
    for (const auto& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        ++degree[e.u];
        ++degree[e.v];
    }

    // Raw compressed adjacency, possibly with repeated pairs.
    std::vector<std::size_t> raw_offsets(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        raw_offsets[v + 1] = raw_offsets[v] + degree[v];
    }
    std::vector<Neighbor> raw(raw_offsets[vertex_count]);
    std::vector<std::size_t> fill(raw_offsets.begin(), raw_offsets.end() - 1);
    for (const auto& e : edges) {
        raw[fill[e.u]++] = {e.v, e.color};
        raw[fill[e.v]++] = {e.u, e.color};
    }

    ColoredGraph g;
    g.offsets_.assign(vertex_count + 1, 0);
    g.adjacency_.reserve(raw.size());
    // stamp[w] == v + 1 while scanning v's list; stamp_color remembers the edge color.
    std::vector<std::size_t> stamp(vertex_count, 0);
    std::vector<Color> stamp_color(vertex_count, Color::Red);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        for (std::size_t i = raw_offsets[v]; i < raw_offsets[v + 1]; ++i) {
            const auto nb = raw[i];
            if (stamp[nb.vertex] == v + 1) {
                if (policy == Duplicates::Reject || stamp_color[nb.vertex] != nb.color) {
                    throw std::invalid_argument("parallel edges between " + std::to_string(v) + " and " +
                                                std::to_string(nb.vertex));
                }
                continue;
            }
            stamp[nb.vertex] = v + 1;
            stamp_color[nb.vertex] = nb.color;
            g.adjacency_.push_back(nb);
            if (nb.color == Color::Red && v < nb.vertex) {
                ++g.red_edges_;
            }
        }
        g.offsets_[v + 1] = g.adjacency_.size();
    }
    return g;
}

std::optional<Color> ColoredGraph::color_between(std::uint32_t u, std::uint32_t v) const
{
    if (u >= vertex_count() || v >= vertex_count()) {
        return std::nullopt;
    }
    for (const auto& nb : neighbors(u)) {
        if (nb.vertex == v) {
            return nb.color;
        }
    }
    return std::nullopt;
}

std::vector<ColoredEdge> ColoredGraph::edges() const
{
    std::vector<ColoredEdge> result;
    for (std::uint32_t u = 0; u < vertex_count(); ++u) {
        for (const auto& nb : neighbors(u)) {
            if (u < nb.vertex) {
                result.push_back({u, nb.vertex, nb.color});
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    return result;
}

std::size_t IncidenceGraph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& list : adjacency) {
        total += list.size();
    }
    return total / 2;
}

ColoredGraph build_clique_graph(const QcnfFormula& f, const std::vector<bool>& connect)
{
    std::vector<ColoredEdge> edges;
    edges.reserve(f.size() + f.num_vars());
    for (const auto& clause : f.clauses()) {
        for (std::size_t i = 0; i < clause.size(); ++i) {
            for (std::size_t j = i + 1; j < clause.size(); ++j) {
                edges.push_back({clause[i].code(), clause[j].code(), Color::Blue});
            }
        }
    }
    for (Variable v = 1; v <= f.max_var() && v < connect.size(); ++v) {
        if (connect[v] && f.occurs(v)) {
            edges.push_back({pos(v).code(), neg(v).code(), Color::Red});
        }
    }
    return ColoredGraph::from_edges(f.literal_code_bound(), edges, ColoredGraph::Duplicates::Merge);
}

ColoredGraph build_clique_graph(const QcnfFormula& f, const VariableSet& x)
{
    require_existential(f, x);
    return build_clique_graph(f, to_mask(f, x));
}

ColoredGraph build_connection_graph(const QcnfFormula& f, const VariableSet& x)
{
    if (!f.is_ternary()) {
        throw std::invalid_argument("connection graph requires a ternary formula; split clauses first");
    }
    return build_clique_graph(f, x);
}

IncidenceGraph build_incidence_graph(const QcnfFormula& f, const VariableSet& x)
{
    require_existential(f, x);
    IncidenceGraph g;
    g.literal_vertices = f.literal_code_bound();
    g.clause_vertices = f.clauses().size();
    g.adjacency.resize(g.literal_vertices + g.clause_vertices);
    for (std::size_t ci = 0; ci < f.clauses().size(); ++ci) {
        const auto cv = g.clause_vertex(ci);
        for (const Literal l : f.clauses()[ci]) {
            g.adjacency[cv].push_back(l.code());
            g.adjacency[l.code()].push_back(cv);
        }
    }
    for (const Variable v : x) {
        if (f.occurs(v)) {
            g.adjacency[pos(v).code()].push_back(neg(v).code());
            g.adjacency[neg(v).code()].push_back(pos(v).code());
        }
    }
    return g;
}

std::optional<LabelOrigin> ColorLabeling::origin(std::uint32_t v, Color c) const
{
    const auto idx = label_index(v, c);
    if (idx >= origin_.size() || origin_[idx] == kNone) {
        return std::nullopt;
    }
    return LabelOrigin{origin_[idx], seed_origin_[idx] != 0};
}

ColorLabeling pec_walk(const ColoredGraph& g, std::uint32_t source, QueueDiscipline discipline)
{
    if (source >= g.vertex_count()) {
        throw std::out_of_range("source vertex " + std::to_string(source) + " not in graph");
    }
    struct Pending
    {
        std::uint32_t vertex; // head of the traversed edge
        Color color;          // color of the traversed edge
    };

    ColorLabeling lab;
    lab.source_ = source;
    lab.colors_.assign(g.vertex_count(), ColorSet{});
    lab.origin_.assign(2 * g.vertex_count(), ColorLabeling::kNone);
    lab.seed_origin_.assign(2 * g.vertex_count(), 0);

    std::vector<Pending> queue;
    queue.reserve(2 * g.edge_count());
    std::size_t head = 0;

    for (const auto& nb : g.neighbors(source)) {
        if (nb.color != Color::Blue || lab.colors_[nb.vertex].contains(Color::Blue)) {
            continue;
        }
        lab.colors_[nb.vertex].insert(Color::Blue);
        const auto idx = label_index(nb.vertex, Color::Blue);
        lab.origin_[idx] = source;
        lab.seed_origin_[idx] = 1;
        queue.push_back({nb.vertex, Color::Blue});
        ++lab.pushes_;
    }

    while (head < queue.size()) {
        Pending current;
        if (discipline == QueueDiscipline::Fifo) {
            current = queue[head++];
        } else {
            current = queue.back();
            queue.pop_back();
        }
        for (const auto& nb : g.neighbors(current.vertex)) {
            if (nb.color == current.color || lab.colors_[nb.vertex].contains(nb.color)) {
                continue;
            }
            lab.colors_[nb.vertex].insert(nb.color);
            lab.origin_[label_index(nb.vertex, nb.color)] = current.vertex;
            queue.push_back({nb.vertex, nb.color});
            ++lab.pushes_;
        }
    }
    return lab;
}

bool reachable_with_last_color(const ColorLabeling& labeling, std::uint32_t t, Color c)
{
    if (t == labeling.source()) {
        throw std::invalid_argument("query vertex equals the walk source");
    }
    return labeling.colors(t).contains(c);
}

std::vector<std::uint32_t> extract_walk(const ColoredGraph& g, const ColorLabeling& labeling, std::uint32_t t,
                                        Color c)
{
    if (!labeling.colors(t).contains(c)) {
        throw std::invalid_argument("no labeled walk ends at " + std::to_string(t) + " with color " +
                                    color_letter(c));
    }
    std::vector<std::uint32_t> walk;
    auto vertex = t;
    auto color = c;
    // Origins point to strictly earlier labels, so this visits each label at most once.
    for (std::size_t guard = 0; guard <= 2 * labeling.vertex_count(); ++guard) {
        walk.push_back(vertex);
        const auto o = labeling.origin(vertex, color);
        if (!o) {
            throw std::logic_error("label without origin");
        }
        if (o->seed) {
            walk.push_back(o->vertex);
            std::reverse(walk.begin(), walk.end());
            if (!is_pec_walk(g, walk, c)) {
                throw std::logic_error("reconstructed walk fails validation");
            }
            return walk;
        }
        vertex = o->vertex;
        color = other(color);
    }
    throw std::logic_error("origin chain does not terminate");
}

bool is_pec_walk(const ColoredGraph& g, std::span<const std::uint32_t> walk, std::optional<Color> last)
{
    if (walk.size() < 2) {
        return false;
    }
    std::optional<Color> previous;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
        const auto color = g.color_between(walk[i], walk[i + 1]);
        if (!color) {
            return false;
        }
        if (i == 0 && *color != Color::Blue) {
            return false;
        }
        if (previous && *previous == *color) {
            return false;
        }
        previous = color;
    }
    return !last || *previous == *last;
}

void write_graph_text(std::ostream& out, const ColoredGraph& g)
{
    out << "v " << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) {
        out << "e " << e.u << ' ' << e.v << ' ' << color_letter(e.color) << '\n';
    }
}

} // namespace rpdep
