#pragma once

#include <string>
#include <vector>

#include "lzpl/core.hpp"
#include "lzpl/dictionary.hpp"

namespace lzpl {

enum class EdgeKind : std::uint8_t { Literal, Dictionary };

/// Unit-weight DAG over text positions 0..n: a literal edge (i, i+1) for
/// every position and a dictionary edge (i, j) iff text[i..j) is in D_i.
struct ParseGraph {
    struct Edge {
        std::size_t target;
        EdgeKind kind;

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    std::size_t n = 0;                    // nodes are 0..n
    std::vector<std::vector<Edge>> out;   // out[i]: literal edge first, then
                                          // dictionary edges by ascending target

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (const auto& v : out) c += v.size();
        return c;
    }
};

struct PathEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    EdgeKind kind = EdgeKind::Literal;

    friend bool operator==(const PathEdge&, const PathEdge&) = default;
};

ParseGraph build_graph(const DictionaryConfig& config, const Bytes& text,
                       const ScaleLimits& limits = {});

/// Minimum-edge 0 -> n path by forward DAG relaxation. Ties resolved by the
/// smallest predecessor position (i.e. the longest incoming edge), then by
/// preferring a dictionary edge over a literal one.
std::vector<PathEdge> shortest_path(const ParseGraph& graph);

/// For every dictionary edge (i, j), all (k, j) with i < k < j must also be
/// dictionary edges. Witness: time = first missing k, index = j.
PropertyReport check_suffix_edge_closure(const ParseGraph& graph);

/// Deterministic DOT rendering: literal edges dashed, dictionary edges solid,
/// highlighted path edges bold.
std::string export_dot(const ParseGraph& graph,
                       const std::vector<PathEdge>* highlight = nullptr);

}  // namespace lzpl
