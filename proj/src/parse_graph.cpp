#include "lzpl/parse_graph.hpp"

#include <algorithm>
#include <sstream>

namespace lzpl {

ParseGraph build_graph(const DictionaryConfig& config, const Bytes& text,
                       const ScaleLimits& limits) {
    if (text.size() > limits.graph_text)
        throw ScaleExceeded("text length " + std::to_string(text.size()) +
                            " exceeds graph bound " + std::to_string(limits.graph_text));
    Dictionary dict(config, text);
    ParseGraph g;
    g.n = text.size();
    g.out.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        g.out[i].push_back({i + 1, EdgeKind::Literal});
        for (std::size_t len : dict.match_lengths(i))
            g.out[i].push_back({i + len, EdgeKind::Dictionary});
    }
    return g;
}

std::vector<PathEdge> shortest_path(const ParseGraph& graph) {
    std::size_t n = graph.n;
    constexpr std::size_t kInf = kUnbounded;
    std::vector<std::size_t> dist(n + 1, kInf);
    std::vector<std::size_t> pred(n + 1, kInf);
    std::vector<EdgeKind> pred_kind(n + 1, EdgeKind::Literal);
    dist[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i] == kInf) continue;
        std::size_t cand = dist[i] + 1;
        for (const auto& e : graph.out[i]) {
            std::size_t j = e.target;
            bool take = cand < dist[j];
            if (!take && cand == dist[j]) {
                // ascending i: the first (smallest) predecessor at this
                // distance sticks; at the same predecessor a dictionary edge
                // supersedes a literal one
                take = pred[j] == i && e.kind == EdgeKind::Dictionary &&
                       pred_kind[j] == EdgeKind::Literal;
            }
            if (take) {
                dist[j] = cand;
                pred[j] = i;
                pred_kind[j] = e.kind;
            }
        }
    }
    std::vector<PathEdge> path;
    for (std::size_t j = n; j != 0; j = pred[j])
        path.push_back({pred[j], j, pred_kind[j]});
    std::reverse(path.begin(), path.end());
    return path;
}

PropertyReport check_suffix_edge_closure(const ParseGraph& graph) {
    std::size_t stride = graph.n + 1;
    std::vector<bool> present(stride * stride, false);
    for (std::size_t i = 0; i < graph.out.size(); ++i)
        for (const auto& e : graph.out[i])
            if (e.kind == EdgeKind::Dictionary) present[i * stride + e.target] = true;
    for (std::size_t i = 0; i < graph.out.size(); ++i) {
        for (const auto& e : graph.out[i]) {
            if (e.kind != EdgeKind::Dictionary) continue;
            for (std::size_t k = i + 1; k < e.target; ++k) {
                if (!present[k * stride + e.target])
                    return PropertyReport::fail({k, {}, e.target, PropertyViolation::EdgeMissing});
            }
        }
    }
    return PropertyReport::ok();
}

std::string export_dot(const ParseGraph& graph, const std::vector<PathEdge>* highlight) {
    auto highlighted = [&](std::size_t from, std::size_t to, EdgeKind kind) {
        if (!highlight) return false;
        return std::find(highlight->begin(), highlight->end(), PathEdge{from, to, kind}) !=
               highlight->end();
    };
    std::ostringstream os;
    os << "digraph parse_graph {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i <= graph.n; ++i) os << "  " << i << ";\n";
    for (std::size_t i = 0; i < graph.out.size(); ++i) {
        for (const auto& e : graph.out[i]) {
            const char* style = e.kind == EdgeKind::Literal ? "dashed" : "solid";
            os << "  " << i << " -> " << e.target << " [style=\"" << style;
            if (highlighted(i, e.target, e.kind)) os << ",bold";
            os << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace lzpl
