#include "necpres/matching.hpp"

#include <queue>
#include <stdexcept>

namespace necpres {

namespace {

// small BFS max-flow on an adjacency-list residual graph
struct FlowNet {
    struct Edge {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Edge>> adj;

    explicit FlowNet(int n) : adj(n) {}

    int add_edge(int u, int v, int cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
        return static_cast<int>(adj[u].size()) - 1;
    }

    int max_flow(int s, int t) {
        int total = 0;
        while (true) {
            std::vector<int> prev_node(adj.size(), -1), prev_edge(adj.size(), -1);
            std::queue<int> q;
            q.push(s);
            prev_node[s] = s;
            while (!q.empty() && prev_node[t] == -1) {
                int u = q.front();
                q.pop();
                for (size_t i = 0; i < adj[u].size(); ++i) {
                    const Edge& e = adj[u][i];
                    if (e.cap > 0 && prev_node[e.to] == -1) {
                        prev_node[e.to] = u;
                        prev_edge[e.to] = static_cast<int>(i);
                        q.push(e.to);
                    }
                }
            }
            if (prev_node[t] == -1) return total;
            int bottleneck = INT32_MAX;
            for (int v = t; v != s; v = prev_node[v])
                bottleneck = std::min(bottleneck, adj[prev_node[v]][prev_edge[v]].cap);
            for (int v = t; v != s; v = prev_node[v]) {
                Edge& e = adj[prev_node[v]][prev_edge[v]];
                e.cap -= bottleneck;
                adj[v][e.rev].cap += bottleneck;
            }
            total += bottleneck;
        }
    }
};

}  // namespace

std::optional<std::vector<std::pair<int, int>>> saturating_matching(
    const BipartiteGraph& graph, const std::vector<int>& required_left,
    const std::vector<int>& required_right) {
    std::vector<char> req_l(graph.left, 0), req_r(graph.right, 0);
    for (int v : required_left) {
        if (v < 0 || v >= graph.left) throw std::invalid_argument("required left vertex out of range");
        req_l[v] = 1;
    }
    for (int v : required_right) {
        if (v < 0 || v >= graph.right)
            throw std::invalid_argument("required right vertex out of range");
        req_r[v] = 1;
    }

    // nodes: S, T, lefts, rights, SS, TT; circulation edge T->S
    const int S = 0, T = 1;
    const int left0 = 2, right0 = 2 + graph.left;
    const int SS = right0 + graph.right, TT = SS + 1;
    FlowNet net(TT + 1);

    // S -> left (lb = required, ub = 1): residual cap (1 - lb), imbalance via SS/TT
    std::vector<int> excess(TT + 1, 0);
    for (int u = 0; u < graph.left; ++u) {
        const int lb = req_l[u] ? 1 : 0;
        net.add_edge(S, left0 + u, 1 - lb);
        excess[left0 + u] += lb;
        excess[S] -= lb;
    }
    std::vector<int> edge_slot(graph.edges.size());
    for (size_t i = 0; i < graph.edges.size(); ++i) {
        const auto [u, v] = graph.edges[i];
        if (u < 0 || u >= graph.left || v < 0 || v >= graph.right)
            throw std::invalid_argument("edge endpoint out of range");
        edge_slot[i] = net.add_edge(left0 + u, right0 + v, 1);
    }
    for (int v = 0; v < graph.right; ++v) {
        const int lb = req_r[v] ? 1 : 0;
        net.add_edge(right0 + v, T, 1 - lb);
        excess[T] += lb;
        excess[right0 + v] -= lb;
    }
    net.add_edge(T, S, graph.left + graph.right + 1);

    int need = 0;
    for (int v = 0; v <= TT; ++v) {
        if (excess[v] > 0) {
            net.add_edge(SS, v, excess[v]);
            need += excess[v];
        } else if (excess[v] < 0) {
            net.add_edge(v, TT, -excess[v]);
        }
    }
    if (net.max_flow(SS, TT) != need) return std::nullopt;

    std::vector<std::pair<int, int>> matching;
    for (size_t i = 0; i < graph.edges.size(); ++i) {
        const auto [u, v] = graph.edges[i];
        // edge carried flow iff its residual capacity dropped to 0
        if (net.adj[left0 + u][edge_slot[i]].cap == 0) matching.emplace_back(u, v);
    }
    return matching;
}

}  // namespace necpres
