#include "bcp/connectivity.hpp"

#include <queue>

namespace bcp {

namespace {

// Small Edmonds-Karp network, rebuilt per query; capacities reset between runs.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int nodes) : arcs(nodes) {}

    void add_arc(int from, int to, int cap) {
        arcs[from].push_back({to, cap, (int)arcs[to].size()});
        arcs[to].push_back({from, 0, (int)arcs[from].size() - 1});
    }

    // Augment along shortest paths until `limit` is reached or no path exists.
    int max_flow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit) {
            std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
            std::queue<int> q;
            q.push(s);
            pred[s] = {s, -1};
            while (!q.empty() && pred[t].first == -1) {
                int v = q.front();
                q.pop();
                for (int i = 0; i < (int)arcs[v].size(); ++i) {
                    const Arc& a = arcs[v][i];
                    if (a.cap > 0 && pred[a.to].first == -1) {
                        pred[a.to] = {v, i};
                        q.push(a.to);
                    }
                }
            }
            if (pred[t].first == -1) break;
            for (int v = t; v != s;) {
                auto [pv, pi] = pred[v];
                arcs[pv][pi].cap -= 1;
                arcs[v][arcs[pv][pi].rev].cap += 1;
                v = pv;
            }
            ++flow;
        }
        return flow;
    }
};

} // namespace

bool vertex_connectivity_at_least(const WeightedGraph& g, int k) {
    if (k < 1) throw Error(errc::precondition_violated, "k must be at least 1");
    const int n = g.num_vertices();
    if (n < k + 1) return false;

    const int big = n + 1;
    auto vin = [](int v) { return 2 * v; };
    auto vout = [](int v) { return 2 * v + 1; };

    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            FlowNet net(2 * n);
            for (int v = 0; v < n; ++v) net.add_arc(vin(v), vout(v), 1);
            for (int u = 0; u < n; ++u)
                for (int v : g.neighbors(u))
                    net.add_arc(vout(u), vin(v), big);
            if (net.max_flow(vout(s), vin(t), k) < k) return false;
        }
    return true;
}

} // namespace bcp
