#include "emk/baranyai.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

#include "json.hpp"

#include "emk/bigint.hpp"

namespace emk {

namespace {

// Plain Dinic max flow on a tiny graph; capacities fit in long.
struct FlowNet {
    struct Edge {
        int to;
        long cap;
        int rev;
    };
    std::vector<std::vector<Edge>> adj;
    std::vector<int> level, iter;

    explicit FlowNet(int n) : adj(n) {}

    void add_edge(int from, int to, long cap) {
        adj[from].push_back({to, cap, static_cast<int>(adj[to].size())});
        adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1});
    }

    bool bfs(int s, int t) {
        level.assign(adj.size(), -1);
        std::queue<int> qu;
        level[s] = 0;
        qu.push(s);
        while (!qu.empty()) {
            int v = qu.front();
            qu.pop();
            for (const Edge& e : adj[v])
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[v] + 1;
                    qu.push(e.to);
                }
        }
        return level[t] >= 0;
    }

    long dfs(int v, int t, long f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(adj[v].size()); ++i) {
            Edge& e = adj[v][i];
            if (e.cap > 0 && level[v] < level[e.to]) {
                long d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    adj[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long max_flow(int s, int t) {
        long flow = 0;
        while (bfs(s, t)) {
            iter.assign(adj.size(), 0);
            long f;
            while ((f = dfs(s, t, std::numeric_limits<long>::max())) > 0)
                flow += f;
        }
        return flow;
    }
};

long binom_l(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return binom(n, k).get_si();
}

}  // namespace

Decomposition decompose(int q, int t) {
    if (q < 1 || t < 1) throw std::domain_error("decompose: need q,t >= 1");
    if (q * t > 16) throw CapacityError("decompose: qt must be <= 16");
    const int N = q * t;
    const long B = binom_l(N - 1, q - 1);

    // classes[c] is the multiset of partial edges (intersections with the
    // vertices handled so far) of the eventual matching number c.
    std::vector<std::vector<Mask>> classes(B, std::vector<Mask>(t, 0));

    for (int x = 0; x < N; ++x) {
        // Distinct growable parts across all classes.
        std::map<Mask, int> part_id;
        for (const auto& cls : classes)
            for (Mask a : cls)
                if (popcount(a) < q) part_id.emplace(a, 0);
        int next = 0;
        for (auto& kv : part_id) kv.second = next++;

        // source 0, classes 1..B, parts B+1..B+P, sink B+P+1.
        const int P = next;
        const int src = 0, snk = static_cast<int>(B) + P + 1;
        FlowNet net(snk + 1);
        for (long c = 0; c < B; ++c) {
            net.add_edge(src, static_cast<int>(c) + 1, 1);
            std::map<Mask, long> mult;
            for (Mask a : classes[c])
                if (popcount(a) < q) ++mult[a];
            for (const auto& kv : mult)
                net.add_edge(static_cast<int>(c) + 1,
                             static_cast<int>(B) + 1 + part_id[kv.first],
                             kv.second);
        }
        for (const auto& kv : part_id) {
            // Exactly this many classes must extend a copy of the part by x.
            long demand = binom_l(N - x - 1, q - popcount(kv.first) - 1);
            net.add_edge(static_cast<int>(B) + 1 + kv.second, snk, demand);
        }
        if (net.max_flow(src, snk) != B)
            throw std::logic_error("decompose: flow step infeasible");

        for (long c = 0; c < B; ++c) {
            Mask chosen = 0;
            bool found = false;
            for (const FlowNet::Edge& e : net.adj[static_cast<int>(c) + 1]) {
                if (e.to == src) continue;
                long sent = net.adj[e.to][e.rev].cap;  // flow on this arc
                if (sent > 0) {
                    for (const auto& kv : part_id)
                        if (static_cast<int>(B) + 1 + kv.second == e.to) {
                            chosen = kv.first;
                            found = true;
                            break;
                        }
                }
                if (found) break;
            }
            if (!found) throw std::logic_error("decompose: class not extended");
            auto it = std::find(classes[c].begin(), classes[c].end(), chosen);
            *it |= Mask(1) << x;
        }
    }

    Decomposition out;
    out.q = q;
    out.t = t;
    out.matchings.reserve(B);
    for (auto& cls : classes) {
        std::sort(cls.begin(), cls.end());
        out.matchings.push_back(Matching{cls});
    }
    std::sort(out.matchings.begin(), out.matchings.end(),
              [](const Matching& a, const Matching& b) {
                  return a.members < b.members;
              });
    return out;
}

DecompositionCheck verify_decomposition(const Decomposition& d) {
    if (d.q < 1 || d.t < 1) return {false, "invalid parameters"};
    const int N = d.q * d.t;
    const Count expected = binom(N - 1, d.q - 1);
    if (Count(static_cast<long>(d.matchings.size())) != expected)
        return {false, "wrong matching count"};
    const Mask total = full_mask(N);
    std::vector<Mask> edges;
    for (const Matching& m : d.matchings) {
        if (m.size() != d.t) return {false, "matching has wrong size"};
        Mask used = 0;
        for (Mask e : m.members) {
            if (popcount(e) != d.q || (e & ~total))
                return {false, "member is not a q-subset of [qt]"};
            if (e & used) return {false, "members not pairwise disjoint"};
            used |= e;
            edges.push_back(e);
        }
        if (used != total) return {false, "not perfect"};
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        return {false, "edge covered twice"};
    if (Count(static_cast<long>(edges.size())) != binom(N, d.q))
        return {false, "edge missing"};
    return {true, ""};
}

std::string decomposition_to_json(const Decomposition& d) {
    nlohmann::json j;
    j["q"] = d.q;
    j["t"] = d.t;
    auto arr = nlohmann::json::array();
    for (const Matching& m : d.matchings) {
        auto row = nlohmann::json::array();
        for (Mask e : m.members) row.push_back(mask_to_hex(e));
        arr.push_back(std::move(row));
    }
    j["matchings"] = std::move(arr);
    return j.dump();
}

Decomposition decomposition_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Decomposition d;
    d.q = j.at("q").get<int>();
    d.t = j.at("t").get<int>();
    for (const auto& row : j.at("matchings")) {
        Matching m;
        for (const auto& tok : row)
            m.members.push_back(hex_to_mask(tok.get<std::string>()));
        d.matchings.push_back(std::move(m));
    }
    return d;
}

}  // namespace emk
