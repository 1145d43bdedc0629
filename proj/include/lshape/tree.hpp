#pragma once

// Trees and ordered trees of maximum degree 4: canonical codes, enumeration
// up to isomorphism, and the text file format.
//
// Unordered enumeration generates rooted trees by canonical level sequences
// (successor method) and keeps one centroid-canonical representative per free
// isomorphism class; the published count table is the correctness oracle.
// Ordered (plane) trees are enumerated per free tree by walking all rotation
// systems and deduplicating canonical plane codes, where a tree and its global
// reflection count as the same ordered tree.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lshape {

struct Tree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // stored with a < b, sorted

    Tree() = default;
    Tree(int n_, std::vector<std::pair<int, int>> e) : n(n_), edges(std::move(e)) {
        normalize();
    }

    void normalize() {
        for (auto& [a, b] : edges) {
            if (a > b) std::swap(a, b);
        }
        std::sort(edges.begin(), edges.end());
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        return adj;
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(n, 0);
        for (auto [a, b] : edges) {
            ++deg[a];
            ++deg[b];
        }
        return deg;
    }

    int max_degree() const {
        int m = 0;
        for (int d : degrees()) m = std::max(m, d);
        return m;
    }

    bool valid(int maxdeg = 4) const {
        if (n < 1 || static_cast<int>(edges.size()) != n - 1) return false;
        for (auto [a, b] : edges) {
            if (a < 0 || b < 0 || a >= n || b >= n || a == b) return false;
        }
        for (int d : degrees()) {
            if (d > maxdeg) return false;
        }
        // n-1 edges: connected iff acyclic; check connectivity by BFS.
        auto adj = adjacency();
        std::vector<char> seen(n, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
        return reached == n;
    }

    friend bool operator==(const Tree&, const Tree&) = default;
};

struct OrderedTree {
    Tree base;
    // rotation[v] lists the neighbors of v in counterclockwise order.
    std::vector<std::vector<int>> rotation;

    bool valid(int maxdeg = 4) const {
        if (!base.valid(maxdeg)) return false;
        if (static_cast<int>(rotation.size()) != base.n) return false;
        auto adj = base.adjacency();
        for (int v = 0; v < base.n; ++v) {
            auto sorted_rot = rotation[v];
            std::sort(sorted_rot.begin(), sorted_rot.end());
            auto sorted_adj = adj[v];
            std::sort(sorted_adj.begin(), sorted_adj.end());
            if (sorted_rot != sorted_adj) return false;
        }
        return true;
    }
};

// Reverses every cyclic order (the mirror image of the plane tree).
inline OrderedTree reflect(const OrderedTree& t) {
    OrderedTree out = t;
    for (auto& rot : out.rotation) std::reverse(rot.begin(), rot.end());
    return out;
}

// Ordered tree with the neighbor lists in ascending label order; the default
// rotation system used when a plain tree is treated as ordered.
inline OrderedTree with_default_rotation(const Tree& t) {
    OrderedTree out;
    out.base = t;
    out.rotation = t.adjacency();
    for (auto& rot : out.rotation) std::sort(rot.begin(), rot.end());
    return out;
}

// ---------------------------------------------------------------------------
// Canonical codes

namespace detail {

inline std::string ahu_code(int v, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> child_codes;
    for (int u : adj[v]) {
        if (u != parent) child_codes.push_back(ahu_code(u, v, adj));
    }
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    return code + ")";
}

inline std::vector<int> tree_centroids(const Tree& t) {
    int n = t.n;
    if (n == 1) return {0};
    auto adj = t.adjacency();
    std::vector<int> size(n, 1), order, parent(n, -1);
    order.reserve(n);
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int u : adj[v]) {
            if (u != parent[v]) {
                parent[u] = v;
                order.push_back(u);
            }
        }
    }
    for (int i = n - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v) {
        int largest = n - size[v];
        for (int u : adj[v]) {
            if (u != parent[v]) largest = std::max(largest, size[u]);
        }
        if (largest <= n / 2) centroids.push_back(v);
    }
    return centroids;
}

}  // namespace detail

// Equal iff isomorphic as free trees; stable across relabelings.
inline std::string canonical_tree_code(const Tree& t) {
    auto adj = t.adjacency();
    std::string best;
    for (int c : detail::tree_centroids(t)) {
        std::string code = detail::ahu_code(c, -1, adj);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

namespace detail {

inline void plane_subtree_code(int v, int parent, const OrderedTree& t, std::string& out) {
    out += '(';
    const auto& rot = t.rotation[v];
    int d = static_cast<int>(rot.size());
    int start = 0;
    while (start < d && rot[start] != parent) ++start;
    for (int i = 1; i <= d; ++i) {
        int u = rot[(start + i) % d];
        if (u != parent) plane_subtree_code(u, v, t, out);
    }
    out += ')';
}

inline std::string plane_code_rooted(int root, const OrderedTree& t) {
    const auto& rot = t.rotation[root];
    int d = static_cast<int>(rot.size());
    std::string best;
    for (int s = 0; s < std::max(d, 1); ++s) {
        std::string code = "(";
        for (int i = 0; i < d; ++i) detail::plane_subtree_code(rot[(s + i) % d], root, t, code);
        code += ')';
        if (best.empty() || code < best) best = code;
    }
    return best;
}

inline std::string plane_code_oriented(const OrderedTree& t) {
    std::string best;
    for (int v = 0; v < t.base.n; ++v) {
        std::string code = plane_code_rooted(v, t);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

}  // namespace detail

// Equal iff ordered-isomorphic, identifying a tree with its global reflection.
inline std::string canonical_plane_code(const OrderedTree& t) {
    return std::min(detail::plane_code_oriented(t), detail::plane_code_oriented(reflect(t)));
}

// Plane code of the exact chirality (no reflection), for strict comparisons.
inline std::string oriented_plane_code(const OrderedTree& t) {
    return detail::plane_code_oriented(t);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

// Canonical level sequences of rooted trees (root at level 1), generated in
// decreasing lexicographic order by the classic successor rule.
template <class F>
void for_each_rooted_level_sequence(int n, F&& f) {
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i + 1;
    for (;;) {
        f(level);
        int p = -1;
        for (int i = n - 1; i >= 1; --i) {
            if (level[i] > 2) {
                p = i;
                break;
            }
        }
        if (p < 0) return;
        int q = p - 1;
        while (level[q] != level[p] - 1) --q;
        for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
    }
}

inline Tree tree_from_level_sequence(const std::vector<int>& level) {
    int n = static_cast<int>(level.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<int> last_at_level(n + 2, -1);
    for (int i = 0; i < n; ++i) {
        if (level[i] > 1) edges.emplace_back(last_at_level[level[i] - 1], i);
        last_at_level[level[i]] = i;
    }
    return Tree(n, std::move(edges));
}

}  // namespace detail

// One representative per isomorphism class of free trees with max degree
// <= maxdeg, streamed in canonical-code order.
template <class F>
void enumerate_trees(int n, int maxdeg, F&& yield) {
    if (n < 1) throw std::invalid_argument("tree size must be >= 1");
    std::map<std::string, Tree> classes;
    detail::for_each_rooted_level_sequence(n, [&](const std::vector<int>& level) {
        Tree t = detail::tree_from_level_sequence(level);
        if (t.max_degree() > maxdeg) return;
        classes.emplace(canonical_tree_code(t), std::move(t));
    });
    for (auto& [code, tree] : classes) yield(tree);
}

inline std::vector<Tree> all_trees(int n, int maxdeg = 4) {
    std::vector<Tree> out;
    enumerate_trees(n, maxdeg, [&](const Tree& t) { out.push_back(t); });
    return out;
}

// All rotation-system classes of one free tree, keyed by canonical plane code.
inline std::vector<OrderedTree> rotation_classes(const Tree& t) {
    auto adj = t.adjacency();
    for (auto& a : adj) std::sort(a.begin(), a.end());
    int n = t.n;

    // Per vertex, all cyclic orders: first neighbor pinned, rest permuted.
    std::vector<std::vector<std::vector<int>>> choices(n);
    for (int v = 0; v < n; ++v) {
        auto& nb = adj[v];
        if (nb.size() <= 2) {
            choices[v].push_back(nb);
            continue;
        }
        std::vector<int> rest(nb.begin() + 1, nb.end());
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> rot;
            rot.push_back(nb[0]);
            rot.insert(rot.end(), rest.begin(), rest.end());
            choices[v].push_back(rot);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    std::map<std::string, OrderedTree> classes;
    std::vector<std::size_t> pick(n, 0);
    for (;;) {
        OrderedTree ot;
        ot.base = t;
        ot.rotation.resize(n);
        for (int v = 0; v < n; ++v) ot.rotation[v] = choices[v][pick[v]];
        classes.emplace(canonical_plane_code(ot), std::move(ot));
        int v = n - 1;
        while (v >= 0 && ++pick[v] == choices[v].size()) pick[v--] = 0;
        if (v < 0) break;
    }
    std::vector<OrderedTree> out;
    out.reserve(classes.size());
    for (auto& [code, ot] : classes) out.push_back(std::move(ot));
    return out;
}

// One representative per ordered-isomorphism class (reflection identified).
// With nontrivial_only, trees whose rotation system is unique are skipped.
template <class F>
void enumerate_ordered_trees(int n, int maxdeg, bool nontrivial_only, F&& yield) {
    enumerate_trees(n, maxdeg, [&](const Tree& t) {
        auto classes = rotation_classes(t);
        if (nontrivial_only && classes.size() <= 1) return;
        for (auto& ot : classes) yield(ot);
    });
}

inline std::vector<OrderedTree> all_ordered_trees(int n, int maxdeg = 4,
                                                  bool nontrivial_only = false) {
    std::vector<OrderedTree> out;
    enumerate_ordered_trees(n, maxdeg, nontrivial_only, [&](const OrderedTree& t) { out.push_back(t); });
    return out;
}

// ---------------------------------------------------------------------------
// Convenience constructors

inline Tree make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(n, std::move(edges));
}

inline Tree make_star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Tree(leaves + 1, std::move(edges));
}

// ---------------------------------------------------------------------------
// Text format: first line n, then one "u v" line per edge; ordered trees
// append one "v: n1 n2 ..." rotation line per vertex.

inline std::string format_tree(const Tree& t) {
    std::string s = std::to_string(t.n) + "\n";
    for (auto [a, b] : t.edges) s += std::to_string(a) + " " + std::to_string(b) + "\n";
    return s;
}

inline std::string format_ordered_tree(const OrderedTree& t) {
    std::string s = format_tree(t.base);
    for (int v = 0; v < t.base.n; ++v) {
        s += std::to_string(v) + ":";
        for (int u : t.rotation[v]) s += " " + std::to_string(u);
        s += "\n";
    }
    return s;
}

// Parses either format; the rotation lines are optional as a block.
inline OrderedTree parse_tree_text(const std::string& text, bool* has_rotation = nullptr) {
    std::istringstream in(text);
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            std::size_t h = line.find('#');
            if (h != std::string::npos) line.resize(h);
            std::size_t b = line.find_last_not_of(" \t\r");
            line.resize(b == std::string::npos ? 0 : b + 1);
            if (!line.empty()) return true;
        }
        return false;
    };
    if (!next_line()) throw std::invalid_argument("empty tree file");
    int n = std::stoi(line);
    if (n < 1) throw std::invalid_argument("tree size must be >= 1");
    std::vector<std::pair<int, int>> edges;
    OrderedTree out;
    out.rotation.assign(n, {});
    bool rotation_seen = false;
    for (int i = 0; i < n - 1; ++i) {
        if (!next_line()) throw std::invalid_argument("tree file truncated");
        std::istringstream ls(line);
        int a, b;
        if (!(ls >> a >> b)) throw std::invalid_argument("bad edge line: " + line);
        edges.emplace_back(a, b);
    }
    while (next_line()) {
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad rotation line: " + line);
        int v = std::stoi(line.substr(0, colon));
        if (v < 0 || v >= n) throw std::invalid_argument("rotation vertex out of range: " + line);
        std::istringstream ls(line.substr(colon + 1));
        int u;
        out.rotation[v].clear();
        while (ls >> u) out.rotation[v].push_back(u);
        rotation_seen = true;
    }
    out.base = Tree(n, std::move(edges));
    if (!out.base.valid(4)) throw std::invalid_argument("not a valid max-degree-4 tree");
    if (!rotation_seen) out.rotation = with_default_rotation(out.base).rotation;
    if (has_rotation) *has_rotation = rotation_seen;
    if (!out.valid(4)) throw std::invalid_argument("rotation lines do not match the edge set");
    return out;
}

}  // namespace lshape
