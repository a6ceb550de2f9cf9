#include "excepta/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace excepta {

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Type a connected induced subdiagram. nodes is the component in ambient indices;
// adj/bond give neighbours and bond multiplicities C[i][j]*C[j][i] within the component.
DynkinType type_component(const RootSystem& rs, const std::vector<int>& nodes,
                          const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(nodes.size());
    if (n == 1) return {Family::A, 1};

    auto bond = [&](int i, int j) { return rs.cartan[i][j] * rs.cartan[j][i]; };

    int triple = 0, dbl = 0, branch = -1;
    for (int v : nodes) {
        if (adj[v].size() > 3)
            throw IntegrityError("subdiagram node of degree > 3");
        if (adj[v].size() == 3) {
            if (branch >= 0) throw IntegrityError("subdiagram with two branch nodes");
            branch = v;
        }
        for (int w : adj[v]) {
            if (w < v) continue;
            int m = bond(v, w);
            if (m == 3) ++triple;
            else if (m == 2) ++dbl;
        }
    }

    if (triple > 0) {
        if (n != 2 || triple != 1) throw IntegrityError("triple bond in a non-G2 subdiagram");
        return {Family::G, 2};
    }
    if (dbl > 0) {
        if (dbl != 1 || branch >= 0) throw IntegrityError("unrecognized multiply-laced subdiagram");
        // Chain with one double bond: B, C, or F4 depending on where the bond sits
        // and which side is long.
        int ends_with_bond = 0;
        for (int v : nodes)
            if (adj[v].size() == 1)
                for (int w : adj[v])
                    if (bond(v, w) == 2) ++ends_with_bond;
        if (ends_with_bond == 0) {
            if (n != 4) throw IntegrityError("interior double bond in a non-F4 subdiagram");
            return {Family::F, 4};
        }
        if (n == 2) return {Family::B, 2};  // B2 = C2; canonical label B
        int short_nodes = 0;
        for (int v : nodes)
            if (rs.d[v] == 1) ++short_nodes;
        // B_k: single short node at the double-bond end; C_k: single long node there.
        if (short_nodes == 1) return {Family::B, n};
        if (short_nodes == n - 1) return {Family::C, n};
        throw IntegrityError("unrecognized B/C subdiagram lengths");
    }

    // Simply laced.
    if (branch < 0) return {Family::A, n};
    std::vector<int> arms;
    for (int start : adj[branch]) {
        int len = 1, prev = branch, cur = start;
        while (true) {
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) throw IntegrityError("branch node without three arms");
    if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4 && n >= 6)
        return {Family::E, n};
    throw IntegrityError("unrecognized simply-laced branched subdiagram");
}

}  // namespace

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

BigInt weyl_order(DynkinType dtype) {
    check_rank(dtype.family, dtype.rank);
    const int l = dtype.rank;
    switch (dtype.family) {
        case Family::A: return factorial(l + 1);
        case Family::B:
        case Family::C: return factorial(l) << l;
        case Family::D: return factorial(l) << (l - 1);
        case Family::E:
            if (l == 6) return 51840;
            if (l == 7) return 2903040;
            return 696729600;
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

SubdiagramDecomposition decompose_deleted_diagram(const RootSystem& rs, const Weight& mu) {
    if (!is_dominant(mu)) throw std::invalid_argument("decompose_deleted_diagram: mu not dominant");
    const int l = rs.rank();
    std::vector<bool> keep(l);
    for (int i = 0; i < l; ++i) keep[i] = (mu[i] == 0);

    std::vector<std::vector<int>> adj(l);
    for (int i = 0; i < l; ++i) {
        if (!keep[i]) continue;
        for (int j = 0; j < l; ++j)
            if (j != i && keep[j] && rs.cartan[i][j] != 0) adj[i].push_back(j);
    }

    SubdiagramDecomposition dec;
    std::vector<bool> visited(l, false);
    for (int s = 0; s < l; ++s) {
        if (!keep[s] || visited[s]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        visited[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (int w : adj[v])
                if (!visited[w]) {
                    visited[w] = true;
                    q.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        dec.components.push_back({type_component(rs, comp, adj), comp});
    }
    std::sort(dec.components.begin(), dec.components.end(),
              [](const SubdiagramComponent& a, const SubdiagramComponent& b) {
                  return a.nodes.front() < b.nodes.front();
              });
    return dec;
}

BigInt centralizer_order(const RootSystem& rs, const Weight& mu) {
    BigInt r = 1;
    for (const auto& c : decompose_deleted_diagram(rs, mu).components) r *= weyl_order(c.dtype);
    return r;
}

BigInt orbit_size(const RootSystem& rs, const Weight& mu) {
    if (!is_dominant(mu)) throw std::invalid_argument("orbit_size: mu not dominant");
    BigInt w = weyl_order(rs.dtype);
    BigInt c = centralizer_order(rs, mu);
    BigInt q = w / c;
    if (q * c != w) throw IntegrityError("centralizer order does not divide |W|");
    return q;
}

std::set<Weight> orbit_enumerate(const RootSystem& rs, const Weight& mu, long long cap) {
    if (!is_dominant(mu)) throw std::invalid_argument("orbit_enumerate: mu not dominant");
    const int l = rs.rank();
    std::unordered_set<Weight, VecHash> seen{mu};
    std::deque<Weight> q{mu};
    while (!q.empty()) {
        Weight v = std::move(q.front());
        q.pop_front();
        for (int i = 0; i < l; ++i) {
            if (v[i] == 0) continue;  // fixed by s_i
            Weight w(l);
            for (int k = 0; k < l; ++k) w[k] = v[k] - v[i] * rs.cartan[k][i];
            if (seen.insert(w).second) {
                if (static_cast<long long>(seen.size()) > cap)
                    throw CapExceeded("orbit_enumerate: cap exceeded", cap);
                q.push_back(w);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::optional<BigInt> orbit_size_closed_form(const RootSystem& rs, const Weight& mu) {
    if (!is_dominant(mu)) throw std::invalid_argument("orbit_size_closed_form: mu not dominant");
    const Family f = rs.dtype.family;
    const int l = rs.rank();
    std::vector<int> supp;  // 1-based indices i_1 < ... < i_m with a_i != 0
    for (int i = 0; i < l; ++i)
        if (mu[i] != 0) supp.push_back(i + 1);
    const int m = static_cast<int>(supp.size());

    if (f == Family::A) {
        // |W mu| = binom(i2,i1) binom(i3,i2) ... binom(i_m,i_{m-1}) binom(l+1,i_m)
        if (m == 0) return BigInt(1);
        BigInt r = 1;
        for (int k = 0; k + 1 < m; ++k) r *= binomial(supp[k + 1], supp[k]);
        r *= binomial(l + 1, supp.back());
        return r;
    }
    if (f == Family::B || f == Family::C || f == Family::D) {
        // |W mu| = 2^r binom(i2,i1)...binom(i_{m-1},i_{m-2}) binom(t,i_{m-1}) binom(l,t)
        // with r = t = i_m except for the D_l spin-node cases.
        if (m == 0) return BigInt(1);
        int im = supp.back();
        int prev = (m >= 2) ? supp[m - 2] : 0;
        int r, t;
        if (f != Family::D || im < l - 1) {
            r = t = im;
        } else if (im == l && prev == l - 1) {
            r = t = l - 1;
        } else {  // i_m = l-1, or i_m = l with i_{m-1} <= l-2
            r = l - 1;
            t = l;
        }
        BigInt res = BigInt(1) << r;
        for (int k = 0; k + 2 < m; ++k) res *= binomial(supp[k + 1], supp[k]);
        if (m >= 2) res *= binomial(t, supp[m - 2]);
        res *= binomial(l, t);
        return res;
    }
    return std::nullopt;
}

}  // namespace excepta
