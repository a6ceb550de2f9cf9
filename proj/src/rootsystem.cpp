#include "excepta/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

namespace excepta {

namespace {

// Hash for small int vectors.
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

// Edges of the Dynkin diagram (0-based node indices) per Bourbaki numbering.
std::vector<std::pair<int, int>> diagram_edges(DynkinType t) {
    std::vector<std::pair<int, int>> e;
    int l = t.rank;
    switch (t.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::F:
        case Family::G:
            for (int i = 0; i + 1 < l; ++i) e.emplace_back(i, i + 1);
            break;
        case Family::D:
            for (int i = 0; i + 1 < l - 1; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(l - 3, l - 1);
            break;
        case Family::E:
            // Chain 1-3-4-5-...-l with node 2 attached to node 4.
            e.emplace_back(0, 2);
            for (int i = 2; i + 1 < l; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(1, 3);
            break;
    }
    return e;
}

std::vector<int> root_lengths(DynkinType t) {
    int l = t.rank;
    std::vector<int> d(l, 1);
    switch (t.family) {
        case Family::B:
            for (int i = 0; i < l - 1; ++i) d[i] = 2;
            break;
        case Family::C:
            d[l - 1] = 2;
            break;
        case Family::F:
            d[0] = d[1] = 2;
            break;
        case Family::G:
            d[1] = 3;
            break;
        default:
            break;
    }
    return d;
}

// Gaussian elimination over Q on an augmented matrix; returns x with M x = b.
std::vector<BigRat> solve_rational(std::vector<std::vector<BigRat>> m, std::vector<BigRat> b) {
    const size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw IntegrityError("singular Cartan matrix");
        std::swap(m[piv], m[col]);
        std::swap(b[piv], b[col]);
        BigRat inv = BigRat(1) / m[col][col];
        for (size_t j = col; j < n; ++j) m[col][j] *= inv;
        b[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            BigRat f = m[r][col];
            for (size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
            b[r] -= f * b[col];
        }
    }
    return b;
}

}  // namespace

RootSystem build(DynkinType dtype) {
    check_rank(dtype.family, dtype.rank);
    const int l = dtype.rank;

    RootSystem rs;
    rs.dtype = dtype;
    rs.d = root_lengths(dtype);

    // C[i][j] = <alpha_j, alpha_i> with (alpha_i, alpha_j) = -max(d_i, d_j) on edges.
    rs.cartan.assign(l, std::vector<int>(l, 0));
    for (int i = 0; i < l; ++i) rs.cartan[i][i] = 2;
    for (auto [i, j] : diagram_edges(dtype)) {
        int m = std::max(rs.d[i], rs.d[j]);
        rs.cartan[i][j] = -m / rs.d[i];
        rs.cartan[j][i] = -m / rs.d[j];
    }

    // Positive roots by closure under root strings: gamma + alpha_i is a root iff
    // r - <gamma, alpha_i^v> > 0 where r is the length of the descending string.
    std::unordered_set<std::vector<int>, VecHash> seen;
    std::vector<RootVector> current;  // roots of the current height
    for (int i = 0; i < l; ++i) {
        RootVector a(l, 0);
        a[i] = 1;
        seen.insert(a);
        current.push_back(a);
    }
    std::vector<RootVector> all = current;
    while (!current.empty()) {
        std::vector<RootVector> next;
        for (const auto& g : current) {
            for (int i = 0; i < l; ++i) {
                // <g, alpha_i^v> = sum_k c_k <alpha_k, alpha_i^v> = sum_k C[i][k] c_k
                long long pair = 0;
                for (int k = 0; k < l; ++k) pair += static_cast<long long>(rs.cartan[i][k]) * g[k];
                int r = 0;
                RootVector down = g;
                while (true) {
                    down[i] -= 1;
                    bool neg = false;
                    for (int c : down)
                        if (c < 0) { neg = true; break; }
                    if (neg || !seen.count(down)) break;
                    ++r;
                }
                if (r - pair > 0) {
                    RootVector up = g;
                    up[i] += 1;
                    if (seen.insert(up).second) next.push_back(up);
                }
            }
        }
        for (const auto& g : next) all.push_back(g);
        current = std::move(next);
    }
    std::sort(all.begin(), all.end());
    rs.positive_roots = std::move(all);

    // Squared length of gamma = sum_ij c_i c_j d_i C[i][j]; long = maximal.
    auto sq_len = [&](const RootVector& g) {
        long long s = 0;
        for (int i = 0; i < l; ++i) {
            if (g[i] == 0) continue;
            for (int j = 0; j < l; ++j)
                s += static_cast<long long>(g[i]) * g[j] * rs.d[i] * rs.cartan[i][j];
        }
        return s;
    };
    long long max_len = 0;
    for (const auto& g : rs.positive_roots) max_len = std::max(max_len, sq_len(g));
    for (int k = 0; k < rs.num_positive(); ++k)
        if (sq_len(rs.positive_roots[k]) == max_len) rs.long_positive_indices.push_back(k);

    // The highest root dominates every positive root coordinatewise.
    rs.highest_root.assign(l, 0);
    for (const auto& g : rs.positive_roots)
        for (int i = 0; i < l; ++i) rs.highest_root[i] = std::max(rs.highest_root[i], g[i]);
    if (!seen.count(rs.highest_root))
        throw IntegrityError("coordinatewise maximum of positive roots is not a root");

    // omega_i in alpha-coordinates: solve C x = e_i.
    std::vector<std::vector<BigRat>> cq(l, std::vector<BigRat>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) cq[i][j] = rs.cartan[i][j];
    rs.omega_alpha.resize(l);
    for (int i = 0; i < l; ++i) {
        std::vector<BigRat> e(l, BigRat(0));
        e[i] = 1;
        rs.omega_alpha[i] = solve_rational(cq, e);
    }
    return rs;
}

long long inner_product(const RootSystem& rs, const Weight& mu, const RootVector& gamma) {
    if (mu.size() != gamma.size() || static_cast<int>(mu.size()) != rs.rank())
        throw std::invalid_argument("inner_product: dimension mismatch");
    long long s = 0;
    for (int j = 0; j < rs.rank(); ++j)
        s += static_cast<long long>(gamma[j]) * rs.d[j] * mu[j];
    return s;
}

std::vector<BigRat> weight_to_root_coords(const RootSystem& rs, const Weight& mu) {
    const int l = rs.rank();
    std::vector<BigRat> x(l, BigRat(0));
    for (int i = 0; i < l; ++i) {
        if (mu[i] == 0) continue;
        for (int j = 0; j < l; ++j) x[j] += BigRat(mu[i]) * rs.omega_alpha[i][j];
    }
    return x;
}

Weight root_to_weight_coords(const RootSystem& rs, const RootVector& x) {
    const int l = rs.rank();
    Weight mu(l, 0);
    for (int k = 0; k < l; ++k) {
        long long s = 0;
        for (int j = 0; j < l; ++j) s += static_cast<long long>(rs.cartan[k][j]) * x[j];
        mu[k] = static_cast<int>(s);
    }
    return mu;
}

bool is_bad_prime(DynkinType dtype, long long p) {
    check_prime(p);
    switch (dtype.family) {
        case Family::A: return false;
        case Family::B:
        case Family::C:
        case Family::D: return p == 2;
        case Family::G:
        case Family::F: return p == 2 || p == 3;
        case Family::E:
            if (dtype.rank == 8) return p == 2 || p == 3 || p == 5;
            return p == 2 || p == 3;
    }
    return false;
}

bool is_special_prime(DynkinType dtype, long long p) {
    check_prime(p);
    switch (dtype.family) {
        case Family::B:
        case Family::C:
        case Family::F: return p == 2;
        case Family::G: return p == 3;
        default: return false;
    }
}

bool is_very_good_prime(DynkinType dtype, long long p) {
    check_prime(p);
    if (is_bad_prime(dtype, p)) return false;
    if (dtype.family == Family::A && (dtype.rank + 1) % p == 0) return false;
    return true;
}

long long dim_g(DynkinType dtype) {
    check_rank(dtype.family, dtype.rank);
    long long l = dtype.rank;
    long long npos;
    switch (dtype.family) {
        case Family::A: npos = l * (l + 1) / 2; break;
        case Family::B:
        case Family::C: npos = l * l; break;
        case Family::D: npos = l * (l - 1); break;
        case Family::E: npos = (l == 6) ? 36 : (l == 7) ? 63 : 120; break;
        case Family::F: npos = 24; break;
        case Family::G: npos = 6; break;
        default: npos = 0;
    }
    return 2 * npos + l;
}

namespace {

int center_dim_uncached(DynkinType dtype, long long p) {
    const int l = dtype.rank;
    RootSystem rs = build(dtype);
    std::vector<std::vector<long long>> m(l, std::vector<long long>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) m[i][j] = ((rs.cartan[i][j] % p) + p) % p;
    int rank_fp = 0;
    for (int col = 0; col < l && rank_fp < l; ++col) {
        int piv = -1;
        for (int r = rank_fp; r < l; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank_fp]);
        // Modular inverse of the pivot.
        long long inv = 1, base = m[rank_fp][col] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (int j = col; j < l; ++j) m[rank_fp][j] = m[rank_fp][j] * inv % p;
        for (int r = 0; r < l; ++r) {
            if (r == rank_fp || m[r][col] == 0) continue;
            long long f = m[r][col];
            for (int j = col; j < l; ++j) m[r][j] = ((m[r][j] - f * m[rank_fp][j]) % p + p) % p;
        }
        ++rank_fp;
    }
    return l - rank_fp;
}

}  // namespace

int center_dim(DynkinType dtype, long long p) {
    check_rank(dtype.family, dtype.rank);
    check_prime(p);
    // Hot path for sweeps: cache per (type, p). Insertion is guarded for
    // concurrent callers.
    struct Key {
        char f;
        int r;
        long long p;
        auto operator<=>(const Key&) const = default;
    };
    static std::map<Key, int> cache;
    static std::mutex mu;
    Key k{static_cast<char>(dtype.family), dtype.rank, p};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
    }
    int v = center_dim_uncached(dtype, p);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(k, v);
    return v;
}

bool automorphism_valid(DynkinType dtype, Automorphism aut) {
    switch (aut) {
        case Automorphism::Identity: return true;
        case Automorphism::Reversal: return dtype.family == Family::A && dtype.rank >= 2;
        case Automorphism::DSwap: return dtype.family == Family::D;
        case Automorphism::E6Involution: return dtype.family == Family::E && dtype.rank == 6;
        case Automorphism::Triality:
        case Automorphism::TrialityInverse:
            return dtype.family == Family::D && dtype.rank == 4;
    }
    return false;
}

std::vector<int> automorphism_permutation(DynkinType dtype, Automorphism aut) {
    if (!automorphism_valid(dtype, aut))
        throw std::invalid_argument("automorphism not valid for type " + type_name(dtype));
    const int l = dtype.rank;
    std::vector<int> sigma(l);
    for (int i = 0; i < l; ++i) sigma[i] = i;
    switch (aut) {
        case Automorphism::Identity: break;
        case Automorphism::Reversal:
            for (int i = 0; i < l; ++i) sigma[i] = l - 1 - i;
            break;
        case Automorphism::DSwap:
            std::swap(sigma[l - 2], sigma[l - 1]);
            break;
        case Automorphism::E6Involution:
            sigma[0] = 5; sigma[5] = 0;
            sigma[2] = 4; sigma[4] = 2;
            break;
        case Automorphism::Triality:
            sigma[0] = 2; sigma[2] = 3; sigma[3] = 0;
            break;
        case Automorphism::TrialityInverse:
            sigma[0] = 3; sigma[3] = 2; sigma[2] = 0;
            break;
    }
    return sigma;
}

Weight graph_twist(const RootSystem& rs, const Weight& mu, Automorphism aut) {
    auto sigma = automorphism_permutation(rs.dtype, aut);
    Weight out(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) out[sigma[i]] = mu[i];
    return out;
}

std::vector<Automorphism> automorphisms_of(DynkinType dtype) {
    std::vector<Automorphism> v{Automorphism::Identity};
    for (Automorphism a : {Automorphism::Reversal, Automorphism::DSwap,
                           Automorphism::E6Involution, Automorphism::Triality,
                           Automorphism::TrialityInverse})
        if (automorphism_valid(dtype, a)) v.push_back(a);
    return v;
}

}  // namespace excepta
