#include "excepta/weights.hpp"

#include "excepta/weyl.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

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

long long floor_rat(const BigRat& r) {
    BigInt q = numerator(r) / denominator(r);
    if (q * denominator(r) > numerator(r)) --q;  // round toward -inf
    return q.convert_to<long long>();
}

}  // namespace

void MultiplicityHints::add(const HintKey& key, long long mult) {
    if (mult < 1) throw std::invalid_argument("multiplicity hint < 1 rejected");
    if (!is_dominant(key.lambda) || !is_dominant(key.mu))
        throw std::invalid_argument("multiplicity hint with non-dominant weight rejected");
    check_prime(key.p);
    entries[key] = mult;
}

MultiplicityHints MultiplicityHints::load_json_text(const std::string& text) {
    MultiplicityHints h;
    auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("hints file: expected a JSON array");
    for (const auto& e : doc) {
        HintKey key;
        key.dtype = {parse_family(e.at("type").get<std::string>()), e.at("rank").get<int>()};
        check_rank(key.dtype.family, key.dtype.rank);
        key.p = e.at("p").get<long long>();
        key.lambda = e.at("lambda").get<Weight>();
        key.mu = e.at("mu").get<Weight>();
        if (static_cast<int>(key.lambda.size()) != key.dtype.rank ||
            static_cast<int>(key.mu.size()) != key.dtype.rank)
            throw std::invalid_argument("hints file: weight length does not match rank");
        h.add(key, e.at("mult").get<long long>());
    }
    return h;
}

MultiplicityHints MultiplicityHints::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open hints file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load_json_text(text);
}

bool for_each_dominant_below(const RootSystem& rs, const Weight& lambda,
                             const std::function<bool(const Weight&, const RootVector&)>& visit,
                             long long gap_cap) {
    if (!is_dominant(lambda)) throw std::invalid_argument("dominant_below: lambda not dominant");
    const int l = rs.rank();

    // Any dominant mu <= lambda has nonnegative alpha-coordinates, so the gap
    // g = lambda - mu is boxed by floor(lambda's alpha-coordinates).
    auto la = weight_to_root_coords(rs, lambda);
    std::vector<long long> bound(l);
    for (int j = 0; j < l; ++j) bound[j] = floor_rat(la[j]);

    auto weight_of = [&](const RootVector& g) {
        Weight mu(l);
        for (int k = 0; k < l; ++k) {
            long long s = lambda[k];
            for (int j = 0; j < l; ++j) s -= static_cast<long long>(rs.cartan[k][j]) * g[j];
            mu[k] = static_cast<int>(s);
        }
        return mu;
    };

    long long visited = 0;
    std::unordered_set<RootVector, VecHash> seen;
    std::vector<RootVector> level{RootVector(l, 0)};
    seen.insert(level[0]);
    ++visited;
    while (!level.empty()) {
        // Levels are built in lex order already (sorted expansion below).
        for (const auto& g : level) {
            Weight mu = weight_of(g);
            if (is_dominant(mu)) {
                if (!visit(mu, g)) return false;
            }
        }
        std::vector<RootVector> next;
        for (const auto& g : level) {
            for (int j = 0; j < l; ++j) {
                if (g[j] >= bound[j]) continue;
                RootVector h = g;
                ++h[j];
                if (seen.insert(h).second) {
                    if (++visited > gap_cap)
                        throw CapExceeded("dominant_below: gap-point cap exceeded", visited - 1);
                    next.push_back(h);
                }
            }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return true;
}

DominantSet dominant_below(const RootSystem& rs, const Weight& lambda, long long gap_cap) {
    DominantSet out;
    for_each_dominant_below(
        rs, lambda,
        [&](const Weight& mu, const RootVector& g) {
            out.weights.push_back(mu);
            out.gaps.push_back(g);
            return true;
        },
        gap_cap);
    return out;
}

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
    const int l = rs.rank();
    Weight diff(l);
    for (int i = 0; i < l; ++i) diff[i] = lambda[i] - mu[i];
    auto x = weight_to_root_coords(rs, diff);
    for (const auto& c : x) {
        if (c < 0) return false;
        if (denominator(c) != 1) return false;
    }
    return true;
}

bool is_p_restricted(const Weight& mu, long long p) {
    check_prime(p);
    for (int a : mu)
        if (a < 0 || a > p - 1) return false;
    return true;
}

bool is_bad_weight(const RootSystem& rs, const Weight& mu, long long p) {
    if (is_special_prime(rs.dtype, p))
        throw std::invalid_argument("is_bad_weight: p = " + std::to_string(p) +
                                    " is special for " + type_name(rs.dtype));
    for (int idx : rs.long_positive_indices)
        if (inner_product(rs, mu, rs.positive_roots[idx]) % p != 0) return false;
    return true;
}

int long_complement_count(const RootSystem& rs, const Weight& mu, long long p) {
    check_prime(p);
    int n = 0;
    for (int idx : rs.long_positive_indices)
        if (inner_product(rs, mu, rs.positive_roots[idx]) % p != 0) ++n;
    return n;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dimension: lambda not dominant");
    BigInt num = 1, den = 1;
    for (const auto& g : rs.positive_roots) {
        long long a = 0, b = 0;
        for (int j = 0; j < rs.rank(); ++j) {
            long long w = static_cast<long long>(g[j]) * rs.d[j];
            a += w * (lambda[j] + 1);  // (lambda+rho, gamma)
            b += w;                    // (rho, gamma)
        }
        num *= a;
        den *= b;
    }
    BigInt q = num / den;
    if (q * den != num) throw IntegrityError("Weyl dimension is not integral");
    return q;
}

bool weyl_dimension_less_than(const RootSystem& rs, const Weight& lambda, const BigInt& bound) {
    if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dimension: lambda not dominant");
    BigInt num = 1, den = 1;
    for (const auto& g : rs.positive_roots) {
        long long a = 0, b = 0;
        for (int j = 0; j < rs.rank(); ++j) {
            long long w = static_cast<long long>(g[j]) * rs.d[j];
            a += w * (lambda[j] + 1);
            b += w;
        }
        num *= a;
        den *= b;
        // Every factor is >= 1, so num/den only grows from here on.
        if (num >= bound * den) return false;
    }
    BigInt q = num / den;
    if (q * den != num) throw IntegrityError("Weyl dimension is not integral");
    return q < bound;
}

bool steinberg_dimension_check(const RootSystem& rs, long long p, BigInt* value) {
    check_prime(p);
    Weight st(rs.rank(), static_cast<int>(p - 1));
    BigInt dim = weyl_dimension(rs, st);
    if (value) *value = dim;
    BigInt expect = 1;
    for (int i = 0; i < rs.num_positive(); ++i) expect *= p;
    return dim == expect;
}

long long multiplicity_lower_bound(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                   long long p, const MultiplicityHints& hints) {
    auto it = hints.entries.find({rs.dtype, p, lambda, mu});
    if (it != hints.entries.end()) return it->second;

    // Type A pattern: lambda = omega_i + omega_j, mu = omega_{i-1} + omega_{j+1}
    // (boundary terms dropped); multiplicity j-i+1, or j-i when p | (j-i+2).
    if (rs.dtype.family == Family::A) {
        const int l = rs.rank();
        int i = 0, j = 0, ones = 0;
        bool clean = true;
        for (int k = 0; k < l && clean; ++k) {
            if (lambda[k] == 1) {
                if (++ones == 1) i = k + 1;
                else j = k + 1;
            } else if (lambda[k] != 0) {
                clean = false;
            }
        }
        if (clean && ones == 2) {
            Weight expect(l, 0);
            if (i - 1 >= 1) expect[i - 2] += 1;
            if (j + 1 <= l) expect[j] += 1;
            if (mu == expect) return (j - i + 2) % p == 0 ? j - i : j - i + 1;
        }
    }
    return 1;
}

TruncatedPowerData truncated_power_data(int n, long long p, long long d) {
    if (n < 2) throw std::invalid_argument("truncated_power_data: n >= 2 required");
    check_prime(p);
    if (d < 0) throw std::invalid_argument("truncated_power_data: d >= 0 required");
    TruncatedPowerData out;
    out.sym_dim = binomial(n + d - 1, d);
    out.is_zero = d > n * (p - 1);
    out.highest_weight.assign(n - 1, 0);
    if (!out.is_zero) {
        long long s = d / (p - 1), k = d % (p - 1);
        if (s >= 1 && s <= n - 1) out.highest_weight[s - 1] += static_cast<int>(p - 1 - k);
        if (s + 1 <= n - 1) out.highest_weight[s] += static_cast<int>(k);
    }
    return out;
}

}  // namespace excepta
