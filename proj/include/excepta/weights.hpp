#pragma once

#include <functional>
#include <map>

#include "excepta/rootsystem.hpp"

namespace excepta {

inline constexpr long long kDefaultGapCap = 2'000'000;

struct DominantSet {
    std::vector<Weight> weights;          // canonical order: gap height, then lex on gap
    std::vector<RootVector> gaps;         // lambda - mu in alpha-coordinates
};

struct HintKey {
    DynkinType dtype;
    long long p;
    Weight lambda;
    Weight mu;
    auto operator<=>(const HintKey& o) const {
        if (auto c = static_cast<char>(dtype.family) <=> static_cast<char>(o.dtype.family); c != 0) return c;
        if (auto c = dtype.rank <=> o.dtype.rank; c != 0) return c;
        if (auto c = p <=> o.p; c != 0) return c;
        if (auto c = lambda <=> o.lambda; c != 0) return c;
        return mu <=> o.mu;
    }
};

struct MultiplicityHints {
    std::map<HintKey, long long> entries;

    void add(const HintKey& key, long long mult);
    static MultiplicityHints load_file(const std::string& path);
    static MultiplicityHints load_json_text(const std::string& text);
};

// Visit every dominant mu <= lambda in canonical order; visitor returns false to stop.
// Returns true if the enumeration completed (not stopped, not capped); throws
// CapExceeded when the gap-point cap is hit before the visitor stops the walk.
bool for_each_dominant_below(const RootSystem& rs, const Weight& lambda,
                             const std::function<bool(const Weight&, const RootVector&)>& visit,
                             long long gap_cap = kDefaultGapCap);

DominantSet dominant_below(const RootSystem& rs, const Weight& lambda,
                           long long gap_cap = kDefaultGapCap);

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda);

bool is_p_restricted(const Weight& mu, long long p);

// Definitional: (mu,gamma) = 0 mod p for every long positive root. Refuses special p.
bool is_bad_weight(const RootSystem& rs, const Weight& mu, long long p);

// |R_long^+ - R_{mu,p}^+|: long positive roots with (mu,gamma) != 0 mod p.
int long_complement_count(const RootSystem& rs, const Weight& mu, long long p);

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

// True iff weyl_dimension(lambda) < bound, with early exit (every factor of the
// Weyl product is >= 1 for dominant lambda, so partial products are lower bounds).
bool weyl_dimension_less_than(const RootSystem& rs, const Weight& lambda, const BigInt& bound);

// weyl_dimension((p-1)rho) == p^{|R^+|}; the computed dimension is returned via out.
bool steinberg_dimension_check(const RootSystem& rs, long long p, BigInt* value = nullptr);

long long multiplicity_lower_bound(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                   long long p, const MultiplicityHints& hints);

struct TruncatedPowerData {
    BigInt sym_dim;
    bool is_zero;
    Weight highest_weight;  // in A_{n-1} omega-coordinates; all zero when is_zero
};

TruncatedPowerData truncated_power_data(int n, long long p, long long d);

}  // namespace excepta
