#pragma once

#include "excepta/weights.hpp"
#include "excepta/weyl.hpp"

namespace excepta {

enum class Reason {
    ADJOINT,
    DIM_CRITERION,
    TRIVIAL_MODULE,
    S_EXCEEDS_LIMIT,
    RP_EXCEEDS_R,
    NOT_P_RESTRICTED,
    SPECIAL_PRIME_REFUSED,
    INCONCLUSIVE,
};

std::string reason_name(Reason r);

enum class VerdictKind { Exceptional, NotExceptional, Undetermined };

std::string verdict_name(VerdictKind k);

struct OrbitContribution {
    Weight mu;
    long long mult;                // m_mu used (lower bound or hint)
    BigInt orbit;                  // |W mu|
    int long_complement;           // |R_long^+ - R_{mu,p}^+|
    bool bad;                      // bad weights contribute nothing
};

struct ScreeningResult {
    Weight lambda;
    long long p = 0;
    BigInt s_value;      // sum of m_mu |W mu| over good mu seen so far
    BigInt rp_numerator; // r_p * |R_long|; exact rational kept until comparison
    long long rp_denominator = 1;  // |R_long|
    long long limit = 0;
    long long abs_R = 0;
    std::vector<OrbitContribution> contributions;
    bool short_circuited = false;
    bool overflowed = false;  // gap cap hit before both bounds were exceeded

    bool s_exceeds_limit() const { return s_value > limit; }
    bool rp_exceeds_R() const { return rp_numerator > BigInt(abs_R) * rp_denominator; }
    BigRat r_p_value() const { return BigRat(rp_numerator, rp_denominator); }
};

struct Verdict {
    VerdictKind kind = VerdictKind::Undetermined;
    std::vector<Reason> reasons;
    std::optional<ScreeningResult> screening;

    bool has(Reason r) const {
        for (Reason x : reasons)
            if (x == r) return true;
        return false;
    }
};

// ceil(L_G) per the limits table.
long long limit(DynkinType dtype);

// Printed M column of the limits table.
long long table_M(DynkinType dtype);

// min over good residue classes mu in [0,p)^rank of long_complement_count.
long long brute_force_M(const RootSystem& rs, long long p, long long cap = 20'000'000);

bool is_adjoint_weight(const RootSystem& rs, const Weight& lambda);

// weyl_dimension(lambda) < dim g - dim z(g); sound for Exceptional since the Weyl
// dimension bounds dim E(lambda) from above.
bool dimension_criterion(const RootSystem& rs, const Weight& lambda, long long p);

struct ScreenOptions {
    bool short_circuit = true;  // stop once both s > limit and r_p > |R| hold
    long long gap_cap = kDefaultGapCap;
};

ScreeningResult screen(const RootSystem& rs, const Weight& lambda, long long p,
                       const MultiplicityHints& hints, const ScreenOptions& opts = {});

Verdict classify_weight(const RootSystem& rs, const Weight& lambda, long long p,
                        const MultiplicityHints& hints, const ScreenOptions& opts = {});

}  // namespace excepta
