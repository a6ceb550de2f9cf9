#include "excepta/screening.hpp"

namespace excepta {

std::string reason_name(Reason r) {
    switch (r) {
        case Reason::ADJOINT: return "ADJOINT";
        case Reason::DIM_CRITERION: return "DIM_CRITERION";
        case Reason::TRIVIAL_MODULE: return "TRIVIAL_MODULE";
        case Reason::S_EXCEEDS_LIMIT: return "S_EXCEEDS_LIMIT";
        case Reason::RP_EXCEEDS_R: return "RP_EXCEEDS_R";
        case Reason::NOT_P_RESTRICTED: return "NOT_P_RESTRICTED";
        case Reason::SPECIAL_PRIME_REFUSED: return "SPECIAL_PRIME_REFUSED";
        case Reason::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

std::string verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Exceptional: return "Exceptional";
        case VerdictKind::NotExceptional: return "NotExceptional";
        case VerdictKind::Undetermined: return "Undetermined";
    }
    return "?";
}

long long limit(DynkinType t) {
    check_rank(t.family, t.rank);
    const long long l = t.rank;
    switch (t.family) {
        case Family::A: return l * l * l + 2 * l * l + l;
        case Family::B: return l >= 5 ? 2 * l * l * l : 8 * l * l;
        case Family::C: return 4 * l * l * l;
        case Family::D:
            if (l >= 5) return 2 * l * l * l - 2 * l * l;
            // l = 4: ceil(8 l^2 (l-1) / (l-2)), integral here.
            return (8 * l * l * (l - 1) + (l - 2) - 1) / (l - 2);
        case Family::E: return l == 6 ? 324 : l == 7 ? 588 : 1011;
        case Family::F: return 192;
        case Family::G: return 36;
    }
    return 0;
}

long long table_M(DynkinType t) {
    check_rank(t.family, t.rank);
    const long long l = t.rank;
    switch (t.family) {
        case Family::A: return l;
        case Family::B:
        case Family::D: return l >= 5 ? 2 * (l - 1) : l * (l - 1) / 2;
        case Family::C: return 1;
        case Family::E: return l == 6 ? 16 : l == 7 ? 27 : 57;
        case Family::F: return 6;
        case Family::G: return 2;
    }
    return 0;
}

long long brute_force_M(const RootSystem& rs, long long p, long long cap) {
    check_prime(p);
    if (is_special_prime(rs.dtype, p))
        throw std::invalid_argument("brute_force_M: special prime refused");
    const int l = rs.rank();
    long long total = 1;
    for (int i = 0; i < l; ++i) {
        total *= p;
        if (total > cap) throw CapExceeded("brute_force_M: p^rank exceeds cap", 0);
    }
    long long best = -1;
    Weight mu(l, 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long v = idx;
        for (int i = 0; i < l; ++i) {
            mu[i] = static_cast<int>(v % p);
            v /= p;
        }
        int c = long_complement_count(rs, mu, p);
        if (c == 0) continue;  // bad weight
        if (best < 0 || c < best) best = c;
    }
    return best;
}

bool is_adjoint_weight(const RootSystem& rs, const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("is_adjoint_weight: not dominant");
    return lambda == root_to_weight_coords(rs, rs.highest_root);
}

bool dimension_criterion(const RootSystem& rs, const Weight& lambda, long long p) {
    if (!is_dominant(lambda) || is_zero(lambda))
        throw std::invalid_argument("dimension_criterion: lambda must be dominant and nonzero");
    BigInt bound = dim_g(rs.dtype) - center_dim(rs.dtype, p);
    return weyl_dimension_less_than(rs, lambda, bound);
}

namespace {

// The weight-set equality backing the screening sums carries one extra exclusion
// beyond non-special p: (G2, p=2, lambda=omega1).
bool screening_refused_input(const RootSystem& rs, const Weight& lambda, long long p) {
    return rs.dtype.family == Family::G && p == 2 && lambda == Weight{1, 0};
}

}  // namespace

ScreeningResult screen(const RootSystem& rs, const Weight& lambda, long long p,
                       const MultiplicityHints& hints, const ScreenOptions& opts) {
    check_prime(p);
    if (is_special_prime(rs.dtype, p))
        throw std::invalid_argument("screen: special prime refused for " + type_name(rs.dtype));
    if (!is_p_restricted(lambda, p))
        throw std::invalid_argument("screen: lambda is not p-restricted");
    if (screening_refused_input(rs, lambda, p))
        throw std::invalid_argument("screen: (G2, p=2, omega1) refused (weight-set equality proviso)");

    ScreeningResult res;
    res.lambda = lambda;
    res.p = p;
    res.rp_denominator = rs.abs_R_long();
    res.limit = limit(rs.dtype);
    res.abs_R = rs.abs_R();
    res.s_value = 0;
    res.rp_numerator = 0;

    auto visit = [&](const Weight& mu, const RootVector&) {
        OrbitContribution c;
        c.mu = mu;
        c.long_complement = long_complement_count(rs, mu, p);
        c.bad = (c.long_complement == 0);
        if (c.bad) {
            c.mult = 0;
            c.orbit = 0;
        } else {
            c.mult = multiplicity_lower_bound(rs, lambda, mu, p, hints);
            c.orbit = orbit_size(rs, mu);
            res.s_value += c.mult * c.orbit;
            res.rp_numerator += c.mult * c.orbit * c.long_complement;
        }
        res.contributions.push_back(std::move(c));
        if (opts.short_circuit && res.s_exceeds_limit() && res.rp_exceeds_R()) {
            res.short_circuited = true;
            return false;
        }
        return true;
    };

    try {
        for_each_dominant_below(rs, lambda, visit, opts.gap_cap);
    } catch (const CapExceeded&) {
        res.overflowed = true;
    }
    return res;
}

Verdict classify_weight(const RootSystem& rs, const Weight& lambda, long long p,
                        const MultiplicityHints& hints, const ScreenOptions& opts) {
    check_prime(p);
    Verdict v;
    if (is_special_prime(rs.dtype, p)) {
        v.kind = VerdictKind::Undetermined;
        v.reasons.push_back(Reason::SPECIAL_PRIME_REFUSED);
        return v;
    }
    if (!is_dominant(lambda) || !is_p_restricted(lambda, p)) {
        v.kind = VerdictKind::Undetermined;
        v.reasons.push_back(Reason::NOT_P_RESTRICTED);
        return v;
    }
    if (is_zero(lambda)) {
        v.kind = VerdictKind::Exceptional;
        v.reasons.push_back(Reason::TRIVIAL_MODULE);
        return v;
    }

    bool adjoint = is_adjoint_weight(rs, lambda);
    bool dimcrit = dimension_criterion(rs, lambda, p);
    if (adjoint || dimcrit) {
        v.kind = VerdictKind::Exceptional;
        if (adjoint) v.reasons.push_back(Reason::ADJOINT);
        if (dimcrit) v.reasons.push_back(Reason::DIM_CRITERION);
        // The necessary condition must hold for an exceptional module; a violated
        // bound here would contradict it.
        if (!screening_refused_input(rs, lambda, p)) {
            ScreeningResult chk = screen(rs, lambda, p, hints, opts);
            if (chk.s_exceeds_limit() || chk.rp_exceeds_R())
                throw IntegrityError("classify_weight: exceptional weight violates a screening bound at " +
                                     type_name(rs.dtype) + ", p=" + std::to_string(p));
            v.screening = std::move(chk);
        }
        return v;
    }

    ScreeningResult sr = screen(rs, lambda, p, hints, opts);
    bool s_ex = sr.s_exceeds_limit();
    bool rp_ex = sr.rp_exceeds_R();
    if (s_ex || rp_ex) {
        v.kind = VerdictKind::NotExceptional;
        if (s_ex) v.reasons.push_back(Reason::S_EXCEEDS_LIMIT);
        if (rp_ex) v.reasons.push_back(Reason::RP_EXCEEDS_R);
    } else {
        v.kind = VerdictKind::Undetermined;
        v.reasons.push_back(Reason::INCONCLUSIVE);
    }
    v.screening = std::move(sr);
    return v;
}

}  // namespace excepta
