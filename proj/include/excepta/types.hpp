#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace excepta {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Coefficient vectors. A Weight holds a_i with mu = sum a_i * omega_i;
// a RootVector holds c_i with gamma = sum c_i * alpha_i.
using Weight = std::vector<int>;
using RootVector = std::vector<int>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
    Family family;
    int rank;

    bool operator==(const DynkinType&) const = default;
};

// Thrown when a computation would exceed a caller-supplied cap.
struct CapExceeded : std::runtime_error {
    long long partial_count;
    CapExceeded(const std::string& what, long long partial)
        : std::runtime_error(what), partial_count(partial) {}
};

// Thrown when two results that must agree do not; callers treat this as fatal.
struct IntegrityError : std::logic_error {
    using std::logic_error::logic_error;
};

inline std::string family_name(Family f) { return std::string(1, static_cast<char>(f)); }

inline std::string type_name(const DynkinType& t) {
    return family_name(t.family) + std::to_string(t.rank);
}

inline Family parse_family(const std::string& s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case 'A': return Family::A;
            case 'B': return Family::B;
            case 'C': return Family::C;
            case 'D': return Family::D;
            case 'E': return Family::E;
            case 'F': return Family::F;
            case 'G': return Family::G;
        }
    }
    throw std::invalid_argument("unknown family '" + s + "' (expected one of A,B,C,D,E,F,G)");
}

inline bool rank_valid(Family f, int rank) {
    switch (f) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 2;
        case Family::C: return rank >= 2;
        case Family::D: return rank >= 4;
        case Family::E: return rank == 6 || rank == 7 || rank == 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

inline void check_rank(Family f, int rank) {
    if (!rank_valid(f, rank))
        throw std::invalid_argument(
            "invalid rank " + std::to_string(rank) + " for family " + family_name(f) +
            " (A: l>=1, B: l>=2, C: l>=2, D: l>=4, E: l in {6,7,8}, F: l=4, G: l=2)");
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

inline void check_prime(long long p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

inline bool is_dominant(const Weight& mu) {
    for (int a : mu)
        if (a < 0) return false;
    return true;
}

inline bool is_zero(const std::vector<int>& v) {
    for (int a : v)
        if (a != 0) return false;
    return true;
}

}  // namespace excepta
