#pragma once

#include <optional>

#include "excepta/types.hpp"

namespace excepta {

// Diagram automorphisms exposed for twisting weights.
enum class Automorphism {
    Identity,
    Reversal,      // A_l, l >= 2: node i -> l+1-i
    DSwap,         // D_l: swap nodes l-1 and l
    E6Involution,  // E6: 1<->6, 3<->5
    Triality,      // D4: 1 -> 3 -> 4 -> 1
    TrialityInverse,  // D4: 1 -> 4 -> 3 -> 1
};

struct RootSystem {
    DynkinType dtype;
    // cartan[i][j] = <alpha_j, alpha_i> = 2(alpha_j,alpha_i)/(alpha_i,alpha_i), 0-based.
    std::vector<std::vector<int>> cartan;
    // d[i] = (alpha_i,alpha_i)/2 normalized so short roots have d=1.
    std::vector<int> d;
    std::vector<RootVector> positive_roots;  // lexicographic on coords
    RootVector highest_root;
    std::vector<int> long_positive_indices;  // indices into positive_roots
    // Fundamental weights in alpha-coordinates: omega_alpha[i][j] = coefficient of
    // alpha_j in omega_i (row i of the inverse Cartan matrix, exact rationals).
    std::vector<std::vector<BigRat>> omega_alpha;

    int rank() const { return dtype.rank; }
    int num_positive() const { return static_cast<int>(positive_roots.size()); }
    int abs_R() const { return 2 * num_positive(); }
    int abs_R_long() const { return 2 * static_cast<int>(long_positive_indices.size()); }
};

RootSystem build(DynkinType dtype);

// W-invariant pairing (mu, gamma) = sum_j c_j d_j a_j with mu in omega-coords and
// gamma in alpha-coords; exact integer.
long long inner_product(const RootSystem& rs, const Weight& mu, const RootVector& gamma);

// Exact alpha-coordinates of mu (inverse Cartan applied to the omega-coordinates).
std::vector<BigRat> weight_to_root_coords(const RootSystem& rs, const Weight& mu);

// Inverse conversion: mu_k = sum_j C[k][j] * x_j for integer alpha-coordinates.
Weight root_to_weight_coords(const RootSystem& rs, const RootVector& x);

bool is_bad_prime(DynkinType dtype, long long p);
bool is_special_prime(DynkinType dtype, long long p);
bool is_very_good_prime(DynkinType dtype, long long p);

long long dim_g(DynkinType dtype);
// dim z(g) for simply connected G: corank of the Cartan matrix over F_p.
int center_dim(DynkinType dtype, long long p);

bool automorphism_valid(DynkinType dtype, Automorphism aut);
// Node permutation of the automorphism: sigma[i] = image of node i (0-based).
std::vector<int> automorphism_permutation(DynkinType dtype, Automorphism aut);
Weight graph_twist(const RootSystem& rs, const Weight& mu, Automorphism aut);
// All valid automorphisms for the type, identity first.
std::vector<Automorphism> automorphisms_of(DynkinType dtype);

}  // namespace excepta
