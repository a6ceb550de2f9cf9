#pragma once

#include <optional>
#include <set>

#include "excepta/rootsystem.hpp"

namespace excepta {

struct SubdiagramComponent {
    DynkinType dtype;
    std::vector<int> nodes;  // 0-based indices into the ambient diagram
};

struct SubdiagramDecomposition {
    std::vector<SubdiagramComponent> components;
};

BigInt weyl_order(DynkinType dtype);

// Delete all nodes with a_i != 0; type the connected components that remain.
SubdiagramDecomposition decompose_deleted_diagram(const RootSystem& rs, const Weight& mu);

// |C_W(mu)| = product of Weyl orders over the decomposition components.
BigInt centralizer_order(const RootSystem& rs, const Weight& mu);

// |W mu| = |W| / |C_W(mu)|, exact division asserted.
BigInt orbit_size(const RootSystem& rs, const Weight& mu);

// Oracle: BFS closure of mu under the simple reflections s_i: a_k -> a_k - a_i*C[k][i].
// Throws CapExceeded if the orbit would exceed cap elements.
std::set<Weight> orbit_enumerate(const RootSystem& rs, const Weight& mu, long long cap = 5'000'000);

// Closed forms from the orbit-size lemmas (types A and B/C/D); nullopt for others.
// Used as an independent cross-check against orbit_size.
std::optional<BigInt> orbit_size_closed_form(const RootSystem& rs, const Weight& mu);

BigInt factorial(int n);
BigInt binomial(long long n, long long k);

}  // namespace excepta
