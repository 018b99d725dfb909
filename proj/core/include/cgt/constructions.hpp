#ifndef CGT_CONSTRUCTIONS_HPP
#define CGT_CONSTRUCTIONS_HPP

#include "cgt/fingroup.hpp"
#include "cgt/perm.hpp"

namespace cgt {

FinGroup cyclic(int n, std::size_t bound = kDefaultClosureBound);
FinGroup symmetric(int n, std::size_t bound = kDefaultClosureBound);
FinGroup alternating(int n, std::size_t bound = kDefaultClosureBound);

/// D_n for n ≥ 3: ⟨σ,τ | σ^n = τ² = e, στ = τσ^{n−1}⟩, order 2n.
FinGroup dihedral(int n);

/// Q_8 from its 2×2 matrix generators over the Gaussian integers.
FinGroup quaternion();

FinGroup klein4();

/// Permutation group generated by the given permutations (equal degrees).
FinGroup perm_group(const std::vector<Permutation>& gens,
                    std::size_t bound = kDefaultClosureBound);

FinGroup direct_product(const FinGroup& g, const FinGroup& h,
                        std::size_t bound = kDefaultClosureBound);

/// Action of K on H: one automorphism of H (as an image vector) per
/// element of K. Product on H×K: (h1,k1)(h2,k2) = (f_{k2}(h1)·h2, k1k2),
/// which requires f_{uv} = f_v ∘ f_u (verified exhaustively).
using SemidirectAction = std::vector<std::vector<int>>;

FinGroup semidirect_product(const FinGroup& h, const FinGroup& k,
                            const SemidirectAction& action,
                            std::size_t bound = kDefaultClosureBound);

SemidirectAction trivial_action(const FinGroup& h, const FinGroup& k);

/// Sends a generator of cyclic K to x ↦ x⁻¹ on abelian H. K must be
/// cyclic of even order (else the map is not a homomorphism unless H
/// has exponent ≤ 2).
SemidirectAction inversion_action(const FinGroup& h, const FinGroup& k);

/// Hol G = G ⋊ Aut G with (x,α)(y,β) = (x·α(y), αβ).
FinGroup holomorph(const FinGroup& g, std::size_t bound = kDefaultClosureBound);

/// Restricted wreath product G wr H for finite G, H: base group of all
/// functions H→G, product (f,h)(g,h1) = (f·g^h, h·h1), g^h(x) = g(xh).
FinGroup wreath_restricted(const FinGroup& g, const FinGroup& h,
                           std::size_t bound = kDefaultClosureBound);

}  // namespace cgt

#endif
