#pragma once

// Block calculus for chain maps between canonical split complexes.
//
// A canonical split complex has A_k = B_k (+) H_k (+) B_{k-1} with the
// differential mapping the third summand of A_{k+1} identically onto the
// first summand of A_k.  Every chain endomorphism of such a complex is
// determined by five families of maps between the summands (upper
// triangular in the three slots), every degree-1 map to the translate by
// a matching triangular shape with a sign twist, and homotopies /
// higher homotopies admit explicit normal forms.  This header exposes
// those normal forms and the operations used by the symmetry analysis.

#include <optional>
#include <vector>

#include "symchain/complex.hpp"

namespace symchain {

// Blocks of a chain endomorphism f of a canonical split complex:
//   f_k = [ phi_k   a_k    c_k        ]
//         [ 0       psi_k  b_k        ]
//         [ 0       0      phi_{k-1}  ]
// with rows/columns indexed by the slots (B_k, H_k, B_{k-1}).
// phi_k : B_k -> B_k, psi_k : H_k -> H_k, a_k : H_k -> B_k,
// b_k : B_{k-1} -> H_k, c_k : B_{k-1} -> B_k.
// Vectors are indexed by k - lo over the complex window.
struct EndoBlocks {
    std::vector<ModuleMap> phi;
    std::vector<ModuleMap> psi;
    std::vector<ModuleMap> a;
    std::vector<ModuleMap> b;
    std::vector<ModuleMap> c;
};

// Blocks of a chain map g : A -> A[1] (degree-shifting symmetry data):
//   g_k = [ rho_k   u_k    w_k         ]
//         [ 0       xi_k   v_k         ]
//         [ 0       0      -rho_{k-1}  ]
// where the component g_k : A_k -> A[1]_k = A_{k+1} is written against the
// slots (B_{k+1}, H_{k+1}, B_k) of the target.
// rho_k : B_k -> B_{k+1}, xi_k : H_k -> H_{k+1}, u_k : H_k -> B_{k+1},
// v_k : B_{k-1} -> H_{k+1}, w_k : B_{k-1} -> B_{k+1}.
struct ShiftBlocks {
    std::vector<ModuleMap> rho;
    std::vector<ModuleMap> xi;
    std::vector<ModuleMap> u;
    std::vector<ModuleMap> v;
    std::vector<ModuleMap> w;
};

// Window-safe slot inclusion/projection: outside the window they are the
// zero maps in and out of the zero object at that degree.
ModuleMap slot_incl(const SplitShape& sh, int k, int slot);
ModuleMap slot_proj(const SplitShape& sh, int k, int slot);

// Accessors return the block at degree k, or the appropriately shaped zero
// map when k lies outside the window (so formulas need no edge cases).
ModuleMap endo_phi(const SplitShape& sh, const EndoBlocks& e, int k);
ModuleMap endo_psi(const SplitShape& sh, const EndoBlocks& e, int k);
ModuleMap endo_a(const SplitShape& sh, const EndoBlocks& e, int k);
ModuleMap endo_b(const SplitShape& sh, const EndoBlocks& e, int k);
ModuleMap endo_c(const SplitShape& sh, const EndoBlocks& e, int k);

// Build the chain endomorphism with the given blocks.  Throws MathError if
// block shapes do not match the shape data.
ChainMap assemble_endo(const SplitShape& sh, const EndoBlocks& e);

// Decompose a chain endomorphism of the canonical complex into its blocks.
// Throws MathError if any of the lower-triangular entries is nonzero or the
// (3,3) entry disagrees with phi_{k-1} -- which cannot happen for genuine
// chain maps, so this doubles as a structural self-check.
EndoBlocks extract_endo_blocks(const SplitShape& sh, const ChainMap& f);

// Identity endomorphism in block form (phi = id, psi = id, a = b = c = 0).
EndoBlocks identity_blocks(const SplitShape& sh);

// Blockwise composite g.f (same formula as composing the assembled maps):
//   (phi'phi, psi'psi, phi'a + a'psi, psi'b + b'phi_-, phi'c + a'b + c'phi_-)
EndoBlocks block_product(const SplitShape& sh, const EndoBlocks& g, const EndoBlocks& f);

// f is an equivalence (homotopy invertible) iff every psi_k is invertible;
// an isomorphism of complexes iff additionally every phi_k is invertible.
bool blocks_equivalence(const SplitShape& sh, const EndoBlocks& e);
bool blocks_automorphism(const SplitShape& sh, const EndoBlocks& e);

// Two quasi-inverse recipes for an equivalence f = (phi, psi, a, b, c):
//   pseudoinverse_id:   (id, psi^{-1}, 0, 0, 0)
//   pseudoinverse_zero: (0,  psi^{-1}, 0, 0, 0)
// Both compose with f to endomorphisms homotopic to the identity.
// Throw MathError if some psi_k is not invertible.
EndoBlocks pseudoinverse_id(const SplitShape& sh, const EndoBlocks& e);
EndoBlocks pseudoinverse_zero(const SplitShape& sh, const EndoBlocks& e);

// Chain endomorphisms f, f' of the canonical complex are homotopic iff
// psi = psi'.  When they are, an explicit homotopy h with f' = f + dh + hd:
//   h_k = [ 0                  0             0            ]
//         [ (b' - b)_{k+1}     0             0            ]
//         [ (phi' - phi)_k     (a' - a)_k    (c' - c)_k   ]
// (all five free blocks chosen zero).
bool endo_blocks_homotopic(const SplitShape& sh, const EndoBlocks& f, const EndoBlocks& fp);
std::optional<Homotopy> endo_homotopy_witness(const SplitShape& sh, const EndoBlocks& f,
                                              const EndoBlocks& fp);

// The general degree-1 self-homotopy h of the canonical complex, written in
// blocks against source slots (B_k, H_k, B_{k-1}) and target slots
// (B_{k+1}, H_{k+1}, B_k), has five free blocks:
//   h_k = [ alpha_k   gamma_k   delta_k   ]
//         [ *         beta_k    eps_k     ]
//         [ *         *         *         ]
// The effect of adding dh + hd to an endomorphism (phi, psi, a, b, c) is
//   phi +-> phi + h(3,1),  a +-> a + h(3,2),  c +-> c + h(3,3) + alpha_{k-1},
//   b +-> b + h(2,1)_{k-1},  psi unchanged.
// This struct carries the five free blocks; the forced blocks are derived.
struct EndoHomotopyBlocks {
    std::vector<ModuleMap> alpha;  // B_k -> B_{k+1}
    std::vector<ModuleMap> beta;   // H_k -> H_{k+1}
    std::vector<ModuleMap> gamma;  // H_k -> B_{k+1}
    std::vector<ModuleMap> delta;  // B_{k-1} -> B_{k+1}
    std::vector<ModuleMap> eps;    // B_{k-1} -> H_{k+1}
};

// Assemble the homotopy from f to f' with the given free blocks (requires
// psi = psi'); extract the free blocks of a homotopy between two given
// endomorphisms, checking the forced blocks are what the endpoints dictate.
Homotopy assemble_endo_homotopy(const SplitShape& sh, const EndoBlocks& f, const EndoBlocks& fp,
                                const EndoHomotopyBlocks& hb);
EndoHomotopyBlocks extract_endo_homotopy_blocks(const SplitShape& sh, const EndoBlocks& f,
                                                const EndoBlocks& fp, const Homotopy& h);

// Two homotopies h, h' between the same pair of endomorphisms are themselves
// related by a degree-2 homotopy iff their beta blocks agree; the witness is
//   h2_k = [ lambda_k          nu_k              theta_k                      ]
//          [ (eps - eps')_{k+1} mu_k             zeta_k                       ]
//          [ (alpha'-alpha)_k  (gamma'-gamma)_k  (delta'-delta)_k + lambda_{k-1} ]
// with the free blocks lambda, mu, nu, theta, zeta chosen zero.
bool endo_homotopies_equivalent(const SplitShape& sh, const EndoBlocks& f, const EndoBlocks& fp,
                                const Homotopy& h, const Homotopy& hp);
std::optional<Homotopy> endo_homotopy2_witness(const SplitShape& sh, const EndoBlocks& f,
                                               const EndoBlocks& fp, const Homotopy& h,
                                               const Homotopy& hp);

// ---- degree-shifting maps g : A -> A[1] -------------------------------

ModuleMap shift_rho(const SplitShape& sh, const ShiftBlocks& s, int k);
ModuleMap shift_xi(const SplitShape& sh, const ShiftBlocks& s, int k);
ModuleMap shift_u(const SplitShape& sh, const ShiftBlocks& s, int k);
ModuleMap shift_v(const SplitShape& sh, const ShiftBlocks& s, int k);
ModuleMap shift_w(const SplitShape& sh, const ShiftBlocks& s, int k);

// Assemble a chain map A -> A[1] from blocks / decompose one into blocks.
// extract checks the lower-triangular entries vanish and the (3,3) entry
// equals -rho_{k-1} (note the sign: the translate carries differential -d).
ChainMap assemble_shift(const SplitShape& sh, const ShiftBlocks& s);
ShiftBlocks extract_shift_blocks(const SplitShape& sh, const ChainMap& g);

// Chain maps g, g' : A -> A[1] are homotopic iff xi = xi'.  Witness:
//   h_k = [ 0                0             0           ]
//         [ (v' - v)_{k+1}   0             0           ]
//         [ (rho - rho')_k   (u - u')_k    (w - w')_k  ]
// (sign flip on the forced bottom row relative to the endomorphism case,
// again because the translate negates the differential).
bool shift_blocks_homotopic(const SplitShape& sh, const ShiftBlocks& g, const ShiftBlocks& gp);
std::optional<Homotopy> shift_homotopy_witness(const SplitShape& sh, const ShiftBlocks& g,
                                               const ShiftBlocks& gp);

}  // namespace symchain
