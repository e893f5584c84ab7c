#include "symchain/blocks.hpp"

#include <stdexcept>

namespace symchain {

namespace {

CoeffObject slot_obj(const SplitShape& sh, int k, int slot) {
    if (slot == 0) return sh.boundary_obj(k);
    if (slot == 1) return sh.homology_obj(k);
    return sh.boundary_obj(k - 1);
}

ModuleMap incl_at(const SplitShape& sh, int k, int slot) { return slot_incl(sh, k, slot); }
ModuleMap proj_at(const SplitShape& sh, int k, int slot) { return slot_proj(sh, k, slot); }

// Block (row, col) of the component of f at source degree k, whose target
// lives at degree k + deg.
ModuleMap block_of(const SplitShape& sh, const ModuleMap& fk, int k, int deg, int row, int col) {
    return compose(proj_at(sh, k + deg, row), compose(fk, incl_at(sh, k, col)));
}

void check_sizes(const SplitShape& sh, std::initializer_list<const std::vector<ModuleMap>*> vs,
                 const char* what) {
    const std::size_t n = static_cast<std::size_t>(sh.cx.hi() - sh.cx.lo() + 1);
    for (const auto* v : vs)
        if (v->size() != n) throw std::invalid_argument(std::string(what) + ": block count does not match window");
}

ModuleMap at_or(const std::vector<ModuleMap>& v, const SplitShape& sh, int k, ModuleMap fallback) {
    if (sh.cx.in_window(k)) return v[static_cast<std::size_t>(k - sh.cx.lo())];
    return fallback;
}

}  // namespace

ModuleMap slot_incl(const SplitShape& sh, int k, int slot) {
    if (sh.cx.in_window(k)) return sh.incl(k, slot);
    return ModuleMap::zero(slot_obj(sh, k, slot), sh.cx.object_at(k));
}

ModuleMap slot_proj(const SplitShape& sh, int k, int slot) {
    if (sh.cx.in_window(k)) return sh.proj(k, slot);
    return ModuleMap::zero(sh.cx.object_at(k), slot_obj(sh, k, slot));
}

ModuleMap endo_phi(const SplitShape& sh, const EndoBlocks& e, int k) {
    return at_or(e.phi, sh, k, ModuleMap::zero(sh.boundary_obj(k), sh.boundary_obj(k)));
}
ModuleMap endo_psi(const SplitShape& sh, const EndoBlocks& e, int k) {
    return at_or(e.psi, sh, k, ModuleMap::zero(sh.homology_obj(k), sh.homology_obj(k)));
}
ModuleMap endo_a(const SplitShape& sh, const EndoBlocks& e, int k) {
    return at_or(e.a, sh, k, ModuleMap::zero(sh.homology_obj(k), sh.boundary_obj(k)));
}
ModuleMap endo_b(const SplitShape& sh, const EndoBlocks& e, int k) {
    return at_or(e.b, sh, k, ModuleMap::zero(sh.boundary_obj(k - 1), sh.homology_obj(k)));
}
ModuleMap endo_c(const SplitShape& sh, const EndoBlocks& e, int k) {
    return at_or(e.c, sh, k, ModuleMap::zero(sh.boundary_obj(k - 1), sh.boundary_obj(k)));
}

ChainMap assemble_endo(const SplitShape& sh, const EndoBlocks& e) {
    check_sizes(sh, {&e.phi, &e.psi, &e.a, &e.b, &e.c}, "assemble_endo");
    std::vector<ModuleMap> comps;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        ModuleMap fk = compose(incl_at(sh, k, 0),
                               compose(endo_phi(sh, e, k), proj_at(sh, k, 0)) +
                                   compose(endo_a(sh, e, k), proj_at(sh, k, 1)) +
                                   compose(endo_c(sh, e, k), proj_at(sh, k, 2))) +
                       compose(incl_at(sh, k, 1), compose(endo_psi(sh, e, k), proj_at(sh, k, 1)) +
                                                      compose(endo_b(sh, e, k), proj_at(sh, k, 2))) +
                       compose(incl_at(sh, k, 2), compose(endo_phi(sh, e, k - 1), proj_at(sh, k, 2)));
        comps.push_back(std::move(fk));
    }
    return ChainMap::build(sh.cx, sh.cx, std::move(comps));
}

EndoBlocks extract_endo_blocks(const SplitShape& sh, const ChainMap& f) {
    if (!(f.dom() == sh.cx) || !(f.cod() == sh.cx))
        throw std::invalid_argument("extract_endo_blocks: map is not an endomorphism of the given shape");
    EndoBlocks e;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        const ModuleMap fk = f.comp(k);
        if (!block_of(sh, fk, k, 0, 1, 0).is_zero() || !block_of(sh, fk, k, 0, 2, 0).is_zero() ||
            !block_of(sh, fk, k, 0, 2, 1).is_zero())
            throw MathError("extract_endo_blocks: lower-triangular block is nonzero");
        e.phi.push_back(block_of(sh, fk, k, 0, 0, 0));
        e.psi.push_back(block_of(sh, fk, k, 0, 1, 1));
        e.a.push_back(block_of(sh, fk, k, 0, 0, 1));
        e.b.push_back(block_of(sh, fk, k, 0, 1, 2));
        e.c.push_back(block_of(sh, fk, k, 0, 0, 2));
    }
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        const ModuleMap corner = block_of(sh, f.comp(k), k, 0, 2, 2);
        if (!(corner == endo_phi(sh, e, k - 1)))
            throw MathError("extract_endo_blocks: bottom-right block disagrees with phi at the previous degree");
    }
    return e;
}

EndoBlocks identity_blocks(const SplitShape& sh) {
    EndoBlocks e;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        e.phi.push_back(ModuleMap::identity(sh.boundary_obj(k)));
        e.psi.push_back(ModuleMap::identity(sh.homology_obj(k)));
        e.a.push_back(ModuleMap::zero(sh.homology_obj(k), sh.boundary_obj(k)));
        e.b.push_back(ModuleMap::zero(sh.boundary_obj(k - 1), sh.homology_obj(k)));
        e.c.push_back(ModuleMap::zero(sh.boundary_obj(k - 1), sh.boundary_obj(k)));
    }
    return e;
}

EndoBlocks block_product(const SplitShape& sh, const EndoBlocks& g, const EndoBlocks& f) {
    check_sizes(sh, {&g.phi, &g.psi, &g.a, &g.b, &g.c}, "block_product");
    check_sizes(sh, {&f.phi, &f.psi, &f.a, &f.b, &f.c}, "block_product");
    EndoBlocks r;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        const ModuleMap phi_prev = endo_phi(sh, f, k - 1);
        r.phi.push_back(compose(endo_phi(sh, g, k), endo_phi(sh, f, k)));
        r.psi.push_back(compose(endo_psi(sh, g, k), endo_psi(sh, f, k)));
        r.a.push_back(compose(endo_phi(sh, g, k), endo_a(sh, f, k)) +
                      compose(endo_a(sh, g, k), endo_psi(sh, f, k)));
        r.b.push_back(compose(endo_psi(sh, g, k), endo_b(sh, f, k)) +
                      compose(endo_b(sh, g, k), phi_prev));
        r.c.push_back(compose(endo_phi(sh, g, k), endo_c(sh, f, k)) +
                      compose(endo_a(sh, g, k), endo_b(sh, f, k)) +
                      compose(endo_c(sh, g, k), phi_prev));
    }
    return r;
}

bool blocks_equivalence(const SplitShape& sh, const EndoBlocks& e) {
    for (const ModuleMap& p : e.psi)
        if (!is_isomorphism(p)) return false;
    (void)sh;
    return true;
}

bool blocks_automorphism(const SplitShape& sh, const EndoBlocks& e) {
    if (!blocks_equivalence(sh, e)) return false;
    for (const ModuleMap& p : e.phi)
        if (!is_isomorphism(p)) return false;
    return true;
}

namespace {

EndoBlocks pseudoinverse_impl(const SplitShape& sh, const EndoBlocks& e, bool phi_identity) {
    EndoBlocks r;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        auto inv = inverse_map(endo_psi(sh, e, k));
        if (!inv) throw MathError("pseudoinverse: middle block is not invertible");
        const CoeffObject bk = sh.boundary_obj(k);
        r.phi.push_back(phi_identity ? ModuleMap::identity(bk) : ModuleMap::zero(bk, bk));
        r.psi.push_back(std::move(*inv));
        r.a.push_back(ModuleMap::zero(sh.homology_obj(k), bk));
        r.b.push_back(ModuleMap::zero(sh.boundary_obj(k - 1), sh.homology_obj(k)));
        r.c.push_back(ModuleMap::zero(sh.boundary_obj(k - 1), bk));
    }
    return r;
}

}  // namespace

EndoBlocks pseudoinverse_id(const SplitShape& sh, const EndoBlocks& e) {
    return pseudoinverse_impl(sh, e, true);
}

EndoBlocks pseudoinverse_zero(const SplitShape& sh, const EndoBlocks& e) {
    return pseudoinverse_impl(sh, e, false);
}

bool endo_blocks_homotopic(const SplitShape& sh, const EndoBlocks& f, const EndoBlocks& fp) {
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k)
        if (!(endo_psi(sh, f, k) == endo_psi(sh, fp, k))) return false;
    return true;
}

std::optional<Homotopy> endo_homotopy_witness(const SplitShape& sh, const EndoBlocks& f,
                                              const EndoBlocks& fp) {
    if (!endo_blocks_homotopic(sh, f, fp)) return std::nullopt;
    EndoHomotopyBlocks hb;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        hb.alpha.push_back(ModuleMap::zero(sh.boundary_obj(k), sh.boundary_obj(k + 1)));
        hb.beta.push_back(ModuleMap::zero(sh.homology_obj(k), sh.homology_obj(k + 1)));
        hb.gamma.push_back(ModuleMap::zero(sh.homology_obj(k), sh.boundary_obj(k + 1)));
        hb.delta.push_back(ModuleMap::zero(sh.boundary_obj(k - 1), sh.boundary_obj(k + 1)));
        hb.eps.push_back(ModuleMap::zero(sh.boundary_obj(k - 1), sh.homology_obj(k + 1)));
    }
    return assemble_endo_homotopy(sh, f, fp, hb);
}

namespace {

ModuleMap free_at(const std::vector<ModuleMap>& v, const SplitShape& sh, int k, const CoeffObject& dom,
                  const CoeffObject& cod) {
    if (sh.cx.in_window(k)) return v[static_cast<std::size_t>(k - sh.cx.lo())];
    return ModuleMap::zero(dom, cod);
}

}  // namespace

Homotopy assemble_endo_homotopy(const SplitShape& sh, const EndoBlocks& f, const EndoBlocks& fp,
                                const EndoHomotopyBlocks& hb) {
    if (!endo_blocks_homotopic(sh, f, fp))
        throw MathError("assemble_endo_homotopy: endomorphisms differ in the homology block");
    check_sizes(sh, {&hb.alpha, &hb.beta, &hb.gamma, &hb.delta, &hb.eps}, "assemble_endo_homotopy");
    std::vector<ModuleMap> comps;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        const ModuleMap alpha_prev =
            free_at(hb.alpha, sh, k - 1, sh.boundary_obj(k - 1), sh.boundary_obj(k));
        const std::size_t i = static_cast<std::size_t>(k - sh.cx.lo());
        // rows index the slots of A_{k+1}, columns the slots of A_k
        ModuleMap hk =
            compose(incl_at(sh, k + 1, 0), compose(hb.alpha[i], proj_at(sh, k, 0)) +
                                               compose(hb.gamma[i], proj_at(sh, k, 1)) +
                                               compose(hb.delta[i], proj_at(sh, k, 2))) +
            compose(incl_at(sh, k + 1, 1),
                    compose(endo_b(sh, fp, k + 1) - endo_b(sh, f, k + 1), proj_at(sh, k, 0)) +
                        compose(hb.beta[i], proj_at(sh, k, 1)) + compose(hb.eps[i], proj_at(sh, k, 2))) +
            compose(incl_at(sh, k + 1, 2),
                    compose(endo_phi(sh, fp, k) - endo_phi(sh, f, k), proj_at(sh, k, 0)) +
                        compose(endo_a(sh, fp, k) - endo_a(sh, f, k), proj_at(sh, k, 1)) +
                        compose(endo_c(sh, fp, k) - endo_c(sh, f, k) - alpha_prev, proj_at(sh, k, 2)));
        comps.push_back(std::move(hk));
    }
    return Homotopy::build(sh.cx, sh.cx, 1, std::move(comps));
}

EndoHomotopyBlocks extract_endo_homotopy_blocks(const SplitShape& sh, const EndoBlocks& f,
                                                const EndoBlocks& fp, const Homotopy& h) {
    if (h.degree() != 1 || !(h.dom() == sh.cx) || !(h.cod() == sh.cx))
        throw std::invalid_argument("extract_endo_homotopy_blocks: not a degree-1 self-homotopy of the shape");
    EndoHomotopyBlocks hb;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        const ModuleMap hk = h.comp(k);
        hb.alpha.push_back(block_of(sh, hk, k, 1, 0, 0));
        hb.beta.push_back(block_of(sh, hk, k, 1, 1, 1));
        hb.gamma.push_back(block_of(sh, hk, k, 1, 0, 1));
        hb.delta.push_back(block_of(sh, hk, k, 1, 0, 2));
        hb.eps.push_back(block_of(sh, hk, k, 1, 1, 2));
    }
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        const ModuleMap hk = h.comp(k);
        const ModuleMap alpha_prev =
            free_at(hb.alpha, sh, k - 1, sh.boundary_obj(k - 1), sh.boundary_obj(k));
        const bool ok =
            block_of(sh, hk, k, 1, 1, 0) == endo_b(sh, fp, k + 1) - endo_b(sh, f, k + 1) &&
            block_of(sh, hk, k, 1, 2, 0) == endo_phi(sh, fp, k) - endo_phi(sh, f, k) &&
            block_of(sh, hk, k, 1, 2, 1) == endo_a(sh, fp, k) - endo_a(sh, f, k) &&
            block_of(sh, hk, k, 1, 2, 2) == endo_c(sh, fp, k) - endo_c(sh, f, k) - alpha_prev;
        if (!ok) throw MathError("extract_endo_homotopy_blocks: forced blocks do not join the given endomorphisms");
    }
    return hb;
}

bool endo_homotopies_equivalent(const SplitShape& sh, const EndoBlocks& f, const EndoBlocks& fp,
                                const Homotopy& h, const Homotopy& hp) {
    const EndoHomotopyBlocks a = extract_endo_homotopy_blocks(sh, f, fp, h);
    const EndoHomotopyBlocks b = extract_endo_homotopy_blocks(sh, f, fp, hp);
    return a.beta == b.beta;
}

std::optional<Homotopy> endo_homotopy2_witness(const SplitShape& sh, const EndoBlocks& f,
                                               const EndoBlocks& fp, const Homotopy& h,
                                               const Homotopy& hp) {
    const EndoHomotopyBlocks a = extract_endo_homotopy_blocks(sh, f, fp, h);
    const EndoHomotopyBlocks b = extract_endo_homotopy_blocks(sh, f, fp, hp);
    if (!(a.beta == b.beta)) return std::nullopt;
    std::vector<ModuleMap> comps;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        auto diff_at = [&](const std::vector<ModuleMap>& xs, const std::vector<ModuleMap>& ys, int kk,
                           const CoeffObject& dom, const CoeffObject& cod) {
            return free_at(ys, sh, kk, dom, cod) - free_at(xs, sh, kk, dom, cod);
        };
        // rows index the slots of A_{k+2}, columns the slots of A_k; the free
        // blocks lambda, mu, nu, theta, zeta are all chosen zero
        ModuleMap h2k =
            compose(incl_at(sh, k + 2, 1),
                    compose(diff_at(b.eps, a.eps, k + 1, sh.boundary_obj(k), sh.homology_obj(k + 2)),
                            proj_at(sh, k, 0))) +
            compose(incl_at(sh, k + 2, 2),
                    compose(diff_at(a.alpha, b.alpha, k, sh.boundary_obj(k), sh.boundary_obj(k + 1)),
                            proj_at(sh, k, 0)) +
                        compose(diff_at(a.gamma, b.gamma, k, sh.homology_obj(k), sh.boundary_obj(k + 1)),
                                proj_at(sh, k, 1)) +
                        compose(diff_at(a.delta, b.delta, k, sh.boundary_obj(k - 1), sh.boundary_obj(k + 1)),
                                proj_at(sh, k, 2)));
        comps.push_back(std::move(h2k));
    }
    return Homotopy::build(sh.cx, sh.cx, 2, std::move(comps));
}

/* ---- degree-shifting maps ------------------------------------------------ */

ModuleMap shift_rho(const SplitShape& sh, const ShiftBlocks& s, int k) {
    return at_or(s.rho, sh, k, ModuleMap::zero(sh.boundary_obj(k), sh.boundary_obj(k + 1)));
}
ModuleMap shift_xi(const SplitShape& sh, const ShiftBlocks& s, int k) {
    return at_or(s.xi, sh, k, ModuleMap::zero(sh.homology_obj(k), sh.homology_obj(k + 1)));
}
ModuleMap shift_u(const SplitShape& sh, const ShiftBlocks& s, int k) {
    return at_or(s.u, sh, k, ModuleMap::zero(sh.homology_obj(k), sh.boundary_obj(k + 1)));
}
ModuleMap shift_v(const SplitShape& sh, const ShiftBlocks& s, int k) {
    return at_or(s.v, sh, k, ModuleMap::zero(sh.boundary_obj(k - 1), sh.homology_obj(k + 1)));
}
ModuleMap shift_w(const SplitShape& sh, const ShiftBlocks& s, int k) {
    return at_or(s.w, sh, k, ModuleMap::zero(sh.boundary_obj(k - 1), sh.boundary_obj(k + 1)));
}

ChainMap assemble_shift(const SplitShape& sh, const ShiftBlocks& s) {
    check_sizes(sh, {&s.rho, &s.xi, &s.u, &s.v, &s.w}, "assemble_shift");
    std::vector<ModuleMap> comps;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        // rows index the slots of A_{k+1}, columns the slots of A_k
        ModuleMap gk = compose(incl_at(sh, k + 1, 0), compose(shift_rho(sh, s, k), proj_at(sh, k, 0)) +
                                                          compose(shift_u(sh, s, k), proj_at(sh, k, 1)) +
                                                          compose(shift_w(sh, s, k), proj_at(sh, k, 2))) +
                       compose(incl_at(sh, k + 1, 1), compose(shift_xi(sh, s, k), proj_at(sh, k, 1)) +
                                                          compose(shift_v(sh, s, k), proj_at(sh, k, 2))) -
                       compose(incl_at(sh, k + 1, 2), compose(shift_rho(sh, s, k - 1), proj_at(sh, k, 2)));
        comps.push_back(std::move(gk));
    }
    return ChainMap::build(sh.cx, translate(sh.cx, 1), std::move(comps));
}

ShiftBlocks extract_shift_blocks(const SplitShape& sh, const ChainMap& g) {
    if (!(g.dom() == sh.cx) || !(g.cod() == translate(sh.cx, 1)))
        throw std::invalid_argument("extract_shift_blocks: map is not of the form A -> A[1] for the shape");
    ShiftBlocks s;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        const ModuleMap gk = g.comp(k);
        if (!block_of(sh, gk, k, 1, 1, 0).is_zero() || !block_of(sh, gk, k, 1, 2, 0).is_zero() ||
            !block_of(sh, gk, k, 1, 2, 1).is_zero())
            throw MathError("extract_shift_blocks: lower-triangular block is nonzero");
        s.rho.push_back(block_of(sh, gk, k, 1, 0, 0));
        s.xi.push_back(block_of(sh, gk, k, 1, 1, 1));
        s.u.push_back(block_of(sh, gk, k, 1, 0, 1));
        s.v.push_back(block_of(sh, gk, k, 1, 1, 2));
        s.w.push_back(block_of(sh, gk, k, 1, 0, 2));
    }
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        const ModuleMap corner = block_of(sh, g.comp(k), k, 1, 2, 2);
        if (!(corner == -shift_rho(sh, s, k - 1)))
            throw MathError("extract_shift_blocks: bottom-right block is not minus the previous top block");
    }
    return s;
}

bool shift_blocks_homotopic(const SplitShape& sh, const ShiftBlocks& g, const ShiftBlocks& gp) {
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k)
        if (!(shift_xi(sh, g, k) == shift_xi(sh, gp, k))) return false;
    return true;
}

std::optional<Homotopy> shift_homotopy_witness(const SplitShape& sh, const ShiftBlocks& g,
                                               const ShiftBlocks& gp) {
    if (!shift_blocks_homotopic(sh, g, gp)) return std::nullopt;
    std::vector<ModuleMap> comps;
    for (int k = sh.cx.lo(); k <= sh.cx.hi(); ++k) {
        // h_k : A_k -> A_{k+2}; rows index the slots of A_{k+2}. The bottom
        // row is rho - rho' (opposite sign to the endomorphism case: the
        // translated complex carries the negated differential).
        ModuleMap hk =
            compose(incl_at(sh, k + 2, 1),
                    compose(shift_v(sh, gp, k + 1) - shift_v(sh, g, k + 1), proj_at(sh, k, 0))) +
            compose(incl_at(sh, k + 2, 2),
                    compose(shift_rho(sh, g, k) - shift_rho(sh, gp, k), proj_at(sh, k, 0)) +
                        compose(shift_u(sh, g, k) - shift_u(sh, gp, k), proj_at(sh, k, 1)) +
                        compose(shift_w(sh, g, k) - shift_w(sh, gp, k), proj_at(sh, k, 2)));
        comps.push_back(std::move(hk));
    }
    return Homotopy::build(sh.cx, translate(sh.cx, 1), 1, std::move(comps));
}

}  // namespace symchain
