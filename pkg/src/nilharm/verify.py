"""Verification suites: every invariant battery behind one Report interface.

Each suite draws its randomness from named seed streams, so identical
(seed, inputs) produce byte-identical reports; all tolerances are fixed here.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import catalog as cat
from . import czdecomp as cz
from . import exactlinalg as ela
from . import funcs
from . import lie_core as lc
from . import multipliers as mult
from . import orbits as ob
from . import pedersen as pe
from . import symplectic as sp
from . import twist as tw
from .grids import Grid, SampledSymbol, lp_norm
from .rationals import is_zero_vector, vec_add, vec_scale
from .reports import Report
from .seeds import random_fraction, random_fraction_vector, stream


# ---------------------------------------------------------------------------
# 1. Exact-algebra suite
# ---------------------------------------------------------------------------


def exact_suite(seed: int = 0, samples: int = 100) -> Report:
    rep = Report(command="verify exact", seed=seed)
    algebras = cat.core_algebras()

    for name, L in algebras.items():
        rnd = stream(f"exact.jacobi.{name}", seed)
        bad = 0
        for _ in range(samples):
            x = random_fraction_vector(rnd, L.dim, max_num=3, max_den=3)
            y = random_fraction_vector(rnd, L.dim, max_num=3, max_den=3)
            z = random_fraction_vector(rnd, L.dim, max_num=3, max_den=3)
            res = vec_add(
                vec_add(lc.bracket(L, x, lc.bracket(L, y, z)),
                        lc.bracket(L, y, lc.bracket(L, z, x))),
                lc.bracket(L, z, lc.bracket(L, x, y)))
            if not is_zero_vector(res):
                bad += 1
        rep.check_true(f"jacobi_exact[{name}]", bad == 0, value=bad)

    for name, L in algebras.items():
        rnd = stream(f"exact.assoc.{name}", seed)
        bad = 0
        for _ in range(samples):
            x = random_fraction_vector(rnd, L.dim, max_num=3, max_den=3)
            y = random_fraction_vector(rnd, L.dim, max_num=3, max_den=3)
            z = random_fraction_vector(rnd, L.dim, max_num=3, max_den=3)
            left = lc.bch_product(L, lc.bch_product(L, x, y), z)
            right = lc.bch_product(L, x, lc.bch_product(L, y, z))
            if left != right:
                bad += 1
        rep.check_true(f"bch_associativity_exact[{name}]", bad == 0, value=bad)
        x = random_fraction_vector(rnd, L.dim, max_num=3, max_den=3)
        neg = tuple(-a for a in x)
        zero = tuple(Fraction(0) for _ in range(L.dim))
        rep.check_true(f"bch_inverse_and_unit[{name}]",
                       is_zero_vector(lc.bch_product(L, x, neg))
                       and lc.bch_product(L, zero, x) == x)

    for name, L in algebras.items():
        flag = lc.jordan_holder_flag(L)
        rep.check_true(f"flag_invariants_exact[{name}]",
                       not lc.flag_violations(L, flag.vectors))

    orbits = cat.flat_orbits()
    h3_orbit = orbits["h3"]
    rep.check_true("h3_jump_indices", h3_orbit.jump_set == (2, 3))
    rep.check_true("h3_flat", h3_orbit.flat)

    for name, orbit in orbits.items():
        full = [list(v) for v in list(orbit.isotropy_basis) + list(orbit.predual_basis)]
        rep.check_true(f"direct_sum_det_nonzero[{name}]", ela.det(full) != 0)
        rep.check_true(f"jump_set_even[{name}]", orbit.d % 2 == 0, value=orbit.d)

    for name, orbit in orbits.items():
        rnd = stream(f"exact.cocycle.{name}", seed)
        bad_cocycle = 0
        bad_ray = 0
        for _ in range(samples):
            x = random_fraction_vector(rnd, orbit.d, max_num=3, max_den=3)
            y = random_fraction_vector(rnd, orbit.d, max_num=3, max_den=3)
            z = random_fraction_vector(rnd, orbit.d, max_num=3, max_den=3)
            if not ob.verify_cocycle_identity(orbit, x, y, z):
                bad_cocycle += 1
            lam = random_fraction(rnd, max_num=3, max_den=3)
            mu = random_fraction(rnd, max_num=3, max_den=3)
            if ob.alpha(orbit, vec_scale(lam, x), vec_scale(mu, x)) != 0:
                bad_ray += 1
        rep.check_true(f"cocycle_identity_exact[{name}]", bad_cocycle == 0,
                       value=bad_cocycle)
        rep.check_true(f"cocycle_ray_vanishing_exact[{name}]", bad_ray == 0,
                       value=bad_ray)
    return rep


# ---------------------------------------------------------------------------
# 2. Example-families suite
# ---------------------------------------------------------------------------


def examples_suite(seed: int = 0) -> Report:
    rep = Report(command="verify examples", seed=seed)
    rnd = stream("examples.g0st", seed)

    pairs = []
    while len(pairs) < 20:
        s = random_fraction(rnd, max_num=5, max_den=3, nonzero=True)
        t = random_fraction(rnd, max_num=5, max_den=3, nonzero=True)
        pairs.append((s, t))
    cocycle_ok = nondeg_ok = ext_ok = 0
    for s, t in pairs:
        L0, omega = sp.family_g0st(s, t)
        ok, _ = sp.is_two_cocycle(L0, omega)
        cocycle_ok += ok
        nondeg_ok += omega.is_nondegenerate()
        ext = sp.central_extension(L0, omega)
        ext_ok += (len(lc.center(ext)) == 1 and ext.step == L0.step + 1)
    rep.check_true("g0st_cocycle_20_samples", cocycle_ok == 20, value=cocycle_ok)
    rep.check_true("g0st_nondegenerate_20_samples", nondeg_ok == 20, value=nondeg_ok)
    rep.check_true("g0st_extension_center_and_step", ext_ok == 20, value=ext_ok)

    rep.check_true("triangle_symplectic_exists",
                   sp.symplectic_exists_graph(cat.triangle_graph()))
    single_edge = sp.Graph(vertices=("u", "v"), edges=(("u", "v"),))
    rep.check_true("odd_dim_graph_excluded",
                   not sp.symplectic_exists_graph(single_edge))
    two_triangles = sp.Graph(
        vertices=("a", "b", "c", "p", "q", "r"),
        edges=(("a", "b"), ("b", "c"), ("a", "c"),
               ("p", "q"), ("q", "r"), ("p", "r")))
    rep.check_true("two_triangles_exists",
                   sp.symplectic_exists_graph(two_triangles))

    g = cat.nonhomog()
    ders = lc.derivation_space(g)
    cert = lc.is_characteristically_nilpotent(ders)
    rep.check_true("nonhomog_characteristically_nilpotent", cert.success)
    if cert.success:
        n = g.dim
        all_nilpotent = True
        for D in ders.basis:
            power = [list(row) for row in D]
            for _ in range(n - 1):
                power = [[sum((power[r][m] * D[m][c] for m in range(n)),
                              Fraction(0)) for c in range(n)] for r in range(n)]
            if any(power[r][c] != 0 for r in range(n) for c in range(n)):
                all_nilpotent = False
        rep.check_true("nonhomog_derivations_nilpotent_posthoc", all_nilpotent)
    rep.check_true("nonhomog_derivations_zero_diagonal",
                   all(all(D[i][i] == 0 for i in range(g.dim)) for D in ders.basis))
    leibniz_ok = all(
        is_zero_vector(lc.leibniz_residual(g, D, i, j))
        for D in ders.basis for i in range(g.dim) for j in range(i + 1, g.dim))
    rep.check_true("nonhomog_derivation_leibniz_exact", leibniz_ok)

    grid_vals = [Fraction(v) for v in (-2, -1, 0, 1, 2)]
    nd_ok = True
    for a in grid_vals:
        for b in grid_vals:
            expected = (a != 0 and b != 0)
            if sp.nonhomog_form(a, b).is_nondegenerate() != expected:
                nd_ok = False
    rep.check_true("nonhomog_form_nondegenerate_iff_ab_nonzero", nd_ok)

    rnd2 = stream("examples.nonhomog_form", seed)
    cocycle_ok = all(
        sp.is_two_cocycle(g, sp.nonhomog_form(
            random_fraction(rnd2, max_num=5, max_den=3),
            random_fraction(rnd2, max_num=5, max_den=3)))[0]
        for _ in range(10))
    rep.check_true("nonhomog_form_cocycle_10_samples", cocycle_ok)

    abelian2 = cat.abelian(2)
    std = sp.form_from_pairs(2, {(0, 1): Fraction(1)})
    h3_like = sp.central_extension(abelian2, std)
    rep.check_true("heisenberg_from_plane",
                   h3_like.step == 2 and len(lc.center(h3_like)) == 1)
    return rep


# ---------------------------------------------------------------------------
# 3. Operator-transform / twisted-convolution suite
# ---------------------------------------------------------------------------


def _h3_engine(half_width: float, points: int) -> pe.HeisenbergRealization:
    orbit = cat.flat_orbits()["h3"]
    twist = tw.from_orbit(orbit)
    grid = Grid(2, half_width, points)
    return pe.HeisenbergRealization(twist, grid)


def twist_suite(seed: int = 0, half_width: float = 8.0, points: int = 128) -> Report:
    rep = Report(command="verify twist", seed=seed)
    eng = _h3_engine(half_width, points)
    grid = eng.symbol_grid
    rep.measure("calibrated_density", eng.density)
    density_tol = 1e-6 if points >= 64 else 1e-4
    rep.check_bound("density_matches_power_of_2pi",
                    abs(eng.density - (2 * np.pi) ** -1.0) / ((2 * np.pi) ** -1.0),
                    density_tol)

    symbols = funcs.hermite_family(grid, 5)
    gsyms = funcs.gaussian_family(grid, 5)
    pairs = list(zip(gsyms, funcs.hermite_family(grid, 5)))
    idrep = eng.identity_report(symbols, pairs)
    rep.check_bound("trace_identity_max", max(idrep["trace"]), 1e-3)
    rep.check_bound("adjoint_identity_hs_max", max(idrep["adjoint"]), 1e-8)
    rep.check_bound("hs_isometry_rel_max", max(idrep["hs_isometry"]), 1e-3)
    rep.check_bound("inversion_roundtrip_rel_max", max(idrep["inversion"]), 1e-3)
    rep.check_bound("homomorphism_rel_max", max(idrep["homomorphism"]), 1e-3)
    rep.check_bound("trace_pairing_rel_max", max(idrep["pairing"]), 1e-3)

    zero = SampledSymbol(grid, np.zeros(grid.shape))
    rep.check_bound("zero_symbol_zero_operator",
                    eng.transform(zero).hs_norm(), 0.0)

    h = grid.h

    def snap(c: float) -> float:
        # Lattice-aligned shift near the physical value c; keeps the physical
        # scale grid-independent so boundary truncation stays negligible.
        return round(c / h) * h

    shifts = [((0.7, snap(1.0)), (0.3, snap(-0.5))),
              ((-0.4, 0.0), (1.1, snap(2.0))),
              ((0.9, snap(-1.0)), (0.9, snap(-1.0))),
              ((0.0, 0.0), (0.5, snap(0.5)))]
    x1 = eng.state_grid.axis
    vectors = [np.exp(-0.5 * (x1 - 0.4) ** 2), np.exp(-(x1 + 1.2) ** 2),
               np.exp(-0.5 * x1 ** 2) * x1]
    worst = max(eng.ccr_phase_residual(u, v, vectors) for u, v in shifts)
    rep.check_bound("ccr_phase_residual_max", worst, 1e-10)

    iso_worst = 0.0
    for q, p in [(0.8, snap(1.0)), (-1.3, snap(-2.0)), (2.0, 0.0)]:
        for f in vectors:
            iso_worst = max(iso_worst, abs(
                np.linalg.norm(eng.rep_apply(q, p, f)) / np.linalg.norm(f) - 1.0))
    rep.check_bound("rep_isometry_residual_max", iso_worst, 1e-10)

    slack = 0.0
    sub_pairs = list(zip(funcs.gaussian_family(grid, 5) + funcs.hermite_family(grid, 5),
                         funcs.hermite_family(grid, 5) + funcs.gaussian_family(grid, 5)))
    for a, b in sub_pairs:
        conv = eng.convolve(a, b)
        slack = max(slack, eng.symbol_norm(conv)
                    / (eng.symbol_norm(a) * eng.symbol_norm(b)))
    rep.check_bound("l2_submultiplicativity_slack", slack, 1.0 + 1e-6)

    assoc_worst = 0.0
    triples = [(gsyms[0], gsyms[1], gsyms[2]), (gsyms[3], symbols[1], gsyms[4])]
    for a, b, c in triples:
        left = eng.convolve(eng.convolve(a, b), c)
        right = eng.convolve(a, eng.convolve(b, c))
        num = lp_norm(SampledSymbol(grid, left.values - right.values), 2,
                      density=eng.density)
        den = (eng.symbol_norm(a) * eng.symbol_norm(b) * eng.symbol_norm(c))
        assoc_worst = max(assoc_worst, num / den)
    rep.check_bound("twisted_convolution_associativity", assoc_worst, 1e-2)

    delta = funcs.discrete_delta(grid, eng.density)
    out = eng.convolve(gsyms[0], delta)
    rep.check_bound(
        "approximate_identity_rel_l2",
        lp_norm(SampledSymbol(grid, out.values - gsyms[0].values), 2)
        / lp_norm(gsyms[0], 2), 0.02)

    v = (1.0, 0.0)
    da = tw.delta_action(eng.twist, gsyms[0], v)
    rep.check_bound("delta_action_norm_preservation",
                    abs(lp_norm(da, 2) / lp_norm(gsyms[0], 2) - 1.0), 1e-10)
    rep.check_bound("delta_action_at_zero",
                    float(np.max(np.abs(
                        tw.delta_action(eng.twist, gsyms[0], (0.0, 0.0)).values
                        - gsyms[0].values))), 0.0)

    untwisted = tw.zero_twist(2)
    sig1, sig2 = 1.0, 0.7
    g1 = funcs.sample(grid, funcs.gaussian((0.0, 0.0), sig1))
    g2 = funcs.sample(grid, funcs.gaussian((0.0, 0.0), sig2))
    plain = tw.twisted_convolve(untwisted, g1, g2, density=1.0)
    s2 = sig1 ** 2 + sig2 ** 2
    closed = funcs.sample(grid, lambda pts: (
        (2 * np.pi * sig1 ** 2 * sig2 ** 2 / s2)
        * np.exp(-0.5 * np.sum(np.asarray(pts, float) ** 2, axis=-1) / s2)
    ).astype(complex))
    rep.check_bound(
        "untwisted_gaussian_closed_form_rel_l2",
        lp_norm(SampledSymbol(grid, plain.values - closed.values), 2)
        / lp_norm(closed, 2), 1e-6)
    return rep


# ---------------------------------------------------------------------------
# 4. Calderon-Zygmund suite
# ---------------------------------------------------------------------------


def _cz_setup(half_width: float, points: int):
    orbit = cat.flat_orbits()["h3"]
    twist = tw.from_orbit(orbit)
    grid = Grid(2, half_width, points)
    pdist = cz.calibrate(cz.default_pseudo_distance(twist), twist, seed=0)
    return twist, grid, pdist


def cz_test_functions(grid: Grid) -> list[SampledSymbol]:
    f1 = funcs.sample(grid, funcs.smooth_bump((0.0, 0.0), 1.5, 4.0))
    f2_eval = funcs.smooth_bump((-2.0, 1.0), 1.0, 6.0)
    f3_eval = funcs.smooth_bump((2.5, -2.5), 2.0, 2.0)

    def f2(pts):
        return f2_eval(pts) + f3_eval(pts)

    def f3(pts):
        pts = np.asarray(pts, float)
        return (np.exp(-np.sum(pts ** 2, axis=-1))
                * (1.0 + np.cos(pts[..., 0]) ** 2)).astype(complex)

    return [f1, funcs.sample(grid, f2), funcs.sample(grid, f3)]


def cz_suite(seed: int = 0, half_width: float = 8.0, points: int = 128) -> Report:
    rep = Report(command="verify cz", seed=seed)
    twist, grid, pdist = _cz_setup(half_width, points)
    rep.measure("quasi_triangle_constant", pdist.quasi_constant)
    rep.measure("doubling_constant", pdist.doubling_constant)
    rep.check_bound("quasi_triangle_finite", pdist.quasi_constant, 4.0)

    zero_pts = np.zeros((1, 2))
    rep.check_bound("gauge_vanishes_at_origin", float(pdist.value(zero_pts)[0]), 0.0)
    probe = np.array([[0.7, -1.3], [2.0, 0.4], [-0.1, 3.3]])
    rep.check_bound("gauge_symmetric_under_negation",
                    float(np.max(np.abs(pdist.value(probe) - pdist.value(-probe)))),
                    0.0)

    worst = {"overlap": 0, "c_prime": 0.0, "c_dp": 0.0, "mz": 0.0, "recon": 0.0}
    n_balls_total = 0
    for fi, f in enumerate(cz_test_functions(grid)):
        fmax = float(np.max(np.abs(f.values)))
        for li, level in enumerate((0.05 * fmax, 0.15 * fmax, 0.4 * fmax)):
            result = cz.cz_decompose(f, level, pdist, twist)
            r = result.report
            n_balls_total += r["n_balls"]
            worst["overlap"] = max(worst["overlap"], r["overlap"])
            worst["c_prime"] = max(worst["c_prime"], r["c_prime"])
            worst["c_dp"] = max(worst["c_dp"], r["c_doubleprime"])
            worst["mz"] = max(worst["mz"],
                              r["mean_zero_max_residual"] / max(r["f_l1"], 1e-300))
            worst["recon"] = max(worst["recon"],
                                 r["reconstruction_max_error"] / (1.0 + fmax))
            for bad, ball in zip(result.bad_parts, result.covering.balls):
                sel = cz.covering_slices(grid, pdist, ball)
                outside = bad.values.copy()
                outside[sel] = 0.0
                if np.any(outside != 0):
                    rep.check_true(f"bad_support_containment[f{fi},l{li}]", False)
    # The identity f = g + sum b_i holds by construction; re-evaluating it in
    # doubles costs one rounding per node, so "exact" is certified at eps level.
    rep.check_bound("reconstruction_machine_exact", worst["recon"], 1e-14)
    rep.check_bound("twisted_mean_zero_rel", worst["mz"], 1e-12)
    rep.check_bound("bounded_overlap_max", float(worst["overlap"]), 64.0)
    rep.measure("covering_c_prime_max", worst["c_prime"])
    rep.measure("good_bad_c_doubleprime_max", worst["c_dp"])
    rep.measure("n_balls_total", n_balls_total)
    rep.check_true("measured_constants_finite",
                   np.isfinite(worst["c_prime"]) and np.isfinite(worst["c_dp"]))

    f = cz_test_functions(grid)[0]
    below = cz.cz_decompose(f, 2.0 * float(np.max(np.abs(f.values))), pdist, twist)
    rep.check_true("level_above_sup_trivial",
                   not below.bad_parts
                   and np.array_equal(below.good.values, f.values))

    kernel = funcs.sample(grid, funcs.smooth_bump((0.5, 0.0), 1.2, 2.0))
    fsrc = cz_test_functions(grid)[1]
    kf_sup_probe = cz.weak11_empirical(twist, kernel, fsrc, [1.0])["kf_sup"]
    levels = [kf_sup_probe / 2 ** j for j in range(1, 5)]
    w11 = cz.weak11_empirical(twist, kernel, fsrc, levels)
    rep.measure("weak11_empirical_a1", w11["empirical_a1"])
    rep.check_bound("weak11_stability_factor", w11["stability_factor"], 4.0)

    scale2 = cz.weak11_empirical(
        twist, kernel, SampledSymbol(grid, 2.0 * fsrc.values),
        [2.0 * lv for lv in levels])
    drift = max(abs(a - b) / max(abs(a), 1e-300)
                for a, b in zip(w11["ratios"].values(), scale2["ratios"].values()))
    rep.check_bound("weak11_homogeneity_exact", drift, 1e-12)

    u_grid = Grid(2, half_width, 32)
    k_eval = funcs.truncated_power(3.0, 1.0, 5.0)
    c2 = 4.0 * pdist.quasi_constant
    coarse = cz.hormander_twist_estimate(
        k_eval, pdist, twist, c2, Grid(2, half_width, 64), u_grid=u_grid)
    fine = cz.hormander_twist_estimate(
        k_eval, pdist, twist, c2, Grid(2, half_width, 128), u_grid=u_grid)
    rep.measure("hormander_estimate_n64", coarse["estimate"])
    rep.measure("hormander_estimate_n128", fine["estimate"])
    rep.check_bound(
        "hormander_refinement_drift",
        abs(fine["estimate"] - coarse["estimate"]) / max(fine["estimate"], 1e-300),
        0.10)
    zero_est = cz.hormander_twist_estimate(
        lambda pts: np.zeros(np.asarray(pts).shape[:-1], dtype=complex),
        pdist, twist, c2, Grid(2, half_width, 32), u_grid=u_grid)
    rep.check_bound("hormander_zero_kernel", zero_est["estimate"], 0.0)
    return rep


# ---------------------------------------------------------------------------
# 5. Multiplier / transference-maps suite
# ---------------------------------------------------------------------------


def multiplier_suite(seed: int = 0, half_width: float = 8.0,
                     points: int = 128) -> Report:
    rep = Report(command="verify multiplier", seed=seed)
    eng = _h3_engine(half_width, points)
    grid = eng.symbol_grid
    phis = funcs.gaussian_family(grid, 3)
    psis = funcs.hermite_family(grid, 3)

    delta = funcs.discrete_delta(grid, eng.density)
    approx = mult.multiplier_check(eng, delta, phis, psis)
    rep.check_bound("approx_identity_intertwining_hs",
                    max(approx["intertwining_hs"]), 1e-2)
    rep.check_bound("approx_identity_right_commutation",
                    max(approx["right_commutation_l2"]), 1e-2)
    ident_gap = max(
        eng.symbol_norm(SampledSymbol(grid, eng.convolve(delta, phi).values
                                      - phi.values)) / eng.symbol_norm(phi)
        for phi in phis)
    rep.check_bound("approx_identity_companion_gap", ident_gap, 1e-2)

    zero_u = SampledSymbol(grid, np.zeros(grid.shape))
    zrep = mult.multiplier_check(eng, zero_u, phis, psis)
    rep.check_bound("zero_multiplier_intertwining",
                    max(zrep["intertwining_hs"]), 1e-10)
    rep.check_bound("zero_multiplier_right_commutation",
                    max(zrep["right_commutation_l2"]), 1e-10)

    power_u = funcs.sample(grid, funcs.truncated_power(1.5, 0.25, 6.0))
    prep = mult.multiplier_check(eng, power_u, phis, psis)
    ratio_max = max(max(v) for v in prep["lp_ratios"].values())
    rep.measure("integrable_kernel_lp_ratio_max", ratio_max)
    rep.check_true("integrable_kernel_lp_ratio_finite", np.isfinite(ratio_max))
    rep.check_bound("integrable_kernel_intertwining",
                    max(prep["intertwining_hs"]), 1e-2)

    # The multiplier route and the transform-identity route measure the same
    # residual through independent code paths; they must agree.
    idrep = eng.identity_report([], [(power_u, phi) for phi in phis])
    via_identity = [
        r * eng.symbol_norm(power_u) * eng.symbol_norm(phi)
        for r, phi in zip(idrep["homomorphism"], phis)]
    gap = max(abs(a - b) for a, b in zip(prep["intertwining_hs"], via_identity))
    rep.check_bound("multiplier_vs_transform_residual_agreement", gap, 1e-10)

    angles = 64
    psi = phis[0]
    lifted = mult.sharp_map(psi, angles)
    back = mult.flat_map(lifted)
    rep.check_bound("sharp_flat_roundtrip",
                    float(np.max(np.abs(back.values - psi.values))), 1e-12)

    from .grids import TorusGridFunction, torus_lp_norm
    gen = np.random.default_rng(seed + 7)
    tor_vals = (gen.standard_normal((angles,) + grid.shape)
                + 1j * gen.standard_normal((angles,) + grid.shape))
    phi_t = TorusGridFunction(grid=grid, angles=angles, values=tor_vals)
    proj = mult.proj_p(phi_t)
    flat_then_sharp = mult.sharp_map(mult.flat_map(phi_t), angles)
    rep.check_bound("flat_sharp_equals_projection",
                    float(np.max(np.abs(flat_then_sharp.values - proj.values))),
                    1e-12)
    twice = mult.proj_p(proj)
    rep.check_bound("projection_idempotent",
                    float(np.max(np.abs(twice.values - proj.values))), 1e-12)

    for p in (1.0, 1.5, 2.0, 4.0):
        lhs = torus_lp_norm(mult.sharp_map(psi, angles), p)
        rhs = lp_norm(psi, p)
        rep.check_bound(f"sharp_isometric_lp[p={p}]",
                        abs(lhs - rhs) / rhs, 1e-12)
    return rep


# ---------------------------------------------------------------------------
# Aggregate
# ---------------------------------------------------------------------------


def full_report(seed: int = 0, quick: bool = False) -> Report:
    points = 32 if quick else 128
    samples = 25 if quick else 100
    rep = Report(command="report", seed=seed)
    for sub in (exact_suite(seed, samples=samples), examples_suite(seed),
                twist_suite(seed, points=points), cz_suite(seed, points=points),
                multiplier_suite(seed, points=points)):
        prefix = sub.command.removeprefix("verify ")
        for c in sub.checks:
            rep.add(f"{prefix}.{c.name}", c.status, value=c.value,
                    tolerance=c.tolerance)
    return rep
