"""Command line interface for the oriented-geodesic toolkit.

Subcommands
-----------
verify       run the deterministic verification suite; exit 0 iff all pass
analyze      scan a congruence over a chart grid: scalars, class, residuals
reconstruct  build an equidistant surface (closed form or by integrating r)
geodesic     sample a geodesic with label, endpoints and an ODE cross-check
convert      convert point sets between the half-space and ball models

Exit codes: 0 success; 1 failed verification or other model failure; 2 invalid
input; 3 chart singularity; 4 non-integrable (non-Lagrangian) congruence.

Report-writing commands (``analyze``, ``reconstruct``) also render a figure
next to the delimited output unless ``--figure none`` is given.
"""

import argparse
import json
import os
import sys

import numpy as np

from .congruence import (
    classify_metric,
    lagrangian_defect,
    optical_scalars,
    reduced_densities,
)
from .errors import (
    ChartSingularError,
    DegenerateError,
    InputError,
    IntegrabilityError,
    LH3Error,
    ModelDomainError,
)
from .extcomplex import ExtComplex
from .halfspace import (
    BallPoint,
    GeodesicArc,
    HalfSpacePoint,
    TangentH3,
    ball_from_halfspace,
    halfspace_from_ball,
    hyp_distance,
    integrate_geodesic_ode_state,
)
from .lines import (
    OrientedGeodesic,
    XiEtaChart,
    arc_of,
    endpoints,
    from_endpoints,
    geodesic_from_point_direction,
    point_at,
    velocity_at,
)
from .reconstruct import (
    equidistance_spread,
    export_csv,
    export_obj,
    family_axis,
    family_surface,
    r_closed_form_family,
    read_obj_vertices,
    solve_r_pde,
    surface_from_rfield,
    tube_family,
)
from .variational import (
    MaximalFamily,
    lagrangian_maximality_residual,
    maximal_family_graph,
    maximality_residual,
)
from .verify import run_all_checks

__all__ = ["main", "build_parser"]


# ---------------------------------------------------------------------------
# small parsing helpers


def _floats(text, n, what):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise InputError(f"{what} needs {n} comma-separated numbers, got {text!r}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise InputError(f"cannot parse {what}: {text!r}") from exc


def _pair(text, what):
    x, y = _floats(text, 2, what)
    return complex(x, y)


def _json_complex(v, what):
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        try:
            return complex(float(v[0]), float(v[1]))
        except (TypeError, ValueError) as exc:
            raise InputError(f"cannot parse {what}: {v!r}") from exc
    raise InputError(f"{what} must be a number or [re, im], got {v!r}")


def _json_extended(v, what):
    if isinstance(v, str) and v.lower() in ("inf", "infinity"):
        return ExtComplex.infinity()
    return ExtComplex(_json_complex(v, what))


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _dump_json(path, payload):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _figure_path(args, suffix=".png"):
    if args.figure == "none":
        return None
    if args.figure:
        return args.figure
    if args.out:
        stem, _ = os.path.splitext(args.out)
        return stem + suffix
    return None


def _poly(coeffs, what):
    cs = [_json_complex(c, what) for c in coeffs]

    def value(x):
        out = 0j
        for k, ck in enumerate(cs):
            out += ck * x**k
        return out

    def deriv(x):
        out = 0j
        for k, ck in enumerate(cs):
            if k:
                out += k * ck * x ** (k - 1)
        return out

    return value, deriv


def _congruence_from_spec(spec):
    """(congruence, family-or-None, description) from a JSON congruence spec."""
    from .congruence import Rank2Graph

    if not isinstance(spec, dict) or "type" not in spec:
        raise InputError('congruence spec needs a "type" field')
    kind = spec["type"]
    if kind == "family":
        try:
            if "triple" in spec:
                triple = tuple(
                    _json_complex(v, "triple entry") for v in spec["triple"]
                )
                fam = MaximalFamily(triple=triple, r0=float(spec.get("r0", 0.0)))
            else:
                for key in ("lam1", "lam2"):
                    if key not in spec:
                        raise InputError(f'family spec needs "{key}" (or a "triple")')
                fam = MaximalFamily(
                    _json_complex(spec["lam1"], "lam1"),
                    _json_complex(spec["lam2"], "lam2"),
                    r0=float(spec.get("r0", 0.0)),
                )
        except DegenerateError as exc:
            raise InputError(str(exc)) from exc
        return maximal_family_graph(fam), fam, "maximal family graph"
    if kind == "tube":
        for key in ("xi", "eta"):
            if key not in spec:
                raise InputError(f'tube spec needs "{key}"')
        axis = XiEtaChart(
            _json_complex(spec["xi"], "xi"), _json_complex(spec["eta"], "eta")
        )
        return tube_family(axis), None, "tube congruence"
    if kind == "graph":
        holo = spec.get("holomorphic", [])
        anti = spec.get("antiholomorphic", [])
        if not holo and not anti:
            raise InputError(
                'graph spec needs "holomorphic" and/or "antiholomorphic" coefficients'
            )
        ph, dph = _poly(holo, "holomorphic coefficient")
        pa, dpa = _poly(anti, "antiholomorphic coefficient")

        def F(nu):
            return ph(nu) + pa(nu.conjugate())

        def dF(nu):
            return dph(nu), dpa(nu.conjugate())

        return Rank2Graph(F, dF, name="polynomial graph"), None, "polynomial graph"
    raise InputError(f"unknown congruence type {kind!r}")


def _grid(center, extent, n):
    side = np.linspace(-extent, extent, n)
    return (center.real + side)[None, :] + 1j * (center.imag + side)[:, None]


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args):
    overrides = {}
    for item in args.tol or []:
        if "=" not in item:
            raise InputError(f"--tol expects KEY=VALUE, got {item!r}")
        key, _, val = item.partition("=")
        try:
            overrides[key.strip()] = float(val)
        except ValueError as exc:
            raise InputError(f"--tol value for {key!r} is not a number") from exc
    try:
        records = run_all_checks(seed=args.seed, tolerances=overrides or None)
    except KeyError as exc:
        raise InputError(str(exc)) from exc

    width = max(len(r.check) for r in records)
    for r in records:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.check:<{width}} {r.anchor} measured={r.measured:.6e}")
    n_fail = sum(not r.passed for r in records)
    print(f"{len(records) - n_fail}/{len(records)} checks passed (seed={args.seed})")

    if args.out:
        _dump_json(
            args.out,
            {
                "seed": args.seed,
                "all_pass": n_fail == 0,
                "checks": [r.to_json() for r in records],
            },
        )
        print(f"wrote {args.out}")
    if args.figure and args.figure != "none":
        _verify_figure(args.figure, records)
        print(f"wrote {args.figure}")
    return 0 if n_fail == 0 else 1


def _verify_figure(path, records):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    names = [r.anchor.split(":")[0] for r in records]
    vals = [np.log10(max(abs(r.measured), 1e-18)) for r in records]
    colors = ["tab:green" if r.passed else "tab:red" for r in records]
    fig, ax = plt.subplots(figsize=(8, 0.3 * len(records) + 1.5))
    ax.barh(range(len(records)), vals, color=colors)
    ax.set_yticks(range(len(records)), names, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("log10 measured")
    ax.set_title("verification suite: measured magnitudes")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


# ---------------------------------------------------------------------------
# analyze


def _cmd_analyze(args):
    spec = _load_json(args.input)
    cong, fam, desc = _congruence_from_spec(spec)
    center = _pair(args.center, "--center")
    nus = _grid(center, args.extent, args.grid)

    rows = []
    class_map = np.full(nus.shape, np.nan)
    resid_map = np.full(nus.shape, np.nan)
    skipped = 0
    counts = {"lorentzian": 0, "riemannian": 0, "degenerate": 0}
    for j in range(nus.shape[0]):
        for k in range(nus.shape[1]):
            nu = nus[j, k]
            try:
                m1, m2 = cong.point(nu)
                ell, shear = reduced_densities(cong, nu)
                cls = classify_metric(cong, nu)
                lag = lagrangian_defect(cong, nu)
            except LH3Error:
                skipped += 1
                continue
            counts[cls] = counts.get(cls, 0) + 1
            class_map[j, k] = {"riemannian": -1.0, "degenerate": 0.0}.get(cls, 1.0)

            r_here = r_closed_form_family(fam, nu) if fam is not None else args.r
            rho = sigma = None
            try:
                opt = optical_scalars(cong, nu, r_here)
                rho, sigma = opt.rho, opt.sigma
            except LH3Error:
                pass

            resid = np.nan
            try:
                if lag <= 1e-8:
                    resid = abs(lagrangian_maximality_residual(cong, nu))
                else:
                    resid = abs(maximality_residual(cong, nu))
            except LH3Error:
                pass
            resid_map[j, k] = resid

            rows.append(
                {
                    "nu": [nu.real, nu.imag],
                    "mu1": [m1.real, m1.imag],
                    "mu2": [m2.real, m2.imag],
                    "r": r_here,
                    "class": cls,
                    "L": ell,
                    "S_abs": abs(shear),
                    "lagrangian_defect": lag,
                    "residual_abs": None if np.isnan(resid) else resid,
                    "expansion": None if rho is None else rho.real,
                    "twist": None if rho is None else rho.imag,
                    "shear_abs": None if sigma is None else abs(sigma),
                }
            )

    finite = resid_map[np.isfinite(resid_map)]
    print(f"analyze: {desc}, {len(rows)} grid points ({skipped} skipped)")
    print(
        "classes: "
        + ", ".join(f"{k}={v}" for k, v in sorted(counts.items()) if v)
    )
    if finite.size:
        print(f"max |residual| = {np.max(finite):.6e}")

    if args.out:
        if args.format == "csv":
            _write_analyze_csv(args.out, rows)
        else:
            _dump_json(
                args.out,
                {
                    "congruence": desc,
                    "center": [center.real, center.imag],
                    "extent": args.extent,
                    "grid": args.grid,
                    "skipped": skipped,
                    "rows": rows,
                },
            )
        print(f"wrote {args.out}")
    fig_path = _figure_path(args)
    if fig_path:
        _analyze_figure(fig_path, center, args.extent, class_map, resid_map)
        print(f"wrote {fig_path}")
    return 0


_ANALYZE_COLUMNS = [
    "nu_re", "nu_im", "mu1_re", "mu1_im", "mu2_re", "mu2_im", "r", "class",
    "L", "S_abs", "lagrangian_defect", "residual_abs", "expansion", "twist",
    "shear_abs",
]


def _write_analyze_csv(path, rows):
    def fmt(v):
        if v is None:
            return "nan"
        if isinstance(v, str):
            return v
        return f"{v:.12g}"

    out = [",".join(_ANALYZE_COLUMNS)]
    for row in rows:
        flat = [
            row["nu"][0], row["nu"][1], row["mu1"][0], row["mu1"][1],
            row["mu2"][0], row["mu2"][1], row["r"], row["class"], row["L"],
            row["S_abs"], row["lagrangian_defect"], row["residual_abs"],
            row["expansion"], row["twist"], row["shear_abs"],
        ]
        out.append(",".join(fmt(v) for v in flat))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(out) + "\n")


def _analyze_figure(path, center, extent, class_map, resid_map):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ext4 = [
        center.real - extent,
        center.real + extent,
        center.imag - extent,
        center.imag + extent,
    ]
    fig, axes = plt.subplots(1, 2, figsize=(10.5, 4.2))
    im0 = axes[0].imshow(
        class_map, origin="lower", extent=ext4, cmap="coolwarm", vmin=-1, vmax=1
    )
    axes[0].set_title("pullback metric type (+1 = lorentzian, -1 = riemannian)")
    with np.errstate(divide="ignore", invalid="ignore"):
        logr = np.log10(resid_map)
    im1 = axes[1].imshow(logr, origin="lower", extent=ext4, cmap="viridis")
    axes[1].set_title("log10 |maximality residual|")
    for ax in axes:
        ax.set_xlabel("Re nu")
        ax.set_ylabel("Im nu")
    fig.colorbar(im0, ax=axes[0], shrink=0.85)
    fig.colorbar(im1, ax=axes[1], shrink=0.85)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


# ---------------------------------------------------------------------------
# reconstruct


def _cmd_reconstruct(args):
    if bool(args.family) == bool(args.input):
        raise InputError("reconstruct needs exactly one of --family or --input")
    center = _pair(args.center, "--center")
    nus = _grid(center, args.extent, args.grid)

    fam = None
    if args.family:
        l1r, l1i, l2r, l2i = _floats(args.family, 4, "--family")
        try:
            fam = MaximalFamily(complex(l1r, l1i), complex(l2r, l2i), r0=args.r0)
        except DegenerateError as exc:
            raise InputError(str(exc)) from exc
    else:
        cong, fam, _ = _congruence_from_spec(_load_json(args.input))

    if fam is not None:
        margin = min(
            abs(nu - s) for nu in nus.ravel() for s in fam.singular_points()
        )
        if margin < 0.1:
            raise InputError(
                f"grid comes within {margin:.3g} of a singular point of the "
                "family (need a margin of at least 0.1); move --center or "
                "shrink --extent"
            )
        surface = family_surface(fam, nus)
    else:
        rfield = solve_r_pde(cong, nus, anchor_value=args.anchor)
        print(f"integrability defect = {rfield.defect:.6e}")
        surface = surface_from_rfield(cong, rfield)

    fmt = args.format or {
        ".obj": "obj", ".csv": "csv", ".json": "json"
    }.get(os.path.splitext(args.out)[1].lower())
    if fmt is None:
        raise InputError("cannot infer --format from the output extension")

    if fmt == "obj":
        nverts, nquads = export_obj(args.out, surface)
        print(f"wrote {args.out} ({nverts} vertices, {nquads} quads)")
    elif fmt == "csv":
        export_csv(args.out, surface)
        print(f"wrote {args.out} ({surface.nus.size} samples)")
    else:
        _dump_json(args.out, _surface_json(surface))
        print(f"wrote {args.out} ({surface.nus.size} samples)")

    print(
        f"heights t in [{np.min(surface.t):.6g}, {np.max(surface.t):.6g}], "
        f"r in [{np.min(surface.r):.6g}, {np.max(surface.r):.6g}]"
    )
    if fam is not None:
        axis = family_axis(fam)
        med, spread = equidistance_spread(surface, axis)
        b, e = endpoints(axis)
        print(
            f"axis endpoints {b.to_json()} -> {e.to_json()}; "
            f"distance {med:.6g} (spread {spread:.3e})"
        )
    fig_path = _figure_path(args)
    if fig_path:
        _surface_figure(fig_path, surface)
        print(f"wrote {fig_path}")
    return 0


def _surface_json(surface):
    samples = []
    verts = surface.ball_vertices()
    i = 0
    ny, nx = surface.shape
    for j in range(ny):
        for k in range(nx):
            nu = surface.nus[j, k]
            samples.append(
                {
                    "nu": [nu.real, nu.imag],
                    "r": surface.r[j, k],
                    "z": [surface.z[j, k].real, surface.z[j, k].imag],
                    "t": surface.t[j, k],
                    "ball": [verts[i][0], verts[i][1], verts[i][2]],
                }
            )
            i += 1
    return {"shape": [ny, nx], "samples": samples}


def _surface_figure(path, surface):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ny, nx = surface.shape
    verts = surface.ball_vertices().reshape(ny, nx, 3)
    fig = plt.figure(figsize=(6.5, 6.5))
    ax = fig.add_subplot(projection="3d")
    ax.plot_wireframe(
        verts[:, :, 0], verts[:, :, 1], verts[:, :, 2],
        color="tab:blue", linewidth=0.6,
    )
    u = np.linspace(0, 2 * np.pi, 24)
    v = np.linspace(0, np.pi, 12)
    ax.plot_wireframe(
        np.outer(np.cos(u), np.sin(v)),
        np.outer(np.sin(u), np.sin(v)),
        np.outer(np.ones_like(u), np.cos(v)),
        color="0.85", linewidth=0.3,
    )
    ax.set_box_aspect((1, 1, 1))
    for setter in (ax.set_xlim, ax.set_ylim, ax.set_zlim):
        setter(-1.0, 1.0)
    ax.set_title("equidistant surface (ball model)")
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


# ---------------------------------------------------------------------------
# geodesic


def _geodesic_from_args(args):
    """(label-or-None, arc, initial state) from --mu or --input."""
    if bool(args.mu) == bool(args.input):
        raise InputError("geodesic needs exactly one of --mu or --input")
    if args.mu:
        m1r, m1i, m2r, m2i = _floats(args.mu, 4, "--mu")
        g = OrientedGeodesic(ExtComplex(complex(m1r, m1i)), ExtComplex(complex(m2r, m2i)))
        return g, arc_of(g)
    spec = _load_json(args.input)
    if "mu" in spec:
        vals = spec["mu"]
        if not isinstance(vals, (list, tuple)) or len(vals) != 2:
            raise InputError('"mu" must be a pair [mu1, mu2]')
        g = OrientedGeodesic(
            _json_extended(vals[0], "mu1"), _json_extended(vals[1], "mu2")
        )
        return g, arc_of(g)
    if "endpoints" in spec:
        vals = spec["endpoints"]
        if not isinstance(vals, (list, tuple)) or len(vals) != 2:
            raise InputError('"endpoints" must be a pair')
        b = _json_extended(vals[0], "begin endpoint")
        e = _json_extended(vals[1], "end endpoint")
        g = from_endpoints(b, e)
        return g, arc_of(g)
    if "point" in spec and "direction" in spec:
        try:
            zr, zi, t = (float(v) for v in spec["point"])
            a, br, bi = (float(v) for v in spec["direction"])
        except (TypeError, ValueError) as exc:
            raise InputError(
                '"point" needs [z_re, z_im, t] and "direction" [a, b_re, b_im]'
            ) from exc
        p = HalfSpacePoint(complex(zr, zi), t)
        v = TangentH3(p, a, complex(br, bi)).normalized()
        g = geodesic_from_point_direction(p, v)
        return g, GeodesicArc.from_initial(p, v)
    raise InputError(
        'geodesic spec needs "mu", "endpoints", or "point" + "direction"'
    )


def _cmd_geodesic(args):
    g, arc = _geodesic_from_args(args)
    rs = [float(p) for p in args.r.split(",")] if args.r else [-1.0, 0.0, 1.0]

    in_chart = g is not None and g.in_chart()
    samples = []
    for r in rs:
        if in_chart:
            p = point_at(g, r)
            speed = velocity_at(g, r).norm()
        else:
            p = arc.point(r)
            speed = arc.velocity(r).norm()
        samples.append({"r": r, "z": [p.z.real, p.z.imag], "t": p.t, "speed": speed})

    r_chk = max((abs(r) for r in rs), default=1.0) or 1.0
    r_chk = min(r_chk, 3.0)
    if in_chart:
        p0, v0 = point_at(g, 0.0), velocity_at(g, 0.0)
        ref = point_at(g, r_chk)
    else:
        p0, v0 = arc.point(0.0), arc.velocity(0.0)
        ref = arc.point(r_chk)
    ode_p, _ = integrate_geodesic_ode_state(p0, v0, r_chk, step=1e-3)
    gap = hyp_distance(ref, ode_p)

    b, e = endpoints(g) if g is not None else (None, None)
    payload = {
        "label": g.to_json() if g is not None else None,
        "in_chart": in_chart,
        "endpoints": None if b is None else [b.to_json(), e.to_json()],
        "samples": samples,
        "ode_crosscheck": {"r": r_chk, "distance": gap},
    }

    if g is not None:
        print(f"label: mu1={g.mu1.to_json()}  mu2={g.mu2.to_json()}")
    if b is not None:
        print(f"endpoints: {b.to_json()} -> {e.to_json()}")
    for s in samples:
        print(
            f"r={s['r']:+.4f}  z={s['z'][0]:+.9f}{s['z'][1]:+.9f}i  "
            f"t={s['t']:.9f}  speed={s['speed']:.12f}"
        )
    print(f"closed form vs ODE at r={r_chk:g}: distance {gap:.3e}")

    if args.out:
        if args.format == "csv":
            rows = ["r,z_re,z_im,t,speed"]
            rows += [
                f"{s['r']:.12g},{s['z'][0]:.12g},{s['z'][1]:.12g},"
                f"{s['t']:.12g},{s['speed']:.12g}"
                for s in samples
            ]
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write("\n".join(rows) + "\n")
        else:
            _dump_json(args.out, payload)
        print(f"wrote {args.out}")
    return 0


# ---------------------------------------------------------------------------
# convert


def _cmd_convert(args):
    ext = os.path.splitext(args.input)[1].lower()
    if ext == ".obj":
        verts = read_obj_vertices(args.input)
        model, points = "ball", [list(map(float, v)) for v in verts]
    else:
        spec = _load_json(args.input)
        model = spec.get("model")
        if model not in ("half-space", "ball"):
            raise InputError('input JSON needs "model": "half-space" or "ball"')
        points = spec.get("points", [])

    out_rows = []
    try:
        if model == "half-space":
            target = "ball"
            for row in points:
                zr, zi, t = (float(v) for v in row)
                y = ball_from_halfspace(HalfSpacePoint(complex(zr, zi), t))
                out_rows.append([y.y[0], y.y[1], y.y[2]])
        else:
            target = "half-space"
            for row in points:
                p = halfspace_from_ball(BallPoint([float(v) for v in row]))
                out_rows.append([p.z.real, p.z.imag, p.t])
    except (TypeError, ValueError) as exc:
        raise InputError(f"malformed point row: {exc}") from exc
    except ModelDomainError as exc:
        raise InputError(str(exc)) from exc

    print(f"converted {len(out_rows)} points: {model} -> {target}")
    if args.out:
        if args.format == "csv":
            header = "y1,y2,y3" if target == "ball" else "z_re,z_im,t"
            rows = [header] + [
                ",".join(f"{v:.12g}" for v in row) for row in out_rows
            ]
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write("\n".join(rows) + "\n")
        else:
            _dump_json(args.out, {"model": target, "points": out_rows})
        print(f"wrote {args.out}")
    return 0


# ---------------------------------------------------------------------------
# parser and entry point


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lh3",
        description="Computational toolkit for the space of oriented geodesics "
        "of hyperbolic 3-space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the deterministic verification suite")
    p.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    p.add_argument(
        "--tol",
        action="append",
        metavar="KEY=VAL",
        help="override one tolerance (repeatable)",
    )
    p.add_argument("--out", help="write a JSON report here")
    p.add_argument("--figure", help="write a summary figure here ('none' to skip)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("analyze", help="scan a congruence over a chart grid")
    p.add_argument("--input", required=True, help="congruence spec (JSON)")
    p.add_argument("--center", default="1,0", help="grid center 're,im'")
    p.add_argument("--extent", type=float, default=0.5, help="grid half-width")
    p.add_argument("--grid", type=int, default=11, help="grid points per side")
    p.add_argument("--r", type=float, default=0.0, help="fibre value for scalars")
    p.add_argument("--out", help="write rows here")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--figure", help="figure path (defaults beside --out; 'none' to skip)")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("reconstruct", help="build an equidistant surface")
    p.add_argument("--family", help="'l1re,l1im,l2re,l2im' for a maximal family")
    p.add_argument("--r0", type=float, default=0.5, help="family offset (with --family)")
    p.add_argument("--input", help="congruence spec (JSON) for the PDE route")
    p.add_argument("--anchor", type=float, default=0.0, help="r at the grid anchor")
    p.add_argument("--center", default="1,0", help="grid center 're,im'")
    p.add_argument("--extent", type=float, default=0.4, help="grid half-width")
    p.add_argument("--grid", type=int, default=20, help="grid points per side")
    p.add_argument("--out", default="surface.obj", help="output path")
    p.add_argument("--format", choices=("obj", "csv", "json"))
    p.add_argument("--figure", help="figure path (defaults beside --out; 'none' to skip)")
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("geodesic", help="sample a geodesic and cross-check the ODE")
    p.add_argument("--mu", help="label 'm1re,m1im,m2re,m2im'")
    p.add_argument("--input", help="JSON with mu | endpoints | point+direction")
    p.add_argument("--r", help="comma-separated parameter values (default -1,0,1)")
    p.add_argument("--out", help="write samples here")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_geodesic)

    p = sub.add_parser("convert", help="convert points between models")
    p.add_argument("--input", required=True, help="JSON point set or OBJ mesh")
    p.add_argument("--out", help="output path")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=_cmd_convert)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ChartSingularError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except IntegrabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except LH3Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
