"""Command-line interface.

Subcommands: classify, canon, trace, fiber, lift, h1, curve, selftest.
Data I/O is JSON on stdin/stdout (--csv switches the flat commands to
comma-separated rows); the curve command emits "re,im,f_value,region" rows
over a grid and can render the region plot to an image file alongside.
Exit codes: 0 on success, 1 on a failed check or malformed input, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import cohomology as coh
from . import lifting as lif
from . import quotients as quo
from . import sampling as smp
from . import su21
from .errors import CharVarError
from .involutions import TAU0, TAU1, TAU2
from .linalg import (
    OMEGA,
    commutant_dim,
    fro,
    inverse,
    mat3_from_json,
    mat3_to_json,
)
from .quotients import StabilizerKind, Su21Region

_INVOLUTIONS = {"tau0": TAU0, "tau1": TAU1, "tau2": TAU2}
_MODELS = {"h1": su21.HermitianModel.H1, "h2": su21.HermitianModel.H2}


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 're,im', got {text!r}")
    z = complex(float(parts[0]), float(parts[1]))
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise ValueError("complex flag must be finite")
    return z


def _read_matrix(arg: str) -> np.ndarray:
    if arg == "-":
        text = sys.stdin.read()
    elif arg.startswith("@"):
        with open(arg[1:]) as fh:
            text = fh.read()
    else:
        text = arg
    return mat3_from_json(json.loads(text))


def _emit(obj) -> None:
    json.dump(obj, sys.stdout)
    sys.stdout.write("\n")


def _cmd_trace(args) -> int:
    m = _read_matrix(args.matrix)
    coords = quo.trace_coords(m)
    if args.csv:
        print(f"{coords.z.real!r},{coords.z.imag!r},{coords.w.real!r},{coords.w.imag!r}")
    else:
        _emit({"z": [coords.z.real, coords.z.imag], "w": [coords.w.real, coords.w.imag]})
    return 0


def _cmd_classify(args) -> int:
    m = _read_matrix(args.matrix)
    cls = su21.classify(m, _MODELS[args.model])
    if args.csv:
        print(cls.value)
    else:
        _emit({"class": cls.value})
    return 0


def _cmd_canon(args) -> int:
    m = _read_matrix(args.matrix)
    form = su21.canonical(m, _MODELS[args.model])
    if args.csv:
        if isinstance(form, su21.EllipticForm):
            print(f"elliptic,{form.a!r},{form.b!r},{form.c_marked!r}")
        else:
            print(f"loxodromic,{form.lam.real!r},{form.lam.imag!r}")
    else:
        _emit(su21.form_to_json(form))
    return 0


def _cmd_fiber(args) -> int:
    z = _parse_complex(args.z)
    if args.form == "sl3r":
        r, s = z.real, z.imag  # the flag carries the real pair (r, s)
        out = {
            "coords": [r, s],
            "count": quo.fiber_count_sl3r(r, s),
            "lift": mat3_to_json(quo.companion_lift(r, s)),
        }
        if args.csv:
            print(f"{r!r},{s!r},{out['count']}")
        else:
            _emit(out)
        return 0
    if args.form == "su3":
        inside = quo.su3_in_image(z)
        out = {"z": [z.real, z.imag], "in_image": inside, "count": 1 if inside else 0}
        if inside:
            out["lift"] = mat3_to_json(quo.diagonal_lift(quo.TraceCoords(z, z.conjugate())))
        if args.csv:
            print(f"{z.real!r},{z.imag!r},{int(inside)},{out['count']}")
        else:
            _emit(out)
        return 0
    forms = quo.fiber_enumerate_su21(z)
    region = quo.su21_region(z)
    if args.csv:
        for f in forms:
            if isinstance(f, su21.EllipticForm):
                print(f"{z.real!r},{z.imag!r},{region.value},elliptic,{f.a!r},{f.b!r},{f.c_marked!r}")
            else:
                print(f"{z.real!r},{z.imag!r},{region.value},loxodromic,{f.lam.real!r},{f.lam.imag!r}")
    else:
        _emit(
            {
                "z": [z.real, z.imag],
                "region": region.value,
                "count": len(forms),
                "forms": [su21.form_to_json(f) for f in forms],
            }
        )
    return 0


def _cmd_lift(args) -> int:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    rep, t = lif.representation_from_json(json.loads(text))
    if args.involution:
        t = _INVOLUTIONS[args.involution]
    result = lif.lift(rep, t)
    out = lif.lift_result_to_json(result)
    if args.csv:
        print(f"{out['real_form']},{out['central_witness']},{out['residual']!r}")
    else:
        _emit(out)
    return 0


def _h1_rows():
    rows = []
    for tname, t in (("tau0", TAU0), ("tau1", TAU1), ("tau2", TAU2)):
        for kind in StabilizerKind:
            try:
                entries = coh.h1_enumerate(kind, t)
            except CharVarError:
                continue
            rows.append(
                {
                    "involution": tname,
                    "stabilizer": kind.value,
                    "cardinality": len(entries),
                    "classes": [cl.label for _, cl in entries],
                    "representatives": [mat3_to_json(co.c) for co, _ in entries],
                }
            )
    return rows


def _cmd_h1(args) -> int:
    rows = _h1_rows()
    if args.json:
        _emit({"table": rows})
    elif args.csv:
        for r in rows:
            print(f"{r['involution']},{r['stabilizer']},{r['cardinality']}," + ";".join(r["classes"]))
    else:
        print(f"{'involution':<12}{'stabilizer':<12}{'|H1|':<6}classes")
        for r in rows:
            print(f"{r['involution']:<12}{r['stabilizer']:<12}{r['cardinality']:<6}" + ", ".join(r["classes"]))
    return 0


def _cmd_curve(args) -> int:
    if args.step <= 0:
        raise ValueError("--step must be positive")
    xs = np.arange(args.xmin, args.xmax + args.step / 2, args.step)
    ys = np.arange(args.ymin, args.ymax + args.step / 2, args.step)
    sink = open(args.out, "w") if args.out else sys.stdout
    try:
        for y in ys:
            for x in xs:
                z = complex(x, y)
                f = su21.goldman_f(z)
                region = quo.su21_region(z)
                sink.write(f"{float(x)!r},{float(y)!r},{f!r},{region.value}\n")
    finally:
        if args.out:
            sink.close()
    if args.png:
        _render_curve(xs, ys, args.png)
    return 0


def _render_curve(xs, ys, path: str) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xx, yy = np.meshgrid(xs, ys)
    ff = np.empty_like(xx)
    for i in range(xx.shape[0]):
        for j in range(xx.shape[1]):
            ff[i, j] = su21.goldman_f(complex(xx[i, j], yy[i, j]))
    fig, ax = plt.subplots(figsize=(6, 6))
    ax.contourf(xx, yy, np.sign(ff), levels=[-1.5, 0.0, 1.5], colors=["#c6dbef", "#fee6ce"])
    ax.contour(xx, yy, ff, levels=[0.0], colors="k", linewidths=1.0)
    centers = [3.0 + 0j, 3.0 * OMEGA, 3.0 * OMEGA**2]
    ax.plot([c.real for c in centers], [c.imag for c in centers], "k.", markersize=8)
    ax.set_xlabel("Re z")
    ax.set_ylabel("Im z")
    ax.set_title("trace plane: elliptic region and its boundary")
    ax.set_aspect("equal")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def _region_h1_bound(z: complex, region: Su21Region) -> int:
    """H1 cardinality of the stabilizer of a real base point over z."""
    if region is Su21Region.EXTERIOR:
        m, model = su21.representative(quo.fiber_enumerate_su21(z)[0])
        base = su21.convert_model(m, model, su21.HermitianModel.H1)
    elif region is Su21Region.CENTER:
        base, _ = su21.representative(quo.fiber_enumerate_su21(z)[0])
    else:
        base = quo.diagonal_lift(quo.TraceCoords(z, z.conjugate()))
    return coh.fiber_h1_kernel_bound(base, TAU2)


def _cmd_selftest(args) -> int:
    checks: list[tuple[str, bool, str]] = []

    def check(name: str, cond: bool, detail: str = "") -> None:
        checks.append((name, bool(cond), detail))

    rng = np.random.default_rng(args.seed)

    # trace-discriminant spot values
    spots = [(0j, -27.0), (3 + 0j, 0.0), (4 + 0j, 5.0), (-1 + 2j, 0.0)]
    for z, expect in spots:
        got = su21.goldman_f(z)
        check(f"goldman f({z}) = {expect}", abs(got - expect) <= 1e-9, f"got {got}")

    # stabilizer dimensions of the three closed-orbit types
    w = np.diag([1.0, OMEGA, OMEGA**2])
    check("commutant dim regular torus = 3", commutant_dim([w]) == 3)
    check("commutant dim GL2 block = 5", commutant_dim([np.diag([2.0, 2.0, 0.25]).astype(complex)]) == 5)
    check("commutant dim scalar = 9", commutant_dim([np.diag([OMEGA] * 3)]) == 9)

    # H1 cardinalities
    expected_h1 = [
        ("tau0", TAU0, StabilizerKind.TORUS_A, 1),
        ("tau0", TAU0, StabilizerKind.TORUS_B, 1),
        ("tau0", TAU0, StabilizerKind.GL2, 1),
        ("tau0", TAU0, StabilizerKind.FULL, 1),
        ("tau1", TAU1, StabilizerKind.TORUS_A, 4),
        ("tau1", TAU1, StabilizerKind.GL2, 3),
        ("tau1", TAU1, StabilizerKind.FULL, 2),
        ("tau2", TAU2, StabilizerKind.TORUS_A, 4),
        ("tau2", TAU2, StabilizerKind.GL2, 3),
        ("tau2", TAU2, StabilizerKind.FULL, 2),
        ("tau2", TAU2, StabilizerKind.TORUS_B, 1),
    ]
    for name, t, kind, card in expected_h1:
        try:
            entries = coh.h1_enumerate(kind, t)
            labels = {cl.label for _, cl in entries}
            ok = coh.h1_cardinality(kind, t) == card and len(entries) == card and len(labels) == card
            check(f"H1 {name} {kind.value} = {card}", ok, f"got {len(entries)} classes {sorted(labels)}")
        except CharVarError as exc:
            check(f"H1 {name} {kind.value} = {card}", False, str(exc))

    # fiber counts per region, sampled
    region_samples = {
        Su21Region.INTERIOR: [],
        Su21Region.BOUNDARY: [],
        Su21Region.CENTER: [3 + 0j, 3 * OMEGA, 3 * OMEGA**2],
        Su21Region.EXTERIOR: [],
    }
    while len(region_samples[Su21Region.INTERIOR]) < 25:
        z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        if su21.goldman_f(z) < -1e-3:
            region_samples[Su21Region.INTERIOR].append(z)
    while len(region_samples[Su21Region.EXTERIOR]) < 25:
        z = complex(rng.uniform(-6, 6), rng.uniform(-6, 6))
        if su21.goldman_f(z) > 1e-3:
            region_samples[Su21Region.EXTERIOR].append(z)
    for _ in range(25):
        a = rng.uniform(0.05, 2 * np.pi / 3 - 0.05)
        region_samples[Su21Region.BOUNDARY].append(2 * np.exp(1j * a) + np.exp(-2j * a))
    expected_counts = {
        Su21Region.INTERIOR: 3,
        Su21Region.BOUNDARY: 2,
        Su21Region.CENTER: 1,
        Su21Region.EXTERIOR: 1,
    }
    expected_bounds = {
        Su21Region.INTERIOR: 4,
        Su21Region.BOUNDARY: 3,
        Su21Region.CENTER: 2,
        Su21Region.EXTERIOR: 1,
    }
    for region, zs in region_samples.items():
        ok = True
        detail = ""
        for z in zs:
            got_region = quo.su21_region(z)
            forms = quo.fiber_enumerate_su21(z)
            classes = {cl.label for _, _, cl in coh.fiber_classes_su21(z)}
            if got_region is not region or len(forms) != expected_counts[region] or len(classes) != len(forms):
                ok = False
                detail = f"z={z}: region {got_region.value}, {len(forms)} forms, {len(classes)} classes"
                break
        check(f"fiber count over {region.value} = {expected_counts[region]}", ok, detail)
        bound = _region_h1_bound(region_samples[region][0], region)
        count = expected_counts[region]
        equality = count == bound
        check(
            f"fiber vs H1 bound over {region.value}: {count} {'=' if equality else '<'} {bound}",
            bound == expected_bounds[region]
            and count <= bound
            and (region is Su21Region.EXTERIOR) == equality,
        )

    # trichotomy on sampled group elements
    ok = True
    detail = ""
    for _ in range(100):
        m = smp.random_su21(rng)
        cls = su21.classify(m, su21.HermitianModel.H1)
        f = su21.goldman_f(complex(np.trace(m)))
        btol = quo.boundary_tol(complex(np.trace(m)))
        if f > btol and cls is not su21.ElementClass.LOXODROMIC:
            ok, detail = False, f"f={f}, class={cls.value}"
            break
        if f < -btol and cls is su21.ElementClass.LOXODROMIC:
            ok, detail = False, f"f={f}, class={cls.value}"
            break
    check("Goldman trichotomy on sampled SU(2,1) elements", ok, detail)

    # lifting round trips
    for fname, tau, expect in (
        ("sl3r", TAU0, "SL3R"),
        ("su3", TAU1, "SU3"),
        ("su21", TAU2, "SU21"),
    ):
        ok = True
        detail = ""
        for _ in range(5):
            gens = smp.random_representation(fname, rng)
            g = smp.random_sl3c(rng)
            ginv = inverse(g)
            rep = lif.Representation(tuple(g @ a @ ginv for a in gens))
            res = lif.lift(rep, tau)
            scale = max(1.0, max(fro(a) for a in rep.generators))
            if res.real_form.value != expect or res.residual > 1e-7 * scale:
                ok, detail = False, f"form={res.real_form.value}, residual={res.residual}"
                break
        check(f"lift round trip {fname} -> {expect}", ok, detail)

    # split-form fibers are singletons
    ok = True
    for _ in range(25):
        r, s = rng.uniform(-10, 10), rng.uniform(-10, 10)
        coords = quo.trace_coords(quo.companion_lift(r, s))
        if abs(coords.z - r) > 1e-6 or abs(coords.w - s) > 1e-6 or quo.fiber_count_sl3r(r, s) != 1:
            ok = False
            break
    check("split-form companion lifts project back, fiber = 1", ok)

    failed = 0
    for name, good, detail in checks:
        status = "PASS" if good else "FAIL"
        line = f"{status}  {name}"
        if not good and detail:
            line += f"  ({detail})"
        print(line)
        if not good:
            failed += 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl3charvar",
        description="Real points of the SL(3,C) character variety of Z",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace", help="trace coordinates (tr M, tr M^-1) of a unimodular matrix")
    p.add_argument("--matrix", required=True, help="matrix JSON, @file, or - for stdin")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("classify", help="dynamical type of an SU(2,1) element")
    p.add_argument("--matrix", required=True)
    p.add_argument("--model", choices=sorted(_MODELS), default="h1")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("canon", help="canonical conjugacy form of an SU(2,1) element")
    p.add_argument("--matrix", required=True)
    p.add_argument("--model", choices=sorted(_MODELS), default="h1")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("fiber", help="fiber of the quotient comparison map over a trace")
    p.add_argument("--form", choices=["sl3r", "su3", "su21"], required=True)
    p.add_argument(
        "--z",
        required=True,
        help="complex trace 're,im' (for sl3r: 'r,s'); write --z=-1,2 for negative values",
    )
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_fiber)

    p = sub.add_parser("lift", help="lift a representation with real character into a real form")
    p.add_argument("--input", default="-", help="JSON file, or - for stdin (default)")
    p.add_argument("--involution", choices=sorted(_INVOLUTIONS), help="override the involution field")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser("h1", help="cohomology table of stabilizer H1 sets with representatives")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_h1)

    p = sub.add_parser("curve", help="grid classification of the trace plane (CSV, optional plot)")
    p.add_argument("--xmin", type=float, default=-4.0)
    p.add_argument("--xmax", type=float, default=5.0)
    p.add_argument("--ymin", type=float, default=-4.5)
    p.add_argument("--ymax", type=float, default=4.5)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--png", help="also render the region plot to this image file")
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("selftest", help="reproduce the classification tables and spot values")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CharVarError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
