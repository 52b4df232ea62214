"""Command-line front end.

Subcommands wrap the library modules one-to-one and emit deterministic JSON
(rationals as "p/q" strings, weights as integer arrays, lists sorted).  Exit
codes: 0 success, 1 verification failure, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import complexes, cy_ci, groupoid, mutation, svg, verify, windows
from .errors import (InputError, NotAdjacentError, OnWallError, QSWindowsError,
                     UnsupportedDimensionError)
from .rep import QSRep
from .windows import Context


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {text!r}: {exc}") from exc


def _parse_vector(text: str) -> tuple[Fraction, ...]:
    return tuple(_parse_fraction(part) for part in text.split(","))


def _parse_int_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"bad integer vector {text!r}") from exc


def _load_rep(args) -> QSRep:
    if args.input is None:
        raise InputError("this subcommand needs --input FILE")
    try:
        data = json.loads(Path(args.input).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {args.input}: {exc}") from exc
    return QSRep.from_dict(data)


def _emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _delta(args, name="delta"):
    value = getattr(args, name)
    if value is None:
        raise InputError(f"--{name.replace('_', '')} is required")
    return _parse_vector(value)


def cmd_rep(args) -> int:
    _emit(_load_rep(args).to_json())
    return 0


def cmd_arrangement(args) -> int:
    rep_obj = _load_rep(args)
    ctx = Context(rep_obj)
    payload = ctx.arrangement.to_json()
    payload["walls_in_box"] = [
        {"family": w.family_index, "offset": str(w.offset)}
        for w in ctx.arrangement.walls_in_box(args.box)
    ]
    if args.format in ("svg", "both"):
        _write_svg(args, "arrangement.svg",
                   svg.window_figure(rep_obj, ctx, _first_off_wall(ctx), box=args.box))
    if args.format != "svg":
        _emit(payload)
    return 0


def _first_off_wall(ctx: Context):
    from .verify import _off_wall_point
    return ctx.arrangement.to_ambient(_off_wall_point(ctx.arrangement))


def cmd_window(args) -> int:
    rep_obj = _load_rep(args)
    ctx = Context(rep_obj)
    delta = _delta(args)
    win = ctx.window(delta)
    if args.format in ("svg", "both"):
        _write_svg(args, "window.svg", svg.window_figure(rep_obj, ctx, delta, box=args.box))
    if args.format != "svg":
        _emit(win.to_json())
    return 0


def cmd_wallcross(args) -> int:
    rep_obj = _load_rep(args)
    ctx = Context(rep_obj)
    delta, delta2 = _delta(args), _delta(args, "delta2")
    crossing = windows.wall_crossing(rep_obj, delta, delta2, ctx)
    mapping = windows.mu_map(rep_obj, crossing)
    faces = []
    for key in crossing.face_keys:
        fd = crossing.faces[key]
        chars = crossing.chars_by_face[key]
        faces.append({
            "key": list(key),
            "beta_plus": list(fd.beta_plus),
            "d_plus": fd.d_plus,
            "d_minus": fd.d_minus,
            "chars": [list(c) for c in chars],
            "images": [list(mapping[c]) for c in chars],
            "dagger_key": list(windows.dagger(rep_obj, fd, ctx).key),
        })
    payload = {
        "delta0": [str(x) for x in crossing.delta0],
        "common": [list(c) for c in crossing.common],
        "faces": faces,
    }
    if args.format in ("svg", "both"):
        _write_svg(args, "wallcross.svg", svg.crossing_figure(rep_obj, ctx, delta, delta2))
    if args.format != "svg":
        _emit(payload)
    return 0


def cmd_faces(args) -> int:
    rep_obj = _load_rep(args)
    ctx = Context(rep_obj)
    delta = _delta(args)
    poly = ctx.half_sigma_at(delta)
    out = []
    for face in poly.faces():
        fd = windows.face_data_from_face(rep_obj, poly, face, delta)
        if args.face is not None and list(fd.key) != list(args.face):
            continue
        out.append(fd.to_json())
    _emit({"delta": [str(Fraction(x)) for x in delta], "faces": out})
    return 0


def cmd_complex(args) -> int:
    rep_obj = _load_rep(args)
    ctx = Context(rep_obj)
    delta, delta2 = _delta(args), _delta(args, "delta2")
    crossing = windows.wall_crossing(rep_obj, delta, delta2, ctx)
    if args.chi is None:
        raise InputError("--chi is required")
    chi = _parse_int_vector(args.chi)
    fd = crossing.face_of_char(chi)
    terms = complexes.complex_terms(rep_obj, fd, chi)
    _emit(terms.to_json())
    return 0


def cmd_mutate(args) -> int:
    rep_obj = _load_rep(args)
    ctx = Context(rep_obj)
    delta, delta2 = _delta(args), _delta(args, "delta2")
    wall = mutation.toric_wall(rep_obj, delta, delta2, ctx)
    spec = mutation.module_of_window(rep_obj, delta, ctx)
    steps = args.steps if args.steps is not None else wall.face.d_plus - 1
    trace = [spec.to_json()]
    for _ in range(steps):
        spec = wall.mutate(spec, args.direction)
        trace.append(spec.to_json())
    _emit({
        "direction": args.direction,
        "pivot": wall.pivot().to_json(),
        "period": wall.period,
        "trace": trace,
    })
    return 0


def cmd_groupoid(args) -> int:
    rep_obj = _load_rep(args)
    ctx = Context(rep_obj)
    arr = ctx.arrangement
    path = _parse_path_dsl(arr, args.path, args.start)
    reduced = groupoid.reduce_rank1(arr, path)
    word, shift = groupoid.normal_form_word(arr, reduced)
    entries = groupoid.mutation_transcript(rep_obj, reduced, ctx)
    _emit({
        "normal_form": [{"wall": str(off), "direction": d} for off, d in word],
        "net_translation": str(shift),
        "transcript": [e.to_json() for e in entries],
    })
    return 0


def _parse_path_dsl(arr, text: str | None, start: str | None):
    """Paths like "x(1,+);t(1);x(2,-)": x crosses the wall at the given
    offset; t translates by an integer lattice vector."""
    if not text:
        raise InputError("--path is required, e.g. \"x(1,+);t(1)\"")
    if arr.dim != 1:
        raise UnsupportedDimensionError("the path DSL is rank-one only")
    family = arr.families[0]
    point = None
    if start is not None:
        point = _parse_vector(start)
        if arr.on_wall(point):
            raise InputError("--start must be off the walls")
    arrows = []
    origin = point
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if len(chunk) < 4 or chunk[1] != "(" or not chunk.endswith(")"):
            raise InputError(f"bad path chunk {chunk!r}")
        kind, body = chunk[0], chunk[2:-1]
        if kind == "x":
            off_text, sign_text = [p.strip() for p in body.split(",")]
            offset = _parse_fraction(off_text)
            if (offset - family.base_offset) % family.offset_step != 0:
                raise InputError(f"{offset} is not a wall of this arrangement")
            direction = {"+": 1, "-": -1}.get(sign_text)
            if direction is None:
                raise InputError(f"bad crossing direction {sign_text!r}")
            if point is None:
                point = (offset - direction * family.offset_step / 2,)
                origin = point
            dst = (offset + direction * family.offset_step / 2,)
            arrows.append(groupoid.Cross(point, dst, (Fraction(direction),)))
            point = dst
        elif kind == "t":
            m = _parse_int_vector(body)
            if point is None:
                raise InputError("a path starting with a translation needs --start")
            arrows.append(groupoid.Translate(m))
            point = tuple(p + x for p, x in zip(point, m))
        else:
            raise InputError(f"unknown path move {kind!r}")
    if origin is None:
        raise InputError("empty path")
    return groupoid.make_path(arr, arrows, start=origin)


def cmd_cy(args) -> int:
    if not args.a or not args.d:
        raise InputError("cy needs --a and --d degree lists")
    model = cy_ci.build(_parse_int_vector(args.a), _parse_int_vector(args.d))
    ctx = model.context()
    payload = model.to_json()
    d_plus, d_minus = cy_ci.crossing_data(model, model.arrangement_offset, ctx)
    payload["d_plus"] = d_plus
    payload["d_minus"] = d_minus
    if args.twist is not None:
        tw = cy_ci.spherical_twist_word(model, args.twist, ctx)
        payload["twist"] = {
            "m": args.twist,
            "delta": str(tw["delta"]),
            "convention": tw["convention"],
            "twist_word_length": tw["length"],
            "down_steps": tw["down"].total,
            "up_steps": tw["up"].total,
        }
    _emit(payload)
    return 0


def cmd_verify(args) -> int:
    results = []
    suites = args.suites.split(",") if args.suites else ["bundled"]
    suites = [s.strip() for s in suites if s.strip()]
    if not suites:
        print("warning: empty suite selection, nothing to verify")
        return 0
    for suite in suites:
        if suite == "bundled":
            results.extend(verify.run_bundled(seed=args.seed))
        elif suite == "input":
            try:
                rep_obj = _load_rep(args)
                results.extend(verify.run_rep("input", rep_obj, seed=args.seed))
            except InputError as exc:
                results.append(verify.CheckResult(
                    name="input-validity", subject=str(args.input),
                    passed=False, detail=str(exc)))
        else:
            raise InputError(f"unknown suite {suite!r} (use bundled,input)")
    for r in results:
        print(r.line())
    failures = [r for r in results if not r.passed]
    print(f"{len(results) - len(failures)}/{len(results)} checks passed")
    return 1 if failures else 0


def cmd_export_svg(args) -> int:
    rep_obj = _load_rep(args)
    ctx = Context(rep_obj)
    delta = _delta(args)
    figures = {"window.svg": svg.window_figure(rep_obj, ctx, delta, box=args.box)}
    if args.delta2 is not None:
        delta2 = _delta(args, "delta2")
        figures["wallcross.svg"] = svg.crossing_figure(rep_obj, ctx, delta, delta2)
        figures["faces.svg"] = svg.faces_figure(rep_obj, ctx, delta, delta2)
    for name, content in figures.items():
        _write_svg(args, name, content)
    return 0


def _write_svg(args, name: str, content: str) -> None:
    out_dir = Path(args.out or ".")
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / name
    path.write_text(content)
    print(f"wrote {path}", file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qswindows",
        description="Exact wall-crossing combinatorics of quasi-symmetric representations",
    )
    parser.add_argument("--input", help="representation JSON file")
    parser.add_argument("--delta", help="rational point p/q[,p/q...]")
    parser.add_argument("--delta2", help="second rational point")
    parser.add_argument("--face", type=_parse_int_vector, help="face key (facet indices)")
    parser.add_argument("--chi", help="dominant weight, comma separated integers")
    parser.add_argument("--steps", type=int, help="number of mutation steps")
    parser.add_argument("--direction", choices=("left", "right"), default="left")
    parser.add_argument("--box", type=int, default=3, help="periods for wall enumeration")
    parser.add_argument("--threads", type=int, default=1,
                        help="accepted for interface stability; all code is pure")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("json", "svg", "both"), default="json")
    parser.add_argument("--out", help="output directory for SVG files")
    parser.add_argument("--path", help="groupoid path DSL, e.g. \"x(1,+);t(1)\"")
    parser.add_argument("--start", help="starting point for groupoid paths")
    parser.add_argument("--suites", help="verify suites: bundled,input")
    parser.add_argument("--a", help="cy: weights a1,..,an")
    parser.add_argument("--d", help="cy: degrees d1,..,dr")
    parser.add_argument("--twist", type=int, help="cy: twist line-bundle degree m")
    parser.add_argument("command", choices=(
        "rep", "arrangement", "window", "wallcross", "faces", "complex",
        "mutate", "groupoid", "cy", "verify", "export-svg"))
    return parser


HANDLERS = {
    "rep": cmd_rep,
    "arrangement": cmd_arrangement,
    "window": cmd_window,
    "wallcross": cmd_wallcross,
    "faces": cmd_faces,
    "complex": cmd_complex,
    "mutate": cmd_mutate,
    "groupoid": cmd_groupoid,
    "cy": cmd_cy,
    "verify": cmd_verify,
    "export-svg": cmd_export_svg,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return HANDLERS[args.command](args)
    except (InputError, OnWallError, NotAdjacentError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedDimensionError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 2
    except QSWindowsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
