"""The chamber groupoid: labeled crossing arrows, translation arrows,
positivity and minimality of paths, the five rewriting relations, rank-one
normal forms, and mutation transcripts.

All points and labels live in invariant coordinates; chamber identity is the
sign vector from the arrangement.  Word reduction is implemented only in
rank one, where the groupoid is free on single-wall crossings and
translations commute to the end of the word.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .arrangement import Arrangement
from .errors import InputError, UnsupportedDimensionError
from .linalg import Vec
from .rep import QSRep
from .windows import Context, wall_crossing, mu_of_crossing


@dataclass(frozen=True)
class Cross:
    src: Vec
    dst: Vec
    label: Vec

    def __repr__(self):
        return f"Cross({self.src}->{self.dst}, l={self.label})"


@dataclass(frozen=True)
class Translate:
    m: tuple[int, ...]

    def __repr__(self):
        return f"Translate({self.m})"


Arrow = Cross | Translate


@dataclass(frozen=True)
class Path:
    arrows: tuple[Arrow, ...]
    start: Vec

    @property
    def end(self) -> Vec:
        point = self.start
        for a in self.arrows:
            point = a.dst if isinstance(a, Cross) else linalg.add(point, linalg.vec(a.m))
        return point


def make_path(arr: Arrangement, arrows, start=None) -> Path:
    """Validate composability at every junction and label genericity."""
    arrows = tuple(arrows)
    if start is None:
        if not arrows or not isinstance(arrows[0], Cross):
            raise InputError("a path starting with a translation needs an explicit start")
        start = arrows[0].src
    start = linalg.vec(start)
    point = start
    for a in arrows:
        if isinstance(a, Cross):
            if arr.chamber_of(point) != arr.chamber_of(a.src):
                raise InputError(f"arrow {a} does not start in the current chamber")
            if not arr.is_generic_ell(arr.to_ambient(a.label)):
                raise InputError(f"arrow label {a.label} is not generic")
            arr.chamber_of(a.dst)
            point = a.dst
        else:
            point = linalg.add(point, linalg.vec(a.m))
            arr.chamber_of(point)
    return Path(arrows=arrows, start=start)


def arrow_is_positive(arr: Arrangement, a: Cross) -> bool:
    """Distinct chambers and the label oriented like dst - src on every
    separating wall."""
    if arr.chamber_of(a.src) == arr.chamber_of(a.dst):
        return False
    direction = linalg.sub(a.dst, a.src)
    for w in arr.separating_walls(a.src, a.dst):
        ell_sign = arr.orientation(a.label, w.family_index)
        move_sign = arr.orientation(direction, w.family_index)
        if ell_sign == 0 or ell_sign != move_sign:
            return False
    return True


def is_positive(arr: Arrangement, path: Path) -> bool:
    if not path.arrows:
        return False
    return all(isinstance(a, Cross) and arrow_is_positive(arr, a) for a in path.arrows)


def is_minimal(arr: Arrangement, path: Path) -> bool:
    """Evaluate the four minimality criteria and insist they agree.

    (1) distance additivity, (2) the separating set of the endpoints is the
    disjoint union of the per-arrow sets, (3) per-arrow sets are pairwise
    disjoint, (4) every label is oriented like the total displacement on its
    own separating walls.
    """
    if not is_positive(arr, path):
        raise InputError("minimality is defined for positive paths only")
    crossings = [arr.separating_walls(a.src, a.dst) for a in path.arrows]
    total = arr.separating_walls(path.arrows[0].src, path.arrows[-1].dst)
    additive = len(total) == sum(len(c) for c in crossings)
    union = set().union(*map(set, crossings)) if crossings else set()
    disjoint_union = (set(total) == union
                      and sum(len(c) for c in crossings) == len(union))
    pairwise = all(
        not (set(crossings[i]) & set(crossings[j]))
        for i in range(len(crossings)) for j in range(i + 1, len(crossings))
    )
    displacement = linalg.sub(path.arrows[-1].dst, path.arrows[0].src)
    oriented = True
    for a, crossed in zip(path.arrows, crossings):
        for w in crossed:
            shift_sign = arr.orientation(displacement, w.family_index)
            ell_sign = arr.orientation(a.label, w.family_index)
            if shift_sign == 0 or ell_sign != shift_sign:
                oriented = False
    votes = {additive, disjoint_union, pairwise, oriented}
    if len(votes) != 1:
        raise InputError(
            f"minimality criteria disagree: {additive}, {disjoint_union}, {pairwise}, {oriented}")
    return additive


# -- rewriting relations -----------------------------------------------------


def apply_relation(arr: Arrangement, path: Path, rule: str, position: int,
                   label=None, via=None, m_split=None) -> Path:
    """Rewrite the path at the given position per one of the five relations.

    R1 drops a same-chamber arrow (or, with ``label``, inserts one);
    R2 merges two consecutive arrows with a common label (or splits one at a
    ``via`` point); R3 relabels an arrow with an orientation-equivalent
    ``label``; R4 commutes a crossing with a translation (self-inverse);
    R5 merges two consecutive translations (or splits one at ``m_split``).
    """
    arrows = list(path.arrows)
    rule = rule.upper()
    if rule == "R1":
        if label is not None:
            chamber_point = path.start if position == 0 else _point_after(path, position - 1)
            arrows.insert(position, Cross(chamber_point, chamber_point, linalg.vec(label)))
        else:
            a = _expect_cross(arrows, position)
            if arr.chamber_of(a.src) != arr.chamber_of(a.dst):
                raise InputError("R1 applies to same-chamber arrows only")
            del arrows[position]
    elif rule == "R2":
        if via is not None:
            a = _expect_cross(arrows, position)
            via = linalg.vec(via)
            arr.chamber_of(via)
            arrows[position:position + 1] = [Cross(a.src, via, a.label), Cross(via, a.dst, a.label)]
        else:
            a, b = _expect_cross(arrows, position), _expect_cross(arrows, position + 1)
            if a.label != b.label:
                raise InputError("R2 needs a common label")
            arrows[position:position + 2] = [Cross(a.src, b.dst, a.label)]
    elif rule == "R3":
        a = _expect_cross(arrows, position)
        if label is None:
            raise InputError("R3 needs the replacement label")
        new = linalg.vec(label)
        for w in arr.separating_walls(a.src, a.dst):
            if arr.orientation(a.label, w.family_index) != arr.orientation(new, w.family_index):
                raise InputError("R3 labels must agree on every separating wall")
        arrows[position] = Cross(a.src, a.dst, new)
    elif rule == "R4":
        first, second = arrows[position], arrows[position + 1]
        if isinstance(first, Cross) and isinstance(second, Translate):
            shift = linalg.vec(second.m)
            arrows[position:position + 2] = [
                Translate(second.m),
                Cross(linalg.add(first.src, shift), linalg.add(first.dst, shift), first.label),
            ]
        elif isinstance(first, Translate) and isinstance(second, Cross):
            shift = linalg.vec(first.m)
            arrows[position:position + 2] = [
                Cross(linalg.sub(second.src, shift), linalg.sub(second.dst, shift), second.label),
                Translate(first.m),
            ]
        else:
            raise InputError("R4 needs a crossing next to a translation")
    elif rule == "R5":
        if m_split is not None:
            t = _expect_translate(arrows, position)
            rest = tuple(a - b for a, b in zip(t.m, m_split))
            arrows[position:position + 1] = [Translate(tuple(m_split)), Translate(rest)]
        else:
            t1, t2 = _expect_translate(arrows, position), _expect_translate(arrows, position + 1)
            merged = Translate(tuple(a + b for a, b in zip(t1.m, t2.m)))
            arrows[position:position + 2] = [merged] if any(merged.m) else []
    else:
        raise InputError(f"unknown relation {rule!r}")
    return make_path(arr, arrows, start=path.start)


def _point_after(path: Path, position: int) -> Vec:
    point = path.start
    for a in path.arrows[:position + 1]:
        point = a.dst if isinstance(a, Cross) else linalg.add(point, linalg.vec(a.m))
    return point


def _expect_cross(arrows, position) -> Cross:
    if position >= len(arrows) or not isinstance(arrows[position], Cross):
        raise InputError(f"no crossing arrow at position {position}")
    return arrows[position]


def _expect_translate(arrows, position) -> Translate:
    if position >= len(arrows) or not isinstance(arrows[position], Translate):
        raise InputError(f"no translation arrow at position {position}")
    return arrows[position]


# -- rank-one normal form ------------------------------------------------------


def _letters(arr: Arrangement, path: Path) -> tuple[list[tuple[Fraction, int]], Fraction]:
    """Crossing letters (wall position, direction) with translations pushed
    to the end; only valid in rank one."""
    if arr.dim != 1:
        raise UnsupportedDimensionError("word reduction is implemented in rank one only")
    letters: list[tuple[Fraction, int]] = []
    shift = Fraction(0)
    for a in path.arrows:
        if isinstance(a, Translate):
            shift += Fraction(a.m[0])
            continue
        src, dst = a.src[0], a.dst[0]
        direction = 1 if dst > src else -1
        walls = arr.separating_walls(a.src, a.dst)
        offsets = sorted((w.offset for w in walls), reverse=direction < 0)
        for off in offsets:
            letters.append((off - shift, direction))
    return letters, shift


def _freely_reduce(letters: list[tuple[Fraction, int]]) -> list[tuple[Fraction, int]]:
    out: list[tuple[Fraction, int]] = []
    for letter in letters:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return out


def reduce_rank1(arr: Arrangement, path: Path) -> Path:
    """Unique normal form: freely reduced adjacent crossings, then one
    translation.  Rebuilt samples sit at chamber midpoints (rank-one wall
    normals are always the covector (1,), so values are coordinates)."""
    letters, shift = _letters(arr, path)
    letters = _freely_reduce(letters)
    arrows: list[Arrow] = []
    point = path.start
    f = arr.families[0]
    for off, direction in letters:
        dst = (off + direction * f.offset_step / 2,)
        arrows.append(Cross(point, dst, (Fraction(direction),)))
        point = dst
    if shift != 0:
        arrows.append(Translate((int(shift),)))
    return make_path(arr, arrows, start=path.start)


def normal_form_word(arr: Arrangement, path: Path):
    """(freely reduced letters, net translation) identifying the morphism."""
    letters, shift = _letters(arr, path)
    return tuple(_freely_reduce(letters)), shift


def paths_equivalent_rank1(arr: Arrangement, p: Path, q: Path) -> bool:
    if arr.chamber_of(p.start) != arr.chamber_of(q.start):
        return False
    return normal_form_word(arr, p) == normal_form_word(arr, q)


# -- transcripts ----------------------------------------------------------------


@dataclass(frozen=True)
class TranscriptEntry:
    kind: str
    src: Vec | None = None
    dst: Vec | None = None
    pivot_chars: tuple | None = None
    step_count: int | None = None
    per_face_counts: dict | None = None
    shift: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        if self.kind == "shift":
            return {"kind": "shift", "m": list(self.shift)}
        return {
            "kind": "cross",
            "src": [str(x) for x in self.src],
            "dst": [str(x) for x in self.dst],
            "pivot_size": len(self.pivot_chars),
            "step_count": self.step_count,
            "per_face_counts": {str(list(k)): v for k, v in sorted(self.per_face_counts.items())},
        }


def split_into_hops(arr: Arrangement, a: Cross) -> list[Cross]:
    """Cut a crossing arrow into adjacent hops along its segment."""
    walls = arr.separating_walls(a.src, a.dst)
    if not walls:
        return []
    direction = linalg.sub(a.dst, a.src)
    params = []
    for w in walls:
        f = arr.families[w.family_index]
        denom = f.value(direction)
        t = (w.offset - f.value(a.src)) / denom
        params.append((t, w))
    params.sort(key=lambda tw: tw[0])
    times = [t for t, _ in params]
    if len(set(times)) != len(times):
        raise InputError(
            "segment passes through a wall intersection; perturb the endpoints")
    cut_points = [a.src]
    for i in range(len(times) - 1):
        mid = (times[i] + times[i + 1]) / 2
        cut_points.append(linalg.add(a.src, linalg.scale(mid, direction)))
    cut_points.append(a.dst)
    return [Cross(cut_points[i], cut_points[i + 1], a.label) for i in range(len(times))]


def mutation_transcript(rep: QSRep, path: Path, ctx: Context | None = None) -> list[TranscriptEntry]:
    """One entry per adjacent crossing (its pivot window and step count) and
    one per translation (the window shift)."""
    ctx = ctx or Context(rep)
    arr = ctx.arrangement
    entries = []
    point = path.start
    for a in path.arrows:
        if isinstance(a, Translate):
            entries.append(TranscriptEntry(kind="shift", shift=tuple(a.m)))
            point = linalg.add(point, linalg.vec(a.m))
            continue
        if not arrow_is_positive(arr, a):
            raise InputError("transcripts are defined for positive crossings")
        for hop in split_into_hops(arr, a):
            crossing = wall_crossing(rep, arr.to_ambient(hop.src), arr.to_ambient(hop.dst), ctx)
            counts = {
                key: fd.d_plus + rep.root_datum.length(rep.root_datum.w0) - 1
                for key, fd in crossing.faces.items()
            }
            toric_steps = None
            if rep.root_datum.is_torus:
                (key,) = crossing.faces
                toric_steps = crossing.faces[key].d_plus - 1
            entries.append(TranscriptEntry(
                kind="cross", src=hop.src, dst=hop.dst,
                pivot_chars=crossing.common, step_count=toric_steps,
                per_face_counts=counts,
            ))
        point = a.dst
    return entries


def transcript_window_map(rep: QSRep, path: Path, ctx: Context | None = None) -> dict:
    """Compose the per-hop bijections and shifts from C_start to C_end."""
    ctx = ctx or Context(rep)
    arr = ctx.arrangement
    mapping = {chi: chi for chi in ctx.window(arr.to_ambient(path.start)).chars}
    point = path.start
    for a in path.arrows:
        if isinstance(a, Translate):
            shift = arr.to_ambient(a.m)
            shift = tuple(int(x) for x in shift)
            mapping = {src: tuple(linalg.add(dst, shift)) for src, dst in mapping.items()}
            point = linalg.add(point, linalg.vec(a.m))
            continue
        for hop in split_into_hops(arr, a):
            crossing = wall_crossing(rep, arr.to_ambient(hop.src), arr.to_ambient(hop.dst), ctx)
            outgoing = set(crossing.outgoing)
            step = {}
            for chi in crossing.window.chars:
                step[chi] = mu_of_crossing(rep, crossing, chi) if chi in outgoing else chi
            mapping = {src: step[dst] for src, dst in mapping.items()}
        point = a.dst
    end_window = set(ctx.window(arr.to_ambient(path.end)).chars)
    image = set(mapping.values())
    if image != end_window or len(image) != len(mapping):
        raise InputError("transcript composition failed to match the target window")
    return mapping
