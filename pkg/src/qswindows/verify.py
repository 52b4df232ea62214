"""Named invariant checks over representations, walls, mutations, and paths.

Each check returns CheckResult rows; the CLI prints one line per row and
exits nonzero on any failure.  The acceptance test suite calls the same
functions, so the two surfaces cannot drift apart.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import catalog, complexes, cy_ci, groupoid, linalg, mutation, windows
from .errors import QSWindowsError
from .rep import QSRep
from .windows import Context


@dataclass(frozen=True)
class CheckResult:
    name: str
    subject: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        tail = f" ({self.detail})" if self.detail and not self.passed else ""
        return f"[{status}] {self.name} :: {self.subject}{tail}"


def _result(name, subject, passed, detail="") -> CheckResult:
    return CheckResult(name=name, subject=subject, passed=bool(passed), detail=detail)


# -- per-representation invariants ------------------------------------------------


def check_rep_invariants(name: str, rep: QSRep, ctx: Context,
                         grid_points=None) -> list[CheckResult]:
    out = []
    datum = rep.root_datum
    # eta symmetry under quasi-symmetry
    sym = True
    for lam in _sample_coweights(rep):
        plus = sum(max(0, datum.pair(b, lam)) for b in rep.weights)
        minus = sum(max(0, -datum.pair(b, lam)) for b in rep.weights)
        if plus != minus:
            sym = False
    out.append(_result("eta-symmetry", name, sym))
    # dominant slice identity and Weyl invariance re-run (raises on failure)
    try:
        from .rep import build_nabla
        build_nabla(datum, rep.weights, rep.sigma)
        out.append(_result("window-polytope-cross-check", name, True))
    except QSWindowsError as exc:
        out.append(_result("window-polytope-cross-check", name, False, str(exc)))
    # on-wall iff boundary lattice points, on a grid
    arr = ctx.arrangement
    pts = grid_points if grid_points is not None else default_grid(arr.dim)
    ok = True
    bad = ""
    for coords in pts:
        ambient = arr.to_ambient(coords)
        on_wall = arr.on_wall(coords)
        boundary = rep.nabla.translate(ambient).boundary_lattice_points()
        if on_wall != bool(boundary):
            ok = False
            bad = f"delta={coords}"
            break
    out.append(_result("wall-iff-boundary-points", name, ok, bad))
    # windows are constant on chambers and shift along the invariant lattice
    ok = True
    sample = _off_wall_point(arr)
    win = ctx.window(arr.to_ambient(sample))
    nudged = tuple(c + Fraction(1, 64) for c in sample)
    if arr.on_wall(nudged) or arr.chamber_of(nudged) != arr.chamber_of(sample):
        nudged = sample
    if ctx.window(arr.to_ambient(nudged)).chars != win.chars:
        ok = False
    shift_coords = tuple(1 for _ in range(arr.dim))
    shifted = ctx.window(arr.to_ambient(linalg.add(sample, shift_coords)))
    m_ambient = tuple(int(x) for x in arr.to_ambient(shift_coords))
    expected = tuple(sorted(tuple(linalg.add(c, m_ambient)) for c in win.chars))
    if shifted.chars != expected:
        ok = False
    out.append(_result("window-chamber-and-shift", name, ok))
    return out


def default_grid(dim: int, periods: int = 3, step=Fraction(1, 4), seed: int = 0):
    """Full grid in low dimension, a seeded sample of grid points otherwise."""
    import itertools
    ticks = [k * step for k in range(int(periods / step) + 1)]
    if dim == 1:
        return [(t,) for t in ticks]
    rng = random.Random(seed)
    pts = [tuple(rng.choice(ticks) for _ in range(dim)) for _ in range(40)]
    return sorted(set(pts))


def _sample_coweights(rep: QSRep):
    out = {tuple(1 if j == i else 0 for j in range(rep.rank)) for i in range(rep.rank)}
    for b in rep.weights:
        if not linalg.is_zero(b):
            out.add(linalg.primitive(b))
    return sorted(out)


def _off_wall_point(arr):
    for denom in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29):
        coords = tuple(Fraction(1, denom ** (j + 1)) for j in range(arr.dim))
        if not arr.on_wall(coords):
            return coords
    raise QSWindowsError("could not find an off-wall sample point")


# -- wall-crossing invariants -----------------------------------------------------


def check_wall_crossing(name: str, rep: QSRep, ctx: Context, delta, delta_prime) -> list[CheckResult]:
    out = []
    subject = f"{name} {delta}->{delta_prime}"
    cross = windows.wall_crossing(rep, delta, delta_prime, ctx)
    back = windows.wall_crossing(rep, delta_prime, delta, ctx)
    forward = windows.mu_map(rep, cross)
    backward = windows.mu_map(rep, back)
    out.append(_result("mu-involution", subject,
                       all(backward[img] == chi for chi, img in forward.items())))
    out.append(_result("window-sizes-match", subject,
                       len(cross.window.chars) == len(cross.window_prime.chars)))
    partitioned = set(cross.common)
    total = 0
    for chars in cross.chars_by_face.values():
        partitioned |= set(chars)
        total += len(chars)
    out.append(_result("window-partition", subject,
                       partitioned == set(cross.window.chars)
                       and total + len(cross.common) == len(cross.window.chars)))
    # dagger pairing between the two orientations
    dag_ok = True
    mu_face_ok = True
    beta_ok = True
    datum = rep.root_datum
    for key, fd in cross.faces.items():
        if not fd.dominant:
            dag_ok = False
            continue
        dag = windows.dagger(rep, fd, ctx)
        if dag.key not in back.faces:
            dag_ok = False
            continue
        image_chars = sorted(forward[chi] for chi in cross.chars_by_face[key])
        if image_chars != sorted(back.chars_by_face[dag.key]):
            mu_face_ok = False
        expected = tuple(linalg.neg(datum.apply(datum.w0, fd.beta_plus)))
        if dag.beta_plus != expected:
            beta_ok = False
    out.append(_result("wall-faces-dominant", subject,
                       all(fd.dominant for fd in cross.faces.values())))
    out.append(_result("dagger-pairing", subject, dag_ok and len(cross.faces) == len(back.faces)))
    out.append(_result("mu-respects-dagger-faces", subject, mu_face_ok))
    out.append(_result("beta-dagger-duality", subject, beta_ok))
    out.append(_result("face-lattice-point-symmetry", subject,
                       _face_lattice_point_check(rep, ctx, cross)))
    if datum.is_torus:
        out.append(_result("toric-single-wall-face", subject, len(cross.faces) == 1))
        (key,) = list(cross.faces)
        fd = cross.faces[key]
        out.append(_result("toric-outgoing-equals-face-chars", subject,
                           set(cross.chars_by_face[key]) == set(cross.outgoing)))
        common = set(cross.common)
        wedge_ok = True
        for chi in cross.outgoing:
            for beta in complexes.wedge_star(rep, fd):
                if tuple(linalg.add(chi, beta)) not in common:
                    wedge_ok = False
        out.append(_result("toric-wedge-sums-stay-common", subject, wedge_ok))
    orient_ok = True
    direction = linalg.sub(cross.delta_prime, cross.delta)
    for fd in cross.faces.values():
        for lam in fd.inward_normals:
            if linalg.dot(direction, lam) <= 0:
                orient_ok = False
    out.append(_result("crossing-orientation", subject, orient_ok))
    return out


def _face_lattice_point_check(rep: QSRep, ctx: Context, cross) -> bool:
    """Interior rho-shifted dominant points of each wall face, and their
    duals through the face center, stay inside the near half-zonotope."""
    datum = rep.root_datum
    half = ctx.half_sigma_at(cross.delta0)
    near = ctx.half_sigma_at(cross.delta)
    rho = datum.rho
    for fd in cross.faces.values():
        face_center = linalg.sub(fd.delta0, linalg.scale(Fraction(1, 2), fd.beta_plus))
        for chi in _face_interior_rho_points(rep, half, fd):
            point = linalg.add(chi, rho)
            dual = linalg.sub(linalg.scale(2, face_center), point)
            if not near.contains(point) or not near.contains(dual):
                return False
    return True


def _face_interior_rho_points(rep: QSRep, half, fd):
    lo, hi = half.bounding_box()
    import itertools
    rho = rep.root_datum.rho
    for chi in itertools.product(*(range(a - 1, b + 2) for a, b in zip(lo, hi))):
        point = linalg.add(chi, rho)
        if not half.contains(point):
            continue
        if half.tight_indices(point) != fd.face.facet_indices:
            continue
        if not rep.root_datum.is_dominant(chi):
            continue
        yield chi


# -- complexes ---------------------------------------------------------------------


def check_complexes(name: str, rep: QSRep, ctx: Context, delta, delta_prime) -> list[CheckResult]:
    out = []
    subject = f"{name} {delta}->{delta_prime}"
    cross = windows.wall_crossing(rep, delta, delta_prime, ctx)
    datum = rep.root_datum
    top_len = datum.length(datum.w0)
    endpoints = True
    support = True
    koszul = True
    euler = True
    l_in_common = True
    for key, fd in cross.faces.items():
        for chi in cross.chars_by_face[key]:
            ct = complexes.complex_terms(rep, fd, chi)
            top = fd.d_plus + top_len
            image = windows.mu_of_crossing(rep, cross, chi)
            if ct.terms.get(0) != Counter({tuple(chi): 1}):
                endpoints = False
            if ct.terms.get(top) != Counter({image: 1}):
                endpoints = False
            if any(d < 0 or d > top for d in ct.terms):
                support = False
            if datum.is_torus:
                for m in range(fd.d_plus + 1):
                    expected = complexes.koszul_degree_term(rep, fd, chi, m)
                    if ct.terms.get(m, Counter()) != expected:
                        koszul = False
            if not _euler_consistent(rep, fd, chi, ct):
                euler = False
        l_set, n_set = complexes.summand_sets(rep, cross, fd, ctx)
        if datum.is_torus and not set(l_set) <= set(cross.common):
            l_in_common = False
        if set(n_set) != set(cross.window.chars) - set(cross.chars_by_face[key]):
            l_in_common = False
    out.append(_result("complex-endpoint-terms", subject, endpoints))
    out.append(_result("complex-degree-support", subject, support))
    if datum.is_torus:
        out.append(_result("toric-koszul-multiplicities", subject, koszul))
        out.append(_result("toric-l-summands-in-common", subject, l_in_common))
    out.append(_result("complex-euler-telescope", subject, euler))
    return out


def _euler_consistent(rep, fd, chi, ct) -> bool:
    """Alternating sum of the stored terms equals the independently signed
    subset-sum character."""
    import itertools
    from .root_data import SINGULAR
    datum = rep.root_datum
    expected: Counter = Counter()
    for m in range(fd.d_plus + 1):
        for combo in itertools.combinations(fd.plus_indices, m):
            shifted = tuple(chi)
            for i in combo:
                shifted = tuple(linalg.add(shifted, rep.weights[i]))
            res = datum.dominant_representative(shifted)
            if res is SINGULAR:
                continue
            sign = -1 if (m + res.length) % 2 else 1
            expected[res.weight] += sign
    expected = {w: c for w, c in expected.items() if c}
    return expected == ct.euler_class()


# -- mutations ----------------------------------------------------------------------


def check_mutation(name: str, rep: QSRep, ctx: Context, delta, delta_prime) -> list[CheckResult]:
    out = []
    subject = f"{name} {delta}->{delta_prime}"
    if not rep.root_datum.is_torus:
        counts = mutation.exchange_count(rep, delta, delta_prime, ctx=ctx)
        out.append(_result("exchange-count-positive", subject,
                           all(e.count >= 1 for e in counts.values())))
        return out
    wall = mutation.toric_wall(rep, delta, delta_prime, ctx)
    start = mutation.module_of_window(rep, delta, ctx)
    far = mutation.module_of_window(rep, delta_prime, ctx)
    d = wall.face.d_plus
    seen = [start]
    spec = start
    telescope_ok = True
    ranks_ok = True
    faces = wall.faces
    for _ in range(wall.period):
        prev = spec
        spec = wall.mutate(spec, "left")
        seen.append(spec)
        telescope_ok = telescope_ok and _step_telescopes(rep, faces, prev, spec, wall)
    out.append(_result("mutation-reaches-far-window", subject, seen[d - 1] == far))
    out.append(_result("mutation-periodicity", subject,
                       seen[-1] == start
                       and len({s.atoms for s in seen[:-1]}) == wall.period))
    out.append(_result("mutation-right-inverts-left", subject,
                       wall.mutate(seen[1], "right") == start))
    for key, fd in faces.items():
        for i in range(fd.d_plus):
            kr = mutation.atom_rank(mutation.Ker(key, (0,) * rep.rank, i)
                                    if i not in (0, fd.d_plus - 1)
                                    else mutation.Cov((0,) * rep.rank), rep, faces)
            if i in (0, fd.d_plus - 1):
                expected = 1
            else:
                expected = mutation.kernel_rank_formula(fd.d_plus, i)
            if kr != expected:
                ranks_ok = False
    out.append(_result("kernel-rank-binomials", subject, ranks_ok))
    out.append(_result("virtual-class-telescoping", subject, telescope_ok))
    counts = mutation.exchange_count(rep, delta, delta_prime, ctx=ctx)
    out.append(_result("exchange-count-positive", subject,
                       all(e.count >= 1 for e in counts.values())))
    out.append(_result("exchange-count-value", subject,
                       all(e.count == d - 1 for e in counts.values())))
    return out


def _step_telescopes(rep, faces, prev: mutation.ModuleSpec, cur: mutation.ModuleSpec,
                     wall) -> bool:
    """Across one left step, [new atom] + [old atom] must equal the class of
    the Koszul term between them whenever both kernels are stored atoms; at
    the canonicalized endpoints the rank identity is asserted instead."""
    olds = [(a, m) for a, m in prev.atoms]
    news = [(a, m) for a, m in cur.atoms]
    pivot = wall.pivot_chars
    moved_old = [a for a, m in olds for _ in range(m)
                 if not (isinstance(a, mutation.Cov) and a.chi in pivot)]
    moved_new = [a for a, m in news for _ in range(m)
                 if not (isinstance(a, mutation.Cov) and a.chi in pivot)]
    if len(moved_old) != len(moved_new):
        return False
    for old in moved_old:
        new = wall._advance(old)
        pos_face, chi, i = _cycle_position(wall, old)
        fd = faces[pos_face]
        term = complexes.koszul_degree_term(rep, fd, chi, i + 1)
        lhs_rank = mutation.atom_rank(new, rep, faces) + mutation.atom_rank(old, rep, faces)
        if lhs_rank != sum(term.values()):
            return False
        if isinstance(new, mutation.Ker):
            lhs = Counter(mutation.atom_class(new, rep, faces))
            for w, c in mutation.atom_class(old, rep, faces).items():
                lhs[w] += c
            lhs = {w: c for w, c in lhs.items() if c}
            if lhs != dict(term):
                return False
    return True


def _cycle_position(wall, atom):
    """(face key, base character, kernel index) of an atom on the wall cycle."""
    if isinstance(atom, mutation.Ker):
        return atom.face_key, atom.chi, atom.step
    chi = atom.chi
    if chi in wall.out_forward:
        return wall.face.key, chi, 0
    return wall.dual_face.key, chi, 0


# -- groupoid -----------------------------------------------------------------------


def check_groupoid(name: str, rep: QSRep, ctx: Context, seed: int = 0,
                   n_paths: int = 50) -> list[CheckResult]:
    out = []
    arr = ctx.arrangement
    rng = random.Random(seed)
    agree = True
    reduction_ok = True
    transcript_ok = True
    minimal_words = {}
    for _ in range(n_paths):
        path = _random_positive_path(arr, rng)
        if path is None:
            continue
        try:
            minimal = groupoid.is_minimal(arr, path)
        except QSWindowsError:
            agree = False
            continue
        if arr.dim == 1:
            reduced = groupoid.reduce_rank1(arr, path)
            again = groupoid.reduce_rank1(arr, reduced)
            if [repr(a) for a in again.arrows] != [repr(a) for a in reduced.arrows]:
                reduction_ok = False
            if minimal:
                key = (arr.chamber_of(path.start).sign_vector,
                       arr.chamber_of(path.end).sign_vector)
                word = groupoid.normal_form_word(arr, path)
                if key in minimal_words and minimal_words[key] != word:
                    reduction_ok = False
                minimal_words[key] = word
        try:
            groupoid.transcript_window_map(rep, path, ctx)
        except QSWindowsError:
            transcript_ok = False
    out.append(_result("minimality-criteria-agree", name, agree))
    if arr.dim == 1:
        out.append(_result("rank1-reduction-normal-form", name, reduction_ok))
    out.append(_result("transcript-window-bijections", name, transcript_ok))
    return out


def _random_positive_path(arr, rng: random.Random, max_arrows: int = 3):
    """Arrows along random generic directions; labels equal the hop
    direction, so positivity holds by construction."""
    point = None
    for denom in (2, 4, 8, 16):
        cand = tuple(Fraction(rng.randrange(-4 * denom, 4 * denom), denom)
                     for _ in range(arr.dim))
        if not arr.on_wall(cand):
            point = cand
            break
    if point is None:
        return None
    arrows = []
    for _ in range(rng.randint(1, max_arrows)):
        for _ in range(20):
            direction = tuple(Fraction(rng.randint(-2, 2)) for _ in range(arr.dim))
            if linalg.is_zero(direction):
                continue
            if not arr.is_generic_ell(arr.to_ambient(direction)):
                continue
            t = Fraction(rng.randint(1, 8), 4)
            target = linalg.add(point, linalg.scale(t, direction))
            if arr.on_wall(target) or arr.chamber_of(target) == arr.chamber_of(point):
                continue
            try:
                groupoid.split_into_hops(arr, groupoid.Cross(point, target, direction))
            except QSWindowsError:
                continue
            arrows.append(groupoid.Cross(point, target, direction))
            point = target
            break
        else:
            break
    if not arrows:
        return None
    return groupoid.make_path(arr, arrows)


# -- CY models ----------------------------------------------------------------------


def check_cy_models() -> list[CheckResult]:
    out = []
    expected = {
        "quintic": {"arrangement": "Z", "window_size": 6, "crossing": (6, 2), "twist_len": 6},
        "cy-3-3": {"arrangement": "Z+1/2", "window_size": 7, "crossing": (7, 3), "twist_len": 8},
    }
    for name, model in catalog.bundled_cy_models().items():
        want = expected[name]
        ctx = model.context()
        info = model.to_json()
        wall = model.arrangement_offset
        ok = (info["arrangement"] == want["arrangement"]
              and info["window_size"] == want["window_size"]
              and cy_ci.crossing_data(model, wall, ctx) == want["crossing"])
        tw = cy_ci.spherical_twist_word(model, 0, ctx)
        ok = ok and tw["length"] == want["twist_len"]
        ok = ok and tw["length"] == model.n + model.r
        delta = tw["delta"]
        window = ctx.window((delta,))
        ok = ok and len(window.chars) == model.alpha + 1
        loop = _cy_loop_map(model, ctx, delta)
        ok = ok and loop
        out.append(_result("cy-model-facts", name, ok))
    return out


def _cy_loop_map(model, ctx, delta) -> bool:
    arr = ctx.arrangement
    start = arr.to_coords((delta,))
    down = groupoid.Cross(start, (start[0] - 1,), (Fraction(-1),))
    up = groupoid.Cross((start[0] - 1,), start, (Fraction(1),))
    path = groupoid.make_path(arr, [down, up])
    mapping = groupoid.transcript_window_map(model.g1_rep, path, ctx)
    return all(src == dst for src, dst in mapping.items())


# -- top level ----------------------------------------------------------------------


def run_bundled(seed: int = 0, periods: int = 2) -> list[CheckResult]:
    results = []
    for name, rep_obj in catalog.bundled_reps().items():
        ctx = Context(rep_obj)
        results.extend(check_rep_invariants(name, rep_obj, ctx))
        pairs = catalog.adjacent_pairs(ctx, periods=periods, per_wall=2, max_pairs=6)
        for delta, delta_prime in pairs:
            results.extend(check_wall_crossing(name, rep_obj, ctx, delta, delta_prime))
            results.extend(check_complexes(name, rep_obj, ctx, delta, delta_prime))
            results.extend(check_mutation(name, rep_obj, ctx, delta, delta_prime))
        results.extend(check_groupoid(name, rep_obj, ctx, seed=seed))
    results.extend(check_cy_models())
    return results


def run_rep(name: str, rep_obj: QSRep, seed: int = 0, periods: int = 2,
            max_pairs: int = 6) -> list[CheckResult]:
    ctx = Context(rep_obj)
    results = check_rep_invariants(name, rep_obj, ctx)
    pairs = catalog.adjacent_pairs(ctx, periods=periods, per_wall=2, max_pairs=max_pairs)
    for delta, delta_prime in pairs:
        results.extend(check_wall_crossing(name, rep_obj, ctx, delta, delta_prime))
        results.extend(check_complexes(name, rep_obj, ctx, delta, delta_prime))
        results.extend(check_mutation(name, rep_obj, ctx, delta, delta_prime))
    results.extend(check_groupoid(name, rep_obj, ctx, seed=seed, n_paths=20))
    return results
