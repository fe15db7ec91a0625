"""The groups PGL(3,q) and PGammaL(3,q) acting on PG(2,q).

A collineation is a normalized invertible 3x3 matrix over GF(q) together
with a Frobenius exponent f; it acts on a point by applying x -> x^(p^f)
coordinatewise, then the matrix, then renormalizing.  PGL is the f = 0
subgroup and equals the full group when q is prime.

Canonical forms and stabilizers both ride on one fact: PGL(3,q) is sharply
transitive on ordered frames (quadruples in general position), so the
group elements mapping a given point set onto anything containing the
standard frame are exactly the frame maps of its ordered 4-subsets, times
Frobenius powers.  That yields an exact, dependency-free canonizer and a
complete setwise stabilizer without any generic group machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .plane import Plane

PGL = "pgl"
PGAMMAL = "pgammal"
GROUPS = (PGL, PGAMMAL)


class SingularMatrixError(ValueError):
    """Matrix has zero determinant."""


class DegenerateQuadrupleError(ValueError):
    """Four points containing a collinear triple cannot form a frame."""


class DegenerateSetError(ValueError):
    """Point set without the structure the operation requires."""


class EmptySetError(ValueError):
    """Canonical form of the empty set is undefined."""


@dataclass(frozen=True)
class Collineation:
    """Normalized 3x3 matrix (row-major 9-tuple of codes) + Frobenius exponent."""

    matrix: tuple[int, int, int, int, int, int, int, int, int]
    frob: int = 0


@dataclass(frozen=True)
class PointSetCanonicalForm:
    canon: tuple[int, ...]
    witness: Collineation


@dataclass(frozen=True)
class GroupStructure:
    order: int
    name: str
    element_orders: tuple[int, ...]


IDENTITY = Collineation((1, 0, 0, 0, 1, 0, 0, 0, 1), 0)


def _check_group(group: str):
    if group not in GROUPS:
        raise ValueError(f"group must be one of {GROUPS}, got {group!r}")


def _normalize_matrix(field, m):
    """Scale so the first nonzero entry in row-major order is 1; the unique
    representative of the matrix modulo scalars."""
    for e in m:
        if e:
            if e == 1:
                return tuple(m)
            s = field.inv_list[e]
            mul = field.mul
            return tuple(mul(s, x) for x in m)
    raise SingularMatrixError("zero matrix")


def _det3(field, m):
    mul = field.mul
    sub = field.sub
    a, b, c, d, e, f, g, h, i = m
    return field.add(
        sub(mul(a, sub(mul(e, i), mul(f, h))), mul(b, sub(mul(d, i), mul(f, g)))),
        mul(c, sub(mul(d, h), mul(e, g))),
    )


def _adjugate(field, m):
    """Adjugate of a 3x3 matrix; projectively this is the inverse."""
    mul = field.mul
    sub = field.sub
    a, b, c, d, e, f, g, h, i = m
    return (
        sub(mul(e, i), mul(f, h)),
        sub(mul(c, h), mul(b, i)),
        sub(mul(b, f), mul(c, e)),
        sub(mul(f, g), mul(d, i)),
        sub(mul(a, i), mul(c, g)),
        sub(mul(c, d), mul(a, f)),
        sub(mul(d, h), mul(e, g)),
        sub(mul(b, g), mul(a, h)),
        sub(mul(a, e), mul(b, d)),
    )


def _matmul(field, m1, m2):
    mul = field.mul
    add = field.add
    out = []
    for r in range(3):
        r3 = 3 * r
        a, b, c = m1[r3], m1[r3 + 1], m1[r3 + 2]
        for col in range(3):
            out.append(
                add(add(mul(a, m2[col]), mul(b, m2[3 + col])), mul(c, m2[6 + col]))
            )
    return tuple(out)


def _frob_matrix(field, m, i):
    if i == 0:
        return tuple(m)
    ft = field.frob_tables[i]
    return tuple(ft[e] for e in m)


def collineation(field, matrix, frob: int = 0) -> Collineation:
    """Validated constructor: matrix (rows or flat 9) must be invertible,
    frob must lie in [0, h)."""
    flat = tuple(matrix[r][c] for r in range(3) for c in range(3)) if len(matrix) == 3 else tuple(matrix)
    if len(flat) != 9:
        raise ValueError("matrix must be 3x3")
    if _det3(field, flat) == 0:
        raise SingularMatrixError(f"matrix {flat} is singular")
    if not 0 <= frob < field.h:
        raise ValueError(f"frobenius exponent {frob} outside [0, {field.h})")
    return Collineation(_normalize_matrix(field, flat), frob)


def compose(field, g1: Collineation, g2: Collineation) -> Collineation:
    """g1 after g2: (M1, f1) o (M2, f2) = (M1 . phi^f1(M2), f1 + f2 mod h)."""
    m = _matmul(field, g1.matrix, _frob_matrix(field, g2.matrix, g1.frob))
    return Collineation(_normalize_matrix(field, m), (g1.frob + g2.frob) % field.h)


def inverse(field, g: Collineation) -> Collineation:
    f = (-g.frob) % field.h
    m = _frob_matrix(field, _adjugate(field, g.matrix), f)
    return Collineation(_normalize_matrix(field, m), f)


def element_order(field, g: Collineation, cap: int = 100000) -> int:
    cur = g
    for k in range(1, cap + 1):
        if cur == IDENTITY:
            return k
        cur = compose(field, cur, g)
    raise RuntimeError("element order exceeds cap")


def apply_matrix(plane: Plane, m, point: int) -> int:
    """Image of a point index under a matrix (no Frobenius part)."""
    f = plane.field
    q = f.q
    mt = f.mul_flat
    at = f.add_flat
    x0, x1, x2 = plane.points[point]
    y0 = at[at[mt[m[0] * q + x0] * q + mt[m[1] * q + x1]] * q + mt[m[2] * q + x2]]
    y1 = at[at[mt[m[3] * q + x0] * q + mt[m[4] * q + x1]] * q + mt[m[5] * q + x2]]
    y2 = at[at[mt[m[6] * q + x0] * q + mt[m[7] * q + x1]] * q + mt[m[8] * q + x2]]
    if y0:
        if y0 != 1:
            s = f.inv_list[y0]
            return plane.point_index[(1, mt[s * q + y1], mt[s * q + y2])]
        return plane.point_index[(1, y1, y2)]
    if y1:
        if y1 != 1:
            return plane.point_index[(0, 1, mt[f.inv_list[y1] * q + y2])]
        return plane.point_index[(0, 1, y2)]
    return 0  # (0, 0, 1) is point 0


def apply(plane: Plane, g: Collineation, point: int) -> int:
    """Frobenius, then matrix, then normalization."""
    if g.frob:
        point = plane.frob_point_perms[g.frob][point]
    return apply_matrix(plane, g.matrix, point)


def standard_frame(plane: Plane) -> tuple[int, int, int, int]:
    """Indices of (0,0,1), (0,1,0), (1,0,0), (1,1,1)."""
    q = plane.q
    return (0, 1, q + 1, 2 * q + 2)


def _frame_matrix(plane: Plane, quad):
    """Matrix of the unique PGL element carrying the ordered quadruple onto
    the ordered standard frame, or None if the quadruple is degenerate.

    Everything is computed with adjugates: projective maps do not care
    about the determinant scalars, so no division is ever needed.
    """
    f = plane.field
    pts = plane.points
    p1 = pts[quad[0]]
    p2 = pts[quad[1]]
    p3 = pts[quad[2]]
    p4 = pts[quad[3]]
    # H maps the standard frame onto the quad: columns a*p3 | b*p2 | c*p1
    # with (a, b, c) solving [p3 p2 p1] (a b c)^T = p4.  Return adj(H).
    A = (p3[0], p2[0], p1[0], p3[1], p2[1], p1[1], p3[2], p2[2], p1[2])
    adjA = _adjugate(f, A)
    add = f.add
    mul = f.mul
    if add(add(mul(A[0], adjA[0]), mul(A[1], adjA[3])), mul(A[2], adjA[6])) == 0:
        return None  # first three points collinear
    a = add(add(mul(adjA[0], p4[0]), mul(adjA[1], p4[1])), mul(adjA[2], p4[2]))
    b = add(add(mul(adjA[3], p4[0]), mul(adjA[4], p4[1])), mul(adjA[5], p4[2]))
    c = add(add(mul(adjA[6], p4[0]), mul(adjA[7], p4[1])), mul(adjA[8], p4[2]))
    if a == 0 or b == 0 or c == 0:
        return None  # fourth point on a side of the triangle
    H = (
        mul(a, p3[0]), mul(b, p2[0]), mul(c, p1[0]),
        mul(a, p3[1]), mul(b, p2[1]), mul(c, p1[1]),
        mul(a, p3[2]), mul(b, p2[2]), mul(c, p1[2]),
    )
    return _adjugate(f, H)


def frame_map(plane: Plane, quad) -> Collineation:
    """The unique element of PGL(3,q) carrying the ordered quadruple to the
    ordered standard frame (sharp transitivity of PGL(3,q) on frames)."""
    if len(set(quad)) != 4:
        raise DegenerateQuadrupleError(f"need 4 distinct points, got {quad}")
    m = _frame_matrix(plane, quad)
    if m is None:
        raise DegenerateQuadrupleError(f"quadruple {quad} has 3 collinear points")
    return Collineation(_normalize_matrix(plane.field, m), 0)


def _complete_to_frame(plane: Plane, pts):
    """Deterministically extend <= 3 points in general position to an
    ordered frame, scanning candidate points in index order."""
    chosen = list(pts)
    for cand in range(plane.size):
        if len(chosen) == 4:
            break
        if cand in chosen:
            continue
        ok = True
        for i, j in combinations(range(len(chosen)), 2):
            if plane.collinear(chosen[i], chosen[j], cand):
                ok = False
                break
        if ok:
            chosen.append(cand)
    return chosen


def _small_canonical(plane: Plane, pts) -> PointSetCanonicalForm:
    """Sizes 1..3: the group is transitive on points, point pairs and
    triangles, so fixed prefixes of the standard frame serve as
    conventional representatives."""
    n = len(pts)
    if n == 3 and plane.collinear_triple(pts) is not None:
        raise DegenerateSetError("3 collinear points have no arc-style canonical form")
    quad = _complete_to_frame(plane, pts)
    g = frame_map(plane, quad)
    return PointSetCanonicalForm(standard_frame(plane)[:n], g)


def canonicalize(plane: Plane, points, group: str = PGL) -> PointSetCanonicalForm:
    """Least image of an arc under the configured group.

    Iterates over every ordered 4-subset mapped onto the standard frame,
    for every Frobenius power, and keeps the lexicographically least sorted
    image.  For arcs this equals the least image over the whole group: any
    image is an arc, and an arc whose sorted indices are minimal must
    contain the standard frame (greedy argument on the point ordering).
    """
    _check_group(group)
    pts = sorted(set(points))
    if not pts:
        raise EmptySetError("cannot canonicalize the empty set")
    if len(pts) < 4:
        return _small_canonical(plane, pts)

    field = plane.field
    frob_range = range(field.h) if group == PGAMMAL else range(1)
    frame = standard_frame(plane)
    q = field.q
    mt = field.mul_flat
    at = field.add_flat
    inv = field.inv_list
    pindex = plane.point_index
    coords = plane.points

    best_rest = None
    best_m = None
    best_f = 0
    for f in frob_range:
        if f:
            perm = plane.frob_point_perms[f]
            src = sorted(perm[i] for i in pts)
        else:
            src = pts
        src_coords = [coords[i] for i in src]
        for quad in permutations(range(len(src)), 4):
            m = _frame_matrix(plane, tuple(src[k] for k in quad))
            if m is None:
                continue
            # the quad itself lands exactly on the frame; for arcs every
            # other image index exceeds the frame's, so only they compete
            m0, m1, m2, m3, m4, m5, m6, m7, m8 = m
            in_quad = set(quad)
            rest = []
            for k, (x0, x1, x2) in enumerate(src_coords):
                if k in in_quad:
                    continue
                y0 = at[at[mt[m0 * q + x0] * q + mt[m1 * q + x1]] * q + mt[m2 * q + x2]]
                y1 = at[at[mt[m3 * q + x0] * q + mt[m4 * q + x1]] * q + mt[m5 * q + x2]]
                y2 = at[at[mt[m6 * q + x0] * q + mt[m7 * q + x1]] * q + mt[m8 * q + x2]]
                if y0:
                    if y0 != 1:
                        s = inv[y0]
                        rest.append(pindex[(1, mt[s * q + y1], mt[s * q + y2])])
                    else:
                        rest.append(pindex[(1, y1, y2)])
                elif y1:
                    if y1 != 1:
                        rest.append(pindex[(0, 1, mt[inv[y1] * q + y2])])
                    else:
                        rest.append(pindex[(0, 1, y2)])
                else:
                    rest.append(0)
            rest.sort()
            if best_rest is None or rest < best_rest:
                best_rest = rest
                best_m = m
                best_f = f
    witness = Collineation(_normalize_matrix(field, best_m), best_f)
    return PointSetCanonicalForm(frame + tuple(best_rest), witness)


def stabilizer(plane: Plane, points, group: str = PGL):
    """Full setwise stabilizer of a point set within the configured group.

    Fixes one ordered general-position quadruple Q0 of the set; every
    stabilizing element must carry some ordered 4-subset onto Q0, so
    sweeping frame maps of all ordered 4-subsets (per Frobenius power)
    finds every element exactly once.
    """
    _check_group(group)
    pts = sorted(set(points))
    if len(pts) < 4:
        raise DegenerateSetError("stabilizer needs at least 4 points")
    field = plane.field

    base = None
    for cand in combinations(pts, 4):
        if _frame_matrix(plane, cand) is not None:
            base = cand
            break
    if base is None:
        raise DegenerateSetError("no 4-subset in general position")
    A = _frame_matrix(plane, base)
    adjA = _adjugate(field, A)
    target_mask = 0
    for i in pts:
        target_mask |= 1 << apply_matrix(plane, A, i)

    frob_range = range(field.h) if group == PGAMMAL else range(1)
    elements = []
    for f in frob_range:
        if f:
            perm = plane.frob_point_perms[f]
            src = sorted(perm[i] for i in pts)
        else:
            src = pts
        for quad in permutations(src, 4):
            B = _frame_matrix(plane, quad)
            if B is None:
                continue
            ok = True
            for i in src:
                if not (target_mask >> apply_matrix(plane, B, i)) & 1:
                    ok = False
                    break
            if ok:
                m = _normalize_matrix(field, _matmul(field, adjA, B))
                elements.append(Collineation(m, f))
    orders = tuple(sorted(element_order(field, g) for g in elements))
    return elements, classify_structure(orders)


def classify_structure(element_orders) -> GroupStructure:
    """Name a small group from (order, element-order multiset).  These
    invariants separate every structure that shows up for arc stabilizers
    of the sizes handled here; anything else is reported verbatim."""
    orders = tuple(sorted(element_orders))
    n = len(orders)
    if n == 1:
        name = "trivial"
    elif n == 2:
        name = "Z2"
    elif n == 3:
        name = "Z3"
    elif n == 4:
        name = "Z4" if 4 in orders else "Z2xZ2"
    elif n == 5:
        name = "Z5"
    elif n == 6:
        name = "Z6" if 6 in orders else "S3"
    else:
        counts = {}
        for o in orders:
            counts[o] = counts.get(o, 0) + 1
        sig = ",".join(f"{o}^{c}" for o, c in sorted(counts.items()))
        name = f"other(order={n}, element_orders={sig})"
    return GroupStructure(n, name, orders)


def generating_subset(field, elements) -> list[Collineation]:
    """Greedy small generating set of a closed element list."""
    full = set(elements)
    gens: list[Collineation] = []
    span = {IDENTITY}
    for g in sorted(full, key=lambda e: (e.frob, e.matrix)):
        if g in span:
            continue
        gens.append(g)
        frontier = list(span)
        span.add(g)
        while True:
            new = []
            for a in list(span):
                for b in (g, *gens):
                    c = compose(field, a, b)
                    if c not in span:
                        span.add(c)
                        new.append(c)
            if not new:
                break
        if span == full:
            break
    return gens


def group_order(q: int, group: str = PGL) -> int:
    """|PGL(3,q)| = q^3 (q^3 - 1)(q^2 - 1); |PGammaL(3,q)| = h |PGL(3,q)|."""
    from .gf import factor_prime_power

    _check_group(group)
    _, h = factor_prime_power(q)
    pgl = q**3 * (q**3 - 1) * (q**2 - 1)
    return pgl * h if group == PGAMMAL else pgl
