"""Exact integer/rational primitives and geometric predicates.

Points and vectors are plain tuples of ``int`` or ``fractions.Fraction``;
nothing here ever touches a float.  All predicates are pure functions of
their inputs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import DegenerateGeometry, UnboundedRegion

# ---------------------------------------------------------------------------
# vector helpers


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vneg(u):
    return tuple(-a for a in u)


def vscale(k, u):
    return tuple(k * a for a in u)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


def cross3(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det2(u, v):
    return cross2(u, v)


def det3(u, v, w):
    """Exact determinant of the 3x3 matrix with columns u, v, w."""
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - v[0] * (u[1] * w[2] - u[2] * w[1])
        + w[0] * (u[1] * v[2] - u[2] * v[1])
    )


def is_zero(v):
    return all(a == 0 for a in v)


def primitive(v):
    """v divided by the gcd of its components; direction is preserved."""
    g = gcd(*(int(a) for a in v)) if all(a == int(a) for a in v) else 0
    if g == 0:
        if is_zero(v):
            raise DegenerateGeometry("primitive() of the zero vector")
        # rational input: clear denominators first
        den = 1
        for a in v:
            den = den * a.denominator // gcd(den, a.denominator)
        return primitive(tuple(int(a * den) for a in v))
    return tuple(int(a) // g for a in v)


def as_fraction_point(p):
    return tuple(Fraction(a) for a in p)


def is_integral(p):
    return all(Fraction(a).denominator == 1 for a in p)


def floordiv(num, den):
    """floor(num/den) for den > 0."""
    return num // den


def ceildiv(num, den):
    """ceil(num/den) for den > 0."""
    return -((-num) // den)


# ---------------------------------------------------------------------------
# half-space systems
#
# A half-space is a pair ``(functional, bound)`` meaning  f . x <= bound
# with integer functional and an int or Fraction bound.  Internally systems
# are normalised to all-integer rows (a, ..., rhs).


def _normalize_halfspaces(halfspaces, dim):
    rows = []
    for f, bound in halfspaces:
        if len(f) != dim:
            raise ValueError(f"functional {f} has wrong dimension")
        b = Fraction(bound)
        den = b.denominator
        rows.append(tuple(den * c for c in f) + (b.numerator,))
    return rows


def _rank(vectors, dim):
    """Rank of a set of integer vectors (greedy, exact)."""
    basis = []
    for v in vectors:
        if is_zero(v):
            continue
        if not basis:
            basis.append(v)
        elif len(basis) == 1:
            if dim == 2:
                if cross2(basis[0], v) != 0:
                    basis.append(v)
            elif not is_zero(cross3(basis[0], v)):
                basis.append(v)
        elif len(basis) == 2 and dim == 3:
            if det3(basis[0], basis[1], v) != 0:
                basis.append(v)
        if len(basis) == dim:
            break
    return len(basis)


def _is_bounded(normals, dim):
    """Whether {x : n . x <= rhs for all rows} can be bounded.

    The recession cone {d : n . d <= 0} is nontrivial iff either the normals
    do not span (lineality space) or some extreme-ray candidate direction
    satisfies every inequality.  In dimension <= 3 every extreme ray of a
    pointed cone lies on two independent active constraints, so the cross
    products of normal pairs (resp. the perpendiculars of single normals in
    2D) exhaust the candidates.
    """
    normals = [n for n in normals if not is_zero(n)]
    if _rank(normals, dim) < dim:
        return False
    if dim == 2:
        candidates = [(-n[1], n[0]) for n in normals]
    else:
        candidates = [cross3(a, b) for a, b in combinations(normals, 2)]
    for d in candidates:
        if is_zero(d):
            continue
        if all(dot(n, d) <= 0 for n in normals):
            return False
        if all(dot(n, d) >= 0 for n in normals):
            return False
    return True


def _basic_points(rows, dim):
    """All feasible intersection points of `dim` hyperplanes, as Fractions."""
    pts = set()
    for subset in combinations(rows, dim):
        if dim == 3:
            cols = [tuple(r[i] for r in subset) for i in range(3)]
            d = det3(*cols)
            if d == 0:
                continue
            rhs = tuple(r[3] for r in subset)
            xs = (
                det3(rhs, cols[1], cols[2]),
                det3(cols[0], rhs, cols[2]),
                det3(cols[0], cols[1], rhs),
            )
        else:
            (a1, b1, c1), (a2, b2, c2) = subset
            d = a1 * b2 - a2 * b1
            if d == 0:
                continue
            xs = (c1 * b2 - c2 * b1, a1 * c2 - a2 * c1)
        # feasibility of the homogeneous point (xs, d) against every row
        ok = True
        for r in rows:
            lhs = dot(r[:dim], xs)
            rhs = r[dim] * d
            if (d > 0 and lhs > rhs) or (d < 0 and lhs < rhs):
                ok = False
                break
        if ok:
            pts.add(tuple(Fraction(x, d) for x in xs))
    return pts


def hrep_vertices(halfspaces, dim):
    """Vertices of a bounded half-space intersection (exact rationals)."""
    rows = _normalize_halfspaces(halfspaces, dim)
    return _basic_points(rows, dim)


def lattice_points(halfspaces, dim):
    """The set of integer points satisfying every half-space (closed).

    The region must be bounded; raises UnboundedRegion otherwise.  The scan
    runs over integer lines of the bounding box, reducing each line to one
    exact interval, so the cost is proportional to the box's cross-section
    rather than its volume.
    """
    if dim not in (2, 3):
        raise ValueError("dim must be 2 or 3")
    rows = _normalize_halfspaces(halfspaces, dim)
    const = [r for r in rows if is_zero(r[:dim])]
    for r in const:
        if r[dim] < 0:
            return set()
    rows = [r for r in rows if not is_zero(r[:dim])]
    if not _is_bounded([r[:dim] for r in rows], dim):
        raise UnboundedRegion("half-space intersection is unbounded")
    verts = _basic_points(rows, dim)
    if not verts:
        return set()

    def crange(i):
        vals = [v[i] for v in verts]
        lo, hi = min(vals), max(vals)
        return ceildiv(lo.numerator, lo.denominator), floordiv(hi.numerator, hi.denominator)

    out = set()
    if dim == 2:
        ylo, yhi = crange(1)
        for y in range(ylo, yhi + 1):
            iv = _x_interval(rows, (y,), 2)
            if iv is not None:
                out.update((x, y) for x in range(iv[0], iv[1] + 1))
    else:
        ylo, yhi = crange(1)
        zlo, zhi = crange(2)
        for z in range(zlo, zhi + 1):
            for y in range(ylo, yhi + 1):
                iv = _x_interval(rows, (y, z), 3)
                if iv is not None:
                    out.update((x, y, z) for x in range(iv[0], iv[1] + 1))
    return out


def _x_interval(rows, tail, dim):
    """Exact integer x-range on the line with the last dim-1 coords fixed."""
    xlo = None
    xhi = None
    for r in rows:
        a = r[0]
        rest = r[dim] - sum(c * t for c, t in zip(r[1:dim], tail))
        if a > 0:
            b = floordiv(rest, a)
            xhi = b if xhi is None else min(xhi, b)
        elif a < 0:
            b = ceildiv(-rest, -a)
            xlo = b if xlo is None else max(xlo, b)
        else:
            if rest < 0:
                return None
    if xlo is None or xhi is None or xlo > xhi:
        return None
    return xlo, xhi


# ---------------------------------------------------------------------------
# simplex membership


def barycentric(point, vertices):
    """Barycentric coordinates of a point w.r.t. a tetrahedron, as Fractions."""
    v0, v1, v2, v3 = vertices
    cols = (vsub(v1, v0), vsub(v2, v0), vsub(v3, v0))
    d = det3(*cols)
    if d == 0:
        raise DegenerateGeometry("degenerate simplex")
    rhs = vsub(as_fraction_point(point), as_fraction_point(v0))
    t1 = Fraction(det3(rhs, cols[1], cols[2]), d)
    t2 = Fraction(det3(cols[0], rhs, cols[2]), d)
    t3 = Fraction(det3(cols[0], cols[1], rhs), d)
    return (1 - t1 - t2 - t3, t1, t2, t3)


def point_in_simplex(point, vertices, open_=False):
    """Exact membership of a (rational) point in a closed or open tetrahedron."""
    coords = barycentric(point, vertices)
    if open_:
        return all(c > 0 for c in coords)
    return all(c >= 0 for c in coords)


# ---------------------------------------------------------------------------
# segment / triangle intersection (3D, closed sets, exact)


def _drop_axis(p, k):
    return tuple(c for i, c in enumerate(p) if i != k)


def _point_in_tri2(p, a, b, c):
    orient = cross2(vsub(b, a), vsub(c, a))
    if orient == 0:
        raise DegenerateGeometry("degenerate triangle")
    s = 1 if orient > 0 else -1
    for u, v in ((a, b), (b, c), (c, a)):
        if s * cross2(vsub(v, u), vsub(p, u)) < 0:
            return False
    return True


def _on_segment2(p, a, b):
    if cross2(vsub(b, a), vsub(p, a)) != 0:
        return False
    lo, hi = min(a[0], b[0]), max(a[0], b[0])
    if not lo <= p[0] <= hi:
        return False
    lo, hi = min(a[1], b[1]), max(a[1], b[1])
    return lo <= p[1] <= hi


def _seg_seg2(a, b, c, d):
    d1 = cross2(vsub(b, a), vsub(c, a))
    d2 = cross2(vsub(b, a), vsub(d, a))
    d3 = cross2(vsub(d, c), vsub(a, c))
    d4 = cross2(vsub(d, c), vsub(b, c))
    if ((d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0
            and (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0):
        return True
    return (_on_segment2(c, a, b) or _on_segment2(d, a, b)
            or _on_segment2(a, c, d) or _on_segment2(b, c, d))


def segment_triangle_intersect(segment, triangle):
    """Whether a closed 3D segment meets a closed 3D triangle (exact)."""
    s0, s1 = (as_fraction_point(p) for p in segment)
    t0, t1, t2 = (as_fraction_point(p) for p in triangle)
    n = cross3(vsub(t1, t0), vsub(t2, t0))
    if is_zero(n):
        raise DegenerateGeometry("degenerate triangle")
    h0 = dot(n, vsub(s0, t0))
    h1 = dot(n, vsub(s1, t0))
    if h0 * h1 > 0:
        return False
    k = max(range(3), key=lambda i: abs(n[i]))
    if h0 == 0 and h1 == 0:
        # coplanar: 2D overlap test after dropping the dominant axis
        a, b = _drop_axis(s0, k), _drop_axis(s1, k)
        tri = [_drop_axis(t, k) for t in (t0, t1, t2)]
        if _point_in_tri2(a, *tri) or _point_in_tri2(b, *tri):
            return True
        return any(_seg_seg2(a, b, tri[i], tri[(i + 1) % 3]) for i in range(3))
    # the segment crosses or touches the plane in a single point
    t = Fraction(h0, h0 - h1)
    x = vadd(s0, vscale(t, vsub(s1, s0)))
    return _point_in_tri2(_drop_axis(x, k), *(_drop_axis(t_, k) for t_ in (t0, t1, t2)))
