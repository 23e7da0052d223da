"""Weierstrass curves over finite fields and the vertical-line classifier.

A curve y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 is nonsingular when
its discriminant is nonzero.  Each vertical line x = l (including l at
infinity) is classified by how many rational points of the curve it meets:

  case 1: none,
  case 2: exactly one (necessarily 2-torsion; the line at infinity always
          lands here, through the point at infinity),
  case 3: two, which are each other's negatives.

The classification summary is the only curve data the downstream tree and
coefficient-system stages consume, so it can also be built synthetically.
"""

from dataclasses import dataclass

from .field import solve_monic_quadratic

INFINITY = "inf"


class SingularCurveError(ValueError):
    pass


class CurvePoint:
    """Affine point (x, y) or the point at infinity (x is None)."""

    __slots__ = ("x", "y")

    def __init__(self, x=None, y=None):
        self.x = x
        self.y = y

    @property
    def is_infinity(self):
        return self.x is None

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return (self.x, self.y) == (other.x, other.y)

    def __hash__(self):
        return hash((None, None) if self.is_infinity else (self.x.coeffs, self.y.coeffs))

    def label(self):
        if self.is_infinity:
            return INFINITY
        return f"({self.x!r},{self.y!r})"

    def sort_key(self):
        if self.is_infinity:
            return (0,)
        return (1, self.x.coeffs, self.y.coeffs)

    def __repr__(self):
        return self.label()


INFINITY_POINT = CurvePoint()


def line_label(l):
    """Canonical printable label for a vertical line x = l."""
    if l == INFINITY:
        return INFINITY
    return repr(l)


@dataclass(frozen=True)
class LineClass:
    """Classification of one vertical line: its label, case, and points met."""

    line: object  # field element or INFINITY
    case: int
    points: tuple  # () for case 1, (p,) for case 2, (p, q) for case 3

    @property
    def label(self):
        return line_label(self.line)


@dataclass(frozen=True)
class ClassificationSummary:
    """Per-line classification plus derived counts.

    lines are ordered with affine lines first (coefficient vectors in
    lexicographic order) and the line at infinity last.  Synthetic
    summaries, used for infinite-field style experiments, carry string
    labels instead of field elements.
    """

    lines: tuple  # of LineClass

    @property
    def case1_lines(self):
        return tuple(lc for lc in self.lines if lc.case == 1)

    @property
    def case2_lines(self):
        return tuple(lc for lc in self.lines if lc.case == 2)

    @property
    def case3_lines(self):
        return tuple(lc for lc in self.lines if lc.case == 3)

    @property
    def cusp_count(self):
        return len(self.case2_lines) + 2 * len(self.case3_lines)

    @property
    def total_points(self):
        """Rational point count: one per case-2 line, two per case-3 line."""
        return self.cusp_count

    def to_json(self):
        return {
            "lines": [
                {"line": lc.label, "case": lc.case, "points": [p.label() if isinstance(p, CurvePoint) else str(p) for p in lc.points]}
                for lc in self.lines
            ],
            "counts": {
                "case1": len(self.case1_lines),
                "case2": len(self.case2_lines),
                "case3": len(self.case3_lines),
                "points": self.total_points,
            },
        }


def synthetic_summary(case1=0, case2=0, case3=0, include_infinity_line=False):
    """A summary with made-up labels, for runs not backed by a curve.

    Case labels are strings; case-2 entries get one synthetic point each
    and case-3 entries a point pair.  When include_infinity_line is set,
    the last case-2 entry is the line at infinity through the infinite
    point, mirroring real summaries.
    """
    lines = []
    for i in range(case1):
        lines.append(LineClass(f"s1.{i}", 1, ()))
    n2 = case2 - 1 if include_infinity_line else case2
    for i in range(n2):
        lines.append(LineClass(f"s2.{i}", 2, (f"pt2.{i}",)))
    for i in range(case3):
        lines.append(LineClass(f"s3.{i}", 3, (f"pt3.{i}+", f"pt3.{i}-")))
    if include_infinity_line:
        lines.append(LineClass(INFINITY, 2, (INFINITY_POINT,)))
    return ClassificationSummary(tuple(lines))


class WeierstrassCurve:
    """Nonsingular Weierstrass curve over a finite field."""

    def __init__(self, field, a1, a2, a3, a4, a6):
        self.field = field
        self.a1 = field(a1)
        self.a2 = field(a2)
        self.a3 = field(a3)
        self.a4 = field(a4)
        self.a6 = field(a6)
        if self.discriminant().is_zero():
            raise SingularCurveError("curve is singular (discriminant is zero)")

    def discriminant(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -(b2 * b2 * b8) - 8 * (b4 ** 3) - 27 * (b6 * b6) + 9 * b2 * b4 * b6

    def equation_value(self, x, y):
        """y^2 + a1*x*y + a3*y - x^3 - a2*x^2 - a4*x - a6; zero on the curve."""
        x, y = self.field(x), self.field(y)
        return (
            y * y + self.a1 * x * y + self.a3 * y
            - x ** 3 - self.a2 * x * x - self.a4 * x - self.a6
        )

    def contains(self, point):
        if point.is_infinity:
            return True
        return self.equation_value(point.x, point.y).is_zero()

    def negate(self, point):
        if point.is_infinity:
            return point
        return CurvePoint(point.x, -point.y - self.a1 * point.x - self.a3)

    def is_two_torsion(self, point):
        return self.negate(point) == point

    def enumerate_points(self):
        """All rational points, infinity first, then affine in (x, y) order."""
        points = [INFINITY_POINT]
        for x in self.field.elements():
            for y in self._ys_on_line(x):
                points.append(CurvePoint(x, y))
        return points

    def _ys_on_line(self, l):
        # on x = l the equation becomes y^2 + (a1*l + a3)*y - rhs(l) = 0
        b = self.a1 * l + self.a3
        c = -(l ** 3 + self.a2 * l * l + self.a4 * l + self.a6)
        return solve_monic_quadratic(self.field, b, c)

    def classify_line(self, l):
        """LineClass of the vertical line x = l (l may be INFINITY)."""
        if l == INFINITY:
            return LineClass(INFINITY, 2, (INFINITY_POINT,))
        l = self.field(l)
        ys = self._ys_on_line(l)
        points = tuple(CurvePoint(l, y) for y in ys)
        return LineClass(l, len(ys) + 1, points)

    def classify_all(self):
        """Summary over every line, affine lines in element order, infinity last."""
        lines = [self.classify_line(l) for l in self.field.elements()]
        lines.append(self.classify_line(INFINITY))
        return ClassificationSummary(tuple(lines))

    def to_json(self):
        return {
            "a1": list(self.a1.coeffs),
            "a2": list(self.a2.coeffs),
            "a3": list(self.a3.coeffs),
            "a4": list(self.a4.coeffs),
            "a6": list(self.a6.coeffs),
        }


def curve_from_json(field, data):
    return WeierstrassCurve(
        field, data["a1"], data["a2"], data["a3"], data["a4"], data["a6"]
    )
