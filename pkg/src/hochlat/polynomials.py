"""Exact two-variable polynomials over the rationals.

Small and purpose-built: sparse dict of (x-power, y-power) -> Fraction,
immutable, with exact evaluation and Lagrange interpolation helpers.  The
triangle computations need nothing more, and exactness matters more than
speed at these sizes.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InterpolationDegeneracy


def _norm(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else c


class BiPoly:
    """Polynomial in x and y with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = _norm(c)
            if c != 0:
                clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    def coeff(self, i, j):
        return self.terms.get((i, j), 0)

    def __add__(self, other):
        other = other if isinstance(other, BiPoly) else BiPoly.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = other if isinstance(other, BiPoly) else BiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return BiPoly.const(other) - self

    def __mul__(self, other):
        other = other if isinstance(other, BiPoly) else BiPoly.const(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        assert isinstance(e, int) and e >= 0
        out = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        other = other if isinstance(other, BiPoly) else BiPoly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def eval_at(self, x, y):
        x, y = Fraction(x), Fraction(y)
        return _norm(sum((c * x**i * y**j for (i, j), c in self.terms.items()), Fraction(0)))

    def swap_vars(self):
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def deg_x(self):
        return max((i for i, _ in self.terms), default=0)

    def deg_y(self):
        return max((j for _, j in self.terms), default=0)

    def total_degree(self):
        return max((i + j for i, j in self.terms), default=0)

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def to_str(self, names=("x", "y")):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self._sorted_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, (i, j))
                if e > 0
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ ") + body)
        head = parts[0][2:] if parts[0].startswith("+ ") else "-" + parts[0][2:]
        return " ".join([head] + parts[1:])

    def to_json(self):
        return {
            "terms": [
                {"x": i, "y": j, "c": str(c)} for (i, j), c in self._sorted_terms()
            ]
        }

    def __repr__(self):
        return f"BiPoly({self.to_str()})"


def interpolate_univariate(points):
    """Coefficients (ascending degree) of the polynomial through the points."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InterpolationDegeneracy("repeated interpolation node")
    coeffs = [Fraction(0)] * len(points)
    for xk, yk in points:
        xk, yk = Fraction(xk), Fraction(yk)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xo in xs:
            if xo == xk:
                continue
            denom *= xk - xo
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xo * basis[t + 1]
        scale = yk / denom
        for t, b in enumerate(basis):
            coeffs[t] += scale * b
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return [_norm(c) for c in coeffs]


def interpolate_from_grid(xs, ys, value):
    """BiPoly through value(x, y) sampled on the grid xs × ys, exactly.

    ``value`` must return exact numbers (int or Fraction).  Degenerate node
    sets raise InterpolationDegeneracy.
    """
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise InterpolationDegeneracy("repeated interpolation node")
    rows = []
    for x0 in xs:
        pts = [(y0, value(x0, y0)) for y0 in ys]
        rows.append(interpolate_univariate(pts))
    depth = max(len(r) for r in rows)
    out = {}
    for j in range(depth):
        col = [(x0, row[j] if j < len(row) else 0) for x0, row in zip(xs, rows)]
        for i, c in enumerate(interpolate_univariate(col)):
            if c != 0:
                out[(i, j)] = c
    return BiPoly(out)
