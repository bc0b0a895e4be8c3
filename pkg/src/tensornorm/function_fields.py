"""Rational function fields over the closure, valued by monomial magnitudes.

An :class:`ExtensionDescriptor` names one side of the construction (K or
L): an ordered list of transcendentals, each carrying a positive magnitude
2**q with q a nonzero rational.  Elements are canonical fractions of
sparse polynomials; the value of a polynomial is the largest magnitude of
a monomial appearing in it (coefficients all have magnitude one, the
closure being trivially valued), and extends multiplicatively to
fractions.

Coordinatization expresses a list of elements over a common denominator
as exact coordinate vectors over a chosen base field: either the whole
closure, or the subfield of a fixed lattice level, in which case closure
coefficients are unfolded over powers of the common level's generator.
"""

from __future__ import annotations

from .magnitude import Magnitude
from .linalg import IncrementalSystem
from .polynomials import Polynomial, exact_div, glex_key, poly_gcd, poly_lcm

_RESERVED_NAMES = {"x"}  # "(x)" is the tensor-product operator in element syntax


class ExtensionDescriptor:
    """One side of the tensor construction: named transcendentals with
    assigned magnitudes over a tower configuration.

    Immutable after construction; elements and all operations on them are
    pure values, safe to share freely between threads.
    """

    def __init__(self, side, variables, config):
        if side not in ("K", "L"):
            raise ValueError(f"side must be 'K' or 'L', got {side!r}")
        names = [n for n, _ in variables]
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        for n, mag in variables:
            if n in _RESERVED_NAMES:
                raise ValueError(f"variable name {n!r} is reserved")
            if not isinstance(mag, Magnitude) or mag.is_zero or mag.exponent == 0:
                raise ValueError(
                    f"variable {n!r} needs a positive magnitude 2^q with q nonzero")
        self.side = side
        self.variables = tuple((n, m) for n, m in variables)
        self.config = config

    @property
    def nvars(self):
        return len(self.variables)

    @property
    def names(self):
        return tuple(n for n, _ in self.variables)

    def index(self, name):
        for i, (n, _) in enumerate(self.variables):
            if n == name:
                return i
        raise KeyError(f"unknown variable {name!r} on side {self.side}")

    def monomial_value(self, exps) -> Magnitude:
        q = 0
        for e, (_, mag) in zip(exps, self.variables):
            if e:
                q = q + e * mag.exponent
        return Magnitude.pos(q)

    def __repr__(self):
        vs = ", ".join(f"{n}:{m}" for n, m in self.variables)
        return f"ExtensionDescriptor({self.side}; {vs})"


def gauss_value(poly: Polynomial, descriptor: ExtensionDescriptor) -> Magnitude:
    """Largest monomial magnitude of a polynomial; zero for the zero poly."""
    if poly.is_zero:
        return Magnitude.zero()
    best = None
    for exps in poly.terms:
        q = descriptor.monomial_value(exps)
        if best is None or q > best:
            best = q
    return best


class TowerElem:
    """A canonical fraction of sparse polynomials in one descriptor.

    Canonical form: gcd(num, den) = 1 and the denominator's graded-lex
    leading coefficient is one; the zero element is 0/1.  Immutable.
    """

    __slots__ = ("descriptor", "num", "den", "_value")

    def __init__(self, descriptor, num, den, _canonical=False):
        self.descriptor = descriptor
        self._value = None
        if _canonical:
            self.num, self.den = num, den
            return
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = num
            self.den = Polynomial.constant(descriptor.config, descriptor.nvars, 1)
            return
        if not (num.is_constant or den.is_constant):
            g = poly_gcd(num, den)
            if not g.is_constant:
                num = exact_div(num, g)
                den = exact_div(den, g)
        _, lc = den.leading()
        if not lc.is_one:
            inv = lc.inv()
            num = num.scaled(inv)
            den = den.scaled(inv)
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, descriptor):
        cfg, n = descriptor.config, descriptor.nvars
        return cls(descriptor, Polynomial.zero(cfg, n),
                   Polynomial.constant(cfg, n, 1), _canonical=True)

    @classmethod
    def one(cls, descriptor):
        return cls.constant(descriptor, 1)

    @classmethod
    def constant(cls, descriptor, value):
        cfg, n = descriptor.config, descriptor.nvars
        num = Polynomial.constant(cfg, n, value)
        return cls(descriptor, num, Polynomial.constant(cfg, n, 1), _canonical=True)

    @classmethod
    def variable(cls, descriptor, name):
        cfg, n = descriptor.config, descriptor.nvars
        num = Polynomial.variable(cfg, n, descriptor.index(name))
        return cls(descriptor, num, Polynomial.constant(cfg, n, 1), _canonical=True)

    @classmethod
    def from_polys(cls, descriptor, num, den):
        return cls(descriptor, num, den)

    # -- queries ---------------------------------------------------------------

    @property
    def is_zero(self):
        return self.num.is_zero

    def value(self) -> Magnitude:
        """The Gauss value, multiplicative over the fraction."""
        if self._value is None:
            if self.num.is_zero:
                self._value = Magnitude.zero()
            else:
                self._value = gauss_value(self.num, self.descriptor) * \
                    gauss_value(self.den, self.descriptor) ** -1
        return self._value

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TowerElem):
            if other.descriptor is not self.descriptor:
                raise ValueError("elements of different extensions")
            return other
        return TowerElem.constant(self.descriptor, other)

    def __add__(self, other):
        other = self._coerce(other)
        num = self.num * other.den + other.num * self.den
        return TowerElem(self.descriptor, num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return TowerElem(self.descriptor, -self.num, self.den, _canonical=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        return TowerElem(self.descriptor, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero element")
        return TowerElem(self.descriptor, self.num * other.den, self.den * other.num)

    def scaled(self, coeff):
        """Product with a base-field element; stays canonical."""
        if isinstance(coeff, int):
            coeff = self.descriptor.config.from_int(coeff)
        if coeff.is_zero:
            return TowerElem.zero(self.descriptor)
        return TowerElem(self.descriptor, self.num.scaled(coeff), self.den,
                         _canonical=True)

    def __pow__(self, n):
        if n < 0:
            return (TowerElem.one(self.descriptor) / self) ** (-n)
        return TowerElem(self.descriptor, self.num**n, self.den**n)

    def __eq__(self, other):
        if not isinstance(other, TowerElem):
            return NotImplemented
        return (self.descriptor is other.descriptor and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((id(self.descriptor), self.num, self.den))

    def __repr__(self):
        from .parsing import format_tower_elem
        return f"TowerElem({format_tower_elem(self)})"


# ---------------------------------------------------------------------------
# coordinatization over the base field
# ---------------------------------------------------------------------------

class CoordSystem:
    """Exact coordinates of a list of elements over a common denominator.

    Each element equals (sum of row[j] * atom_j) / denominator, where an
    atom is a monomial times a power of the coefficient-level generator
    (that power is always zero when the base is the whole closure) and the
    row entries lie in the base field.
    """

    def __init__(self, descriptor, base_level, denominator, basis, coeff_level, matrix):
        self.descriptor = descriptor
        self.base_level = base_level
        self.denominator = denominator
        self.basis = basis  # tuple of (exponent tuple, generator power)
        self.coeff_level = coeff_level
        self.matrix = matrix

    def atom_value(self, j) -> Magnitude:
        """Magnitude of basis atom j (the generator power contributes one)."""
        return self.descriptor.monomial_value(self.basis[j][0])

    def reconstruct(self, row) -> TowerElem:
        cfg = self.descriptor.config
        n = self.descriptor.nvars
        gen = cfg.generator(self.coeff_level)
        num = Polynomial.zero(cfg, n)
        for (exps, gpow), c in zip(self.basis, row):
            if c.is_zero:
                continue
            coeff = c * gen**gpow
            num = num + Polynomial.monomial(cfg, n, exps, coeff)
        return TowerElem.from_polys(self.descriptor, num, self.denominator)


def coordinatize(elems, base_level=None) -> CoordSystem:
    """Common-denominator coordinates of nonzero-or-zero elements.

    ``base_level=None`` takes the whole closure as the base field; a level
    restricts the base to that subfield and unfolds coefficients over
    generator powers of a common coefficient level.
    """
    if not elems:
        raise ValueError("need at least one element")
    desc = elems[0].descriptor
    cfg = desc.config
    for e in elems:
        if e.descriptor is not desc:
            raise ValueError("elements of different extensions")

    den = Polynomial.constant(cfg, desc.nvars, 1)
    for e in elems:
        den = poly_lcm(den, e.den)
    nums = []
    for e in elems:
        q = exact_div(den, e.den)
        assert q is not None
        nums.append(e.num * q)

    monos = sorted({exps for f in nums for exps in f.terms}, key=glex_key)
    zero = cfg.zero()

    if base_level is None:
        basis = tuple((m, 0) for m in monos)
        matrix = [[f.terms.get(m, zero) for m in monos] for f in nums]
        return CoordSystem(desc, None, den, basis, 1, matrix)

    cfg._check_level(base_level)
    level = base_level
    for f in nums:
        for c in f.terms.values():
            level = _lcm(level, c.level)
    cfg._check_level(level)
    span = level // base_level
    basis = tuple((m, j) for m in monos for j in range(span))
    matrix = []
    for f in nums:
        row = []
        for m in monos:
            c = f.terms.get(m)
            if c is None:
                row.extend([zero] * span)
            else:
                row.extend(cfg.relative_coords(c, level, base_level))
        matrix.append(row)
    return CoordSystem(desc, base_level, den, basis, level, matrix)


def _lcm(a, b):
    from math import gcd
    return a * b // gcd(a, b)


def min_coset_value(x: TowerElem, span, base_level=None):
    """Least-value representative of x + <span> over the base field.

    Returns (u, coeffs) with u = x + sum coeffs[j] * span[j] of minimal
    value; the minimum exists because over the trivially valued base the
    value takes finitely many values on the coset.  Among attaining
    coefficient vectors, the one with free parameters zero is returned, so
    coeffs is all zeros whenever x itself attains the least value.
    """
    span = list(span)
    if not span:
        return x, ()
    cs = coordinatize([x] + span, base_level=base_level)
    cfg = x.descriptor.config
    xi = cs.matrix[0]
    rows = cs.matrix[1:]
    d = len(span)

    grades = {}
    for j in range(len(cs.basis)):
        grades.setdefault(cs.atom_value(j), []).append(j)
    ordered = sorted(grades, reverse=True)

    system = IncrementalSystem(d, cfg)
    for value in ordered:
        snapshot = len(system.pivots)
        consistent = True
        for l in grades[value]:
            coeffs_l = [rows[j][l] for j in range(d)]
            if system.add_equation(coeffs_l, -xi[l]) == IncrementalSystem.INCONSISTENT:
                consistent = False
                break
        if not consistent:
            del system.pivots[snapshot:]
            break

    coeffs = system.solve_free_zero()
    u = x
    for c, s in zip(coeffs, span):
        if not c.is_zero:
            u = u + s.scaled(c)
    return u, tuple(coeffs)
