"""Quasisymmetric functions over the integers.

Compositions are plain tuples of positive ints.  A :class:`QSymFn` is a sparse
integer combination of basis elements tagged either ``"M"`` (monomial) or
``"L"`` (fundamental).  Everything is exact; Python ints never overflow.
"""
from __future__ import annotations

import re
from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import factorial
from typing import Iterable, Mapping

Composition = tuple  # tuple[int, ...]

MONOMIAL = "M"
FUNDAMENTAL = "L"
_BASES = (MONOMIAL, FUNDAMENTAL)


# ---------------------------------------------------------------- compositions

@lru_cache(maxsize=None)
def _compositions(n: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        out.extend((first,) + rest for rest in _compositions(n - first))
    return tuple(out)


def compositions_of(n: int) -> list:
    """All compositions of ``n`` in lexicographic order (``[()]`` for 0)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_compositions(n))


def check_composition(alpha) -> Composition:
    alpha = tuple(int(a) for a in alpha)
    if any(a < 1 for a in alpha):
        raise ValueError(f"composition parts must be positive: {alpha}")
    return alpha


def to_subset(alpha: Composition) -> frozenset:
    """Partial sums of ``alpha`` strictly below its weight, a subset of [n-1]."""
    out, s = [], 0
    for a in alpha[:-1]:
        s += a
        out.append(s)
    return frozenset(out)


def from_subset(subset: Iterable[int], n: int) -> Composition:
    if n == 0:
        return ()
    cuts = sorted(subset)
    out, prev = [], 0
    for c in cuts + [n]:
        out.append(c - prev)
        prev = c
    return tuple(out)


def complement(alpha: Composition) -> Composition:
    n = sum(alpha)
    if n == 0:
        return ()
    return from_subset(set(range(1, n)) - to_subset(alpha), n)


def reverse(alpha: Composition) -> Composition:
    return tuple(reversed(alpha))


@lru_cache(maxsize=None)
def refinements(alpha: Composition) -> tuple:
    """Every composition refining ``alpha`` (including ``alpha`` itself)."""
    return tuple(
        sum(pieces, ()) for pieces in iproduct(*(_compositions(a) for a in alpha))
    )


# ------------------------------------------------------------------- QSymFn

def _clean(terms: Mapping) -> dict:
    return {check_composition(k): int(v) for k, v in terms.items() if v}


class QSymFn:
    """An element of QSym stored in the monomial or fundamental basis.

    Values are immutable.  Equality compares the underlying functions, so a
    monomial and a fundamental expansion of the same element compare equal.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, terms: Mapping | None = None, basis: str = MONOMIAL):
        if basis not in _BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self._terms = _clean(terms or {})

    # constructors
    @classmethod
    def M(cls, alpha=(), coeff: int = 1) -> "QSymFn":
        return cls({tuple(alpha): coeff}, MONOMIAL)

    @classmethod
    def L(cls, alpha=(), coeff: int = 1) -> "QSymFn":
        return cls({tuple(alpha): coeff}, FUNDAMENTAL)

    @classmethod
    def one(cls, basis: str = MONOMIAL) -> "QSymFn":
        return cls({(): 1}, basis)

    @classmethod
    def zero(cls, basis: str = MONOMIAL) -> "QSymFn":
        return cls({}, basis)

    # access
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def coefficient(self, alpha) -> int:
        return self._terms.get(tuple(alpha), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def weights(self) -> list:
        return sorted({sum(k) for k in self._terms})

    @property
    def degree(self):
        """Common weight of all terms; 0 for the zero function, None if mixed."""
        w = self.weights()
        if not w:
            return 0
        return w[0] if len(w) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.degree is not None

    def graded_pieces(self) -> dict:
        pieces = defaultdict(dict)
        for k, v in self._terms.items():
            pieces[sum(k)][k] = v
        return {w: QSymFn(t, self.basis) for w, t in sorted(pieces.items())}

    def to(self, basis: str) -> "QSymFn":
        return change_basis(self, basis)

    def vector(self, n: int, basis: str = FUNDAMENTAL) -> list:
        """Coefficient vector on the degree-``n`` compositions in lex order."""
        g = self.to(basis)
        if any(sum(k) != n for k in g._terms):
            raise ValueError(f"not homogeneous of degree {n}")
        return [g.coefficient(a) for a in compositions_of(n)]

    # arithmetic
    def _aligned(self, other: "QSymFn") -> tuple:
        if not isinstance(other, QSymFn):
            return NotImplemented
        if other.basis != self.basis:
            other = other.to(self.basis)
        return self._terms, other._terms

    def __add__(self, other):
        if isinstance(other, int):
            other = QSymFn.one(self.basis) * other
        a, b = self._aligned(other)
        out = Counter(a)
        out.update(b)
        return QSymFn(out, self.basis)

    __radd__ = __add__

    def __neg__(self):
        return QSymFn({k: -v for k, v in self._terms.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return QSymFn({k: v * other for k, v in self._terms.items()}, self.basis)
        if isinstance(other, QSymFn):
            return product(self, other).to(self.basis)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        out = QSymFn.one(self.basis)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = QSymFn.one(self.basis) * other
        if not isinstance(other, QSymFn):
            return NotImplemented
        if other.basis == self.basis:
            return self._terms == other._terms
        return self._terms == other.to(self.basis)._terms

    def __hash__(self):
        return hash(frozenset(self.to(MONOMIAL)._terms.items()))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"QSymFn({render(self)!r})"


# ------------------------------------------------------------ basis changes

def change_basis(f: QSymFn, target: str) -> QSymFn:
    """Re-express ``f`` in ``target``.

    L_a = sum of M_b over b refining a; the inverse carries the sign
    (-1)^(len(b) - len(a)).
    """
    if target not in _BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    out = Counter()
    if target == MONOMIAL:
        for a, c in f._terms.items():
            for b in refinements(a):
                out[b] += c
    else:
        for a, c in f._terms.items():
            k = len(a)
            for b in refinements(a):
                out[b] += c if (len(b) - k) % 2 == 0 else -c
    return QSymFn(out, target)


# ------------------------------------------------------------------ product

@lru_cache(maxsize=None)
def quasi_shuffle(a: Composition, b: Composition) -> tuple:
    """Multiset of compositions in M_a * M_b, as ((composition, mult), ...)."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out = Counter()
    for c, m in quasi_shuffle(a[1:], b):
        out[(a[0],) + c] += m
    for c, m in quasi_shuffle(a, b[1:]):
        out[(b[0],) + c] += m
    for c, m in quasi_shuffle(a[1:], b[1:]):
        out[(a[0] + b[0],) + c] += m
    return tuple(sorted(out.items()))


def product(f: QSymFn, g: QSymFn) -> QSymFn:
    """Product in the monomial basis by quasi-shuffle; the result is in M."""
    f, g = f.to(MONOMIAL), g.to(MONOMIAL)
    out = Counter()
    for a, ca in f._terms.items():
        for b, cb in g._terms.items():
            for c, m in quasi_shuffle(a, b):
                out[c] += ca * cb * m
    return QSymFn(out, MONOMIAL)


# ---------------------------------------------------------------- coproduct

class TensorQSym:
    """Element of QSym (x) QSym, stored in the M (x) M basis."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        self._terms = {
            (check_composition(a), check_composition(b)): int(v)
            for (a, b), v in (terms or {}).items()
            if v
        }

    @classmethod
    def tensor(cls, f: QSymFn, g: QSymFn) -> "TensorQSym":
        f, g = f.to(MONOMIAL), g.to(MONOMIAL)
        out = Counter()
        for a, ca in f._terms.items():
            for b, cb in g._terms.items():
                out[(a, b)] += ca * cb
        return cls(out)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def __add__(self, other: "TensorQSym") -> "TensorQSym":
        out = Counter(self._terms)
        out.update(other._terms)
        return TensorQSym(out)

    def __sub__(self, other: "TensorQSym") -> "TensorQSym":
        out = Counter(self._terms)
        out.subtract(other._terms)
        return TensorQSym(out)

    def __eq__(self, other):
        if not isinstance(other, TensorQSym):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def map(self, left, right) -> "TensorQSym":
        """Apply linear maps QSymFn -> QSymFn to each tensor factor."""
        out = TensorQSym()
        for (a, b), c in self._terms.items():
            out = out + TensorQSym.tensor(left(QSymFn.M(a)) * c, right(QSymFn.M(b)))
        return out

    def multiply(self) -> QSymFn:
        out = QSymFn.zero()
        for (a, b), c in self._terms.items():
            out = out + product(QSymFn.M(a), QSymFn.M(b)) * c
        return out

    def __repr__(self):
        parts = [
            f"{c}*M{list(a)}(x)M{list(b)}"
            for (a, b), c in sorted(self._terms.items(), key=lambda kv: (sum(kv[0][0]) + sum(kv[0][1]), kv[0]))
        ]
        return "TensorQSym(" + " + ".join(parts) + ")"


def coproduct(f: QSymFn) -> TensorQSym:
    """Deconcatenation on monomials: M_a -> sum_i M_(a_1..a_i) (x) M_(a_i+1..)."""
    out = Counter()
    for a, c in f.to(MONOMIAL)._terms.items():
        for i in range(len(a) + 1):
            out[(a[:i], a[i:])] += c
    return TensorQSym(out)


def counit(f: QSymFn) -> int:
    return f.to(MONOMIAL).coefficient(())


def antipode(f: QSymFn) -> QSymFn:
    """S(L_a) = (-1)^|a| L_(a^c), applied termwise; returned in f's basis."""
    g = f.to(FUNDAMENTAL)
    out = {complement(a): (-c if sum(a) % 2 else c) for a, c in g._terms.items()}
    return QSymFn(out, FUNDAMENTAL).to(f.basis)


# ----------------------------------------------------------- specialisation

def _gbinom(m: int, k: int) -> int:
    """binom(m, k) for any integer m (falling factorial over k!)."""
    num = 1
    for i in range(k):
        num *= m - i
    return num // factorial(k)


class IntValuedPoly:
    """Integer-valued polynomial in ``m``, stored as sum_k c_k * binom(m, k)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        self._coeffs = {int(k): int(v) for k, v in (coeffs or {}).items() if v}
        if any(k < 0 for k in self._coeffs):
            raise ValueError("binomial indices must be nonnegative")

    @classmethod
    def from_values(cls, values: list) -> "IntValuedPoly":
        """Interpolate from values at m = 0, 1, ..., d via forward differences."""
        vals = list(values)
        coeffs = {}
        k = 0
        while vals:
            coeffs[k] = vals[0]
            vals = [b - a for a, b in zip(vals, vals[1:])]
            k += 1
        return cls(coeffs)

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    @property
    def degree(self) -> int:
        return max(self._coeffs, default=-1)

    def __call__(self, m: int) -> int:
        return sum(c * _gbinom(m, k) for k, c in self._coeffs.items())

    def power_coeffs(self) -> list:
        """Coefficients in the basis 1, m, m^2, ... (Fractions)."""
        d = self.degree
        out = [Fraction(0)] * (d + 1)
        for k, c in self._coeffs.items():
            # falling factorial m(m-1)...(m-k+1)
            ff = [Fraction(1)]
            for i in range(k):
                nxt = [Fraction(0)] * (len(ff) + 1)
                for j, a in enumerate(ff):
                    nxt[j + 1] += a
                    nxt[j] -= a * i
                ff = nxt
            for j, a in enumerate(ff):
                out[j] += c * a / factorial(k)
        while out and out[-1] == 0:
            out.pop()
        return out

    def _values(self, count: int, sign: int = 1) -> list:
        return [self(sign * m) for m in range(count)]

    def __mul__(self, other: "IntValuedPoly") -> "IntValuedPoly":
        d = max(self.degree, 0) + max(other.degree, 0) + 1
        return IntValuedPoly.from_values(
            [a * b for a, b in zip(self._values(d), other._values(d))]
        )

    def __add__(self, other: "IntValuedPoly") -> "IntValuedPoly":
        out = Counter(self._coeffs)
        out.update(other._coeffs)
        return IntValuedPoly(out)

    def scale(self, c: int) -> "IntValuedPoly":
        return IntValuedPoly({k: v * c for k, v in self._coeffs.items()})

    def reflect(self) -> "IntValuedPoly":
        """The polynomial m -> p(-m)."""
        return IntValuedPoly.from_values(self._values(self.degree + 1, sign=-1))

    def __eq__(self, other):
        if not isinstance(other, IntValuedPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __str__(self):
        return render_poly(self.power_coeffs(), "m")

    def __repr__(self):
        return f"IntValuedPoly({self})"


def specialize_ones(f: QSymFn) -> IntValuedPoly:
    """Set x_1 = ... = x_m = 1 and the rest 0: M_a(1^m) = binom(m, len(a))."""
    out = Counter()
    for a, c in f.to(MONOMIAL)._terms.items():
        out[len(a)] += c
    return IntValuedPoly(out)


# -------------------------------------------------------------- text format

def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def render_poly(coeffs: list, var: str) -> str:
    """Render power-basis coefficients, highest degree first."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_fmt_coeff(mag)}*{mono}"
        else:
            body = _fmt_coeff(mag)
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def render(f: QSymFn) -> str:
    """Canonical text: terms by (weight, lex composition), e.g. ``2*M[1,1]``."""
    items = f.items()
    if not items:
        return "0"
    chunks = []
    for i, (a, c) in enumerate(items):
        body = f"{f.basis}[{','.join(map(str, a))}]"
        if abs(c) != 1:
            body = f"{abs(c)}*{body}"
        if i == 0:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(chunks)


_TERM = re.compile(r"([+-])?\s*(?:(\d+)\s*\*\s*)?([ML])\[([\d,\s]*)\]")


def parse(text: str) -> QSymFn:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text == "0":
        return QSymFn.zero()
    pos, terms, basis = 0, Counter(), None
    for m in _TERM.finditer(text):
        if text[pos:m.start()].strip():
            raise ValueError(f"cannot parse {text!r}")
        sign, coeff, b, parts = m.groups()
        if basis is None:
            basis = b
        elif basis != b:
            raise ValueError("mixed bases in one expression")
        alpha = tuple(int(p) for p in parts.replace(" ", "").split(",") if p)
        terms[alpha] += (-1 if sign == "-" else 1) * int(coeff or 1)
        pos = m.end()
    if basis is None or text[pos:].strip():
        raise ValueError(f"cannot parse {text!r}")
    return QSymFn(terms, basis)


def binomial_L_value(alpha: Composition, m: int) -> int:
    """L_a(1^m) = binom(m - k + n, n) with k parts and weight n."""
    n, k = sum(alpha), len(alpha)
    return _gbinom(m - k + n, n)


__all__ = [
    "Composition", "MONOMIAL", "FUNDAMENTAL", "compositions_of", "to_subset",
    "from_subset", "complement", "reverse", "refinements", "QSymFn",
    "change_basis", "quasi_shuffle", "product", "TensorQSym", "coproduct",
    "counit", "antipode", "IntValuedPoly", "specialize_ones", "render",
    "parse", "render_poly", "binomial_L_value",
]
