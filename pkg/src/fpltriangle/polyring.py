"""Sparse exact multivariate polynomials with truncation.

Coefficients are Python ints, ``Fraction`` or ``TPoly`` (a polynomial in the
loop weight ``t``).  A ``MultiPoly`` may carry per-variable exponent caps and a
total-degree bound; products are reduced modulo the monomial ideal those
bounds generate, so truncating the factors first never changes the kept
coefficients.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence


class TPoly:
    """Polynomial in ``t`` with exact coefficients, lowest degree first.

    Arithmetic results that do not depend on ``t`` are returned as plain
    numbers, so a ``TPoly`` instance always has degree >= 1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def t(cls) -> "TPoly":
        return cls((0, 1))

    @staticmethod
    def make(coeffs: Sequence):
        p = TPoly(coeffs)
        if len(p.coeffs) == 0:
            return 0
        if len(p.coeffs) == 1:
            return p.coeffs[0]
        return p

    @staticmethod
    def _lift(x) -> tuple:
        if isinstance(x, TPoly):
            return x.coeffs
        if isinstance(x, (int, Fraction)):
            return (x,)
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        b = self._lift(other)
        if b is NotImplemented:
            return NotImplemented
        a = self.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return TPoly.make(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly.make([-c for c in self.coeffs])

    def __sub__(self, other):
        b = self._lift(other)
        if b is NotImplemented:
            return NotImplemented
        return self + TPoly.make([-c for c in b])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._lift(other)
        if b is NotImplemented:
            return NotImplemented
        a = self.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return TPoly.make(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TPoly):
            return NotImplemented
        return TPoly.make([Fraction(c) / other for c in self.coeffs])

    def __pow__(self, k: int):
        result = 1
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        b = self._lift(other)
        if b is NotImplemented:
            return NotImplemented
        return self.coeffs == tuple(TPoly(b).coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, value):
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __repr__(self):
        return f"TPoly({self.coeffs})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def specialize(value, t):
    """Evaluate a scalar that may depend on ``t``."""
    return value(t) if isinstance(value, TPoly) else value


def scalar_str(value) -> str:
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def parse_t(text):
    """``"symbolic"`` gives the formal ``t``; otherwise an int or ``Fraction``."""
    if isinstance(text, (int, Fraction, TPoly)):
        return text
    text = str(text).strip()
    if text in ("symbolic", "t"):
        return TPoly.t()
    value = Fraction(text)
    return value.numerator if value.denominator == 1 else value


class MultiPoly:
    __slots__ = ("nvars", "terms", "caps", "max_degree")

    def __init__(self, nvars: int, terms: Mapping | None = None,
                 caps: Sequence[int] | None = None, max_degree: int | None = None):
        self.nvars = nvars
        self.caps = None if caps is None else tuple(caps)
        self.max_degree = max_degree
        if self.caps is not None and len(self.caps) != nvars:
            raise ValueError(f"caps {self.caps} do not match nvars={nvars}")
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have length {nvars}")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent {e}")
            if c == 0 or not self._fits(e):
                continue
            clean[e] = c
        self.terms = clean

    def _fits(self, e) -> bool:
        if self.caps is not None and any(x > c for x, c in zip(e, self.caps)):
            return False
        if self.max_degree is not None and sum(e) > self.max_degree:
            return False
        return True

    # construction

    @classmethod
    def constant(cls, nvars: int, c=1, **trunc) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c}, **trunc)

    @classmethod
    def variable(cls, nvars: int, i: int, **trunc) -> "MultiPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1}, **trunc)

    def _like(self, terms, caps=None, max_degree=None) -> "MultiPoly":
        return MultiPoly(self.nvars, terms, caps, max_degree)

    def truncate(self, caps=None, max_degree=None) -> "MultiPoly":
        caps, max_degree = _meet(self.caps, self.max_degree, caps, max_degree)
        return MultiPoly(self.nvars, self.terms, caps, max_degree)

    # arithmetic

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        return MultiPoly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        caps, deg = _meet(self.caps, self.max_degree, other.caps, other.max_degree)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.nvars, out, caps, deg)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()}, self.caps, self.max_degree)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if other == 0:
                return self._like({}, self.caps, self.max_degree)
            return self._like({e: c * other for e, c in self.terms.items()},
                              self.caps, self.max_degree)
        other = self._coerce(other)
        caps, deg = _meet(self.caps, self.max_degree, other.caps, other.max_degree)
        return MultiPoly(self.nvars, _mul_terms(self.terms, other.terms, self.nvars, caps, deg),
                         caps, deg)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = MultiPoly.constant(self.nvars, 1, caps=self.caps, max_degree=self.max_degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return self.terms == MultiPoly.constant(self.nvars, other).terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def map_coeffs(self, f) -> "MultiPoly":
        return self._like({e: f(c) for e, c in self.terms.items()}, self.caps, self.max_degree)

    def coefficient_of(self, expo: Sequence[int]):
        expo = tuple(expo)
        if len(expo) != self.nvars:
            raise ValueError(f"exponent {expo} does not have length {self.nvars}")
        if any(x < 0 for x in expo):
            return 0
        return self.terms.get(expo, 0)

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Substitute ``u_i -> u_{perm[i]}`` (caps are dropped)."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.nvars
            for i, x in enumerate(e):
                f[perm[i]] = x
            out[tuple(f)] = c
        return MultiPoly(self.nvars, out)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_symmetric(self) -> bool:
        for i in range(self.nvars - 1):
            perm = list(range(self.nvars))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            swapped = self.permute(perm)
            if swapped.terms != self.terms:
                return False
        return True

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {len(self.terms)} terms)"

    def __str__(self):
        if not self.terms:
            return "0"
        lines = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            mono = " ".join(f"u{i}^{x}" for i, x in enumerate(e) if x)
            lines.append(f"{scalar_str(self.terms[e])} * {mono}" if mono else scalar_str(self.terms[e]))
        return " + ".join(lines)


def _meet(caps_a, deg_a, caps_b, deg_b):
    if caps_a is None:
        caps = caps_b
    elif caps_b is None:
        caps = caps_a
    else:
        caps = tuple(min(x, y) for x, y in zip(caps_a, caps_b))
    if deg_a is None:
        deg = deg_b
    elif deg_b is None:
        deg = deg_a
    else:
        deg = min(deg_a, deg_b)
    return caps, deg


def _mul_terms(a: dict, b: dict, nvars: int, caps, max_degree) -> dict:
    """Truncated product of two term dicts.

    Exponent vectors are packed into one integer with a spare high bit per
    digit; adding ``offset`` sets that bit exactly when a digit exceeds its
    cap, so the per-pair test is a single addition and mask.
    """
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    top = max(max(max(e) for e in a) + max(max(e) for e in b), max(caps) if caps else 0, 1)
    width = top.bit_length() + 1
    half = 1 << (width - 1)

    def pack(e):
        k = 0
        for i, x in enumerate(e):
            k |= x << (width * i)
        return k

    offset = high = 0
    if caps is not None:
        for i, c in enumerate(caps):
            offset |= (half - 1 - c) << (width * i)
            high |= half << (width * i)
    bterms = [(pack(e), sum(e), c) for e, c in b.items()]
    acc: dict[int, object] = {}
    get = acc.get
    for ea, ca in a.items():
        ka = pack(ea)
        da = sum(ea)
        room = None if max_degree is None else max_degree - da
        for kb, db, cb in bterms:
            if room is not None and db > room:
                continue
            k = ka + kb
            if high and (k + offset) & high:
                continue
            acc[k] = get(k, 0) + ca * cb
    mask = (1 << width) - 1
    out = {}
    for k, c in acc.items():
        if c != 0:
            out[tuple((k >> (width * i)) & mask for i in range(nvars))] = c
    return out


def product(factors: Iterable[MultiPoly], nvars: int, caps=None, max_degree=None) -> MultiPoly:
    result = MultiPoly.constant(nvars, 1, caps=caps, max_degree=max_degree)
    for f in factors:
        result = result * f
    return result


def vandermonde(n: int, caps=None, max_degree=None) -> MultiPoly:
    """prod_{i<j} (u_j - u_i)."""
    u = [MultiPoly.variable(n, i) for i in range(n)]
    return product((u[j] - u[i] for i in range(n) for j in range(i + 1, n)), n, caps, max_degree)


def loop_weight(n: int, t=1, caps=None, max_degree=None) -> MultiPoly:
    """prod_{i<j} (1 + t u_j + u_i u_j)."""
    factors = []
    for i in range(n):
        for j in range(i + 1, n):
            ej = [0] * n
            ej[j] = 1
            eij = [0] * n
            eij[i] = eij[j] = 1
            factors.append(MultiPoly(n, {(0,) * n: 1, tuple(ej): t, tuple(eij): 1}))
    return product(factors, n, caps, max_degree)


def one_plus_u_power(n: int, k: int, caps=None, max_degree=None, t=1) -> MultiPoly:
    """prod_i (1 + t u_i)^k, exact for k >= 0 (binomial expansion per variable)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    factors = []
    for i in range(n):
        cap = k if caps is None else min(k, caps[i])
        terms = {}
        binom = 1
        for a in range(cap + 1):
            e = [0] * n
            e[i] = a
            terms[tuple(e)] = binom * t ** a
            binom = binom * (k - a) // (a + 1)
        factors.append(MultiPoly(n, terms))
    return product(factors, n, caps, max_degree)


def elementary(n: int, k: int) -> MultiPoly:
    terms = {}
    for subset in itertools.combinations(range(n), k):
        e = [0] * n
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = 1
    return MultiPoly(n, terms)


def alternant(seq: Sequence[int], caps=None, max_degree=None) -> MultiPoly:
    """det(u_i^{seq_j}) for a sequence of non-negative exponents."""
    n = len(seq)
    terms = {}
    for perm in itertools.permutations(range(n)):
        e = tuple(seq[perm[i]] for i in range(n))
        terms[e] = terms.get(e, 0) + permutation_sign(perm)
    return MultiPoly(n, terms, caps, max_degree)


def permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def antisymmetrize(p: MultiPoly) -> MultiPoly:
    """(1/n!) sum over permutations of sign * p(u_perm)."""
    n = p.nvars
    acc: dict = {}
    for perm in itertools.permutations(range(n)):
        sign = permutation_sign(perm)
        for e, c in p.permute(perm).terms.items():
            acc[e] = acc.get(e, 0) + sign * c
    scale = Fraction(1, factorial(n))
    return MultiPoly(n, {e: _demote(c * scale) for e, c in acc.items()})


def _demote(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x
