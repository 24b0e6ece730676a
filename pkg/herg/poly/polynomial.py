"""Sparse multivariate Laurent polynomials with integer coefficients.

A polynomial is a map from exponent vectors over a fixed, ordered variable
list to nonzero integers. ``QuotientPoly`` lives in Z[a, b]/(b^2 - ab) and is
always stored in normal form (b-exponent at most 1).
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Union

Exponents = tuple[int, ...]

RVARS: tuple[str, ...] = ("xm1", "y", "z", "s", "w", "t")
XVARS: tuple[str, ...] = ("x", "y", "z", "s", "w", "t")
ABVARS: tuple[str, ...] = ("a", "b")
PARTIAL_VARS: tuple[str, ...] = ("xm1", "a", "b")

Scalar = int
PolyLike = Union["Poly", int]


def _add_exp(e1: Exponents, e2: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(e1, e2, strict=True))


class Poly:
    __slots__ = ("terms", "variables")

    def __init__(
        self, variables: tuple[str, ...], terms: Mapping[Exponents, int] | None = None
    ) -> None:
        self.variables = tuple(variables)
        clean: dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != len(self.variables):
                raise ValueError(
                    f"exponent vector {exps} does not match variables {self.variables}"
                )
            if coeff:
                clean[tuple(exps)] = clean.get(tuple(exps), 0) + coeff
        self.terms = self._reduce({k: v for k, v in clean.items() if v})

    @classmethod
    def _reduce(cls, terms: dict[Exponents, int]) -> dict[Exponents, int]:
        return terms

    # --- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, variables: tuple[str, ...], value: int) -> Poly:
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def monomial(cls, variables: tuple[str, ...], coeff: int = 1, **exps: int) -> Poly:
        unknown = set(exps) - set(variables)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)} for {variables}")
        return cls(variables, {tuple(exps.get(v, 0) for v in variables): coeff})

    @classmethod
    def var(cls, variables: tuple[str, ...], name: str) -> Poly:
        return cls.monomial(variables, **{name: 1})

    def promote(self, other: PolyLike) -> Poly:
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        if isinstance(other, int):
            return type(self).constant(self.variables, other)
        raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    # --- arithmetic --------------------------------------------------------

    def __add__(self, other: PolyLike) -> Poly:
        other = self.promote(other)
        cs = dict(self.terms)
        for k, v in other.terms.items():
            cs[k] = cs.get(k, 0) + v
        return type(self)(self.variables, cs)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return type(self)(self.variables, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: PolyLike) -> Poly:
        return self + (-self.promote(other))

    def __rsub__(self, other: PolyLike) -> Poly:
        return self.promote(other) - self

    def __mul__(self, other: PolyLike) -> Poly:
        other = self.promote(other)
        cs: dict[Exponents, int] = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = _add_exp(k1, k2)
                cs[k] = cs.get(k, 0) + v1 * v2
        return type(self)(self.variables, cs).normalize()

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            if not self.is_monomial():
                raise ValueError(f"cannot invert non-monomial {self}")
            ((k, v),) = self.terms.items()
            return type(self)(self.variables, {tuple(-x for x in k): v}) ** (-n)
        result = type(self).constant(self.variables, 1)
        for _ in range(n):
            result = result * self
        return result

    # --- comparison --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = type(self).constant(self.variables, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.variables, tuple(sorted(self.terms.items()))))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    # --- transforms --------------------------------------------------------

    def normalize(self) -> Poly:
        """Cap the ``w`` exponent at 1 (w^2 = w); other variables untouched."""
        if "w" not in self.variables:
            return self
        i = self.variables.index("w")
        cs: dict[Exponents, int] = {}
        for k, v in self.terms.items():
            if k[i] > 1:
                k = k[:i] + (1,) + k[i + 1 :]
            cs[k] = cs.get(k, 0) + v
        return type(self)(self.variables, cs)

    def subst(
        self, images: Mapping[str, PolyLike], target: tuple[str, ...]
    ) -> Poly:
        """Replace each variable by a polynomial (or int) over ``target``.

        Negative exponents need monomial images.
        """
        missing = set(self.variables) - set(images)
        if missing:
            raise ValueError(f"no image for {sorted(missing)}")
        lifted = {
            name: img if isinstance(img, Poly) else Poly.constant(target, img)
            for name, img in images.items()
        }
        out = Poly(target)
        for k, v in self.terms.items():
            term = Poly.constant(target, v)
            for name, exp in zip(self.variables, k, strict=True):
                if exp:
                    term = term * lifted[name] ** exp
            out = out + term
        return out

    def recast(self, variables: tuple[str, ...]) -> Poly:
        """The same polynomial over another variable list; dropped variables must be absent."""
        cs: dict[Exponents, int] = {}
        for k, v in self.terms.items():
            exps = dict(zip(self.variables, k, strict=True))
            stray = [n for n, e in exps.items() if e and n not in variables]
            if stray:
                raise ValueError(f"{self} still depends on {stray}")
            cs[tuple(exps.get(n, 0) for n in variables)] = v
        return Poly(variables, cs)

    # --- output ------------------------------------------------------------

    def _term_string(self, exps: Exponents, coeff: int) -> str:
        factors = []
        for name, e in zip(self.variables, exps, strict=True):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        c = abs(coeff)
        if not factors:
            return str(c)
        if c != 1:
            factors.insert(0, str(c))
        return "*".join(factors)

    def to_string(self) -> str:
        """Canonical text: terms in descending lexicographic exponent order."""
        if not self.terms:
            return "0"
        parts = []
        for i, k in enumerate(sorted(self.terms, reverse=True)):
            coeff = self.terms[k]
            body = self._term_string(k, coeff)
            if i == 0:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" {'-' if coeff < 0 else '+'} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_string()!r})"


class QuotientPoly(Poly):
    """Element of Z[a, b]/(b^2 - ab), kept with every b-exponent at most 1."""

    __slots__ = ()

    def __init__(
        self, variables: tuple[str, ...] = ABVARS, terms: Mapping[Exponents, int] | None = None
    ) -> None:
        if tuple(variables) != ABVARS:
            raise ValueError(f"quotient ring lives over {ABVARS}, got {variables}")
        super().__init__(variables, terms)

    @classmethod
    def _reduce(cls, terms: dict[Exponents, int]) -> dict[Exponents, int]:
        # a^n b^m = a^(n+m-1) b for m >= 2
        cs: dict[Exponents, int] = {}
        for (n, m), v in terms.items():
            k = (n + m - 1, 1) if m >= 2 else (n, m)
            cs[k] = cs.get(k, 0) + v
        return {k: v for k, v in cs.items() if v}

    @classmethod
    def of(cls, p: Poly) -> QuotientPoly:
        if p.variables != ABVARS:
            p = p.recast(ABVARS)
        return cls(ABVARS, p.terms)


def normalize(p: Poly) -> Poly:
    return p.normalize()


def expand_x(p: Poly) -> Poly:
    """Rewrite a polynomial in ``xm1`` as one in ``x`` (xm1 = x - 1)."""
    x = Poly.var(XVARS, "x")
    images: dict[str, PolyLike] = {"xm1": x - 1}
    for name in RVARS[1:]:
        images[name] = Poly.var(XVARS, name)
    return p.subst(images, XVARS)


def duality_subst(p: Poly) -> Poly:
    """(xm1, y, z, s, w, t) -> (a, a, a^-1, b, 1, 1)."""
    a, b = Poly.var(ABVARS, "a"), Poly.var(ABVARS, "b")
    return p.subst({"xm1": a, "y": a, "z": a**-1, "s": b, "w": 1, "t": 1}, ABVARS)


def partial_subst(p: Poly) -> Poly:
    """As :func:`duality_subst` but keeping ``xm1`` free."""
    xm1, a, b = (Poly.var(PARTIAL_VARS, n) for n in PARTIAL_VARS)
    return p.subst({"xm1": xm1, "y": a, "z": a**-1, "s": b, "w": 1, "t": 1}, PARTIAL_VARS)


def swap_ab(p: Poly) -> Poly:
    a, b = Poly.var(ABVARS, "a"), Poly.var(ABVARS, "b")
    return p.subst({"a": b, "b": a}, ABVARS)


def at_b(p: Poly) -> Poly:
    """Evaluate ``a`` at ``b``."""
    b = Poly.var(ABVARS, "b")
    return p.subst({"a": b, "b": b}, ABVARS)
