"""Sparse multivariate polynomials over the integers.

These polynomials live in the point coordinates z3, z4, ..., z_n, so a
polynomial in k variables is understood over (z3, ..., z_{k+2}).  Terms map
exponent tuples (one entry per variable) to nonzero int coefficients; the
zero polynomial is the empty term map.

The monomial order used everywhere (leading terms, serialization) is
lexicographic with z3 > z4 > ... > z_n, i.e. plain left-to-right comparison
of exponent tuples.

Instances are never mutated after construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from ..errors import InputError, NotDivisibleError

Exponents = tuple[int, ...]


class MultiPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | None = None):
        if nvars < 0:
            raise InputError("nvars must be >= 0")
        self.nvars = nvars
        clean: dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != nvars:
                raise InputError(
                    f"exponent vector {exps} has length {len(exps)}, expected {nvars}"
                )
            if any(e < 0 for e in exps):
                raise InputError(f"negative exponent in {exps}")
            if coeff:
                clean[tuple(exps)] = int(coeff)
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        """The variable in slot ``index`` (0-based; slot 0 is z3)."""
        if not 0 <= index < nvars:
            raise InputError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: int = 1) -> "MultiPoly":
        return cls(nvars, {tuple(exps): coeff})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def variable_indices(self) -> tuple[int, ...]:
        """Point labels of the variables: (3, 4, ..., nvars + 2)."""
        return tuple(range(3, 3 + self.nvars))

    def leading_term(self) -> tuple[Exponents, int]:
        """Lexicographically largest term (z3 > z4 > ...)."""
        if not self.terms:
            raise InputError("the zero polynomial has no leading term")
        exps = max(self.terms)
        return exps, self.terms[exps]

    def total_degree(self) -> int:
        if not self.terms:
            raise InputError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degrees = {sum(e) for e in self.terms}
        return len(degrees) == 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = [f"z{i}" for i in self.variable_indices]
        parts = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            elif coeff == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{coeff}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "MultiPoly") -> None:
        if self.nvars != other.nvars:
            raise InputError(
                f"mixing polynomials in {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            new = terms.get(exps, 0) + coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        out = MultiPoly.zero(self.nvars)
        out.terms = terms
        return out

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly.zero(self.nvars)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        terms: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(key, 0) + c1 * c2
                if new:
                    terms[key] = new
                else:
                    terms.pop(key, None)
        out = MultiPoly.zero(self.nvars)
        out.terms = terms
        return out

    def scale(self, c: int) -> "MultiPoly":
        out = MultiPoly.zero(self.nvars)
        if c:
            out.terms = {e: c * v for e, v in self.terms.items()}
        return out

    def power(self, k: int) -> "MultiPoly":
        if k < 0:
            raise InputError("negative power")
        result = MultiPoly.one(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def exact_divide(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact quotient self / divisor; raises NotDivisibleError on remainder.

        Reduction by the divisor's lexicographic leading term.  Because lex
        order is multiplicative, the leading term of an exact multiple is the
        product of leading terms, so each step strips one term of the true
        quotient; any failure to divide exposes a genuine non-divisibility.
        """
        self._check_compatible(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return MultiPoly.zero(self.nvars)
        d_exps, d_coeff = divisor.leading_term()
        quotient: dict[Exponents, int] = {}
        rem = dict(self.terms)
        while rem:
            exps = max(rem)
            coeff = rem[exps]
            q_exps = tuple(a - b for a, b in zip(exps, d_exps))
            if any(e < 0 for e in q_exps) or coeff % d_coeff:
                raise NotDivisibleError(
                    f"{self} is not divisible by {divisor} "
                    f"(offending term exponents {exps})"
                )
            q_coeff = coeff // d_coeff
            quotient[q_exps] = q_coeff
            for e2, c2 in divisor.terms.items():
                key = tuple(a + b for a, b in zip(q_exps, e2))
                new = rem.get(key, 0) - q_coeff * c2
                if new:
                    rem[key] = new
                else:
                    rem.pop(key, None)
        out = MultiPoly.zero(self.nvars)
        out.terms = quotient
        return out

    def divides(self, other: "MultiPoly") -> bool:
        try:
            other.exact_divide(self)
        except NotDivisibleError:
            return False
        return True

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, values: Sequence[Fraction]) -> Fraction:
        if len(values) != self.nvars:
            raise InputError(f"expected {self.nvars} values, got {len(values)}")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = Fraction(coeff)
            for v, e in zip(values, exps):
                term *= Fraction(v) ** e
            total += term
        return total

    # -- serialization -------------------------------------------------------

    def serialize(self) -> list[dict]:
        """Terms as {exponents, coeff} dicts, leading term first."""
        return [
            {"exponents": list(exps), "coeff": str(self.terms[exps])}
            for exps in sorted(self.terms, reverse=True)
        ]

    @classmethod
    def from_serialized(cls, nvars: int, terms: Iterable[Mapping]) -> "MultiPoly":
        return cls(
            nvars,
            {tuple(t["exponents"]): int(t["coeff"]) for t in terms},
        )


def variables(nvars: int) -> list[MultiPoly]:
    return [MultiPoly.variable(nvars, i) for i in range(nvars)]
