"""Exact polynomials in beta and z_1, ..., z_n over the integers.

An :class:`MPoly` is an immutable map from exponent vectors
``(e_beta, e_1, ..., e_n)`` to nonzero Python ints.  Terms are ordered by
total degree, ties broken by descending lexicographic order on the exponent
vector; this order fixes both the text format and the leading term used by
:meth:`MPoly.exact_divide`.
"""

from __future__ import annotations

import ast
import re
from typing import Iterable, Mapping, Sequence


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


def _order_key(exps):
    return (sum(exps), exps)


class MPoly:
    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple, int] | None = None):
        if n < 0:
            raise ValueError("n must be nonnegative")
        self.n = n
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n + 1:
                    raise ValueError(f"exponent vector {exps} has wrong length for n={n}")
                if any(e < 0 for e in exps):
                    raise ValueError(f"negative exponent in {exps}")
                if c:
                    clean[exps] = clean.get(exps, 0) + int(c)
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, terms):
        # trusted constructor: keys have the right length and no zero coefficients
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "MPoly":
        return cls._raw(n, {})

    @classmethod
    def const(cls, c: int, n: int) -> "MPoly":
        return cls(n, {(0,) * (n + 1): c})

    @classmethod
    def one(cls, n: int) -> "MPoly":
        return cls.const(1, n)

    @classmethod
    def beta(cls, n: int) -> "MPoly":
        return cls(n, {(1,) + (0,) * n: 1})

    @classmethod
    def z(cls, i: int, n: int) -> "MPoly":
        """The variable z_i (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"z{i} is not a variable of a ring with n={n}")
        exps = [0] * (n + 1)
        exps[i] = 1
        return cls(n, {tuple(exps): 1})

    @classmethod
    def monomial(cls, zexps: Sequence[int], n: int | None = None, beta_exp: int = 0,
                 coeff: int = 1) -> "MPoly":
        """``coeff * beta^beta_exp * z^zexps``."""
        zexps = tuple(zexps)
        if n is None:
            n = len(zexps)
        if len(zexps) != n:
            raise ValueError("weight vector length must equal n")
        return cls(n, {(beta_exp,) + zexps: coeff})

    # -- basic protocol -----------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == MPoly.const(other, self.n)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"MPoly({self.n}, {self})"

    def __str__(self):
        return self.to_text()

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.n != self.n:
                raise ValueError(f"ring mismatch: n={self.n} vs n={other.n}")
            return other
        if isinstance(other, int):
            return MPoly.const(other, self.n)
        raise TypeError(f"cannot combine MPoly with {type(other).__name__}")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly._raw(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = MPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- ordering and division ----------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    def leading_term(self) -> tuple:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=_order_key)
        return e, self._terms[e]

    def exact_divide(self, g: "MPoly") -> "MPoly":
        """Return q with ``q * g == self``; raise NotDivisibleError otherwise."""
        g = self._coerce(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        ge, gc = g.leading_term()
        rem = dict(self._terms)
        quot: dict = {}
        n = self.n
        while rem:
            re_, rc = max(rem.items(), key=lambda t: _order_key(t[0]))
            diff = tuple(a - b for a, b in zip(re_, ge))
            if any(d < 0 for d in diff) or rc % gc:
                raise NotDivisibleError(f"{MPoly._raw(n, rem)} is not divisible by {g}")
            qc = rc // gc
            quot[diff] = qc
            for e2, c2 in g._terms.items():
                e = tuple(a + b for a, b in zip(diff, e2))
                s = rem.get(e, 0) - qc * c2
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        return MPoly._raw(n, quot)

    # -- substitutions ------------------------------------------------------

    def permute_z(self, w: Sequence[int]) -> "MPoly":
        """Return f(wz) where wz = (z_{w(1)}, ..., z_{w(n)})."""
        w = tuple(w)
        if len(w) != self.n or sorted(w) != list(range(1, self.n + 1)):
            raise ValueError(f"{w} is not a permutation of size {self.n}")
        out = {}
        for e, c in self._terms.items():
            new = [0] * (self.n + 1)
            new[0] = e[0]
            for i in range(1, self.n + 1):
                new[w[i - 1]] = e[i]
            out[tuple(new)] = c
        return MPoly._raw(self.n, out)

    def swap(self, i: int) -> "MPoly":
        """f(s_i z): exchange z_i and z_{i+1}."""
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i], e[i + 1] = e[i + 1], e[i]
            out[tuple(e)] = c
        return MPoly._raw(self.n, out)

    def at_beta(self, value: int) -> "MPoly":
        """Specialise beta to an integer."""
        out: dict = {}
        for e, c in self._terms.items():
            k = (0,) + e[1:]
            out[k] = out.get(k, 0) + c * value ** e[0]
        return MPoly(self.n, out)

    def evaluate(self, beta: "MPoly", zs: Sequence["MPoly"]) -> "MPoly":
        """Substitute beta and every z_i by polynomials of a common ring."""
        if len(zs) != self.n:
            raise ValueError("need one value per z-variable")
        target = beta.n
        result = MPoly.zero(target)
        for e, c in self._terms.items():
            term = MPoly.const(c, target)
            if e[0]:
                term = term * beta ** e[0]
            for i, k in enumerate(e[1:]):
                if k:
                    term = term * zs[i] ** k
            result = result + term
        return result

    def degree_in(self, var: int) -> int:
        """Largest exponent of variable ``var`` (0 is beta, i is z_i)."""
        return max((e[var] for e in self._terms), default=0)

    def coefficient_in(self, var: int, k: int) -> "MPoly":
        """Coefficient of var^k, as a polynomial in the remaining variables."""
        out = {}
        for e, c in self._terms.items():
            if e[var] == k:
                e = list(e)
                e[var] = 0
                out[tuple(e)] = c
        return MPoly._raw(self.n, out)

    # -- text format --------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self.sorted_terms()):
            factors = []
            if e[0]:
                factors.append("b" if e[0] == 1 else f"b^{e[0]}")
            for i, k in enumerate(e[1:], start=1):
                if k:
                    factors.append(f"z{i}" if k == 1 else f"z{i}^{k}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if idx == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    @classmethod
    def parse(cls, text: str, n: int) -> "MPoly":
        """Inverse of :meth:`to_text` (also accepts loose spacing)."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        result = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            exps = [0] * (n + 1)
            coeff = 1
            for factor in body.split("*"):
                m = re.fullmatch(r"(b|z(\d+))(?:\^(\d+))?", factor)
                if m:
                    var = 0 if m.group(1) == "b" else int(m.group(2))
                    if var > n:
                        raise ValueError(f"variable z{var} outside ring with n={n}")
                    exps[var] += int(m.group(3) or 1)
                elif factor.isdigit():
                    coeff *= int(factor)
                else:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            key = tuple(exps)
            result[key] = result.get(key, 0) + (coeff if sign == "+" else -coeff)
        if len(re.sub(r"[+-][^+-]+", "", s)):
            raise ValueError(f"cannot parse {text!r}")
        return cls(n, result)


def zvars(n: int) -> list:
    """[z_1, ..., z_n] in the ring with n z-variables."""
    return [MPoly.z(i, n) for i in range(1, n + 1)]


def zpower(weight: Iterable[int], n: int | None = None) -> "MPoly":
    """The monomial z^weight."""
    weight = tuple(weight)
    return MPoly.monomial(weight, n if n is not None else len(weight))


def poly_sum(polys: Iterable[MPoly], n: int) -> MPoly:
    total = MPoly.zero(n)
    for p in polys:
        total = total + p
    return total


_BINOPS = {ast.Add: lambda a, b: a + b, ast.Sub: lambda a, b: a - b,
           ast.Mult: lambda a, b: a * b}


def evaluate_expression(text: str, names: Mapping[str, MPoly], n: int) -> MPoly:
    """Evaluate an arithmetic expression such as ``(1+b*zi)*zj`` over MPoly.

    Only integers, the given names, ``+ - *``, parentheses and ``**`` with a
    nonnegative integer exponent are accepted.
    """
    try:
        tree = ast.parse(text.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse expression {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return MPoly.const(node.value, n)
        if isinstance(node, ast.Name):
            if node.id not in names:
                raise ValueError(f"unknown variable {node.id!r}; allowed: {sorted(names)}")
            return names[node.id]
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0):
                    raise ValueError("exponents must be nonnegative integer literals")
                return ev(node.left) ** exp.value
            op = _BINOPS.get(type(node.op))
            if op is not None:
                return op(ev(node.left), ev(node.right))
        raise ValueError(f"unsupported syntax in expression {text!r}")

    return ev(tree)
