"""Based quantum torus: Z[q^(1/2),q^(-1/2)]-combinations of lattice monomials
X^e multiplied through a skew-symmetric integer form, X^e X^f = q^(L(e,f)/2) X^(e+f).
"""

from __future__ import annotations

from .scalars import FORMAL, ExactDivisionError, ModeError

MAX_DIV_STEPS = 20000


class TorusError(ValueError):
    pass


class NonLaurentError(ArithmeticError):
    """A quotient that had to be a torus element is not one."""


def check_skew(lam):
    m = len(lam)
    for row in lam:
        if len(row) != m:
            raise TorusError("skew form must be square")
    for i in range(m):
        for j in range(m):
            if lam[i][j] != -lam[j][i]:
                raise TorusError("form is not skew-symmetric at (%d,%d)" % (i, j))


class Torus:
    """Ambient data shared by toric elements: rank, skew form, scalar mode."""

    def __init__(self, lam, mode=FORMAL):
        lam = tuple(tuple(int(x) for x in row) for row in lam)
        check_skew(lam)
        self.lam = lam
        self.m = len(lam)
        self.mode = mode

    def pairing(self, e, f) -> int:
        lam = self.lam
        total = 0
        for i, ei in enumerate(e):
            if not ei:
                continue
            row = lam[i]
            total += ei * sum(row[j] * fj for j, fj in enumerate(f) if fj)
        return total

    def zero(self) -> "ToricElement":
        return ToricElement(self, {})

    def one(self) -> "ToricElement":
        return self.monomial((0,) * self.m)

    def monomial(self, e, coeff=None) -> "ToricElement":
        e = tuple(int(x) for x in e)
        if len(e) != self.m:
            raise TorusError("exponent length %d != rank %d" % (len(e), self.m))
        if coeff is None:
            coeff = self.mode.one()
        return ToricElement(self, {e: coeff} if coeff else {})

    def q(self, halfpow: int) -> "ToricElement":
        """The scalar q^(halfpow/2) as a torus element."""
        return self.monomial((0,) * self.m, self.mode.qpow(halfpow))

    def compatible(self, other) -> bool:
        return self.m == other.m and self.lam == other.lam and self.mode == other.mode

    def __repr__(self):
        return "Torus(m=%d, mode=%s)" % (self.m, self.mode)


def monomial_mul(torus: Torus, e, f):
    """Product of two basis monomials: the scalar q^(L(e,f)/2) and e+f."""
    e = tuple(e)
    f = tuple(f)
    if len(e) != torus.m or len(f) != torus.m:
        raise TorusError("exponent length mismatch")
    tw = torus.pairing(e, f)
    return torus.mode.qpow(tw), tuple(a + b for a, b in zip(e, f))


class ToricElement:
    """Finite formal sum of monomials X^e with exact scalar coefficients."""

    __slots__ = ("torus", "terms")

    def __init__(self, torus: Torus, terms):
        self.torus = torus
        self.terms = {e: c for e, c in terms.items() if c}

    def _check(self, other):
        if not isinstance(other, ToricElement):
            raise TorusError("expected a toric element, got %r" % (other,))
        if other.torus is not self.torus and not self.torus.compatible(other.torus):
            raise TorusError("elements live in different tori")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ToricElement):
            return NotImplemented
        return self.torus.compatible(other.torus) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            terms[e] = c if s is None else s + c
        return ToricElement(self.torus, terms)

    def __neg__(self):
        return ToricElement(self.torus, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(self.torus.mode.from_int(other))
        self._check(other)
        torus = self.torus
        mode_qpow = torus.mode.qpow
        pairing = torus.pairing
        terms: dict[tuple, object] = {}
        for e, ce in self.terms.items():
            for f, cf in other.terms.items():
                g = tuple(a + b for a, b in zip(e, f))
                c = ce * cf * mode_qpow(pairing(e, f))
                s = terms.get(g)
                terms[g] = c if s is None else s + c
        return ToricElement(torus, terms)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(self.torus.mode.from_int(other))
        return NotImplemented

    def scale(self, scalar):
        return ToricElement(self.torus, {e: scalar * c for e, c in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.torus.one()
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "ToricElement":
        """Inverse of an invertible monomial c*X^e."""
        if len(self.terms) != 1:
            raise NonLaurentError("only monomials are invertible in the torus")
        e, c = next(iter(self.terms.items()))
        ne = tuple(-x for x in e)
        tw = self.torus.pairing(e, ne)
        if isinstance(c, int):
            c = self.torus.mode.from_int(c)
        cinv = c.inverse() if hasattr(c, "inverse") else None
        if cinv is None:
            raise NonLaurentError("coefficient %r is not invertible" % (c,))
        return ToricElement(self.torus, {ne: cinv * self.torus.mode.qpow(-tw)})

    def bar(self) -> "ToricElement":
        """Coefficientwise t -> t^(-1); basis monomials are fixed."""
        if not self.torus.mode.formal:
            raise ModeError("bar involution is only available in formal mode")
        return ToricElement(self.torus, {e: c.bar() for e, c in self.terms.items()})

    def support(self):
        return sorted(self.terms)

    def leading(self):
        """Lex-maximal term (exponent, coefficient)."""
        if not self.terms:
            raise TorusError("zero element has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def coefficient(self, e) -> object:
        return self.terms.get(tuple(e), self.torus.mode.zero())

    def render(self) -> str:
        """Canonical serialization: lex-sorted exponents, '<scalar> * X^(...)'."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            cs = c.render()
            if ("+" in cs or "- " in cs) and not cs.startswith("-"):
                cs = "(%s)" % cs
            elif cs.count(" ") > 0:
                cs = "(%s)" % cs
            parts.append("%s * X^(%s)" % (cs, ",".join(str(x) for x in e)))
        return " + ".join(parts)

    def __repr__(self):
        return self.render()


def normal_order(torus: Torus, c) -> ToricElement:
    """The ordered product q^(sum_{i<j} c_i c_j lam_ji / 2) X_1^c1 ... X_m^cm.

    In the based torus this always collapses to the single monomial X^c.
    """
    c = tuple(int(x) for x in c)
    if len(c) != torus.m:
        raise TorusError("exponent length mismatch")
    half = 0
    for i in range(torus.m):
        if not c[i]:
            continue
        for j in range(i + 1, torus.m):
            if c[j]:
                half += c[i] * c[j] * torus.lam[j][i]
    out = torus.q(half)
    for i, ci in enumerate(c):
        if ci:
            e = [0] * torus.m
            e[i] = ci
            out = out * torus.monomial(tuple(e))
    return out


def div_right(a: ToricElement, b: ToricElement) -> ToricElement:
    """The unique c with c*b = a, when it exists in the torus.

    Works by peeling lex-leading terms; raises NonLaurentError when the
    quotient does not stay a finite Laurent combination.
    """
    a._check(b)
    if not b:
        raise ZeroDivisionError("division by zero toric element")
    torus = a.torus
    eb, cb = b.leading()
    quot_terms: dict[tuple, object] = {}
    rem = a
    steps = 0
    prev = None
    while rem:
        steps += 1
        if steps > MAX_DIV_STEPS:
            raise NonLaurentError("division did not terminate")
        ea, ca = rem.leading()
        if prev is not None and ea >= prev:
            raise NonLaurentError("division failed to reduce")
        prev = ea
        ec = tuple(x - y for x, y in zip(ea, eb))
        tw = torus.mode.qpow(torus.pairing(ec, eb))
        try:
            cc = ca.exact_div(cb * tw)
        except ExactDivisionError as exc:
            raise NonLaurentError("leading coefficient not divisible") from exc
        piece = torus.monomial(ec, cc)
        quot_terms[ec] = cc
        rem = rem - piece * b
    return ToricElement(torus, quot_terms)
