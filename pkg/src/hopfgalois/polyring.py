"""Sparse multivariate (Laurent) polynomials and rational functions.

Main variables carry a per-variable Laurent flag; negative exponents are
legal exactly on flagged variables.  Coefficients live in the parameter
field, so the lattice is (parameter field)[x_1, ..., x_n] with Laurent
support where flagged.  Membership of a fraction in the lattice is decided
exactly: after shifting Laurent monomial factors, divisibility of the
numerator by the denominator is tested with term-ordered long division,
which is a complete test over a domain.  Equality is always decided by
cross-multiplication, never by comparing stored representations.
"""

from __future__ import annotations

from fractions import Fraction

from .params import ParamElem, ParamField


def _grlex(e):
    return (sum(e), e)


class PolyRing:
    """Main-variable polynomial ring over a parameter field."""

    def __init__(self, var_names, laurent=None, params=None):
        self.names = tuple(var_names)
        self.nvars = len(self.names)
        if laurent is None:
            laurent = (False,) * self.nvars
        self.laurent = tuple(bool(b) for b in laurent)
        self.params = params if params is not None else ParamField()
        self._zero_exp = (0,) * self.nvars
        self.zero = Poly(self, {})
        self.one = Poly(self, {self._zero_exp: self.params.one})

    def var(self, i):
        exp = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Poly(self, {exp: self.params.one})

    def var_by_name(self, name):
        return self.var(self.names.index(name))

    def monomial(self, exps, coeff=None):
        coeff = self.params.one if coeff is None else coeff
        return Poly(self, {tuple(exps): coeff})

    def const(self, c):
        if isinstance(c, (int, Fraction)):
            c = self.params.from_fraction(c)
        if c.is_zero():
            return self.zero
        return Poly(self, {self._zero_exp: c})

    def linear(self, coeffs, constant=0):
        """sum coeffs[i] * x_i + constant, coefficients from Q or the params."""
        terms = {}
        for i, c in enumerate(coeffs):
            if isinstance(c, (int, Fraction)):
                c = self.params.from_fraction(c)
            if not c.is_zero():
                terms[tuple(1 if j == i else 0 for j in range(self.nvars))] = c
        p = Poly(self, terms)
        if constant:
            p = p + self.const(constant)
        return p

    def monomials_up_to(self, degree, include_negative=False):
        """All monomial exponent tuples with |e_i| summing to <= degree.

        With ``include_negative``, Laurent variables range over [-degree,
        degree]; the bound applies to the sum of absolute exponents.
        Deterministic graded order, constant first.
        """
        out = [self._zero_exp]
        frontier = {self._zero_exp}
        for _ in range(degree):
            nxt = set()
            for e in frontier:
                for i in range(self.nvars):
                    up = list(e)
                    up[i] += 1
                    nxt.add(tuple(up))
                    if include_negative and self.laurent[i]:
                        dn = list(e)
                        dn[i] -= 1
                        nxt.add(tuple(dn))
            frontier = nxt - set(out)
            out.extend(sorted(frontier))
        return out

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.laurent == other.laurent and self.params == other.params)

    def __hash__(self):
        return hash((self.names, self.laurent, self.params))

    def __repr__(self):
        vs = ", ".join(n + ("^±" if l else "") for n, l in zip(self.names, self.laurent))
        return "PolyRing(%s; %r)" % (vs, self.params)


class Poly:
    """Sparse polynomial; zero coefficients are never stored."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms, _clean=False):
        self.ring = ring
        if _clean:
            self.terms = terms
        else:
            self.terms = {e: c for e, c in terms.items() if not c.is_zero()}
        for e in self.terms:
            for i, x in enumerate(e):
                if x < 0 and not ring.laurent[i]:
                    raise ValueError(
                        "negative exponent on non-Laurent variable %s" % ring.names[i])

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_coeff(self):
        return self.terms.get(self.ring._zero_exp, self.ring.params.zero)

    def is_monomial(self):
        return len(self.terms) == 1

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(abs(x) for x in e) for e in self.terms)

    def leading(self):
        """(exponent, coeff) maximal in graded lex; requires nonzero."""
        e = max(self.terms, key=_grlex)
        return e, self.terms[e]

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]), reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def _coerce_scalar(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ring.params.from_fraction(other)
        if isinstance(other, ParamElem):
            return other
        return None

    def _check_ring(self, other):
        if other.ring is not self.ring and other.ring != self.ring:
            raise ValueError("variable registry mismatch between polynomials")

    def __add__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        c = self._coerce_scalar(other)
        if c is not None:
            other = self.ring.const(c)
        else:
            self._check_ring(other)
        out = dict(self.terms)
        for e, v in other.terms.items():
            if e in out:
                s = out[e] + v
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = v
        return Poly(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -v for e, v in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        c = self._coerce_scalar(other)
        if c is not None:
            other = self.ring.const(c)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        c = self._coerce_scalar(other)
        if c is not None:
            if c.is_zero():
                return self.ring.zero
            return Poly(self.ring, {e: v * c for e, v in self.terms.items()}, _clean=True)
        self._check_ring(other)
        out = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                p = v1 * v2
                if e in out:
                    s = out[e] + p
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
                elif not p.is_zero():
                    out[e] = p
        return Poly(self.ring, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial; use RatFunc")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        return RatFunc.of(self) / other

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return other == self
        c = self._coerce_scalar(other)
        if c is not None:
            other = self.ring.const(c)
        if not isinstance(other, Poly):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("Poly is not hashable")

    def key(self):
        return tuple((e, c.key()) for e, c in self.sorted_terms())

    # -- operations -----------------------------------------------------------

    def substitute(self, images):
        """Replace variable i by images[i] (RatFunc or Poly); exact composition."""
        ring = self.ring
        imgs = {}
        for i, val in images.items():
            imgs[i] = val if isinstance(val, RatFunc) else RatFunc.of(val)
        out = RatFunc.of(ring.zero)
        pow_cache = {}
        for e, c in self.terms.items():
            term = RatFunc.of(ring.const(c))
            for i, x in enumerate(e):
                if not x:
                    continue
                if i in imgs:
                    kkey = (i, x)
                    if kkey not in pow_cache:
                        pow_cache[kkey] = imgs[i] ** x
                    term = term * pow_cache[kkey]
                else:
                    term = term * RatFunc.of(ring.monomial(
                        tuple(x if j == i else 0 for j in range(ring.nvars))))
            out = out + term
        return out

    def partial(self, i):
        """Formal partial derivative in variable i (Laurent-aware)."""
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            k = ne[i]
            ne[i] -= 1
            out[tuple(ne)] = c * k
        return Poly(self.ring, out)

    def evaluate(self, point):
        """Value at a point (tuple of ParamElem); Laurent coords must be nonzero."""
        total = self.ring.params.zero
        cache = {}
        for e, c in self.terms.items():
            v = c
            for i, x in enumerate(e):
                if not x:
                    continue
                if (i, x) not in cache:
                    cache[(i, x)] = point[i] ** x
                v = v * cache[(i, x)]
            total = total + v
        return total

    def shift_monomial(self, e):
        return Poly(self.ring,
                    {tuple(a + b for a, b in zip(k, e)): c for k, c in self.terms.items()})

    def min_exponents(self):
        return tuple(min(e[i] for e in self.terms) for i in range(self.ring.nvars))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                (self.ring.names[i] if x == 1 else "%s^%d" % (self.ring.names[i], x))
                for i, x in enumerate(e) if x)
            cs = str(c)
            if "/" in cs or " " in cs:
                cs = "(%s)" % cs
            if mono:
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append("-" + mono)
                else:
                    parts.append("%s*%s" % (cs, mono))
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "Poly(%s)" % self


def try_divide(num, den):
    """Exact quotient num/den in the polynomial ring, or None.

    Both arguments may have Laurent support; the division itself runs on
    monomial-shifted copies with nonnegative exponents, where graded-lex
    term division is a complete divisibility test.
    """
    ring = num.ring
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if num.is_zero():
        return ring.zero
    smin_n = num.min_exponents()
    smin_d = den.min_exponents()
    shift_n = tuple(-min(x, 0) for x in smin_n)
    shift_d = tuple(-min(x, 0) for x in smin_d)
    nwork = dict(num.shift_monomial(shift_n).terms)
    dpoly = den.shift_monomial(shift_d)
    dlead, dcoeff = dpoly.leading()
    quo = {}
    while nwork:
        e = max(nwork, key=_grlex)
        c = nwork[e]
        qe = tuple(a - b for a, b in zip(e, dlead))
        if any(x < 0 for x in qe):
            return None
        qc = c / dcoeff
        quo[qe] = qc
        for de, dc in dpoly.terms.items():
            ke = tuple(a + b for a, b in zip(qe, de))
            p = qc * dc
            if ke in nwork:
                s = nwork[ke] - p
                if s.is_zero():
                    del nwork[ke]
                else:
                    nwork[ke] = s
            else:
                nwork[ke] = -p
    # net shift back: quotient * x^(shift_d - shift_n)
    back = tuple(d - n for n, d in zip(shift_n, shift_d))
    q = Poly(ring, quo).shift_monomial(back)
    for e in q.terms:
        for i, x in enumerate(e):
            if x < 0 and not ring.laurent[i]:
                return None
    return q


class RatFunc:
    """A fraction of polynomials, normalized but compared by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = num.ring.one
        if _normalized:
            self.num = num
            self.den = den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        ring = num.ring
        if num.is_zero():
            self.num, self.den = ring.zero, ring.one
            return
        num, den = self._cancel_monomials(num, den)
        if not den.is_constant():
            q = try_divide(num, den)
            if q is not None:
                num, den = q, ring.one
        # make the denominator monic in graded lex
        _, lc = den.leading()
        if not lc.is_one():
            inv = lc.inverse()
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @staticmethod
    def _cancel_monomials(num, den):
        ring = num.ring
        nmin = num.min_exponents()
        dmin = den.min_exponents()
        # shared positive monomial factor cancels; Laurent den factors move up
        shift = []
        for i in range(ring.nvars):
            if ring.laurent[i]:
                shift.append(-dmin[i])
            else:
                shift.append(-min(nmin[i], dmin[i]))
        if any(shift):
            sh = tuple(shift)
            dnum = {tuple(a + b for a, b in zip(e, sh)): c for e, c in num.terms.items()}
            dden = {tuple(a + b for a, b in zip(e, sh)): c for e, c in den.terms.items()}
            num = Poly(ring, dnum, _clean=True)
            den = Poly(ring, dden, _clean=True)
        return num, den

    @classmethod
    def of(cls, value):
        if isinstance(value, RatFunc):
            return value
        return cls(value)

    @property
    def ring(self):
        return self.num.ring

    # -- predicates -----------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_in_lattice(self):
        """True iff the value lies in the (Laurent) polynomial lattice."""
        return self.den == self.ring.one

    def as_poly(self):
        if not self.is_in_lattice():
            raise ValueError("not a lattice element: %s" % self)
        return self.num

    def is_constant(self):
        return self.den == self.ring.one and self.num.is_constant()

    def constant_coeff(self):
        if not self.is_constant():
            raise ValueError("not constant: %s" % self)
        return self.num.constant_coeff()

    # -- arithmetic ------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction, ParamElem)):
            c = other if isinstance(other, ParamElem) else self.ring.params.from_fraction(other)
            return RatFunc(self.ring.const(c))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverting the zero rational function")
        return RatFunc(self.den, self.num)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFunc(self.ring.one)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("RatFunc is not hashable")

    def key(self):
        return (self.num.key(), self.den.key())

    # -- operations ---------------------------------------------------------------

    def substitute(self, images):
        ns = self.num.substitute(images)
        ds = self.den.substitute(images)
        if ds.is_zero():
            raise ZeroDivisionError("substitution makes the denominator vanish")
        return ns / ds

    def evaluate(self, point):
        dv = self.den.evaluate(point)
        if dv.is_zero():
            raise ZeroDivisionError("evaluation hits a denominator zero")
        return self.num.evaluate(point) / dv

    def __str__(self):
        if self.den == self.ring.one:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "RatFunc(%s)" % self


# -- truncated Taylor expansions (jets) ------------------------------------

class Jet:
    """Truncated power series sum c_a h^a, |a| <= order, over the params."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, order, coeffs):
        self.ring = ring
        self.order = order
        self.coeffs = {e: c for e, c in coeffs.items() if not c.is_zero() and sum(e) <= order}

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return Jet(self.ring, self.order, out)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if sum(e) > self.order:
                    continue
                p = c1 * c2
                if e in out:
                    out[e] = out[e] + p
                else:
                    out[e] = p
        return Jet(self.ring, self.order, out)

    def scale(self, c):
        return Jet(self.ring, self.order, {e: v * c for e, v in self.coeffs.items()})

    def inverse(self):
        zero_exp = (0,) * self.ring.nvars
        c0 = self.coeffs.get(zero_exp)
        if c0 is None or c0.is_zero():
            raise ZeroDivisionError("jet has no constant term; cannot invert")
        c0inv = c0.inverse()
        rest = Jet(self.ring, self.order,
                   {e: -(v * c0inv) for e, v in self.coeffs.items() if any(e)})
        out = Jet(self.ring, self.order, {zero_exp: self.ring.params.one})
        power = out
        for _ in range(self.order):
            power = power * rest
            if not power.coeffs:
                break
            out = out + power
        return out.scale(c0inv)

    def __pow__(self, n):
        zero_exp = (0,) * self.ring.nvars
        out = Jet(self.ring, self.order, {zero_exp: self.ring.params.one})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __getitem__(self, e):
        return self.coeffs.get(tuple(e), self.ring.params.zero)


def taylor_jet(value, point, order):
    """Jet of a Poly or RatFunc at a point, exact up to total degree ``order``.

    Expansion variables h_i shadow the main variables; the point must avoid
    denominator zeros (and zero coordinates for Laurent variables).
    """
    rf = RatFunc.of(value)
    ring = rf.ring
    params = ring.params
    zero_exp = (0,) * ring.nvars

    def jet_of_poly(poly):
        var_jets = {}
        total = Jet(ring, order, {})
        for e, c in poly.terms.items():
            term = Jet(ring, order, {zero_exp: params.one})
            for i, x in enumerate(e):
                if not x:
                    continue
                if (i, abs(x)) not in var_jets:
                    base = Jet(ring, order, {
                        zero_exp: point[i],
                        tuple(1 if j == i else 0 for j in range(ring.nvars)): params.one,
                    })
                    var_jets[(i, 1)] = base
                    var_jets[(i, abs(x))] = base ** abs(x)
                j = var_jets[(i, abs(x))]
                if x < 0:
                    j = j.inverse()
                term = term * j
            total = total + term.scale(c)
        return total

    jn = jet_of_poly(rf.num)
    jd = jet_of_poly(rf.den)
    return jn * jd.inverse()
