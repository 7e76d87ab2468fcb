"""The coefficient field: rational functions in formal parameters.

Parameters (q, t, c1, ...) are transcendentals over the number field.
A :class:`ParamElem` is a reduced fraction of sparse parameter
polynomials; equality is decided by cross-multiplication, so the stored
representation need not be canonical.  Normalization cancels the common
monomial factor and scalar content, and runs a univariate gcd when both
numerator and denominator live in a single parameter, which keeps the
q-arithmetic of quantum settings tidy.
"""

from __future__ import annotations

from fractions import Fraction

from .numberfield import NumberField


def _dict_add(field, a, b):
    out = dict(a)
    for k, v in b.items():
        if k in out:
            s = field.add(out[k], v)
            if field.is_nonzero(s):
                out[k] = s
            else:
                del out[k]
        else:
            out[k] = v
    return out


def _dict_neg(field, a):
    return {k: field.neg(v) for k, v in a.items()}


def _dict_mul(field, a, b):
    out = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            p = field.mul(va, vb)
            if k in out:
                s = field.add(out[k], p)
                if field.is_nonzero(s):
                    out[k] = s
                else:
                    del out[k]
            elif field.is_nonzero(p):
                out[k] = p
    return out


def _dict_scale(field, a, c):
    return {k: field.mul(v, c) for k, v in a.items()}


def _grlex_key(exps):
    return (sum(exps), exps)


class ParamField:
    """Context: parameter names over a number field."""

    def __init__(self, names=(), number_field=None):
        self.names = tuple(names)
        self.nf = number_field if number_field is not None else NumberField.rationals()
        self.nparams = len(self.names)
        self._zero_exp = (0,) * self.nparams
        self.zero = ParamElem(self, {}, {self._zero_exp: self.nf.one}, _normalized=True)
        self.one = ParamElem(self, {self._zero_exp: self.nf.one},
                             {self._zero_exp: self.nf.one}, _normalized=True)

    def param(self, name):
        i = self.names.index(name)
        exp = tuple(1 if j == i else 0 for j in range(self.nparams))
        return ParamElem(self, {exp: self.nf.one}, {self._zero_exp: self.nf.one},
                         _normalized=True)

    def from_fraction(self, x):
        x = Fraction(x)
        if x == 0:
            return self.zero
        return ParamElem(self, {self._zero_exp: self.nf.from_fraction(x)},
                         {self._zero_exp: self.nf.one}, _normalized=True)

    def from_int(self, n):
        return self.from_fraction(n)

    def from_nf(self, a):
        if not self.nf.is_nonzero(a):
            return self.zero
        return ParamElem(self, {self._zero_exp: a},
                         {self._zero_exp: self.nf.one}, _normalized=True)

    def algebraic_gen(self):
        return self.from_nf(self.nf.gen())

    def __eq__(self, other):
        return (isinstance(other, ParamField) and self.names == other.names
                and self.nf == other.nf)

    def __hash__(self):
        return hash((self.names, self.nf))

    def __repr__(self):
        return "ParamField(%s over %r)" % (", ".join(self.names) or "no params", self.nf)


class ParamElem:
    """A fraction of parameter polynomials.  Immutable."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den, _normalized=False):
        self.field = field
        if _normalized:
            self.num = num
            self.den = den
            return
        if not den:
            raise ZeroDivisionError("zero denominator in parameter field")
        num, den = self._normalize(field, num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _normalize(field, num, den):
        nf = field.nf
        zexp = field._zero_exp
        if not num:
            return {}, {zexp: nf.one}
        # cancel the common monomial factor
        mins = [min(e[i] for e in num) for i in range(field.nparams)]
        mind = [min(e[i] for e in den) for i in range(field.nparams)]
        shift = tuple(min(a, b) for a, b in zip(mins, mind))
        if any(shift):
            num = {tuple(e[i] - shift[i] for i in range(len(e))): v for e, v in num.items()}
            den = {tuple(e[i] - shift[i] for i in range(len(e))): v for e, v in den.items()}
        num, den = ParamElem._univariate_reduce(field, num, den)
        # make the denominator's leading coefficient 1
        lead = max(den, key=_grlex_key)
        c = den[lead]
        if c != nf.one:
            cinv = nf.inv(c)
            num = _dict_scale(nf, num, cinv)
            den = _dict_scale(nf, den, cinv)
        return num, den

    @staticmethod
    def _univariate_reduce(field, num, den):
        # gcd cancellation when both polys are univariate in the same parameter
        if len(den) == 1 and not any(next(iter(den))):
            return num, den
        vs = set()
        for e in list(num) + list(den):
            for i, x in enumerate(e):
                if x:
                    vs.add(i)
        if len(vs) != 1:
            return num, den
        i = vs.pop()
        nf = field.nf

        def to_list(d):
            deg = max(e[i] for e in d)
            out = [nf.zero] * (deg + 1)
            for e, v in d.items():
                out[e[i]] = v
            return out

        def gcd_poly(a, b):
            while any(nf.is_nonzero(c) for c in b):
                a, b = b, ParamElem._poly_mod(nf, a, b)
            return a

        a, b = to_list(num), to_list(den)
        g = gcd_poly(list(a), list(b))
        while len(g) > 1 and not nf.is_nonzero(g[-1]):
            g.pop()
        if len(g) == 1:
            return num, den
        qn = ParamElem._poly_quo(nf, a, g)
        qd = ParamElem._poly_quo(nf, b, g)

        def to_dict(lst):
            out = {}
            for k, v in enumerate(lst):
                if nf.is_nonzero(v):
                    e = tuple(k if j == i else 0 for j in range(field.nparams))
                    out[e] = v
            return out

        return to_dict(qn), to_dict(qd)

    @staticmethod
    def _poly_mod(nf, a, b):
        a = list(a)
        while len(b) > 1 and not nf.is_nonzero(b[-1]):
            b = b[:-1]
        db = len(b) - 1
        binv = nf.inv(b[-1])
        while True:
            while a and not nf.is_nonzero(a[-1]):
                a.pop()
            if len(a) - 1 < db or not a:
                break
            c = nf.mul(a[-1], binv)
            k = len(a) - 1 - db
            for j in range(db + 1):
                a[k + j] = nf.sub(a[k + j], nf.mul(c, b[j]))
            a.pop()
        return a if a else [nf.zero]

    @staticmethod
    def _poly_quo(nf, a, b):
        a = list(a)
        db = len(b) - 1
        binv = nf.inv(b[-1])
        q = [nf.zero] * max(len(a) - db, 1)
        while True:
            while a and not nf.is_nonzero(a[-1]):
                a.pop()
            if len(a) - 1 < db or not a:
                break
            c = nf.mul(a[-1], binv)
            k = len(a) - 1 - db
            q[k] = c
            for j in range(db + 1):
                a[k + j] = nf.sub(a[k + j], nf.mul(c, b[j]))
            a.pop()
        return q

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == self.den

    def is_constant(self):
        return (not self.num or (len(self.num) == 1 and self.field._zero_exp in self.num)) \
            and len(self.den) == 1 and self.field._zero_exp in self.den

    def constant_value(self):
        """The number-field value of a constant element."""
        nf = self.field.nf
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        if not self.num:
            return nf.zero
        return nf.div(self.num[self.field._zero_exp], self.den[self.field._zero_exp])

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ParamElem):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        nf = self.field.nf
        if self.den == other.den:
            return ParamElem(self.field, _dict_add(nf, self.num, other.num), dict(self.den))
        num = _dict_add(nf, _dict_mul(nf, self.num, other.den),
                        _dict_mul(nf, other.num, self.den))
        den = _dict_mul(nf, self.den, other.den)
        return ParamElem(self.field, num, den)

    __radd__ = __add__

    def __neg__(self):
        return ParamElem(self.field, _dict_neg(self.field.nf, self.num), dict(self.den),
                         _normalized=True)

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
        nf = self.field.nf
        return ParamElem(self.field, _dict_mul(nf, self.num, other.num),
                         _dict_mul(nf, self.den, other.den))

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
            raise ZeroDivisionError("inverting zero parameter element")
        return ParamElem(self.field, dict(self.den), dict(self.num))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
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
        nf = self.field.nf
        lhs = _dict_mul(nf, self.num, other.den)
        rhs = _dict_mul(nf, other.num, self.den)
        if len(lhs) != len(rhs):
            return False
        for k, v in lhs.items():
            if k not in rhs or rhs[k] != v:
                return False
        return True

    def __hash__(self):
        raise TypeError("ParamElem is not hashable; representations are not canonical")

    def key(self):
        """A stable structural key for deterministic ordering (not semantic)."""
        return (tuple(sorted(self.num.items())), tuple(sorted(self.den.items())))

    # -- display -----------------------------------------------------------

    def _poly_str(self, d):
        nf = self.field.nf
        if not d:
            return "0"
        parts = []
        for e in sorted(d, key=_grlex_key, reverse=True):
            c = d[e]
            mono = "*".join(
                (self.field.names[i] if x == 1 else "%s^%d" % (self.field.names[i], x))
                for i, x in enumerate(e) if x)
            cs = nf.to_str(c)
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

    def __str__(self):
        ns = self._poly_str(self.num)
        if len(self.den) == 1 and self.field._zero_exp in self.den \
                and self.den[self.field._zero_exp] == self.field.nf.one:
            return ns
        return "(%s)/(%s)" % (ns, self._poly_str(self.den))

    def __repr__(self):
        return "ParamElem(%s)" % self
