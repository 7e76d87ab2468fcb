"""Smash-product elements with a left normal form.

An element is a finite sum  f * (w, mu) * E^alpha  with f a rational
function, (w, mu) a group part (finite group element times an abelian
shift), and E^alpha a commuting monomial in the infinitesimal generators.
Three rewriting rules realize the cross relation:

    grouplike   g * a = (g|> a) * g          (substitution)
    primitive   D * a = (D|> a) + a * D      (derivation)
    skew        E * a = (E|> a) + (gamma|> a) * E   (twisted derivation)

plus conjugation tables  w * E * w^-1 = sum c * E'  for moving monomials
past group parts.  Shift parts are assumed to commute with all
infinitesimal generators (true for every translation action used here).
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .params import ParamElem
from .polyring import Poly, RatFunc


class GroupPart(NamedTuple):
    w: int
    mu: tuple


class InfGenerator:
    """A primitive or skew-primitive generator acting on the fraction field.

    ``values`` maps variable index -> image under the generator; ``twist``
    is the substitution map of the twisting grouplike (None for honest
    primitives, which twist by the identity).
    """

    def __init__(self, name, ring, values, twist=None, twist_inv=None, kind=None):
        self.name = name
        self.ring = ring
        self.values = {i: RatFunc.of(v) for i, v in values.items()}
        self.twist = twist
        self.twist_inv = twist_inv
        if twist is not None:
            if twist_inv is None:
                raise ValueError("a twisted generator needs the inverse twist map")
            for v in range(ring.nvars):
                x = RatFunc.of(ring.var(v))
                if x.substitute(twist).substitute(twist_inv) != x:
                    raise ValueError("twist and inverse twist do not compose to "
                                     "the identity on %s" % ring.names[v])
        self.kind = kind or ("skew" if twist is not None else "primitive")
        self._mono_cache = {}
        self._zero = RatFunc.of(ring.zero)

    def value_of(self, i):
        return self.values.get(i, self._zero)

    def twist_act(self, rf):
        if self.twist is None:
            return RatFunc.of(rf)
        return RatFunc.of(rf).substitute(self.twist)

    def twist_inv_act(self, rf):
        if self.twist is None:
            return RatFunc.of(rf)
        return RatFunc.of(rf).substitute(self.twist_inv)

    def act(self, value):
        """The (twisted) derivation applied to a Poly or RatFunc."""
        rf = RatFunc.of(value)
        if rf.is_in_lattice():
            return self._act_poly(rf.num)
        num, den = rf.num, rf.den
        # E(n/d) = (E(n) - (gamma(n/d)) E(d)) / d
        gn_over_d = self.twist_act(rf)
        return (self._act_poly(num) - gn_over_d * self._act_poly(den)) / RatFunc.of(den)

    def _act_poly(self, poly):
        out = RatFunc.of(self.ring.zero)
        for e, c in poly.terms.items():
            m = self._act_monomial(e)
            if not m.is_zero():
                out = out + c * m
        return out

    def _act_monomial(self, e):
        if e in self._mono_cache:
            return self._mono_cache[e]
        ring = self.ring
        if not any(e):
            res = self._zero
        else:
            i = next(k for k, x in enumerate(e) if x)
            rest = list(e)
            if e[i] > 0:
                rest[i] -= 1
                head_val = self.value_of(i)
                head_twist = self.twist_act(RatFunc.of(ring.var(i)))
            else:
                rest[i] += 1
                xi_inv = RatFunc.of(ring.monomial(
                    tuple(-1 if j == i else 0 for j in range(ring.nvars))))
                gxi = self.twist_act(RatFunc.of(ring.var(i)))
                head_val = -(gxi.inverse() * self.value_of(i) * xi_inv)
                head_twist = gxi.inverse()
            rest = tuple(rest)
            rest_rf = RatFunc.of(ring.monomial(rest))
            res = head_val * rest_rf + head_twist * self._act_monomial(rest)
        self._mono_cache[e] = res
        return res


class Setting:
    """A concrete (coideal subalgebra, lattice) pair with all action data.

    Group elements are indexed 0..size-1 with index 0 the identity;
    ``group_subs[i]`` is the substitution map of element i on the main
    variables.  ``monoid_vars`` lists which variable each shift coordinate
    translates by +1; ``monoid_perm[i]`` says how conjugation by element i
    permutes shift coordinates.  ``conj_table[i][g]`` expands
    w_i * E_g * w_i^{-1} in the generator span.
    """

    def __init__(self, ring, name="setting",
                 group_mult=None, group_inv=None, group_subs=None, group_names=None,
                 monoid_vars=(), monoid_signed=True, monoid_perm=None,
                 inf_gens=(), conj_table=None, meta=None):
        self.ring = ring
        self.name = name
        if group_mult is None:
            group_mult = [[0]]
            group_inv = [0]
            group_subs = [{}]
            group_names = ["e"]
        self.group_mult = group_mult
        self.group_inv = group_inv
        self.group_subs = group_subs
        self.group_names = group_names
        self.group_size = len(group_mult)
        if self.group_size > 10 ** 4:
            raise ValueError("group too large to enumerate")
        self.monoid_vars = tuple(monoid_vars)
        self.monoid_rank = len(self.monoid_vars)
        self.monoid_signed = monoid_signed
        if monoid_perm is None:
            monoid_perm = [tuple(range(self.monoid_rank))] * self.group_size
        self.monoid_perm = monoid_perm
        self.inf_gens = list(inf_gens)
        for a, b in zip(self.inf_gens, self.inf_gens[1:]):
            if a.twist is not None and b.twist is not None and a.twist != b.twist:
                raise ValueError(
                    "two skew generators with distinct twists are not supported")
        self.conj_table = conj_table or {}
        self.meta = meta or {}
        self._conj_mono_cache = {}
        self._zero_mu = (0,) * self.monoid_rank
        self._zero_alpha = (0,) * len(self.inf_gens)

    # -- group parts ------------------------------------------------------

    def identity_gp(self):
        return GroupPart(0, self._zero_mu)

    def gp(self, w=0, mu=None):
        return GroupPart(w, tuple(mu) if mu is not None else self._zero_mu)

    def gp_mul(self, a, b):
        w = self.group_mult[a.w][b.w]
        perm = self.monoid_perm[self.group_inv[b.w]]
        mu = tuple(a.mu[perm[i]] + b.mu[i] for i in range(self.monoid_rank))
        return GroupPart(w, mu)

    def gp_inv(self, a):
        if not self.monoid_signed and any(a.mu):
            raise ValueError("shift part is not invertible in this monoid")
        wi = self.group_inv[a.w]
        perm = self.monoid_perm[a.w]
        mu = tuple(-a.mu[perm[i]] for i in range(self.monoid_rank))
        return GroupPart(wi, mu)

    def gp_is_identity(self, a):
        return a.w == 0 and not any(a.mu)

    def gp_act(self, a, value):
        """(w, mu) |> f, applied as w after mu."""
        rf = RatFunc.of(value)
        if any(a.mu):
            imgs = {}
            for j, v in enumerate(self.monoid_vars):
                if a.mu[j]:
                    imgs[v] = RatFunc.of(self.ring.var(v) + self.ring.const(a.mu[j]))
            rf = rf.substitute(imgs)
        if a.w:
            rf = rf.substitute(self.group_subs[a.w])
        return rf

    def gp_name(self, a):
        parts = []
        if a.w or not any(a.mu):
            parts.append(self.group_names[a.w])
        if any(a.mu):
            parts.append("tau%s" % (a.mu,))
        return "*".join(parts)

    # -- infinitesimal conjugation -----------------------------------------

    def conj_gen(self, w, g):
        """w * E_g * w^{-1} as [(coeff, gen index)]."""
        if w == 0:
            return [(self.ring.params.one, g)]
        try:
            return self.conj_table[w][g]
        except (KeyError, IndexError):
            raise ValueError(
                "no conjugation rule for group element %s on generator %s"
                % (self.group_names[w], self.inf_gens[g].name))

    def conj_monomial(self, w, alpha):
        """w * E^alpha * w^{-1} expanded, as {beta: ParamElem}."""
        key = (w, alpha)
        if key in self._conj_mono_cache:
            return self._conj_mono_cache[key]
        ngen = len(self.inf_gens)
        out = {(0,) * ngen: self.ring.params.one}
        for g, power in enumerate(alpha):
            lin = self.conj_gen(w, g)
            for _ in range(power):
                nxt = {}
                for beta, c in out.items():
                    for cc, g2 in lin:
                        nb = tuple(x + (1 if k == g2 else 0) for k, x in enumerate(beta))
                        p = c * cc
                        if nb in nxt:
                            s = nxt[nb] + p
                            if s.is_zero():
                                del nxt[nb]
                            else:
                                nxt[nb] = s
                        elif not p.is_zero():
                            nxt[nb] = p
                out = nxt
        self._conj_mono_cache[key] = out
        return out

    # -- elements -----------------------------------------------------------

    def zero(self):
        return SmashElement(self, {})

    def one(self):
        return SmashElement(self, {(self.identity_gp(), self._zero_alpha):
                                   RatFunc.of(self.ring.one)})

    def from_ratfunc(self, value):
        rf = RatFunc.of(value)
        if rf.is_zero():
            return self.zero()
        return SmashElement(self, {(self.identity_gp(), self._zero_alpha): rf})

    def from_const(self, c):
        return self.from_ratfunc(RatFunc.of(self.ring.const(c)))

    def group_element(self, w=0, mu=None):
        gp = self.gp(w, mu)
        return SmashElement(self, {(gp, self._zero_alpha): RatFunc.of(self.ring.one)})

    def inf_element(self, g, power=1):
        alpha = tuple(power if k == g else 0 for k in range(len(self.inf_gens)))
        return SmashElement(self, {(self.identity_gp(), alpha): RatFunc.of(self.ring.one)})

    def inf_by_name(self, name, power=1):
        for g, gen in enumerate(self.inf_gens):
            if gen.name == name:
                return self.inf_element(g, power)
        raise KeyError(name)

    def symmetrizing_idempotent(self):
        inv = self.ring.params.from_fraction(Fraction(1, self.group_size))
        terms = {}
        for w in range(self.group_size):
            terms[(self.gp(w), self._zero_alpha)] = RatFunc.of(self.ring.const(inv))
        return SmashElement(self, terms)

    # -- consistency --------------------------------------------------------

    def validate(self):
        """Exact spot-checks of the declared data; raises on inconsistency."""
        ring = self.ring
        n = self.group_size
        for i in range(n):
            if self.group_mult[0][i] != i or self.group_mult[i][0] != i:
                raise ValueError("group identity is broken")
            if self.group_mult[i][self.group_inv[i]] != 0:
                raise ValueError("group inverses are broken")
        pairs = [(i, j) for i in range(n) for j in range(n)]
        if len(pairs) > 64:
            pairs = pairs[:32] + pairs[-32:]
        for i, j in pairs:
            k = self.group_mult[i][j]
            for v in range(ring.nvars):
                x = RatFunc.of(ring.var(v))
                lhs = self.gp_act(self.gp(i), self.gp_act(self.gp(j), x))
                rhs = self.gp_act(self.gp(k), x)
                if lhs != rhs:
                    raise ValueError("substitution maps are not a homomorphism")
        for w in range(1, n):
            for g in range(len(self.inf_gens)):
                if not self.conj_table:
                    break
                rule = self.conj_gen(w, g)
                gen = self.inf_gens[g]
                winv = self.gp(self.group_inv[w])
                wgp = self.gp(w)
                for v in range(ring.nvars):
                    x = RatFunc.of(ring.var(v))
                    lhs = self.gp_act(wgp, gen.act(self.gp_act(winv, x)))
                    rhs = RatFunc.of(ring.zero)
                    for c, g2 in rule:
                        rhs = rhs + c * self.inf_gens[g2].act(x)
                    if lhs != rhs:
                        raise ValueError(
                            "conjugation table is wrong at %s, %s"
                            % (self.group_names[w], gen.name))
        # cross-relation consistency: a small associativity sample
        sample = [self.one(), self.from_ratfunc(ring.var(0))] if ring.nvars else []
        if n > 1:
            sample.append(self.group_element(1))
        if self.inf_gens:
            sample.append(self.inf_element(0))
        for x in sample:
            for y in sample:
                for z in sample:
                    if (x * y) * z != x * (y * z):
                        raise ValueError("cross relations are inconsistent")
        return True

    def __repr__(self):
        return "Setting(%s)" % self.name


class SmashElement:
    """A finite sum of coefficient * group part * infinitesimal monomial."""

    __slots__ = ("setting", "terms")

    def __init__(self, setting, terms, _clean=False):
        self.setting = setting
        if _clean:
            self.terms = terms
        else:
            self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    # -- linear structure ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SmashElement):
            if other.setting is not self.setting:
                raise ValueError("elements live in different settings")
            return other
        if isinstance(other, (RatFunc, Poly)):
            return self.setting.from_ratfunc(other)
        if isinstance(other, (int, Fraction, ParamElem)):
            return self.setting.from_const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            if k in out:
                s = out[k] + v
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
            else:
                out[k] = v
        return SmashElement(self.setting, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return SmashElement(self.setting, {k: -v for k, v in self.terms.items()},
                            _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, value):
        """Left multiplication by a coefficient (an element of L)."""
        rf = RatFunc.of(value) if not isinstance(value, (int, Fraction, ParamElem)) \
            else RatFunc.of(self.setting.ring.const(value))
        return SmashElement(self.setting, {k: rf * v for k, v in self.terms.items()})

    # -- multiplication --------------------------------------------------------

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        S = self.setting
        out = {}
        for (g1, a1), f1 in self.terms.items():
            for (g2, a2), f2 in other.terms.items():
                pushed = self._push_left(a1, f2)
                for beta, c in pushed.items():
                    conj = S.conj_monomial(S.group_inv[g2.w], beta)
                    coeff_base = f1 * S.gp_act(g1, c)
                    if coeff_base.is_zero():
                        continue
                    g = S.gp_mul(g1, g2)
                    for gamma, e in conj.items():
                        alpha = tuple(x + y for x, y in zip(gamma, a2))
                        key = (g, alpha)
                        add = coeff_base * e
                        if key in out:
                            s = out[key] + add
                            if s.is_zero():
                                del out[key]
                            else:
                                out[key] = s
                        elif not add.is_zero():
                            out[key] = add
        return SmashElement(S, out, _clean=True)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        out = self.setting.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _push_left(self, alpha, f):
        """E^alpha * f = sum c_beta * E^beta with coefficients on the left."""
        S = self.setting
        if not any(alpha):
            return {alpha: f}
        j = max(k for k, x in enumerate(alpha) if x)
        rest = tuple(x - (1 if k == j else 0) for k, x in enumerate(alpha))
        gen = S.inf_gens[j]
        out = {}
        derived = gen.act(f)
        if not derived.is_zero():
            for beta, c in self._push_left(rest, derived).items():
                if beta in out:
                    out[beta] = out[beta] + c
                else:
                    out[beta] = c
        twisted = gen.twist_act(f)
        if not twisted.is_zero():
            for beta, c in self._push_left(rest, twisted).items():
                nb = tuple(x + (1 if k == j else 0) for k, x in enumerate(beta))
                if nb in out:
                    out[nb] = out[nb] + c
                else:
                    out[nb] = c
        return {k: v for k, v in out.items() if not v.is_zero()}

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("SmashElement is not hashable")

    # -- the hat map and normal forms -------------------------------------------

    def apply(self, value):
        """The element as an operator on the fraction field."""
        S = self.setting
        rf = RatFunc.of(value)
        out = RatFunc.of(S.ring.zero)
        for (g, alpha), coeff in self.terms.items():
            cur = rf
            for j in range(len(alpha) - 1, -1, -1):
                for _ in range(alpha[j]):
                    cur = S.inf_gens[j].act(cur)
                    if cur.is_zero():
                        break
            if cur.is_zero():
                continue
            out = out + coeff * S.gp_act(g, cur)
        return out

    def right_normal_form(self):
        """Rewrite with coefficients on the right: list of (gp, alpha, coeff)."""
        S = self.setting
        collected = {}
        for (g, alpha), f in self.terms.items():
            moved = S.gp_act(S.gp_inv(g), f)
            for beta, c in self._push_right(moved, alpha).items():
                key = (g, beta)
                if key in collected:
                    s = collected[key] + c
                    if s.is_zero():
                        del collected[key]
                    else:
                        collected[key] = s
                elif not c.is_zero():
                    collected[key] = c
        return [(g, beta, c) for (g, beta), c in
                sorted(collected.items(), key=lambda kv: (kv[0][0], kv[0][1]))]

    def _push_right(self, f, alpha):
        """f * E^alpha = sum E^beta * c_beta with coefficients on the right."""
        S = self.setting
        if not any(alpha):
            return {alpha: f}
        j = next(k for k, x in enumerate(alpha) if x)
        rest = tuple(x - (1 if k == j else 0) for k, x in enumerate(alpha))
        gen = S.inf_gens[j]
        h = gen.twist_inv_act(f)
        out = {}
        for beta, c in self._push_right(h, rest).items():
            nb = tuple(x + (1 if k == j else 0) for k, x in enumerate(beta))
            if nb in out:
                out[nb] = out[nb] + c
            else:
                out[nb] = c
        dh = gen.act(h)
        if not dh.is_zero():
            for beta, c in self._push_right(-dh, rest).items():
                if beta in out:
                    out[beta] = out[beta] + c
                else:
                    out[beta] = c
        return {k: v for k, v in out.items() if not v.is_zero()}

    def expand_right_form(self, right_terms):
        """Rebuild the element from right-normal-form terms (for round trips)."""
        S = self.setting
        total = S.zero()
        for g, beta, c in right_terms:
            el = S.group_element(g.w, g.mu)
            for j, x in enumerate(beta):
                if x:
                    el = el * S.inf_element(j, x)
            total = total + el * S.from_ratfunc(c)
        return total

    def filtration_degree(self):
        if self.is_zero():
            raise ValueError("the zero element has no filtration degree")
        return max(sum(alpha) for (_, alpha) in self.terms)

    def conjugate_by(self, gp):
        """gp * X * gp^{-1}; the shift part must be invertible."""
        S = self.setting
        left = S.group_element(gp.w, gp.mu)
        right = S.group_element(*S.gp_inv(gp))
        return left * self * right

    def __str__(self):
        if not self.terms:
            return "0"
        S = self.setting
        parts = []
        for (g, alpha), c in self.sorted_terms():
            bits = []
            cs = str(c)
            if "+" in cs or "-" in cs[1:] or "/" in cs:
                cs = "(%s)" % cs
            if cs != "1" or (S.gp_is_identity(g) and not any(alpha)):
                bits.append(cs)
            if not S.gp_is_identity(g):
                bits.append(S.gp_name(g))
            for j, x in enumerate(alpha):
                if x == 1:
                    bits.append(S.inf_gens[j].name)
                elif x > 1:
                    bits.append("%s^%d" % (S.inf_gens[j].name, x))
            parts.append("*".join(bits))
        return " + ".join(parts)

    def __repr__(self):
        return "SmashElement(%s)" % self
