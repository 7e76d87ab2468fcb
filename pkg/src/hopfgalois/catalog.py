"""Constructors for the concrete settings and their distinguished operators.

Each recipe builds a validated :class:`~hopfgalois.smash.Setting`:

* ``QuantumBorel``       k[t] with one skew-primitive E, twist t -> q^-1 t
* ``RationalDifferential``  polynomials with partial derivatives and a
  finite linear group
* ``TrigonometricDifferential``  Laurent polynomials with Euler operators
  and a group of monomial substitutions
* ``OreFamily``          k[t] and the single generator p(t) d/dt
* ``ShiftFlag``          polynomials with integer translations and a
  permutation group
* ``GKVHecke``           Demazure-Lusztig operators of type A1/A2, torus
  (multiplicative) or vector-space (additive) variant
* ``Cherednik``          Dunkl operators for a finite reflection group,
  with symbolic parameters t and one c per reflection class

Reflections are detected as group elements s with rank(s - 1) = 1; their
root form alpha_s is read off the image of (s - 1) on linear forms and
normalized so its first nonzero coordinate is 1 (the Dunkl term is scale
invariant in alpha_s, so the normalization is harmless).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numberfield import NumberField
from .params import ParamField
from .polyring import Poly, PolyRing, RatFunc
from .smash import InfGenerator, Setting


# -- recipes ------------------------------------------------------------------


@dataclass(frozen=True)
class QuantumBorel:
    pass


@dataclass(frozen=True)
class RationalDifferential:
    n: int
    group: str = "trivial"


@dataclass(frozen=True)
class TrigonometricDifferential:
    n: int
    group: str = "trivial"


@dataclass(frozen=True)
class OreFamily:
    p_coeffs: tuple  # p(t) = sum p_coeffs[k] t^k


@dataclass(frozen=True)
class ShiftFlag:
    n: int
    group: str = "trivial"


@dataclass(frozen=True)
class GKVHecke:
    cartan: str = "A1"          # "A1" or "A2"
    variant: str = "multiplicative"   # or "additive"


@dataclass(frozen=True)
class Cherednik:
    n: int
    group: str = "S2"


RECIPE_INFO = {
    "quantum-borel": (QuantumBorel,
                      "k[t] with skew-primitive E: Et = 1 + q^-1 tE (quantum Weyl algebra)"),
    "rational-differential": (RationalDifferential,
                              "C[V] with partial derivatives and a finite linear group"),
    "trigonometric-differential": (TrigonometricDifferential,
                                   "Laurent polynomials with Euler operators z d/dz and monomial group"),
    "ore": (OreFamily,
            "k[t] and X = p(t) d/dt, subject to Xt - tX = p(t)"),
    "shift-flag": (ShiftFlag,
                   "k[x_1..x_n] with integer shifts x -> x + mu and a permutation group"),
    "gkv-hecke": (GKVHecke,
                  "Demazure-Lusztig operators sigma_i = q(u s_i - 1)/(u - 1) - q^-1(s_i - 1)/(u - 1)"),
    "cherednik": (Cherednik,
                  "Dunkl operators D_y = t d/dy + sum_s 2c_s/(1-lambda_s) (alpha_s,y)/alpha_s (s - 1)"),
}


# -- matrix utilities over a number field ------------------------------------


def _nf_mat_mul(nf, a, b):
    n = len(a)
    return tuple(
        tuple(
            _nf_dot(nf, a[i], [b[k][j] for k in range(n)])
            for j in range(n))
        for i in range(n))


def _nf_dot(nf, row, col):
    total = nf.zero
    for x, y in zip(row, col):
        total = nf.add(total, nf.mul(x, y))
    return total


def _nf_identity(nf, n):
    return tuple(tuple(nf.one if i == j else nf.zero for j in range(n)) for i in range(n))


def _nf_mat_inv(nf, a):
    n = len(a)
    work = [list(row) + [nf.one if i == j else nf.zero for j in range(n)]
            for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if nf.is_nonzero(work[i][c])), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[c], work[piv] = work[piv], work[c]
        inv = nf.inv(work[c][c])
        work[c] = [nf.mul(x, inv) for x in work[c]]
        for i in range(n):
            if i != c and nf.is_nonzero(work[i][c]):
                f = work[i][c]
                work[i] = [nf.sub(x, nf.mul(f, y)) for x, y in zip(work[i], work[c])]
    return tuple(tuple(row[n:]) for row in work)


def _nf_rank(nf, rows):
    work = [list(r) for r in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if nf.is_nonzero(work[i][c])), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = nf.inv(work[r][c])
        work[r] = [nf.mul(x, inv) for x in work[r]]
        for i in range(len(work)):
            if i != r and nf.is_nonzero(work[i][c]):
                f = work[i][c]
                work[i] = [nf.sub(x, nf.mul(f, y)) for x, y in zip(work[i], work[r])]
        rank += 1
        r += 1
    return rank


def _enumerate(identity, gens, gen_names, mul):
    """Closure of the generators; returns (elements, names, mult, inv)."""
    elements = [identity]
    index = {identity: 0}
    names = ["e"]
    queue = [0]
    while queue:
        i = queue.pop(0)
        for g, gname in zip(gens, gen_names):
            prod = mul(elements[i], g)
            if prod not in index:
                index[prod] = len(elements)
                elements.append(prod)
                names.append(gname if i == 0 else names[i] + "*" + gname)
                queue.append(index[prod])
                if len(elements) > 10 ** 4:
                    raise ValueError("group generators do not close at desk scale")
    size = len(elements)
    mult = [[index[mul(elements[i], elements[j])] for j in range(size)]
            for i in range(size)]
    inv = [0] * size
    for i in range(size):
        inv[i] = next(j for j in range(size) if mult[i][j] == 0)
    return elements, names, mult, inv


# -- named linear groups -------------------------------------------------------


def named_group(name, n):
    """(number_field, generator matrices, generator names) for a group name.

    Names: ``trivial``, ``Z<l>`` (cyclic, scaling the first coordinate by a
    primitive l-th root of unity), ``S<k>`` (permutations; requires k = n).
    """
    name = name.strip()
    if name == "trivial":
        return NumberField.rationals(), [], []
    if name.upper().startswith("Z"):
        order = int(name[1:])
        if order < 2:
            return NumberField.rationals(), [], []
        if order == 2:
            nf = NumberField.rationals()
            zeta = (Fraction(-1),)
        else:
            nf = NumberField.cyclotomic(order)
            zeta = nf.gen()
        mat = tuple(tuple(zeta if i == j == 0 else (nf.one if i == j else nf.zero)
                          for j in range(n)) for i in range(n))
        return nf, [mat], ["g"]
    if name.upper().startswith("S"):
        k = int(name[1:])
        if k != n:
            raise ValueError("S%d needs exactly %d variables" % (k, k))
        nf = NumberField.rationals()
        gens = []
        names = []
        for i in range(n - 1):
            perm = list(range(n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            mat = tuple(tuple(nf.one if r == perm[c] else nf.zero for c in range(n))
                        for r in range(n))
            gens.append(mat)
            names.append("s%d" % (i + 1))
        return nf, gens, names
    raise ValueError("unknown group name %r" % name)


def _linear_group_setting(n, group_name, params=(), nf=None, var_prefix="x",
                          with_partials=True, setting_name="setting"):
    """Shared builder: k[x_1..x_n] with a finite linear group acting."""
    gnf, gens, gnames = named_group(group_name, n)
    if nf is None:
        nf = gnf
    elif gnf.degree > 1 and gnf != nf:
        raise ValueError("group needs the extension %r" % gnf)
    identity = _nf_identity(nf, n)
    elements, names, mult, inv = _enumerate(
        identity, gens, gnames, lambda a, b: _nf_mat_mul(nf, a, b))
    pf = ParamField(params, nf)
    ring = PolyRing(tuple("%s%d" % (var_prefix, i + 1) for i in range(n)), params=pf)

    subs = []
    for i, _ in enumerate(elements):
        minv = elements[inv[i]]
        images = {}
        for v in range(n):
            images[v] = RatFunc.of(ring.linear([pf.from_nf(minv[v][j]) for j in range(n)]))
        subs.append(images if i else {})

    inf_gens = []
    conj = {}
    if with_partials:
        for v in range(n):
            inf_gens.append(InfGenerator("d%d" % (v + 1), ring, {v: ring.one}))
        for i in range(1, len(elements)):
            m = elements[i]
            conj[i] = {g: [(pf.from_nf(m[j][g]), j) for j in range(n)
                           if nf.is_nonzero(m[j][g])]
                       for g in range(n)}

    setting = Setting(ring, name=setting_name,
                      group_mult=mult, group_inv=inv, group_subs=subs,
                      group_names=names, inf_gens=inf_gens, conj_table=conj,
                      meta={"matrices": elements, "nf": nf})
    return setting


# -- the recipes ----------------------------------------------------------------


def build_setting(recipe):
    if isinstance(recipe, QuantumBorel):
        return _build_quantum_borel()
    if isinstance(recipe, RationalDifferential):
        return _linear_group_setting(recipe.n, recipe.group,
                                     setting_name="rational-differential")
    if isinstance(recipe, TrigonometricDifferential):
        return _build_trigonometric(recipe)
    if isinstance(recipe, OreFamily):
        return _build_ore(recipe)
    if isinstance(recipe, ShiftFlag):
        return _build_shift_flag(recipe)
    if isinstance(recipe, GKVHecke):
        return _build_gkv(recipe)
    if isinstance(recipe, Cherednik):
        return _build_cherednik(recipe)
    raise TypeError("unknown recipe %r" % (recipe,))


def _build_quantum_borel():
    pf = ParamField(("q",))
    ring = PolyRing(("t",), params=pf)
    q = pf.param("q")
    E = InfGenerator("E", ring, {0: ring.one},
                     twist={0: RatFunc.of(ring.var(0) * (q ** -1))},
                     twist_inv={0: RatFunc.of(ring.var(0) * q)})
    return Setting(ring, name="quantum-borel", inf_gens=[E],
                   meta={"q": q})


def _build_ore(recipe):
    pf = ParamField(())
    ring = PolyRing(("t",), params=pf)
    p = ring.zero
    for k, c in enumerate(recipe.p_coeffs):
        p = p + ring.monomial((k,), pf.from_fraction(c))
    if p.is_zero():
        raise ValueError("the Ore polynomial p must be nonzero")
    D = InfGenerator("d", ring, {0: ring.one})
    return Setting(ring, name="ore", inf_gens=[D], meta={"p": p})


def _build_shift_flag(recipe):
    setting = _linear_group_setting(recipe.n, recipe.group, with_partials=False,
                                    setting_name="shift-flag")
    ring = setting.ring
    n = recipe.n
    # shifts translate every variable; conjugation permutes coordinates
    perms = []
    for i in range(setting.group_size):
        winv = setting.gp(setting.group_inv[i])
        perm = []
        for v in range(n):
            img = setting.gp_act(winv, RatFunc.of(ring.var(v)))
            target = None
            for u in range(n):
                if img == RatFunc.of(ring.var(u)):
                    target = u
                    break
            if target is None:
                raise ValueError("group does not normalize the shift monoid")
            perm.append(target)
        perms.append(tuple(perm))
    return Setting(ring, name="shift-flag",
                   group_mult=setting.group_mult, group_inv=setting.group_inv,
                   group_subs=setting.group_subs, group_names=setting.group_names,
                   monoid_vars=tuple(range(n)), monoid_signed=True,
                   monoid_perm=perms, meta=setting.meta)


def _build_trigonometric(recipe):
    nf = NumberField.rationals()
    pf = ParamField((), nf)
    ring = PolyRing(tuple("z%d" % (i + 1) for i in range(recipe.n)),
                    laurent=(True,) * recipe.n, params=pf)
    n = recipe.n
    gens, gnames = _monomial_group_gens(recipe.group, n)
    identity = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    elements, names, mult, inv = _enumerate(identity, gens, gnames, _int_mat_mul)
    subs, conj = _monomial_subs_and_conj(ring, elements, inv)
    inf_gens = [InfGenerator("th%d" % (v + 1), ring, {v: ring.var(v)})
                for v in range(n)]
    return Setting(ring, name="trigonometric-differential",
                   group_mult=mult, group_inv=inv, group_subs=subs,
                   group_names=names, inf_gens=inf_gens, conj_table=conj,
                   meta={"exponent_matrices": elements})


def _monomial_group_gens(name, n):
    name = name.strip()
    if name == "trivial":
        return [], []
    if name == "inversion":
        return [tuple(tuple(-1 if i == j else 0 for j in range(n)) for i in range(n))], ["w"]
    if name.upper().startswith("S"):
        k = int(name[1:])
        if k != n:
            raise ValueError("S%d needs exactly %d torus coordinates" % (k, k))
        gens, names = [], []
        for i in range(n - 1):
            perm = list(range(n))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            gens.append(tuple(tuple(1 if r == perm[c] else 0 for c in range(n))
                              for r in range(n)))
            names.append("s%d" % (i + 1))
        return gens, names
    raise ValueError("unknown monomial group %r" % name)


def _int_mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                 for i in range(n))


def _int_mat_inv(a):
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(a)]
    for c in range(n):
        piv = next(i for i in range(c, n) if work[i][c])
        work[c], work[piv] = work[piv], work[c]
        pv = work[c][c]
        work[c] = [x / pv for x in work[c]]
        for i in range(n):
            if i != c and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    out = []
    for row in work:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ValueError("exponent matrix is not invertible over the integers")
        out.append(tuple(int(v) for v in vals))
    return tuple(out)


def _monomial_subs_and_conj(ring, elements, inv):
    """Substitutions z_i -> z^(column i of A) and Euler conjugation rows of A^-1."""
    pf = ring.params
    n = ring.nvars
    subs = []
    conj = {}
    for i, _ in enumerate(elements):
        if i == 0:
            subs.append({})
            continue
        a = elements[i]
        images = {}
        for v in range(n):
            col = tuple(a[r][v] for r in range(n))
            images[v] = RatFunc.of(ring.monomial(col))
        subs.append(images)
        ainv = _int_mat_inv(a)
        conj[i] = {g: [(pf.from_fraction(ainv[g][j]), j) for j in range(n) if ainv[g][j]]
                   for g in range(n)}
    return subs, conj


# Cartan data for the two hard-coded types: simple roots in the basis of
# fundamental (co)weights, and the reflection matrices they induce.
_CARTAN = {
    "A1": {"rank": 1, "cartan": ((2,),)},
    "A2": {"rank": 2, "cartan": ((2, -1), (-1, 2))},
}


def _build_gkv(recipe):
    if recipe.cartan not in _CARTAN:
        raise ValueError("unsupported Cartan type %r" % recipe.cartan)
    if recipe.variant not in ("multiplicative", "additive"):
        raise ValueError("variant must be multiplicative or additive")
    data = _CARTAN[recipe.cartan]
    n = data["rank"]
    A = data["cartan"]
    pf = ParamField(("q",))
    if recipe.variant == "multiplicative":
        ring = PolyRing(tuple("z%d" % (i + 1) for i in range(n)),
                        laurent=(True,) * n, params=pf)
        # s_i on the weight lattice: omega_j -> omega_j - delta_ij alpha_i
        gens = []
        for i in range(n):
            cols = []
            for j in range(n):
                col = [1 if r == j else 0 for r in range(n)]
                if j == i:
                    col = [col[r] - A[i][r] for r in range(n)]
                cols.append(col)
            gens.append(tuple(tuple(cols[c][r] for c in range(n)) for r in range(n)))
        gnames = ["s%d" % (i + 1) for i in range(n)]
        identity = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        elements, names, mult, inv = _enumerate(identity, gens, gnames, _int_mat_mul)
        subs, _ = _monomial_subs_and_conj(ring, elements, inv)
        u_polys = [ring.monomial(tuple(A[i][j] for j in range(n))) for i in range(n)]
        gen_idx = [elements.index(g) for g in gens]
        setting = Setting(ring, name="gkv-hecke-%s-mult" % recipe.cartan,
                          group_mult=mult, group_inv=inv, group_subs=subs,
                          group_names=names,
                          meta={"variant": "multiplicative"})
    else:
        nf = NumberField.rationals()
        gens = []
        for i in range(n):
            # s_i on the coweight basis: e_j -> e_j - <e_j, alpha_i> e_i... via Cartan
            mat = [[Fraction(1 if r == c else 0) for c in range(n)] for r in range(n)]
            for c in range(n):
                mat[i][c] -= A[c][i]
            m = tuple(tuple(nf.from_fraction(x) for x in row) for row in mat)
            gens.append(m)
        gnames = ["s%d" % (i + 1) for i in range(n)]
        identity = _nf_identity(nf, n)
        elements, names, mult, inv = _enumerate(
            identity, gens, gnames, lambda a, b: _nf_mat_mul(nf, a, b))
        ring = PolyRing(tuple("x%d" % (i + 1) for i in range(n)), params=pf)
        subs = []
        for i, _ in enumerate(elements):
            minv = elements[inv[i]]
            images = {v: RatFunc.of(ring.linear([pf.from_nf(minv[v][j]) for j in range(n)]))
                      for v in range(n)}
            subs.append(images if i else {})
        u_polys = [ring.linear([Fraction(A[i][j]) for j in range(n)], constant=1)
                   for i in range(n)]
        gen_idx = [elements.index(g) for g in gens]
        setting = Setting(ring, name="gkv-hecke-%s-add" % recipe.cartan,
                          group_mult=mult, group_inv=inv, group_subs=subs,
                          group_names=names,
                          meta={"variant": "additive"})
    setting.meta.update({
        "q": pf.param("q"),
        "hecke_u": u_polys,
        "simple_reflections": gen_idx,
        "rank": n,
    })
    return setting


def _build_cherednik(recipe):
    gnf, gens, gnames = named_group(recipe.group, recipe.n)
    nf = gnf
    n = recipe.n
    identity = _nf_identity(nf, n)
    elements, names, mult, inv = _enumerate(
        identity, gens, gnames, lambda a, b: _nf_mat_mul(nf, a, b))

    # reflections: rank(s - 1) = 1
    refl = []
    for i in range(1, len(elements)):
        m = elements[i]
        delta = [[nf.sub(m[r][c], nf.one if r == c else nf.zero) for c in range(n)]
                 for r in range(n)]
        if _nf_rank(nf, delta) == 1:
            refl.append(i)
    # conjugacy classes among reflections
    classes = []
    assigned = {}
    for s in refl:
        if s in assigned:
            continue
        orbit = sorted({mult[mult[g][s]][inv[g]] for g in range(len(elements))})
        cls = len(classes)
        classes.append(orbit)
        for x in orbit:
            if x not in refl:
                raise ValueError("reflection class escapes the reflection set")
            assigned[x] = cls

    params = ("t",) + (("c",) if len(classes) == 1 else
                       tuple("c%d" % (k + 1) for k in range(len(classes))))
    pf = ParamField(params, nf)
    ring = PolyRing(tuple("x%d" % (i + 1) for i in range(n)), params=pf)

    subs = []
    for i, _ in enumerate(elements):
        minv = elements[inv[i]]
        images = {v: RatFunc.of(ring.linear([pf.from_nf(minv[v][j]) for j in range(n)]))
                  for v in range(n)}
        subs.append(images if i else {})
    inf_gens = [InfGenerator("d%d" % (v + 1), ring, {v: ring.one}) for v in range(n)]
    conj = {}
    for i in range(1, len(elements)):
        m = elements[i]
        conj[i] = {g: [(pf.from_nf(m[j][g]), j) for j in range(n) if nf.is_nonzero(m[j][g])]
                   for g in range(n)}

    # per-reflection data: alpha_s, lambda_s, and the class index
    refl_data = []
    for s in refl:
        m = elements[s]
        minv = elements[inv[s]]
        c_mat = [[minv[c][r] for c in range(n)] for r in range(n)]  # transpose of inverse
        col = None
        for j in range(n):
            column = [nf.sub(c_mat[r][j], nf.one if r == j else nf.zero) for r in range(n)]
            if any(nf.is_nonzero(x) for x in column):
                col = column
                break
        lead = next(x for x in col if nf.is_nonzero(x))
        leadinv = nf.inv(lead)
        alpha_coeffs = [nf.mul(x, leadinv) for x in col]
        lam = nf.sub(_nf_trace(nf, c_mat), nf.from_int(n - 1))
        if lam == nf.one:
            raise ValueError("detected reflection with eigenvalue 1")
        refl_data.append({
            "element": s,
            "alpha_coeffs": alpha_coeffs,
            "alpha": ring.linear([pf.from_nf(x) for x in alpha_coeffs]),
            "lambda": lam,
            "class": assigned[s],
        })

    setting = Setting(ring, name="cherednik-%s" % recipe.group,
                      group_mult=mult, group_inv=inv, group_subs=subs,
                      group_names=names, inf_gens=inf_gens, conj_table=conj,
                      meta={"matrices": elements, "nf": nf,
                            "reflections": refl_data,
                            "n_classes": len(classes)})
    return setting


def _nf_trace(nf, mat):
    total = nf.zero
    for i, row in enumerate(mat):
        total = nf.add(total, row[i])
    return total


# -- distinguished operators -----------------------------------------------------


def dunkl_operator(setting, direction):
    """D_y for the basis direction y = e_direction of a Cherednik setting."""
    if "reflections" not in setting.meta:
        raise ValueError("not a Cherednik setting")
    ring = setting.ring
    pf = ring.params
    nf = pf.nf
    t = pf.param("t")
    nclasses = setting.meta["n_classes"]
    cs = [pf.param("c")] if nclasses == 1 else \
        [pf.param("c%d" % (k + 1)) for k in range(nclasses)]
    out = setting.inf_element(direction).scale(RatFunc.of(ring.const(t)))
    for data in setting.meta["reflections"]:
        pairing = data["alpha_coeffs"][direction]
        if not nf.is_nonzero(pairing):
            continue
        lam = data["lambda"]
        factor = pf.from_nf(nf.div(nf.add(pairing, pairing), nf.sub(nf.one, lam)))
        coeff = RatFunc.of(ring.const(cs[data["class"]] * factor)) / RatFunc.of(data["alpha"])
        s_el = setting.group_element(data["element"])
        out = out + (s_el - setting.one()).scale(coeff)
    return out


def demazure_lusztig(setting, i):
    """sigma_i in a GKV Hecke setting (either variant)."""
    if "hecke_u" not in setting.meta:
        raise ValueError("not a GKV Hecke setting")
    ring = setting.ring
    q = setting.meta["q"]
    u = RatFunc.of(setting.meta["hecke_u"][i])
    s = setting.group_element(setting.meta["simple_reflections"][i])
    qrf = RatFunc.of(ring.const(q))
    qinv = RatFunc.of(ring.const(q ** -1))
    one = RatFunc.of(ring.one)
    denom = u - one
    a = (qrf * u - qinv) / denom
    b = (qinv - qrf) / denom
    return s.scale(a) + setting.from_ratfunc(b)


def ore_generator(setting):
    """X = p(t) d/dt in an Ore family setting."""
    if "p" not in setting.meta:
        raise ValueError("not an Ore setting")
    return setting.inf_element(0).scale(RatFunc.of(setting.meta["p"]))


def quantum_borel_E(setting):
    if setting.name != "quantum-borel":
        raise ValueError("not the quantum Borel setting")
    return setting.inf_by_name("E")


def standard_generators(setting):
    """A presentation of the natural order in each catalog setting:
    the lattice variables plus the distinguished operators and group
    elements.  Used by the verification drivers."""
    ring = setting.ring
    gens = [("%s" % ring.names[v], setting.from_ratfunc(ring.var(v)))
            for v in range(ring.nvars)]
    for w in range(1, setting.group_size):
        gens.append((setting.group_names[w], setting.group_element(w)))
    name = setting.name
    if name == "quantum-borel":
        gens.append(("E", setting.inf_by_name("E")))
    elif name == "ore":
        gens.append(("X", ore_generator(setting)))
    elif "reflections" in setting.meta:
        for v in range(ring.nvars):
            gens.append(("D%d" % (v + 1), dunkl_operator(setting, v)))
    elif "hecke_u" in setting.meta:
        for i in range(setting.meta["rank"]):
            gens.append(("sigma%d" % (i + 1), demazure_lusztig(setting, i)))
    elif name == "rational-differential":
        for v in range(ring.nvars):
            gens.append(("d%d" % (v + 1), setting.inf_element(v)))
    elif name == "trigonometric-differential":
        for v in range(ring.nvars):
            gens.append(("th%d" % (v + 1), setting.inf_element(v)))
    elif name == "shift-flag":
        for j in range(setting.monoid_rank):
            mu = tuple(1 if k == j else 0 for k in range(setting.monoid_rank))
            gens.append(("tau%d" % (j + 1), setting.group_element(0, mu)))
            mu = tuple(-1 if k == j else 0 for k in range(setting.monoid_rank))
            gens.append(("tau%d^-1" % (j + 1), setting.group_element(0, mu)))
    return gens
