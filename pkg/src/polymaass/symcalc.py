"""Exact formal calculus of weight-graded forms.

A Form is a finite linear combination of tensor atoms

    e_{r,m-r} (x) S

where e_{r,m-r} is a polynomial-valued vector of weight m-2r and S is a
spectral atom: a derivative coefficient of a named spectral family
(Eisenstein, Poincare, incoherent Eisenstein, or the constant function)
at a rational spectral point, optionally with a pending power of the
lowering or raising operator still to be unfolded.

Spectral atom semantics. An expanded atom with family weight w, point P
and derivative index t >= 0 denotes the function

    (d/du)^t [ Phi_w(. , P + u) ] at u = 0,

with Phi the family member of weight w in the global spectral parameter.
Reparametrized families (running the parameter backwards) are expressed
through the same atoms; the sign (-1)^t is folded into coefficients when
such a family is sampled.  Index t = -1 denotes the formal residue
coefficient and only appears transiently: it is immediately resolved
through the pole table (default: the weight-0 Eisenstein family has a
simple pole at the point 1 with residue 3/pi times the constant
function) or dropped when the family is regular there.

Distinct expanded atoms are treated as linearly independent; zero tests
are structural after normalization and pole substitution.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple

from .scalars import Scalar, ZERO, ONE


class DomainError(ValueError):
    """Raised when an operation's precondition is violated."""


class PolePointWarning(UserWarning):
    """A shifted atom landed on a tabled pole point (Laurent coefficients
    of the continued family are used formally)."""


# ---------------------------------------------------------------------------
# atoms


@dataclass(frozen=True)
class PolyAtom:
    """The vector e_{r,m-r} spanning Pol_m, of weight m-2r."""

    m: int
    r: int

    def __post_init__(self):
        if self.m < 0 or not (0 <= self.r <= self.m):
            raise DomainError("e-atom index out of range: m=%d, r=%d" % (self.m, self.r))

    @property
    def weight(self) -> int:
        return self.m - 2 * self.r

    def __repr__(self):
        return "e_{%d,%d}" % (self.r, self.m - self.r)


E00 = PolyAtom(0, 0)

EISENSTEIN = "eisenstein"
POINCARE = "poincare"
INCOHERENT = "incoherent"
CONSTANT = "constant"


@dataclass(frozen=True)
class Family:
    """Identity of a spectral family (without weight or point)."""

    kind: str
    index: Optional[int] = None       # Poincare index n != 0
    disc: Optional[int] = None        # incoherent discriminant D
    character: Optional[str] = None   # Eisenstein character twist tag

    def __post_init__(self):
        if self.kind not in (EISENSTEIN, POINCARE, INCOHERENT, CONSTANT):
            raise DomainError("unknown family kind %r" % (self.kind,))
        if self.kind == POINCARE and (self.index is None or self.index == 0):
            raise DomainError("Poincare family needs a nonzero index")
        if self.kind == INCOHERENT and self.disc is None:
            raise DomainError("incoherent family needs a discriminant")

    def is_eisenstein_like(self) -> bool:
        return self.kind in (EISENSTEIN, INCOHERENT)

    def __repr__(self):
        if self.kind == POINCARE:
            return "P[n=%d]" % self.index
        if self.kind == INCOHERENT:
            return "E-[D=%d]" % self.disc
        if self.kind == CONSTANT:
            return "const"
        return "E" if self.character is None else "E[%s]" % self.character


CONST_FAMILY = Family(CONSTANT)


@dataclass(frozen=True)
class SpectralAtom:
    family: Family
    weight: int
    point: Fraction
    laurent: int
    pending: Optional[Tuple[str, int]] = None   # ("L", a) or ("R", a), a >= 1

    def __post_init__(self):
        if self.laurent < -1:
            raise DomainError("pole order capped at 1 (laurent index %d)" % self.laurent)
        if self.pending is not None:
            d, a = self.pending
            if d not in ("L", "R") or a < 1:
                raise DomainError("malformed pending operator %r" % (self.pending,))

    @property
    def effective_weight(self) -> int:
        w = self.weight
        if self.pending is not None:
            d, a = self.pending
            w += -2 * a if d == "L" else 2 * a
        return w

    def __repr__(self):
        core = "%r^(%d)_{%d,%s}" % (self.family, self.laurent, self.weight, self.point)
        if self.pending is not None:
            core = "%s^%d %s" % (self.pending[0], self.pending[1], core)
        return core


CONST_ATOM = SpectralAtom(CONST_FAMILY, 0, Fraction(0), 0)


# ---------------------------------------------------------------------------
# pole table and vanishing orders

# keyed by (family, weight, point) -> residue Form (weight must match,
# polynomial parts must be e_{0,0} so residues tensor into any term)
_POLE_TABLE: Dict[Tuple[Family, int, Fraction], "Form"] = {}


def default_pole_table() -> Dict[Tuple[Family, int, Fraction], "Form"]:
    res = Form(0, {(E00, CONST_ATOM): Scalar.pi_power(-1, 3)})
    return {(Family(EISENSTEIN), 0, Fraction(1)): res}


def set_pole_table(table) -> None:
    global _POLE_TABLE
    for (fam, w, p), form in table.items():
        if form.weight != w:
            raise DomainError("pole residue weight mismatch at %r" % ((fam, w, p),))
        for (e, _a), _c in form.terms:
            if e != E00:
                raise DomainError("pole residues must have trivial polynomial part")
    _POLE_TABLE = dict(table)


def load_pole_table(path: str) -> None:
    with open(path) as fh:
        data = json.load(fh)
    table = {}
    for entry in data:
        fam = _family_from_json(entry["family"])
        key = (fam, int(entry["weight"]), Fraction(entry["point"]))
        if int(entry.get("order", 1)) != 1:
            raise DomainError("pole order capped at 1")
        table[key] = form_from_json(entry["residue_form"])
    set_pole_table(table)


def _residue_of(family: Family, weight: int, point: Fraction) -> Optional["Form"]:
    return _POLE_TABLE.get((family, weight, point))


def _is_pole_point(family: Family, weight: int, point: Fraction) -> bool:
    return (family, weight, point) in _POLE_TABLE


def vanishing_order(family: Family, weight: int, point: Fraction) -> int:
    """Known order of vanishing of the family member at the point."""
    if family.kind == INCOHERENT and weight == 1 and point == 0:
        return 1
    return 0


def _mk_atom(family: Family, weight: int, point: Fraction, laurent: int,
             pending=None) -> Optional[SpectralAtom]:
    """Create an expanded atom, returning None when it is structurally zero."""
    if laurent < vanishing_order(family, weight, point):
        return None
    if laurent >= 0 and pending is None and _is_pole_point(family, weight, point):
        warnings.warn(
            "atom at tabled pole point (weight %d, point %s); using Laurent "
            "coefficients of the continued family" % (weight, point),
            PolePointWarning, stacklevel=3)
    return SpectralAtom(family, weight, point, laurent, pending)


# ---------------------------------------------------------------------------
# forms


class Form:
    """Weight-homogeneous exact linear combination of tensor atoms."""

    __slots__ = ("weight", "_terms")

    def __init__(self, weight: int, terms: Dict[Tuple[PolyAtom, SpectralAtom], Scalar] | None = None):
        self.weight = int(weight)
        clean: Dict[Tuple[PolyAtom, SpectralAtom], Scalar] = {}
        for key, coeff in (terms or {}).items():
            if coeff.is_zero():
                continue
            e, a = key
            if e.weight + a.effective_weight != self.weight:
                raise DomainError(
                    "term weight %d+%d does not match form weight %d"
                    % (e.weight, a.effective_weight, self.weight))
            clean[key] = coeff
        self._terms = clean

    @property
    def terms(self):
        return self._terms.items()

    def coeff(self, e: PolyAtom, a: SpectralAtom) -> Scalar:
        return self._terms.get((e, a), ZERO)

    def is_empty(self) -> bool:
        return not self._terms

    def __add__(self, other: "Form") -> "Form":
        if self.is_empty():
            return other
        if other.is_empty():
            return self
        if self.weight != other.weight:
            raise DomainError("cannot add forms of weights %d and %d" % (self.weight, other.weight))
        acc = dict(self._terms)
        for key, c in other._terms.items():
            acc[key] = acc.get(key, ZERO) + c
        return Form(self.weight, acc)

    def __neg__(self) -> "Form":
        return Form(self.weight, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __mul__(self, s) -> "Form":
        if isinstance(s, (int, Fraction)):
            s = Scalar.from_rational(s)
        if not isinstance(s, Scalar):
            return NotImplemented
        return Form(self.weight, {k: c * s for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        if self.is_empty() and other.is_empty():
            return True
        return self.weight == other.weight and self._terms == other._terms

    def __hash__(self):
        return hash((self.weight, frozenset(self._terms.items())))

    def __repr__(self):
        if self.is_empty():
            return "Form<0 @ wt %d>" % self.weight
        return "Form<%d terms @ wt %d>" % (len(self._terms), self.weight)


def zero_form(weight: int) -> Form:
    return Form(weight)


def form_of(e: PolyAtom, a: SpectralAtom, coeff=ONE) -> Form:
    if isinstance(coeff, (int, Fraction)):
        coeff = Scalar.from_rational(coeff)
    return Form(e.weight + a.effective_weight, {(e, a): coeff})


def make_e_atom(m: int, r: int) -> Form:
    """The form e_{r,m-r} tensored with the constant function."""
    return form_of(PolyAtom(m, r), CONST_ATOM)


def atom_E(weight: int, point, laurent: int = 0, character: Optional[str] = None) -> SpectralAtom:
    a = _mk_atom(Family(EISENSTEIN, character=character), weight, Fraction(point), laurent)
    if a is None:
        raise DomainError("atom is identically zero")
    return a


def atom_P(weight: int, index: int, point, laurent: int = 0) -> SpectralAtom:
    a = _mk_atom(Family(POINCARE, index=index), weight, Fraction(point), laurent)
    if a is None:
        raise DomainError("atom is identically zero")
    return a


def atom_incoherent(disc: int, order: int) -> SpectralAtom:
    """The atom printed E^-(order): derivative order+1 of the incoherent
    family at the base point (the family vanishes there)."""
    a = _mk_atom(Family(INCOHERENT, disc=disc), 1, Fraction(0), order + 1)
    if a is None:
        raise DomainError("atom is identically zero")
    return a


# ---------------------------------------------------------------------------
# operator action on spectral atoms

# Step rules in the global spectral parameter:
#   L Phi_w(., s) = s Phi_{w-2}(., s+1),  R Phi_w(., s) = (s+w) Phi_{w+2}(., s-1)
# for Eisenstein-like families, and
#   L F_w(., s) = (s - w/2)/(4 pi |n|) F_{w-2}(., s),
#   R F_w(., s) = 4 pi |n| (s + w/2) F_{w+2}(., s)
# for Poincare families.  On a derivative-t atom a linear prefactor
# (a0 + u) acts as a0 * (t) + t * (t-1), with the t = 0 tail picking up
# the pole-table residue of the shifted family.


def _spectral_step(a: SpectralAtom, direction: str):
    """One application of L or R to an expanded atom.

    Returns (atom_terms, residue_forms): a list of (SpectralAtom, Scalar)
    plus a list of (Form, Scalar) for pole-table substitutions.
    """
    assert a.pending is None
    fam, w, p, t = a.family, a.weight, a.point, a.laurent
    if fam.kind == CONSTANT:
        return [], []
    if fam.is_eisenstein_like():
        if direction == "L":
            w2, p2, pref = w - 2, p + 1, Scalar.from_rational(p)
        else:
            w2, p2, pref = w + 2, p - 1, Scalar.from_rational(p + w)
        unit = ONE
    else:  # Poincare
        n = abs(a.family.index)
        if direction == "L":
            w2, p2 = w - 2, p
            pref = Scalar.from_rational(p - Fraction(w, 2))
            unit = Scalar.pi_power(-1, Fraction(1, 4 * n))
        else:
            w2, p2 = w + 2, p
            pref = Scalar.from_rational(p + Fraction(w, 2))
            unit = Scalar.pi_power(1, 4 * n)
    atoms = []
    residues = []
    if not pref.is_zero():
        sub = _mk_atom(fam, w2, p2, t)
        if sub is not None:
            atoms.append((sub, pref * unit))
    if t >= 1:
        sub = _mk_atom(fam, w2, p2, t - 1)
        if sub is not None:
            atoms.append((sub, Scalar.from_rational(t) * unit))
    else:  # t == 0: formal residue coefficient of the shifted family
        res = _residue_of(fam, w2, p2)
        if res is not None:
            residues.append((res, unit))
    return atoms, residues


def _expand_atom(a: SpectralAtom):
    """Expand pending operator powers; returns (atom_terms, residue_forms).

    A pole residue picked up before the last step still receives the
    remaining operator applications (zero for constant residues).
    """
    if a.pending is None:
        return [(a, ONE)], []
    direction, power = a.pending
    base = SpectralAtom(a.family, a.weight, a.point, a.laurent)
    atoms = [(base, ONE)]
    residues = []
    for step in range(power):
        next_atoms: Dict[SpectralAtom, Scalar] = {}
        for sub, c in atoms:
            steps, res = _spectral_step(sub, direction)
            for s_atom, s_c in steps:
                key = s_atom
                next_atoms[key] = next_atoms.get(key, ZERO) + c * s_c
            for r_form, r_c in res:
                for _ in range(power - 1 - step):
                    r_form = _apply_op(r_form, direction)
                if not r_form.is_empty():
                    residues.append((r_form, c * r_c))
        atoms = [(k, v) for k, v in next_atoms.items() if not v.is_zero()]
    return atoms, residues


# ---------------------------------------------------------------------------
# form-level operators


def _tensor_with_residue(e: PolyAtom, res_form: Form, coeff: Scalar, acc: dict, weight: int):
    for (e0, a0), c0 in res_form.terms:
        # residues carry trivial polynomial part, validated at load
        key = (e, a0)
        acc[key] = acc.get(key, ZERO) + coeff * c0


def _lower_poly(e: PolyAtom):
    c = (e.r + 1) * (e.m - e.r)
    if c == 0:
        return None, 0
    return PolyAtom(e.m, e.r + 1), c


def _raise_poly(e: PolyAtom):
    if e.r == 0:
        return None, 0
    return PolyAtom(e.m, e.r - 1), 1


def _apply_op(f: Form, direction: str) -> Form:
    """L or R by the Leibniz rule, term by term (homogeneity is enforced
    by the Form constructor)."""
    delta = -2 if direction == "L" else 2
    out_weight = f.weight + delta
    acc: Dict[Tuple[PolyAtom, SpectralAtom], Scalar] = {}

    def add(key, c):
        acc[key] = acc.get(key, ZERO) + c

    for (e, a), coeff in f.terms:
        # polynomial factor
        if direction == "L":
            e2, c2 = _lower_poly(e)
        else:
            e2, c2 = _raise_poly(e)
        if e2 is not None:
            add((e2, a), coeff * c2)
        # spectral factor
        if a.pending is not None and a.pending[0] == direction:
            add((e, SpectralAtom(a.family, a.weight, a.point, a.laurent,
                                 (direction, a.pending[1] + 1))), coeff)
            continue
        if a.pending is not None:
            # opposite-direction pending operator: unfold it first, then let
            # the current operator act on everything (spectral side only)
            expanded, residues = _expand_atom(a)
            for r_form, r_c in residues:
                stepped = _apply_op(r_form, direction)
                if not stepped.is_empty():
                    _tensor_with_residue(e, stepped, coeff * r_c, acc, out_weight)
        else:
            expanded = [(a, ONE)]
        for sub, c_sub in expanded:
            steps, res = _spectral_step(sub, direction)
            for s_atom, s_c in steps:
                add((e, s_atom), coeff * c_sub * s_c)
            for r_form, r_c in res:
                _tensor_with_residue(e, r_form, coeff * c_sub * r_c, acc, out_weight)
    return Form(out_weight, acc)


def apply_lowering(f: Form) -> Form:
    return _apply_op(f, "L")


def apply_raising(f: Form) -> Form:
    return _apply_op(f, "R")


def apply_power(f: Form, direction: str, power: int) -> Form:
    if power < 0:
        raise DomainError("operator power must be nonnegative")
    for _ in range(power):
        f = _apply_op(f, direction)
    return f


def apply_laplace(f: Form) -> Form:
    """Delta_k = -R_{k-2} L_k."""
    return -apply_raising(apply_lowering(f))


def expand_pending(f: Form) -> Form:
    acc: Dict[Tuple[PolyAtom, SpectralAtom], Scalar] = {}

    def add(key, c):
        acc[key] = acc.get(key, ZERO) + c

    for (e, a), coeff in f.terms:
        expanded, residues = _expand_atom(a)
        for sub, c_sub in expanded:
            add((e, sub), coeff * c_sub)
        for r_form, r_c in residues:
            _tensor_with_residue(e, r_form, coeff * r_c, acc, f.weight)
    return Form(f.weight, acc)


def is_zero(f: Form) -> bool:
    return expand_pending(f).is_empty()


def forms_equal(f: Form, g: Form) -> bool:
    f = expand_pending(f)
    g = expand_pending(g)
    if f.is_empty() and g.is_empty():
        return True
    if f.weight != g.weight:
        return False
    return (f - g).is_empty()


_FACT = math.factorial


def apply_mirror(f: Form) -> Form:
    """y^k conj(.) termwise; requires expanded atoms and rational points."""
    acc: Dict[Tuple[PolyAtom, SpectralAtom], Scalar] = {}

    def add(key, c):
        acc[key] = acc.get(key, ZERO) + c

    for (e, a), coeff in f.terms:
        if a.pending is not None:
            raise DomainError("mirror needs expanded atoms; call expand_pending first")
        e2 = PolyAtom(e.m, e.m - e.r)
        poly_c = Scalar.from_rational(
            Fraction((-1) ** e.m * _FACT(e.m - e.r), _FACT(e.r)))
        fam, w, p, t = a.family, a.weight, a.point, a.laurent
        if fam.kind == CONSTANT:
            a2, spec_c = a, ONE
        elif fam.kind == EISENSTEIN and fam.character is None:
            sub = _mk_atom(fam, -w, p + w, t)
            if sub is None:
                continue
            a2, spec_c = sub, ONE
        elif fam.kind == POINCARE:
            n = abs(fam.index)
            sub = _mk_atom(Family(POINCARE, index=-fam.index), -w, p, t)
            if sub is None:
                continue
            a2 = sub
            spec_c = Scalar.pi_power(-w, (-1) ** (1 - w) * Fraction(4 * n) ** (-w))
        else:
            raise DomainError("mirror is not defined for family %r" % (fam,))
        add((e2, a2), coeff * poly_c * spec_c)
    return Form(-f.weight, acc)


def apply_flip(f: Form) -> Form:
    """F_k f = (1/(-k)!) * mirror(R^{-k} f) for weight k <= 0."""
    k = f.weight
    if k > 0:
        raise DomainError("flip requires weight <= 0 (got %d)" % k)
    g = expand_pending(apply_power(f, "R", -k))
    g = apply_mirror(g)
    return g * Fraction(1, _FACT(-k))


# ---------------------------------------------------------------------------
# local eigenvalue data (used by the solver and for the Lemma-route Laplacian)


def local_eigen_poly(family: Family, weight: int, point: Fraction):
    """Coefficients (a0, a1, a2) of the local Laplace eigenvalue
    a0 + a1*u + a2*u^2 of the family member at the point."""
    if family.kind == CONSTANT:
        return (Fraction(0), Fraction(0), Fraction(0))
    if family.is_eisenstein_like():
        a0 = point * (1 - weight - point)
        a1 = Fraction(1 - weight - 2 * point)
        return (a0, a1, Fraction(-1))
    # Poincare: -(s - w/2)(s - 1 + w/2) at s = point + u
    x = point - Fraction(weight, 2)
    y = point - 1 + Fraction(weight, 2)
    return (-x * y, -(x + y), Fraction(-1))


# ---------------------------------------------------------------------------
# serialization


def _family_to_json(fam: Family) -> dict:
    out = {"kind": fam.kind}
    if fam.index is not None:
        out["index"] = fam.index
    if fam.disc is not None:
        out["disc"] = fam.disc
    if fam.character is not None:
        out["character"] = fam.character
    return out


def _family_from_json(data: dict) -> Family:
    return Family(data["kind"], index=data.get("index"), disc=data.get("disc"),
                  character=data.get("character"))


def form_to_json(f: Form) -> dict:
    terms = []
    for (e, a), c in sorted(f.terms, key=lambda kv: _term_sort_key(kv[0])):
        terms.append({
            "poly": {"m": e.m, "r": e.r},
            "spectral": {
                "family": _family_to_json(a.family),
                "weight": a.weight,
                "point": str(a.point),
                "laurent": a.laurent,
                "pending": None if a.pending is None else
                           {"dir": a.pending[0], "power": a.pending[1]},
            },
            "coeff": c.to_json(),
        })
    return {"weight": f.weight, "terms": terms}


def form_from_json(data: dict) -> Form:
    acc = {}
    for term in data["terms"]:
        e = PolyAtom(term["poly"]["m"], term["poly"]["r"])
        sp = term["spectral"]
        pending = sp.get("pending")
        a = SpectralAtom(_family_from_json(sp["family"]), int(sp["weight"]),
                         Fraction(sp["point"]), int(sp["laurent"]),
                         None if pending is None else (pending["dir"], int(pending["power"])))
        acc[(e, a)] = acc.get((e, a), ZERO) + Scalar.from_json(term["coeff"])
    return Form(data["weight"], acc)


# ---------------------------------------------------------------------------
# pretty printing


def _term_sort_key(key):
    e, a = key
    return (-a.laurent, e.r, a.weight, a.point, str(a.family),
            a.pending or ("", 0))


def _pretty_spectral(a: SpectralAtom):
    """Human-readable atom plus a display sign (Poincare atoms print in the
    backward local parametrization, which flips odd derivative orders)."""
    fam, t = a.family, a.laurent
    sign = 1
    if fam.kind == CONSTANT:
        body = "1"
    elif fam.kind == POINCARE:
        local = 1 - Fraction(a.weight, 2) - a.point
        body = "P^(%d)_{%d,%d,%s}" % (t, a.weight, fam.index, local)
        sign = (-1) ** t
    elif fam.kind == INCOHERENT:
        body = "E-^(%d)_{D=%d}" % (t - 1, fam.disc)
    else:
        name = "E" if fam.character is None else "E[%s]" % fam.character
        body = "%s^(%d)_{%d,%s}" % (name, t, a.weight, a.point)
    if a.pending is not None:
        d, p = a.pending
        body = "%s%s %s" % (d, "^%d" % p if p > 1 else "", body)
    return body, sign


def pretty(f: Form) -> str:
    if f.is_empty():
        return "0  (weight %d)" % f.weight
    parts = []
    for (e, a), c in sorted(f.terms, key=lambda kv: _term_sort_key(kv[0])):
        body, sign = _pretty_spectral(a)
        c = c * sign
        cs = c.to_str()
        if "+" in cs or "- " in cs:
            cs = "(%s)" % cs
        piece = cs + " " if cs != "1" else ""
        epart = "" if e == E00 else "%r " % e
        parts.append("%s%s%s" % (piece, epart, body))
    return "  +  ".join(parts)


set_pole_table(default_pole_table())
