"""Exact depth and Harish-Chandra case label of a symbolic form.

The vanishing tests delegate to the symbolic engine's structural zero
test after full expansion and pole substitution, so the classification
is relative to the formal independence model documented in symcalc.
"""

from __future__ import annotations

from dataclasses import dataclass

from .symcalc import DomainError, Form, apply_laplace, apply_power, is_zero

DEFAULT_DEPTH_BOUND = 16

BK_TO_REPR = {
    "Ia": "GIa", "Ib": "GIc", "Ic": "GId", "Id": "GIb",
    "IIa": "CIa", "IIb": "CIb",
    "IIIa": "GIIa", "IIIb": "GIIb", "IIIc": "GIIc", "IIId": "GIId",
}
REPR_TO_BK = {v: k for k, v in BK_TO_REPR.items()}


@dataclass(frozen=True)
class WeightContext:
    k: int

    @property
    def l(self) -> int:
        if self.k < 1:
            return 1 - self.k
        if self.k == 1:
            return 0
        return self.k - 1

    @property
    def gamma(self) -> int:
        return self.k * self.k - 2 * self.k


@dataclass(frozen=True)
class CaseLabel:
    bk: str
    depth: int
    context: WeightContext

    def __post_init__(self):
        if self.bk not in BK_TO_REPR:
            raise DomainError("unknown BK label %r" % (self.bk,))
        if self.bk == "IIId" and self.depth < 1:
            raise DomainError("case IIId occurs only in positive depth")

    @property
    def repr_label(self) -> str:
        return BK_TO_REPR[self.bk]

    def to_json(self) -> dict:
        ctx = self.context
        return {"bk": self.bk, "repr": self.repr_label, "depth": self.depth,
                "k": ctx.k, "l": ctx.l, "gamma": ctx.gamma}


class DepthBoundExceeded(DomainError):
    pass


def exact_depth(f: Form, d_max: int = DEFAULT_DEPTH_BOUND) -> int:
    """Smallest d with Delta^{d+1} f = 0; errors beyond the search bound."""
    g = f
    for d in range(d_max + 1):
        g = apply_laplace(g)
        if is_zero(g):
            return d
    raise DepthBoundExceeded(
        "form is not annihilated by Delta^%d; not polyharmonic within bound" % (d_max + 1))


def classify_bk(f: Form, d_max: int = DEFAULT_DEPTH_BOUND) -> CaseLabel:
    """The ten-case classification by iterated vanishing tests."""
    if is_zero(f):
        raise DomainError("cannot classify the zero form")
    k = f.weight
    d = exact_depth(f, d_max)
    top = f
    for _ in range(d):
        top = apply_laplace(top)

    def lowering_test(power: int, g: Form) -> bool:
        return is_zero(apply_power(g, "L", power))

    if k < 1:
        l_zero = lowering_test(1, top)
        r_zero = is_zero(apply_power(top, "R", 1 - k))
        bk = {(True, True): "Ia", (True, False): "Ib",
              (False, True): "Ic", (False, False): "Id"}[(l_zero, r_zero)]
    elif k == 1:
        bk = "IIa" if lowering_test(1, top) else "IIb"
    else:
        if d >= 1:
            sub = f
            for _ in range(d - 1):
                sub = apply_laplace(sub)
            if lowering_test(k, sub):
                return CaseLabel("IIId", d, WeightContext(k))
        if lowering_test(1, top):
            bk = "IIIa"
        elif lowering_test(k, top):
            bk = "IIIb"
        else:
            bk = "IIIc"
    return CaseLabel(bk, d, WeightContext(k))


def expected_dimension_vector(label: CaseLabel):
    """Dimension vector of the cyclic quiver module matching the label."""
    d = label.depth
    table3 = {
        "GIa": (d, d + 1, d),
        "GIb": (d + 1, d + 1, d + 1),
        "GIc": (d, d + 1, d + 1),
        "GId": (d + 1, d + 1, d),
        "GIIa": (d, d, d + 1),
        "GIIb": (d, d + 1, d + 1),
        "GIIc": (d + 1, d + 1, d + 1),
        "GIId": (d - 1, d, d + 1),
    }
    rl = label.repr_label
    if rl == "CIa":
        return (d, d + 1)
    if rl == "CIb":
        return (d + 1, d + 1)
    if rl == "GIId" and d == 0:
        raise DomainError("GIId exists only for d >= 1")
    return table3[rl]
