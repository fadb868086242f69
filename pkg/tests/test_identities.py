"""Symbolic operator identity suite on a grid of tensor atoms."""

import math
from fractions import Fraction

import pytest

from polymaass.symcalc import (Form, PolyAtom, SpectralAtom, Family,
                               apply_flip, apply_laplace, apply_lowering,
                               apply_mirror, apply_power, apply_raising,
                               atom_E, atom_P, expand_pending, form_of,
                               forms_equal, is_zero, zero_form)


def atom_grid():
    """Expanded tensor atoms of assorted weights, points and families."""
    grid = []
    spectral = []
    for w, p in [(0, 0), (-2, 1), (2, 0), (0, 2), (-4, 2)]:
        for t in (0, 1):
            spectral.append(atom_E(w, p, t))
    spectral.append(atom_P(0, -1, 1))
    spectral.append(atom_P(2, -1, 1, 1))
    spectral.append(atom_P(-2, -2, Fraction(1, 2)))
    for m, r in [(0, 0), (2, 0), (2, 1), (3, 1), (3, 3)]:
        for a in spectral:
            grid.append(form_of(PolyAtom(m, r), a))
    assert len(grid) >= 50
    return grid


GRID = atom_grid()


@pytest.mark.parametrize("r", [1, 2, 3])
def test_laplace_lowering_commutator(r):
    # Delta_{k-2r} L^r = L^r (Delta_k - r(k-r-1))
    for f in GRID:
        k = f.weight
        lhs = apply_laplace(apply_power(f, "L", r))
        rhs = apply_power(apply_laplace(f) - f * (r * (k - r - 1)), "L", r)
        assert forms_equal(lhs, rhs)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_laplace_raising_commutator(r):
    # Delta_{k+2r} R^r = R^r (Delta_k + r(k+r-1))
    for f in GRID:
        k = f.weight
        lhs = apply_laplace(apply_power(f, "R", r))
        rhs = apply_power(apply_laplace(f) + f * (r * (k + r - 1)), "R", r)
        assert forms_equal(lhs, rhs)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_iterated_commutators(r):
    # R L^r = -L^{r-1} (Delta - (r-1)(k-r));  L R^r = -R^{r-1} (Delta + r(k+r-1))
    for f in GRID:
        k = f.weight
        lhs = apply_raising(apply_power(f, "L", r))
        rhs = -apply_power(apply_laplace(f) - f * ((r - 1) * (k - r)), "L", r - 1)
        assert forms_equal(lhs, rhs)
        lhs = apply_lowering(apply_power(f, "R", r))
        rhs = -apply_power(apply_laplace(f) + f * (r * (k + r - 1)), "R", r - 1)
        assert forms_equal(lhs, rhs)


def _tensor(poly_form: Form, spec_form: Form) -> Form:
    """Product of a polynomial-only form with a spectral-only form."""
    out = None
    for (e1, a1), c1 in poly_form.terms:
        assert a1.family.kind == "constant"
        for (e2, a2), c2 in spec_form.terms:
            assert e2 == PolyAtom(0, 0)
            term = form_of(e1, a2, c1 * c2)
            out = term if out is None else out + term
    if out is None:
        return zero_form(poly_form.weight + spec_form.weight)
    return out


def test_product_rule_matches_laplacian():
    # Delta(fg) = (Delta f) g + f (Delta g) - (R f)(L g) - (L f)(R g),
    # with f the e-vector and g the spectral factor
    for f in GRID:
        ((e, a),) = [key for key, _ in f.terms]
        ef = form_of(PolyAtom(e.m, e.r), SpectralAtom(Family("constant"), 0, Fraction(0), 0))
        af = form_of(PolyAtom(0, 0), a)
        four = (_tensor(apply_laplace(ef), af) + _tensor(ef, apply_laplace(af))
                - _tensor(apply_raising(ef), apply_lowering(af))
                - _tensor(apply_lowering(ef), apply_raising(af)))
        assert forms_equal(apply_laplace(f), four)


def test_flip_intertwining_relations():
    # L F Delta = -(k-2)(k-1) F L  and  -k(k+1) R F = F R (Delta + k)
    for f in GRID:
        k = f.weight
        if k > 0:
            continue
        lhs = apply_lowering(apply_flip(apply_laplace(f)))
        rhs = apply_flip(apply_lowering(f)) * (-(k - 2) * (k - 1))
        assert forms_equal(lhs, rhs)
        if k <= -2:
            lhs = apply_raising(apply_flip(f)) * (-k * (k + 1))
            rhs = apply_flip(apply_raising(apply_laplace(f) + f * k))
            assert forms_equal(lhs, rhs)


def test_flip_commutes_with_laplace():
    for f in GRID:
        if f.weight > 0:
            continue
        assert forms_equal(apply_laplace(apply_flip(f)),
                           apply_flip(apply_laplace(f)))


def test_flip_involution_on_harmonic_forms():
    count = 0
    for f in GRID:
        if f.weight > 0 or not is_zero(apply_laplace(f)):
            continue
        assert forms_equal(apply_flip(apply_flip(f)), f)
        count += 1
    assert count >= 3


def test_flip_involution_polynomial_identity():
    # F F = ((-1)^{-k}/(-k)!^2) (Delta + 1k)(Delta + 2(k+1)) ... (Delta + (-k)(-1))
    for f in GRID[::7]:
        k = f.weight
        if k > 0:
            continue
        lhs = apply_flip(apply_flip(f))
        rhs = f
        for j in range(1, -k + 1):
            rhs = apply_laplace(rhs) + rhs * (j * (k + j - 1))
        rhs = rhs * Fraction((-1) ** (-k), math.factorial(-k) ** 2)
        assert forms_equal(lhs, rhs)


def test_flip_lowering_image():
    # L F_k f = mirror(R^{1-k} f) / (-k)!
    for f in GRID:
        k = f.weight
        if k > 0:
            continue
        lhs = apply_lowering(apply_flip(f))
        rhs = apply_mirror(expand_pending(apply_power(f, "R", 1 - k))) \
            * Fraction(1, math.factorial(-k))
        assert forms_equal(lhs, rhs)


def test_mirror_involution_on_grid():
    for f in GRID:
        assert forms_equal(apply_mirror(apply_mirror(f)), f)
