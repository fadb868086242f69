from fractions import Fraction

import pytest

from polymaass.scalars import Scalar
from polymaass.symcalc import (CONST_ATOM, DomainError, Family, Form, PolyAtom,
                               apply_flip, apply_laplace, apply_lowering,
                               apply_mirror, apply_power, apply_raising,
                               atom_E, atom_P, atom_incoherent, expand_pending,
                               form_from_json, form_of, form_to_json,
                               forms_equal, is_zero, make_e_atom, pretty,
                               zero_form, SpectralAtom)


def E(w, p, t=0):
    return form_of(PolyAtom(0, 0), atom_E(w, p, t))


# --- make_e_atom -----------------------------------------------------------

def test_make_e_atom():
    one = make_e_atom(0, 0)
    assert one.weight == 0 and not one.is_empty()
    f = make_e_atom(3, 2)
    assert f.weight == -1
    with pytest.raises(DomainError):
        make_e_atom(3, 4)


# --- lowering --------------------------------------------------------------

def test_lowering_kills_top_e_vector():
    assert is_zero(apply_lowering(make_e_atom(5, 5)))


def test_lowering_of_first_derivative():
    got = apply_lowering(E(0, 0, 1))
    assert forms_equal(got, E(-2, 1, 0))


def test_lowering_of_weight_two_eisenstein_hits_residue():
    got = apply_lowering(E(2, 0, 0))
    want = form_of(PolyAtom(0, 0), CONST_ATOM, Scalar.pi_power(-1, 3))
    assert forms_equal(got, want)
    assert not is_zero(got)


def test_lowering_e_vector_action():
    # L e_{r,m-r} = (r+1)(m-r) e_{r+1,m-r-1}
    got = apply_lowering(make_e_atom(3, 1))
    assert forms_equal(got, make_e_atom(3, 2) * 4)


# --- raising ---------------------------------------------------------------

def test_raising_kills_bottom_e_vector():
    assert is_zero(apply_raising(make_e_atom(4, 0)))


def test_raising_point_shift():
    assert forms_equal(apply_raising(E(0, 1)), E(2, 0))


def test_raising_poincare_zero_prefactor():
    # global point -1 at weight 2: the linear factor s + k/2 vanishes
    f = form_of(PolyAtom(0, 0), atom_P(2, -1, -1))
    assert is_zero(apply_raising(f))


# --- Laplacian -------------------------------------------------------------

def test_laplace_e_vector_eigenvalue():
    for m, r in [(3, 1), (4, 2), (2, 0)]:
        f = make_e_atom(m, r)
        assert forms_equal(apply_laplace(f), f * (-(r + 1) * (m - r)))


def test_laplace_eisenstein_eigenvalue_at_base():
    # weight k at point s0: order-0 coefficient picks s0(1-k-s0)
    k, s0 = 4, Fraction(-1)
    got = apply_laplace(E(k, s0))
    assert forms_equal(got, E(k, s0) * (s0 * (1 - k - s0)))
    assert is_zero(apply_laplace(E(0, 0)))


def test_laplace_constant():
    assert is_zero(apply_laplace(make_e_atom(0, 0)))


# --- mirror ----------------------------------------------------------------

def test_mirror_e_vector():
    # y^{m-2r} conj(e_{r,m-r}) = (-1)^m (m-r)!/r! e_{m-r,r}
    m = 3
    got = apply_mirror(make_e_atom(m, m))
    assert forms_equal(got, make_e_atom(m, 0) * Fraction((-1) ** m, 6))


def test_mirror_eisenstein_point_shift():
    got = apply_mirror(E(4, 2))
    assert forms_equal(got, E(-4, 6))


def test_mirror_involution():
    f = form_of(PolyAtom(2, 1), atom_E(0, 2, 0))
    assert forms_equal(apply_mirror(apply_mirror(f)), f)


def test_mirror_rejects_pending():
    a = SpectralAtom(Family("eisenstein"), 0, Fraction(0), 1, ("L", 2))
    with pytest.raises(DomainError):
        apply_mirror(form_of(PolyAtom(0, 0), a))


# --- flip ------------------------------------------------------------------

def test_flip_fixes_holomorphic_e_vector():
    for m in range(0, 5):
        f = make_e_atom(m, m)
        assert forms_equal(apply_flip(f), f * ((-1) ** m))


def test_flip_weight_zero_is_mirror():
    f = E(0, 2)
    assert forms_equal(apply_flip(f), apply_mirror(f))


def test_flip_rejects_positive_weight():
    with pytest.raises(DomainError):
        apply_flip(E(2, 0))


def test_flip_commutes_with_laplace():
    f = form_of(PolyAtom(3, 2), atom_E(-2, 1, 1))
    assert forms_equal(apply_laplace(apply_flip(f)), apply_flip(apply_laplace(f)))


# --- expand ----------------------------------------------------------------

def test_expand_case_ia_fragment():
    # 1/8 e_{1,2} L^2 E^(2) + 3/8 e_{1,2} L^2 E^(1)
    #   == 1/4 e_{1,2} E^(1)_{-4,2} + 5/8 e_{1,2} E^(0)_{-4,2}
    e12 = PolyAtom(3, 1)
    fam = Family("eisenstein")
    f = (form_of(e12, SpectralAtom(fam, 0, Fraction(0), 2, ("L", 2)), Fraction(1, 8))
         + form_of(e12, SpectralAtom(fam, 0, Fraction(0), 1, ("L", 2)), Fraction(3, 8)))
    want = (form_of(e12, atom_E(-4, 2, 1), Fraction(1, 4))
            + form_of(e12, atom_E(-4, 2, 0), Fraction(5, 8)))
    assert expand_pending(f) == want


def test_expand_dead_pending_atom():
    f = form_of(PolyAtom(3, 2), SpectralAtom(Family("eisenstein"), 0, Fraction(0), 0, ("L", 1)))
    assert expand_pending(f).is_empty()


def test_expand_idempotent_on_expanded():
    f = form_of(PolyAtom(3, 0), atom_E(0, 0, 2))
    assert expand_pending(f) == f


# --- is_zero ---------------------------------------------------------------

def test_is_zero_cases():
    assert is_zero(apply_lowering(make_e_atom(2, 2)))
    assert not is_zero(apply_lowering(E(2, 0)))
    f = E(4, 1, 2)
    assert is_zero(f - f)


# --- incoherent family -----------------------------------------------------

def test_incoherent_vanishing_and_recurrence():
    # Delta E^-(j-atom) follows Delta b_j = -j(j-1) b_{j-2}
    disc = 3
    for j in (1, 2, 3, 4, 5):
        f = form_of(PolyAtom(0, 0), SpectralAtom(Family("incoherent", disc=disc), 1,
                                                 Fraction(0), j))
        got = apply_laplace(f)
        if j >= 3:
            want = form_of(PolyAtom(0, 0),
                           SpectralAtom(Family("incoherent", disc=disc), 1, Fraction(0), j - 2),
                           Fraction(-j * (j - 1)))
            assert forms_equal(got, want)
        else:
            # b_0 vanishes identically, b_1 is harmonic
            assert is_zero(got)


# --- weights and serialization --------------------------------------------

def test_weight_grading():
    f = form_of(PolyAtom(2, 1), atom_E(-2, 1, 1))
    k = f.weight
    assert apply_lowering(f).weight == k - 2
    assert apply_raising(f).weight == k + 2
    assert apply_laplace(f).weight == k
    assert apply_mirror(f).weight == -k
    assert apply_flip(f).weight == k


def test_add_rejects_mixed_weights():
    with pytest.raises(DomainError):
        make_e_atom(2, 0) + make_e_atom(2, 1)


def test_json_round_trip():
    f = (form_of(PolyAtom(3, 1), SpectralAtom(Family("poincare", index=-2), 2,
                                              Fraction(1, 2), 1, ("R", 2)),
                 Scalar.pi_power(2, Fraction(3, 7)))
         + form_of(PolyAtom(3, 1), atom_E(6, -3, 3), Fraction(-5, 9)) * Scalar.pi_power(0, 1))
    assert form_from_json(form_to_json(f)) == f


def test_pretty_is_deterministic():
    f = form_of(PolyAtom(0, 0), atom_E(0, 0, 1)) + form_of(PolyAtom(0, 0), atom_E(0, 0, 0))
    assert pretty(f) == "E^(1)_{0,0}  +  E^(0)_{0,0}"


# --- pole table loading ------------------------------------------------------

def test_pole_table_json_round_trip(tmp_path):
    import json as _json
    from polymaass import symcalc as sc
    table_json = [{
        "family": {"kind": "eisenstein"},
        "weight": 0,
        "point": "1",
        "order": 1,
        "residue_form": sc.form_to_json(
            form_of(PolyAtom(0, 0), CONST_ATOM, Scalar.pi_power(-1, 3))),
    }]
    path = tmp_path / "poles.json"
    path.write_text(_json.dumps(table_json))
    try:
        sc.load_pole_table(str(path))
        got = apply_lowering(form_of(PolyAtom(0, 0), atom_E(2, 0)))
        want = form_of(PolyAtom(0, 0), CONST_ATOM, Scalar.pi_power(-1, 3))
        assert forms_equal(got, want)
        # an empty table drops the residue: L E_2 becomes structurally zero
        sc.set_pole_table({})
        got = apply_lowering(form_of(PolyAtom(0, 0), atom_E(2, 0)))
        assert got.is_empty()
    finally:
        sc.set_pole_table(sc.default_pole_table())


def test_pole_point_warning():
    import warnings as _w
    from polymaass.symcalc import PolePointWarning
    with _w.catch_warnings(record=True) as caught:
        _w.simplefilter("always")
        apply_lowering(form_of(PolyAtom(0, 0), atom_E(2, 0, 1)))
    assert any(issubclass(c.category, PolePointWarning) for c in caught)


def test_expand_pending_through_pole_point():
    # L^2 applied to the weight-2 family value: the residue picked up at the
    # first step is a constant, killed by the second lowering
    fam = Family("eisenstein")
    f = form_of(PolyAtom(0, 0), SpectralAtom(fam, 2, Fraction(0), 0, ("L", 2)))
    assert expand_pending(f).is_empty()
    # pending and iterated lowering agree across the pole
    g_pending = expand_pending(
        form_of(PolyAtom(0, 0), SpectralAtom(fam, 2, Fraction(0), 1, ("L", 2))))
    g_steps = apply_lowering(apply_lowering(form_of(PolyAtom(0, 0), atom_E(2, 0, 1))))
    assert g_pending == g_steps
    assert forms_equal(g_pending, form_of(PolyAtom(0, 0), atom_E(-2, 2, 0)))
