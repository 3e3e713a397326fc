from fractions import Fraction

import pytest

from zetagenus.core.errores import ZetagenusError
from zetagenus.core.leyes import (
    FormalDiffeo,
    ThomTwist,
    accion_por_conjugacion,
    check_fgl_axioms,
    diffeo_aleatorio,
    diffeo_compose,
    diffeo_desde_exp_infinity,
    diffeo_invert,
    exponencial,
    fgl_from_log,
    generadores_descenso,
    gm_invariant_bidegrees,
    grading_action,
    hbar_series,
    ln_coproduct,
    simbolos_anulados,
    thom_twist_constraint,
    verificar_coproducto,
)
from zetagenus.core.polinomios import simbolo
from zetagenus.core.series import Series


def _diffeo(coefs, orden):
    return FormalDiffeo(tuple(coefs) + (0,) * (orden - len(coefs)))


def test_composicion_de_ejemplo():
    s = _diffeo([0, 1], 8)
    t = _diffeo([0, 2], 8)
    assert diffeo_compose(s, t) == _diffeo([0, 3, 0, 6, 0, 6, 0, 2], 8)


def test_inversa_y_grupo(rng):
    for _ in range(10):
        a = diffeo_aleatorio(6, rng)
        b = diffeo_aleatorio(6, rng)
        c = diffeo_aleatorio(6, rng)
        assert diffeo_compose(a, diffeo_invert(a)) == FormalDiffeo.identidad(6)
        assert diffeo_compose(diffeo_compose(a, b), c) == diffeo_compose(a, diffeo_compose(b, c))


def test_inversa_por_newton_coincide(rng):
    a = diffeo_aleatorio(7, rng)
    assert diffeo_invert(a, 'newton') == diffeo_invert(a)


def test_impares_forman_subgrupo(rng):
    for _ in range(5):
        a = diffeo_aleatorio(8, rng, solo_impar=True)
        b = diffeo_aleatorio(8, rng, solo_impar=True)
        assert a.es_impar()
        assert diffeo_compose(a, b).es_impar()
        assert diffeo_invert(a).es_impar()


def test_desde_serie_exige_tangencia():
    with pytest.raises(ZetagenusError):
        FormalDiffeo.desde_serie(Series([0, 2, 1], orden=3))


def test_ley_aditiva_y_multiplicativa():
    aditiva = fgl_from_log(FormalDiffeo.identidad(5))
    assert aditiva.coeficiente(1, 0) == 1
    assert aditiva.coeficiente(1, 1) == 0

    logaritmo = Series([0] + [Fraction((-1) ** (k + 1), k) for k in range(1, 7)], orden=6)
    multiplicativa = fgl_from_log(logaritmo)
    assert multiplicativa.coeficiente(1, 1) == 1
    assert multiplicativa.coeficiente(2, 1) == 0
    assert check_fgl_axioms(multiplicativa).pasa


def test_axiomas_para_logaritmos_aleatorios(rng):
    for _ in range(3):
        reporte = check_fgl_axioms(fgl_from_log(diffeo_aleatorio(5, rng)))
        assert reporte.pasa
        assert reporte.a_dict()['pasa'] is True


def test_axiomas_para_logaritmo_generico():
    ley = fgl_from_log(FormalDiffeo.generico(4))
    assert ley.coeficiente(1, 1) == -2 * simbolo('t_1')
    assert check_fgl_axioms(ley).pasa


def test_coproducto_de_t2():
    delta = ln_coproduct(3)
    tensores = {(i, j): c for i, j, c in delta.tensores(2)}
    assert tensores == {('1', 't_2'): 1, ('t_1', 't_1'): 2, ('t_2', '1'): 1}
    json_t2 = delta.a_json()[1]
    assert json_t2['k'] == 2
    assert {'i': 't_1', 'j': 't_1', 'coeff': '2/1'} in json_t2['terms']


def test_coproducto_coasociativo():
    reporte = verificar_coproducto(5)
    assert reporte.pasa
    assert reporte.fallos == []


def test_accion_graduada_por_conjugacion():
    t = FormalDiffeo.generico(5)
    assert grading_action(t) == accion_por_conjugacion(t)
    assert grading_action(t, 2) == accion_por_conjugacion(t, 2)
    assert grading_action(t).t(3) == simbolo('t_3') * simbolo('u') ** 3


def test_conjugacion_rechaza_polinomios():
    with pytest.raises(ZetagenusError):
        accion_por_conjugacion(FormalDiffeo.generico(3), simbolo('u') + 1)


def test_exp_infinity_como_difeomorfismo():
    t = diffeo_desde_exp_infinity(4)
    assert t.t(1) == -simbolo('h_1')
    assert t.t(4) == simbolo('h_4')


def test_torsion_de_thom_anula_sigmas_impares():
    restricciones = thom_twist_constraint(ThomTwist.generico(7))
    assert simbolos_anulados(restricciones) == ['sigma_1', 'sigma_3', 'sigma_5', 'sigma_7']


def test_torsion_par_sin_restricciones():
    s = ThomTwist.desde_coeficientes({2: 1, 4: Fraction(1, 3)}, 6)
    assert thom_twist_constraint(s) == []
    with pytest.raises(ZetagenusError):
        ThomTwist(Series([2, 1], 'e', 3))


def test_hbar_desde_valores_de_todd():
    hbar = hbar_series([1, 1, 1, 1], 4)
    assert hbar == Series([0, 1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)], 'e', 4)


def test_hbar_errores():
    with pytest.raises(ZetagenusError):
        hbar_series([1, 1], 3)
    with pytest.raises(ZetagenusError):
        hbar_series([2, 1], 2)


def test_bigrados_invariantes():
    invariantes = gm_invariant_bidegrees(generadores_descenso(2), 2)
    assert [(i.monomio, i.bigrado) for i in invariantes] == [
        ('e_3*b^3', (1, -6)),
        ('e_5*b^5', (1, -10)),
    ]


def test_exponencial_invierte_el_logaritmo(rng):
    t = diffeo_aleatorio(6, rng)
    e = exponencial(t)
    assert diffeo_compose(t, e) == FormalDiffeo.identidad(6)
    assert diffeo_compose(e, t) == FormalDiffeo.identidad(6)
