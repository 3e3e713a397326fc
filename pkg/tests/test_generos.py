from fractions import Fraction

import pytest
import sympy

from zetagenus.core.errores import GeneroDesconocidoError, TruncamientoError, ZetagenusError
from zetagenus.core.generos import (
    bernoulli_rewrite,
    cp_values,
    duplication_check,
    exp_infinity_especializada,
    log_series,
    make_genus,
    pi_z_sobre_seno,
    reescalar_2pi_i,
    tabla_bernoulli,
    witten_g_series,
    zeta_par,
)
from zetagenus.core.polinomios import SymbolPoly, simbolo
from zetagenus.core.series import Series


def _pi(k, coef):
    return SymbolPoly.simbolo('pi', k).escalar(coef)


def test_todd():
    g = make_genus('todd', 6)
    assert g.Q.truncar(2) == Series([1, Fraction(1, 2), Fraction(1, 12)], orden=2)
    assert all(v == 1 for v in cp_values(g, 5).valores)


def test_signatura_y_ahat():
    L = cp_values(make_genus('L', 6), 4)
    assert [L[n] for n in range(5)] == [1, 0, 1, 0, 1]
    ahat = cp_values(make_genus('ahat', 6), 4)
    assert ahat[1] == 0
    assert ahat[2] == Fraction(-1, 8)


def test_genero_aditivo():
    valores = cp_values(make_genus('additive', 5), 4)
    assert [valores[n] for n in range(5)] == [1, 0, 0, 0, 0]
    assert log_series(make_genus('additive', 5)) == Series.variable_pura(orden=6)


def test_valores_gamma(gamma):
    valores = cp_values(gamma, 3)
    assert valores[1] == -2 * simbolo('gamma')
    esperado = (simbolo('gamma') ** 2).escalar(Fraction(9, 2)) + simbolo('zeta_2').escalar(Fraction(3, 2))
    assert valores[2] == esperado
    assert valores[1].texto() == '-2*gamma'
    for n in range(4):
        assert valores[n].es_homogeneo(n)


def test_multiplicatividad_en_productos(gamma):
    valores = cp_values(gamma, 2)
    assert valores.valor_producto([1, 1]) == 4 * simbolo('gamma') ** 2
    assert valores.valor_producto([]) == 1
    with pytest.raises(ZetagenusError):
        valores.valor_producto([3])


def test_tabla_de_valores(gamma):
    tabla = cp_values(gamma, 2).a_tabla(bernoulli=True)
    assert list(tabla.columns) == ['n', 'valor', 'valor_bernoulli']
    assert tabla.loc[2, 'valor_bernoulli'] == '9/2*gamma^2 + 1/4*pi^2'


def test_orden_insuficiente():
    with pytest.raises(TruncamientoError):
        cp_values(make_genus('todd', 4), 4)


def test_genero_desconocido():
    with pytest.raises(GeneroDesconocidoError):
        make_genus('elliptic')


def test_logaritmo_de_todd():
    logaritmo = log_series(make_genus('todd', 6), verificar=True)
    esperado = Series([0] + [Fraction(1, k) for k in range(1, 7)], orden=6)
    assert logaritmo.truncar(6) == esperado


def test_bernoulli():
    tabla = tabla_bernoulli(3)
    assert [tabla[n] for n in (0, 1, 2, 4, 6)] == [1, Fraction(-1, 2), Fraction(1, 6),
                                                   Fraction(-1, 30), Fraction(1, 42)]
    assert zeta_par(1, tabla) == _pi(2, Fraction(1, 6))
    assert zeta_par(2, tabla) == _pi(4, Fraction(1, 90))
    with pytest.raises(TruncamientoError):
        zeta_par(4, tabla)


def test_bernoulli_contra_sympy():
    tabla = tabla_bernoulli(10)
    for k in range(1, 11):
        assert tabla[2 * k] == Fraction(str(sympy.bernoulli(2 * k)))
    assert all(tabla[n] == 0 for n in range(3, 21, 2))


def test_zeta_par_contra_sympy():
    tabla = tabla_bernoulli(4)
    pi = sympy.Symbol('pi')
    for k in range(1, 5):
        esperado = sympy.zeta(2 * k).subs(sympy.pi, pi)
        assert sympy.simplify(zeta_par(k, tabla).a_sympy() - esperado) == 0


def test_reescritura_deja_zetas_impares():
    p = simbolo('zeta_2') + simbolo('zeta_3')
    assert bernoulli_rewrite(p) == _pi(2, Fraction(1, 6)) + simbolo('zeta_3')


def test_pi_z_sobre_seno():
    serie = pi_z_sobre_seno(4)
    assert serie[2] == _pi(2, Fraction(1, 6))
    assert serie[4] == _pi(4, Fraction(7, 360))
    assert serie.es_par()


def test_duplicacion():
    reporte = duplication_check(8)
    assert reporte.pasa
    datos = reporte.a_dict()
    assert list(datos) == ['orden', 'reflexion', 'bernoulli', 'forma_partida', 'primer_fallo', 'pasa']
    assert datos['primer_fallo'] == {}


@pytest.mark.lento
def test_duplicacion_a_orden_alto():
    assert duplication_check(14).pasa


def test_duplicacion_exige_orden_par():
    with pytest.raises(ZetagenusError):
        duplication_check(7)


def test_exp_infinity_especializada_es_z_por_gamma(gamma):
    z_q = gamma.Q.truncar(5).multiplicar_por_variable()
    assert exp_infinity_especializada(5) == z_q


def test_reescalado_2pi_i():
    g = reescalar_2pi_i(make_genus('L', 4))
    assert g.Q[2] == _pi(2, Fraction(-4, 3))
    assert g.nombre == 'L[2pi i]'


def test_valores_reescalados_reducen_la_unidad_imaginaria():
    assert cp_values(reescalar_2pi_i(make_genus('L', 4)), 2)[2] == _pi(2, Fraction(-4))
    valores = cp_values(reescalar_2pi_i(make_genus('gamma', 5)), 3)
    assert all(v.reducir_unidad_imaginaria() == v for v in valores.valores)
    assert valores[1] == SymbolPoly({(('gamma', 1), ('i', 1), ('pi', 1)): -4})


def test_witten_g():
    w = witten_g_series(3, 6)
    assert w.g[0].coeficiente_en('q', 1) == -1
    assert all(not w.g[k] for k in (1, 3, 5))
    assert list(w.a_tabla().columns) == ['k', 'g_k']


def test_witten_cp_modulo_q():
    g = make_genus('witten', 6, 2)
    valores = cp_values(g, 3)
    assert valores[0].truncar_simbolo('q', 0) == 1
    assert valores[1] == 0


def test_witten_en_q_cero_es_ahat():
    witten = make_genus('witten', 6, 2)
    assert witten.Q.truncar_simbolo('q', 0) == make_genus('ahat', 6).Q
