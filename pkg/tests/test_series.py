from fractions import Fraction

import pytest

from zetagenus.core.errores import (
    SerieNoInvertibleError,
    TruncamientoError,
    VariableIncompatibleError,
    ZetagenusError,
)
from zetagenus.core.leyes import diffeo_aleatorio
from zetagenus.core.polinomios import simbolo
from zetagenus.core.series import (
    SerieMultivariada,
    Series,
    series_arith,
    series_compose,
    series_cos,
    series_exp,
    series_exp_lineal,
    series_log,
    series_revert,
    series_sin,
    series_sqrt,
)


def test_producto_de_binomios():
    a = Series([1, 1], orden=6)
    b = Series([1, -1], orden=6)
    assert a * b == Series([1, 0, -1], orden=6)


def test_division_geometrica():
    g = 1 / Series([1, -1], orden=8)
    assert all(c == 1 for c in g.coeficientes)
    assert series_arith(Series([1], orden=8), Series([1, -1], orden=8), 'div') == g


def test_division_por_serie_no_invertible():
    with pytest.raises(SerieNoInvertibleError):
        Series([1, 1], orden=4) / Series([0, 1], orden=4)
    with pytest.raises(SerieNoInvertibleError):
        1 / Series([simbolo('gamma'), 1], orden=4)


def test_orden_minimo_se_propaga():
    a = Series([1, 2, 3], orden=10)
    b = Series([1, 1], orden=4)
    assert (a + b).orden == 4
    assert (a * b).orden == 4


def test_variables_distintas():
    with pytest.raises(VariableIncompatibleError):
        Series([1, 1], 'z', 4) + Series([1, 1], 'x', 4)


def test_coeficiente_fuera_de_orden():
    s = Series([1, 1], orden=3)
    with pytest.raises(TruncamientoError):
        s[4]
    with pytest.raises(TruncamientoError):
        s.truncar(5)


def test_exp_y_log_son_inversas():
    a = Series([0, 1, Fraction(1, 2), simbolo('gamma')], orden=8)
    assert series_log(series_exp(a)) == a
    b = Series([1, 3, simbolo('zeta_2')], orden=8)
    assert series_exp(series_log(b)) == b


def test_exp_de_z():
    e = series_exp(Series.variable_pura(orden=6))
    assert e == series_exp_lineal(1, 'z', 6)
    assert e[6] == Fraction(1, 720)


def test_raiz_cuadrada():
    a = Series([1, 2, simbolo('gamma'), 0, 5], orden=8)
    s = series_sqrt(a)
    assert s * s == a


def test_exp_y_log_rechazan_terminos_constantes():
    with pytest.raises(SerieNoInvertibleError):
        series_exp(Series([1, 1], orden=3))
    with pytest.raises(SerieNoInvertibleError):
        series_log(Series([2, 1], orden=3))
    with pytest.raises(SerieNoInvertibleError):
        series_sqrt(Series([0, 1], orden=3))


def test_composicion_de_ejemplo():
    exterior = Series([0, 1, 0, 2], orden=9)
    interior = Series([0, 1, 0, 1], orden=9)
    assert series_compose(exterior, interior) == Series([0, 1, 0, 3, 0, 6, 0, 6, 0, 2], orden=9)


def test_composicion_rechaza_interior_con_constante():
    with pytest.raises(SerieNoInvertibleError):
        series_compose(Series([0, 1], orden=3), Series([1, 1], orden=3))


def test_reversion_de_ejemplo():
    f = Series([0, 1, 1], orden=4)
    assert series_revert(f, 'ambos') == Series([0, 1, -1, 2, -5], orden=4)


def test_reversion_con_coeficiente_lineal_no_unitario():
    f = Series([0, 2, 1], orden=6)
    g = series_revert(f, 'ambos')
    assert series_compose(f, g) == Series.variable_pura(orden=6)
    assert g[1] == Fraction(1, 2)


def test_reversion_simbolica():
    f = Series([0, 1, simbolo('gamma'), simbolo('zeta_2')], orden=5)
    g = series_revert(f, 'ambos')
    assert series_compose(f, g) == Series.variable_pura(orden=5)
    assert series_compose(g, f) == Series.variable_pura(orden=5)


def test_reversiones_aleatorias(rng):
    z = Series.variable_pura(orden=8)
    for _ in range(20):
        f = diffeo_aleatorio(7, rng).como_serie()
        g = series_revert(f)
        assert series_compose(f, g) == z


def test_reversion_no_admisible():
    with pytest.raises(SerieNoInvertibleError):
        series_revert(Series([0, 0, 1], orden=4))
    with pytest.raises(SerieNoInvertibleError):
        series_revert(Series([1, 1], orden=4))
    with pytest.raises(ZetagenusError):
        series_revert(Series([0, 1], orden=4), 'secante')


def test_escalar_variable_y_paridad():
    s = Series([1, 1, 1, 1], orden=3)
    assert s.escalar_variable(-1) == Series([1, -1, 1, -1], orden=3)
    assert (s * s.escalar_variable(-1)).es_par()


def test_multivariada_producto_y_anular():
    variables = ('x', 'y')
    x = SerieMultivariada.variable('x', variables, 4)
    y = SerieMultivariada.variable('y', variables, 4)
    suma = x + y
    cuadrado = suma * suma
    assert cuadrado.coeficiente((1, 1)) == 2
    assert cuadrado.anular('y') == x * x


def test_seno_y_coseno():
    s, c = series_sin(orden=10), series_cos(orden=10)
    assert s * s + c * c == Series.constante(1, 'z', 10)
    assert s.derivada() == series_cos(orden=9)
    assert s.es_impar() and c.es_par()
