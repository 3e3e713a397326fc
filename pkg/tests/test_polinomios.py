from fractions import Fraction

import pytest
import sympy

from zetagenus.core.errores import ZetagenusError
from zetagenus.core.polinomios import (
    SymbolPoly,
    a_racional,
    grado_simbolo,
    racional_a_texto,
    simbolo,
)


def _aleatorio(rng, simbolos=('gamma', 'zeta_2', 't_1')):
    terminos = {}
    for _ in range(4):
        monomio = tuple((s, int(rng.integers(0, 3))) for s in simbolos)
        terminos[monomio] = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
    return SymbolPoly(terminos)


def test_racionales_exactos():
    assert a_racional('3/6') == Fraction(1, 2)
    assert racional_a_texto(2) == '2/1'
    with pytest.raises(TypeError):
        a_racional(0.5)


def test_grados_de_simbolos():
    assert grado_simbolo('gamma') == 1
    assert grado_simbolo('zeta_3') == 3
    assert grado_simbolo('t_4') == 4
    assert grado_simbolo('q') == 0
    assert grado_simbolo('u') == 0


def test_texto_canonico():
    g = simbolo('gamma')
    assert ((g + 1) ** 2).texto() == '1 + 2*gamma + gamma^2'
    assert (g * -2).texto() == '-2*gamma'
    assert SymbolPoly().texto() == '0'


def test_conversion_a_sympy():
    g, z = simbolo('gamma'), simbolo('zeta_2')
    x = (g + z * Fraction(1, 2)) ** 2
    G, Z = sympy.symbols('gamma zeta_2')
    assert sympy.expand(x.a_sympy() - (G + Z / 2) ** 2) == 0
    assert SymbolPoly().a_sympy() == 0


def test_no_guarda_ceros():
    g = simbolo('gamma')
    assert not (g - g)
    assert len(g + simbolo('pi') - g) == 1


def test_anillo_conmutativo(rng):
    for _ in range(10):
        a, b, c = _aleatorio(rng), _aleatorio(rng), _aleatorio(rng)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_sustituir_y_homogeneidad():
    p = simbolo('zeta_2') + simbolo('gamma') ** 2
    assert p.es_homogeneo()
    q = p.sustituir({'gamma': 0})
    assert q == simbolo('zeta_2')
    assert not (p + 1).es_homogeneo()


def test_truncar_en_q():
    q = simbolo('q')
    p = 1 + q + q ** 2
    assert p.truncar_simbolo('q', 1) == 1 + q
    assert p.coeficiente_en('q', 2) == 1


def test_unidad_imaginaria():
    i = simbolo('i')
    assert (i ** 2).reducir_unidad_imaginaria() == -1
    assert (i ** 3).reducir_unidad_imaginaria() == -i


def test_exponente_negativo():
    with pytest.raises(ZetagenusError):
        SymbolPoly({(('gamma', -1),): 1})


def test_evaluacion_numerica():
    x = simbolo('gamma') ** 2 * Fraction(1, 2) - simbolo('zeta_2')
    assert x.evaluar({'gamma': 2.0, 'zeta_2': 0.5}) == pytest.approx(1.5)
    assert x.evaluar({'gamma': Fraction(2), 'zeta_2': Fraction(1, 2)}, conversor=Fraction) == Fraction(3, 2)
