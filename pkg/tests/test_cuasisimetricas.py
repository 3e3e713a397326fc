from fractions import Fraction

import mpmath
import pytest

from zetagenus.core.cuasisimetricas import (
    Composicion,
    QSymmElement,
    WittField,
    finite_truncation,
    lie_to_witt,
    mzv_eval,
    stuffle_product,
    symm_to_qsymm,
)
from zetagenus.core.errores import DivergenciaError, PrecisionInsuficienteError, ZetagenusError
from zetagenus.core.lie import Alfabeto, ElementoLie
from zetagenus.core.simetricas import ReglaEspecializacion, SymmElement, specialize

M = QSymmElement.monomial


def test_composiciones():
    assert Composicion.desde_texto('2,1').partes == (2, 1)
    assert Composicion.desde_texto('(3)').texto() == '(3)'
    assert Composicion.desde_texto('') == Composicion(())
    assert Composicion((2, 1)).es_admisible
    assert not Composicion((1, 2)).es_admisible
    with pytest.raises(ZetagenusError):
        Composicion((2, 0))


def test_stuffle_de_ejemplo():
    assert stuffle_product(M((2,)), M((3,))) == M((2, 3)) + M((3, 2)) + M((5,))
    assert M((1,)) * M((1,)) == M((1, 1)).escalar(2) + M((2,))
    assert (M((2,)) * M((3,))).texto() == 'M(2,3) + M(3,2) + M(5)'


def test_stuffle_conmutativo_y_asociativo():
    a = M((1, 2)) + M((3,)).escalar(Fraction(1, 2))
    b = M((2,)) - M((1, 1))
    c = M((1,))
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * QSymmElement.uno() == a


def test_inclusion_desde_symm():
    assert symm_to_qsymm(SymmElement.generador('E', 2)) == M((1, 1))
    assert symm_to_qsymm(SymmElement.generador('H', 2)) == M((2,)) + M((1, 1))
    assert symm_to_qsymm(SymmElement.generador('P', 3)) == M((3,))


def test_truncamiento_finito():
    assert finite_truncation(M((2,)), 2) == Fraction(5, 4)
    assert finite_truncation(M((2, 1)), 3) == Fraction(5, 12)
    assert finite_truncation(QSymmElement.uno(), 4) == 1
    assert finite_truncation(M((2,)), 2, valores=[2, 3]) == 13
    with pytest.raises(ZetagenusError):
        finite_truncation(M((2,)), 0)


def test_truncamiento_es_multiplicativo():
    a = M((2, 1)) + M((1,))
    b = M((3,)) - M((1, 1))
    for m in (1, 3, 6):
        assert finite_truncation(a * b, m) == finite_truncation(a, m) * finite_truncation(b, m)


def test_truncamiento_coincide_con_especializacion_finita():
    for x in [SymmElement.generador('E', 3), SymmElement.basico('H', (2, 1))]:
        regla = ReglaEspecializacion.finita(5)
        assert specialize(x, regla) == finite_truncation(symm_to_qsymm(x), 5)


def test_zeta_de_dos():
    valor = mzv_eval('2')
    assert abs(valor.valor - float(mpmath.zeta(2))) < 1e-8
    assert valor.cota_error <= 1e-6
    assert list(valor.a_dict()) == ['value', 'error_bound', 'cutoff']


def test_relacion_de_euler():
    doble = mzv_eval((2, 1))
    assert abs(doble.valor - float(mpmath.zeta(3))) < 1e-6


def test_valores_de_profundidad_dos():
    pi4 = float(mpmath.pi) ** 4
    assert abs(mzv_eval((3, 1)).valor - pi4 / 360) < 1e-6
    assert abs(mzv_eval((2, 2)).valor - pi4 / 120) < 1e-6


@pytest.mark.lento
def test_profundidad_tres():
    # zeta(2,1,1) = zeta(4)
    valor = mzv_eval((2, 1, 1), tolerancia=1e-3)
    assert abs(valor.valor - float(mpmath.zeta(4))) < 1e-3


def test_composiciones_divergentes():
    with pytest.raises(DivergenciaError):
        mzv_eval((1, 2))
    with pytest.raises(DivergenciaError):
        mzv_eval(())


def test_precision_insuficiente():
    with pytest.raises(PrecisionInsuficienteError):
        mzv_eval((2,), tolerancia=1e-30, corte=100, corte_maximo=1000)


def test_corchete_de_witt():
    z1, z2 = WittField.generador(1), WittField.generador(2)
    assert z1.corchete(z2) == WittField.generador(3)
    assert z2.corchete(z1) == WittField.generador(3, -1)
    assert z1.aplicar({1: 1}) == {2: 1}


def test_lie_a_witt():
    alfabeto = Alfabeto.graduado(4)
    Z1, Z2, Z3 = (ElementoLie.generador(i) for i in range(3))
    assert lie_to_witt(Z1.corchete(Z2), alfabeto) == WittField.generador(3)
    assert lie_to_witt(Z1.corchete(Z1.corchete(Z2)), alfabeto) == WittField.generador(4, 2)
    x = Z1.corchete(Z3) + Z2 * 3
    y = Z1 + Z2.corchete(Z1)
    assert lie_to_witt(x.corchete(y), alfabeto) == \
        lie_to_witt(x, alfabeto).corchete(lie_to_witt(y, alfabeto))
