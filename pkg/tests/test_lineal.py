from fractions import Fraction

import pytest

from zetagenus.core.errores import CapacidadExcedidaError
from zetagenus.core.lineal import FormaEscalonada, a_enteros, rango, resolver_afin


def test_escalado_a_enteros():
    assert a_enteros({0: Fraction(1, 2), 3: Fraction(-3, 4)}) == {0: 2, 3: -3}
    assert a_enteros({1: 0}) == {}


def test_rango_reproducible():
    filas = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: -1}, {2: 5}]
    assert rango(filas) == 3
    assert rango([{0: 2}, {0: Fraction(1, 3)}]) == 1


def test_forma_escalonada_incremental():
    forma = FormaEscalonada()
    assert forma.agregar({0: 1, 1: 2})
    assert not forma.agregar({0: 2, 1: 4})
    assert forma.contiene({0: Fraction(1, 2), 1: 1})
    assert not forma.contiene({1: 1})
    assert forma.pivotes() == [0]


def test_reduccion_exacta():
    forma = FormaEscalonada()
    forma.agregar({0: 1, 1: 1})
    assert forma.reducir_exacto({0: 3, 1: 5}) == {1: 2}
    assert forma.reducir_exacto({0: 2, 1: 2}) == {}


def test_capacidad():
    forma = FormaEscalonada(capacidad=2)
    forma.agregar({0: 1})
    forma.agregar({1: 1})
    with pytest.raises(CapacidadExcedidaError):
        forma.agregar({2: 1})


def test_sistema_con_nucleo():
    solucion = resolver_afin([[1, 1, 0], [0, 1, 1]], [2, 3], 3)
    assert solucion.dimension == 1
    x = solucion.particular
    assert x[0] + x[1] == 2 and x[1] + x[2] == 3
    v = solucion.nucleo[0]
    assert v[0] + v[1] == 0 and v[1] + v[2] == 0


def test_sistema_incompatible():
    assert resolver_afin([[1, 1], [2, 2]], [1, 3], 2) is None


def test_sistema_sin_columnas():
    assert resolver_afin([[], []], [0, 0], 0).particular == ()
    assert resolver_afin([[]], [1], 0) is None
