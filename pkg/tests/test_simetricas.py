from fractions import Fraction

import pytest

from zetagenus.core.errores import CapacidadExcedidaError, ZetagenusError
from zetagenus.core.polinomios import simbolo
from zetagenus.core.simetricas import (
    Particion,
    ReglaEspecializacion,
    SymmElement,
    en_subanillo_zeta_par,
    exp_infinity,
    exp_infinity_desde_e,
    generating_series,
    leer_elemento,
    newton_convert,
    specialize,
)


def _e(*partes):
    return SymmElement.basico('E', partes)


def test_particion_ordena_partes():
    assert Particion((1, 3, 2)).partes == (3, 2, 1)
    assert Particion.desde_texto('1,2').texto() == '2,1'
    with pytest.raises(ZetagenusError):
        Particion((2, 0))


def test_lectura_de_elementos():
    assert leer_elemento('p[2]') == SymmElement.generador('P', 2)
    assert leer_elemento('e[1,2]') == _e(2, 1)
    with pytest.raises(ZetagenusError):
        leer_elemento('x[2]')


def test_potencias_en_elementales():
    p2 = newton_convert(SymmElement.generador('P', 2), 'E')
    assert p2 == _e(1, 1) - _e(2).escalar(2)
    p3 = newton_convert(SymmElement.generador('P', 3), 'E')
    assert p3 == _e(1, 1, 1) - _e(2, 1).escalar(3) + _e(3).escalar(3)


def test_completas_en_elementales():
    h2 = newton_convert(SymmElement.generador('H', 2), 'E')
    assert h2 == _e(1, 1) - _e(2)
    assert h2.texto() == 'e[1,1] - e[2]'


@pytest.mark.parametrize('origen,destino', [('E', 'P'), ('H', 'P'), ('E', 'H'), ('P', 'H')])
def test_conversiones_ida_y_vuelta(origen, destino):
    for partes in [(3,), (2, 1), (2, 2, 1), (4, 1)]:
        x = SymmElement.basico(origen, partes)
        assert newton_convert(newton_convert(x, destino), origen) == x


def test_producto_convierte_bases():
    producto = _e(1) * SymmElement.generador('P', 1)
    assert producto.base == 'E'
    assert producto == _e(1, 1)


def test_peso_maximo():
    with pytest.raises(CapacidadExcedidaError):
        newton_convert(SymmElement.generador('P', 5), 'E', peso_maximo=4)
    with pytest.raises(CapacidadExcedidaError):
        generating_series('E', 13)


def test_serie_generadora_en_potencias():
    serie = generating_series('P', 3)
    e2 = newton_convert(_e(2), 'P').a_polinomio()
    assert serie[2] == e2
    assert generating_series('E', 3)[2] == simbolo('e_2')


def test_especializacion_zeta():
    regla = ReglaEspecializacion.zeta()
    assert specialize(SymmElement.generador('P', 2), regla) == simbolo('zeta_2')
    assert specialize(_e(1), regla) == simbolo('gamma')
    esperado = (simbolo('gamma') ** 2 - simbolo('zeta_2')).escalar(Fraction(1, 2))
    assert specialize(_e(2), regla) == esperado


def test_especializacion_finita():
    regla = ReglaEspecializacion.desde_texto('finite:3')
    assert specialize(_e(1), regla) == Fraction(11, 6)
    # 1/2 + 1/3 + 1/6
    assert specialize(_e(2), regla) == 1
    assert specialize(SymmElement.generador('P', 2), regla) == Fraction(49, 36)


def test_especializacion_multiplicativa():
    regla = ReglaEspecializacion.zeta()
    a = SymmElement.generador('H', 2)
    b = _e(2, 1)
    assert specialize(a * b, regla) == specialize(a, regla) * specialize(b, regla)


def test_regla_potencia_cae_en_zetas_pares():
    regla = ReglaEspecializacion.desde_texto('power:2')
    for x in [_e(3), SymmElement.generador('H', 4), _e(2, 1)]:
        assert en_subanillo_zeta_par(specialize(x, regla))
    assert not en_subanillo_zeta_par(specialize(_e(2), ReglaEspecializacion.zeta()))


def test_reglas_mal_escritas():
    for texto in ['power:0', 'finite:x', 'zeta:1', 'cubo']:
        with pytest.raises(ZetagenusError):
            ReglaEspecializacion.desde_texto(texto)


def test_exp_infinity_por_dos_rutas():
    serie = exp_infinity(5)
    assert serie[2] == -simbolo('h_1')
    assert serie[3] == simbolo('h_2')
    assert exp_infinity_desde_e(5) == serie
