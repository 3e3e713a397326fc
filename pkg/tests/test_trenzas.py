import pytest

from zetagenus.core.errores import CapacidadExcedidaError, ZetagenusError
from zetagenus.core.lie import ElementoLie, lyndon_basis
from zetagenus.core.trenzas import (
    ElementoPn,
    alfabeto_pn,
    dimension_casi_directa,
    generador_pn,
    nombre_generador,
    pares_pn,
    pbn_component,
    pn_desde_lie,
    reducir_en_pn,
    relaciones_pn,
)


def _aleatorio_pn(rng, n, grado):
    palabras = lyndon_basis(alfabeto_pn(n), grado)
    return ElementoLie({w: int(rng.integers(-2, 3)) for w in palabras})


def test_generadores():
    assert pares_pn(3) == [(1, 2), (1, 3), (2, 3)]
    assert alfabeto_pn(3).nombres == ('x_12', 'x_13', 'x_23')
    assert nombre_generador(1, 10, 10) == 'x_1.10'
    assert generador_pn(4, 3, 1) == generador_pn(4, 1, 3)
    with pytest.raises(ZetagenusError):
        generador_pn(3, 1, 4)
    with pytest.raises(ZetagenusError):
        pares_pn(1)


def test_numero_de_relaciones():
    assert len(relaciones_pn(3)) == 3
    relaciones = relaciones_pn(4)
    assert sum(r.tipo == 'disjuntos' for r in relaciones) == 3
    assert sum(r.tipo == 'triple' for r in relaciones) == 12


@pytest.mark.parametrize('n,dimensiones', [(3, (3, 1, 2)), (4, (6, 4))])
def test_dimensiones_conocidas(n, dimensiones):
    for grado, esperada in enumerate(dimensiones, start=1):
        assert pbn_component(n, grado).dimension == esperada
        assert dimension_casi_directa(n, grado) == esperada


@pytest.mark.parametrize('n,grado', [(3, 4), (4, 3), (5, 2)])
def test_eliminacion_coincide_con_modelo_casi_directo(n, grado):
    assert pbn_component(n, grado).dimension == dimension_casi_directa(n, grado)


@pytest.mark.lento
@pytest.mark.parametrize('n,grado', [(4, 4), (5, 3)])
def test_dimensiones_en_grados_altos(n, grado):
    assert pbn_component(n, grado).dimension == dimension_casi_directa(n, grado)


def test_base_de_p3_en_grado_dos():
    assert pbn_component(3, 2).base_texto() == ['[x_13,x_23]']


def test_relaciones_se_anulan_en_ambos_modelos():
    componente = pbn_component(4, 2)
    for relacion in relaciones_pn(4):
        assert componente.es_cero(relacion.elemento)
        assert not pn_desde_lie(relacion.elemento, 4)


def test_ideal_se_anula_en_grado_tres():
    componente = pbn_component(4, 3)
    for relacion in relaciones_pn(4)[:5]:
        x = generador_pn(4, 1, 2).corchete(relacion.elemento)
        assert componente.es_cero(x)
        assert not componente.reducir(x)


def test_reduccion_compatible_con_modelo_casi_directo(rng):
    componente = pbn_component(4, 3)
    for _ in range(5):
        x = _aleatorio_pn(rng, 4, 3)
        y = componente.reducir(x)
        assert pn_desde_lie(x, 4) == pn_desde_lie(y, 4)
        assert componente.es_cero(x) == (not pn_desde_lie(x, 4))


def test_reduccion_no_homogenea():
    x = generador_pn(3, 1, 2) + relaciones_pn(3)[0].elemento
    assert reducir_en_pn(x, 3) == generador_pn(3, 1, 2)


def test_capacidad():
    with pytest.raises(CapacidadExcedidaError):
        pbn_component(5, 4, capacidad=10)


def test_grado_de_componente_invalido():
    with pytest.raises(ZetagenusError):
        pbn_component(3, 0)
    with pytest.raises(ZetagenusError):
        pbn_component(3, 2).coordenadas(generador_pn(3, 1, 2))


def test_elementos_casi_directos():
    x12 = ElementoPn.generador(3, 2, 1)
    assert x12 == ElementoPn.generador(3, 1, 2)
    with pytest.raises(ZetagenusError):
        ElementoPn.generador(3, 3, 3)
    x13, x23 = ElementoPn.generador(3, 1, 3), ElementoPn.generador(3, 2, 3)
    assert not x12.corchete(x13 + x23)
    assert x12.corchete(x12) == ElementoPn(3)


def test_jacobi_casi_directo(rng):
    for _ in range(3):
        x, y, z = (pn_desde_lie(_aleatorio_pn(rng, 4, g), 4) for g in (1, 1, 2))
        total = x.corchete(y.corchete(z)) + y.corchete(z.corchete(x)) + z.corchete(x.corchete(y))
        assert not total
