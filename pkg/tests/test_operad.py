import pytest

from zetagenus.core.errores import ZetagenusError
from zetagenus.core.lie import ElementoLie
from zetagenus.core.operad import (
    OrderedPartition,
    cabling_coherence,
    cabling_map,
    cabling_respects_relations,
    cabling_sweep,
    coherence_sweep,
    factores_conmutan,
    juxtapose,
    particiones_ordenadas,
    refinamientos,
)
from zetagenus.core.trenzas import generador_pn, pbn_component, relaciones_pn


def test_particion_ordenada():
    I = OrderedPartition.desde_texto('(2,1,3)')
    assert I.total == 6 and I.r == 3
    assert I.bloques == [(1, 2), (3,), (4, 5, 6)]
    assert I.texto() == '(2,1,3)'
    for malo in ['(2,0)', 'a,b', '']:
        with pytest.raises(ZetagenusError):
            OrderedPartition.desde_texto(malo)


def test_cableado_de_ejemplo():
    I = OrderedPartition((2, 1))
    imagen = cabling_map(I, generador_pn(2, 1, 2))
    assert imagen == generador_pn(3, 1, 3) + generador_pn(3, 2, 3)


def test_cableado_trivial_es_identidad():
    I = OrderedPartition((1, 1, 1))
    x = generador_pn(3, 1, 2).corchete(generador_pn(3, 2, 3))
    assert cabling_map(I, x) == x


def test_yuxtaposicion():
    x12 = generador_pn(2, 1, 2)
    assert juxtapose([x12, x12], OrderedPartition((2, 2))) == generador_pn(4, 1, 2) + generador_pn(4, 3, 4)
    assert juxtapose([ElementoLie(), x12], OrderedPartition((1, 2))) == generador_pn(3, 2, 3)
    with pytest.raises(ZetagenusError):
        juxtapose([x12], OrderedPartition((2, 2)))
    with pytest.raises(ZetagenusError):
        juxtapose([generador_pn(3, 2, 3), x12], OrderedPartition((2, 2)))


def test_factores_conmutan():
    assert factores_conmutan(OrderedPartition((2, 2)))
    assert factores_conmutan(OrderedPartition((3, 2)))
    assert factores_conmutan(OrderedPartition((1,)))


def test_cableado_respeta_relaciones_en_p4():
    reporte = cabling_respects_relations(OrderedPartition((1, 2, 1)), n=4)
    assert reporte.pasa
    tabla = reporte.a_tabla()
    assert list(tabla.columns) == ['partition', 'relation', 'residual_zero']
    assert len(tabla) == len(relaciones_pn(3))


def test_cableado_total_incorrecto():
    with pytest.raises(ZetagenusError):
        cabling_respects_relations(OrderedPartition((2, 1)), n=4)


def test_cableado_anula_relaciones_de_p3():
    I = OrderedPartition((1, 1, 1))
    for relacion in relaciones_pn(3):
        assert pbn_component(3, 2).es_cero(cabling_map(I, relacion.elemento))
    x12 = generador_pn(2, 1, 2)
    assert not cabling_map(OrderedPartition((2, 1)), x12.corchete(x12))


def test_coherencia():
    I = OrderedPartition((2, 3))
    J = (OrderedPartition((1, 1)), OrderedPartition((2, 1)))
    reporte = cabling_coherence(I, J)
    assert reporte.pasa
    assert list(reporte.a_tabla()['generator']) == ['x_12']


def test_coherencia_refinamiento_incompatible():
    with pytest.raises(ZetagenusError):
        cabling_coherence(OrderedPartition((2, 1)), (OrderedPartition((1, 1)),))
    with pytest.raises(ZetagenusError):
        cabling_coherence(OrderedPartition((2, 1)), (OrderedPartition((1,)), OrderedPartition((1,))))


@pytest.mark.parametrize('total', range(1, 7))
def test_numero_de_particiones(total):
    particiones = particiones_ordenadas(total)
    assert len(particiones) == 2 ** (total - 1)
    assert all(p.total == total for p in particiones)
    assert len(set(particiones)) == len(particiones)


def test_refinamientos():
    assert len(refinamientos(OrderedPartition((2, 3)))) == 2 * 4


def test_barrido_de_cableado():
    tabla = cabling_sweep(max_total=4)
    assert len(tabla) > 0
    assert tabla['residual_zero'].all()


def test_barrido_de_coherencia():
    tabla = coherence_sweep(max_total=4)
    assert len(tabla) > 0
    assert tabla['equal'].all()


@pytest.mark.lento
def test_barridos_completos():
    assert cabling_sweep().residual_zero.all()
    assert coherence_sweep().equal.all()
