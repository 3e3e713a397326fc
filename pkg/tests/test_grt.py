import pytest

from zetagenus.core.errores import CapacidadExcedidaError, ZetagenusError
from zetagenus.core.grt import (
    AB,
    A,
    B,
    GrtCandidate,
    base_fr_derivada,
    drinfeld_bracket,
    grt_check,
    grt_solve,
    ihara_psi,
    residuo_antisimetria,
    residuo_pentagono,
    terminos_ihara,
)


def test_ihara_en_grado_tres():
    psi = ihara_psi(3)
    assert psi.grado == 3
    assert psi.psi == (A.corchete(A.corchete(B)) + B.corchete(A.corchete(B))) * 3
    assert len(terminos_ihara(5)) == 4


def test_ihara_rechaza_grados_pares():
    for n in (2, 4, 1):
        with pytest.raises(ZetagenusError):
            ihara_psi(n)


def test_ihara_tres_pasa_las_cuatro_relaciones():
    reporte = grt_check(ihara_psi(3))
    assert reporte.pasa
    assert all(reporte.cumple(r) for r in ('antisimetria', 'hexagono', 'conmutacion', 'pentagono'))


def test_pentagono_por_eliminacion():
    reporte = grt_check(ihara_psi(3), metodo='eliminacion')
    assert reporte.pasa
    assert reporte.a_dict()['method'] == 'eliminacion'


def test_reporte_de_residuos():
    reporte = grt_check(GrtCandidate.desde_elemento(A.corchete(A.corchete(B))))
    assert not reporte.pasa
    datos = reporte.a_dict()
    assert list(datos) == ['degree', 'method', 'antisimetria_residual', 'hexagono_residual',
                           'conmutacion_residual', 'pentagono_residual', 'passes']
    assert datos['passes'] is False
    assert datos['antisimetria_residual'] != '0'


def test_metodo_desconocido():
    with pytest.raises(ZetagenusError):
        grt_check(ihara_psi(3), metodo='otro')


def test_candidato_no_homogeneo():
    with pytest.raises(ZetagenusError):
        GrtCandidate.desde_elemento(A + A.corchete(B))
    with pytest.raises(ZetagenusError):
        GrtCandidate.desde_elemento(A.corchete(B), grado=3)
    assert GrtCandidate.desde_elemento(A * 0).grado == 0


def test_residuos_son_lineales():
    x, y = ihara_psi(3).psi, A.corchete(A.corchete(B))
    assert residuo_antisimetria(x + y) == residuo_antisimetria(x) + residuo_antisimetria(y)
    assert residuo_pentagono(x * 2) == residuo_pentagono(x) * 2


def test_base_del_derivado():
    assert base_fr_derivada(4) == []
    assert len(base_fr_derivada(5)) == 2
    for x in base_fr_derivada(6):
        assert x.grados(AB) == [6]


def test_solucion_en_grado_tres():
    solucion = grt_solve(3)
    assert not solucion.vacia
    assert solucion.candidato().psi == ihara_psi(3).psi
    assert solucion.nucleo() == []


def test_semilla_fuera_de_grt_sin_solucion():
    semilla = GrtCandidate.desde_elemento(A.corchete(A.corchete(B)))
    solucion = grt_solve(3, semilla)
    assert solucion.vacia
    assert solucion.a_json() == {'degree': 3, 'particular_solution': None, 'nullspace_basis': []}
    with pytest.raises(ZetagenusError):
        solucion.particular()


def test_correccion_en_grado_cinco():
    solucion = grt_solve(5)
    assert not solucion.vacia
    assert grt_check(solucion.candidato()).pasa
    for v in solucion.nucleo():
        assert grt_check(GrtCandidate.desde_elemento(v, 5)).pasa


@pytest.mark.lento
def test_correccion_en_grado_siete():
    candidato = grt_solve(7).candidato()
    assert grt_check(candidato).pasa
    # p_4 en grado 7 supera la capacidad por defecto de la eliminación
    with pytest.raises(CapacidadExcedidaError):
        grt_check(candidato, metodo='eliminacion')


def test_corchete_de_drinfeld_antisimetrico():
    psi = ihara_psi(3)
    assert not drinfeld_bracket(psi, psi).psi
    assert drinfeld_bracket(psi, psi).grado == 0


@pytest.mark.lento
def test_corchete_de_drinfeld_cierra_en_grt():
    psi3 = grt_solve(3).candidato()
    psi5 = grt_solve(5).candidato()
    corchete = drinfeld_bracket(psi3, psi5)
    assert corchete.grado == 8
    assert grt_check(corchete).pasa
