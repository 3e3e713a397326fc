import json
from fractions import Fraction

import numpy as np
import pandas as pd
import pytest

from zetagenus.core.errores import ZetagenusError
from zetagenus.core.io import Reporte, emit, leer_enteros
from zetagenus.core.polinomios import simbolo


def _reporte():
    tabla = pd.DataFrame({'n': np.arange(2), 'valor': [Fraction(1, 2), simbolo('gamma')]})
    return Reporte({'genus': 'gamma', 'exact': Fraction(-3, 4), 'passes': True}, tabla, pasa=True)


def test_json_con_racionales_y_filas():
    datos = json.loads(emit(_reporte(), 'json'))
    assert list(datos) == ['genus', 'exact', 'passes', 'rows']
    assert datos['exact'] == '-3/4'
    assert datos['rows'] == [{'n': 0, 'valor': '1/2'}, {'n': 1, 'valor': 'gamma'}]


def test_json_vacio():
    assert emit(Reporte(), 'json') == '{}\n'


def test_emision_estable():
    for formato in ('text', 'json', 'csv'):
        assert emit(_reporte(), formato) == emit(_reporte(), formato)


def test_texto():
    salida = emit(_reporte(), 'text')
    assert salida.startswith('genus: gamma\nexact: -3/4\npasses: true\n\n')
    assert emit(Reporte(), 'text') == ''


def test_csv_sin_tabla():
    salida = emit(Reporte({'value': Fraction(11, 6), 'ok': False}), 'csv')
    assert salida.splitlines() == ['value,ok', '11/6,false']
    assert emit(Reporte(), 'csv') == ''


def test_formato_desconocido():
    with pytest.raises(ZetagenusError):
        emit(_reporte(), 'xml')


def test_valor_no_serializable():
    with pytest.raises(ZetagenusError):
        emit(Reporte({'x': object()}), 'json')


def test_lectura_de_listas():
    assert leer_enteros('(2,1)') == [2, 1]
    assert leer_enteros('') == []
    with pytest.raises(ZetagenusError):
        leer_enteros('2,a')
