"""
Módulo de entrada/salida: reportes de la línea de comandos.

Un reporte tiene datos escalares (dict, en orden de inserción) y,
opcionalmente, una tabla (DataFrame). Formatos:
- text: líneas "clave: valor" y la tabla con to_string
- json: un objeto con claves en orden fijo; racionales como "num/den"
- csv: la tabla (o los datos como una fila) con cabecera
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from .configuracion import FORMATOS
from .errores import ZetagenusError


@dataclass
class Reporte:
    """
    Resultado de un subcomando.

    Atributos:
        datos: Valores escalares o anidados, en el orden de emisión
        tabla: Tabla opcional (filas del reporte)
        pasa: None si no es una verificación; True/False si lo es
    """
    datos: Dict[str, object] = field(default_factory=dict)
    tabla: Optional[pd.DataFrame] = None
    pasa: Optional[bool] = None

    @property
    def vacio(self) -> bool:
        return not self.datos and (self.tabla is None or self.tabla.empty)


def _serializable(valor):
    """Convierte valores exactos y de numpy a tipos JSON."""
    if isinstance(valor, bool) or valor is None or isinstance(valor, (str, int)):
        return valor
    if isinstance(valor, Fraction):
        return f"{valor.numerator}/{valor.denominator}"
    if isinstance(valor, float):
        return valor
    if isinstance(valor, np.bool_):
        return bool(valor)
    if isinstance(valor, np.integer):
        return int(valor)
    if isinstance(valor, np.floating):
        return float(valor)
    if isinstance(valor, dict):
        return {str(k): _serializable(v) for k, v in valor.items()}
    if isinstance(valor, (list, tuple)):
        return [_serializable(v) for v in valor]
    if hasattr(valor, 'texto'):
        return valor.texto()
    raise ZetagenusError(f"Valor no serializable en el reporte: {type(valor).__name__}")


def _filas(tabla: pd.DataFrame) -> List[dict]:
    return [{str(c): _serializable(v) for c, v in zip(tabla.columns, fila)}
            for fila in tabla.itertuples(index=False, name=None)]


def _texto_valor(valor) -> str:
    valor = _serializable(valor)
    if isinstance(valor, (dict, list)):
        return json.dumps(valor, ensure_ascii=False)
    if isinstance(valor, bool):
        return 'true' if valor else 'false'
    return str(valor)


def _emitir_json(reporte: Reporte) -> str:
    objeto = _serializable(reporte.datos)
    if reporte.tabla is not None:
        objeto['rows'] = _filas(reporte.tabla)
    return json.dumps(objeto, ensure_ascii=False, indent=2) + '\n'


def _emitir_csv(reporte: Reporte) -> str:
    if reporte.tabla is not None:
        tabla = pd.DataFrame(_filas(reporte.tabla), columns=[str(c) for c in reporte.tabla.columns])
    elif reporte.datos:
        tabla = pd.DataFrame([{k: _texto_valor(v) for k, v in reporte.datos.items()}])
    else:
        return ''
    return tabla.to_csv(index=False)


def _emitir_texto(reporte: Reporte) -> str:
    lineas = [f"{k}: {_texto_valor(v)}" for k, v in reporte.datos.items()]
    if reporte.tabla is not None and not reporte.tabla.empty:
        if lineas:
            lineas.append('')
        tabla = pd.DataFrame(_filas(reporte.tabla), columns=[str(c) for c in reporte.tabla.columns])
        lineas.append(tabla.to_string(index=False))
    return '\n'.join(lineas) + '\n' if lineas else ''


def emit(reporte: Reporte, formato: str = 'text') -> str:
    """
    Serializa un reporte de forma estable: dos llamadas con el mismo
    reporte dan exactamente el mismo texto.

    Reporte vacío en JSON -> "{}" y salto de línea.
    """
    if formato not in FORMATOS:
        raise ZetagenusError(f"Formato desconocido: {formato}")
    if formato == 'json':
        if reporte.vacio and reporte.tabla is None:
            return '{}\n'
        return _emitir_json(reporte)
    if formato == 'csv':
        return _emitir_csv(reporte)
    return _emitir_texto(reporte)


# =============================================================================
# LECTURA DE ARGUMENTOS
# =============================================================================

def leer_enteros(texto: str) -> List[int]:
    """'2,1' -> [2, 1]."""
    try:
        return [int(p) for p in texto.strip().strip('()').split(',') if p.strip()]
    except ValueError:
        raise ZetagenusError(f"Lista de enteros mal escrita: {texto!r}") from None
