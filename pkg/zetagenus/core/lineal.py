"""
Álgebra lineal exacta sin fracciones.

Las filas se escalan a enteros y se eliminan por productos cruzados,
dividiendo por el contenido (mcd) en cada paso. El pivote es siempre la
primera columna no nula, de modo que los rangos son reproducibles.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .errores import CapacidadExcedidaError

logger = logging.getLogger(__name__)

VectorDisperso = Dict[int, int]


def _normalizar_contenido(v: VectorDisperso) -> VectorDisperso:
    g = 0
    for x in v.values():
        g = gcd(g, x)
        if g == 1:
            return v
    if g > 1:
        return {k: x // g for k, x in v.items()}
    return v


def a_enteros(vector: Mapping[int, object]) -> VectorDisperso:
    """Escala un vector racional disperso a enteros primitivos."""
    fracciones = {k: Fraction(x) for k, x in vector.items() if x}
    if not fracciones:
        return {}
    denominador = 1
    for x in fracciones.values():
        denominador = lcm(denominador, x.denominator)
    return _normalizar_contenido({k: int(x * denominador) for k, x in fracciones.items()})


class FormaEscalonada:
    """
    Forma escalonada incremental de un subespacio.

    Atributos:
        filas: columna pivote -> fila entera primitiva con pivote positivo
        capacidad: Rango máximo permitido (None = sin límite)
    """

    def __init__(self, capacidad: Optional[int] = None):
        self.filas: Dict[int, VectorDisperso] = {}
        self.capacidad = capacidad

    @property
    def rango(self) -> int:
        return len(self.filas)

    def reducir(self, vector: Mapping[int, object]) -> VectorDisperso:
        """Resto (escalado) de un vector módulo el subespacio; vacío si pertenece."""
        v = a_enteros(vector)
        while v:
            pivotes = [c for c in v if c in self.filas]
            if not pivotes:
                return v
            c = min(pivotes)
            fila = self.filas[c]
            g = gcd(fila[c], v[c])
            fa, fb = fila[c] // g, v[c] // g
            nuevo = {k: x * fa for k, x in v.items()}
            for k, x in fila.items():
                nuevo[k] = nuevo.get(k, 0) - fb * x
            v = _normalizar_contenido({k: x for k, x in nuevo.items() if x})
        return v

    def reducir_exacto(self, vector: Mapping[int, object]) -> Dict[int, Fraction]:
        """Resto sin reescalar, soportado en columnas no pivote."""
        v = {k: Fraction(x) for k, x in vector.items() if x}
        while v:
            pivotes = [c for c in v if c in self.filas]
            if not pivotes:
                return v
            c = min(pivotes)
            fila = self.filas[c]
            factor = v[c] / fila[c]
            for k, x in fila.items():
                nuevo = v.get(k, 0) - factor * x
                if nuevo:
                    v[k] = nuevo
                else:
                    v.pop(k, None)
        return v

    def contiene(self, vector: Mapping[int, object]) -> bool:
        return not self.reducir(vector)

    def agregar(self, vector: Mapping[int, object]) -> bool:
        """Añade el vector; devuelve False si ya estaba en el subespacio."""
        resto = self.reducir(vector)
        if not resto:
            return False
        pivote = min(resto)
        if resto[pivote] < 0:
            resto = {k: -x for k, x in resto.items()}
        self.filas[pivote] = resto
        if self.capacidad is not None and self.rango > self.capacidad:
            raise CapacidadExcedidaError(f"Rango {self.rango} supera la capacidad {self.capacidad}")
        return True

    def pivotes(self) -> List[int]:
        return sorted(self.filas)


def rango(filas: Sequence[Mapping[int, object]]) -> int:
    forma = FormaEscalonada()
    for fila in filas:
        forma.agregar(fila)
    return forma.rango


# =============================================================================
# SISTEMAS AFINES
# =============================================================================

@dataclass(frozen=True)
class SolucionAfin:
    """
    particular + span(nucleo).
    """
    particular: Tuple[Fraction, ...]
    nucleo: Tuple[Tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.nucleo)


def _fila_entera(fila: Sequence[object]) -> List[int]:
    dispersa = a_enteros(dict(enumerate(fila)))
    return [dispersa.get(k, 0) for k in range(len(fila))]


def _escalonar(m: List[List[int]], n_columnas: int) -> Tuple[List[int], List[int]]:
    """Eliminación hacia delante sobre las n_columnas primeras; devuelve (pivotes, libres)."""
    pivotes, libres = [], []
    piv_r = 0
    for piv_c in range(n_columnas):
        i_fila = next((r for r in range(piv_r, len(m)) if m[r][piv_c]), None)
        if i_fila is None:
            libres.append(piv_c)
            continue
        if i_fila != piv_r:
            m[piv_r], m[i_fila] = m[i_fila], m[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, len(m)):
            fr = m[r][piv_c]
            if not fr:
                continue
            m[r] = _fila_entera([fp * x - fr * y for x, y in zip(m[r], m[piv_r])])
        pivotes.append(piv_c)
        piv_r += 1
    return pivotes, libres


def _sustitucion_atras(m: List[List[int]], pivotes: List[int], n_columnas: int,
                       libres: Mapping[int, Fraction], con_termino: bool) -> Tuple[Fraction, ...]:
    sol = [Fraction(0)] * n_columnas
    for c, valor in libres.items():
        sol[c] = valor
    for r in range(len(pivotes) - 1, -1, -1):
        piv_c = pivotes[r]
        s = Fraction(-m[r][n_columnas]) if con_termino else Fraction(0)
        for c in range(piv_c + 1, n_columnas):
            if m[r][c]:
                s += m[r][c] * sol[c]
        sol[piv_c] = -s / m[r][piv_c]
    return tuple(sol)


def resolver_afin(A: Sequence[Sequence[object]], b: Sequence[object], n_columnas: int) -> Optional[SolucionAfin]:
    """
    Todas las soluciones de A x = b, o None si el sistema es incompatible.
    """
    if len(A) != len(b):
        raise ValueError("A y b deben tener el mismo número de filas")
    m = [_fila_entera(list(fila) + [t]) for fila, t in zip(A, b)]
    pivotes, libres = _escalonar(m, n_columnas)
    for r in range(len(pivotes), len(m)):
        if m[r][n_columnas]:
            logger.debug("Sistema incompatible en la fila %d", r)
            return None
    particular = _sustitucion_atras(m, pivotes, n_columnas, {}, True)
    nucleo = []
    for f in libres:
        valores = {g: Fraction(1 if g == f else 0) for g in libres}
        nucleo.append(_sustitucion_atras(m, pivotes, n_columnas, valores, False))
    return SolucionAfin(particular, tuple(nucleo))
