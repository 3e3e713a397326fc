"""
Estructura operádica de las álgebras de trenzas puras.

Particiones ordenadas I = (i_1, ..., i_r) con bloques consecutivos,
yuxtaposición p_(i_1) x ... x p_(i_r) -> p_|I| y el cableado de primer
orden c_I(x_st) = sum_{p en bloque s, q en bloque t} x_pq.
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from .errores import ZetagenusError
from .lie import ElementoLie, sustituir
from .trenzas import (alfabeto_pn, generador_pn, nombre_generador, pares_pn, pbn_component,
                      relaciones_pn)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrderedPartition:
    """
    Atributos:
        partes: (i_1, ..., i_r), enteros positivos
    """
    partes: Tuple[int, ...]

    def __post_init__(self):
        partes = tuple(int(p) for p in self.partes)
        if not partes or any(p < 1 for p in partes):
            raise ZetagenusError(f"Partición ordenada no válida: {self.partes}")
        object.__setattr__(self, 'partes', partes)

    @classmethod
    def desde_texto(cls, texto: str) -> 'OrderedPartition':
        try:
            return cls(tuple(int(p) for p in texto.strip().strip('()').split(',')))
        except ValueError:
            raise ZetagenusError(f"Partición mal escrita: {texto!r}") from None

    @property
    def total(self) -> int:
        return sum(self.partes)

    @property
    def r(self) -> int:
        return len(self.partes)

    @property
    def bloques(self) -> List[Tuple[int, ...]]:
        bloques, inicio = [], 1
        for p in self.partes:
            bloques.append(tuple(range(inicio, inicio + p)))
            inicio += p
        return bloques

    def texto(self) -> str:
        return '(' + ','.join(map(str, self.partes)) + ')'


def _suma_generadores(n: int, pares) -> ElementoLie:
    total = ElementoLie()
    for p, q in pares:
        total = total + generador_pn(n, p, q)
    return total


def _validar_en_pn(x: ElementoLie, n: int, que: str):
    letras = len(alfabeto_pn(n)) if n >= 2 else 0
    for w, _ in x.items():
        if any(letra >= letras for letra in w):
            raise ZetagenusError(f"{que}: el elemento no vive en p_{n}")


# =============================================================================
# YUXTAPOSICIÓN
# =============================================================================

def juxtapose(elementos: Sequence[ElementoLie], particion: OrderedPartition) -> ElementoLie:
    """Reetiqueta el factor j en el bloque j y suma; el factor j vive en p_(i_j)."""
    if len(elementos) != particion.r:
        raise ZetagenusError(f"Se esperaban {particion.r} factores, hay {len(elementos)}")
    total = ElementoLie()
    n = particion.total
    for x, bloque, i in zip(elementos, particion.bloques, particion.partes):
        _validar_en_pn(x, i, "Yuxtaposición")
        if not x:
            continue
        desplazamiento = bloque[0] - 1
        imagenes = {letra: generador_pn(n, a + desplazamiento, b + desplazamiento)
                    for letra, (a, b) in enumerate(pares_pn(i))}
        total = total + sustituir(x, imagenes)
    return total


def imagen_factor(particion: OrderedPartition, factor: int, x: ElementoLie) -> ElementoLie:
    """Imagen de x en el factor dado (los demás factores nulos)."""
    elementos = [ElementoLie() for _ in particion.partes]
    elementos[factor] = x
    return juxtapose(elementos, particion)


def factores_conmutan(particion: OrderedPartition) -> bool:
    """[imagen de g en el factor j, imagen de h en el factor k] = 0 en p_|I| para j != k."""
    n = particion.total
    if n < 2:
        return True
    componente = pbn_component(n, 2)
    for j, k in ((j, k) for j in range(particion.r) for k in range(j + 1, particion.r)):
        if particion.partes[j] < 2 or particion.partes[k] < 2:
            continue
        for a in pares_pn(particion.partes[j]):
            for b in pares_pn(particion.partes[k]):
                g = imagen_factor(particion, j, generador_pn(particion.partes[j], *a))
                h = imagen_factor(particion, k, generador_pn(particion.partes[k], *b))
                if not componente.es_cero(g.corchete(h)):
                    return False
    return True


# =============================================================================
# CABLEADO
# =============================================================================

def imagenes_cableado(particion: OrderedPartition) -> Dict[int, ElementoLie]:
    """Letra x_st de p_r -> sum_{p en B_s, q en B_t} x_pq."""
    n = particion.total
    bloques = particion.bloques
    return {letra: _suma_generadores(n, product(bloques[s - 1], bloques[t - 1]))
            for letra, (s, t) in enumerate(pares_pn(particion.r))}


def cabling_map(particion: OrderedPartition, x: ElementoLie) -> ElementoLie:
    """c_I(x) como homomorfismo de Lie desde el álgebra libre en los x_st de p_r."""
    _validar_en_pn(x, particion.r, "Cableado")
    if not x:
        return ElementoLie()
    return sustituir(x, imagenes_cableado(particion))


@dataclass
class ReporteCableado:
    """
    Atributos:
        particion: Partición I
        filas: Una fila {partition, relation, residual_zero} por relación
    """
    particion: OrderedPartition
    filas: List[dict] = field(default_factory=list)

    @property
    def pasa(self) -> bool:
        return all(f['residual_zero'] for f in self.filas)

    def a_tabla(self) -> pd.DataFrame:
        return pd.DataFrame(self.filas, columns=['partition', 'relation', 'residual_zero'])


def cabling_respects_relations(particion: OrderedPartition, n: Optional[int] = None) -> ReporteCableado:
    """
    Cada relación de p_r va, por c_I, al ideal de relaciones de p_|I|
    (reducción a cero en grado 2).
    """
    if n is not None and n != particion.total:
        raise ZetagenusError(f"La partición {particion.texto()} no suma {n}")
    reporte = ReporteCableado(particion)
    if particion.r < 2:
        return reporte
    componente = pbn_component(particion.total, 2) if particion.total >= 2 else None
    for relacion in relaciones_pn(particion.r):
        imagen = cabling_map(particion, relacion.elemento)
        reporte.filas.append({
            'partition': particion.texto(),
            'relation': relacion.etiqueta,
            'residual_zero': componente.es_cero(imagen) if imagen else True,
        })
    return reporte


@dataclass
class ReporteCoherencia:
    """
    Atributos:
        particion: Partición I
        refinamiento: Particiones J_s de cada parte i_s
        filas: Una fila por generador x_ab de p_r
    """
    particion: OrderedPartition
    refinamiento: Tuple[OrderedPartition, ...]
    filas: List[dict] = field(default_factory=list)

    @property
    def pasa(self) -> bool:
        return all(f['equal'] for f in self.filas)

    def a_tabla(self) -> pd.DataFrame:
        return pd.DataFrame(self.filas, columns=['partition', 'refinement', 'generator', 'equal'])


def cabling_coherence(particion: OrderedPartition,
                      refinamiento: Sequence[OrderedPartition]) -> ReporteCoherencia:
    """
    Con K = J_1 ... J_r concatenadas y H = (|J_1|, ..., |J_r|) (número de
    partes), comprueba c_K(c_H(x_ab)) = c_I(x_ab) en cada generador.
    """
    refinamiento = tuple(refinamiento)
    if len(refinamiento) != particion.r or any(
            j.total != i for j, i in zip(refinamiento, particion.partes)):
        raise ZetagenusError(f"Refinamiento incompatible con {particion.texto()}")
    K = OrderedPartition(tuple(p for j in refinamiento for p in j.partes))
    H = OrderedPartition(tuple(j.r for j in refinamiento))
    texto_refinamiento = '(' + ','.join(j.texto() for j in refinamiento) + ')'
    reporte = ReporteCoherencia(particion, refinamiento)
    if particion.r < 2:
        return reporte
    for a, b in pares_pn(particion.r):
        x = generador_pn(particion.r, a, b)
        compuesto = cabling_map(K, cabling_map(H, x))
        directo = cabling_map(particion, x)
        reporte.filas.append({
            'partition': particion.texto(),
            'refinement': texto_refinamiento,
            'generator': nombre_generador(a, b, particion.r),
            'equal': compuesto == directo,
        })
    return reporte


# =============================================================================
# BARRIDOS
# =============================================================================

def particiones_ordenadas(total: int) -> List[OrderedPartition]:
    """Las 2^(total-1) composiciones de total."""
    if total < 1:
        raise ZetagenusError(f"El total debe ser >= 1: {total}")
    resultado = []
    for cortes in product((False, True), repeat=total - 1):
        partes, actual = [], 1
        for corte in cortes:
            if corte:
                partes.append(actual)
                actual = 1
            else:
                actual += 1
        partes.append(actual)
        resultado.append(OrderedPartition(tuple(partes)))
    return sorted(resultado, key=lambda p: (p.r, p.partes))


def refinamientos(particion: OrderedPartition) -> List[Tuple[OrderedPartition, ...]]:
    return list(product(*(particiones_ordenadas(i) for i in particion.partes)))


def _iterar(elementos: list, desc: str, mostrar_progreso: bool):
    if mostrar_progreso:
        try:
            from tqdm import tqdm
            return tqdm(elementos, desc=desc)
        except ImportError:
            logger.info("%s: %d casos", desc, len(elementos))
    return elementos


def cabling_sweep(max_total: int = 6, mostrar_progreso: bool = False) -> pd.DataFrame:
    """Relaciones preservadas para toda partición con |I| <= max_total."""
    particiones = [p for total in range(1, max_total + 1) for p in particiones_ordenadas(total)]
    filas = []
    for particion in _iterar(particiones, "Cableado", mostrar_progreso):
        filas.extend(cabling_respects_relations(particion).filas)
    return pd.DataFrame(filas, columns=['partition', 'relation', 'residual_zero'])


def coherence_sweep(max_total: int = 5, mostrar_progreso: bool = False) -> pd.DataFrame:
    """Coherencia en generadores para todas las composiciones de dos niveles."""
    casos = [(p, j) for total in range(1, max_total + 1)
             for p in particiones_ordenadas(total) for j in refinamientos(p)]
    filas = []
    for particion, refinamiento in _iterar(casos, "Coherencia", mostrar_progreso):
        filas.extend(cabling_coherence(particion, refinamiento).filas)
    return pd.DataFrame(filas, columns=['partition', 'refinement', 'generator', 'equal'])
