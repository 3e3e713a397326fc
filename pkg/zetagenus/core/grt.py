"""
Relaciones de grt sobre el álgebra de Lie libre en A, B.

Contiene:
- Elementos de Ihara psi_n
- Comprobación de las cuatro relaciones (antisimetría, hexágono,
  conmutación y pentágono en p_4)
- Búsqueda exacta de correcciones en [fr', fr'] para que psi_n pase
- Corchete de Drinfeld
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .configuracion import CAPACIDAD_DEFECTO
from .errores import ZetagenusError
from .lie import (
    Alfabeto,
    ElementoLie,
    ExpresionLie,
    Palabra,
    factorizacion_estandar,
    lie_normal_form,
    lyndon_basis,
    sustituir,
)
from .lineal import FormaEscalonada, SolucionAfin, resolver_afin
from .trenzas import ElementoPn, alfabeto_pn, generador_pn, pbn_component

logger = logging.getLogger(__name__)

AB = Alfabeto.dos_letras()
A = ElementoLie.generador(0)
B = ElementoLie.generador(1)
C = -A - B

METODOS_PENTAGONO = ('casi_directo', 'eliminacion')
RELACIONES = ('antisimetria', 'hexagono', 'conmutacion', 'pentagono')

# (imagen de A, imagen de B, signo) como pares de generadores x_ij de p_4
SUSTITUCIONES_PENTAGONO = (
    (((1, 2),), ((2, 3), (2, 4)), 1),
    (((1, 3), (2, 3)), ((3, 4),), 1),
    (((1, 2), (1, 3)), ((2, 4), (3, 4)), -1),
    (((2, 3),), ((3, 4),), -1),
    (((1, 2),), ((2, 3),), -1),
)


@dataclass(frozen=True)
class GrtCandidate:
    """
    Candidato psi(A, B) homogéneo.

    Atributos:
        psi: Forma normal en la base de Lyndon
        grado: Grado de homogeneidad (0 para psi = 0)
        expresion: Suma de corchetes antes de normalizar, si se conoce
    """
    psi: ElementoLie
    grado: int
    expresion: Optional[ExpresionLie] = None

    @classmethod
    def desde_elemento(cls, psi: ElementoLie, grado: Optional[int] = None) -> 'GrtCandidate':
        grados = psi.grados(AB)
        if len(grados) > 1:
            raise ZetagenusError(f"psi no es homogéneo: grados {grados}")
        if grados:
            if grado is not None and grado != grados[0]:
                raise ZetagenusError(f"psi tiene grado {grados[0]}, no {grado}")
            grado = grados[0]
        return cls(psi, grado or 0)

    def texto(self) -> str:
        return self.psi.texto(AB)


# =============================================================================
# IHARA
# =============================================================================

def _ad(x: ExpresionLie, veces: int, y: ExpresionLie) -> ExpresionLie:
    for _ in range(veces):
        y = x.corchete(y)
    return y


def terminos_ihara(n: int) -> List[Tuple[int, ExpresionLie]]:
    """(C(n, m), (ad A)^(m-1) (ad B)^(n-m-1) [A,B]) para 1 <= m <= n-1."""
    a, b = ExpresionLie.generador(0), ExpresionLie.generador(1)
    ab = a.corchete(b)
    return [(comb(n, m), _ad(a, m - 1, _ad(b, n - m - 1, ab))) for m in range(1, n)]


def ihara_psi(n: int) -> GrtCandidate:
    """
    psi_n = sum_{1<=m<=n-1} C(n,m) (ad A)^(m-1) (ad B)^(n-m-1) [A,B].

    Raises:
        ZetagenusError: si n es par o menor que 3
    """
    if n < 3 or n % 2 == 0:
        raise ZetagenusError(f"psi_n necesita n impar >= 3: {n}")
    expresion = ExpresionLie()
    for coef, termino in terminos_ihara(n):
        expresion = expresion + termino * coef
    return GrtCandidate(lie_normal_form(expresion), n, expresion)


# =============================================================================
# RESIDUOS
# =============================================================================

def residuo_antisimetria(psi: ElementoLie) -> ElementoLie:
    """psi(A,B) + psi(B,A)."""
    return psi + sustituir(psi, {0: B, 1: A})


def residuo_hexagono(psi: ElementoLie) -> ElementoLie:
    """psi(C,A) + psi(B,C) + psi(A,B) con C = -A-B."""
    return sustituir(psi, {0: C, 1: A}) + sustituir(psi, {0: B, 1: C}) + psi


def residuo_conmutacion(psi: ElementoLie) -> ElementoLie:
    """[B, psi(A,B)] + [C, psi(A,C)] con C = -A-B."""
    return B.corchete(psi) + C.corchete(sustituir(psi, {0: A, 1: C}))


def _imagen_pn(pares: Sequence[Tuple[int, int]]) -> ElementoPn:
    total = ElementoPn(4)
    for par in pares:
        total = total + ElementoPn.generador(4, *par)
    return total


@lru_cache(maxsize=None)
def _valor_sustitucion(k: int, palabra: Palabra) -> ElementoPn:
    """P_w evaluado en la k-ésima sustitución del pentágono."""
    if len(palabra) == 1:
        return _imagen_pn(SUSTITUCIONES_PENTAGONO[k][palabra[0]])
    u, v = factorizacion_estandar(palabra)
    return _valor_sustitucion(k, u).corchete(_valor_sustitucion(k, v))


@lru_cache(maxsize=None)
def _residuo_pentagono_palabra(palabra: Palabra) -> ElementoPn:
    total = ElementoPn(4)
    for k, (_, _, signo) in enumerate(SUSTITUCIONES_PENTAGONO):
        total = total + _valor_sustitucion(k, palabra) * signo
    return total


def residuo_pentagono(psi: ElementoLie) -> ElementoPn:
    """
    psi(x12, x23+x24) + psi(x13+x23, x34) - psi(x12+x13, x24+x34)
    - psi(x23, x34) - psi(x12, x23), en el modelo casi directo de p_4.
    """
    total: Dict = {}
    for w, c in psi.items():
        for m, p in _residuo_pentagono_palabra(w).componentes.items():
            destino = total.setdefault(m, {})
            for palabra, x in p.items():
                nuevo = destino.get(palabra, 0) + c * x
                if nuevo:
                    destino[palabra] = nuevo
                else:
                    destino.pop(palabra, None)
    return ElementoPn(4, total)


def residuo_pentagono_eliminacion(psi: ElementoLie, grado: int,
                                  capacidad: Optional[int] = CAPACIDAD_DEFECTO) -> ElementoLie:
    """El mismo residuo, sustituido en el álgebra libre y reducido en p_4 por eliminación."""
    if not psi:
        return ElementoLie()

    def suma(pares):
        total = ElementoLie()
        for par in pares:
            total = total + generador_pn(4, *par)
        return total

    residuo = ElementoLie()
    for a, b, signo in SUSTITUCIONES_PENTAGONO:
        residuo = residuo + sustituir(psi, {0: suma(a), 1: suma(b)}) * signo
    return pbn_component(4, grado, capacidad).reducir(residuo)


# =============================================================================
# COMPROBACIÓN
# =============================================================================

@dataclass
class ReporteGrt:
    """
    Atributos:
        grado: Grado del candidato
        residuos: Relación -> texto del residuo ('0' si se cumple)
        metodo: Modelo usado para el pentágono
    """
    grado: int
    residuos: Dict[str, str] = field(default_factory=dict)
    metodo: str = 'casi_directo'

    def cumple(self, relacion: str) -> bool:
        return self.residuos[relacion] == '0'

    @property
    def pasa(self) -> bool:
        return all(v == '0' for v in self.residuos.values())

    def a_dict(self) -> dict:
        return {
            'degree': self.grado,
            'method': self.metodo,
            **{f"{r}_residual": self.residuos[r] for r in RELACIONES},
            'passes': self.pasa,
        }


def grt_check(candidato: GrtCandidate, metodo: str = 'casi_directo',
              capacidad: Optional[int] = CAPACIDAD_DEFECTO) -> ReporteGrt:
    """
    Evalúa las cuatro relaciones de grt sobre psi.

    Args:
        candidato: psi homogéneo
        metodo: 'casi_directo' (por defecto) o 'eliminacion' para el pentágono
        capacidad: Límite de la eliminación en p_4
    """
    if metodo not in METODOS_PENTAGONO:
        raise ZetagenusError(f"Método de pentágono desconocido: {metodo}")
    psi = candidato.psi
    if metodo == 'casi_directo':
        pentagono = residuo_pentagono(psi).texto()
    else:
        pentagono = residuo_pentagono_eliminacion(psi, candidato.grado, capacidad).texto(alfabeto_pn(4))
    reporte = ReporteGrt(candidato.grado, {
        'antisimetria': residuo_antisimetria(psi).texto(AB),
        'hexagono': residuo_hexagono(psi).texto(AB),
        'conmutacion': residuo_conmutacion(psi).texto(AB),
        'pentagono': pentagono,
    }, metodo)
    logger.info("grt en grado %d: %s", candidato.grado, 'pasa' if reporte.pasa else 'falla')
    return reporte


# =============================================================================
# SOLUCIONES
# =============================================================================

def base_fr_derivada(grado: int) -> List[ElementoLie]:
    """
    Base de la parte de grado dado de [fr', fr'], con fr' = [fr, fr]:
    corchetes [P_u, P_v] de palabras de Lyndon con |u|, |v| >= 2.
    """
    palabras_por_grado = {d: lyndon_basis(AB, d) for d in range(2, grado - 1)}
    forma = FormaEscalonada()
    indice = {w: k for k, w in enumerate(lyndon_basis(AB, grado))}
    base = []
    for d in range(2, grado // 2 + 1):
        for u in palabras_por_grado[d]:
            for v in palabras_por_grado[grado - d]:
                if d == grado - d and u >= v:
                    continue
                x = ElementoLie({u: 1}).corchete(ElementoLie({v: 1}))
                if forma.agregar({indice[w]: c for w, c in x.items()}):
                    base.append(x)
    return base


def _vector_residuos(psi: ElementoLie) -> Dict[Tuple, Fraction]:
    vector: Dict[Tuple, Fraction] = {}
    for nombre, residuo in (('antisimetria', residuo_antisimetria(psi)),
                            ('hexagono', residuo_hexagono(psi)),
                            ('conmutacion', residuo_conmutacion(psi))):
        for w, c in residuo.items():
            vector[(nombre, w)] = c
    for clave, c in residuo_pentagono(psi).vector().items():
        vector[('pentagono', clave)] = Fraction(c)
    return vector


@dataclass
class SolucionGrt:
    """
    Conjunto afín semilla + particular + span(nucleo) de candidatos que pasan.

    Atributos:
        grado: Grado n
        semilla: psi de partida
        base: Base de [fr', fr'] en grado n
        solucion: Solución del sistema lineal (None si es incompatible)
    """
    grado: int
    semilla: ElementoLie
    base: List[ElementoLie]
    solucion: Optional[SolucionAfin]

    @property
    def vacia(self) -> bool:
        return self.solucion is None

    def _combinacion(self, coeficientes: Sequence[Fraction]) -> ElementoLie:
        total = ElementoLie()
        for x, c in zip(self.base, coeficientes):
            total = total + x * c
        return total

    def particular(self) -> ElementoLie:
        if self.solucion is None:
            raise ZetagenusError("El sistema no tiene solución")
        return self._combinacion(self.solucion.particular)

    def nucleo(self) -> List[ElementoLie]:
        if self.solucion is None:
            return []
        return [self._combinacion(v) for v in self.solucion.nucleo]

    def candidato(self) -> GrtCandidate:
        return GrtCandidate.desde_elemento(self.semilla + self.particular(), self.grado)

    def a_json(self) -> dict:
        if self.solucion is None:
            return {'degree': self.grado, 'particular_solution': None, 'nullspace_basis': []}
        return {
            'degree': self.grado,
            'particular_solution': self.particular().a_json(AB),
            'nullspace_basis': [x.a_json(AB) for x in self.nucleo()],
        }


def grt_solve(n: int, semilla: Optional[GrtCandidate] = None) -> SolucionGrt:
    """
    Correcciones c en la parte de grado n de [fr', fr'] con semilla + c en grt.

    Resuelve residuo(semilla) + sum a_i residuo(b_i) = 0 de forma exacta.
    """
    if semilla is None:
        semilla = ihara_psi(n)
    base = base_fr_derivada(n)
    columnas = [_vector_residuos(b) for b in base]
    termino = _vector_residuos(semilla.psi)
    claves = sorted(set(termino).union(*columnas), key=repr)
    A = [[col.get(k, 0) for col in columnas] for k in claves]
    b = [-termino.get(k, 0) for k in claves]
    logger.debug("grt_solve grado %d: %d ecuaciones, %d incógnitas", n, len(claves), len(base))
    solucion = resolver_afin(A, b, len(base))
    return SolucionGrt(n, semilla.psi, base, solucion)


# =============================================================================
# CORCHETE DE DRINFELD
# =============================================================================

def derivacion_psi(psi: ElementoLie, x: ElementoLie) -> ElementoLie:
    """d_psi(x) con d_psi(A) = [psi, A], d_psi(B) = 0, extendida como derivación."""
    memoria: Dict[Palabra, ElementoLie] = {}

    def d(w: Palabra) -> ElementoLie:
        if w not in memoria:
            if len(w) == 1:
                memoria[w] = psi.corchete(A) if w[0] == 0 else ElementoLie()
            else:
                u, v = factorizacion_estandar(w)
                pu, pv = ElementoLie({u: 1}), ElementoLie({v: 1})
                memoria[w] = d(u).corchete(pv) + pu.corchete(d(v))
        return memoria[w]

    resultado = ElementoLie()
    for w, c in x.items():
        resultado = resultado + d(w) * c
    return resultado


def drinfeld_bracket(psi1: GrtCandidate, psi2: GrtCandidate) -> GrtCandidate:
    """<psi1, psi2> = [psi1, psi2] + d_psi2(psi1) - d_psi1(psi2)."""
    x, y = psi1.psi, psi2.psi
    resultado = x.corchete(y) + derivacion_psi(y, x) - derivacion_psi(x, y)
    grado = psi1.grado + psi2.grado if resultado else 0
    return GrtCandidate(resultado, grado)

