"""
Funciones cuasisimétricas en la base monomial y valores de polizeta.

Contiene:
- Composiciones y el producto stuffle (cuasi-barajado)
- La inclusión Symm -> QSymm, p_k -> M_(k)
- Truncamiento finito exacto en x_k = 1/k
- Evaluación numérica de zeta(i_1, ..., i_k) con cota de error
- Campos de Witt z_k = z^(k+1) d/dz y el homomorfismo desde Lie libre
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .configuracion import TOLERANCIA_DEFECTO
from .errores import DivergenciaError, PrecisionInsuficienteError, ZetagenusError
from .lie import Alfabeto, ElementoLie, evaluar_lie
from .polinomios import a_racional, racional_a_texto
from .simetricas import SymmElement, newton_convert

logger = logging.getLogger(__name__)

CORTE_DEFECTO = 100_000
CORTE_MAXIMO_DEFECTO = 6_400_000


# =============================================================================
# COMPOSICIONES
# =============================================================================

@dataclass(frozen=True, order=True)
class Composicion:
    """
    Lista ordenada de enteros positivos.

    Atributos:
        partes: (i_1, ..., i_k)
    """
    partes: Tuple[int, ...] = ()

    def __post_init__(self):
        partes = tuple(int(p) for p in self.partes)
        if any(p < 1 for p in partes):
            raise ZetagenusError(f"Las partes deben ser positivas: {partes}")
        object.__setattr__(self, 'partes', partes)

    @property
    def peso(self) -> int:
        return sum(self.partes)

    @property
    def es_admisible(self) -> bool:
        return bool(self.partes) and self.partes[0] > 1

    def texto(self) -> str:
        return '(' + ','.join(map(str, self.partes)) + ')'

    @classmethod
    def desde_texto(cls, texto: str) -> 'Composicion':
        """'2,1' -> (2,1); '' -> ()."""
        texto = texto.strip().strip('()')
        if not texto:
            return cls(())
        try:
            return cls(tuple(int(p) for p in texto.split(',')))
        except ValueError:
            raise ZetagenusError(f"Composición mal escrita: {texto!r}") from None

    def __len__(self):
        return len(self.partes)

    def __str__(self):
        return self.texto()


def _como_composicion(valor) -> Composicion:
    if isinstance(valor, Composicion):
        return valor
    if isinstance(valor, str):
        return Composicion.desde_texto(valor)
    return Composicion(tuple(valor))


@lru_cache(maxsize=None)
def _stuffle_partes(a: Tuple[int, ...], b: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    resultado: Dict[Tuple[int, ...], int] = {}
    for cabeza, resto in ((a[0], _stuffle_partes(a[1:], b)),
                          (b[0], _stuffle_partes(a, b[1:])),
                          (a[0] + b[0], _stuffle_partes(a[1:], b[1:]))):
        for comp, c in resto:
            clave = (cabeza,) + comp
            resultado[clave] = resultado.get(clave, 0) + c
    return tuple(sorted(resultado.items()))


# =============================================================================
# ELEMENTOS DE QSYMM
# =============================================================================

class QSymmElement:
    """
    Combinación racional de funciones monomiales M_I.
    """

    __slots__ = ('terminos',)

    def __init__(self, terminos: Optional[Mapping] = None):
        limpio: Dict[Composicion, Fraction] = {}
        for comp, c in (terminos or {}).items():
            comp = _como_composicion(comp)
            c = a_racional(c) + limpio.get(comp, 0)
            if c:
                limpio[comp] = c
            else:
                limpio.pop(comp, None)
        self.terminos = limpio

    @classmethod
    def monomial(cls, partes: Sequence[int], coef=1) -> 'QSymmElement':
        return cls({Composicion(tuple(partes)): coef})

    @classmethod
    def uno(cls) -> 'QSymmElement':
        return cls.monomial(())

    def items(self):
        return self.terminos.items()

    def __bool__(self):
        return bool(self.terminos)

    def peso(self) -> int:
        return max((c.peso for c in self.terminos), default=0)

    def __add__(self, otro: 'QSymmElement') -> 'QSymmElement':
        resultado = dict(self.terminos)
        for comp, c in otro.terminos.items():
            resultado[comp] = resultado.get(comp, 0) + c
        return QSymmElement(resultado)

    def __neg__(self):
        return QSymmElement({comp: -c for comp, c in self.terminos.items()})

    def __sub__(self, otro: 'QSymmElement') -> 'QSymmElement':
        return self + (-otro)

    def escalar(self, factor) -> 'QSymmElement':
        factor = a_racional(factor)
        return QSymmElement({comp: c * factor for comp, c in self.terminos.items()})

    def __mul__(self, otro):
        if isinstance(otro, QSymmElement):
            return stuffle_product(self, otro)
        return self.escalar(otro)

    def __rmul__(self, factor):
        return self.escalar(factor)

    def __eq__(self, otro):
        if not isinstance(otro, QSymmElement):
            return NotImplemented
        return self.terminos == otro.terminos

    def terminos_ordenados(self) -> List[Tuple[Composicion, Fraction]]:
        return sorted(self.terminos.items(), key=lambda t: (t[0].peso, t[0].partes))

    def texto(self) -> str:
        if not self.terminos:
            return '0'
        partes = []
        for comp, c in self.terminos_ordenados():
            nombre = f"M{comp.texto()}"
            partes.append(nombre if c == 1 else f"{racional_a_texto(c)}*{nombre}")
        return ' + '.join(partes).replace('+ -', '- ')

    def a_json(self) -> List[dict]:
        return [{'composition': list(comp.partes), 'coeff': racional_a_texto(c)}
                for comp, c in self.terminos_ordenados()]

    def __str__(self):
        return self.texto()

    def __repr__(self):
        return f"QSymmElement({self.texto()})"


def stuffle_product(a: QSymmElement, b: QSymmElement) -> QSymmElement:
    """
    Producto cuasi-barajado: intercalados más fusiones de partes.

    M_(2) * M_(3) = M_(2,3) + M_(3,2) + M_(5)
    """
    resultado: Dict[Tuple[int, ...], Fraction] = {}
    for ca, xa in a.terminos.items():
        for cb, xb in b.terminos.items():
            for comp, mult in _stuffle_partes(ca.partes, cb.partes):
                resultado[comp] = resultado.get(comp, 0) + xa * xb * mult
    return QSymmElement(resultado)


@lru_cache(maxsize=None)
def _imagen_particion(partes: Tuple[int, ...]) -> QSymmElement:
    resultado = QSymmElement.uno()
    for k in partes:
        resultado = stuffle_product(resultado, QSymmElement.monomial((k,)))
    return resultado


def symm_to_qsymm(x: SymmElement) -> QSymmElement:
    """Homomorfismo de anillos con p_k -> M_(k)."""
    en_p = newton_convert(x, 'P')
    resultado = QSymmElement()
    for particion, c in en_p.terminos.items():
        resultado = resultado + _imagen_particion(particion.partes).escalar(c)
    return resultado


def finite_truncation(a: QSymmElement, m: int, valores: Optional[Sequence] = None) -> Fraction:
    """
    Evalúa en x_1..x_m (por defecto x_k = 1/k), con n_1 > n_2 > ... en
    M_I = sum x_(n_1)^(i_1) ... x_(n_k)^(i_k).
    """
    if m < 1:
        raise ZetagenusError(f"m debe ser >= 1: {m}")
    if valores is None:
        xs = [Fraction(1, k) for k in range(1, m + 1)]
    else:
        xs = [a_racional(v) for v in valores]
        if len(xs) != m:
            raise ZetagenusError("Se necesitan exactamente m valores")
    total = Fraction(0)
    for comp, c in a.terminos.items():
        total += c * _evaluar_monomial(comp.partes, xs)
    return total


def _evaluar_monomial(partes: Tuple[int, ...], xs: List[Fraction]) -> Fraction:
    if not partes:
        return Fraction(1)
    m = len(xs)
    # interior[n]: suma de la cola de la composición con índice más externo < n+1
    interior = [Fraction(1)] * m
    for nivel, s in enumerate(reversed(partes)):
        termino = [xs[n] ** s * interior[n] for n in range(m)]
        acumulado = Fraction(0)
        siguiente = []
        for n in range(m):
            siguiente.append(acumulado)
            acumulado += termino[n]
        if nivel == len(partes) - 1:
            return acumulado
        interior = siguiente
    return Fraction(0)


# =============================================================================
# VALORES NUMÉRICOS
# =============================================================================

@dataclass(frozen=True)
class ValorMZV:
    """
    Atributos:
        composicion: Índice evaluado
        valor: Aproximación en coma flotante
        cota_error: Cota del error (heurística, por el resto de Euler-Maclaurin)
        corte: Corte N de la suma externa
    """
    composicion: Composicion
    valor: float
    cota_error: float
    corte: int

    def a_dict(self) -> dict:
        return {'value': self.valor, 'error_bound': self.cota_error, 'cutoff': self.corte}


def _cola_potencia(s: int, N: int) -> float:
    """sum_{n>N} n^-s por Euler-Maclaurin."""
    return N ** (1 - s) / (s - 1) - N ** (-s) / 2 + s * N ** (-s - 1) / 12


def _sumas_anidadas(partes: Tuple[int, ...], N: int) -> Tuple[float, List[float]]:
    """
    Suma parcial hasta N y, para cada nivel j >= 2, S_j(N): la suma de la
    cola (i_j, ..., i_k) con índice externo <= N.
    """
    n = np.arange(1, N + 1, dtype=np.float64)
    interior = np.ones(N)
    niveles: List[float] = []
    for s in reversed(partes[1:]):
        acumulado = np.cumsum(n ** -float(s) * interior)
        niveles.append(float(acumulado[-1]))
        interior = np.concatenate(([0.0], acumulado[:-1]))
    parcial = float(np.sum(n ** -float(partes[0]) * interior))
    niveles.reverse()
    return parcial, niveles


def _evaluar_con_corte(comp: Composicion, N: int) -> Tuple[float, float]:
    partes = comp.partes
    i1 = partes[0]
    parcial, niveles = _sumas_anidadas(partes, N)
    S = lambda j: niveles[j - 2] if j - 2 < len(niveles) else 1.0
    registro = math.log(N) + 1
    resto_em = i1 * (i1 + 1) * (i1 + 2) / 720 * N ** (-i1 - 3)

    valor = parcial + S(2) * _cola_potencia(i1, N)
    cota = abs(S(2)) * resto_em + N * np.finfo(float).eps * abs(valor)
    if len(partes) >= 2:
        i2 = partes[1]
        if i2 == 1:
            K = N ** (1 - i1) / (i1 - 1) ** 2
        else:
            K = N ** (2 - i1 - i2) / ((i1 - 1) * (i1 + i2 - 2))
        valor += S(3) * K
        cota += 10 * abs(S(3) * K) * registro / N
    if len(partes) >= 3:
        # índices n_2, n_3 ambos mayores que N
        cota += abs(S(4)) * N ** (3 - sum(partes[:3])) * registro ** 2
    return valor, cota


def mzv_eval(composicion: Union[Composicion, Sequence[int], str],
             tolerancia: float = TOLERANCIA_DEFECTO,
             corte: int = CORTE_DEFECTO,
             corte_maximo: int = CORTE_MAXIMO_DEFECTO) -> ValorMZV:
    """
    zeta(i_1, ..., i_k) = sum_{n_1 > ... > n_k >= 1} 1 / (n_1^i_1 ... n_k^i_k).

    Suma anidada hasta N con corrección de cola integral; el corte se
    multiplica por 4 hasta que la cota cumple la tolerancia.

    Raises:
        DivergenciaError: si i_1 = 1 o la composición es vacía
        PrecisionInsuficienteError: si ni con corte_maximo se alcanza la tolerancia
    """
    comp = _como_composicion(composicion)
    if not comp.es_admisible:
        raise DivergenciaError(f"zeta{comp.texto()} diverge: la primera parte debe ser > 1")
    if tolerancia <= 0:
        raise ZetagenusError(f"La tolerancia debe ser positiva: {tolerancia}")
    N = corte
    while True:
        valor, cota = _evaluar_con_corte(comp, N)
        logger.debug("zeta%s con N=%d: %.15g (cota %.3g)", comp.texto(), N, valor, cota)
        if cota <= tolerancia:
            return ValorMZV(comp, valor, cota, N)
        if N * 4 > corte_maximo:
            raise PrecisionInsuficienteError(
                f"zeta{comp.texto()}: cota {cota:.3g} > {tolerancia:g} con corte {N}"
            )
        N *= 4


# =============================================================================
# CAMPOS DE WITT
# =============================================================================

class WittField:
    """
    Combinación sum c_k z_k con z_k = z^(k+1) d/dz.
    """

    __slots__ = ('terminos',)

    def __init__(self, terminos: Optional[Mapping[int, object]] = None):
        self.terminos: Dict[int, Fraction] = {
            int(k): a_racional(c) for k, c in (terminos or {}).items() if c}

    @classmethod
    def generador(cls, k: int, coef=1) -> 'WittField':
        return cls({k: coef})

    def __bool__(self):
        return bool(self.terminos)

    def __add__(self, otro: 'WittField') -> 'WittField':
        resultado = dict(self.terminos)
        for k, c in otro.terminos.items():
            resultado[k] = resultado.get(k, 0) + c
        return WittField(resultado)

    def __neg__(self):
        return WittField({k: -c for k, c in self.terminos.items()})

    def __sub__(self, otro: 'WittField') -> 'WittField':
        return self + (-otro)

    def __mul__(self, factor) -> 'WittField':
        factor = a_racional(factor)
        return WittField({k: c * factor for k, c in self.terminos.items()})

    __rmul__ = __mul__

    def corchete(self, otro: 'WittField') -> 'WittField':
        """[z_j, z_k] = (k - j) z_(j+k)."""
        resultado: Dict[int, Fraction] = {}
        for j, a in self.terminos.items():
            for k, b in otro.terminos.items():
                resultado[j + k] = resultado.get(j + k, 0) + a * b * (k - j)
        return WittField(resultado)

    def aplicar(self, f: Mapping[int, object]) -> Dict[int, Fraction]:
        """Acción como derivación sobre sum f_n z^n: z_k(z^n) = n z^(n+k)."""
        resultado: Dict[int, Fraction] = {}
        for k, c in self.terminos.items():
            for n, a in f.items():
                if n:
                    resultado[n + k] = resultado.get(n + k, 0) + c * a_racional(a) * n
        return {n: c for n, c in resultado.items() if c}

    def __eq__(self, otro):
        if not isinstance(otro, WittField):
            return NotImplemented
        return self.terminos == otro.terminos

    def texto(self) -> str:
        if not self.terminos:
            return '0'
        partes = []
        for k in sorted(self.terminos):
            c = self.terminos[k]
            partes.append(f"z_{k}" if c == 1 else f"{racional_a_texto(c)}*z_{k}")
        return ' + '.join(partes).replace('+ -', '- ')

    def __repr__(self):
        return f"WittField({self.texto()})"


def lie_to_witt(x: ElementoLie, alfabeto: Alfabeto) -> WittField:
    """Z_k -> z_k, extendido como homomorfismo de Lie (la letra i va a z_(grado i))."""
    imagenes = {i: WittField.generador(g) for i, g in enumerate(alfabeto.grados)}
    return evaluar_lie(x, imagenes, WittField.corchete, WittField())
