"""
Leyes de grupo formales de tipo aditivo y difeomorfismos formales.

Contiene:
- FormalDiffeo: z -> z + sum t_k z^(k+1) y sus operaciones de grupo
- FGL: F(X, Y) = t^-1(t(X) + t(Y)) y verificación de axiomas
- Coproducto de Landweber-Novikov por composición de difeomorfismos genéricos
- Acción de graduación, torsión de Thom, serie hbar y juguete de descenso
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from .errores import ZetagenusError
from .polinomios import CERO, UNO, SymbolPoly, clave_simbolo, como_poly, simbolo
from .series import (
    SerieMultivariada,
    Series,
    componer_univariada,
    series_compose,
    series_revert,
)
from .simetricas import exp_infinity

logger = logging.getLogger(__name__)

VARIABLES_LEY = ('X', 'Y')
VARIABLES_ASOCIATIVIDAD = ('X', 'Y', 'Z')


# =============================================================================
# DIFEOMORFISMOS FORMALES
# =============================================================================

@dataclass(frozen=True)
class FormalDiffeo:
    """
    Difeomorfismo formal z -> z + sum_{k=1..N} t_k z^(k+1).

    Atributos:
        coeficientes: t_1 .. t_N como SymbolPoly
        variable: Nombre de la variable
    """
    coeficientes: Tuple[SymbolPoly, ...]
    variable: str = 'z'

    def __post_init__(self):
        object.__setattr__(self, 'coeficientes', tuple(como_poly(c) for c in self.coeficientes))

    @property
    def orden(self) -> int:
        return len(self.coeficientes)

    def t(self, k: int) -> SymbolPoly:
        return self.coeficientes[k - 1]

    def como_serie(self) -> Series:
        return Series([CERO, UNO] + list(self.coeficientes), self.variable, self.orden + 1)

    @classmethod
    def desde_serie(cls, serie: Series) -> 'FormalDiffeo':
        if serie.orden < 1 or serie[0] or serie[1] != 1:
            raise ZetagenusError(f"No es un difeomorfismo tangente a la identidad: {serie}")
        return cls(serie.coeficientes[2:], serie.variable)

    @classmethod
    def generico(cls, orden: int, prefijo: str = 't') -> 'FormalDiffeo':
        return cls(tuple(simbolo(f"{prefijo}_{k}") for k in range(1, orden + 1)))

    @classmethod
    def identidad(cls, orden: int) -> 'FormalDiffeo':
        return cls((CERO,) * orden)

    def truncar(self, orden: int) -> 'FormalDiffeo':
        return FormalDiffeo(self.coeficientes[:orden], self.variable)

    def es_impar(self) -> bool:
        """t(-z) = -t(z): solo t_k con k par pueden ser no nulos."""
        return not any(self.coeficientes[0::2])

    def texto(self) -> str:
        return self.como_serie().texto()

    def __str__(self):
        return self.texto()


def diffeo_compose(s: FormalDiffeo, t: FormalDiffeo) -> FormalDiffeo:
    """Primero s y luego t: z -> t(s(z))."""
    return FormalDiffeo.desde_serie(series_compose(t.como_serie(), s.como_serie()))


def diffeo_invert(t: FormalDiffeo, metodo: str = 'lagrange') -> FormalDiffeo:
    return FormalDiffeo.desde_serie(series_revert(t.como_serie(), metodo))


def exponencial(t: FormalDiffeo) -> FormalDiffeo:
    """La exponencial de la ley con logaritmo t es t^-1."""
    return diffeo_invert(t)


def diffeo_aleatorio(orden: int, rng: np.random.Generator, solo_impar: bool = False,
                     rango: int = 5) -> FormalDiffeo:
    """Difeomorfismo con coeficientes racionales aleatorios reproducibles."""
    coefs = []
    for k in range(1, orden + 1):
        if solo_impar and k % 2:
            coefs.append(CERO)
            continue
        numerador = int(rng.integers(-rango, rango + 1))
        denominador = int(rng.integers(1, rango + 1))
        coefs.append(SymbolPoly.constante(Fraction(numerador, denominador)))
    return FormalDiffeo(tuple(coefs))


def diffeo_desde_exp_infinity(grado: int) -> FormalDiffeo:
    """S_* como funciones simétricas: t_k -> (-1)^k h_k."""
    return FormalDiffeo.desde_serie(exp_infinity(grado))


# =============================================================================
# LEYES DE GRUPO FORMALES
# =============================================================================

@dataclass(frozen=True)
class FGL:
    """
    Ley de grupo formal F(X, Y) truncada por grado total.
    """
    serie: SerieMultivariada

    @property
    def orden(self) -> int:
        return self.serie.orden

    def coeficiente(self, i: int, j: int) -> SymbolPoly:
        return self.serie.coeficiente((i, j))

    def a_tabla(self) -> pd.DataFrame:
        filas = [
            {'i': exps[0], 'j': exps[1], 'coef': c.texto()}
            for exps, c in self.serie.terminos_ordenados()
        ]
        return pd.DataFrame(filas, columns=['i', 'j', 'coef'])

    def texto(self) -> str:
        return self.serie.texto()


def _como_logaritmo(t: Union[FormalDiffeo, Series]) -> Series:
    if isinstance(t, FormalDiffeo):
        return t.como_serie()
    return FormalDiffeo.desde_serie(t).como_serie()


def fgl_from_log(t: Union[FormalDiffeo, Series]) -> FGL:
    """F(X, Y) = t^-1(t(X) + t(Y))."""
    logaritmo = _como_logaritmo(t)
    exp = series_revert(logaritmo)
    suma = (SerieMultivariada.desde_serie(logaritmo, 'X', VARIABLES_LEY)
            + SerieMultivariada.desde_serie(logaritmo, 'Y', VARIABLES_LEY))
    return FGL(componer_univariada(exp, suma))


@dataclass
class ReporteAxiomas:
    """
    Residuos de los axiomas de una ley de grupo formal.

    Atributos:
        unidad: F(X, 0) - X
        unidad_derecha: F(0, Y) - Y
        conmutatividad: F(X, Y) - F(Y, X)
        asociatividad: F(F(X, Y), Z) - F(X, F(Y, Z))
    """
    unidad: SerieMultivariada
    unidad_derecha: SerieMultivariada
    conmutatividad: SerieMultivariada
    asociatividad: SerieMultivariada

    @property
    def pasa(self) -> bool:
        return all(r.es_cero() for r in
                   (self.unidad, self.unidad_derecha, self.conmutatividad, self.asociatividad))

    def a_dict(self) -> dict:
        return {
            'unidad': self.unidad.texto(),
            'unidad_derecha': self.unidad_derecha.texto(),
            'conmutatividad': self.conmutatividad.texto(),
            'asociatividad': self.asociatividad.texto(),
            'pasa': self.pasa,
        }


def check_fgl_axioms(ley: FGL) -> ReporteAxiomas:
    F = ley.serie
    n = F.orden
    X = SerieMultivariada.variable('X', VARIABLES_LEY, n)
    Y = SerieMultivariada.variable('Y', VARIABLES_LEY, n)
    unidad = F.anular('Y') - X
    unidad_derecha = F.anular('X') - Y
    conmutatividad = F - F.incrustar(VARIABLES_LEY, {'X': 'Y', 'Y': 'X'})

    F_xy = F.incrustar(VARIABLES_ASOCIATIVIDAD)
    F_yz = F.incrustar(VARIABLES_ASOCIATIVIDAD, {'X': 'Y', 'Y': 'Z'})
    X3 = SerieMultivariada.variable('X', VARIABLES_ASOCIATIVIDAD, n)
    Z3 = SerieMultivariada.variable('Z', VARIABLES_ASOCIATIVIDAD, n)
    izquierda = F.sustituir({'X': F_xy, 'Y': Z3})
    derecha = F.sustituir({'X': X3, 'Y': F_yz})
    reporte = ReporteAxiomas(unidad, unidad_derecha, conmutatividad, izquierda - derecha)
    logger.debug("Axiomas de ley de grado %d: %s", n, 'pasa' if reporte.pasa else 'falla')
    return reporte


# =============================================================================
# COPRODUCTO DE LANDWEBER-NOVIKOV
# =============================================================================

IZQUIERDA = "t'"
DERECHA = "t''"
TERCERO = "t'''"


def _separar_tensor(monomio) -> Tuple[str, str]:
    izquierda, derecha = [], []
    for nombre, e in monomio:
        prefijo, k = clave_simbolo(nombre)
        destino = izquierda if prefijo == IZQUIERDA else derecha
        destino.append((f"t_{k}", e))
    return SymbolPoly({tuple(izquierda): 1}).texto(), SymbolPoly({tuple(derecha): 1}).texto()


@dataclass
class Coproducto:
    """
    Delta(t_k) como polinomio en t'_i (factor izquierdo) y t''_j (derecho).
    """
    terminos: Dict[int, SymbolPoly] = field(default_factory=dict)

    def __getitem__(self, k: int) -> SymbolPoly:
        return self.terminos[k]

    def tensores(self, k: int) -> List[Tuple[str, str, Fraction]]:
        return [(*_separar_tensor(m), c) for m, c in self.terminos[k].terminos_ordenados()]

    def a_json(self) -> List[dict]:
        return [
            {
                'k': k,
                'terms': [
                    {'i': i, 'j': j, 'coeff': f"{c.numerator}/{c.denominator}"}
                    for i, j, c in self.tensores(k)
                ],
            }
            for k in sorted(self.terminos)
        ]

    def a_tabla(self) -> pd.DataFrame:
        filas = [
            {'k': k, 'izquierda': i, 'derecha': j, 'coef': f"{c.numerator}/{c.denominator}"}
            for k in sorted(self.terminos) for i, j, c in self.tensores(k)
        ]
        return pd.DataFrame(filas, columns=['k', 'izquierda', 'derecha', 'coef'])


def ln_coproduct(max_grado: int) -> Coproducto:
    """
    Delta(t(z)) = (t ⊗ 1)((1 ⊗ t)(z)): el difeomorfismo primado va por fuera.
    """
    exterior = FormalDiffeo.generico(max_grado, IZQUIERDA).como_serie()
    interior = FormalDiffeo.generico(max_grado, DERECHA).como_serie()
    compuesta = series_compose(exterior, interior)
    return Coproducto({k: compuesta[k + 1] for k in range(1, max_grado + 1)})


def _renombrar(poly: SymbolPoly, origen: str, destino: str) -> SymbolPoly:
    mapa = {}
    for nombre in poly.simbolos():
        prefijo, k = clave_simbolo(nombre)
        if prefijo == origen:
            mapa[nombre] = simbolo(f"{destino}_{k}")
    return poly.sustituir(mapa)


def _delta_en(coproducto: Coproducto, k: int, izquierda: str, derecha: str) -> SymbolPoly:
    poly = coproducto[k]
    # paso intermedio para no mezclar prefijos al renombrar
    poly = _renombrar(_renombrar(poly, IZQUIERDA, '_a'), DERECHA, '_b')
    return _renombrar(_renombrar(poly, '_a', izquierda), '_b', derecha)


@dataclass
class ReporteCoproducto:
    """
    Atributos:
        max_grado: Grado máximo verificado
        coasociativo: (Δ⊗1)Δ = (1⊗Δ)Δ en todos los t_k
        counidad: Ambas leyes de counidad con ε(t_k) = 0
        fallos: Índices k donde alguna identidad falla
    """
    max_grado: int
    coasociativo: bool
    counidad: bool
    fallos: List[int] = field(default_factory=list)

    @property
    def pasa(self) -> bool:
        return self.coasociativo and self.counidad

    def a_dict(self) -> dict:
        return {'max_grado': self.max_grado, 'coasociativo': self.coasociativo,
                'counidad': self.counidad, 'fallos': list(self.fallos)}


def verificar_coproducto(max_grado: int) -> ReporteCoproducto:
    delta = ln_coproduct(max_grado)
    coasociativo = counidad = True
    fallos = []
    for k in range(1, max_grado + 1):
        base = delta[k]
        indices = range(1, k + 1)
        izquierda = base.sustituir({
            **{f"{IZQUIERDA}_{i}": _delta_en(delta, i, IZQUIERDA, DERECHA) for i in indices},
            **{f"{DERECHA}_{j}": simbolo(f"{TERCERO}_{j}") for j in indices},
        })
        derecha = base.sustituir({f"{DERECHA}_{j}": _delta_en(delta, j, DERECHA, TERCERO)
                                  for j in indices})
        t_k = simbolo(f"t_{k}")
        counidad_izq = base.sustituir({
            **{f"{IZQUIERDA}_{i}": 0 for i in indices},
            **{f"{DERECHA}_{j}": simbolo(f"t_{j}") for j in indices},
        })
        counidad_der = base.sustituir({
            **{f"{DERECHA}_{j}": 0 for j in indices},
            **{f"{IZQUIERDA}_{i}": simbolo(f"t_{i}") for i in indices},
        })
        ok_coas = izquierda == derecha
        ok_counidad = counidad_izq == t_k and counidad_der == t_k
        coasociativo &= ok_coas
        counidad &= ok_counidad
        if not (ok_coas and ok_counidad):
            fallos.append(k)
    return ReporteCoproducto(max_grado, coasociativo, counidad, fallos)


# =============================================================================
# GRADUACIÓN
# =============================================================================

def grading_action(t: FormalDiffeo, u=None) -> FormalDiffeo:
    """t_k -> u^k t_k (u es el símbolo 'u' si no se indica)."""
    u = simbolo('u') if u is None else como_poly(u)
    return FormalDiffeo(tuple(c * u ** k for k, c in enumerate(t.coeficientes, start=1)),
                        t.variable)


def accion_por_conjugacion(t: FormalDiffeo, u=None) -> FormalDiffeo:
    """z -> u^-1 t(u z); u debe ser un símbolo o un racional no nulo."""
    u = simbolo('u') if u is None else como_poly(u)
    escalada = t.como_serie().escalar_variable(u)
    if u.es_constante():
        return FormalDiffeo.desde_serie(escalada / u.como_racional())
    nombres = u.simbolos()
    if len(u) != 1 or len(nombres) != 1 or u != simbolo(nombres[0]):
        raise ZetagenusError(f"La conjugación necesita un símbolo o un racional: {u}")
    return FormalDiffeo.desde_serie(escalada.mapear(lambda c: c.dividir_por_simbolo(nombres[0])))


# =============================================================================
# TORSIÓN DE THOM
# =============================================================================

@dataclass(frozen=True)
class ThomTwist:
    """
    Serie de torsión 1 + sum sigma_k e^k en la clase de Euler e.
    """
    serie: Series

    def __post_init__(self):
        if self.serie[0] != 1:
            raise ZetagenusError(f"La torsión debe empezar en 1: {self.serie[0]}")

    @classmethod
    def generico(cls, orden: int) -> 'ThomTwist':
        return cls(Series([UNO] + [simbolo(f"sigma_{k}") for k in range(1, orden + 1)], 'e', orden))

    @classmethod
    def desde_coeficientes(cls, coeficientes: Dict[int, object], orden: int) -> 'ThomTwist':
        return cls(Series.desde_funcion(lambda k: 1 if k == 0 else coeficientes.get(k, 0), 'e', orden))


def _normalizar_restriccion(poly: SymbolPoly) -> SymbolPoly:
    _, coef = poly.terminos_ordenados()[0]
    return poly / coef


def thom_twist_constraint(s: ThomTwist) -> List[SymbolPoly]:
    """
    Expande [1 + sum sigma_k (-e)^k](-U) + [1 + sum sigma_k e^k] U con U
    como generador libre y devuelve los coeficientes que deben anularse.
    """
    U = simbolo('U')
    expresion = s.serie.escalar_variable(-1) * (-U) + s.serie * U
    restricciones = []
    for k in range(s.serie.orden + 1):
        coef = expresion[k].coeficiente_en('U', 1)
        if coef:
            restricciones.append(_normalizar_restriccion(coef))
    return restricciones


def simbolos_anulados(restricciones: Sequence[SymbolPoly]) -> List[str]:
    """Nombres x de las restricciones de la forma x = 0."""
    nombres = []
    for r in restricciones:
        simbolos_r = r.simbolos()
        if len(simbolos_r) == 1 and r == simbolo(simbolos_r[0]):
            nombres.append(simbolos_r[0])
    return nombres


# =============================================================================
# SERIE HBAR
# =============================================================================

def hbar_series(cp_values, grado: int) -> Series:
    """hbar = sum_{k=1..grado} CP_(k-1) e^k / k."""
    valores = list(getattr(cp_values, 'valores', cp_values))
    if len(valores) != grado:
        raise ZetagenusError(f"Se esperaban {grado} valores CP, hay {len(valores)}")
    if grado and como_poly(valores[0]) != 1:
        raise ZetagenusError(f"CP^0 debe valer 1, no {valores[0]}")
    coefs = [CERO] + [como_poly(v) / k for k, v in enumerate(valores, start=1)]
    return Series(coefs, 'e', grado)


# =============================================================================
# DESCENSO
# =============================================================================

@dataclass(frozen=True)
class DescentGenerator:
    """
    Generador con peso G_m y bigrado.

    Atributos:
        nombre: 'b' o 'e_(2k+1)'
        peso: Exponente de la acción de G_m
        bigrado: (s, t)
    """
    nombre: str
    peso: int
    bigrado: Tuple[int, int]


def generadores_descenso(k_max: int) -> List[DescentGenerator]:
    """b y e_(2k+1) para 1 <= k <= k_max."""
    generadores = [DescentGenerator('b', 1, (0, -2))]
    for k in range(1, k_max + 1):
        generadores.append(DescentGenerator(f"e_{2 * k + 1}", -(2 * k + 1), (1, 0)))
    return generadores


@dataclass(frozen=True)
class InvarianteDescenso:
    monomio: str
    bigrado: Tuple[int, int]


def gm_invariant_bidegrees(generadores: Sequence[DescentGenerator], k_max: int) -> List[InvarianteDescenso]:
    """Monomios e * b^m de peso total 0, lineales en un generador e."""
    polinomiales = [g for g in generadores if g.bigrado[0] == 0]
    lineales = [g for g in generadores if g.bigrado[0] == 1]
    if len(polinomiales) != 1 or polinomiales[0].peso == 0:
        raise ZetagenusError("Se espera un único generador b de peso no nulo")
    b = polinomiales[0]
    invariantes = []
    for e in sorted(lineales, key=lambda g: -g.peso):
        if -e.peso > 2 * k_max + 1:
            continue
        m, resto = divmod(-e.peso, b.peso)
        if resto or m < 0:
            continue
        bigrado = (e.bigrado[0] + m * b.bigrado[0], e.bigrado[1] + m * b.bigrado[1])
        invariantes.append(InvarianteDescenso(f"{e.nombre}*{b.nombre}^{m}", bigrado))
    return invariantes
