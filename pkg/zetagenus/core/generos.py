"""
Géneros de Hirzebruch a partir de su serie característica Q(z).

Contiene:
- Constructores: todd, ahat, L, gamma, witten y el género aditivo
- Valores en CP^n por dos rutas independientes
- Logaritmo del género y reescritura de zetas pares con Bernoulli
- Verificación de la duplicación de Gamma y de la forma partida
- Coeficientes g_k del género de Witten como q-series
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Optional, Sequence, Tuple

import pandas as pd

from .configuracion import ORDEN_DEFECTO
from .errores import GeneroDesconocidoError, TruncamientoError, VerificacionError, ZetagenusError
from .polinomios import CERO, UNO, SymbolPoly, clave_simbolo, simbolo
from .series import (
    Series,
    series_exp,
    series_exp_lineal,
    series_log,
    series_revert,
    series_sin,
    series_sqrt,
)
from .simetricas import ReglaEspecializacion, SymmElement, exp_infinity, specialize
from .leyes import hbar_series

logger = logging.getLogger(__name__)

GENEROS = ('todd', 'ahat', 'L', 'gamma', 'witten', 'additive')
ORDEN_Q_DEFECTO = 4


@dataclass(frozen=True)
class Genus:
    """
    Género de Hirzebruch.

    Atributos:
        nombre: Nombre del género
        Q: Serie característica, Q(0) = 1
        orden_q: Truncamiento en q (solo Witten)
        unidad_imaginaria: Reducir i^2 = -1 en los valores
    """
    nombre: str
    Q: Series
    orden_q: Optional[int] = None
    unidad_imaginaria: bool = False

    def __post_init__(self):
        # Witten: Q(0) = c(q), que vale 1 módulo q
        if self.Q[0].truncar_simbolo('q', 0) != 1:
            raise ZetagenusError(f"Q(0) debe ser 1 en el género {self.nombre}")

    @property
    def orden(self) -> int:
        return self.Q.orden

    @property
    def variable(self) -> str:
        return self.Q.variable

    def reducir(self, poly: SymbolPoly) -> SymbolPoly:
        if self.unidad_imaginaria:
            poly = poly.reducir_unidad_imaginaria()
        if self.orden_q is None:
            return poly
        return poly.truncar_simbolo('q', self.orden_q)

    def reducir_serie(self, serie: Series) -> Series:
        if self.unidad_imaginaria or self.orden_q is not None:
            return serie.mapear(self.reducir)
        return serie

    def constante_q(self) -> Tuple[SymbolPoly, SymbolPoly]:
        """(c, 1/c) con c = Q(0) truncado en q."""
        c = self.Q[0]
        if self.orden_q is None:
            return c, UNO
        inversa = (1 / Series.desde_polinomio(c, 'q', self.orden_q)).a_polinomio()
        return c, inversa

    def normalizada(self) -> Series:
        """Q / Q(0), con término constante exactamente 1."""
        _, inversa = self.constante_q()
        return self.reducir_serie(self.Q * inversa)

    def exponencial(self) -> Series:
        """f(z) = z / Q(z)."""
        _, inversa = self.constante_q()
        return self.reducir_serie((1 / self.normalizada() * inversa).multiplicar_por_variable())


# =============================================================================
# CONSTRUCTORES
# =============================================================================

def _todd(orden: int) -> Series:
    exp_menos = series_exp_lineal(-1, 'z', orden + 1)
    return 1 / (1 - exp_menos).dividir_por_variable()


def _ahat(orden: int, variable: str = 'x') -> Series:
    # sinh(x/2) / (x/2) = (e^(x/2) - e^(-x/2)) / x
    dos_senh = (series_exp_lineal(Fraction(1, 2), variable, orden + 1)
                - series_exp_lineal(Fraction(-1, 2), variable, orden + 1))
    factor = 1 / dos_senh.dividir_por_variable()
    return series_sqrt(factor) * series_sqrt(factor.escalar_variable(-1))


def _L(orden: int) -> Series:
    senh = (series_exp_lineal(1, 'z', orden + 1) - series_exp_lineal(-1, 'z', orden + 1)) / 2
    cosh = (series_exp_lineal(1, 'z', orden) + series_exp_lineal(-1, 'z', orden)) / 2
    return cosh / senh.dividir_por_variable()


def _gamma(orden: int) -> Series:
    coefs = [CERO, -simbolo('gamma')]
    for k in range(2, orden + 1):
        coefs.append(simbolo(f"zeta_{k}").escalar(Fraction((-1) ** k, k)))
    return series_exp(Series(coefs, 'z', orden))


def _witten(orden: int, orden_q: int) -> Series:
    Q = _ahat(orden, 'x')
    for n in range(1, orden_q + 1):
        geometrica = Series.constante(0, 'x', orden)
        for m in range(orden_q // n + 1):
            geometrica = geometrica + series_exp_lineal(m, 'x', orden) * SymbolPoly.simbolo('q', n * m)
        Q = (Q * geometrica).truncar_simbolo('q', orden_q)
        Q = (Q * geometrica.escalar_variable(-1)).truncar_simbolo('q', orden_q)
    return Q


def make_genus(nombre: str, orden: int = ORDEN_DEFECTO, orden_q: int = ORDEN_Q_DEFECTO) -> Genus:
    """
    Construye un género por nombre.

    Args:
        nombre: 'todd', 'ahat', 'L', 'gamma', 'witten' o 'additive'
        orden: Orden de truncamiento de Q
        orden_q: Truncamiento en q del producto de Witten
    """
    logger.debug("Construyendo género %s a orden %d", nombre, orden)
    if nombre == 'todd':
        return Genus(nombre, _todd(orden))
    if nombre == 'ahat':
        return Genus(nombre, _ahat(orden))
    if nombre in ('L', 'l'):
        return Genus('L', _L(orden))
    if nombre == 'gamma':
        return Genus(nombre, _gamma(orden))
    if nombre == 'witten':
        return Genus(nombre, _witten(orden, orden_q), orden_q)
    if nombre == 'additive':
        return Genus(nombre, Series.constante(1, 'z', orden))
    raise GeneroDesconocidoError(f"Género desconocido: {nombre}")


def reescalar_2pi_i(g: Genus) -> Genus:
    """Q(2 pi i x), con i^2 = -1."""
    factor = SymbolPoly({(('i', 1), ('pi', 1)): 2})
    Q = g.Q.escalar_variable(factor).mapear(lambda c: c.reducir_unidad_imaginaria())
    return Genus(f"{g.nombre}[2pi i]", Q, g.orden_q, unidad_imaginaria=True)


# =============================================================================
# VALORES EN CP^n
# =============================================================================

@dataclass(frozen=True)
class GenusValues:
    """
    Valores phi(CP^n) para n = 0..n_max.
    """
    nombre: str
    valores: Tuple[SymbolPoly, ...]

    def __post_init__(self):
        if self.valores and self.valores[0].truncar_simbolo('q', 0) != 1:
            raise ZetagenusError(f"phi(CP^0) debe valer 1, no {self.valores[0]}")

    def __getitem__(self, n: int) -> SymbolPoly:
        return self.valores[n]

    def __len__(self):
        return len(self.valores)

    def valor_producto(self, dimensiones: Sequence[int]) -> SymbolPoly:
        """phi(CP^n1 x CP^n2 x ...) por multiplicatividad."""
        resultado = UNO
        for n in dimensiones:
            if not 0 <= n < len(self.valores):
                raise ZetagenusError(f"CP^{n} fuera de los valores calculados (0..{len(self.valores) - 1})")
            resultado = resultado * self.valores[n]
        return resultado

    def a_tabla(self, bernoulli: bool = False) -> pd.DataFrame:
        filas = []
        for n, valor in enumerate(self.valores):
            fila = {'n': n, 'valor': valor.texto()}
            if bernoulli:
                fila['valor_bernoulli'] = bernoulli_rewrite(valor).texto()
            filas.append(fila)
        columnas = ['n', 'valor'] + (['valor_bernoulli'] if bernoulli else [])
        return pd.DataFrame(filas, columns=columnas)


def cp_values(g: Genus, n_max: int, verificar: bool = True) -> GenusValues:
    """
    phi(CP^n) = [z^n] Q^(n+1), comprobado contra (n+1) [z^(n+1)] de la
    reversión (por Newton) de f = z/Q.
    """
    if n_max >= g.orden:
        raise TruncamientoError(f"n_max={n_max} necesita Q de orden mayor que {g.orden}")
    Q = g.Q.truncar(n_max)
    valores = []
    potencia = Q
    for n in range(n_max + 1):
        valores.append(g.reducir(potencia[n]))
        potencia = g.reducir_serie(potencia * Q)
    if verificar:
        # con Q(0) = c(q) se revierte z/(Q/c) y se reescala por c^(n+1)
        c, _ = g.constante_q()
        f = (1 / g.normalizada()).multiplicar_por_variable()
        logaritmo = series_revert(g.reducir_serie(f).truncar(n_max + 1), 'newton')
        for n in range(n_max + 1):
            alternativo = g.reducir(logaritmo[n + 1] * (n + 1) * c ** (n + 1))
            if alternativo != valores[n]:
                raise VerificacionError(
                    f"{g.nombre}: CP^{n} difiere entre rutas: {valores[n]} vs {alternativo}"
                )
    return GenusValues(g.nombre, tuple(valores))


def log_series(g: Genus, verificar: bool = False) -> Series:
    """
    Logaritmo del género: reversión de f = z/Q.

    Con Q(0) = c(q) no racional el coeficiente lineal de f no es invertible
    como racional; se usa entonces log(z) = sum phi(CP^(k-1)) z^k / k.
    """
    n = g.orden
    if g.orden_q is not None:
        valores = cp_values(g, n - 1).valores
        return Series([CERO] + [v / k for k, v in enumerate(valores, start=1)], g.variable, n)
    logaritmo = series_revert(g.exponencial())
    if verificar:
        hbar = hbar_series(cp_values(g, n - 1), n).con_variable(g.variable)
        if logaritmo.truncar(n) != hbar:
            raise VerificacionError(f"{g.nombre}: el logaritmo no coincide con hbar")
    return logaritmo


# =============================================================================
# BERNOULLI Y ZETAS PARES
# =============================================================================

@dataclass(frozen=True)
class BernoulliTable:
    """
    B_0 .. B_2K desde z/(e^z - 1) = sum B_n z^n / n!  (B_1 = -1/2).
    """
    valores: Tuple[Fraction, ...]

    @property
    def K(self) -> int:
        return (len(self.valores) - 1) // 2

    def __getitem__(self, n: int) -> Fraction:
        return self.valores[n]


def tabla_bernoulli(K: int) -> BernoulliTable:
    orden = 2 * K
    cociente = Series.desde_funcion(lambda k: Fraction(1, factorial(k + 1)), 'z', orden)
    inversa = 1 / cociente
    return BernoulliTable(tuple(inversa[n].como_racional() * factorial(n) for n in range(orden + 1)))


def zeta_par(k: int, tabla: BernoulliTable) -> SymbolPoly:
    """zeta(2k) = (-1)^(k+1) B_2k (2 pi)^(2k) / (2 (2k)!)."""
    if 2 * k >= len(tabla.valores):
        raise TruncamientoError(f"La tabla de Bernoulli no llega a B_{2 * k}")
    coef = Fraction((-1) ** (k + 1)) * tabla[2 * k] * 2 ** (2 * k) / (2 * factorial(2 * k))
    return SymbolPoly.simbolo('pi', 2 * k).escalar(coef)


def bernoulli_rewrite(p: SymbolPoly, tabla: Optional[BernoulliTable] = None) -> SymbolPoly:
    """Sustituye cada zeta_(2k) por su valor racional por pi^(2k)."""
    pares = []
    for nombre in p.simbolos():
        prefijo, k = clave_simbolo(nombre)
        if prefijo == 'zeta' and k > 0 and k % 2 == 0:
            pares.append(k // 2)
    if not pares:
        return p
    if tabla is None:
        tabla = tabla_bernoulli(max(pares))
    return p.sustituir({f"zeta_{2 * k}": zeta_par(k, tabla) for k in pares})


# =============================================================================
# DUPLICACIÓN DE GAMMA
# =============================================================================

def _primer_fallo(a: Series, b: Series) -> Optional[int]:
    for k in range(min(a.orden, b.orden) + 1):
        if a[k] != b[k]:
            return k
    return None


def pi_z_sobre_seno(orden: int, variable: str = 'z') -> Series:
    """pi z / sin(pi z)."""
    pi = simbolo('pi')
    seno_sobre_z = series_sin(pi, variable, orden + 1).dividir_por_variable()
    return 1 / seno_sobre_z.mapear(lambda c: c.dividir_por_simbolo('pi') if c else c)


@dataclass
class ReporteDuplicacion:
    """
    Atributos:
        orden: Orden verificado
        fallos: Identidad -> primer coeficiente distinto (None si coincide)
    """
    orden: int
    fallos: Dict[str, Optional[int]] = field(default_factory=dict)

    @property
    def pasa(self) -> bool:
        return all(v is None for v in self.fallos.values())

    def a_dict(self) -> dict:
        return {'orden': self.orden, **{k: v is None for k, v in self.fallos.items()},
                'primer_fallo': {k: v for k, v in self.fallos.items() if v is not None},
                'pasa': self.pasa}


def duplication_check(orden: int = ORDEN_DEFECTO) -> ReporteDuplicacion:
    """
    (a) Q(z) Q(-z) = exp(sum zeta_2k / k z^2k)
    (b) tras reescribir zetas pares, lo anterior es pi z / sin(pi z)
    (c) Q(z) = sqrt(pi z / sin pi z) exp(-gamma z - sum_{k impar >= 3} zeta_k / k z^k)
    """
    if orden % 2:
        raise ZetagenusError(f"El orden debe ser par: {orden}")
    Q = make_genus('gamma', orden).Q
    izquierda_a = Q * Q.escalar_variable(-1)
    exponente = Series.desde_funcion(
        lambda k: simbolo(f"zeta_{k}").escalar(Fraction(2, k)) if k and k % 2 == 0 else 0,
        'z', orden)
    derecha_a = series_exp(exponente)

    tabla = tabla_bernoulli(orden // 2)
    reescribir = lambda c: bernoulli_rewrite(c, tabla)
    objetivo = pi_z_sobre_seno(orden)

    impar = Series.desde_funcion(
        lambda k: (-simbolo('gamma') if k == 1 else
                   simbolo(f"zeta_{k}").escalar(Fraction(-1, k)) if k % 2 and k > 1 else 0),
        'z', orden)
    derecha_c = series_sqrt(objetivo) * series_exp(impar)

    reporte = ReporteDuplicacion(orden, {
        'reflexion': _primer_fallo(izquierda_a, derecha_a),
        'bernoulli': _primer_fallo(derecha_a.mapear(reescribir), objetivo),
        'forma_partida': _primer_fallo(Q.mapear(reescribir), derecha_c),
    })
    logger.info("Duplicación a orden %d: %s", orden, 'pasa' if reporte.pasa else 'falla')
    return reporte


# =============================================================================
# WITTEN
# =============================================================================

@dataclass(frozen=True)
class WittenG:
    """
    g_k = -(k!/2) [x^k] log phi_W como q-series truncadas.
    """
    orden_q: int
    orden_x: int
    g: Tuple[SymbolPoly, ...]

    def a_tabla(self) -> pd.DataFrame:
        return pd.DataFrame([{'k': k, 'g_k': gk.texto()} for k, gk in enumerate(self.g)],
                            columns=['k', 'g_k'])


def witten_g_series(orden_q: int, orden_x: int) -> WittenG:
    """
    log phi_W = log(Q / c(q)) + log c(q), c(q) = Q(0) = prod (1 - q^n)^-2.
    Exige g_k = 0 para k impar.
    """
    genero = make_genus('witten', orden_x, orden_q)
    c, _ = genero.constante_q()
    logaritmo = genero.reducir_serie(series_log(genero.normalizada()))
    logaritmo = logaritmo + series_log(Series.desde_polinomio(c, 'q', orden_q)).a_polinomio()
    g = []
    for k in range(orden_x + 1):
        gk = (logaritmo[k] * Fraction(-factorial(k), 2)).truncar_simbolo('q', orden_q)
        if k % 2 and gk:
            raise VerificacionError(f"g_{k} no se anula: {gk}")
        g.append(gk)
    return WittenG(orden_q, orden_x, tuple(g))


# =============================================================================
# GAMMA COMO ESPECIALIZACIÓN
# =============================================================================

def exp_infinity_especializada(grado: int) -> Series:
    """Exp_inf(z) con p_1 -> gamma, p_k -> zeta_k: vale z Gamma(1 + z) = z Q_gamma(z)."""
    regla = ReglaEspecializacion.zeta()
    return exp_infinity(grado).mapear(
        lambda c: specialize(SymmElement.desde_polinomio(c, 'H'), regla) if c else c)
