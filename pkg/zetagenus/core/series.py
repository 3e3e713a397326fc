"""
Series de potencias truncadas con coeficientes SymbolPoly.

Series: univariada densa, coeficientes 0..N (N = orden de truncamiento).
Los coeficientes por encima de N no están definidos; toda operación
propaga el mínimo de los órdenes de sus operandos.

SerieMultivariada: dispersa, truncada por grado total (leyes de grupo
formales en X, Y y la prueba de asociatividad en X, Y, Z).
"""

import logging
from collections import defaultdict
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .errores import (
    SerieNoInvertibleError,
    TruncamientoError,
    VariableIncompatibleError,
    VerificacionError,
    ZetagenusError,
)
from .polinomios import CERO, UNO, SymbolPoly, como_poly, es_escalar

logger = logging.getLogger(__name__)


class Series:
    """
    Serie truncada en una variable.

    Atributos:
        variable: Nombre de la variable ('z', 'x', 'e', ...)
        orden: Orden de truncamiento N (se conocen N+1 coeficientes)
    """

    __slots__ = ('variable', 'orden', '_coefs')

    def __init__(self, coeficientes: Sequence, variable: str = 'z', orden: Optional[int] = None):
        coefs = [como_poly(c) for c in coeficientes]
        if orden is None:
            orden = len(coefs) - 1
        if orden < 0:
            raise TruncamientoError("Una serie necesita orden >= 0")
        coefs = coefs[:orden + 1]
        coefs.extend([CERO] * (orden + 1 - len(coefs)))
        self.variable = variable
        self.orden = orden
        self._coefs = tuple(coefs)

    # ----- constructores -----

    @classmethod
    def variable_pura(cls, variable: str = 'z', orden: int = 20) -> 'Series':
        return cls([0, 1], variable, orden)

    @classmethod
    def constante(cls, valor, variable: str = 'z', orden: int = 20) -> 'Series':
        return cls([valor], variable, orden)

    @classmethod
    def desde_funcion(cls, funcion: Callable[[int], object], variable: str = 'z',
                      orden: int = 20) -> 'Series':
        return cls([funcion(k) for k in range(orden + 1)], variable, orden)

    @classmethod
    def desde_polinomio(cls, poly: SymbolPoly, simbolo: str, orden: int) -> 'Series':
        """Lee un polinomio en el símbolo como serie en ese símbolo."""
        return cls([poly.coeficiente_en(simbolo, k) for k in range(orden + 1)], simbolo, orden)

    # ----- acceso -----

    @property
    def coeficientes(self) -> Tuple[SymbolPoly, ...]:
        return self._coefs

    def __getitem__(self, k: int) -> SymbolPoly:
        if not 0 <= k <= self.orden:
            raise TruncamientoError(
                f"Coeficiente {self.variable}^{k} fuera del orden {self.orden}"
            )
        return self._coefs[k]

    def es_cero(self) -> bool:
        return not any(self._coefs)

    def truncar(self, orden: int) -> 'Series':
        if orden > self.orden:
            raise TruncamientoError(f"No se puede extender de orden {self.orden} a {orden}")
        return Series(self._coefs[:orden + 1], self.variable, orden)

    def con_variable(self, nombre: str) -> 'Series':
        return Series(self._coefs, nombre, self.orden)

    def _alinear(self, otra: 'Series') -> int:
        if self.variable != otra.variable:
            raise VariableIncompatibleError(
                f"Variables distintas: {self.variable} y {otra.variable}"
            )
        return min(self.orden, otra.orden)

    # ----- aritmética -----

    def __add__(self, otra):
        if isinstance(otra, Series):
            n = self._alinear(otra)
            return Series([self._coefs[k] + otra._coefs[k] for k in range(n + 1)], self.variable, n)
        otra = _escalar_o_none(otra)
        if otra is None:
            return NotImplemented
        return Series((self._coefs[0] + otra,) + self._coefs[1:], self.variable, self.orden)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self._coefs], self.variable, self.orden)

    def __sub__(self, otra):
        if isinstance(otra, Series):
            return self + (-otra)
        otra = _escalar_o_none(otra)
        if otra is None:
            return NotImplemented
        return self + (-otra)

    def __rsub__(self, otra):
        return (-self) + otra

    def __mul__(self, otra):
        if isinstance(otra, Series):
            n = self._alinear(otra)
            return Series(_producto(self._coefs, otra._coefs, n), self.variable, n)
        otra = _escalar_o_none(otra)
        if otra is None:
            return NotImplemented
        return Series([c * otra for c in self._coefs], self.variable, self.orden)

    __rmul__ = __mul__

    def __truediv__(self, otra):
        if isinstance(otra, Series):
            return series_arith(self, otra, 'div')
        otra = _escalar_o_none(otra)
        if otra is None:
            return NotImplemented
        return Series([c / otra for c in self._coefs], self.variable, self.orden)

    def __rtruediv__(self, otra):
        otra = _escalar_o_none(otra)
        if otra is None:
            return NotImplemented
        return series_arith(Series.constante(otra, self.variable, self.orden), self, 'div')

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ZetagenusError(f"Exponente no válido: {n}")
        resultado = Series.constante(1, self.variable, self.orden)
        base = self
        while n:
            if n & 1:
                resultado = resultado * base
            n >>= 1
            if n:
                base = base * base
        return resultado

    def __eq__(self, otra):
        if not isinstance(otra, Series):
            return NotImplemented
        return (self.variable, self.orden, self._coefs) == (otra.variable, otra.orden, otra._coefs)

    def __hash__(self):
        return hash((self.variable, self.orden, self._coefs))

    # ----- operaciones sobre la variable -----

    def derivada(self) -> 'Series':
        if self.orden == 0:
            raise TruncamientoError("La derivada de una serie de orden 0 no está definida")
        return Series([self._coefs[k] * k for k in range(1, self.orden + 1)],
                      self.variable, self.orden - 1)

    def integral(self) -> 'Series':
        """Primitiva con término constante nulo."""
        return Series([CERO] + [self._coefs[k] / (k + 1) for k in range(self.orden + 1)],
                      self.variable, self.orden + 1)

    def dividir_por_variable(self) -> 'Series':
        if self._coefs[0]:
            raise SerieNoInvertibleError(f"No divisible por {self.variable}: término constante no nulo")
        if self.orden == 0:
            raise TruncamientoError("No hay coeficientes tras dividir por la variable")
        return Series(self._coefs[1:], self.variable, self.orden - 1)

    def multiplicar_por_variable(self, k: int = 1) -> 'Series':
        return Series([CERO] * k + list(self._coefs), self.variable, self.orden + k)

    def escalar_variable(self, factor) -> 'Series':
        """Sustitución z -> factor*z."""
        factor = como_poly(factor)
        potencia = UNO
        coefs = []
        for c in self._coefs:
            coefs.append(c * potencia)
            potencia = potencia * factor
        return Series(coefs, self.variable, self.orden)

    def mapear(self, funcion: Callable[[SymbolPoly], object]) -> 'Series':
        return Series([funcion(c) for c in self._coefs], self.variable, self.orden)

    def truncar_simbolo(self, nombre: str, grado_maximo: int) -> 'Series':
        return self.mapear(lambda c: c.truncar_simbolo(nombre, grado_maximo))

    def es_par(self) -> bool:
        return not any(self._coefs[1::2])

    def es_impar(self) -> bool:
        return not any(self._coefs[0::2])

    def a_polinomio(self, simbolo: Optional[str] = None) -> SymbolPoly:
        """Suma de coeficiente_k * simbolo^k (truncamiento incluido)."""
        simbolo = simbolo or self.variable
        total = CERO
        for k, c in enumerate(self._coefs):
            if c:
                total = total + c * SymbolPoly.simbolo(simbolo, k)
        return total

    # ----- representación -----

    def texto(self) -> str:
        partes = []
        for k, c in enumerate(self._coefs):
            if not c:
                continue
            if k == 0:
                potencia = ''
            elif k == 1:
                potencia = self.variable
            else:
                potencia = f"{self.variable}^{k}"
            if not potencia:
                partes.append(c.texto())
            elif len(c) == 1 and c.es_constante():
                valor = c.como_racional()
                if valor == 1:
                    partes.append(potencia)
                elif valor == -1:
                    partes.append(f"-{potencia}")
                else:
                    partes.append(f"{valor}*{potencia}")
            elif len(c) == 1:
                partes.append(f"{c.texto()}*{potencia}")
            else:
                partes.append(f"({c.texto()})*{potencia}")
        cola = f"O({self.variable}^{self.orden + 1})"
        cuerpo = ' + '.join(partes).replace('+ -', '- ') if partes else '0'
        return f"{cuerpo} + {cola}"

    def a_json(self) -> dict:
        return {
            'variable': self.variable,
            'orden': self.orden,
            'coeficientes': [c.texto() for c in self._coefs],
        }

    def __str__(self):
        return self.texto()

    def __repr__(self):
        return f"Series({self.texto()})"


def _escalar_o_none(valor) -> Optional[SymbolPoly]:
    if isinstance(valor, SymbolPoly):
        return valor
    if es_escalar(valor):
        return SymbolPoly.constante(valor)
    return None


def _producto(a: Sequence[SymbolPoly], b: Sequence[SymbolPoly], orden: int) -> List[SymbolPoly]:
    res = [CERO] * (orden + 1)
    for i in range(orden + 1):
        ai = a[i]
        if not ai:
            continue
        for j in range(orden + 1 - i):
            bj = b[j]
            if bj:
                res[i + j] = res[i + j] + ai * bj
    return res


def _constante_racional(c: SymbolPoly, que: str) -> Fraction:
    if not c.es_constante():
        raise SerieNoInvertibleError(f"{que}: término constante simbólico {c}")
    return c.como_racional()


# =============================================================================
# OPERACIONES DEL NÚCLEO
# =============================================================================

def series_arith(a: Series, b: Series, op: str) -> Series:
    """
    Aritmética exacta de series: op en {'add', 'sub', 'mul', 'div'}.

    La división exige un término constante racional no nulo en b.
    """
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op != 'div':
        raise ZetagenusError(f"Operación desconocida: {op}")
    n = a._alinear(b)
    b0 = _constante_racional(b[0], "División")
    if not b0:
        raise SerieNoInvertibleError("División por una serie con término constante nulo")
    inverso = Fraction(1) / b0
    c: List[SymbolPoly] = []
    for k in range(n + 1):
        acumulado = a[k]
        for j in range(1, k + 1):
            if b[j] and c[k - j]:
                acumulado = acumulado - b[j] * c[k - j]
        c.append(acumulado.escalar(inverso))
    return Series(c, a.variable, n)


def series_exp(a: Series) -> Series:
    """exp(a) por la recurrencia f_n = (1/n) sum k a_k f_{n-k}."""
    if a[0]:
        raise SerieNoInvertibleError(f"exp necesita término constante nulo, no {a[0]}")
    f = [UNO]
    for n in range(1, a.orden + 1):
        acumulado = CERO
        for k in range(1, n + 1):
            if a[k] and f[n - k]:
                acumulado = acumulado + (a[k] * f[n - k]).escalar(k)
        f.append(acumulado.escalar(Fraction(1, n)))
    return Series(f, a.variable, a.orden)


def series_log(a: Series) -> Series:
    """log(a) para a con término constante 1."""
    if a[0] != 1:
        raise SerieNoInvertibleError(f"log necesita término constante 1, no {a[0]}")
    l = [CERO]
    for n in range(1, a.orden + 1):
        acumulado = a[n].escalar(n)
        for k in range(1, n):
            if l[k] and a[n - k]:
                acumulado = acumulado - (l[k] * a[n - k]).escalar(k)
        l.append(acumulado.escalar(Fraction(1, n)))
    return Series(l, a.variable, a.orden)


def series_sqrt(a: Series) -> Series:
    """Raíz cuadrada con s_0 = 1: s_n = (a_n - sum s_k s_{n-k}) / 2."""
    if a[0] != 1:
        raise SerieNoInvertibleError(f"sqrt necesita término constante 1, no {a[0]}")
    s = [UNO]
    for n in range(1, a.orden + 1):
        acumulado = a[n]
        for k in range(1, n):
            if s[k] and s[n - k]:
                acumulado = acumulado - s[k] * s[n - k]
        s.append(acumulado.escalar(Fraction(1, 2)))
    return Series(s, a.variable, a.orden)


def series_compose(exterior: Series, interior: Series) -> Series:
    """exterior(interior(z)) por Horner; interior sin término constante."""
    if interior[0]:
        raise SerieNoInvertibleError("La serie interior debe tener término constante nulo")
    n = min(exterior.orden, interior.orden)
    interior = interior.truncar(n)
    resultado = Series.constante(exterior[n], interior.variable, n)
    for k in range(n - 1, -1, -1):
        resultado = resultado * interior + exterior[k]
    return resultado


def _coeficiente_lineal(f: Series) -> Fraction:
    if f.orden < 1:
        raise TruncamientoError("Revertir requiere orden >= 1")
    if f[0]:
        raise SerieNoInvertibleError("Revertir requiere término constante nulo")
    c = _constante_racional(f[1], "Reversión")
    if not c:
        raise SerieNoInvertibleError("Revertir requiere coeficiente lineal no nulo")
    return c


def revert_lagrange(f: Series) -> Series:
    """[z^n] g = (1/n) [w^(n-1)] (w/f(w))^n."""
    c = _coeficiente_lineal(f)
    n_max = f.orden
    g = [CERO, SymbolPoly.constante(Fraction(1) / c)]
    if n_max > 1:
        h = 1 / f.dividir_por_variable()
        potencia = h
        for n in range(2, n_max + 1):
            potencia = potencia * h
            g.append(potencia[n - 1].escalar(Fraction(1, n)))
    return Series(g, f.variable, n_max)


def revert_newton(f: Series) -> Series:
    """Iteración g <- g - (f(g) - z) / f'(g) hasta residuo nulo."""
    c = _coeficiente_lineal(f)
    n_max = f.orden
    z = Series.variable_pura(f.variable, n_max)
    g = z * SymbolPoly.constante(Fraction(1) / c)
    if n_max == 1:
        return g
    derivada = f.derivada()
    for iteracion in range(n_max + 1):
        residuo = series_compose(f, g) - z
        if residuo.es_cero():
            logger.debug("Newton convergió en %d iteraciones (orden %d)", iteracion, n_max)
            return g
        inversa = 1 / series_compose(derivada, g)
        # residuo[0] = 0: el coeficiente añadido nunca interviene
        inversa = Series(inversa.coeficientes + (CERO,), f.variable, n_max)
        g = g - residuo * inversa
    raise VerificacionError(f"La iteración de Newton no convergió a orden {n_max}")


def series_revert(f: Series, metodo: str = 'lagrange') -> Series:
    """
    Inversa composicional de f = c z + ...

    Args:
        f: Serie con término constante nulo y coeficiente lineal racional no nulo
        metodo: 'lagrange', 'newton' o 'ambos' (calcula las dos y exige igualdad)
    """
    if metodo == 'lagrange':
        return revert_lagrange(f)
    if metodo == 'newton':
        return revert_newton(f)
    if metodo != 'ambos':
        raise ZetagenusError(f"Método de reversión desconocido: {metodo}")
    g = revert_lagrange(f)
    if revert_newton(f) != g:
        raise VerificacionError("Lagrange y Newton dan reversiones distintas")
    return g


# =============================================================================
# SERIES ELEMENTALES
# =============================================================================

def series_exp_lineal(escala=1, variable: str = 'z', orden: int = 20) -> Series:
    """exp(escala * z) con escala racional o simbólica."""
    escala = como_poly(escala)
    return Series([(escala ** k).escalar(Fraction(1, factorial(k))) for k in range(orden + 1)],
                  variable, orden)


def series_sin(escala=1, variable: str = 'z', orden: int = 20) -> Series:
    escala = como_poly(escala)
    coefs = []
    for k in range(orden + 1):
        if k % 2:
            signo = -1 if (k // 2) % 2 else 1
            coefs.append((escala ** k).escalar(Fraction(signo, factorial(k))))
        else:
            coefs.append(CERO)
    return Series(coefs, variable, orden)


def series_cos(escala=1, variable: str = 'z', orden: int = 20) -> Series:
    escala = como_poly(escala)
    coefs = []
    for k in range(orden + 1):
        if k % 2:
            coefs.append(CERO)
        else:
            signo = -1 if (k // 2) % 2 else 1
            coefs.append((escala ** k).escalar(Fraction(signo, factorial(k))))
    return Series(coefs, variable, orden)


# =============================================================================
# SERIES MULTIVARIADAS
# =============================================================================

Exponentes = Tuple[int, ...]


class SerieMultivariada:
    """
    Serie en varias variables truncada por grado total.

    Atributos:
        variables: Tupla de nombres, p. ej. ('X', 'Y')
        orden: Grado total máximo conocido
    """

    __slots__ = ('variables', 'orden', '_coefs')

    def __init__(self, coeficientes: Mapping[Exponentes, object], variables: Sequence[str], orden: int):
        self.variables = tuple(variables)
        self.orden = orden
        limpio: Dict[Exponentes, SymbolPoly] = {}
        for exps, c in coeficientes.items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ZetagenusError(f"Exponentes {exps} no encajan con {self.variables}")
            if sum(exps) > orden:
                continue
            valor = limpio.get(exps, CERO) + como_poly(c)
            if valor:
                limpio[exps] = valor
            else:
                limpio.pop(exps, None)
        self._coefs = limpio

    @classmethod
    def _crudo(cls, coefs, variables, orden) -> 'SerieMultivariada':
        obj = cls.__new__(cls)
        obj.variables = variables
        obj.orden = orden
        obj._coefs = coefs
        return obj

    @classmethod
    def variable(cls, nombre: str, variables: Sequence[str], orden: int) -> 'SerieMultivariada':
        variables = tuple(variables)
        exps = tuple(1 if v == nombre else 0 for v in variables)
        return cls({exps: 1}, variables, orden)

    @classmethod
    def constante(cls, valor, variables: Sequence[str], orden: int) -> 'SerieMultivariada':
        variables = tuple(variables)
        return cls({(0,) * len(variables): valor}, variables, orden)

    @classmethod
    def desde_serie(cls, serie: Series, nombre: str, variables: Sequence[str]) -> 'SerieMultivariada':
        """Serie univariada vista como serie en la variable nombre."""
        variables = tuple(variables)
        indice = variables.index(nombre)
        coefs = {}
        for k, c in enumerate(serie.coeficientes):
            if c:
                exps = [0] * len(variables)
                exps[indice] = k
                coefs[tuple(exps)] = c
        return cls(coefs, variables, serie.orden)

    # ----- acceso -----

    def coeficiente(self, exps: Exponentes) -> SymbolPoly:
        exps = tuple(exps)
        if sum(exps) > self.orden:
            raise TruncamientoError(f"Grado {sum(exps)} fuera del orden {self.orden}")
        return self._coefs.get(exps, CERO)

    def items(self):
        return self._coefs.items()

    def es_cero(self) -> bool:
        return not self._coefs

    def truncar(self, orden: int) -> 'SerieMultivariada':
        if orden > self.orden:
            raise TruncamientoError(f"No se puede extender de orden {self.orden} a {orden}")
        return SerieMultivariada._crudo(
            {e: c for e, c in self._coefs.items() if sum(e) <= orden}, self.variables, orden)

    def _alinear(self, otra: 'SerieMultivariada') -> int:
        if self.variables != otra.variables:
            raise VariableIncompatibleError(
                f"Variables distintas: {self.variables} y {otra.variables}"
            )
        return min(self.orden, otra.orden)

    # ----- aritmética -----

    def __add__(self, otra):
        if isinstance(otra, SerieMultivariada):
            n = self._alinear(otra)
            res = {e: c for e, c in self._coefs.items() if sum(e) <= n}
            for e, c in otra._coefs.items():
                if sum(e) > n:
                    continue
                v = res.get(e, CERO) + c
                if v:
                    res[e] = v
                else:
                    res.pop(e, None)
            return SerieMultivariada._crudo(res, self.variables, n)
        otra = _escalar_o_none(otra)
        if otra is None:
            return NotImplemented
        return self + SerieMultivariada.constante(otra, self.variables, self.orden)

    __radd__ = __add__

    def __neg__(self):
        return SerieMultivariada._crudo({e: -c for e, c in self._coefs.items()},
                                        self.variables, self.orden)

    def __sub__(self, otra):
        if isinstance(otra, SerieMultivariada):
            return self + (-otra)
        otra = _escalar_o_none(otra)
        if otra is None:
            return NotImplemented
        return self + (-otra)

    def __rsub__(self, otra):
        return (-self) + otra

    def __mul__(self, otra):
        if isinstance(otra, SerieMultivariada):
            n = self._alinear(otra)
            res: Dict[Exponentes, SymbolPoly] = {}
            derecha = [(e, sum(e), c) for e, c in otra._coefs.items()]
            for e1, c1 in self._coefs.items():
                g1 = sum(e1)
                if g1 > n:
                    continue
                for e2, g2, c2 in derecha:
                    if g1 + g2 > n:
                        continue
                    e = tuple(a + b for a, b in zip(e1, e2))
                    v = res.get(e, CERO) + c1 * c2
                    if v:
                        res[e] = v
                    else:
                        res.pop(e, None)
            return SerieMultivariada._crudo(res, self.variables, n)
        otra = _escalar_o_none(otra)
        if otra is None:
            return NotImplemented
        if not otra:
            return SerieMultivariada._crudo({}, self.variables, self.orden)
        return SerieMultivariada._crudo({e: c * otra for e, c in self._coefs.items()},
                                        self.variables, self.orden)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ZetagenusError(f"Exponente no válido: {n}")
        resultado = SerieMultivariada.constante(1, self.variables, self.orden)
        for _ in range(n):
            resultado = resultado * self
        return resultado

    def __eq__(self, otra):
        if not isinstance(otra, SerieMultivariada):
            return NotImplemented
        return (self.variables, self.orden, self._coefs) == (otra.variables, otra.orden, otra._coefs)

    __hash__ = None

    # ----- sustituciones -----

    def anular(self, nombre: str) -> 'SerieMultivariada':
        """Evalúa la variable nombre en cero."""
        indice = self.variables.index(nombre)
        return SerieMultivariada._crudo(
            {e: c for e, c in self._coefs.items() if e[indice] == 0}, self.variables, self.orden)

    def incrustar(self, variables_destino: Sequence[str],
                  renombre: Optional[Mapping[str, str]] = None) -> 'SerieMultivariada':
        """Reescribe la serie en otras variables; renombre lleva cada variable propia a una de destino."""
        variables_destino = tuple(variables_destino)
        renombre = dict(renombre or {})
        indices = [variables_destino.index(renombre.get(v, v)) for v in self.variables]
        res: Dict[Exponentes, SymbolPoly] = {}
        for exps, c in self._coefs.items():
            nuevo = [0] * len(variables_destino)
            for i, e in zip(indices, exps):
                nuevo[i] += e
            nuevo = tuple(nuevo)
            v = res.get(nuevo, CERO) + c
            if v:
                res[nuevo] = v
            else:
                res.pop(nuevo, None)
        return SerieMultivariada._crudo(res, variables_destino, self.orden)

    def sustituir(self, mapa: Mapping[str, 'SerieMultivariada']) -> 'SerieMultivariada':
        """
        Composición F(U_1, ..., U_m) con U_i = mapa[variable_i].

        Horner en la primera variable; el resto como combinación lineal de
        productos de potencias cacheados.
        """
        imagenes = [mapa[v] for v in self.variables]
        destino = imagenes[0].variables
        for imagen in imagenes:
            if imagen.variables != destino:
                raise VariableIncompatibleError("Las imágenes deben compartir variables")
            if imagen._coefs.get((0,) * len(destino)):
                raise SerieNoInvertibleError("Las imágenes deben tener término constante nulo")
        orden = min([self.orden] + [im.orden for im in imagenes])
        imagenes = [im.truncar(orden) for im in imagenes]

        potencias: Dict[Tuple[int, int], SerieMultivariada] = {}

        def potencia(i: int, e: int) -> SerieMultivariada:
            if (i, e) not in potencias:
                potencias[(i, e)] = (potencia(i, e - 1) * imagenes[i] if e > 1
                                     else imagenes[i] if e == 1
                                     else SerieMultivariada.constante(1, destino, orden))
            return potencias[(i, e)]

        productos: Dict[Exponentes, SerieMultivariada] = {}

        def producto_resto(resto: Exponentes) -> SerieMultivariada:
            if resto not in productos:
                acumulado = SerieMultivariada.constante(1, destino, orden)
                for i, e in enumerate(resto, start=1):
                    if e:
                        acumulado = acumulado * potencia(i, e)
                productos[resto] = acumulado
            return productos[resto]

        grupos: Dict[int, Dict[Exponentes, SymbolPoly]] = defaultdict(dict)
        for exps, c in self._coefs.items():
            if sum(exps) <= orden:
                grupos[exps[0]][exps[1:]] = c
        resultado = SerieMultivariada._crudo({}, destino, orden)
        for e0 in range(max(grupos, default=0), -1, -1):
            parte = SerieMultivariada._crudo({}, destino, orden)
            for resto, c in grupos.get(e0, {}).items():
                parte = parte + producto_resto(resto) * c
            resultado = resultado * imagenes[0] + parte
        return resultado

    # ----- representación -----

    def terminos_ordenados(self) -> List[Tuple[Exponentes, SymbolPoly]]:
        return sorted(self._coefs.items(), key=lambda par: (sum(par[0]), tuple(-e for e in par[0])))

    def texto(self) -> str:
        partes = []
        for exps, c in self.terminos_ordenados():
            mono = '*'.join(v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e)
            if not mono:
                partes.append(c.texto())
            elif c == 1:
                partes.append(mono)
            elif c == -1:
                partes.append(f"-{mono}")
            elif len(c) == 1:
                partes.append(f"{c.texto()}*{mono}")
            else:
                partes.append(f"({c.texto()})*{mono}")
        cuerpo = ' + '.join(partes).replace('+ -', '- ') if partes else '0'
        return f"{cuerpo} + O({self.orden + 1})"

    def __str__(self):
        return self.texto()

    def __repr__(self):
        return f"SerieMultivariada({self.texto()})"


def componer_univariada(f: Series, interior: SerieMultivariada) -> SerieMultivariada:
    """f(U) para U multivariada sin término constante (Horner)."""
    if interior._coefs.get((0,) * len(interior.variables)):
        raise SerieNoInvertibleError("La serie interior debe tener término constante nulo")
    n = min(f.orden, interior.orden)
    interior = interior.truncar(n)
    resultado = SerieMultivariada.constante(f[n], interior.variables, n)
    for k in range(n - 1, -1, -1):
        resultado = resultado * interior + f[k]
    return resultado
