"""
Polinomios simbólicos graduados con coeficientes racionales exactos.

Un SymbolPoly es una asociación dispersa monomio -> Fraction. Los símbolos
llevan un grado entero fijado por su nombre:

    gamma, pi      grado 1
    u, q, U, i     grado 0
    <prefijo>_<k>  grado k   (zeta_3, t_2, t'_1, sigma_5, e_2, h_4, p_1, ...)
    cualquier otro grado 0

Un monomio es una tupla ordenada de pares (nombre, exponente) con
exponentes positivos; el monomio vacío () es la constante.
"""

import logging
import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Mapping, Optional, Tuple, Union

from .errores import ZetagenusError

logger = logging.getLogger(__name__)

Monomio = Tuple[Tuple[str, int], ...]
Escalar = Union[int, Fraction]

GRADOS_FIJOS = {'gamma': 1, 'pi': 1, 'u': 0, 'q': 0, 'U': 0, 'i': 0}
_PATRON_INDICE = re.compile(r"^(.*?)_(\d+)$")


# =============================================================================
# RACIONALES
# =============================================================================

def a_racional(valor) -> Fraction:
    """
    Convierte un escalar exacto a Fraction.

    Acepta int, Fraction o texto 'a/b'. Los float se rechazan: la
    aritmética del núcleo nunca redondea.
    """
    if isinstance(valor, Fraction):
        return valor
    if isinstance(valor, bool):
        raise TypeError(f"No es un racional exacto: {valor!r}")
    if isinstance(valor, int):
        return Fraction(valor)
    if isinstance(valor, str):
        return Fraction(valor.strip())
    raise TypeError(f"No es un racional exacto: {valor!r}")


def racional_a_texto(valor) -> str:
    """Racional como 'num/den' (siempre con denominador)."""
    q = a_racional(valor)
    return f"{q.numerator}/{q.denominator}"


def es_escalar(valor) -> bool:
    return isinstance(valor, (int, Fraction)) and not isinstance(valor, bool)


# =============================================================================
# SÍMBOLOS Y MONOMIOS
# =============================================================================

def grado_simbolo(nombre: str) -> int:
    """Grado de un símbolo según la regla de nombres."""
    if nombre in GRADOS_FIJOS:
        return GRADOS_FIJOS[nombre]
    coincidencia = _PATRON_INDICE.match(nombre)
    return int(coincidencia.group(2)) if coincidencia else 0


def clave_simbolo(nombre: str) -> Tuple[str, int]:
    """Orden natural: zeta_2 antes que zeta_10."""
    coincidencia = _PATRON_INDICE.match(nombre)
    if coincidencia:
        return (coincidencia.group(1), int(coincidencia.group(2)))
    return (nombre, -1)


def grado_monomio(monomio: Monomio) -> int:
    return sum(grado_simbolo(n) * e for n, e in monomio)


def normalizar_monomio(monomio) -> Monomio:
    """Acepta dict o pares en cualquier orden; suma repetidos y quita ceros."""
    pares = monomio.items() if isinstance(monomio, Mapping) else monomio
    exps: Dict[str, int] = {}
    for nombre, e in pares:
        if e < 0:
            raise ZetagenusError(f"Exponente negativo para {nombre}: {e}")
        exps[nombre] = exps.get(nombre, 0) + e
    return tuple(sorted((n, e) for n, e in exps.items() if e))


@lru_cache(maxsize=1 << 16)
def multiplicar_monomios(m1: Monomio, m2: Monomio) -> Monomio:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for nombre, e in m2:
        exps[nombre] = exps.get(nombre, 0) + e
    return tuple(sorted(exps.items()))


def _clave_termino(monomio: Monomio):
    ordenado = sorted(monomio, key=lambda par: clave_simbolo(par[0]))
    return (grado_monomio(monomio), tuple((clave_simbolo(n), e) for n, e in ordenado))


def _texto_monomio(monomio: Monomio) -> str:
    ordenado = sorted(monomio, key=lambda par: clave_simbolo(par[0]))
    return '*'.join(n if e == 1 else f"{n}^{e}" for n, e in ordenado)


# =============================================================================
# POLINOMIOS
# =============================================================================

class SymbolPoly:
    """
    Polinomio disperso en símbolos graduados con coeficientes Fraction.

    Inmutable: todas las operaciones devuelven un objeto nuevo. No se
    guardan coeficientes nulos.
    """

    __slots__ = ('_terminos', '_hash')

    def __init__(self, terminos: Optional[Mapping] = None):
        limpio: Dict[Monomio, Fraction] = {}
        for monomio, coef in (terminos or {}).items():
            c = a_racional(coef)
            if not c:
                continue
            clave = normalizar_monomio(monomio)
            limpio[clave] = limpio.get(clave, 0) + c
        self._terminos = {m: c for m, c in limpio.items() if c}
        self._hash = None

    @classmethod
    def _crudo(cls, terminos: Dict[Monomio, Fraction]) -> 'SymbolPoly':
        obj = cls.__new__(cls)
        obj._terminos = terminos
        obj._hash = None
        return obj

    @classmethod
    def constante(cls, valor) -> 'SymbolPoly':
        c = a_racional(valor)
        return cls._crudo({(): c} if c else {})

    @classmethod
    def simbolo(cls, nombre: str, exponente: int = 1) -> 'SymbolPoly':
        return cls._crudo({((nombre, exponente),) if exponente else (): Fraction(1)})

    # ----- acceso -----

    def items(self):
        return self._terminos.items()

    def __len__(self):
        return len(self._terminos)

    def __bool__(self):
        return bool(self._terminos)

    def coeficiente(self, monomio=()) -> Fraction:
        return self._terminos.get(normalizar_monomio(monomio), Fraction(0))

    def es_constante(self) -> bool:
        return not self._terminos or set(self._terminos) == {()}

    def como_racional(self) -> Fraction:
        """Valor de un polinomio constante; error si tiene símbolos."""
        if not self.es_constante():
            raise ZetagenusError(f"No es constante: {self}")
        return self._terminos.get((), Fraction(0))

    def simbolos(self) -> List[str]:
        nombres = {n for m in self._terminos for n, _ in m}
        return sorted(nombres, key=clave_simbolo)

    def grados(self) -> List[int]:
        return sorted({grado_monomio(m) for m in self._terminos})

    def es_homogeneo(self, grado: Optional[int] = None) -> bool:
        grados = self.grados()
        if not grados:
            return True
        if len(grados) > 1:
            return False
        return grado is None or grados[0] == grado

    # ----- aritmética -----

    def __add__(self, otro):
        otro = _como_poly(otro)
        if otro is None:
            return NotImplemented
        if not otro._terminos:
            return self
        if not self._terminos:
            return otro
        res = dict(self._terminos)
        _sumar_en(res, otro._terminos)
        return SymbolPoly._crudo(res)

    __radd__ = __add__

    def __neg__(self):
        return SymbolPoly._crudo({m: -c for m, c in self._terminos.items()})

    def __sub__(self, otro):
        otro = _como_poly(otro)
        if otro is None:
            return NotImplemented
        return self + (-otro)

    def __rsub__(self, otro):
        otro = _como_poly(otro)
        if otro is None:
            return NotImplemented
        return otro + (-self)

    def __mul__(self, otro):
        otro = _como_poly(otro)
        if otro is None:
            return NotImplemented
        if not self._terminos or not otro._terminos:
            return CERO
        if otro.es_constante():
            return self.escalar(otro._terminos[()])
        if self.es_constante():
            return otro.escalar(self._terminos[()])
        res: Dict[Monomio, Fraction] = {}
        for m1, c1 in self._terminos.items():
            for m2, c2 in otro._terminos.items():
                m = multiplicar_monomios(m1, m2)
                v = res.get(m, 0) + c1 * c2
                if v:
                    res[m] = v
                else:
                    res.pop(m, None)
        return SymbolPoly._crudo(res)

    __rmul__ = __mul__

    def escalar(self, factor) -> 'SymbolPoly':
        c = a_racional(factor)
        if not c:
            return CERO
        if c == 1:
            return self
        return SymbolPoly._crudo({m: v * c for m, v in self._terminos.items()})

    def __truediv__(self, otro):
        if isinstance(otro, SymbolPoly):
            otro = otro.como_racional()
        if not es_escalar(otro):
            return NotImplemented
        if not otro:
            raise ZeroDivisionError("División de SymbolPoly por cero")
        return self.escalar(Fraction(1) / a_racional(otro))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ZetagenusError(f"Exponente no válido: {n}")
        resultado = UNO
        base = self
        while n:
            if n & 1:
                resultado = resultado * base
            n >>= 1
            if n:
                base = base * base
        return resultado

    def __eq__(self, otro):
        otro = _como_poly(otro)
        if otro is None:
            return NotImplemented
        return self._terminos == otro._terminos

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terminos.items()))
        return self._hash

    # ----- transformaciones -----

    def sustituir(self, mapa: Mapping[str, object]) -> 'SymbolPoly':
        """Reemplaza símbolos por polinomios (o escalares); el resto queda."""
        imagenes = {}
        for nombre, valor in mapa.items():
            poly = _como_poly(valor)
            if poly is None:
                raise TypeError(f"Imagen no válida para {nombre}: {valor!r}")
            imagenes[nombre] = poly
        potencias: Dict[Tuple[str, int], SymbolPoly] = {}
        res: Dict[Monomio, Fraction] = {}
        for monomio, coef in self._terminos.items():
            resto = []
            factor = SymbolPoly._crudo({(): coef})
            for nombre, e in monomio:
                if nombre in imagenes:
                    if (nombre, e) not in potencias:
                        potencias[(nombre, e)] = imagenes[nombre] ** e
                    factor = factor * potencias[(nombre, e)]
                else:
                    resto.append((nombre, e))
            if resto:
                factor = factor * SymbolPoly._crudo({tuple(resto): Fraction(1)})
            _sumar_en(res, factor._terminos)
        return SymbolPoly._crudo(res)

    def coeficiente_en(self, nombre: str, exponente: int) -> 'SymbolPoly':
        """Coeficiente de nombre^exponente como polinomio en los demás símbolos."""
        res = {}
        for monomio, coef in self._terminos.items():
            exps = dict(monomio)
            if exps.get(nombre, 0) != exponente:
                continue
            exps.pop(nombre, None)
            res[tuple(sorted(exps.items()))] = coef
        return SymbolPoly._crudo(res)

    def truncar_simbolo(self, nombre: str, grado_maximo: int) -> 'SymbolPoly':
        """Descarta los términos con exponente de nombre mayor que grado_maximo."""
        return SymbolPoly._crudo({
            m: c for m, c in self._terminos.items()
            if dict(m).get(nombre, 0) <= grado_maximo
        })

    def dividir_por_simbolo(self, nombre: str) -> 'SymbolPoly':
        res = {}
        for monomio, coef in self._terminos.items():
            exps = dict(monomio)
            if exps.get(nombre, 0) < 1:
                raise ZetagenusError(f"{self} no es divisible por {nombre}")
            exps[nombre] -= 1
            res[tuple(sorted((n, e) for n, e in exps.items() if e))] = coef
        return SymbolPoly._crudo(res)

    def reducir_unidad_imaginaria(self, nombre: str = 'i') -> 'SymbolPoly':
        """Aplica nombre^2 = -1."""
        res: Dict[Monomio, Fraction] = {}
        for monomio, coef in self._terminos.items():
            exps = dict(monomio)
            e = exps.pop(nombre, 0)
            if e % 2:
                exps[nombre] = 1
            signo = -1 if (e // 2) % 2 else 1
            _sumar_en(res, {tuple(sorted(exps.items())): signo * coef})
        return SymbolPoly._crudo(res)

    def evaluar(self, valores: Mapping[str, object],
                conversor: Callable[[Fraction], object] = float):
        """Evaluación numérica; conversor lleva cada coeficiente al tipo numérico."""
        total = conversor(Fraction(0))
        for monomio, coef in self._terminos.items():
            termino = conversor(coef)
            for nombre, e in monomio:
                termino = termino * valores[nombre] ** e
            total = total + termino
        return total

    # ----- representación -----

    def terminos_ordenados(self) -> List[Tuple[Monomio, Fraction]]:
        return sorted(self._terminos.items(), key=lambda par: _clave_termino(par[0]))

    def texto(self) -> str:
        if not self._terminos:
            return '0'
        partes = []
        for monomio, coef in self.terminos_ordenados():
            simbolos = _texto_monomio(monomio)
            magnitud = abs(coef)
            if not simbolos:
                cuerpo = str(magnitud)
            elif magnitud == 1:
                cuerpo = simbolos
            else:
                cuerpo = f"{magnitud}*{simbolos}"
            if not partes:
                partes.append(('-' if coef < 0 else '') + cuerpo)
            else:
                partes.append((' - ' if coef < 0 else ' + ') + cuerpo)
        return ''.join(partes)

    def a_json(self) -> List[dict]:
        return [
            {
                'monomio': {n: e for n, e in sorted(m, key=lambda p: clave_simbolo(p[0]))},
                'num': str(c.numerator),
                'den': str(c.denominator),
            }
            for m, c in self.terminos_ordenados()
        ]

    def a_sympy(self):
        import sympy
        total = sympy.Integer(0)
        for monomio, coef in self._terminos.items():
            termino = sympy.Rational(coef.numerator, coef.denominator)
            for nombre, e in monomio:
                termino *= sympy.Symbol(nombre) ** e
            total += termino
        return total

    def __str__(self):
        return self.texto()

    def __repr__(self):
        return f"SymbolPoly({self.texto()})"


def _como_poly(valor) -> Optional[SymbolPoly]:
    if isinstance(valor, SymbolPoly):
        return valor
    if es_escalar(valor):
        return SymbolPoly.constante(valor)
    return None


def _sumar_en(destino: Dict[Monomio, Fraction], terminos: Mapping[Monomio, Fraction]):
    for monomio, coef in terminos.items():
        v = destino.get(monomio, 0) + coef
        if v:
            destino[monomio] = v
        else:
            destino.pop(monomio, None)


def como_poly(valor) -> SymbolPoly:
    """Convierte escalares exactos a SymbolPoly; deja los SymbolPoly igual."""
    poly = _como_poly(valor)
    if poly is None:
        raise TypeError(f"No se puede convertir a SymbolPoly: {valor!r}")
    return poly


def simbolo(nombre: str) -> SymbolPoly:
    return SymbolPoly.simbolo(nombre)


CERO = SymbolPoly._crudo({})
UNO = SymbolPoly._crudo({(): Fraction(1)})
