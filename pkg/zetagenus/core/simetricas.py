"""
Funciones simétricas en las bases elemental (E), completa (H) y de sumas
de potencias (P).

Las tres bases son multiplicativas: e_λ = e_λ1 e_λ2 ... Un elemento se
identifica con un polinomio en los símbolos e_k, h_k o p_k, y el cambio
de base se reduce a expresar cada generador en la base de destino con
las identidades generadoras

    sum e_k z^k = exp(sum (-1)^(k-1) p_k z^k / k)
    sum h_k z^k = exp(sum p_k z^k / k)
    E(z) H(-z) = 1
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

from .configuracion import PESO_MAXIMO_DEFECTO
from .errores import CapacidadExcedidaError, ZetagenusError
from .polinomios import CERO, UNO, SymbolPoly, a_racional, clave_simbolo, simbolo
from .series import Series, series_exp, series_log

logger = logging.getLogger(__name__)

BASES = ('E', 'H', 'P')
PREFIJOS = {'E': 'e', 'H': 'h', 'P': 'p'}


@dataclass(frozen=True)
class Particion:
    """
    Partición de un entero.

    Atributos:
        partes: Enteros positivos, se guardan en orden decreciente
    """
    partes: Tuple[int, ...] = ()

    def __post_init__(self):
        partes = tuple(sorted((int(p) for p in self.partes), reverse=True))
        if any(p <= 0 for p in partes):
            raise ZetagenusError(f"Partes no positivas en la partición: {self.partes}")
        object.__setattr__(self, 'partes', partes)

    @property
    def peso(self) -> int:
        return sum(self.partes)

    def __len__(self):
        return len(self.partes)

    def texto(self) -> str:
        return ','.join(str(p) for p in self.partes)

    @classmethod
    def desde_texto(cls, texto: str) -> 'Particion':
        texto = texto.strip()
        if not texto:
            return cls(())
        try:
            return cls(tuple(int(p) for p in texto.split(',')))
        except ValueError:
            raise ZetagenusError(f"Partición mal escrita: {texto!r}")


def _clave_particion(particion: Particion):
    return (particion.peso, particion.partes)


class SymmElement:
    """
    Función simétrica en una base fija.

    Atributos:
        base: 'E', 'H' o 'P'
        terminos: Particion -> Fraction, sin ceros
    """

    __slots__ = ('base', 'terminos')

    def __init__(self, base: str, terminos: Optional[Mapping[Particion, object]] = None):
        if base not in BASES:
            raise ZetagenusError(f"Base desconocida: {base}")
        self.base = base
        limpio: Dict[Particion, Fraction] = {}
        for particion, coef in (terminos or {}).items():
            if not isinstance(particion, Particion):
                particion = Particion(tuple(particion))
            valor = limpio.get(particion, Fraction(0)) + a_racional(coef)
            if valor:
                limpio[particion] = valor
            else:
                limpio.pop(particion, None)
        self.terminos = limpio

    @classmethod
    def basico(cls, base: str, partes: Sequence[int], coef=1) -> 'SymmElement':
        return cls(base, {Particion(tuple(partes)): coef})

    @classmethod
    def generador(cls, base: str, k: int) -> 'SymmElement':
        return cls.basico(base, (k,))

    def peso(self) -> int:
        return max((p.peso for p in self.terminos), default=0)

    def es_homogeneo(self) -> bool:
        return len({p.peso for p in self.terminos}) <= 1

    def __add__(self, otro: 'SymmElement') -> 'SymmElement':
        otro = newton_convert(otro, self.base)
        res = dict(self.terminos)
        for p, c in otro.terminos.items():
            res[p] = res.get(p, Fraction(0)) + c
        return SymmElement(self.base, res)

    def __neg__(self):
        return SymmElement(self.base, {p: -c for p, c in self.terminos.items()})

    def __sub__(self, otro: 'SymmElement') -> 'SymmElement':
        return self + (-otro)

    def escalar(self, factor) -> 'SymmElement':
        factor = a_racional(factor)
        return SymmElement(self.base, {p: c * factor for p, c in self.terminos.items()})

    def __mul__(self, otro):
        if not isinstance(otro, SymmElement):
            return self.escalar(otro)
        otro = newton_convert(otro, self.base)
        res: Dict[Particion, Fraction] = {}
        for p1, c1 in self.terminos.items():
            for p2, c2 in otro.terminos.items():
                p = Particion(p1.partes + p2.partes)
                res[p] = res.get(p, Fraction(0)) + c1 * c2
        return SymmElement(self.base, res)

    def __rmul__(self, otro):
        return self.escalar(otro)

    def __eq__(self, otro):
        if not isinstance(otro, SymmElement):
            return NotImplemented
        return self.base == otro.base and self.terminos == otro.terminos

    __hash__ = None

    def a_polinomio(self) -> SymbolPoly:
        """Polinomio en los símbolos de la base: e[2,1] -> e_2*e_1."""
        prefijo = PREFIJOS[self.base]
        terminos = {}
        for particion, coef in self.terminos.items():
            exps: Dict[str, int] = {}
            for parte in particion.partes:
                nombre = f"{prefijo}_{parte}"
                exps[nombre] = exps.get(nombre, 0) + 1
            terminos[tuple(sorted(exps.items()))] = coef
        return SymbolPoly(terminos)

    @classmethod
    def desde_polinomio(cls, poly: SymbolPoly, base: str) -> 'SymmElement':
        prefijo = PREFIJOS[base]
        terminos = {}
        for monomio, coef in poly.items():
            partes = []
            for nombre, e in monomio:
                pref, k = clave_simbolo(nombre)
                if pref != prefijo or k <= 0:
                    raise ZetagenusError(f"El símbolo {nombre} no pertenece a la base {base}")
                partes.extend([k] * e)
            terminos[Particion(tuple(partes))] = coef
        return cls(base, terminos)

    def texto(self) -> str:
        if not self.terminos:
            return '0'
        prefijo = PREFIJOS[self.base]
        partes = []
        for particion in sorted(self.terminos, key=_clave_particion):
            coef = self.terminos[particion]
            elemento = f"{prefijo}[{particion.texto()}]" if particion.partes else '1'
            magnitud = abs(coef)
            cuerpo = elemento if magnitud == 1 and particion.partes else (
                str(magnitud) if not particion.partes else f"{magnitud}*{elemento}")
            if not partes:
                partes.append(('-' if coef < 0 else '') + cuerpo)
            else:
                partes.append((' - ' if coef < 0 else ' + ') + cuerpo)
        return ''.join(partes)

    def a_json(self) -> dict:
        prefijo = PREFIJOS[self.base]
        return {
            'base': self.base,
            'terminos': [
                {'elemento': f"{prefijo}[{p.texto()}]", 'coef': f"{c.numerator}/{c.denominator}"}
                for p, c in sorted(self.terminos.items(), key=lambda par: _clave_particion(par[0]))
            ],
        }

    def __str__(self):
        return self.texto()

    def __repr__(self):
        return f"SymmElement({self.base}: {self.texto()})"


def leer_elemento(texto: str) -> SymmElement:
    """Lee 'e[2,1]', 'h[3]' o 'p[2]'."""
    texto = texto.strip()
    bases = {v: k for k, v in PREFIJOS.items()}
    if len(texto) < 3 or texto[0] not in bases or texto[1] != '[' or texto[-1] != ']':
        raise ZetagenusError(f"Elemento simétrico mal escrito: {texto!r}")
    return SymmElement.basico(bases[texto[0]], Particion.desde_texto(texto[2:-1]).partes)


# =============================================================================
# SERIES GENERADORAS Y CONVERSIONES
# =============================================================================

def _serie_basica(base: str, grado: int) -> Series:
    prefijo = PREFIJOS[base]
    return Series([UNO] + [simbolo(f"{prefijo}_{k}") for k in range(1, grado + 1)], 'z', grado)


def _suma_potencias(grado: int, alternada: bool) -> Series:
    coefs = [CERO]
    for k in range(1, grado + 1):
        signo = -1 if alternada and k % 2 == 0 else 1
        coefs.append(simbolo(f"p_{k}").escalar(Fraction(signo, k)))
    return Series(coefs, 'z', grado)


def generating_series(base: str, grado: int, peso_maximo: int = PESO_MAXIMO_DEFECTO) -> Series:
    """
    Serie generadora con los generadores de la base como coeficientes.

    'E' y 'H' dan 1 + sum e_k z^k y 1 + sum h_k z^k; 'P' da la misma serie
    E(z) escrita en sumas de potencias, exp(-sum p_k/k (-z)^k).
    """
    if grado > peso_maximo:
        raise CapacidadExcedidaError(f"Grado {grado} supera el máximo {peso_maximo}")
    if base == 'P':
        return series_exp(_suma_potencias(grado, alternada=True))
    if base not in BASES:
        raise ZetagenusError(f"Base desconocida: {base}")
    return _serie_basica(base, grado)


@lru_cache(maxsize=None)
def _generadores_en(origen: str, destino: str, grado: int) -> Tuple[SymbolPoly, ...]:
    """Imagen de los generadores 1..grado de origen, como polinomios en destino."""
    logger.debug("Tabla de generadores %s -> %s hasta grado %d", origen, destino, grado)
    z_menos = SymbolPoly.constante(-1)
    if destino == 'P':
        serie = series_exp(_suma_potencias(grado, alternada=(origen == 'E')))
        return serie.coeficientes
    if origen == 'P':
        log = series_log(_serie_basica(destino, grado))
        coefs = [CERO]
        for k in range(1, grado + 1):
            signo = -1 if destino == 'E' and k % 2 == 0 else 1
            coefs.append(log[k].escalar(signo * k))
        return tuple(coefs)
    # E <-> H: E(z) = 1 / H(-z)
    inversa = 1 / _serie_basica(destino, grado).escalar_variable(z_menos)
    return inversa.coeficientes


def newton_convert(x: SymmElement, destino: str,
                   peso_maximo: int = PESO_MAXIMO_DEFECTO) -> SymmElement:
    """La misma función simétrica expresada en la base destino."""
    if destino not in BASES:
        raise ZetagenusError(f"Base desconocida: {destino}")
    peso = x.peso()
    if peso > peso_maximo:
        raise CapacidadExcedidaError(f"Peso {peso} supera el máximo {peso_maximo}")
    if x.base == destino:
        return x
    if peso == 0:
        return SymmElement(destino, x.terminos)
    tabla = _generadores_en(x.base, destino, peso)
    prefijo = PREFIJOS[x.base]
    imagenes = {f"{prefijo}_{k}": tabla[k] for k in range(1, peso + 1)}
    return SymmElement.desde_polinomio(x.a_polinomio().sustituir(imagenes), destino)


def exp_infinity(grado: int, peso_maximo: int = PESO_MAXIMO_DEFECTO) -> Series:
    """z - h_1 z^2 + h_2 z^3 - ... hasta (-1)^grado h_grado z^(grado+1)."""
    if grado > peso_maximo:
        raise CapacidadExcedidaError(f"Grado {grado} supera el máximo {peso_maximo}")
    coefs = [CERO, UNO]
    for k in range(1, grado + 1):
        coefs.append(simbolo(f"h_{k}").escalar(-1 if k % 2 else 1))
    return Series(coefs, 'z', grado + 1)


def exp_infinity_desde_e(grado: int) -> Series:
    """z / E(z) con cada coeficiente pasado de la base E a la H."""
    cociente = (1 / generating_series('E', grado)).multiplicar_por_variable()
    return cociente.mapear(
        lambda c: newton_convert(SymmElement.desde_polinomio(c, 'E'), 'H').a_polinomio())


# =============================================================================
# ESPECIALIZACIONES
# =============================================================================

@dataclass(frozen=True)
class ReglaEspecializacion:
    """
    Regla para especializar funciones simétricas.

    Atributos:
        tipo: 'zeta', 'potencia' o 'finita'
        s: Exponente de la regla potencia (x_k -> k^-s)
        m: Número de variables de la regla finita
        valores: Valores x_1..x_m de la regla finita (por defecto 1/k)
    """
    tipo: str
    s: int = 1
    m: int = 0
    valores: Optional[Tuple[Fraction, ...]] = None

    def __post_init__(self):
        if self.tipo not in ('zeta', 'potencia', 'finita'):
            raise ZetagenusError(f"Regla desconocida: {self.tipo}")
        if self.tipo == 'potencia' and self.s < 1:
            raise ZetagenusError(f"La regla potencia necesita s >= 1: {self.s}")
        if self.tipo == 'finita':
            if self.m < 1:
                raise ZetagenusError(f"La regla finita necesita m >= 1: {self.m}")
            if self.valores is not None and len(self.valores) != self.m:
                raise ZetagenusError("La regla finita necesita exactamente m valores")

    @classmethod
    def zeta(cls):
        return cls('zeta')

    @classmethod
    def potencia(cls, s: int):
        return cls('potencia', s=s)

    @classmethod
    def finita(cls, m: int, valores: Optional[Sequence] = None):
        if valores is not None:
            valores = tuple(a_racional(v) for v in valores)
        return cls('finita', m=m, valores=valores)

    @classmethod
    def desde_texto(cls, texto: str) -> 'ReglaEspecializacion':
        """'zeta', 'power:2' o 'finite:3'."""
        nombre, _, argumento = texto.strip().partition(':')
        try:
            if nombre == 'zeta' and not argumento:
                return cls.zeta()
            if nombre == 'power':
                return cls.potencia(int(argumento))
            if nombre == 'finite':
                return cls.finita(int(argumento))
        except ValueError:
            pass
        raise ZetagenusError(f"Regla mal escrita: {texto!r}")

    def variables(self) -> Tuple[Fraction, ...]:
        if self.valores is not None:
            return self.valores
        return tuple(Fraction(1, k) for k in range(1, self.m + 1))

    def imagen_potencia(self, k: int):
        """Imagen de p_k."""
        if self.tipo == 'finita':
            return sum((x ** k for x in self.variables()), Fraction(0))
        s = 1 if self.tipo == 'zeta' else self.s
        if s * k == 1:
            return simbolo('gamma')
        return simbolo(f"zeta_{s * k}")


def specialize(x: SymmElement, regla: ReglaEspecializacion,
               peso_maximo: int = PESO_MAXIMO_DEFECTO) -> Union[SymbolPoly, Fraction]:
    """
    Especializa x pasando por la base P.

    zeta: p_1 -> gamma, p_k -> zeta_k; potencia(s): p_k -> zeta_(sk);
    finita(m): x_k = 1/k (o los valores dados), resultado racional exacto.
    """
    en_p = newton_convert(x, 'P', peso_maximo)
    imagenes = {f"p_{k}": regla.imagen_potencia(k) for k in range(1, en_p.peso() + 1)}
    resultado = en_p.a_polinomio().sustituir(imagenes)
    if regla.tipo == 'finita':
        return resultado.como_racional()
    return resultado


def en_subanillo_zeta_par(poly: SymbolPoly) -> bool:
    """Todos los símbolos son zeta_(2k)."""
    for nombre in poly.simbolos():
        prefijo, k = clave_simbolo(nombre)
        if prefijo != 'zeta' or k % 2:
            return False
    return True
