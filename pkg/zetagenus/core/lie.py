"""
Álgebras de Lie libres sobre alfabetos graduados.

Las letras son índices enteros 0..k-1 de un Alfabeto; cada letra tiene un
grado. Un ElementoLie guarda coordenadas en la base de Lyndon (forma
normal); una ExpresionLie es una combinación de árboles de corchetes sin
simplificar. La forma normal se obtiene por dos rutas:

- 'reescritura': corchetes de palabras de Lyndon reescritos por Jacobi
- 'envolvente': expansión asociativa y extracción de la menor palabra
"""

import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Tuple, TypeVar, Union

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from .errores import VerificacionError, ZetagenusError
from .polinomios import a_racional, racional_a_texto

logger = logging.getLogger(__name__)

Palabra = Tuple[int, ...]
Arbol = Union[int, Tuple['Arbol', 'Arbol']]
T = TypeVar('T')

METODOS_FORMA_NORMAL = ('reescritura', 'envolvente', 'ambos')


# =============================================================================
# ALFABETOS Y PALABRAS
# =============================================================================

@dataclass(frozen=True)
class Alfabeto:
    """
    Alfabeto ordenado con grados.

    Atributos:
        nombres: Nombre de cada letra, en el orden del alfabeto
        grados: Grado de cada letra (por defecto 1)
    """
    nombres: Tuple[str, ...]
    grados: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if len(set(self.nombres)) != len(self.nombres):
            raise ZetagenusError(f"Letras repetidas en el alfabeto: {self.nombres}")
        if self.grados is None:
            object.__setattr__(self, 'grados', (1,) * len(self.nombres))
        if len(self.grados) != len(self.nombres) or any(g < 1 for g in self.grados):
            raise ZetagenusError("Cada letra necesita un grado positivo")

    @classmethod
    def dos_letras(cls, a: str = 'A', b: str = 'B') -> 'Alfabeto':
        return cls((a, b))

    @classmethod
    def graduado(cls, n: int, prefijo: str = 'Z') -> 'Alfabeto':
        """Z_1..Z_n con Z_k de grado k."""
        return cls(tuple(f"{prefijo}_{k}" for k in range(1, n + 1)), tuple(range(1, n + 1)))

    def __len__(self):
        return len(self.nombres)

    def indice(self, nombre: str) -> int:
        try:
            return self.nombres.index(nombre)
        except ValueError:
            raise ZetagenusError(f"Letra desconocida: {nombre!r}") from None

    def grado(self, palabra: Palabra) -> int:
        return sum(self.grados[i] for i in palabra)

    def texto_palabra(self, palabra: Palabra) -> str:
        separador = '' if all(len(n) == 1 for n in self.nombres) else ' '
        return separador.join(self.nombres[i] for i in palabra)


def es_lyndon(palabra: Palabra) -> bool:
    """Estrictamente menor que todas sus rotaciones propias."""
    if not palabra:
        return False
    return all(palabra < palabra[i:] + palabra[:i] for i in range(1, len(palabra)))


def _palabras_de_grado(alfabeto: Alfabeto, grado: int) -> Iterable[Palabra]:
    pila: List[Tuple[Palabra, int]] = [((), 0)]
    while pila:
        prefijo, peso = pila.pop()
        if peso == grado:
            yield prefijo
            continue
        for letra in range(len(alfabeto)):
            nuevo = peso + alfabeto.grados[letra]
            if nuevo <= grado:
                pila.append((prefijo + (letra,), nuevo))


def lyndon_basis(alfabeto: Alfabeto, grado: int) -> List[Palabra]:
    """Palabras de Lyndon de grado total dado, en orden lexicográfico."""
    if grado < 1:
        raise ZetagenusError(f"El grado debe ser >= 1: {grado}")
    return sorted(p for p in _palabras_de_grado(alfabeto, grado) if es_lyndon(p))


def witt_dimension(k: int, d: int) -> int:
    """(1/d) sum_{e|d} mu(e) k^(d/e)."""
    total = sum(int(mobius(e)) * k ** (d // e) for e in divisors(d))
    return total // d


@lru_cache(maxsize=None)
def factorizacion_estandar(palabra: Palabra) -> Tuple[Palabra, Palabra]:
    """w = uv con v el sufijo propio de Lyndon más largo."""
    if len(palabra) < 2:
        raise ZetagenusError(f"Una letra no se factoriza: {palabra}")
    for i in range(1, len(palabra)):
        if es_lyndon(palabra[i:]):
            return palabra[:i], palabra[i:]
    raise ZetagenusError(f"Sin sufijo de Lyndon: {palabra}")


@lru_cache(maxsize=None)
def arbol_estandar(palabra: Palabra) -> Arbol:
    if len(palabra) == 1:
        return palabra[0]
    u, v = factorizacion_estandar(palabra)
    return (arbol_estandar(u), arbol_estandar(v))


def texto_arbol(arbol: Arbol, alfabeto: Optional[Alfabeto] = None) -> str:
    if isinstance(arbol, int):
        return alfabeto.nombres[arbol] if alfabeto else str(arbol)
    return f"[{texto_arbol(arbol[0], alfabeto)},{texto_arbol(arbol[1], alfabeto)}]"


# =============================================================================
# POLINOMIOS NO CONMUTATIVOS
# =============================================================================

def _limpiar(terminos: Mapping) -> Dict:
    return {k: v for k, v in terminos.items() if v}


def _sumar_en(destino: Dict, clave, valor):
    nuevo = destino.get(clave, 0) + valor
    if nuevo:
        destino[clave] = nuevo
    else:
        destino.pop(clave, None)


class PolinomioNC:
    """
    Elemento del álgebra asociativa libre: palabra -> racional.
    """

    __slots__ = ('terminos',)

    def __init__(self, terminos: Optional[Mapping[Palabra, object]] = None):
        self.terminos: Dict[Palabra, Fraction] = _limpiar(
            {tuple(w): a_racional(c) for w, c in (terminos or {}).items()})

    @classmethod
    def palabra(cls, palabra: Palabra, coef=1) -> 'PolinomioNC':
        return cls({tuple(palabra): coef})

    def items(self):
        return self.terminos.items()

    def __bool__(self):
        return bool(self.terminos)

    def __add__(self, otro: 'PolinomioNC') -> 'PolinomioNC':
        resultado = dict(self.terminos)
        for w, c in otro.terminos.items():
            _sumar_en(resultado, w, c)
        return _nc_crudo(resultado)

    def __neg__(self):
        return _nc_crudo({w: -c for w, c in self.terminos.items()})

    def __sub__(self, otro: 'PolinomioNC') -> 'PolinomioNC':
        return self + (-otro)

    def escalar(self, factor) -> 'PolinomioNC':
        factor = a_racional(factor)
        if not factor:
            return PolinomioNC()
        return _nc_crudo({w: c * factor for w, c in self.terminos.items()})

    def __mul__(self, otro):
        if not isinstance(otro, PolinomioNC):
            return self.escalar(otro)
        resultado: Dict[Palabra, Fraction] = {}
        for w1, c1 in self.terminos.items():
            for w2, c2 in otro.terminos.items():
                _sumar_en(resultado, w1 + w2, c1 * c2)
        return _nc_crudo(resultado)

    def __rmul__(self, factor):
        return self.escalar(factor)

    def corchete(self, otro: 'PolinomioNC') -> 'PolinomioNC':
        return self * otro - otro * self

    def __eq__(self, otro):
        if not isinstance(otro, PolinomioNC):
            return NotImplemented
        return self.terminos == otro.terminos

    def texto(self, alfabeto: Optional[Alfabeto] = None) -> str:
        if not self.terminos:
            return '0'
        partes = []
        for w in sorted(self.terminos, key=lambda p: (len(p), p)):
            nombre = alfabeto.texto_palabra(w) if alfabeto else ''.join(map(str, w))
            partes.append(f"{racional_a_texto(self.terminos[w])}*{nombre}")
        return ' + '.join(partes).replace('+ -', '- ')

    def __repr__(self):
        return f"PolinomioNC({self.texto()})"


def _nc_crudo(terminos: Dict[Palabra, Fraction]) -> PolinomioNC:
    p = PolinomioNC.__new__(PolinomioNC)
    p.terminos = terminos
    return p


@lru_cache(maxsize=None)
def expansion_estandar(palabra: Palabra) -> PolinomioNC:
    """P(w): expansión asociativa del corchete estándar. Vale w + palabras mayores."""
    if len(palabra) == 1:
        return PolinomioNC.palabra(palabra)
    u, v = factorizacion_estandar(palabra)
    return expansion_estandar(u).corchete(expansion_estandar(v))


# =============================================================================
# ELEMENTOS DE LIE EN FORMA NORMAL
# =============================================================================

@lru_cache(maxsize=None)
def _corchete_palabras(u: Palabra, v: Palabra) -> Tuple[Tuple[Palabra, Fraction], ...]:
    """[P_u, P_v] en coordenadas de Lyndon."""
    if u == v:
        return ()
    if u > v:
        return tuple((w, -c) for w, c in _corchete_palabras(v, u))
    if len(u) == 1 or factorizacion_estandar(u)[1] >= v:
        return ((u + v, Fraction(1)),)
    u1, u2 = factorizacion_estandar(u)
    total: Dict[Palabra, Fraction] = {}
    # [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
    for w, c in _corchete_palabras(u2, v):
        for w2, c2 in _corchete_palabras(u1, w):
            _sumar_en(total, w2, c * c2)
    for w, c in _corchete_palabras(u1, v):
        for w2, c2 in _corchete_palabras(u2, w):
            _sumar_en(total, w2, -c * c2)
    return tuple(sorted(total.items()))


class ElementoLie:
    """
    Elemento del álgebra de Lie libre en la base de Lyndon.

    Atributos:
        coordenadas: palabra de Lyndon -> racional
    """

    __slots__ = ('coordenadas', '_hash')

    def __init__(self, coordenadas: Optional[Mapping[Palabra, object]] = None):
        coords = {}
        for w, c in (coordenadas or {}).items():
            w = tuple(w)
            if not es_lyndon(w):
                raise ZetagenusError(f"{w} no es una palabra de Lyndon")
            c = a_racional(c)
            if c:
                coords[w] = c
        self.coordenadas: Dict[Palabra, Fraction] = coords
        self._hash = None

    @classmethod
    def _crudo(cls, coordenadas: Dict[Palabra, Fraction]) -> 'ElementoLie':
        x = cls.__new__(cls)
        x.coordenadas = coordenadas
        x._hash = None
        return x

    @classmethod
    def generador(cls, letra: int, coef=1) -> 'ElementoLie':
        return cls({(letra,): coef})

    def items(self):
        return self.coordenadas.items()

    def __bool__(self):
        return bool(self.coordenadas)

    def __len__(self):
        return len(self.coordenadas)

    def __add__(self, otro: 'ElementoLie') -> 'ElementoLie':
        resultado = dict(self.coordenadas)
        for w, c in otro.coordenadas.items():
            _sumar_en(resultado, w, c)
        return ElementoLie._crudo(resultado)

    def __neg__(self):
        return ElementoLie._crudo({w: -c for w, c in self.coordenadas.items()})

    def __sub__(self, otro: 'ElementoLie') -> 'ElementoLie':
        return self + (-otro)

    def __mul__(self, factor) -> 'ElementoLie':
        factor = a_racional(factor)
        if not factor:
            return ElementoLie()
        return ElementoLie._crudo({w: c * factor for w, c in self.coordenadas.items()})

    __rmul__ = __mul__

    def corchete(self, otro: 'ElementoLie') -> 'ElementoLie':
        resultado: Dict[Palabra, Fraction] = {}
        for u, a in self.coordenadas.items():
            for v, b in otro.coordenadas.items():
                for w, c in _corchete_palabras(u, v):
                    _sumar_en(resultado, w, a * b * c)
        return ElementoLie._crudo(resultado)

    def __eq__(self, otro):
        if not isinstance(otro, ElementoLie):
            return NotImplemented
        return self.coordenadas == otro.coordenadas

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.coordenadas.items()))
        return self._hash

    def grados(self, alfabeto: Alfabeto) -> List[int]:
        return sorted({alfabeto.grado(w) for w in self.coordenadas})

    def es_homogeneo(self, alfabeto: Alfabeto) -> bool:
        return len(self.grados(alfabeto)) <= 1

    def componente(self, grado: int, alfabeto: Alfabeto) -> 'ElementoLie':
        return ElementoLie._crudo({w: c for w, c in self.coordenadas.items()
                                   if alfabeto.grado(w) == grado})

    def expandir(self) -> PolinomioNC:
        resultado = PolinomioNC()
        for w, c in self.coordenadas.items():
            resultado = resultado + expansion_estandar(w).escalar(c)
        return resultado

    def terminos_ordenados(self) -> List[Tuple[Palabra, Fraction]]:
        return sorted(self.coordenadas.items(), key=lambda t: (len(t[0]), t[0]))

    def texto(self, alfabeto: Optional[Alfabeto] = None) -> str:
        if not self.coordenadas:
            return '0'
        partes = []
        for w, c in self.terminos_ordenados():
            arbol = texto_arbol(arbol_estandar(w), alfabeto)
            if c == 1:
                partes.append(arbol)
            elif c == -1:
                partes.append(f"-{arbol}")
            else:
                partes.append(f"{racional_a_texto(c)}*{arbol}")
        return ' + '.join(partes).replace('+ -', '- ')

    def a_json(self, alfabeto: Optional[Alfabeto] = None) -> List[dict]:
        return [{'word': alfabeto.texto_palabra(w) if alfabeto else list(w),
                 'coeff': racional_a_texto(c)} for w, c in self.terminos_ordenados()]

    def __repr__(self):
        return f"ElementoLie({self.texto()})"


def extraer_lyndon(p: PolinomioNC) -> ElementoLie:
    """
    Coordenadas de Lyndon de un polinomio de Lie: la menor palabra restante
    es de Lyndon; se resta c * P(w) y se repite.
    """
    restante = dict(p.terminos)
    monticulo = list(restante)
    heapq.heapify(monticulo)
    coordenadas: Dict[Palabra, Fraction] = {}
    while monticulo:
        w = heapq.heappop(monticulo)
        c = restante.get(w)
        if not c:
            continue
        if not es_lyndon(w):
            raise ZetagenusError(f"No es un polinomio de Lie: la palabra mínima {w} no es de Lyndon")
        coordenadas[w] = c
        for w2, c2 in expansion_estandar(w).items():
            if w2 not in restante:
                heapq.heappush(monticulo, w2)
            _sumar_en(restante, w2, -c * c2)
    return ElementoLie._crudo(coordenadas)


# =============================================================================
# EXPRESIONES DE CORCHETES
# =============================================================================

class ExpresionLie:
    """
    Combinación lineal de árboles de corchetes, sin simplificar.
    """

    __slots__ = ('terminos',)

    def __init__(self, terminos: Optional[Mapping[Arbol, object]] = None):
        self.terminos: Dict[Arbol, Fraction] = _limpiar(
            {a: a_racional(c) for a, c in (terminos or {}).items()})

    @classmethod
    def generador(cls, letra: int) -> 'ExpresionLie':
        return cls({letra: 1})

    @classmethod
    def arbol(cls, arbol: Arbol, coef=1) -> 'ExpresionLie':
        return cls({arbol: coef})

    def __add__(self, otra: 'ExpresionLie') -> 'ExpresionLie':
        resultado = dict(self.terminos)
        for a, c in otra.terminos.items():
            _sumar_en(resultado, a, c)
        return ExpresionLie(resultado)

    def __neg__(self):
        return ExpresionLie({a: -c for a, c in self.terminos.items()})

    def __sub__(self, otra: 'ExpresionLie') -> 'ExpresionLie':
        return self + (-otra)

    def __mul__(self, factor) -> 'ExpresionLie':
        factor = a_racional(factor)
        return ExpresionLie({a: c * factor for a, c in self.terminos.items()})

    __rmul__ = __mul__

    def corchete(self, otra: 'ExpresionLie') -> 'ExpresionLie':
        resultado: Dict[Arbol, Fraction] = {}
        for a, c in self.terminos.items():
            for b, d in otra.terminos.items():
                _sumar_en(resultado, (a, b), c * d)
        return ExpresionLie(resultado)

    def expandir(self) -> PolinomioNC:
        """Expansión asociativa directa, [a,b] = ab - ba."""
        resultado = PolinomioNC()
        for a, c in self.terminos.items():
            resultado = resultado + _expandir_arbol(a).escalar(c)
        return resultado

    def texto(self, alfabeto: Optional[Alfabeto] = None) -> str:
        if not self.terminos:
            return '0'
        partes = [f"{racional_a_texto(c)}*{texto_arbol(a, alfabeto)}"
                  for a, c in sorted(self.terminos.items(), key=lambda t: texto_arbol(t[0]))]
        return ' + '.join(partes).replace('+ -', '- ')

    def __repr__(self):
        return f"ExpresionLie({self.texto()})"


@lru_cache(maxsize=None)
def _expandir_arbol(arbol: Arbol) -> PolinomioNC:
    if isinstance(arbol, int):
        return PolinomioNC.palabra((arbol,))
    return _expandir_arbol(arbol[0]).corchete(_expandir_arbol(arbol[1]))


@lru_cache(maxsize=None)
def _normalizar_arbol(arbol: Arbol) -> ElementoLie:
    if isinstance(arbol, int):
        return ElementoLie.generador(arbol)
    return _normalizar_arbol(arbol[0]).corchete(_normalizar_arbol(arbol[1]))


def lie_normal_form(expresion: Union[ExpresionLie, Arbol], metodo: str = 'reescritura') -> ElementoLie:
    """
    Coordenadas de Lyndon de una expresión de corchetes.

    Args:
        expresion: ExpresionLie o un único árbol (letra o par)
        metodo: 'reescritura', 'envolvente' o 'ambos' (exige que coincidan)
    """
    if metodo not in METODOS_FORMA_NORMAL:
        raise ZetagenusError(f"Método de forma normal desconocido: {metodo}")
    if not isinstance(expresion, ExpresionLie):
        expresion = ExpresionLie.arbol(expresion)
    if metodo == 'reescritura':
        resultado = ElementoLie()
        for arbol, c in expresion.terminos.items():
            resultado = resultado + _normalizar_arbol(arbol) * c
        return resultado
    if metodo == 'envolvente':
        return extraer_lyndon(expresion.expandir())
    reescrita = lie_normal_form(expresion, 'reescritura')
    if reescrita != lie_normal_form(expresion, 'envolvente'):
        raise VerificacionError("Las dos rutas de forma normal no coinciden")
    return reescrita


def leer_expresion(texto: str, alfabeto: Alfabeto) -> ExpresionLie:
    """Lee un árbol como '[A,[B,[A,B]]]'."""
    fichas = texto.replace(' ', '')
    posicion = 0

    def leer() -> Arbol:
        nonlocal posicion
        if posicion < len(fichas) and fichas[posicion] == '[':
            posicion += 1
            izquierda = leer()
            esperar(',')
            derecha = leer()
            esperar(']')
            return (izquierda, derecha)
        fin = posicion
        while fin < len(fichas) and fichas[fin] not in '[],':
            fin += 1
        if fin == posicion:
            raise ZetagenusError(f"Expresión mal formada: {texto!r}")
        nombre = fichas[posicion:fin]
        posicion = fin
        return alfabeto.indice(nombre)

    def esperar(caracter: str):
        nonlocal posicion
        if posicion >= len(fichas) or fichas[posicion] != caracter:
            raise ZetagenusError(f"Se esperaba {caracter!r} en {texto!r}")
        posicion += 1

    arbol = leer()
    if posicion != len(fichas):
        raise ZetagenusError(f"Sobran caracteres en {texto!r}")
    return ExpresionLie.arbol(arbol)


# =============================================================================
# SUSTITUCIÓN
# =============================================================================

def evaluar_lie(x: ElementoLie, imagenes: Mapping[int, T], corchete: Callable[[T, T], T], cero: T) -> T:
    """
    Homomorfismo de Lie determinado por las imágenes de las letras.

    El destino necesita +, multiplicación por racionales y el corchete dado.
    """
    memoria: Dict[Palabra, T] = {}

    def valor(w: Palabra) -> T:
        if w not in memoria:
            if len(w) == 1:
                if w[0] not in imagenes:
                    raise ZetagenusError(f"Falta la imagen de la letra {w[0]}")
                memoria[w] = imagenes[w[0]]
            else:
                u, v = factorizacion_estandar(w)
                memoria[w] = corchete(valor(u), valor(v))
        return memoria[w]

    resultado = cero
    for w, c in x.terminos_ordenados():
        resultado = resultado + valor(w) * c
    return resultado


def sustituir(x: ElementoLie, imagenes: Mapping[int, ElementoLie]) -> ElementoLie:
    return evaluar_lie(x, imagenes, ElementoLie.corchete, ElementoLie())
