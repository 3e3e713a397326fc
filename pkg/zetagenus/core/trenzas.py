"""
Álgebras de Lie de trenzas puras p_n.

Generadores x_ij (1 <= i < j <= n) con relaciones de grado 2:

    [x_ik, x_st] = 0                si {i,k} y {s,t} son disjuntos
    [x_ik, x_is + x_ks] = 0         para i, k, s distintos

Dos modelos:
- PBnComponent: cociente exacto del álgebra libre por el ideal, grado a grado
- ElementoPn: forma normal por la descomposición p_n = F_(n-1) ⋊ p_(n-1),
  donde la componente m es libre en x_1m, ..., x_(m-1)m y x_jk actúa por
  la derivación x_jm -> [x_jm, x_km], x_km -> [x_km, x_jm]
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Tuple

from .configuracion import CAPACIDAD_DEFECTO
from .errores import CapacidadExcedidaError, ZetagenusError
from .lie import Alfabeto, ElementoLie, Palabra, evaluar_lie, lyndon_basis, witt_dimension
from .lineal import FormaEscalonada
from .polinomios import racional_a_texto

logger = logging.getLogger(__name__)


# =============================================================================
# GENERADORES Y RELACIONES
# =============================================================================

def pares_pn(n: int) -> List[Tuple[int, int]]:
    """(i, j) con i < j, en orden lexicográfico."""
    if n < 2:
        raise ZetagenusError(f"p_n necesita n >= 2: {n}")
    return list(combinations(range(1, n + 1), 2))


def nombre_generador(i: int, j: int, n: int) -> str:
    return f"x_{i}{j}" if n <= 9 else f"x_{i}.{j}"


@lru_cache(maxsize=None)
def alfabeto_pn(n: int) -> Alfabeto:
    return Alfabeto(tuple(nombre_generador(i, j, n) for i, j in pares_pn(n)))


@lru_cache(maxsize=None)
def _indices_pn(n: int) -> Dict[Tuple[int, int], int]:
    return {par: k for k, par in enumerate(pares_pn(n))}


def indice_generador(n: int, i: int, j: int) -> int:
    if i == j:
        raise ZetagenusError(f"x_{i}{j} no existe")
    par = (min(i, j), max(i, j))
    if par[0] < 1 or par[1] > n:
        raise ZetagenusError(f"x_{i}{j} no es un generador de p_{n}")
    return _indices_pn(n)[par]


def generador_pn(n: int, i: int, j: int) -> ElementoLie:
    return ElementoLie.generador(indice_generador(n, i, j))


@dataclass(frozen=True)
class Relacion:
    """
    Relación definitoria de p_n.

    Atributos:
        tipo: 'disjuntos' o 'triple'
        etiqueta: Texto legible de la relación
        elemento: Elemento de grado 2 del álgebra libre
    """
    tipo: str
    etiqueta: str
    elemento: ElementoLie


@lru_cache(maxsize=None)
def relaciones_pn(n: int) -> Tuple[Relacion, ...]:
    relaciones = []
    pares = pares_pn(n)
    for a, b in combinations(pares, 2):
        if not set(a) & set(b):
            x = generador_pn(n, *a).corchete(generador_pn(n, *b))
            relaciones.append(Relacion(
                'disjuntos', f"[{nombre_generador(*a, n)},{nombre_generador(*b, n)}]", x))
    for terna in combinations(range(1, n + 1), 3):
        for i, k, s in ((terna[0], terna[1], terna[2]),
                        (terna[0], terna[2], terna[1]),
                        (terna[1], terna[2], terna[0])):
            ik = generador_pn(n, i, k)
            x = ik.corchete(generador_pn(n, i, s) + generador_pn(n, k, s))
            etiqueta = (f"[{nombre_generador(*sorted((i, k)), n)},"
                        f"{nombre_generador(*sorted((i, s)), n)}+{nombre_generador(*sorted((k, s)), n)}]")
            relaciones.append(Relacion('triple', etiqueta, x))
    return tuple(relaciones)


# =============================================================================
# COCIENTE EXACTO
# =============================================================================

def _dimension_libre(n: int, grado: int) -> int:
    return witt_dimension(n * (n - 1) // 2, grado)


@lru_cache(maxsize=None)
def _ideal_pn(n: int, grado: int) -> Tuple[FormaEscalonada, Tuple[ElementoLie, ...], Dict[Palabra, int]]:
    """
    I_2 = span(relaciones), I_d = span{[g, v] : g generador, v en I_(d-1)}.

    Devuelve la forma escalonada sobre la base de Lyndon, los elementos que
    la generan y el índice de cada palabra.
    """
    alfabeto = alfabeto_pn(n)
    palabras = lyndon_basis(alfabeto, grado)
    indice = {w: k for k, w in enumerate(palabras)}
    forma = FormaEscalonada()
    generadores: List[ElementoLie] = []
    if grado == 2:
        candidatos = [r.elemento for r in relaciones_pn(n)]
    elif grado > 2:
        _, anteriores, _ = _ideal_pn(n, grado - 1)
        candidatos = [ElementoLie.generador(g).corchete(v)
                      for v in anteriores for g in range(len(alfabeto))]
    else:
        candidatos = []
    for x in candidatos:
        if forma.agregar({indice[w]: c for w, c in x.items()}):
            generadores.append(x)
    logger.debug("Ideal de p_%d en grado %d: dimensión %d", n, grado, forma.rango)
    return forma, tuple(generadores), indice


@dataclass
class PBnComponent:
    """
    Componente de grado d de p_n.

    Atributos:
        n: Número de hebras
        grado: Grado d
        palabras: Base de Lyndon del álgebra libre en grado d
        base: Palabras que sobreviven en el cociente (columnas no pivote)
        forma: Datos de reescritura (forma escalonada del ideal)
    """
    n: int
    grado: int
    palabras: List[Palabra]
    base: List[Palabra]
    forma: FormaEscalonada = field(repr=False)
    indice: Dict[Palabra, int] = field(repr=False, default_factory=dict)

    @property
    def dimension(self) -> int:
        return len(self.base)

    @property
    def alfabeto(self) -> Alfabeto:
        return alfabeto_pn(self.n)

    def coordenadas(self, x: ElementoLie) -> Dict[int, Fraction]:
        coords = {}
        for w, c in x.items():
            if w not in self.indice:
                raise ZetagenusError(f"{w} no es de grado {self.grado} en p_{self.n}")
            coords[self.indice[w]] = c
        return coords

    def reducir(self, x: ElementoLie) -> ElementoLie:
        """Forma normal en el cociente, sobre la base superviviente."""
        resto = self.forma.reducir_exacto(self.coordenadas(x))
        return ElementoLie({self.palabras[k]: c for k, c in resto.items()})

    def es_cero(self, x: ElementoLie) -> bool:
        return self.forma.contiene(self.coordenadas(x))

    def base_texto(self) -> List[str]:
        return [ElementoLie({w: 1}).texto(self.alfabeto) for w in self.base]


def pbn_component(n: int, grado: int, capacidad: Optional[int] = CAPACIDAD_DEFECTO) -> PBnComponent:
    """
    Base de la componente de grado d de p_n por eliminación exacta.

    Raises:
        CapacidadExcedidaError: si la dimensión libre supera la capacidad
    """
    if grado < 1:
        raise ZetagenusError(f"El grado debe ser >= 1: {grado}")
    libre = _dimension_libre(n, grado)
    if capacidad is not None and libre > capacidad:
        raise CapacidadExcedidaError(
            f"p_{n} en grado {grado}: dimensión libre {libre} supera la capacidad {capacidad}"
        )
    forma, _, indice = _ideal_pn(n, grado)
    palabras = sorted(indice, key=indice.get)
    pivotes = set(forma.filas)
    base = [w for k, w in enumerate(palabras) if k not in pivotes]
    return PBnComponent(n, grado, palabras, base, forma, indice)


def dimension_casi_directa(n: int, grado: int) -> int:
    """sum_{m=2..n} dim del libre en m-1 letras: p_n = F_(n-1) ⋊ ... ⋊ F_1."""
    return sum(witt_dimension(m - 1, grado) for m in range(2, n + 1))


def reducir_en_pn(x: ElementoLie, n: int, capacidad: Optional[int] = CAPACIDAD_DEFECTO) -> ElementoLie:
    """Forma normal de un elemento no necesariamente homogéneo."""
    alfabeto = alfabeto_pn(n)
    resultado = ElementoLie()
    for grado in x.grados(alfabeto):
        resultado = resultado + pbn_component(n, grado, capacidad).reducir(x.componente(grado, alfabeto))
    return resultado


# =============================================================================
# MODELO CASI DIRECTO
# =============================================================================

Componente = Dict[Palabra, object]


def _nc_sumar_en(destino: Dict, p: Mapping, factor=1):
    for w, c in p.items():
        nuevo = destino.get(w, 0) + factor * c
        if nuevo:
            destino[w] = nuevo
        else:
            destino.pop(w, None)


def _nc_conmutador(a: Componente, b: Componente) -> Componente:
    resultado: Dict[Palabra, object] = {}
    for u, c in a.items():
        for v, d in b.items():
            _nc_sumar_en(resultado, {u + v: c * d})
            _nc_sumar_en(resultado, {v + u: -c * d})
    return resultado


def _derivar(p: Componente, j: int, k: int) -> Componente:
    """Derivación x_jk sobre la componente m: j -> jk - kj, k -> kj - jk."""
    resultado: Dict[Palabra, object] = {}
    for w, c in p.items():
        for pos, letra in enumerate(w):
            if letra == j:
                a, b = j, k
            elif letra == k:
                a, b = k, j
            else:
                continue
            prefijo, sufijo = w[:pos], w[pos + 1:]
            _nc_sumar_en(resultado, {prefijo + (a, b) + sufijo: c, prefijo + (b, a) + sufijo: -c})
    return resultado


def _actuar(u: Componente, k: int, v: Componente) -> Componente:
    """rho(u)(v) con u en la componente k: cada palabra w1...wr actúa como D_w1 ∘ ... ∘ D_wr."""
    if not u or not v:
        return {}
    memoria: Dict[Palabra, Componente] = {(): v}

    def aplicar(sufijo: Palabra) -> Componente:
        if sufijo not in memoria:
            memoria[sufijo] = _derivar(aplicar(sufijo[1:]), sufijo[0], k)
        return memoria[sufijo]

    resultado: Dict[Palabra, object] = {}
    for w in sorted(u, key=lambda p: p[::-1]):
        _nc_sumar_en(resultado, aplicar(w), u[w])
    return resultado


class ElementoPn:
    """
    Elemento de p_n en el modelo casi directo.

    Atributos:
        n: Número de hebras
        componentes: m -> polinomio no conmutativo en las letras 1..m-1
            (la letra i representa x_im)
    """

    __slots__ = ('n', 'componentes')

    def __init__(self, n: int, componentes: Optional[Mapping[int, Componente]] = None):
        self.n = n
        self.componentes: Dict[int, Componente] = {
            m: dict(p) for m, p in (componentes or {}).items() if p}

    @classmethod
    def generador(cls, n: int, i: int, j: int, coef=1) -> 'ElementoPn':
        i, j = min(i, j), max(i, j)
        if not 1 <= i < j <= n:
            raise ZetagenusError(f"x_{i}{j} no es un generador de p_{n}")
        return cls(n, {j: {(i,): coef}})

    def __bool__(self):
        return bool(self.componentes)

    def __add__(self, otro: 'ElementoPn') -> 'ElementoPn':
        resultado = {m: dict(p) for m, p in self.componentes.items()}
        for m, p in otro.componentes.items():
            destino = resultado.setdefault(m, {})
            _nc_sumar_en(destino, p)
        return ElementoPn(self.n, resultado)

    def __neg__(self):
        return self * -1

    def __sub__(self, otro: 'ElementoPn') -> 'ElementoPn':
        return self + (-otro)

    def __mul__(self, factor) -> 'ElementoPn':
        if not factor:
            return ElementoPn(self.n)
        return ElementoPn(self.n, {m: {w: c * factor for w, c in p.items()}
                                   for m, p in self.componentes.items()})

    __rmul__ = __mul__

    def corchete(self, otro: 'ElementoPn') -> 'ElementoPn':
        """[u,v]_m = [u_m, v_m] + sum_{k<m} (rho(u_k)(v_m) - rho(v_k)(u_m))."""
        resultado: Dict[int, Componente] = {}
        for m in range(2, self.n + 1):
            um = self.componentes.get(m, {})
            vm = otro.componentes.get(m, {})
            total = _nc_conmutador(um, vm)
            for k in range(2, m):
                uk = self.componentes.get(k)
                vk = otro.componentes.get(k)
                if uk and vm:
                    _nc_sumar_en(total, _actuar(uk, k, vm))
                if vk and um:
                    _nc_sumar_en(total, _actuar(vk, k, um), -1)
            if total:
                resultado[m] = total
        return ElementoPn(self.n, resultado)

    def vector(self) -> Dict[Tuple[int, Palabra], object]:
        return {(m, w): c for m, p in self.componentes.items() for w, c in p.items()}

    def __eq__(self, otro):
        if not isinstance(otro, ElementoPn):
            return NotImplemented
        return self.n == otro.n and self.componentes == otro.componentes

    def texto(self) -> str:
        if not self.componentes:
            return '0'
        partes = []
        for m in sorted(self.componentes):
            for w in sorted(self.componentes[m]):
                letras = ' '.join(nombre_generador(i, m, self.n) for i in w)
                partes.append(f"{racional_a_texto(self.componentes[m][w])}*{letras}")
        return ' + '.join(partes).replace('+ -', '- ')

    def __repr__(self):
        return f"ElementoPn({self.texto()})"


def pn_desde_lie(x: ElementoLie, n: int) -> ElementoPn:
    """Imagen en el modelo casi directo de un elemento libre en los x_ij."""
    imagenes = {letra: ElementoPn.generador(n, *par) for letra, par in enumerate(pares_pn(n))}
    return evaluar_lie(x, imagenes, ElementoPn.corchete, ElementoPn(n))
