#%%
"""
Script de verificación de zetagenus.
Ejecuta las suites de identidades exactas (géneros, leyes de grupo,
funciones simétricas, valores zeta múltiples, trenzas, grt y cableado)
y muestra una tabla resumen.
"""

# ============================================================================
# IMPORTS
# ============================================================================
import logging
import time

import numpy as np
import pandas as pd

from zetagenus.core import (
    QSymmElement,
    ThomTwist,
    VerificacionError,
    check_fgl_axioms,
    cp_values,
    diffeo_compose,
    diffeo_invert,
    drinfeld_bracket,
    duplication_check,
    fgl_from_log,
    finite_truncation,
    grt_check,
    grt_solve,
    ihara_psi,
    ln_coproduct,
    log_series,
    lyndon_basis,
    make_genus,
    mzv_eval,
    pbn_component,
    stuffle_product,
    thom_twist_constraint,
    verificar_coproducto,
    witten_g_series,
)
from zetagenus.core.errores import DivergenciaError
from zetagenus.core.leyes import diffeo_aleatorio, simbolos_anulados
from zetagenus.core.lie import Alfabeto, witt_dimension
from zetagenus.core.operad import cabling_sweep, coherence_sweep


# ============================================================================
# CONFIGURACIÓN - MODIFICAR AQUÍ LOS VALORES
# ============================================================================
CONFIG = {
    'orden': 20,
    'semilla': 20240611,

    # Leyes de grupo
    'leyes': {
        'n_aleatorios': 20,
        'orden_aleatorio': 10,
        'orden_impar': 15,
    },

    # Géneros
    'generos': {
        'nombres': ['todd', 'ahat', 'L', 'gamma'],
        'n_max': 8,
        'witten_q': 8,
        'witten_x': 9,
    },

    # Valores zeta múltiples
    'mzv': {
        'tolerancia': 1e-6,
        'm_finito': 20,
    },

    # grt y trenzas
    'grt': {
        'grado_corchete': (3, 5),
        'witt_max': 12,
    },
    'cableado': {
        'max_relaciones': 6,
        'max_coherencia': 5,
    },

    # Salida
    'mostrar_resultados': True,
    'guardar_resumen': False,
    'archivo_resumen': 'resultados_suites.csv',
}

logging.basicConfig(level=logging.INFO, format='%(levelname)s %(name)s: %(message)s')
logger = logging.getLogger('verificar_suites')


# ============================================================================
# SUITES
# ============================================================================
def suite_duplicacion() -> str:
    reporte = duplication_check(CONFIG['orden'])
    if not reporte.pasa:
        raise VerificacionError(f"Duplicación: primer fallo en {reporte.a_dict()['primer_fallo']}")
    return f"reflexión, Bernoulli y forma partida exactas a orden {CONFIG['orden']}"


def suite_leyes() -> str:
    rng = np.random.default_rng(CONFIG['semilla'])
    logaritmos = [log_series(make_genus('gamma', CONFIG['leyes']['orden_aleatorio']))]
    logaritmos += [diffeo_aleatorio(CONFIG['leyes']['orden_aleatorio'], rng)
                   for _ in range(CONFIG['leyes']['n_aleatorios'])]
    for t in logaritmos:
        axiomas = check_fgl_axioms(fgl_from_log(t))
        if not axiomas.pasa:
            raise VerificacionError(f"Axiomas de ley de grupo: {axiomas.a_dict()}")
    return f"{len(logaritmos)} logaritmos sin residuos"


def suite_coproducto() -> str:
    delta = ln_coproduct(2)
    t2 = {(i, j): c for i, j, c in delta.tensores(2)}
    if t2 != {('1', 't_2'): 1, ('t_1', 't_1'): 2, ('t_2', '1'): 1}:
        raise VerificacionError(f"Delta(t_2) inesperado: {t2}")
    reporte = verificar_coproducto(6)
    if not reporte.pasa:
        raise VerificacionError(f"Coproducto: {reporte.fallos}")
    return "Delta(t_1), Delta(t_2); coasociatividad y counidad hasta t_6"


def suite_valores_cp() -> str:
    n_max = CONFIG['generos']['n_max']
    for nombre in CONFIG['generos']['nombres']:
        # cp_values contrasta extracción de coeficientes con reversión
        valores = cp_values(make_genus(nombre, n_max + 2), n_max)
        if nombre == 'todd' and any(valores[n] != 1 for n in range(n_max + 1)):
            raise VerificacionError("Todd no vale 1 en algún CP^n")
        if nombre == 'gamma' and valores[1].texto() != '-2*gamma':
            raise VerificacionError(f"Gamma(CP^1) = {valores[1].texto()}")
    return f"{len(CONFIG['generos']['nombres'])} géneros hasta CP^{n_max}"


def suite_witten() -> str:
    q, x = CONFIG['generos']['witten_q'], CONFIG['generos']['witten_x']
    witten_g_series(q, x)
    if make_genus('witten', x, q).Q.truncar_simbolo('q', 0) != make_genus('ahat', x).Q:
        raise VerificacionError("La rebanada q = 0 no es A-gorro")
    return f"g_impar = 0 hasta k = {x}; q = 0 da A-gorro"


def suite_thom() -> str:
    orden = CONFIG['leyes']['orden_impar']
    restricciones = thom_twist_constraint(ThomTwist.generico(orden))
    esperados = [f"sigma_{k}" for k in range(1, orden + 1, 2)]
    if simbolos_anulados(restricciones) != esperados or len(restricciones) != len(esperados):
        raise VerificacionError(f"Restricciones de Thom: {[r.texto() for r in restricciones]}")
    rng = np.random.default_rng(CONFIG['semilla'])
    for _ in range(CONFIG['leyes']['n_aleatorios']):
        a = diffeo_aleatorio(orden, rng, solo_impar=True)
        b = diffeo_aleatorio(orden, rng, solo_impar=True)
        if not (diffeo_compose(a, b).es_impar() and diffeo_invert(a).es_impar()):
            raise VerificacionError("El subgrupo impar no es cerrado")
    return f"solo sigma impar hasta {orden}; subgrupo impar cerrado"


def suite_mzv() -> str:
    tolerancia = CONFIG['mzv']['tolerancia']
    doble, simple = mzv_eval((2, 1), tolerancia), mzv_eval((3,), tolerancia)
    if abs(doble.valor - simple.valor) >= tolerancia:
        raise VerificacionError(f"zeta(2,1) - zeta(3) = {doble.valor - simple.valor}")

    M = QSymmElement.monomial
    producto = stuffle_product(M((2,)), M((3,)))
    if producto != M((2, 3)) + M((3, 2)) + M((5,)):
        raise VerificacionError(f"M(2)*M(3) = {producto.texto()}")
    m = CONFIG['mzv']['m_finito']
    if finite_truncation(producto, m) != finite_truncation(M((2,)), m) * finite_truncation(M((3,)), m):
        raise VerificacionError("El truncamiento finito no es multiplicativo")
    numerico = sum(mzv_eval(c, tolerancia).valor for c in ((2, 3), (3, 2), (5,)))
    factores = mzv_eval((2,), tolerancia).valor * mzv_eval((3,), tolerancia).valor
    if abs(numerico - factores) >= 10 * tolerancia:
        raise VerificacionError(f"Stuffle numérico: {numerico} vs {factores}")

    try:
        mzv_eval((1, 2))
    except DivergenciaError:
        pass
    else:
        raise VerificacionError("Se aceptó una composición divergente")
    return "zeta(2,1) = zeta(3); stuffle exacto y numérico"


def suite_dimensiones() -> str:
    ab = Alfabeto.dos_letras()
    for d in range(1, CONFIG['grt']['witt_max'] + 1):
        if len(lyndon_basis(ab, d)) != witt_dimension(2, d):
            raise VerificacionError(f"Lyndon en grado {d}")
    for n, esperadas in ((3, (3, 1, 2)), (4, (6, 4))):
        obtenidas = tuple(pbn_component(n, d).dimension for d in range(1, len(esperadas) + 1))
        if obtenidas != esperadas:
            raise VerificacionError(f"p_{n}: {obtenidas} != {esperadas}")
    return "Witt hasta grado 12; p_3 y p_4"


def suite_grt() -> str:
    if not grt_check(ihara_psi(3)).pasa:
        raise VerificacionError("psi_3 no está en grt")
    n1, n2 = CONFIG['grt']['grado_corchete']
    candidatos = []
    for n in (n1, n2):
        solucion = grt_solve(n)
        if solucion.vacia:
            raise VerificacionError(f"grt_solve({n}) vacío")
        candidatos.append(solucion.candidato())
    corchete = drinfeld_bracket(*candidatos)
    if not grt_check(corchete).pasa:
        raise VerificacionError(f"<psi_{n1}, psi_{n2}> no está en grt")
    return f"psi_3 en grt; <psi_{n1}, psi_{n2}> en grt (grado {n1 + n2})"


def suite_cableado() -> str:
    relaciones = cabling_sweep(CONFIG['cableado']['max_relaciones'],
                               mostrar_progreso=CONFIG['mostrar_resultados'])
    coherencia = coherence_sweep(CONFIG['cableado']['max_coherencia'],
                                 mostrar_progreso=CONFIG['mostrar_resultados'])
    if not relaciones['residual_zero'].all():
        raise VerificacionError(f"Relaciones no preservadas:\n{relaciones[~relaciones['residual_zero']]}")
    if not coherencia['equal'].all():
        raise VerificacionError(f"Coherencia falla:\n{coherencia[~coherencia['equal']]}")
    return f"{len(relaciones)} relaciones y {len(coherencia)} generadores coherentes"


SUITES = [
    ('duplicacion_gamma', suite_duplicacion),
    ('leyes_de_grupo', suite_leyes),
    ('landweber_novikov', suite_coproducto),
    ('valores_cp', suite_valores_cp),
    ('witten', suite_witten),
    ('thom', suite_thom),
    ('mzv', suite_mzv),
    ('dimensiones', suite_dimensiones),
    ('grt', suite_grt),
    ('cableado', suite_cableado),
]


# ============================================================================
# EJECUCIÓN
# ============================================================================
filas = []
for nombre, suite in SUITES:
    inicio = time.perf_counter()
    try:
        detalle, pasa = suite(), True
    except VerificacionError as e:
        logger.error("%s: %s", nombre, e)
        detalle, pasa = str(e), False
    segundos = time.perf_counter() - inicio
    logger.info("%s: %s (%.1f s)", nombre, 'OK' if pasa else 'FALLA', segundos)
    filas.append({'suite': nombre, 'pasa': pasa, 'segundos': round(segundos, 2), 'detalle': detalle})

resumen = pd.DataFrame(filas, columns=['suite', 'pasa', 'segundos', 'detalle'])

if CONFIG['mostrar_resultados']:
    print("\n" + "=" * 60)
    print("RESUMEN DE SUITES")
    print("=" * 60)
    print(resumen.to_string(index=False))
    print(f"\nSuites que pasan: {resumen['pasa'].sum()} de {len(resumen)}")

if CONFIG['guardar_resumen']:
    resumen.to_csv(CONFIG['archivo_resumen'], index=False)
    print(f"Resumen guardado en {CONFIG['archivo_resumen']}")

# %%
