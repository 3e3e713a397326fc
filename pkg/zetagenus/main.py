#!/usr/bin/env python3
"""
zetagenus - Main

Punto de entrada de la línea de comandos.
Ejecutar: python -m zetagenus.main --help

Códigos de salida:
    0: éxito
    1: una verificación encontró una identidad que falla
    2: entrada no válida o error interno
"""
import argparse
import logging
import sys
from typing import List, Optional

import pandas as pd

from .core.configuracion import ConfiguracionComando, FORMATOS
from .core.cuasisimetricas import (
    Composicion,
    QSymmElement,
    finite_truncation,
    mzv_eval,
    stuffle_product,
)
from .core.errores import VerificacionError, ZetagenusError
from .core.generos import (
    GENEROS,
    cp_values,
    duplication_check,
    log_series,
    make_genus,
    reescalar_2pi_i,
    witten_g_series,
)
from .core.grt import AB, GrtCandidate, drinfeld_bracket, grt_check, grt_solve, ihara_psi
from .core.io import Reporte, emit, leer_enteros
from .core.leyes import (
    ThomTwist,
    check_fgl_axioms,
    fgl_from_log,
    generadores_descenso,
    gm_invariant_bidegrees,
    hbar_series,
    ln_coproduct,
    simbolos_anulados,
    thom_twist_constraint,
    verificar_coproducto,
)
from .core.lie import lie_normal_form, leer_expresion
from .core.operad import OrderedPartition, cabling_map, cabling_sweep, coherence_sweep
from .core.simetricas import BASES, ReglaEspecializacion, leer_elemento, newton_convert, specialize
from .core.trenzas import alfabeto_pn, dimension_casi_directa, pbn_component

logger = logging.getLogger('zetagenus')


# =============================================================================
# GENUS
# =============================================================================

def genus_cp(args, config: ConfiguracionComando) -> Reporte:
    """Valores phi(CP^n) de un género."""
    orden = max(config.orden, args.max_n + 1)
    genero = make_genus(args.name, orden, args.q_order)
    if args.rescale:
        genero = reescalar_2pi_i(genero)
    valores = cp_values(genero, args.max_n)
    datos = {'genus': genero.nombre, 'max_n': args.max_n}
    if args.product:
        dimensiones = leer_enteros(args.product)
        datos['product'] = '(' + ','.join(map(str, dimensiones)) + ')'
        datos['product_value'] = valores.valor_producto(dimensiones).texto()
    return Reporte(datos, valores.a_tabla(bernoulli=args.bernoulli))


def genus_check_duplication(args, config: ConfiguracionComando) -> Reporte:
    """Duplicación de Gamma, reescritura de Bernoulli y forma partida."""
    reporte = duplication_check(config.orden)
    return Reporte(reporte.a_dict(), pasa=reporte.pasa)


def genus_witten(args, config: ConfiguracionComando) -> Reporte:
    """g_k del género de Witten; falla si algún g_k impar no se anula."""
    try:
        witten = witten_g_series(args.q_order, args.x_order)
    except VerificacionError as e:
        return Reporte({'q_order': args.q_order, 'x_order': args.x_order, 'error': str(e)},
                       pasa=False)
    return Reporte({'q_order': args.q_order, 'x_order': args.x_order},
                   witten.a_tabla(), pasa=True)


# =============================================================================
# FGL
# =============================================================================

def fgl_law(args, config: ConfiguracionComando) -> Reporte:
    """Ley F = t^-1(t(X) + t(Y)) con t el logaritmo del género y sus axiomas."""
    if args.name == 'witten':
        raise ZetagenusError("El logaritmo de Witten no tiene coeficiente lineal racional")
    orden = args.order or 8
    genero = make_genus(args.name, orden)
    ley = fgl_from_log(log_series(genero, verificar=True))
    axiomas = check_fgl_axioms(ley)
    return Reporte({'genus': genero.nombre, 'order': orden, **axiomas.a_dict()},
                   ley.a_tabla(), pasa=axiomas.pasa)


def fgl_coproduct(args, config: ConfiguracionComando) -> Reporte:
    """Delta(t_k) y comprobación de coasociatividad y counidad."""
    delta = ln_coproduct(args.degree)
    verificacion = verificar_coproducto(args.degree)
    return Reporte({'max_degree': args.degree, 'coproduct': delta.a_json(),
                    **verificacion.a_dict()}, pasa=verificacion.pasa)


def fgl_thom_constraint(args, config: ConfiguracionComando) -> Reporte:
    """Restricciones de la torsión de Thom genérica: solo sigma_impar = 0."""
    restricciones = thom_twist_constraint(ThomTwist.generico(args.degree))
    anulados = simbolos_anulados(restricciones)
    esperados = [f"sigma_{k}" for k in range(1, args.degree + 1, 2)]
    return Reporte({'degree': args.degree,
                    'constraints': [f"{r.texto()} = 0" for r in restricciones],
                    'vanishing': anulados},
                   pasa=anulados == esperados and len(restricciones) == len(esperados))


def fgl_hbar(args, config: ConfiguracionComando) -> Reporte:
    """hbar = sum CP_(k-1) e^k / k, comparada con el logaritmo del género."""
    genero = make_genus(args.name, args.degree + 1, args.q_order)
    hbar = hbar_series(cp_values(genero, args.degree - 1), args.degree)
    logaritmo = log_series(genero, verificar=True).truncar(args.degree).con_variable('e')
    filas = [{'k': k, 'coef': hbar[k].texto()} for k in range(1, args.degree + 1)]
    return Reporte({'genus': genero.nombre, 'degree': args.degree,
                    'matches_log': hbar == logaritmo},
                   pd.DataFrame(filas, columns=['k', 'coef']), pasa=hbar == logaritmo)


def fgl_descent(args, config: ConfiguracionComando) -> Reporte:
    """Monomios invariantes e_(2k+1) b^m y sus bigrados."""
    invariantes = gm_invariant_bidegrees(generadores_descenso(args.k_max), args.k_max)
    filas = [{'monomial': i.monomio, 's': i.bigrado[0], 't': i.bigrado[1]} for i in invariantes]
    return Reporte({'k_max': args.k_max}, pd.DataFrame(filas, columns=['monomial', 's', 't']))


# =============================================================================
# SYMM / QSYM
# =============================================================================

def symm_convert(args, config: ConfiguracionComando) -> Reporte:
    x = leer_elemento(args.element)
    y = newton_convert(x, args.to, config.peso_maximo)
    return Reporte({'input': x.texto(), 'basis': args.to, 'output': y.texto()})


def symm_specialize(args, config: ConfiguracionComando) -> Reporte:
    x = leer_elemento(args.element)
    valor = specialize(x, ReglaEspecializacion.desde_texto(args.rule), config.peso_maximo)
    return Reporte({'input': x.texto(), 'rule': args.rule, 'value': valor})


def qsym_stuffle(args, config: ConfiguracionComando) -> Reporte:
    """Producto cuasi-barajado, comprobado por truncamiento finito exacto."""
    a = QSymmElement.monomial(Composicion.desde_texto(args.left).partes)
    b = QSymmElement.monomial(Composicion.desde_texto(args.right).partes)
    producto = stuffle_product(a, b)
    m = args.m
    coincide = finite_truncation(producto, m) == finite_truncation(a, m) * finite_truncation(b, m)
    return Reporte({'product': producto.texto(), 'terms': producto.a_json(),
                    'finite_check_m': m, 'finite_check': coincide}, pasa=coincide)


def qsym_mzv(args, config: ConfiguracionComando) -> Reporte:
    valor = mzv_eval(Composicion.desde_texto(args.composition), config.tolerancia)
    return Reporte({'composition': valor.composicion.texto(), **valor.a_dict()})


# =============================================================================
# GRT
# =============================================================================

def _candidato(args) -> GrtCandidate:
    if args.expr:
        return GrtCandidate.desde_elemento(lie_normal_form(leer_expresion(args.expr, AB)))
    if args.corrected:
        solucion = grt_solve(args.degree)
        if solucion.vacia:
            raise ZetagenusError(f"No hay corrección de psi_{args.degree} en [fr', fr']")
        return solucion.candidato()
    return ihara_psi(args.degree)


def grt_ihara(args, config: ConfiguracionComando) -> Reporte:
    psi = ihara_psi(args.degree)
    return Reporte({'degree': args.degree, 'psi': psi.texto(), 'coordinates': psi.psi.a_json(AB)})


def grt_check_cmd(args, config: ConfiguracionComando) -> Reporte:
    candidato = _candidato(args)
    reporte = grt_check(candidato, args.method, config.capacidad)
    return Reporte({'psi': candidato.texto(), **reporte.a_dict()}, pasa=reporte.pasa)


def grt_solve_cmd(args, config: ConfiguracionComando) -> Reporte:
    solucion = grt_solve(args.degree)
    return Reporte({**solucion.a_json(), 'empty': solucion.vacia})


def grt_bracket(args, config: ConfiguracionComando) -> Reporte:
    """<psi_n1, psi_n2> de candidatos corregidos y su comprobación."""
    candidatos = []
    for n in args.degrees:
        solucion = grt_solve(n)
        if solucion.vacia:
            raise ZetagenusError(f"No hay corrección de psi_{n} en [fr', fr']")
        candidatos.append(solucion.candidato())
    corchete = drinfeld_bracket(*candidatos)
    reporte = grt_check(corchete, args.method, config.capacidad)
    return Reporte({'degrees': list(args.degrees), 'bracket': corchete.texto(), **reporte.a_dict()},
                   pasa=reporte.pasa)


# =============================================================================
# BRAID
# =============================================================================

def braid_pbn_dim(args, config: ConfiguracionComando) -> Reporte:
    """Dimensiones de p_n por eliminación, contrastadas con el modelo casi directo."""
    filas = []
    for d in range(1, args.degree + 1):
        componente = pbn_component(args.strands, d, config.capacidad)
        filas.append({'degree': d, 'dimension': componente.dimension,
                      'almost_direct': dimension_casi_directa(args.strands, d)})
    tabla = pd.DataFrame(filas, columns=['degree', 'dimension', 'almost_direct'])
    coincide = bool((tabla['dimension'] == tabla['almost_direct']).all())
    return Reporte({'n': args.strands}, tabla, pasa=coincide)


def braid_cable(args, config: ConfiguracionComando) -> Reporte:
    particion = OrderedPartition(tuple(leer_enteros(args.partition)))
    if particion.r < 2:
        raise ZetagenusError("El cableado de un generador necesita al menos dos partes")
    x = lie_normal_form(leer_expresion(args.generator, alfabeto_pn(particion.r)))
    imagen = cabling_map(particion, x)
    return Reporte({'partition': particion.texto(), 'input': x.texto(alfabeto_pn(particion.r)),
                    'image': imagen.texto(alfabeto_pn(particion.total))})


def braid_sweep(args, config: ConfiguracionComando) -> Reporte:
    """Preservación de relaciones y coherencia para todas las particiones pequeñas."""
    relaciones = cabling_sweep(args.max_n, mostrar_progreso=args.progress)
    coherencia = coherence_sweep(args.coherence_max, mostrar_progreso=args.progress)
    pasa = bool(relaciones['residual_zero'].all()) and bool(coherencia['equal'].all())
    return Reporte({'max_n': args.max_n, 'relations_checked': len(relaciones),
                    'coherence_max_n': args.coherence_max, 'coherence_checked': len(coherencia),
                    'passes': pasa},
                   relaciones, pasa=pasa)


# =============================================================================
# PARSER
# =============================================================================

def _parser_comun() -> argparse.ArgumentParser:
    comun = argparse.ArgumentParser(add_help=False)
    comun.add_argument('--format', choices=FORMATOS, default='text', help='Formato de salida')
    comun.add_argument('--order', type=int, help='Orden de truncamiento (ZETAGENUS_ORDEN o 20)')
    comun.add_argument('--tol', type=float, help='Tolerancia numérica (1e-6)')
    comun.add_argument('--cap', type=int, help='Capacidad de eliminación (1600)')
    comun.add_argument('-v', '--verbose', action='count', default=0,
                       help='Más mensajes en stderr (-vv para depuración)')
    return comun


def construir_parser() -> argparse.ArgumentParser:
    comun = _parser_comun()
    parser = argparse.ArgumentParser(
        prog='zetagenus',
        description='Géneros, leyes de grupo formales, valores zeta múltiples y grt, en aritmética exacta',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Ejemplos:
  # Valores de Gamma en CP^n
  python -m zetagenus.main genus cp --name gamma --max-n 4 --format json

  # zeta(2,1), que vale zeta(3)
  python -m zetagenus.main qsym mzv 2,1 --tol 1e-6

  # grt en grado 3
  python -m zetagenus.main grt check --degree 3

  # Barrido de cableados
  python -m zetagenus.main braid sweep --max-n 6
        """
    )
    grupos = parser.add_subparsers(dest='grupo', help='Área', required=True)

    # === genus ===
    p_genus = grupos.add_parser('genus', help='Géneros de Hirzebruch')
    s_genus = p_genus.add_subparsers(dest='comando', required=True)
    p = s_genus.add_parser('cp', parents=[comun], help='Valores en CP^n')
    p.add_argument('--name', choices=GENEROS + ('l',), default='gamma', help='Género')
    p.add_argument('--max-n', type=int, default=8, help='n máximo')
    p.add_argument('--q-order', type=int, default=4, help='Truncamiento en q (Witten)')
    p.add_argument('--bernoulli', action='store_true', help='Añadir la forma con zetas pares reescritas')
    p.add_argument('--rescale', action='store_true', help='Evaluar Q(2 pi i x) en lugar de Q(x)')
    p.add_argument('--product', help="Valor en CP^n1 x CP^n2 x ..., p. ej. '1,1'")
    p.set_defaults(funcion=genus_cp)
    p = s_genus.add_parser('check-duplication', parents=[comun], help='Identidades de duplicación de Gamma')
    p.set_defaults(funcion=genus_check_duplication)
    p = s_genus.add_parser('witten', parents=[comun], help='g_k del género de Witten')
    p.add_argument('--q-order', type=int, default=8)
    p.add_argument('--x-order', type=int, default=9)
    p.set_defaults(funcion=genus_witten)

    # === fgl ===
    p_fgl = grupos.add_parser('fgl', help='Leyes de grupo formales')
    s_fgl = p_fgl.add_subparsers(dest='comando', required=True)
    p = s_fgl.add_parser('law', parents=[comun], help='Ley de tipo aditivo y sus axiomas (orden 8 por defecto)')
    p.add_argument('--name', choices=GENEROS + ('l',), default='gamma')
    p.set_defaults(funcion=fgl_law)
    p = s_fgl.add_parser('coproduct', parents=[comun], help='Coproducto de Landweber-Novikov')
    p.add_argument('--degree', type=int, default=3)
    p.set_defaults(funcion=fgl_coproduct)
    p = s_fgl.add_parser('thom-constraint', parents=[comun], help='Restricciones de la torsión de Thom')
    p.add_argument('--degree', type=int, default=15)
    p.set_defaults(funcion=fgl_thom_constraint)
    p = s_fgl.add_parser('hbar', parents=[comun], help='Serie hbar desde los valores CP')
    p.add_argument('--name', choices=GENEROS + ('l',), default='gamma')
    p.add_argument('--degree', type=int, default=6)
    p.add_argument('--q-order', type=int, default=4)
    p.set_defaults(funcion=fgl_hbar)
    p = s_fgl.add_parser('descent', parents=[comun], help='Bigrados invariantes del descenso')
    p.add_argument('--k-max', type=int, default=3)
    p.set_defaults(funcion=fgl_descent)

    # === symm ===
    p_symm = grupos.add_parser('symm', help='Funciones simétricas')
    s_symm = p_symm.add_subparsers(dest='comando', required=True)
    p = s_symm.add_parser('convert', parents=[comun], help='Cambio de base: p[2] --to E')
    p.add_argument('element', help="Elemento básico: 'e[2,1]', 'h[3]', 'p[2]'")
    p.add_argument('--to', choices=BASES, required=True)
    p.set_defaults(funcion=symm_convert)
    p = s_symm.add_parser('specialize', parents=[comun], help='Especialización: zeta, power:s, finite:m')
    p.add_argument('element')
    p.add_argument('--rule', default='zeta')
    p.set_defaults(funcion=symm_specialize)

    # === qsym ===
    p_qsym = grupos.add_parser('qsym', help='Cuasisimétricas y valores zeta múltiples')
    s_qsym = p_qsym.add_subparsers(dest='comando', required=True)
    p = s_qsym.add_parser('stuffle', parents=[comun], help='M_I * M_J')
    p.add_argument('left', help="Composición, p. ej. '2'")
    p.add_argument('right', help="Composición, p. ej. '3'")
    p.add_argument('-m', type=int, default=20, help='Variables del truncamiento de control')
    p.set_defaults(funcion=qsym_stuffle)
    p = s_qsym.add_parser('mzv', parents=[comun], help='Evaluación numérica de zeta(I)')
    p.add_argument('composition', help="Composición, p. ej. '2,1'")
    p.set_defaults(funcion=qsym_mzv)

    # === grt ===
    p_grt = grupos.add_parser('grt', help='Álgebra de Lie grt')
    s_grt = p_grt.add_subparsers(dest='comando', required=True)
    p = s_grt.add_parser('ihara', parents=[comun], help='Elemento de Ihara psi_n')
    p.add_argument('--degree', type=int, default=3)
    p.set_defaults(funcion=grt_ihara)
    p = s_grt.add_parser('check', parents=[comun], help='Cuatro relaciones de grt')
    p.add_argument('--degree', type=int, default=3)
    p.add_argument('--expr', help="Candidato como corchetes, p. ej. '[A,[A,B]]'")
    p.add_argument('--corrected', action='store_true', help='Usar psi_n corregido por grt solve')
    p.add_argument('--method', choices=('casi_directo', 'eliminacion'), default='casi_directo')
    p.set_defaults(funcion=grt_check_cmd)
    p = s_grt.add_parser('solve', parents=[comun], help="Correcciones de psi_n en [fr', fr']")
    p.add_argument('--degree', type=int, default=5)
    p.set_defaults(funcion=grt_solve_cmd)
    p = s_grt.add_parser('bracket', parents=[comun], help='Corchete de Drinfeld de dos psi corregidos')
    p.add_argument('--degrees', type=int, nargs=2, default=[3, 5])
    p.add_argument('--method', choices=('casi_directo', 'eliminacion'), default='casi_directo')
    p.set_defaults(funcion=grt_bracket)

    # === braid ===
    p_braid = grupos.add_parser('braid', help='Trenzas puras y cableado')
    s_braid = p_braid.add_subparsers(dest='comando', required=True)
    p = s_braid.add_parser('pbn-dim', parents=[comun], help='Dimensiones de p_n por grado')
    p.add_argument('--strands', type=int, default=4)
    p.add_argument('--degree', type=int, default=3)
    p.set_defaults(funcion=braid_pbn_dim)
    p = s_braid.add_parser('cable', parents=[comun], help='Imagen por el cableado c_I')
    p.add_argument('--partition', required=True, help="Partición ordenada, p. ej. '2,1'")
    p.add_argument('--generator', default='x_12', help="Elemento, p. ej. 'x_12' o '[x_12,x_13]'")
    p.set_defaults(funcion=braid_cable)
    p = s_braid.add_parser('sweep', parents=[comun], help='Barrido de relaciones y coherencia')
    p.add_argument('--max-n', type=int, default=6)
    p.add_argument('--coherence-max', type=int, default=5)
    p.add_argument('--progress', action='store_true', help='Barra de progreso en stderr')
    p.set_defaults(funcion=braid_sweep)

    return parser


def _configuracion(args) -> ConfiguracionComando:
    base = ConfiguracionComando.desde_entorno(f"{args.grupo} {args.comando}")
    return ConfiguracionComando(
        subcomando=base.subcomando,
        orden=args.order if args.order is not None else base.orden,
        formato=args.format,
        tolerancia=args.tol if args.tol is not None else base.tolerancia,
        capacidad=args.cap if args.cap is not None else base.capacidad,
    )


def run(argv: Optional[List[str]] = None) -> int:
    """Ejecuta un subcomando y devuelve el código de salida."""
    parser = construir_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    nivel = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=nivel, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        config = _configuracion(args)
        reporte = args.funcion(args, config)
    except VerificacionError as e:
        logger.error("Verificación fallida: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return 1
    except ZetagenusError as e:
        logger.debug("Entrada no válida", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.exception("Error interno en %s %s", args.grupo, args.comando)
        print(f"error interno: {e}", file=sys.stderr)
        return 2

    sys.stdout.write(emit(reporte, config.formato))
    if reporte.pasa is False:
        logger.warning("%s: la verificación falla", config.subcomando)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == '__main__':
    main()
