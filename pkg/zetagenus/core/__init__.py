"""
Módulo core de zetagenus.

Contiene el núcleo algebraico exacto y las operaciones de cada área:
géneros, leyes de grupo formales, funciones simétricas y cuasisimétricas,
álgebras de Lie libres, trenzas puras, grt y cableado.
"""

from .errores import (
    ZetagenusError,
    VariableIncompatibleError,
    SerieNoInvertibleError,
    TruncamientoError,
    CapacidadExcedidaError,
    DivergenciaError,
    PrecisionInsuficienteError,
    ConfiguracionError,
    GeneroDesconocidoError,
    VerificacionError,
)
from .configuracion import ConfiguracionComando
from .polinomios import SymbolPoly, simbolo
from .series import (
    Series,
    SerieMultivariada,
    series_arith,
    series_exp,
    series_log,
    series_sqrt,
    series_compose,
    series_revert,
)
from .simetricas import (
    Particion,
    SymmElement,
    ReglaEspecializacion,
    newton_convert,
    generating_series,
    specialize,
    exp_infinity,
)
from .leyes import (
    FormalDiffeo,
    FGL,
    ThomTwist,
    DescentGenerator,
    fgl_from_log,
    check_fgl_axioms,
    ln_coproduct,
    verificar_coproducto,
    grading_action,
    diffeo_compose,
    diffeo_invert,
    thom_twist_constraint,
    hbar_series,
    generadores_descenso,
    gm_invariant_bidegrees,
)
from .generos import (
    Genus,
    GenusValues,
    BernoulliTable,
    make_genus,
    cp_values,
    log_series,
    bernoulli_rewrite,
    duplication_check,
    witten_g_series,
)
from .cuasisimetricas import (
    Composicion,
    QSymmElement,
    WittField,
    stuffle_product,
    symm_to_qsymm,
    mzv_eval,
    finite_truncation,
    lie_to_witt,
)
from .lie import Alfabeto, ElementoLie, ExpresionLie, PolinomioNC, lyndon_basis, lie_normal_form
from .trenzas import PBnComponent, ElementoPn, pbn_component
from .grt import GrtCandidate, ihara_psi, grt_check, grt_solve, drinfeld_bracket
from .operad import (
    OrderedPartition,
    juxtapose,
    cabling_map,
    cabling_respects_relations,
    cabling_coherence,
    cabling_sweep,
)
from .io import Reporte, emit

__all__ = [
    'ZetagenusError', 'VariableIncompatibleError', 'SerieNoInvertibleError',
    'TruncamientoError', 'CapacidadExcedidaError', 'DivergenciaError',
    'PrecisionInsuficienteError', 'ConfiguracionError', 'GeneroDesconocidoError',
    'VerificacionError', 'ConfiguracionComando',
    'SymbolPoly', 'simbolo', 'Series', 'SerieMultivariada',
    'series_arith', 'series_exp', 'series_log', 'series_sqrt', 'series_compose', 'series_revert',
    'Particion', 'SymmElement', 'ReglaEspecializacion',
    'newton_convert', 'generating_series', 'specialize', 'exp_infinity',
    'FormalDiffeo', 'FGL', 'ThomTwist', 'DescentGenerator',
    'fgl_from_log', 'check_fgl_axioms', 'ln_coproduct', 'verificar_coproducto',
    'grading_action', 'diffeo_compose', 'diffeo_invert', 'thom_twist_constraint',
    'hbar_series', 'generadores_descenso', 'gm_invariant_bidegrees',
    'Genus', 'GenusValues', 'BernoulliTable', 'make_genus', 'cp_values', 'log_series',
    'bernoulli_rewrite', 'duplication_check', 'witten_g_series',
    'Composicion', 'QSymmElement', 'WittField', 'stuffle_product', 'symm_to_qsymm',
    'mzv_eval', 'finite_truncation', 'lie_to_witt',
    'Alfabeto', 'ElementoLie', 'ExpresionLie', 'PolinomioNC', 'lyndon_basis', 'lie_normal_form',
    'PBnComponent', 'ElementoPn', 'pbn_component',
    'GrtCandidate', 'ihara_psi', 'grt_check', 'grt_solve', 'drinfeld_bracket',
    'OrderedPartition', 'juxtapose', 'cabling_map', 'cabling_respects_relations',
    'cabling_coherence', 'cabling_sweep',
    'Reporte', 'emit',
]
