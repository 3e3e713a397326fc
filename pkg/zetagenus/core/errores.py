"""
Excepciones de zetagenus.

Todas derivan de ValueError para que el código que ya atrapa ValueError
siga funcionando; la CLI las traduce a código de salida 2.
"""


class ZetagenusError(ValueError):
    """Error base de entrada o dominio."""


class VariableIncompatibleError(ZetagenusError):
    """Operación entre series en variables distintas."""


class SerieNoInvertibleError(ZetagenusError):
    """Término constante (o lineal, para reversión) no invertible o inválido."""


class TruncamientoError(ZetagenusError):
    """Se pidió un coeficiente más allá del orden de truncamiento."""


class CapacidadExcedidaError(ZetagenusError):
    """Un sistema lineal o una base supera el límite configurado."""


class DivergenciaError(ZetagenusError):
    """Composición no admisible: la serie múltiple de zeta diverge."""


class PrecisionInsuficienteError(ZetagenusError):
    """La cota de error numérica no alcanza la tolerancia pedida."""


class ConfiguracionError(ZetagenusError):
    """Parámetros de configuración inválidos."""


class GeneroDesconocidoError(ZetagenusError):
    """Nombre de género no reconocido."""


class VerificacionError(AssertionError):
    """Dos rutas de cálculo independientes no coinciden."""
