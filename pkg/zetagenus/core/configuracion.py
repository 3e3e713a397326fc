"""
Configuración de una ejecución de zetagenus.
"""

import os
from dataclasses import dataclass
from typing import Optional

from .errores import ConfiguracionError

VARIABLE_ORDEN = 'ZETAGENUS_ORDEN'
FORMATOS = ('text', 'json', 'csv')

ORDEN_DEFECTO = 20
TOLERANCIA_DEFECTO = 1e-6
CAPACIDAD_DEFECTO = 1600
PESO_MAXIMO_DEFECTO = 12


@dataclass
class ConfiguracionComando:
    """
    Configuración de un subcomando.

    Atributos:
        subcomando: Nombre completo, p. ej. 'genus cp'
        orden: Orden de truncamiento de las series
        formato: 'text', 'json' o 'csv'
        tolerancia: Tolerancia para evaluaciones numéricas
        capacidad: Máximo de coordenadas de Lie por sistema de eliminación
        peso_maximo: Peso máximo para funciones simétricas
    """
    subcomando: str = ''
    orden: int = ORDEN_DEFECTO
    formato: str = 'text'
    tolerancia: float = TOLERANCIA_DEFECTO
    capacidad: int = CAPACIDAD_DEFECTO
    peso_maximo: int = PESO_MAXIMO_DEFECTO

    def __post_init__(self):
        if self.orden <= 0:
            raise ConfiguracionError(f"El orden debe ser positivo: {self.orden}")
        if not self.tolerancia > 0:
            raise ConfiguracionError(f"La tolerancia debe ser positiva: {self.tolerancia}")
        if self.capacidad <= 0:
            raise ConfiguracionError(f"La capacidad debe ser positiva: {self.capacidad}")
        if self.peso_maximo <= 0:
            raise ConfiguracionError(f"El peso máximo debe ser positivo: {self.peso_maximo}")
        if self.formato not in FORMATOS:
            raise ConfiguracionError(f"Formato desconocido: {self.formato}")

    @classmethod
    def desde_entorno(cls, subcomando: str = '', entorno: Optional[dict] = None):
        """Crea configuración tomando el orden por defecto de ZETAGENUS_ORDEN."""
        entorno = os.environ if entorno is None else entorno
        crudo = entorno.get(VARIABLE_ORDEN)
        if crudo is None or crudo == '':
            return cls(subcomando=subcomando)
        try:
            orden = int(crudo)
        except ValueError:
            raise ConfiguracionError(f"{VARIABLE_ORDEN} no es un entero: {crudo!r}")
        return cls(subcomando=subcomando, orden=orden)
