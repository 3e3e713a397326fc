"""
zetagenus - Banco de trabajo algebraico exacto para géneros, leyes de
grupo formales, valores zeta múltiples y grt.

Módulos:
    core: Núcleo exacto y operaciones
    main: Línea de comandos
    examples: Ejemplos de uso

Uso básico:
    from zetagenus.core import make_genus, cp_values, duplication_check

    valores = cp_values(make_genus('gamma'), 4)
    print(valores[1])                 # -2*gamma
    print(duplication_check(20).pasa)
"""

__version__ = '0.1.0'
