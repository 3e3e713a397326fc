"""
Ejemplo 2: Leyes de grupo formales y difeomorfismos formales.

Este ejemplo muestra cómo:
1. Construir la ley F = t^-1(t(X) + t(Y)) desde el logaritmo de un género
2. Verificar sus axiomas
3. Escribir el coproducto de Landweber-Novikov
4. Ver que la torsión de Thom solo anula las sigma impares
"""

import sys
sys.path.insert(0, '..')

from zetagenus.core import (
    ThomTwist,
    check_fgl_axioms,
    cp_values,
    fgl_from_log,
    hbar_series,
    ln_coproduct,
    log_series,
    make_genus,
    thom_twist_constraint,
)
from zetagenus.core.leyes import simbolos_anulados


def ejemplo_ley_de_todd():
    genero = make_genus('todd', 6)
    ley = fgl_from_log(log_series(genero))
    print(ley.a_tabla().to_string(index=False))

    axiomas = check_fgl_axioms(ley)
    print(f"\nAxiomas: {'OK' if axiomas.pasa else 'FALLAN'}")

    # hbar reconstruye el logaritmo a partir de los valores en CP^n
    hbar = hbar_series(cp_values(genero, 4), 5)
    print(f"hbar = {hbar.texto()}")
    return ley


def ejemplo_coproducto():
    delta = ln_coproduct(3)
    print(delta.a_tabla().to_string(index=False))
    return delta


def ejemplo_thom():
    restricciones = thom_twist_constraint(ThomTwist.generico(9))
    for r in restricciones:
        print(f"  {r.texto()} = 0")
    print(f"Anuladas: {', '.join(simbolos_anulados(restricciones))}")
    return restricciones


if __name__ == '__main__':
    print("=" * 60)
    print("EJEMPLO 1: Ley de Todd")
    print("=" * 60)
    ejemplo_ley_de_todd()

    print("\n" + "=" * 60)
    print("EJEMPLO 2: Coproducto de Landweber-Novikov")
    print("=" * 60)
    ejemplo_coproducto()

    print("\n" + "=" * 60)
    print("EJEMPLO 3: Torsión de Thom")
    print("=" * 60)
    ejemplo_thom()
