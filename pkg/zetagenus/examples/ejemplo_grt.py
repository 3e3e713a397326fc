"""
Ejemplo 3: Trenzas puras, cableado y grt.

Este ejemplo muestra cómo:
1. Calcular dimensiones de p_n por grado
2. Cablear un generador
3. Comprobar psi_3 y corregir psi_5 dentro de grt
4. Formar el corchete de Drinfeld
"""

import sys
sys.path.insert(0, '..')

from zetagenus.core import (
    OrderedPartition,
    cabling_map,
    drinfeld_bracket,
    grt_check,
    grt_solve,
    ihara_psi,
    pbn_component,
)
from zetagenus.core.trenzas import alfabeto_pn, generador_pn


def ejemplo_trenzas():
    for n in (3, 4):
        dimensiones = [pbn_component(n, d).dimension for d in range(1, 4)]
        print(f"  p_{n}: {dimensiones}")

    particion = OrderedPartition((2, 1))
    imagen = cabling_map(particion, generador_pn(2, 1, 2))
    print(f"\nc_{particion.texto()}(x_12) = {imagen.texto(alfabeto_pn(3))}")


def ejemplo_grt():
    psi3 = ihara_psi(3)
    print(f"psi_3 = {psi3.texto()}")
    print(grt_check(psi3).a_dict())

    solucion = grt_solve(5)
    print(f"\nCorrecciones de psi_5: dimensión del núcleo {len(solucion.nucleo())}")
    psi5 = solucion.candidato()
    print(f"psi_5 corregido pasa: {grt_check(psi5).pasa}")

    # La comprobación en grado 8 tarda; se deja para verificar_suites.py
    corchete = drinfeld_bracket(psi3, psi5)
    print(f"\n<psi_3, psi_5> tiene {len(corchete.psi.coordenadas)} coordenadas de Lyndon")
    return corchete


if __name__ == '__main__':
    print("=" * 60)
    print("EJEMPLO 1: Trenzas puras")
    print("=" * 60)
    ejemplo_trenzas()

    print("\n" + "=" * 60)
    print("EJEMPLO 2: grt")
    print("=" * 60)
    ejemplo_grt()
