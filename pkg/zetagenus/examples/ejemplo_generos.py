"""
Ejemplo 1: Géneros de Hirzebruch.

Este ejemplo muestra cómo:
1. Construir el género Gamma y sus valores en CP^n
2. Reescribir las zetas pares con números de Bernoulli
3. Comprobar la duplicación de Euler y la forma partida
4. Obtener los coeficientes g_k del género de Witten
"""

import sys
sys.path.insert(0, '..')  # Para ejecutar desde /examples

from zetagenus.core import (
    cp_values,
    duplication_check,
    log_series,
    make_genus,
    witten_g_series,
)


def ejemplo_valores_gamma():
    """Valores del género Gamma en los espacios proyectivos."""

    # === Configuración ===
    orden = 10
    n_max = 5

    genero = make_genus('gamma', orden)
    print(f"Q(z) = {genero.Q.truncar(4).texto()} + ...")

    valores = cp_values(genero, n_max)
    print("\nValores en CP^n (zetas pares también como Bernoulli):")
    print(valores.a_tabla(bernoulli=True).to_string(index=False))

    logaritmo = log_series(genero)
    print(f"\nlog del género: {logaritmo.truncar(4).texto()} + ...")
    return valores


def ejemplo_duplicacion():
    """Las tres comprobaciones de la duplicación, exactas hasta el orden dado."""
    reporte = duplication_check(12)
    for clave, valor in reporte.a_dict().items():
        print(f"  {clave:>14}: {valor}")
    return reporte


def ejemplo_witten():
    """g_k del logaritmo de Witten; los impares se anulan."""
    witten = witten_g_series(orden_q=4, orden_x=8)
    print(witten.a_tabla().to_string(index=False))
    return witten


if __name__ == '__main__':
    print("=" * 60)
    print("EJEMPLO 1: Género Gamma")
    print("=" * 60)
    ejemplo_valores_gamma()

    print("\n" + "=" * 60)
    print("EJEMPLO 2: Duplicación de Euler")
    print("=" * 60)
    ejemplo_duplicacion()

    print("\n" + "=" * 60)
    print("EJEMPLO 3: Género de Witten")
    print("=" * 60)
    ejemplo_witten()
