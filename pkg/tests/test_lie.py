import pytest

from zetagenus.core.errores import ZetagenusError
from zetagenus.core.lie import (
    Alfabeto,
    ElementoLie,
    ExpresionLie,
    PolinomioNC,
    es_lyndon,
    extraer_lyndon,
    leer_expresion,
    lie_normal_form,
    lyndon_basis,
    sustituir,
    witt_dimension,
)

A = ElementoLie.generador(0)
B = ElementoLie.generador(1)


def _aleatorio(rng, grado, ab):
    base = lyndon_basis(ab, grado)
    return ElementoLie({w: int(rng.integers(-3, 4)) for w in base})


def test_palabras_de_lyndon():
    assert es_lyndon((0, 1))
    assert es_lyndon((0, 0, 1))
    assert not es_lyndon((1, 0))
    assert not es_lyndon((0, 1, 0, 1))


@pytest.mark.parametrize('grado', range(1, 9))
def test_dimension_de_witt(ab, grado):
    assert len(lyndon_basis(ab, grado)) == witt_dimension(2, grado)


def test_dimension_en_grado_cinco(ab):
    assert witt_dimension(2, 5) == 6
    assert witt_dimension(3, 4) == 18


def test_alfabeto_graduado():
    alfabeto = Alfabeto.graduado(3)
    assert alfabeto.nombres == ('Z_1', 'Z_2', 'Z_3')
    assert alfabeto.grado((0, 2)) == 4
    assert lyndon_basis(alfabeto, 3) == [(0, 1), (2,)]
    with pytest.raises(ZetagenusError):
        Alfabeto(('A', 'A'))


def test_antisimetria_y_texto(ab):
    assert not A.corchete(A)
    assert B.corchete(A) == -A.corchete(B)
    assert A.corchete(B).texto(ab) == '[A,B]'
    assert B.corchete(A).texto(ab) == '-[A,B]'
    assert A.corchete(B).a_json(ab) == [{'word': 'AB', 'coeff': '1/1'}]


def test_jacobi(rng, ab):
    for _ in range(5):
        x, y, z = (_aleatorio(rng, g, ab) for g in (1, 2, 3))
        total = (x.corchete(y.corchete(z)) + y.corchete(z.corchete(x))
                 + z.corchete(x.corchete(y)))
        assert not total


def test_corchete_coincide_con_conmutador(rng, ab):
    for _ in range(5):
        x, y = _aleatorio(rng, 2, ab), _aleatorio(rng, 3, ab)
        assert x.corchete(y).expandir() == x.expandir() * y.expandir() - y.expandir() * x.expandir()


def test_extraer_lyndon_invierte_expansion(rng, ab):
    x = _aleatorio(rng, 5, ab)
    assert extraer_lyndon(x.expandir()) == x


def test_extraer_lyndon_rechaza_no_lie():
    with pytest.raises(ZetagenusError):
        extraer_lyndon(PolinomioNC.palabra((0, 0)))


def test_coordenadas_solo_en_lyndon():
    with pytest.raises(ZetagenusError):
        ElementoLie({(1, 0): 1})


def test_forma_normal_por_dos_rutas(ab):
    expresion = leer_expresion('[A,[B,[A,B]]]', ab) + leer_expresion('[[A,B],[A,[A,B]]]', ab)
    x = lie_normal_form(expresion, 'ambos')
    assert x == A.corchete(B.corchete(A.corchete(B))) + A.corchete(B).corchete(A.corchete(A.corchete(B)))


def test_forma_normal_de_arbol_suelto():
    assert lie_normal_form((1, 0)) == -A.corchete(B)
    assert lie_normal_form(ExpresionLie.generador(0) * 0) == ElementoLie()
    with pytest.raises(ZetagenusError):
        lie_normal_form((0, 1), 'otro')


def test_lectura_mal_formada(ab):
    for texto in ['[A,B', '[A,C]', 'A]', '[A B]', '']:
        with pytest.raises(ZetagenusError):
            leer_expresion(texto, ab)


def test_sustitucion_intercambia_letras():
    x = A.corchete(A.corchete(B))
    assert sustituir(x, {0: B, 1: A}) == B.corchete(B.corchete(A))
    assert sustituir(A.corchete(B), {0: B, 1: A}) == -A.corchete(B)
    with pytest.raises(ZetagenusError):
        sustituir(A.corchete(B), {0: B})
