import pytest

from zetagenus.core.configuracion import ORDEN_DEFECTO, ConfiguracionComando
from zetagenus.core.errores import ConfiguracionError


def test_valores_por_defecto():
    config = ConfiguracionComando()
    assert config.orden == ORDEN_DEFECTO == 20
    assert config.formato == 'text'
    assert config.tolerancia == 1e-6


def test_orden_desde_entorno():
    assert ConfiguracionComando.desde_entorno('genus cp', {'ZETAGENUS_ORDEN': '12'}).orden == 12
    assert ConfiguracionComando.desde_entorno('genus cp', {'ZETAGENUS_ORDEN': ''}).orden == 20
    assert ConfiguracionComando.desde_entorno(entorno={}).subcomando == ''


def test_orden_de_entorno_invalido():
    with pytest.raises(ConfiguracionError):
        ConfiguracionComando.desde_entorno(entorno={'ZETAGENUS_ORDEN': 'x'})
    with pytest.raises(ConfiguracionError):
        ConfiguracionComando.desde_entorno(entorno={'ZETAGENUS_ORDEN': '-1'})


@pytest.mark.parametrize('campos', [
    {'orden': 0}, {'tolerancia': 0.0}, {'capacidad': -5}, {'peso_maximo': 0}, {'formato': 'xml'},
])
def test_validacion(campos):
    with pytest.raises(ConfiguracionError):
        ConfiguracionComando(**campos)
