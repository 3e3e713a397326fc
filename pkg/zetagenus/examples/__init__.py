"""Ejemplos de uso de zetagenus."""
