"""Módulos de monitoreo."""
