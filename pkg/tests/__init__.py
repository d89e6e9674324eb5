"""Paquete de pruebas."""
