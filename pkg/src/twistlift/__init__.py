"""Twisted traces, theta lifts, modular integrals and Borcherds products
for the modular group."""

__version__ = "0.1.0"
