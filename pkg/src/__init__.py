"""
hocolim-bar
Colimites homotopicos y aproximaciones cofibrantes bar de diagramas finitos de conjuntos simpliciales.
"""

__version__ = "1.0.0"
