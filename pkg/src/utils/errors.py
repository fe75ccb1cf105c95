"""
Jerarquia de excepciones del proyecto.

Dos familias: errores de entrada (datos invalidos, exit code 2 en la CLI) y
errores de limite (cap de dimension o presupuesto de busqueda, exit code 3).
Los mensajes siempre nombran el testigo concreto (objeto, morfismo, simplice).
"""


class HocolimError(Exception):
    """Base de todas las excepciones del proyecto."""


class InputError(HocolimError, ValueError):
    """Datos de entrada invalidos."""


class LimitError(HocolimError):
    """Se alcanzo un limite configurado (dimension o presupuesto)."""


# --- Categorias finitas ---

class MissingComposite(InputError):
    pass


class NonAssociative(InputError):
    pass


class BadIdentity(InputError):
    pass


class BadIdentifier(InputError):
    pass


class UnknownObject(InputError):
    pass


class InvalidFunctor(InputError):
    pass


class InvalidNatTrans(InputError):
    pass


# --- Conjuntos simpliciales ---

class InvalidSimplicialSet(InputError):
    pass


class InvalidMap(InputError):
    pass


class SourceTargetMismatch(InputError):
    pass


class NotCoequalizing(InputError):
    """Un mapa no iguala el par paralelo por el que se quiere factorizar."""


# --- Diagramas y tensores ---

class InvalidDiagram(InputError):
    pass


class IndexMismatch(InputError):
    pass


# --- Archivos ---

class ParseError(InputError):
    """Error de parseo; el mensaje incluye campo o linea."""


# --- Limites ---

class CapExceeded(LimitError):
    """La construccion necesita simplices por encima de dim_cap."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class TruncationRequired(LimitError):
    """Nervio de una categoria con ciclos sin cap explicito."""


class SearchBudgetExceeded(LimitError):
    """La busqueda agoto su presupuesto: el resultado es 'desconocido'."""
