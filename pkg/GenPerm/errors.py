"""
GenPerm.errors

Jerarquía de excepciones del paquete. Todas heredan de GenPermError (que a su
vez es un ValueError) para que el CLI pueda mapearlas a código de salida 2.
InvariantViolation es la excepción: señala un bug interno y sale con 3.
"""


class GenPermError(ValueError):
    """Error de entrada o de precondición detectado por la biblioteca."""


# --- core ---

class GroundSetOutOfRange(GenPermError):
    pass


class MismatchedGroundSet(GenPermError):
    pass


class ElementOutOfRange(GenPermError):
    pass


class ModularInput(GenPermError):
    """La función es modular: no tiene representante estándar ni forma primitiva."""


class NotSupermodular(GenPermError):
    pass


class NotStandard(GenPermError):
    """Se esperaba f = 0 en todos los conjuntos de tamaño <= 1."""


class UnsortedInput(GenPermError):
    pass


# --- transform ---

class NotAPermutation(GenPermError):
    pass


class NotInImage(GenPermError):
    """El vector no está en la imagen de T; lleva la violación encontrada."""

    def __init__(self, message, violation=None):
        super().__init__(message)
        self.violation = violation


# --- cone ---

class NotPointed(GenPermError):
    pass


class DimensionMismatch(GenPermError):
    pass


class Infeasible(GenPermError):
    pass


# --- balanced ---

class ZeroVector(GenPermError):
    pass


class Unbalanced(GenPermError):
    pass


class SingularSystem(GenPermError):
    pass


class NegativeEntry(GenPermError):
    pass


# --- monotone ---

class NotNondecreasing(GenPermError):
    pass


class EmptyAntichain(GenPermError):
    pass


class NotAntichain(GenPermError):
    pass


# --- matroid ---

class HasLoop(GenPermError):
    pass


class NotSimple(GenPermError):
    pass


class NotZeroOne(GenPermError):
    pass


class InvalidMatroid(GenPermError):
    pass


# --- twolayer ---

class ParamOutOfRange(GenPermError):
    pass


class InadmissibleSubset(GenPermError):
    pass


# --- formatos ---

class FormatError(GenPermError):
    pass


class UsageError(GenPermError):
    """Combinación de opciones del CLI inválida o faltante."""


class InvariantViolation(RuntimeError):
    """Una verificación interna falló: el resultado no es confiable."""
