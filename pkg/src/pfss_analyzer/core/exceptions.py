#!/usr/bin/env python3
"""
Custom Exception Classes
Defines specific exceptions for the PFSS analyzer.
"""


class PfssError(Exception):
    """Base exception for all analyzer errors"""
    pass


# Finite field arithmetic

class FieldError(PfssError):
    """Raised for finite field and polynomial failures"""
    pass


class DivisionByZero(FieldError):
    """Raised when dividing by or inverting the zero element"""
    pass


class FieldMismatch(FieldError):
    """Raised when two elements live in fields with no common tower"""
    pass


class ZeroElement(FieldError):
    """Raised when an operation needs a nonzero element"""
    pass


class ZeroPolynomial(FieldError):
    """Raised when an operation needs a nonzero polynomial"""
    pass


class NotIrreducible(FieldError):
    """Raised when an extension modulus is not monic irreducible"""
    pass


class ExtensionBoundExceeded(FieldError):
    """Raised when a root search needs a larger extension than allowed"""
    pass


# Linear algebra

class LinalgError(PfssError):
    """Raised for matrix failures"""
    pass


class SingularMatrix(LinalgError):
    """Raised when an invertible matrix is required"""
    pass


class DimensionMismatch(LinalgError):
    """Raised when matrix or vector shapes are incompatible"""
    pass


# System dynamics

class DynamicsError(PfssError):
    """Raised for failures in LFSS/PFSS analysis"""
    pass


class SingularPolynomial(DynamicsError):
    """Raised when a period is requested for a polynomial with f(0) = 0"""
    pass


class BadRange(DynamicsError):
    """Raised when a transition interval is not k1 >= k0 >= 0"""
    pass


class StepCapExceeded(DynamicsError):
    """Raised when a simulation does not close within the step cap"""
    pass


class StateSpaceTooLarge(DynamicsError):
    """Raised when an exhaustive enumeration would exceed the state cap"""
    pass


class SingularSystem(DynamicsError):
    """Raised when a non-singular system is required"""
    pass


class MissingFloquet(DynamicsError):
    """Raised when Floquet data is required but absent"""
    pass


class RootMismatch(DynamicsError):
    """Raised when a candidate root does not satisfy root^N = monodromy"""
    pass


class NotAnExtension(DynamicsError):
    """Raised when a target field does not extend the system field"""
    pass


class VerificationFailed(DynamicsError):
    """Raised when a constructed answer disagrees with the oracle"""
    pass


class NotPeriodic(DynamicsError):
    """Raised when a master register state is not on a cycle"""
    pass


class WiringError(DynamicsError):
    """Raised when a shift register wiring is out of range"""
    pass


# Input and configuration

class InputError(PfssError):
    """Raised when user input is invalid"""
    pass


class ParseError(InputError):
    """Raised when a JSON input cannot be parsed"""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.line = line
        self.column = column


class ConfigurationError(PfssError):
    """Raised when configuration is invalid or missing"""
    pass
