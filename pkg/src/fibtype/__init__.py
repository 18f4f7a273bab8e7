"""Groups of Fibonacci type G_n(m, k) = <x_0..x_{n-1} | x_i x_{i+m} x_{i+k}^-1>."""
from .params import FibParams, OrbitKey, ParameterError, canonicalize, derive
from .words import CyclicPresentation, Letter, Word, fib_word

__all__ = [
    "CyclicPresentation", "FibParams", "Letter", "OrbitKey", "ParameterError",
    "Word", "canonicalize", "derive", "fib_word",
]
__version__ = "0.1.0"
