"""Fully packed loops in a triangle, the TL(1) ground state and its operator algebra."""
from .combinat import Diagram, LinkPattern, enumerate_basis

__version__ = "0.1.0"
__all__ = ["Diagram", "LinkPattern", "enumerate_basis", "__version__"]
