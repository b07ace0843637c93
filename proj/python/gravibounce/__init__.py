"""Quantum bouncer eigenstates and spontaneous graviton emission rates."""

from ._gravibounce import *  # noqa: F401,F403
from ._gravibounce import __doc__  # noqa: F401
