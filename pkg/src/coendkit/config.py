"""Process-wide switches."""
import os

#: When true, constructions re-check A-linearity, hexagons and module axioms
#: on the objects they build (sampling-based; slower).
DEBUG_REVALIDATE = bool(os.environ.get("COENDKIT_DEBUG"))


def set_debug(flag: bool):
    global DEBUG_REVALIDATE
    DEBUG_REVALIDATE = bool(flag)
