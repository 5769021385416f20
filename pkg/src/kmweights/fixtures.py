"""Named generalized Cartan matrices used by the CLI and the test-suite."""

from .cartan import GCM, validate_gcm

NAMED = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    "B2": [[2, -2], [-1, 2]],
    "C2": [[2, -1], [-2, 2]],
    "G2": [[2, -1], [-3, 2]],
    "A1xA1": [[2, 0], [0, 2]],
    "affineA1": [[2, -2], [-2, 2]],
    "affineA2": [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
    "hyperbolic3": [[2, -3], [-3, 2]],
}


def named(name: str) -> GCM:
    try:
        matrix = NAMED[name]
    except KeyError:
        raise KeyError(
            f"unknown fixture {name!r}; choose from {', '.join(NAMED)}") from None
    return validate_gcm(matrix, name)
