"""Single-qubit Markovian generator simulation kernel."""

try:
    from ._qlsim import *  # noqa: F401,F403
except ImportError:  # build-tree layout: extension lives next to the package
    from _qlsim import *  # noqa: F401,F403
