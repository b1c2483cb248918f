"""Exact tooling for the sum-distance network creation game."""

try:
    from ._ncg import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _ncg import *  # noqa: F401,F403  (in-tree build: module on sys.path)

__all__ = [
    "Profile",
    "parse_profile",
    "write_profile",
    "social_cost",
    "player_cost",
    "optimum_cost",
    "is_nash",
    "best_response",
    "enumerate_ne",
    "run_audit",
    "best_response_dynamics",
]
