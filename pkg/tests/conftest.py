import os

from hypothesis import HealthCheck, settings, strategies as st

from surfcurves.surfaces import build_surface
from surfcurves.words import free_reduce

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

PANTS = build_surface("pants")
TORUS1 = build_surface("torus1")
ANNULUS = build_surface("annulus")
MOEBIUS = build_surface("moebius")
RP2 = build_surface("rp2")


def raw_words(gens="ab", max_size=8, min_size=0):
    letters = list(gens) + [g.upper() for g in gens]
    return st.lists(st.sampled_from(letters), min_size=min_size, max_size=max_size).map("".join)


def reduced_words(gens="ab", max_size=8):
    return raw_words(gens, max_size).map(free_reduce)


def nontrivial_words(gens="ab", max_size=8):
    return reduced_words(gens, max_size).filter(bool)
