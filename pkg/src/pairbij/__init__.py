"""Two infinite families of pairing bijections N^2 <-> N, with the encoder
framework that feeds them and derived permutations of N.

The base-b valuation family lives in pairbij.nadic, the characteristic-function
family in pairbij.charpair, the invertible data-shape encoders in
pairbij.encoders, and the restartable stream substrate in pairbij.streams.
"""

from . import charpair, encoders, errors, nadic, streams
from .charpair import (
    PairingFamily,
    SeedSpec,
    bmerge,
    bsplit,
    cantor_pair,
    cantor_unpair,
    generic_pair,
    generic_unpair,
    nsyr,
    preset_family,
    seed_from_file,
    syracuse,
    twist_family,
)
from .encoders import BINS, LIST, MSET, NAT, NAT_PRIME, SET, Encoder, Iso, as_, nadic_nat
from .streams import DEFAULT_FUEL, Fuel, Stream

__version__ = "0.1.0"

__all__ = [
    "BINS",
    "DEFAULT_FUEL",
    "Encoder",
    "Fuel",
    "Iso",
    "LIST",
    "MSET",
    "NAT",
    "NAT_PRIME",
    "PairingFamily",
    "SET",
    "SeedSpec",
    "Stream",
    "as_",
    "bmerge",
    "bsplit",
    "cantor_pair",
    "cantor_unpair",
    "charpair",
    "encoders",
    "errors",
    "generic_pair",
    "generic_unpair",
    "nadic",
    "nadic_nat",
    "nsyr",
    "preset_family",
    "seed_from_file",
    "streams",
    "syracuse",
    "twist_family",
]
