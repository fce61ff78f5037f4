from .laurent import Laurent
from .seeds import Atlas, AtlasEdge, Seed, atlas, exchange_terms, initial_seed, mutate_seed, rebase

__all__ = [
    "Laurent",
    "Atlas",
    "AtlasEdge",
    "Seed",
    "atlas",
    "exchange_terms",
    "initial_seed",
    "mutate_seed",
    "rebase",
]
