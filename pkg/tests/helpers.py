from functools import lru_cache

from stringtoric.rootdata import build_root_system
from stringtoric.stringdata import string_cone


@lru_cache(maxsize=None)
def cone_for(system: str, word: tuple):
    """Builtin cone where one exists, otherwise a certified empirical one."""
    return string_cone(build_root_system(system), word, "auto")


@lru_cache(maxsize=None)
def words_of(system: str) -> tuple:
    return tuple(sorted(build_root_system(system).all_reduced_words()))
