from .check import check
from .corpus import corpus
from .expdioph import expdioph
from .frey import frey
from .sunit import sunit

__all__ = ["check", "corpus", "expdioph", "frey", "sunit"]
