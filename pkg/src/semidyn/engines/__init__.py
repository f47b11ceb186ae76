from .baseline import DequeEngine, HeapEngine
from .core import (ENGINE_KINDS, MinimizerEngine, Op, OracleEngine, make_engine, oracle_minimizer,
                   replay)
from .two_layer import BlockScheme, TwoLayerEngine
from .two_stack import TwoStackEngine

__all__ = [
    "ENGINE_KINDS", "BlockScheme", "DequeEngine", "HeapEngine", "MinimizerEngine", "Op",
    "OracleEngine", "TwoLayerEngine", "TwoStackEngine", "make_engine", "oracle_minimizer", "replay",
]
