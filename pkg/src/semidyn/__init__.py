"""Semi-dynamic minimizer data structures."""

from .engines import (ENGINE_KINDS, BlockScheme, DequeEngine, HeapEngine, MinimizerEngine, Op,
                      OracleEngine, TwoLayerEngine, TwoStackEngine, make_engine, oracle_minimizer,
                      replay)
from .errors import EmptyStringError, ReplayError, UnsupportedOperationError
from .rolling_hash import HashConfig, OrderMode, krf_direct, roll_left, roll_right
from .sdstring import FragmentPair, SemiDynamicString, SourceWindow

__version__ = "0.1.0"
from .scan import MinimizerSet, minimizer_set, minimizer_set_space_efficient
from .trie import Trie, build_trie, oracle_trie_minimizers, trie_path_minimizers
