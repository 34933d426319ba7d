"""Decision procedures for transducer-described code properties with margins."""

from .automata import (EPS, Nfa, accepts, complement, determinize, enumerate_words,
                       from_words, intersect, is_empty, is_finite_language, is_universal,
                       shortest_word, trim, union)
from .errors import (AlphabetMismatch, CapExceeded, FormatError, NotFinite,
                     NotRightInfinite, NotSatisfying, PromiseViolated)
from .properties import (CLASSIC, FIN, FiniteViolation, InfiniteViolation, Margin,
                         PropertySpec, Verdict, check_j_independence, extend_fin,
                         is_maximal_classic, oracle_satisfies, satisfies, satisfies_fin)
from .transducer import (BUILTINS, PumpFamily, SearchConfig, Transducer, builtin,
                         is_k_valued, inverse)

__version__ = "0.1.0"
